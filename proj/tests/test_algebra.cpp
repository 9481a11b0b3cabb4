#include <gtest/gtest.h>

#include <map>
#include <random>

#include "gps/algebra.hpp"
#include "gps/errors.hpp"
#include "gps/morphism.hpp"
#include "oracle.hpp"

using namespace gps;

namespace {

GradedModule zmod(Int n) { return GradedModule(BaseRing::modular(n), GradingGroup({1}), {{n, {0}}}); }

GradedModule zxz()
{
    return GradedModule(BaseRing::integers(), GradingGroup({2}), {{0, {0}}, {0, {1}}});
}

GradedSubmodule span(const GradedModule& m, std::vector<std::vector<Int>> gens)
{
    std::vector<ModuleElement> els;
    for (auto& g : gens)
        els.emplace_back(m, g);
    return GradedSubmodule::from_generators(m, els);
}

// Small finite modules with a nontrivial grading; ring Z or Z_lcm.
std::vector<GradedModule> finite_sample()
{
    std::vector<GradedModule> out;
    const std::vector<Int> orders{2, 3, 4, 6, 8, 9};
    for (Int a : orders)
        for (Int b : orders) {
            if (a * b > 72)
                continue;
            out.emplace_back(BaseRing::integers(), GradingGroup({2}), std::vector<Factor>{{a, {0}}, {b, {1}}});
            out.emplace_back(BaseRing::modular(lcm(a, b)), GradingGroup({2}),
                             std::vector<Factor>{{a, {0}}, {b, {0}}});
        }
    out.emplace_back(BaseRing::integers(), GradingGroup({2, 2}),
                     std::vector<Factor>{{2, {0, 0}}, {2, {0, 1}}, {2, {0, 1}}});
    return out;
}

}  // namespace

TEST(Ideals, RadicalExamples)
{
    EXPECT_EQ(ideal_radical(Ideal(BaseRing::integers(), 4)).generator(), 2);
    EXPECT_EQ(ideal_radical(Ideal::zero(BaseRing::modular(8))), Ideal(BaseRing::modular(8), 2));
    EXPECT_TRUE(ideal_radical(Ideal::zero(BaseRing::modular(6))).is_zero());
    EXPECT_TRUE(ideal_radical(Ideal::zero(BaseRing::integers())).is_zero());
}

TEST(Ideals, RadicalAgreesWithPoweringUpTo60)
{
    for (Int n = 2; n <= 60; ++n)
        for (Int c : divisors(n)) {
            const Ideal i(BaseRing::modular(n), c);
            EXPECT_EQ(ideal_radical(i).generator(), oracle::radical_generator_mod(c, n)) << "n=" << n << " c=" << c;
        }
}

TEST(Ideals, ContainmentLatticeAgreesWithElementSets)
{
    for (Int n = 2; n <= 24; ++n) {
        const BaseRing r = BaseRing::modular(n);
        for (Int a : divisors(n))
            for (Int b : divisors(n)) {
                const Ideal ia(r, a), ib(r, b);
                std::set<Int> sa, sb;
                for (Int x = 0; x < n; ++x) {
                    if (ia.contains(x))
                        sa.insert(x);
                    if (ib.contains(x))
                        sb.insert(x);
                }
                const bool subset = std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
                EXPECT_EQ(ia.is_subset_of(ib), subset);
                std::set<Int> meet, join;
                for (Int x = 0; x < n; ++x) {
                    if (sa.count(x) && sb.count(x))
                        meet.insert(x);
                    for (Int y = 0; y < n; ++y)
                        if (sa.count(x) && sb.count(y))
                            join.insert((x + y) % n);
                }
                for (Int x = 0; x < n; ++x) {
                    EXPECT_EQ(ia.intersect(ib).contains(x), meet.count(x) == 1);
                    EXPECT_EQ(ia.sum(ib).contains(x), join.count(x) == 1);
                }
            }
    }
}

TEST(Ideals, PrimeAndMaximal)
{
    const BaseRing z = BaseRing::integers();
    EXPECT_TRUE(Ideal::zero(z).is_prime());
    EXPECT_FALSE(Ideal::zero(z).is_maximal());
    EXPECT_TRUE(Ideal(z, 7).is_maximal());
    EXPECT_FALSE(Ideal(z, 4).is_prime());
    EXPECT_FALSE(Ideal::unit(z).is_prime());
    EXPECT_TRUE(Ideal(BaseRing::modular(12), 3).is_prime());
    EXPECT_FALSE(Ideal::zero(BaseRing::modular(12)).is_prime());
    EXPECT_TRUE(Ideal::zero(BaseRing::modular(5)).is_prime());
}

TEST(Modules, RejectsFactorsThatDoNotDivideTheModulus)
{
    EXPECT_THROW(GradedModule(BaseRing::modular(6), GradingGroup({1}), {{4, {0}}}), InputError);
    EXPECT_THROW(GradedModule(BaseRing::modular(6), GradingGroup({1}), {{0, {0}}}), InputError);
    EXPECT_THROW(GradedModule(BaseRing::integers(), GradingGroup({2}), {{3, {2}}}), InputError);
    EXPECT_THROW(GradedModule(BaseRing::integers(), GradingGroup({2}), {{1, {0}}}), InputError);
}

TEST(Modules, HomogeneousDecomposition)
{
    const GradedModule m = zxz();
    const ModuleElement x(m, {3, 5});
    auto parts = homogeneous_components(m, x);
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0].element.coordinates(), (std::vector<Int>{3, 0}));
    EXPECT_EQ(parts[1].element.coordinates(), (std::vector<Int>{0, 5}));
    EXPECT_FALSE(is_homogeneous(m, x));
    EXPECT_TRUE(is_homogeneous(m, ModuleElement(m, {0, 5})));
    EXPECT_TRUE(is_homogeneous(m, ModuleElement(m, {0, 0})));
}

TEST(Submodules, FromGeneratorsExamples)
{
    const GradedModule m = zxz();
    EXPECT_EQ(span(m, {{4, 0}, {6, 0}}), span(m, {{2, 0}}));
    EXPECT_TRUE(span(m, {}).is_zero());
    EXPECT_TRUE(span(m, {{1, 1}}).is_whole());
    EXPECT_TRUE(span(m, {{4, 0}, {6, 0}}).contains(ModuleElement(m, {2, 0})));
    EXPECT_THROW(ModuleElement(m, {1, 2, 3}), InputError);
}

TEST(Submodules, LatticeOperationExamples)
{
    const GradedModule m = zxz();
    const auto a = span(m, {{4, 0}});
    const auto b = span(m, {{0, 4}});
    EXPECT_TRUE(a.intersect(b).is_zero());
    EXPECT_EQ(a.sum(GradedSubmodule::zero(m)), a);
    EXPECT_TRUE(a.is_proper());
    EXPECT_FALSE(GradedSubmodule::whole(m).is_proper());
    const GradedModule other = zmod(4);
    EXPECT_THROW(a.sum(GradedSubmodule::zero(other)), ModuleMismatch);
}

TEST(Submodules, GeneratorsRoundTrip)
{
    for (const GradedModule& m : finite_sample())
        for (const GradedSubmodule& n : enumerate_graded_submodules(m)) {
            auto gens = n.generators();
            EXPECT_EQ(GradedSubmodule::from_generators(m, gens), n);
            for (const auto& g : gens)
                EXPECT_TRUE(is_homogeneous(m, g));
        }
}

TEST(Submodules, CanonicalFormIsSoundAgainstClosure)
{
    std::mt19937_64 rng(17);
    for (const GradedModule& m : finite_sample()) {
        std::map<oracle::ElementSet, GradedSubmodule> seen;
        for (int trial = 0; trial < 30; ++trial) {
            std::uniform_int_distribution<int> count(0, 3);
            std::vector<std::vector<Int>> gens;
            oracle::ElementSet seed;
            const int k = count(rng);
            for (int i = 0; i < k; ++i) {
                std::vector<Int> v(m.rank());
                for (std::size_t j = 0; j < v.size(); ++j)
                    v[j] = std::uniform_int_distribution<Int>(-20, 20)(rng);
                gens.push_back(v);
                for (const auto& c : oracle::components(m, oracle::reduce(m, v)))
                    seed.insert(c);
            }
            const GradedSubmodule n = span(m, gens);
            const oracle::ElementSet elements = oracle::closure(m, seed);
            EXPECT_EQ(oracle::as_set(n), elements);
            auto [it, fresh] = seen.emplace(elements, n);
            if (!fresh) {
                EXPECT_EQ(it->second, n);
            }
            for (const auto& [other_set, other] : seen)
                EXPECT_EQ(other == n, other_set == elements);
        }
    }
}

TEST(Submodules, SumAndIntersectionMatchElementSets)
{
    for (const GradedModule& m : finite_sample()) {
        if (m.cardinality() > 36)
            continue;
        const auto subs = enumerate_graded_submodules(m);
        std::vector<oracle::ElementSet> sets;
        for (const auto& s : subs)
            sets.push_back(oracle::as_set(s));
        for (std::size_t i = 0; i < subs.size(); ++i)
            for (std::size_t j = 0; j < subs.size(); ++j) {
                oracle::ElementSet meet, join_seed = sets[i];
                for (const auto& v : sets[i])
                    if (sets[j].count(v))
                        meet.insert(v);
                join_seed.insert(sets[j].begin(), sets[j].end());
                EXPECT_EQ(oracle::as_set(subs[i].intersect(subs[j])), meet);
                EXPECT_EQ(oracle::as_set(subs[i].sum(subs[j])), oracle::closure(m, join_seed));
                EXPECT_EQ(subs[i].contains(subs[j]),
                          std::includes(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end()));
            }
    }
}

TEST(Colon, Examples)
{
    const GradedModule z6 = zmod(6);
    EXPECT_EQ(colon_ideal(span(z6, {{2}})).generator(), 2);
    EXPECT_TRUE(colon_ideal(span(zxz(), {{4, 0}})).is_zero());
    EXPECT_TRUE(colon_ideal(GradedSubmodule::whole(zxz())).is_unit());
    EXPECT_EQ(annihilator(zmod(8)), Ideal::zero(BaseRing::modular(8)));
}

TEST(Colon, AgreesWithExhaustiveDefinition)
{
    for (const GradedModule& m : finite_sample())
        for (const GradedSubmodule& n : enumerate_graded_submodules(m)) {
            const Int expected = oracle::colon_generator(m, oracle::as_set(n));
            EXPECT_EQ(colon_ideal(n), Ideal(m.ring(), expected));
        }
}

TEST(Colon, IdealTimesModule)
{
    const GradedModule m = zxz();
    EXPECT_EQ(ideal_times_module(Ideal(m.ring(), 4), m), span(m, {{4, 0}, {0, 4}}));
    const GradedModule z8 = zmod(8);
    EXPECT_EQ(ideal_times_module(Ideal(z8.ring(), 2), z8), span(z8, {{2}}));
}

TEST(Invariants, Examples)
{
    const GradedModule z = GradedModule(BaseRing::integers(), GradingGroup({2}), {{0, {0}}});
    EXPECT_EQ(quotient_invariants(span(z, {{4}}), Degree{0}), (QuotientInvariants{0, {4}}));
    EXPECT_EQ(quotient_invariants(GradedSubmodule::zero(zxz()), Degree{1}), (QuotientInvariants{1, {}}));
    const GradedModule z8 = zmod(8);
    EXPECT_EQ(quotient_invariants(span(z8, {{4}}), Degree{0}), (QuotientInvariants{0, {4}}));
}

TEST(Invariants, ElementOrdersMatchSmithPrediction)
{
    for (const GradedModule& m : finite_sample())
        for (const GradedSubmodule& n : enumerate_graded_submodules(m))
            for (std::size_t s = 0; s < m.slot_count(); ++s) {
                const QuotientInvariants inv = quotient_invariants(n, s);
                EXPECT_EQ(inv.free_rank, 0);
                for (std::size_t i = 0; i + 1 < inv.torsion.size(); ++i)
                    EXPECT_EQ(inv.torsion[i + 1] % inv.torsion[i], 0);
                // predicted order multiset of Z_d1 x ... x Z_dt
                std::map<Int, Int> predicted{{1, 1}};
                for (Int d : inv.torsion) {
                    std::map<Int, Int> next;
                    for (auto [o, c] : predicted)
                        for (Int x = 0; x < d; ++x)
                            next[lcm(o, d / gcd(x, d))] += c;
                    predicted = next;
                }
                // brute force: cosets of N_g in M_g
                std::set<std::vector<Int>> slot_elems;
                for (const auto& v : oracle::all_elements(m)) {
                    auto c = oracle::components(m, v);
                    if (c.size() == 1 && m.factors()[std::find_if(v.begin(), v.end(), [](Int x) { return x != 0; }) -
                                                     v.begin()]
                                                 .degree == m.slot_degree(s))
                        slot_elems.insert(v);
                }
                slot_elems.insert(std::vector<Int>(m.rank(), 0));
                const auto nset = oracle::as_set(n);
                std::map<Int, Int> observed;
                std::set<std::vector<Int>> covered;
                for (const auto& v : slot_elems) {
                    if (covered.count(v))
                        continue;
                    for (const auto& w : nset)
                        covered.insert(oracle::add(m, v, w));
                    Int order = 1;
                    while (!nset.count(oracle::scale(m, order, v)))
                        ++order;
                    observed[order] += 1;
                }
                EXPECT_EQ(observed, predicted);
            }
}

TEST(Enumeration, Examples)
{
    const auto subs = enumerate_graded_submodules(zmod(6));
    ASSERT_EQ(subs.size(), 4u);
    const GradedModule z6 = zmod(6);
    EXPECT_TRUE(subs[0].is_zero());
    EXPECT_EQ(subs[1], span(z6, {{3}}));
    EXPECT_EQ(subs[2], span(z6, {{2}}));
    EXPECT_TRUE(subs[3].is_whole());

    const GradedModule z2z2(BaseRing::integers(), GradingGroup({2}), {{2, {0}}, {2, {1}}});
    EXPECT_EQ(enumerate_graded_submodules(z2z2).size(), 4u);
    EXPECT_THROW(enumerate_graded_submodules(zxz()), InfiniteModuleError);
    EXPECT_THROW(enumerate_graded_submodules(zmod(64), 10), EnumerationBoundExceeded);
}

TEST(Enumeration, ExactlyTheGradedSubgroups)
{
    for (const GradedModule& m : finite_sample()) {
        if (m.cardinality() > 36)
            continue;
        const auto subs = enumerate_graded_submodules(m);
        std::set<oracle::ElementSet> got;
        for (std::size_t i = 0; i < subs.size(); ++i) {
            got.insert(oracle::as_set(subs[i]));
            if (i > 0) {
                EXPECT_TRUE(canonical_less(subs[i - 1], subs[i]));
            }
        }
        EXPECT_EQ(got.size(), subs.size());
        EXPECT_EQ(got, oracle::all_graded_submodules(m));
    }
}

TEST(Enumeration, GradedIffEveryDegreePieceIsASubgroup)
{
    // With a trivially graded ring, a direct sum of per-degree subgroups is
    // always a graded submodule, and every graded submodule is of that form.
    const GradedModule m(BaseRing::integers(), GradingGroup({2}), {{4, {0}}, {2, {1}}});
    for (const auto& s : oracle::all_subgroups(m)) {
        bool split = true;
        for (const auto& v : s)
            for (const auto& c : oracle::components(m, v))
                split = split && s.count(c);
        EXPECT_EQ(oracle::is_graded(m, s), split);
    }
    std::size_t per_degree = 1;
    per_degree *= 3;  // subgroups of Z_4
    per_degree *= 2;  // subgroups of Z_2
    EXPECT_EQ(enumerate_graded_submodules(m).size(), per_degree);
}

TEST(Quotients, Examples)
{
    const GradedModule z(BaseRing::integers(), GradingGroup({2}), {{0, {0}}});
    const auto q1 = quotient_module(span(z, {{4}}));
    ASSERT_EQ(q1.module.rank(), 1u);
    EXPECT_EQ(q1.module.factors()[0], (Factor{4, {0}}));

    const auto q2 = quotient_module(span(zxz(), {{4, 0}}));
    ASSERT_EQ(q2.module.rank(), 2u);
    EXPECT_EQ(q2.module.factors()[0], (Factor{4, {0}}));
    EXPECT_EQ(q2.module.factors()[1], (Factor{0, {1}}));

    const auto q3 = quotient_module(GradedSubmodule::zero(zxz()));
    EXPECT_EQ(q3.module, zxz());
    EXPECT_TRUE(q3.projection.is_injective());
}

TEST(Quotients, ProjectionIsEpiWithKernelK)
{
    for (const GradedModule& m : finite_sample())
        for (const GradedSubmodule& k : enumerate_graded_submodules(m)) {
            const auto q = quotient_module(k);
            EXPECT_TRUE(q.projection.is_epimorphism());
            EXPECT_EQ(q.projection.kernel(), k);
            EXPECT_EQ(q.module.cardinality() * k.cardinality(), m.cardinality());
            // correspondence: preimage of image recovers submodules above K
            for (const GradedSubmodule& n : enumerate_graded_submodules(m))
                if (n.contains(k)) {
                    EXPECT_EQ(q.projection.preimage(q.projection.image(n)), n);
                }
        }
}

TEST(Morphisms, PermutationAndComposition)
{
    const GradedModule m(BaseRing::integers(), GradingGroup({2}), {{4, {0}}, {4, {0}}, {2, {1}}});
    const GradedHom swap = GradedHom::permutation(m, {1, 0, 2});
    EXPECT_TRUE(swap.is_epimorphism());
    EXPECT_TRUE(GradedHom::compose(swap, swap).matrix() == GradedHom::identity(m).matrix());
    EXPECT_EQ(swap.apply(ModuleElement(m, {1, 3, 1})).coordinates(), (std::vector<Int>{3, 1, 1}));
    EXPECT_THROW(GradedHom::permutation(m, {2, 1, 0}), UnsupportedMorphism);
    EXPECT_THROW(GradedHom::permutation(m, {0, 0, 2}), UnsupportedMorphism);
}
