#include <gtest/gtest.h>

#include "corpus_modules.hpp"
#include "gps/errors.hpp"
#include "gps/structure_maps.hpp"

using namespace gps;
using testing_corpus::cyclic;
using testing_corpus::finite_family;
using testing_corpus::integers;

namespace {

GradedSubmodule span(const GradedModule& m, std::vector<std::vector<Int>> gens)
{
    std::vector<ModuleElement> els;
    for (auto& g : gens)
        els.emplace_back(m, g);
    return GradedSubmodule::from_generators(m, els);
}

}  // namespace

TEST(ReducedRing, PresentsTheQuotient)
{
    EXPECT_EQ(reduced_ring(cyclic(6)).modulus, 6);
    EXPECT_EQ(reduced_ring(integers()).modulus, 0);
    const GradedModule z4(BaseRing::integers(), GradingGroup({2}), {{4, {0}}, {2, {1}}});
    EXPECT_EQ(reduced_ring(z4).modulus, 4);
    EXPECT_THROW(reduced_ring(z4).reduce(Ideal(BaseRing::integers(), 3)), InputError);
}

TEST(ReducedRing, IdealCorrespondenceIsAnOrderIsomorphism)
{
    for (const GradedModule& m : finite_family()) {
        const ReducedRing rb = reduced_ring(m);
        const Ideal ann = annihilator(m);
        std::vector<Ideal> above;
        const Int top = m.ring().is_finite() ? m.ring().modulus() : 2 * rb.modulus;
        for (Int c = 1; c <= top; ++c) {
            const Ideal i(m.ring(), c);
            if (ann.is_subset_of(i) && std::find(above.begin(), above.end(), i) == above.end())
                above.push_back(i);
        }
        EXPECT_EQ(above.size(), rb.ideals().size());
        for (const Ideal& i : above)
            for (const Ideal& j : above)
                EXPECT_EQ(i.is_subset_of(j), rb.reduce(i).is_subset_of(rb.reduce(j)));
        for (const Ideal& ib : rb.ideals())
            EXPECT_EQ(rb.reduce(rb.lift(ib, m.ring())), ib);
    }
}

TEST(PointMaps, Examples)
{
    const GradedModule z6 = cyclic(6), z8 = cyclic(8);
    EXPECT_EQ(rho(span(z6, {{2}})), Ideal(BaseRing::modular(6), 2));
    EXPECT_EQ(rho(span(z8, {{4}})), Ideal(BaseRing::modular(8), 2));
    EXPECT_EQ(rho(span(integers(), {{4}})), Ideal(BaseRing::integers(), 2));
    EXPECT_EQ(phi(span(z6, {{3}})), Ideal(BaseRing::modular(6), 3));
    EXPECT_EQ(phi(span(z8, {{2}})), Ideal(BaseRing::modular(8), 2));
    EXPECT_THROW(rho(GradedSubmodule::zero(z6)), InputError);
    EXPECT_THROW(phi(span(z8, {{4}})), InputError);
}

TEST(PointMaps, PhiIsRhoOnPrimes)
{
    for (const GradedModule& m : finite_family()) {
        if (m.cardinality() > 32)
            continue;
        for (const GradedSubmodule& p : enumerate_points(m, PointKind::Prime)) {
            EXPECT_EQ(phi(p), rho(p));
            EXPECT_TRUE(rho(p).is_prime());
        }
    }
}

TEST(MapAnalysis, Z6RhoIsAHomeomorphism)
{
    const MapAnalysis a = analyze_map(cyclic(6), MapKind::Rho);
    EXPECT_TRUE(a.injective);
    EXPECT_TRUE(a.surjective);
    EXPECT_TRUE(a.continuous);
    EXPECT_TRUE(a.open && a.closed);
    EXPECT_TRUE(a.homeomorphism);
    ASSERT_EQ(a.fibers.size(), 2u);
    EXPECT_EQ(a.fibers[0].prime.generator(), 2);
    EXPECT_EQ(a.fibers[0].points.count(), 1u);
    EXPECT_EQ(a.fibers[1].points.count(), 1u);
}

TEST(MapAnalysis, Z8RhoCollapsesThreePoints)
{
    const MapAnalysis a = analyze_map(cyclic(8), MapKind::Rho);
    EXPECT_TRUE(a.surjective);
    EXPECT_FALSE(a.injective);
    ASSERT_EQ(a.fibers.size(), 1u);
    EXPECT_EQ(a.fibers[0].points.count(), 3u);
    EXPECT_FALSE(a.homeomorphism);
}

TEST(MapAnalysis, ContinuityAndImagesOnEveryFiniteInstance)
{
    for (const GradedModule& m : finite_family()) {
        const MapAnalysis a = analyze_map(m, MapKind::Rho);
        EXPECT_TRUE(a.continuous);
        for (const ContinuityCheck& c : a.continuity)
            EXPECT_EQ(c.preimage, c.variety);
        for (const ImageCheck& c : a.image_identities) {
            EXPECT_EQ(c.image_of_variety, c.ring_variety);
            EXPECT_EQ(c.image_of_complement, c.ring_complement);
        }
        const MapAnalysis b = analyze_map(m, MapKind::Phi);
        EXPECT_TRUE(b.continuous);
    }
}

TEST(InducedPi, ProjectionOfZ8OntoZ4)
{
    const GradedModule z8 = cyclic(8);
    const QuotientModule q = quotient_module(span(z8, {{4}}));
    const InducedMap pi = induced_pi(q.projection);
    EXPECT_TRUE(pi.lands_in_spectrum);
    EXPECT_TRUE(pi.injective);
    EXPECT_TRUE(pi.continuous);
    EXPECT_TRUE(pi.target.index_of(q.projection.preimage(GradedSubmodule::zero(q.module))).has_value());
    EXPECT_EQ(q.projection.preimage(GradedSubmodule::zero(q.module)), span(z8, {{4}}));
}

TEST(InducedPi, IdentityAndPermutationsAreHomeomorphisms)
{
    for (const GradedModule& m : finite_family()) {
        if (m.cardinality() > 32)
            continue;
        const InducedMap id = induced_pi(GradedHom::identity(m));
        EXPECT_TRUE(id.homeomorphism);
        for (std::size_t i = 0; i < id.images.size(); ++i)
            EXPECT_EQ(id.images[i], std::optional<std::size_t>(i));
        if (m.rank() == 2 && m.factors()[0] == m.factors()[1]) {
            EXPECT_TRUE(induced_pi(GradedHom::permutation(m, {1, 0})).homeomorphism);
        }
    }
}

TEST(InducedPi, QuotientsOfTheFamily)
{
    for (const GradedModule& m : finite_family()) {
        if (m.cardinality() > 32)
            continue;
        for (const GradedSubmodule& k : enumerate_graded_submodules(m)) {
            const InducedMap pi = induced_pi(quotient_module(k).projection);
            EXPECT_TRUE(pi.lands_in_spectrum);
            EXPECT_TRUE(pi.pushes_forward);
            EXPECT_TRUE(pi.injective);
            EXPECT_TRUE(pi.continuous);
            if (pi.surjective) {
                EXPECT_TRUE(pi.homeomorphism);
            }
        }
    }
}

TEST(InducedPi, InfiniteSourcePointwise)
{
    const GradedModule z(BaseRing::integers(), GradingGroup({2}), {{0, {0}}});
    const QuotientModule q = quotient_module(span(z, {{4}}));
    const GradedSubmodule two = span(q.module, {{2}});
    const GradedSubmodule back = q.projection.preimage(two);
    EXPECT_EQ(back, span(z, {{2}}));
    EXPECT_TRUE(in_primary_spectrum(back));
    // the whole map is not materialized for Z
    EXPECT_THROW(induced_pi(q.projection), InfiniteModuleError);
}
