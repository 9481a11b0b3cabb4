#include "gps/spectra.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gps/errors.hpp"
#include "gps/morphism.hpp"

namespace gps {

std::string to_string(Trilean::Kind k)
{
    switch (k) {
    case Trilean::Kind::True:
        return "true";
    case Trilean::Kind::False:
        return "false";
    case Trilean::Kind::Unknown:
        break;
    }
    return "unknown";
}

namespace {

// Every nonzero homogeneous class of M/N has annihilator inside `bound`.
// Annihilators are (d) for d > 1 dividing a torsion invariant, plus (0) when a
// free part survives; checking the primes below the invariants is enough.
bool annihilators_inside(const GradedSubmodule& n, const Ideal& bound)
{
    const GradedModule& m = n.module();
    for (std::size_t s = 0; s < m.slot_count(); ++s) {
        const QuotientInvariants inv = quotient_invariants(n, s);
        if (inv.free_rank > 0 && !Ideal::zero(m.ring()).is_subset_of(bound))
            return false;
        for (Int d : inv.torsion)
            for (Int p : prime_divisors(d))
                if (!Ideal(m.ring(), p).is_subset_of(bound))
                    return false;
    }
    return true;
}

}  // namespace

bool is_graded_prime(const GradedSubmodule& p)
{
    if (p.is_whole())
        throw NotProperError("graded prime test");
    return annihilators_inside(p, colon_ideal(p));
}

bool is_graded_primary(const GradedSubmodule& q)
{
    if (q.is_whole())
        throw NotProperError("graded primary test");
    return annihilators_inside(q, colon_ideal(q).radical());
}

bool is_graded_maximal(const GradedSubmodule& n)
{
    const GradedModule& m = n.module();
    const GradedSubmodule whole = GradedSubmodule::whole(m);
    std::size_t differing = 0;
    for (std::size_t s = 0; s < m.slot_count(); ++s) {
        if (n.block(s) == whole.block(s))
            continue;
        ++differing;
        const QuotientInvariants inv = quotient_invariants(n, s);
        if (inv.free_rank != 0 || inv.torsion.size() != 1 || !is_prime(inv.torsion.front()))
            return false;
    }
    return differing == 1;
}

// ---------------------------------------------------------------- radical

RadicalResult::RadicalResult(Kind k, std::optional<GradedSubmodule> v, std::optional<RadicalStrategy> via,
                             std::string reason, std::vector<std::string> attempted)
    : kind_(k), value_(std::move(v)), via_(via), reason_(std::move(reason)), attempted_(std::move(attempted))
{
}

RadicalResult RadicalResult::submodule(GradedSubmodule n, RadicalStrategy via)
{
    return RadicalResult(Kind::Submodule, std::move(n), via, {}, {});
}

RadicalResult RadicalResult::top(const GradedModule& m, RadicalStrategy via)
{
    return RadicalResult(Kind::Top, GradedSubmodule::whole(m), via, {}, {});
}

RadicalResult RadicalResult::unknown(std::string reason, std::vector<std::string> attempted)
{
    return RadicalResult(Kind::Unknown, std::nullopt, std::nullopt, std::move(reason), std::move(attempted));
}

const GradedSubmodule& RadicalResult::value() const
{
    if (!value_)
        throw RadicalUnknownError("graded radical is unknown: " + reason_);
    return *value_;
}

bool operator==(const RadicalResult& a, const RadicalResult& b)
{
    return a.kind_ == b.kind_ && a.value_ == b.value_;
}

namespace {

std::optional<RadicalResult> radical_by_finite_quotient(const GradedSubmodule& n, std::size_t bound,
                                                        std::string& why_not)
{
    const GradedModule& m = n.module();
    for (std::size_t s = 0; s < m.slot_count(); ++s)
        if (quotient_invariants(n, s).free_rank > 0) {
            why_not = "M/N is infinite";
            return std::nullopt;
        }
    const QuotientModule q = quotient_module(n);
    if (q.module.cardinality() > static_cast<Int>(bound)) {
        why_not = "M/N exceeds the enumeration bound";
        return std::nullopt;
    }
    std::optional<GradedSubmodule> meet;
    for (const GradedSubmodule& p : enumerate_graded_submodules(q.module, bound)) {
        if (p.is_whole() || !is_graded_prime(p))
            continue;
        GradedSubmodule back = q.projection.preimage(p);
        meet = meet ? meet->intersect(back) : back;
    }
    if (!meet)
        return RadicalResult::top(m, RadicalStrategy::FiniteQuotient);
    return RadicalResult::submodule(*meet, RadicalStrategy::FiniteQuotient);
}

std::optional<RadicalResult> radical_by_multiplication(const GradedSubmodule& n, std::size_t bound,
                                                       std::string& why_not)
{
    const GradedModule& m = n.module();
    const Trilean mult = is_multiplication(m, bound);
    if (!mult.is_true()) {
        why_not = mult.is_false() ? "M is not a multiplication module" : "multiplication test unknown";
        return std::nullopt;
    }
    GradedSubmodule r = ideal_times_module(colon_ideal(n).radical(), m);
    if (r.is_whole())
        return RadicalResult::top(m, RadicalStrategy::Multiplication);
    return RadicalResult::submodule(std::move(r), RadicalStrategy::Multiplication);
}

}  // namespace

RadicalResult graded_radical_submodule(const GradedSubmodule& n, const RadicalOptions& opts)
{
    if (n.is_whole())
        throw NotProperError("graded radical");
    if (is_graded_prime(n))
        return RadicalResult::submodule(n, RadicalStrategy::Prime);

    std::vector<std::string> attempted{"prime: N is not graded prime"};
    std::string why;
    std::optional<RadicalResult> s2 = radical_by_finite_quotient(n, opts.enumeration_bound, why);
    if (!s2)
        attempted.push_back("finite quotient: " + why);
    std::optional<RadicalResult> s3;
    if (!s2 || opts.cross_check) {
        s3 = radical_by_multiplication(n, opts.enumeration_bound, why);
        if (!s3)
            attempted.push_back("multiplication: " + why);
    }
    if (s2 && s3 && !(*s2 == *s3))
        throw std::logic_error("radical strategies disagree");
    if (s2)
        return *s2;
    if (s3)
        return *s3;
    return RadicalResult::unknown("no exact strategy applies", std::move(attempted));
}

bool in_primary_spectrum(const GradedSubmodule& q, const RadicalOptions& opts)
{
    if (!is_graded_primary(q))
        return false;
    const RadicalResult r = graded_radical_submodule(q, opts);
    return colon_ideal(r.value()) == colon_ideal(q).radical();
}

// ---------------------------------------------------------------- module properties

Trilean is_multiplication(const GradedModule& m, std::size_t bound)
{
    auto check = [&](const GradedSubmodule& n) -> std::optional<Witness> {
        const Ideal c = colon_ideal(n);
        if (ideal_times_module(c, m) == n)
            return std::nullopt;
        std::ostringstream os;
        os << "N differs from (N:M)M where (N:M) = " << c.to_string();
        return Witness{os.str(), {n, ideal_times_module(c, m)}, {c}};
    };
    if (m.is_finite()) {
        if (m.cardinality() > static_cast<Int>(bound))
            return Trilean::unknown("module exceeds the enumeration bound");
        for (const GradedSubmodule& n : enumerate_graded_submodules(m, bound))
            if (auto w = check(n))
                return Trilean::no(*w);
        return Trilean::yes();
    }
    if (m.rank() == 1)
        return Trilean::yes();
    for (std::size_t i = 0; i < m.rank(); ++i)
        for (Int a = 1; a <= 8; ++a) {
            std::vector<Int> v(m.rank(), 0);
            v[i] = a;
            const ModuleElement x(m, v);
            if (x.is_zero())
                continue;
            const GradedSubmodule n = GradedSubmodule::from_generators(m, std::span<const ModuleElement>(&x, 1));
            if (auto w = check(n))
                return Trilean::no(*w);
        }
    return Trilean::unknown("no witness among small cyclic submodules and no structural proof");
}

Trilean is_cancellation(const GradedModule& m)
{
    const BaseRing& r = m.ring();
    if (r.is_finite()) {
        std::map<GradedSubmodule, Ideal> seen;
        for (Int d : divisors(r.modulus())) {
            const Ideal i(r, d);
            const GradedSubmodule im = ideal_times_module(i, m);
            auto [it, fresh] = seen.emplace(im, i);
            if (!fresh)
                return Trilean::no(Witness{"IM = JM with I != J", {im}, {it->second, i}});
        }
        return Trilean::yes();
    }
    if (!m.is_finite())
        return Trilean::yes();
    const Int e = m.exponent();
    const Ideal i(r, e), j(r, checked_mul(2, e));
    return Trilean::no(Witness{"IM = JM = 0 with I != J", {ideal_times_module(i, m)}, {i, j}});
}

// ---------------------------------------------------------------- enumeration

std::vector<GradedSubmodule> enumerate_points(const GradedModule& m, PointKind kind, std::size_t bound)
{
    if (kind == PointKind::AllGraded)
        return enumerate_graded_submodules(m, bound);
    const FiniteSpectra fs(m, bound);
    switch (kind) {
    case PointKind::Prime:
        return fs.primes();
    case PointKind::PrimarySpectrum:
        return fs.primary_points();
    case PointKind::Maximal:
        return fs.maximal();
    case PointKind::AllGraded:
        break;
    }
    return fs.submodules();
}

FiniteSpectra::FiniteSpectra(const GradedModule& m, std::size_t bound)
    : module_(m), submodules_(enumerate_graded_submodules(m, bound))
{
    for (const GradedSubmodule& n : submodules_) {
        if (n.is_whole())
            continue;
        if (is_graded_prime(n))
            primes_.push_back(n);
        if (is_graded_maximal(n))
            maximal_.push_back(n);
    }
    for (const GradedSubmodule& n : submodules_) {
        if (n.is_whole() || !is_graded_primary(n))
            continue;
        if (colon_ideal(radical(n)) == colon_ideal(n).radical())
            primary_points_.push_back(n);
    }
}

GradedSubmodule FiniteSpectra::radical(const GradedSubmodule& n) const
{
    std::optional<GradedSubmodule> meet;
    for (const GradedSubmodule& p : primes_)
        if (p.contains(n))
            meet = meet ? meet->intersect(p) : p;
    return meet ? *meet : GradedSubmodule::whole(module_);
}

bool FiniteSpectra::is_prime(const GradedSubmodule& n) const
{
    return std::binary_search(primes_.begin(), primes_.end(), n, canonical_less);
}

}  // namespace gps
