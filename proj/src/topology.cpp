#include "gps/topology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gps/errors.hpp"

namespace gps {

PointSet PointSet::full(std::size_t n)
{
    PointSet s(n);
    s.bits_.set();
    return s;
}

PointSet PointSet::singleton(std::size_t n, std::size_t i)
{
    PointSet s(n);
    s.set(i);
    return s;
}

std::vector<std::size_t> PointSet::indices() const
{
    std::vector<std::size_t> out;
    for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i))
        out.push_back(i);
    return out;
}

bool operator<(const PointSet& a, const PointSet& b)
{
    // by size, then by member list, so printed families read naturally
    if (a.count() != b.count())
        return a.count() < b.count();
    return a.indices() < b.indices();
}

std::string to_string(SpaceKind k)
{
    switch (k) {
    case SpaceKind::PrimarySpectrum:
        return "primary_spectrum";
    case SpaceKind::PrimeSpectrum:
        return "prime_spectrum";
    case SpaceKind::RingSpectrum:
        break;
    }
    return "ring_spectrum";
}

// ---------------------------------------------------------------- construction

namespace {

// 0, 1 and the divisors of the lcm of all factor orders and the ring modulus.
std::vector<Int> base_representatives(const GradedModule& m)
{
    Int delta = m.ring().modulus();
    for (const Factor& f : m.factors())
        if (f.order != 0)
            delta = delta == 0 ? f.order : lcm(delta, f.order);
    std::set<Int> reps{0, 1};
    if (delta != 0)
        for (Int d : divisors(delta))
            reps.insert(d);
    return {reps.begin(), reps.end()};
}

}  // namespace

void FiniteSpace::add_closed(PointSet s, std::optional<GradedSubmodule> n, std::optional<Ideal> i)
{
    for (const ClosedSet& c : closed_)
        if (c.set == s)
            return;
    closed_.push_back({std::move(s), std::move(n), std::move(i)});
}

void FiniteSpace::build_module_space(const FiniteSpectra& spectra, const std::vector<GradedSubmodule>& points)
{
    module_ = spectra.module();
    points_ = points;
    for (const GradedSubmodule& q : points_) {
        radicals_.push_back(spectra.radical(q));
        radical_colons_.push_back(colon_ideal(radicals_.back()));
    }
    for (const GradedSubmodule& n : spectra.submodules())
        add_closed(nu(n), n, std::nullopt);
    std::stable_sort(closed_.begin(), closed_.end(),
                     [](const ClosedSet& a, const ClosedSet& b) { return a.set < b.set; });
    for (Int r : base_representatives(*module_))
        base_.push_back({r, base_open(r)});
}

FiniteSpace FiniteSpace::primary_spectrum(const FiniteSpectra& spectra)
{
    FiniteSpace s(SpaceKind::PrimarySpectrum, spectra.module().ring());
    s.build_module_space(spectra, spectra.primary_points());
    return s;
}

FiniteSpace FiniteSpace::prime_spectrum(const FiniteSpectra& spectra)
{
    FiniteSpace s(SpaceKind::PrimeSpectrum, spectra.module().ring());
    s.build_module_space(spectra, spectra.primes());
    return s;
}

FiniteSpace FiniteSpace::ring_spectrum(Int m)
{
    if (m == 0)
        throw InfiniteModuleError("Spec(Z) is infinite and is not materialized");
    FiniteSpace s(SpaceKind::RingSpectrum, BaseRing::modular(m));
    if (m > 1)
        for (Int p : prime_divisors(m))
            s.ring_points_.emplace_back(s.ring_, p);
    for (Int d : divisors(m))
        s.add_closed(s.ring_variety(Ideal(s.ring_, d)), std::nullopt, Ideal(s.ring_, d));
    std::stable_sort(s.closed_.begin(), s.closed_.end(),
                     [](const ClosedSet& a, const ClosedSet& b) { return a.set < b.set; });
    std::set<Int> reps{0, 1};
    for (Int d : divisors(m))
        reps.insert(d);
    for (Int r : reps)
        s.base_.push_back({r, s.ring_basic_open(r)});
    return s;
}

FiniteSpace FiniteSpace::reduced_ring_spectrum(const GradedModule& m)
{
    return ring_spectrum(annihilator(m).generator());
}

const GradedModule& FiniteSpace::module() const
{
    require_module("module");
    return *module_;
}

void FiniteSpace::require_module(const char* what) const
{
    if (!is_module_space())
        throw InputError(std::string(what) + " needs a module space");
}

void FiniteSpace::require_ring(const char* what) const
{
    if (is_module_space())
        throw InputError(std::string(what) + " needs a ring spectrum");
}

std::optional<std::size_t> FiniteSpace::index_of(const GradedSubmodule& q) const
{
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (points_[i] == q)
            return i;
    return std::nullopt;
}

std::optional<std::size_t> FiniteSpace::index_of(const Ideal& p) const
{
    for (std::size_t i = 0; i < ring_points_.size(); ++i)
        if (ring_points_[i] == p)
            return i;
    return std::nullopt;
}

bool FiniteSpace::is_closed(const PointSet& y) const
{
    return std::any_of(closed_.begin(), closed_.end(), [&](const ClosedSet& c) { return c.set == y; });
}

// ---------------------------------------------------------------- varieties

PointSet FiniteSpace::nu(const GradedSubmodule& n) const
{
    require_module("nu");
    if (!(n.module() == *module_))
        throw ModuleMismatch();
    const Ideal c = colon_ideal(n);
    PointSet out(size());
    for (std::size_t i = 0; i < points_.size(); ++i)
        out.set(i, c.is_subset_of(radical_colons_[i]));
    return out;
}

PointSet FiniteSpace::nu_star(const GradedSubmodule& n) const
{
    require_module("nu_star");
    if (!(n.module() == *module_))
        throw ModuleMismatch();
    PointSet out(size());
    for (std::size_t i = 0; i < points_.size(); ++i)
        out.set(i, radicals_[i].contains(n));
    return out;
}

PointSet FiniteSpace::base_open(Int r) const
{
    require_module("S_r");
    return nu(ideal_times_module(Ideal(module_->ring(), r), *module_)).complement();
}

PointSet FiniteSpace::ring_variety(const Ideal& i) const
{
    require_ring("V^R");
    if (!(i.ring() == ring_))
        throw InputError("ideal belongs to a different ring");
    PointSet out(size());
    for (std::size_t k = 0; k < ring_points_.size(); ++k)
        out.set(k, i.is_subset_of(ring_points_[k]));
    return out;
}

PointSet FiniteSpace::ring_basic_open(Int r) const { return ring_variety(Ideal(ring_, r)).complement(); }

GradedSubmodule FiniteSpace::eta(const PointSet& y) const
{
    require_module("eta");
    GradedSubmodule out = GradedSubmodule::whole(*module_);
    for (std::size_t i : y.indices())
        out = out.intersect(radicals_[i]);
    return out;
}

Ideal FiniteSpace::gamma(const PointSet& y) const
{
    require_ring("gamma");
    Ideal out = Ideal::unit(ring_);
    for (std::size_t i : y.indices())
        out = out.intersect(ring_points_[i]);
    return out;
}

PointSet FiniteSpace::closure(const PointSet& y) const
{
    return is_module_space() ? nu(eta(y)) : ring_variety(gamma(y));
}

PointSet FiniteSpace::lattice_closure(const PointSet& y) const
{
    PointSet out = full();
    for (const ClosedSet& c : closed_)
        if (y.is_subset_of(c.set))
            out = out.intersect(c.set);
    return out;
}

bool FiniteSpace::is_irreducible(const PointSet& y) const
{
    if (y.empty())
        return false;
    for (const ClosedSet& a : closed_) {
        if (y.is_subset_of(a.set))
            continue;
        for (const ClosedSet& b : closed_)
            if (!y.is_subset_of(b.set) && y.is_subset_of(a.set.unite(b.set)))
                return false;
    }
    return true;
}

// ---------------------------------------------------------------- analysis

std::vector<std::size_t> generic_points(const FiniteSpace& space, const PointSet& c)
{
    std::vector<std::size_t> out;
    for (std::size_t i : c.indices())
        if (space.closure(space.singleton(i)) == c)
            out.push_back(i);
    return out;
}

TopologyReport analyze(const FiniteSpace& space)
{
    TopologyReport r;
    const std::size_t n = space.size();
    const PointSet all = space.full();
    const auto& closed = space.closed_sets();

    r.connected = true;
    for (const ClosedSet& c : closed)
        if (!c.set.empty() && !c.set.is_full() && space.is_closed(c.set.complement()))
            r.connected = false;
    r.irreducible = space.is_irreducible(all);
    r.trivial = closed.size() <= 2;

    std::vector<PointSet> point_closures;
    for (std::size_t i = 0; i < n; ++i)
        point_closures.push_back(space.closure(space.singleton(i)));
    r.t0 = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (point_closures[i] == point_closures[j])
                r.t0 = false;
    r.t1 = true;
    for (std::size_t i = 0; i < n; ++i)
        if (point_closures[i].count() != 1)
            r.t1 = false;

    std::vector<PointSet> irreducible_closed;
    r.sober = true;
    for (const ClosedSet& c : closed) {
        if (!space.is_irreducible(c.set))
            continue;
        irreducible_closed.push_back(c.set);
        if (generic_points(space, c.set).size() != 1)
            r.sober = false;
    }
    for (const PointSet& c : irreducible_closed) {
        bool maximal = true;
        for (const PointSet& d : irreducible_closed)
            if (!(c == d) && c.is_subset_of(d))
                maximal = false;
        if (maximal)
            r.components.push_back({c, generic_points(space, c)});
    }

    // Base opens and finite subcovers: greedily pick base sets until X is
    // covered, which must succeed because the base contains an S_r equal to X.
    PointSet covered = space.empty();
    for (const BaseOpen& b : space.base())
        if (!b.set.is_subset_of(covered))
            covered = covered.unite(b.set);
    r.quasi_compact = covered == all;

    // every open is a union of base opens, and opens meet in opens
    bool base_generates = true;
    bool meets_closed = true;
    for (const ClosedSet& c : closed) {
        const PointSet open = c.set.complement();
        PointSet from_base = space.empty();
        for (const BaseOpen& b : space.base())
            if (b.set.is_subset_of(open))
                from_base = from_base.unite(b.set);
        if (!(from_base == open))
            base_generates = false;
        for (const ClosedSet& d : closed)
            if (!space.is_closed(open.intersect(d.set.complement()).complement()))
                meets_closed = false;
    }
    r.hochster_opens = base_generates && meets_closed;
    r.spectral = r.t0 && r.quasi_compact && r.hochster_opens && r.sober;
    return r;
}

Trilean is_primary_g_top(const GradedModule& m, std::size_t bound)
{
    if (!m.is_finite()) {
        if (is_multiplication(m, bound).is_true())
            return Trilean::yes();
        return Trilean::unknown("infinite module that is not known to be a multiplication module");
    }
    const FiniteSpectra spectra(m, bound);
    const FiniteSpace space = FiniteSpace::primary_spectrum(spectra);
    std::map<std::vector<std::size_t>, GradedSubmodule> family;
    for (const GradedSubmodule& n : spectra.submodules())
        family.emplace(space.nu_star(n).indices(), n);
    for (const auto& [a, na] : family)
        for (const auto& [b, nb] : family) {
            PointSet u = space.empty();
            for (std::size_t i : a)
                u.set(i);
            for (std::size_t i : b)
                u.set(i);
            if (!family.count(u.indices()))
                return Trilean::no(Witness{"nu*(N) u nu*(N') is not of the form nu*(J)", {na, nb}, {}});
        }
    return Trilean::yes();
}

}  // namespace gps
