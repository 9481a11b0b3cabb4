#include "gps/structure_maps.hpp"

#include <set>

#include "gps/errors.hpp"

namespace gps {

Ideal ReducedRing::reduce(const Ideal& i) const
{
    const Int c = i.generator();
    if (modulus != 0 && (c == 0 || modulus % c != 0))
        throw InputError("ideal does not contain the annihilator");
    if (modulus == 0 && !i.ring().is_integers())
        throw InputError("ideal does not contain the annihilator");
    return Ideal(ring(), c);
}

Ideal ReducedRing::lift(const Ideal& reduced, const BaseRing& base) const
{
    return Ideal(base, reduced.generator());
}

std::vector<Ideal> ReducedRing::ideals() const
{
    if (!materializable())
        throw InfiniteModuleError("Z has infinitely many ideals");
    std::vector<Ideal> out;
    for (Int d : divisors(modulus))
        out.emplace_back(ring(), d);
    return out;
}

ReducedRing reduced_ring(const GradedModule& m)
{
    const Ideal ann = annihilator(m);
    // over Z_n the zero ideal is stored as n, which is the right modulus
    return ReducedRing{ann.generator()};
}

Ideal rho(const GradedSubmodule& q, const RadicalOptions& opts)
{
    if (!in_primary_spectrum(q, opts))
        throw InputError("rho is defined on points of the primary spectrum");
    const GradedSubmodule r = graded_radical_submodule(q, opts).value();
    return reduced_ring(q.module()).reduce(colon_ideal(r));
}

Ideal phi(const GradedSubmodule& p)
{
    if (!is_graded_prime(p))
        throw InputError("phi is defined on graded prime submodules");
    return reduced_ring(p.module()).reduce(colon_ideal(p));
}

namespace {

PointSet image_of(const MapAnalysis& a, const PointSet& y, std::size_t n)
{
    PointSet out(n);
    for (std::size_t i : y.indices())
        out.set(a.images[i]);
    return out;
}

}  // namespace

MapAnalysis analyze_map(const FiniteSpace& domain, const FiniteSpace& ring_space, MapKind kind)
{
    const SpaceKind want = kind == MapKind::Rho ? SpaceKind::PrimarySpectrum : SpaceKind::PrimeSpectrum;
    if (domain.kind() != want || ring_space.kind() != SpaceKind::RingSpectrum)
        throw InputError("map analysis got spaces of the wrong kind");
    const GradedModule& m = domain.module();
    const ReducedRing rbar = reduced_ring(m);
    if (!(rbar.ring() == ring_space.ring()))
        throw InputError("ring space is not Spec(R/Ann(M))");

    MapAnalysis a;
    a.kind = kind;
    const std::size_t n = ring_space.size();
    for (std::size_t i = 0; i < domain.size(); ++i) {
        const Ideal colon = kind == MapKind::Rho ? domain.point_radical_colon(i) : colon_ideal(domain.points()[i]);
        const auto idx = ring_space.index_of(rbar.reduce(colon));
        if (!idx)
            throw std::logic_error("image is not a prime of R/Ann(M)");
        a.images.push_back(*idx);
    }

    std::set<std::size_t> hit(a.images.begin(), a.images.end());
    a.injective = hit.size() == a.images.size();
    a.surjective = hit.size() == n;

    a.continuous = true;
    for (const Ideal& ibar : rbar.ideals()) {
        PointSet pre(domain.size());
        const PointSet v = ring_space.ring_variety(ibar);
        for (std::size_t i = 0; i < domain.size(); ++i)
            pre.set(i, v.test(a.images[i]));
        PointSet var = domain.nu(ideal_times_module(rbar.lift(ibar, m.ring()), m));
        if (!(pre == var))
            a.continuous = false;
        a.continuity.push_back({ibar, pre, var});
    }

    if (a.surjective)
        for (const GradedSubmodule& sub : enumerate_graded_submodules(m)) {
            const PointSet v = domain.nu(sub);
            const PointSet rv = ring_space.ring_variety(rbar.reduce(colon_ideal(sub)));
            a.image_identities.push_back(
                {sub, image_of(a, v, n), rv, image_of(a, v.complement(), n), rv.complement()});
        }

    a.open = a.closed = true;
    for (const ClosedSet& c : domain.closed_sets()) {
        if (!ring_space.is_closed(image_of(a, c.set, n)))
            a.closed = false;
        if (!ring_space.is_closed(image_of(a, c.set.complement(), n).complement()))
            a.open = false;
    }
    a.homeomorphism = a.injective && a.surjective && a.continuous && a.open;

    for (std::size_t k = 0; k < n; ++k) {
        PointSet f(domain.size());
        for (std::size_t i = 0; i < domain.size(); ++i)
            f.set(i, a.images[i] == k);
        a.fibers.push_back({ring_space.ring_points()[k], f});
    }
    return a;
}

MapAnalysis analyze_map(const GradedModule& m, MapKind kind, std::size_t bound)
{
    const FiniteSpectra spectra(m, bound);
    const FiniteSpace domain =
        kind == MapKind::Rho ? FiniteSpace::primary_spectrum(spectra) : FiniteSpace::prime_spectrum(spectra);
    return analyze_map(domain, FiniteSpace::reduced_ring_spectrum(m), kind);
}

InducedMap induced_pi(const GradedHom& f, std::size_t bound)
{
    if (!f.is_epimorphism())
        throw UnsupportedMorphism("pi needs a graded epimorphism");
    const FiniteSpectra target_spectra(f.source(), bound);
    const FiniteSpectra source_spectra(f.target(), bound);
    InducedMap out{FiniteSpace::primary_spectrum(source_spectra), FiniteSpace::primary_spectrum(target_spectra),
                   {}, false, false, false, false, false, false, false};
    const FiniteSpace& src = out.source;
    const FiniteSpace& tgt = out.target;

    out.lands_in_spectrum = true;
    std::set<std::size_t> hit;
    for (const GradedSubmodule& q : src.points()) {
        auto idx = tgt.index_of(f.preimage(q));
        if (!idx)
            out.lands_in_spectrum = false;
        else
            hit.insert(*idx);
        out.images.push_back(idx);
    }
    out.injective = out.lands_in_spectrum && hit.size() == src.size();
    out.surjective = out.lands_in_spectrum && hit.size() == tgt.size();

    const GradedSubmodule kernel = f.kernel();
    out.pushes_forward = true;
    for (const GradedSubmodule& q : tgt.points())
        if (q.contains(kernel) && !src.index_of(f.image(q)))
            out.pushes_forward = false;

    out.continuous = out.lands_in_spectrum;
    if (out.lands_in_spectrum)
        for (const GradedSubmodule& n : target_spectra.submodules()) {
            const PointSet v = tgt.nu(n);
            PointSet pre = src.empty();
            for (std::size_t i = 0; i < src.size(); ++i)
                pre.set(i, v.test(*out.images[i]));
            const GradedSubmodule lifted = ideal_times_module(colon_ideal(n).radical(), f.target());
            if (!(pre == src.nu(lifted)))
                out.continuous = false;
        }

    out.closed = out.lands_in_spectrum;
    if (out.lands_in_spectrum)
        for (const ClosedSet& c : src.closed_sets()) {
            PointSet img = tgt.empty();
            for (std::size_t i : c.set.indices())
                img.set(*out.images[i]);
            if (!tgt.is_closed(img))
                out.closed = false;
        }
    out.homeomorphism = out.injective && out.surjective && out.continuous && out.closed;
    return out;
}

}  // namespace gps
