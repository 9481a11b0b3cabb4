#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gps/morphism.hpp"
#include "gps/spectra.hpp"
#include "gps/topology.hpp"

namespace gps {

/// R/Ann(M) presented as Z_m, where (m) is the annihilator. m = 0 is Z
/// itself, which is only ever used pointwise.
struct ReducedRing {
    Int modulus = 0;

    BaseRing ring() const { return modulus == 0 ? BaseRing::integers() : BaseRing::modular(modulus); }
    bool materializable() const { return modulus != 0; }
    // I/Ann(M) for an ideal I of R containing Ann(M).
    Ideal reduce(const Ideal& i) const;
    // The ideal of R lying over an ideal of R/Ann(M).
    Ideal lift(const Ideal& reduced, const BaseRing& base) const;
    std::vector<Ideal> ideals() const;
};

ReducedRing reduced_ring(const GradedModule& m);

// (Gr_M(Q):M)/Ann(M). Q must lie in PS_G(M).
Ideal rho(const GradedSubmodule& q, const RadicalOptions& opts = {});
// (P:M)/Ann(M). P must be graded prime.
Ideal phi(const GradedSubmodule& p);

enum class MapKind { Rho, Phi };

struct ContinuityCheck {
    Ideal ideal;  // in R/Ann(M)
    PointSet preimage;
    PointSet variety;  // nu(IM) on the domain
};

struct ImageCheck {
    GradedSubmodule n;
    PointSet image_of_variety;
    PointSet ring_variety;
    PointSet image_of_complement;
    PointSet ring_complement;
};

struct Fiber {
    Ideal prime;
    PointSet points;
};

struct MapAnalysis {
    MapKind kind = MapKind::Rho;
    std::vector<std::size_t> images;  // ring-space index per domain point
    bool injective = false;
    bool surjective = false;
    bool continuous = false;
    std::vector<ContinuityCheck> continuity;
    // filled only when the map is surjective
    std::vector<ImageCheck> image_identities;
    bool open = false;
    bool closed = false;
    bool homeomorphism = false;
    std::vector<Fiber> fibers;
};

// The domain is the primary spectrum for rho and the prime spectrum for phi;
// the codomain is Spec(R/Ann(M)).
MapAnalysis analyze_map(const FiniteSpace& domain, const FiniteSpace& ring_space, MapKind kind);
MapAnalysis analyze_map(const GradedModule& m, MapKind kind, std::size_t bound = kDefaultEnumerationBound);

/// pi(Q') = f^-1(Q') from PS_G(M') to PS_G(M) for a graded epimorphism f.
struct InducedMap {
    FiniteSpace source;  // PS_G(M')
    FiniteSpace target;  // PS_G(M)
    std::vector<std::optional<std::size_t>> images;
    bool lands_in_spectrum = false;  // every f^-1(Q') is a point of PS_G(M)
    bool pushes_forward = false;     // f(Q) is a point of PS_G(M') when ker f is inside Q
    bool injective = false;
    bool surjective = false;
    bool continuous = false;  // pi^-1(nu(N)) = nu(Gr((N:M))M') for every N
    bool closed = false;
    bool homeomorphism = false;
};

InducedMap induced_pi(const GradedHom& f, std::size_t bound = kDefaultEnumerationBound);

}  // namespace gps
