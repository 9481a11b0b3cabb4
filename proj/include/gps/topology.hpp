#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gps/algebra.hpp"
#include "gps/spectra.hpp"

namespace gps {

/// Subset of a space's canonical point list.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::size_t n) : bits_(n) {}
    static PointSet full(std::size_t n);
    static PointSet singleton(std::size_t n, std::size_t i);

    std::size_t universe() const { return bits_.size(); }
    std::size_t count() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }
    bool is_full() const { return bits_.all(); }
    bool test(std::size_t i) const { return bits_.test(i); }
    void set(std::size_t i, bool v = true) { bits_.set(i, v); }

    PointSet unite(const PointSet& o) const { return PointSet(bits_ | o.bits_); }
    PointSet intersect(const PointSet& o) const { return PointSet(bits_ & o.bits_); }
    PointSet minus(const PointSet& o) const { return PointSet(bits_ - o.bits_); }
    PointSet complement() const { return PointSet(~bits_); }
    bool is_subset_of(const PointSet& o) const { return bits_.is_subset_of(o.bits_); }
    bool intersects(const PointSet& o) const { return bits_.intersects(o.bits_); }

    std::vector<std::size_t> indices() const;

    friend bool operator==(const PointSet& a, const PointSet& b) { return a.bits_ == b.bits_; }
    friend bool operator<(const PointSet& a, const PointSet& b);

private:
    explicit PointSet(boost::dynamic_bitset<> b) : bits_(std::move(b)) {}
    boost::dynamic_bitset<> bits_;
};

enum class SpaceKind { PrimarySpectrum, PrimeSpectrum, RingSpectrum };

std::string to_string(SpaceKind k);

/// One closed set together with the submodule (or ideal) whose variety it is.
struct ClosedSet {
    PointSet set;
    std::optional<GradedSubmodule> submodule;
    std::optional<Ideal> ideal;
};

struct BaseOpen {
    Int representative;
    PointSet set;
};

/// Finite Zariski space: PS_G(M), Spec_G(M) or Spec(R/Ann(M)).
class FiniteSpace {
public:
    static FiniteSpace primary_spectrum(const FiniteSpectra& spectra);
    static FiniteSpace prime_spectrum(const FiniteSpectra& spectra);
    // Spec(Z_m) for m >= 1; m = 1 is the zero ring, with no points.
    static FiniteSpace ring_spectrum(Int m);
    static FiniteSpace reduced_ring_spectrum(const GradedModule& m);

    SpaceKind kind() const { return kind_; }
    bool is_module_space() const { return kind_ != SpaceKind::RingSpectrum; }
    std::size_t size() const { return is_module_space() ? points_.size() : ring_points_.size(); }
    const GradedModule& module() const;
    const BaseRing& ring() const { return ring_; }

    const std::vector<GradedSubmodule>& points() const { return points_; }
    const std::vector<Ideal>& ring_points() const { return ring_points_; }
    // Gr_M(Q) and (Gr_M(Q):M) for module points.
    const GradedSubmodule& point_radical(std::size_t i) const { return radicals_.at(i); }
    const Ideal& point_radical_colon(std::size_t i) const { return radical_colons_.at(i); }
    std::optional<std::size_t> index_of(const GradedSubmodule& q) const;
    std::optional<std::size_t> index_of(const Ideal& p) const;

    const std::vector<ClosedSet>& closed_sets() const { return closed_; }
    const std::vector<BaseOpen>& base() const { return base_; }
    bool is_closed(const PointSet& y) const;

    PointSet full() const { return PointSet::full(size()); }
    PointSet empty() const { return PointSet(size()); }
    PointSet singleton(std::size_t i) const { return PointSet::singleton(size(), i); }

    // Module spaces: nu is {Q : (N:M) in (Gr_M(Q):M)}, nu_star is
    // {Q : N in Gr_M(Q)}. On the prime space these are V and V*.
    PointSet nu(const GradedSubmodule& n) const;
    PointSet nu_star(const GradedSubmodule& n) const;
    // S_r, the complement of nu(rM).
    PointSet base_open(Int r) const;
    // Ring spaces.
    PointSet ring_variety(const Ideal& i) const;
    PointSet ring_basic_open(Int r) const;

    // Intersection of the radicals of the members; M for the empty set.
    GradedSubmodule eta(const PointSet& y) const;
    // Intersection of the member ideals; the unit ideal for the empty set.
    Ideal gamma(const PointSet& y) const;

    // nu(eta(Y)) on module spaces, V(gamma(Y)) on ring spaces.
    PointSet closure(const PointSet& y) const;
    // Smallest member of the closed-set family containing Y.
    PointSet lattice_closure(const PointSet& y) const;

    // Irreducible in the subspace topology; the empty set is not.
    bool is_irreducible(const PointSet& y) const;

private:
    FiniteSpace(SpaceKind kind, BaseRing ring) : kind_(kind), ring_(ring) {}
    void build_module_space(const FiniteSpectra& spectra, const std::vector<GradedSubmodule>& points);
    void add_closed(PointSet s, std::optional<GradedSubmodule> n, std::optional<Ideal> i);
    void require_module(const char* what) const;
    void require_ring(const char* what) const;

    SpaceKind kind_;
    BaseRing ring_;
    std::optional<GradedModule> module_;
    std::vector<GradedSubmodule> points_;
    std::vector<GradedSubmodule> radicals_;
    std::vector<Ideal> radical_colons_;
    std::vector<Ideal> ring_points_;
    std::vector<ClosedSet> closed_;
    std::vector<BaseOpen> base_;
};

struct Component {
    PointSet set;
    std::vector<std::size_t> generic_points;
};

struct TopologyReport {
    bool connected = false;
    bool irreducible = false;
    bool t0 = false;
    bool t1 = false;
    bool sober = false;
    bool quasi_compact = false;
    // compact opens closed under finite intersection and forming a base
    bool hochster_opens = false;
    bool spectral = false;
    bool trivial = false;
    std::vector<Component> components;
};

TopologyReport analyze(const FiniteSpace& space);

// Points y of a closed set C with closure({y}) = C.
std::vector<std::size_t> generic_points(const FiniteSpace& space, const PointSet& c);

// Finite regime: exhaustive search over pairs for nu*(N) u nu*(N') = nu*(J).
// Infinite regime: true for multiplication modules, otherwise unknown.
Trilean is_primary_g_top(const GradedModule& m, std::size_t bound = kDefaultEnumerationBound);

}  // namespace gps
