#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gps/arith.hpp"
#include "gps/int_matrix.hpp"

namespace gps {

inline constexpr std::size_t kDefaultEnumerationBound = 20000;

/// A degree is a tuple of residues, one per cyclic factor of the grading group.
using Degree = std::vector<Int>;

/// Finite abelian grading group Z_{k1} x ... x Z_{kt}, written additively.
class GradingGroup {
public:
    GradingGroup() = default;
    explicit GradingGroup(std::vector<Int> cyclic_orders);

    const std::vector<Int>& cyclic_orders() const { return orders_; }
    Int size() const;
    Degree identity() const { return Degree(orders_.size(), 0); }
    Degree add(const Degree& a, const Degree& b) const;
    bool contains(const Degree& d) const;
    std::vector<Degree> elements() const;

    friend bool operator==(const GradingGroup&, const GradingGroup&) = default;

private:
    std::vector<Int> orders_;
};

/// Z (modulus 0) or Z_n, concentrated in the identity degree. Modulus 1 is
/// the zero ring and only appears as R/Ann(0).
class BaseRing {
public:
    static BaseRing integers() { return BaseRing(0); }
    static BaseRing modular(Int n);

    Int modulus() const { return modulus_; }
    bool is_finite() const { return modulus_ != 0; }
    bool is_integers() const { return modulus_ == 0; }
    Int reduce(Int r) const;
    bool is_unit(Int r) const;
    bool is_nilpotent(Int r) const;
    bool is_field() const;
    bool is_domain() const;
    std::vector<Int> elements() const;

    friend bool operator==(const BaseRing&, const BaseRing&) = default;

private:
    explicit BaseRing(Int m) : modulus_(m) {}
    Int modulus_ = 0;
};

/// Principal ideal with canonical generator: |c| over Z, gcd(c, n) over Z_n
/// (so the zero ideal of Z_n is stored as n).
class Ideal {
public:
    Ideal(BaseRing ring, Int raw);
    static Ideal zero(BaseRing ring) { return Ideal(ring, 0); }
    static Ideal unit(BaseRing ring) { return Ideal(ring, 1); }

    const BaseRing& ring() const { return ring_; }
    Int generator() const { return gen_; }

    bool contains(Int r) const;
    bool is_subset_of(const Ideal& other) const;
    bool is_zero() const;
    bool is_unit() const { return gen_ == 1; }
    bool is_prime() const;
    bool is_maximal() const;

    Ideal radical() const;
    Ideal intersect(const Ideal& other) const;
    Ideal sum(const Ideal& other) const;
    Ideal product(const Ideal& other) const;

    std::string to_string() const;

    friend bool operator==(const Ideal&, const Ideal&) = default;
    friend std::strong_ordering operator<=>(const Ideal& a, const Ideal& b) { return a.gen_ <=> b.gen_; }

private:
    BaseRing ring_;
    Int gen_;
};

Ideal ideal_radical(const Ideal& ideal);

struct Factor {
    Int order;  // 0 encodes a free factor Z
    Degree degree;
    friend bool operator==(const Factor&, const Factor&) = default;
};

/// Direct sum of cyclic factors, each homogeneous of a fixed degree. Cheap to
/// copy; the data is shared and immutable.
class GradedModule {
public:
    GradedModule(BaseRing ring, GradingGroup group, std::vector<Factor> factors);

    const BaseRing& ring() const;
    const GradingGroup& group() const;
    const std::vector<Factor>& factors() const;
    std::size_t rank() const { return factors().size(); }

    bool is_finite() const;
    Int cardinality() const;
    Int exponent() const;

    // Slots are the distinct degrees carrying a factor, ascending.
    std::size_t slot_count() const;
    const Degree& slot_degree(std::size_t slot) const;
    const std::vector<std::size_t>& slot_factors(std::size_t slot) const;
    std::optional<std::size_t> slot_of(const Degree& d) const;
    std::size_t slot_of_factor(std::size_t factor) const;
    const std::vector<Int>& slot_moduli(std::size_t slot) const;
    const IntMatrix& slot_relations(std::size_t slot) const;
    Int slot_cardinality(std::size_t slot) const;

    friend bool operator==(const GradedModule& a, const GradedModule& b);

private:
    struct Data;
    std::shared_ptr<const Data> d_;
};

/// Coordinates of an element of a GradedModule, reduced into [0, order) on
/// every finite factor.
class ModuleElement {
public:
    ModuleElement(const GradedModule& module, std::vector<Int> coordinates);

    const std::vector<Int>& coordinates() const { return coords_; }
    bool is_zero() const;

    friend bool operator==(const ModuleElement&, const ModuleElement&) = default;
    friend auto operator<=>(const ModuleElement&, const ModuleElement&) = default;

private:
    std::vector<Int> coords_;
};

struct HomogeneousComponent {
    Degree degree;
    ModuleElement element;
};

// Nonzero homogeneous components, ascending by degree.
std::vector<HomogeneousComponent> homogeneous_components(const GradedModule& module, const ModuleElement& x);
bool is_homogeneous(const GradedModule& module, const ModuleElement& x);

/// Graded submodule stored as one canonical Hermite basis per slot. Each basis
/// spans the full preimage lattice in Z^k, relation rows included, so equal
/// submodules have identical bases.
class GradedSubmodule {
public:
    static GradedSubmodule zero(const GradedModule& module);
    static GradedSubmodule whole(const GradedModule& module);
    static GradedSubmodule from_generators(const GradedModule& module, std::span<const ModuleElement> gens);
    // Any lattices per slot; relation rows are adjoined before reduction.
    static GradedSubmodule from_slot_lattices(const GradedModule& module, std::vector<IntMatrix> lattices);

    const GradedModule& module() const { return module_; }
    std::size_t slot_count() const { return blocks_.size(); }
    const IntMatrix& block(std::size_t slot) const { return blocks_[slot]; }

    // Canonical generators: Hermite rows reduced mod the factor orders, with
    // rows that vanish in M dropped, embedded as full coordinate vectors.
    std::vector<ModuleElement> generators() const;

    bool is_zero() const;
    bool is_whole() const;
    bool is_proper() const { return !is_whole(); }

    bool contains(const ModuleElement& x) const;
    bool contains(const GradedSubmodule& other) const;

    GradedSubmodule sum(const GradedSubmodule& other) const;
    GradedSubmodule intersect(const GradedSubmodule& other) const;
    GradedSubmodule scaled(const Ideal& ideal) const;

    Int cardinality() const;

    friend bool operator==(const GradedSubmodule& a, const GradedSubmodule& b);
    friend std::strong_ordering operator<=>(const GradedSubmodule& a, const GradedSubmodule& b);

private:
    GradedSubmodule(GradedModule module, std::vector<IntMatrix> blocks)
        : module_(std::move(module)), blocks_(std::move(blocks))
    {
    }
    void require_same_module(const GradedSubmodule& other) const;

    GradedModule module_;
    std::vector<IntMatrix> blocks_;

    friend std::vector<GradedSubmodule> enumerate_graded_submodules(const GradedModule&, std::size_t);
};

// Sort key for enumerations: ascending cardinality, ties by basis order.
bool canonical_less(const GradedSubmodule& a, const GradedSubmodule& b);

Ideal colon_ideal(const GradedSubmodule& n);
// Generator of { r in Z : r * e_factor lies in N }; equals the factor order
// when only multiples of the order do.
Int factor_conductor(const GradedSubmodule& n, std::size_t factor);
Ideal annihilator(const GradedModule& module);
GradedSubmodule ideal_times_module(const Ideal& ideal, const GradedModule& module);

struct QuotientInvariants {
    Int free_rank = 0;
    std::vector<Int> torsion;  // d_1 | d_2 | ..., each >= 2
    friend bool operator==(const QuotientInvariants&, const QuotientInvariants&) = default;
};

QuotientInvariants quotient_invariants(const GradedSubmodule& n, std::size_t slot);
// Degrees without factors give the zero quotient.
QuotientInvariants quotient_invariants(const GradedSubmodule& n, const Degree& degree);

std::vector<GradedSubmodule> enumerate_graded_submodules(const GradedModule& module,
                                                         std::size_t bound = kDefaultEnumerationBound);

}  // namespace gps
