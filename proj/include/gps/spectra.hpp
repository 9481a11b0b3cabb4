#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gps/algebra.hpp"

namespace gps {

/// Checkable counterexample attached to a negative answer.
struct Witness {
    std::string description;
    std::vector<GradedSubmodule> submodules;
    std::vector<Ideal> ideals;
};

class Trilean {
public:
    enum class Kind { True, False, Unknown };

    static Trilean yes() { return Trilean(Kind::True, std::nullopt, {}); }
    static Trilean no(Witness w) { return Trilean(Kind::False, std::move(w), {}); }
    static Trilean unknown(std::string reason) { return Trilean(Kind::Unknown, std::nullopt, std::move(reason)); }

    Kind kind() const { return kind_; }
    bool is_true() const { return kind_ == Kind::True; }
    bool is_false() const { return kind_ == Kind::False; }
    bool is_unknown() const { return kind_ == Kind::Unknown; }
    const std::optional<Witness>& witness() const { return witness_; }
    const std::string& reason() const { return reason_; }

private:
    Trilean(Kind k, std::optional<Witness> w, std::string r) : kind_(k), witness_(std::move(w)), reason_(std::move(r)) {}
    Kind kind_;
    std::optional<Witness> witness_;
    std::string reason_;
};

std::string to_string(Trilean::Kind k);

// Both predicates reject P = M with NotProperError.
bool is_graded_prime(const GradedSubmodule& p);
bool is_graded_primary(const GradedSubmodule& q);
// No graded submodule strictly between N and M. Read off the per-degree
// quotients, so it also works for infinite M.
bool is_graded_maximal(const GradedSubmodule& n);

enum class RadicalStrategy { Prime, FiniteQuotient, Multiplication };

/// Gr_M(N): a submodule, Top (no graded prime contains N), or Unknown.
class RadicalResult {
public:
    enum class Kind { Submodule, Top, Unknown };

    static RadicalResult submodule(GradedSubmodule n, RadicalStrategy via);
    static RadicalResult top(const GradedModule& m, RadicalStrategy via);
    static RadicalResult unknown(std::string reason, std::vector<std::string> attempted);

    Kind kind() const { return kind_; }
    bool is_known() const { return kind_ != Kind::Unknown; }
    std::optional<RadicalStrategy> strategy() const { return via_; }
    const std::string& reason() const { return reason_; }
    const std::vector<std::string>& attempted() const { return attempted_; }
    // Top yields M itself; Unknown throws RadicalUnknownError.
    const GradedSubmodule& value() const;

    friend bool operator==(const RadicalResult& a, const RadicalResult& b);

private:
    RadicalResult(Kind k, std::optional<GradedSubmodule> v, std::optional<RadicalStrategy> via, std::string reason,
                  std::vector<std::string> attempted);
    Kind kind_;
    std::optional<GradedSubmodule> value_;
    std::optional<RadicalStrategy> via_;
    std::string reason_;
    std::vector<std::string> attempted_;
};

struct RadicalOptions {
    std::size_t enumeration_bound = kDefaultEnumerationBound;
    // Evaluate every applicable strategy and require agreement.
    bool cross_check = true;
};

RadicalResult graded_radical_submodule(const GradedSubmodule& n, const RadicalOptions& opts = {});

// Throws RadicalUnknownError when Gr_M(Q) cannot be decided.
bool in_primary_spectrum(const GradedSubmodule& q, const RadicalOptions& opts = {});

enum class PointKind { Prime, PrimarySpectrum, Maximal, AllGraded };

std::vector<GradedSubmodule> enumerate_points(const GradedModule& m, PointKind kind,
                                              std::size_t bound = kDefaultEnumerationBound);

Trilean is_multiplication(const GradedModule& m, std::size_t bound = kDefaultEnumerationBound);
Trilean is_cancellation(const GradedModule& m);

/// Everything pointwise about a finite module, computed once: all graded
/// submodules, the prime and primary-spectrum points, and each point's
/// radical as the intersection of the primes above it.
class FiniteSpectra {
public:
    explicit FiniteSpectra(const GradedModule& m, std::size_t bound = kDefaultEnumerationBound);

    const GradedModule& module() const { return module_; }
    const std::vector<GradedSubmodule>& submodules() const { return submodules_; }
    const std::vector<GradedSubmodule>& primes() const { return primes_; }
    const std::vector<GradedSubmodule>& primary_points() const { return primary_points_; }
    const std::vector<GradedSubmodule>& maximal() const { return maximal_; }

    // Intersection of the cached primes containing n; M if there are none.
    GradedSubmodule radical(const GradedSubmodule& n) const;
    bool is_prime(const GradedSubmodule& n) const;

private:
    GradedModule module_;
    std::vector<GradedSubmodule> submodules_;
    std::vector<GradedSubmodule> primes_;
    std::vector<GradedSubmodule> primary_points_;
    std::vector<GradedSubmodule> maximal_;
};

}  // namespace gps
