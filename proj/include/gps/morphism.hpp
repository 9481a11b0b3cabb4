#pragma once

#include <cstddef>
#include <vector>

#include "gps/algebra.hpp"

namespace gps {

struct QuotientModule;

/// Degree-preserving module map given by an integer matrix whose row i is the
/// image of the i-th source generator. Only the shapes needed here can be
/// built: identities, order- and degree-preserving factor permutations,
/// quotient projections, and compositions of those.
class GradedHom {
public:
    static GradedHom identity(const GradedModule& module);
    // Factor i is sent to factor perm[i]; both must carry the same order and degree.
    static GradedHom permutation(const GradedModule& module, std::vector<std::size_t> perm);
    // second o first
    static GradedHom compose(const GradedHom& first, const GradedHom& second);

    const GradedModule& source() const { return source_; }
    const GradedModule& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    ModuleElement apply(const ModuleElement& x) const;
    GradedSubmodule image(const GradedSubmodule& n) const;
    GradedSubmodule preimage(const GradedSubmodule& n) const;
    GradedSubmodule kernel() const;
    bool is_epimorphism() const;
    bool is_injective() const;

private:
    GradedHom(GradedModule source, GradedModule target, IntMatrix matrix);
    IntMatrix slot_matrix(std::size_t source_slot, std::size_t target_slot) const;

    GradedModule source_;
    GradedModule target_;
    IntMatrix matrix_;

    friend QuotientModule quotient_module(const GradedSubmodule& k);
};

struct QuotientModule {
    GradedModule module;
    GradedHom projection;
};

// M/K re-presented degree by degree through Smith form, together with the
// canonical projection (kernel K).
QuotientModule quotient_module(const GradedSubmodule& k);

}  // namespace gps
