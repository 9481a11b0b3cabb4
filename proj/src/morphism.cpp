#include "gps/morphism.hpp"

#include <algorithm>

#include "gps/errors.hpp"

namespace gps {

GradedHom::GradedHom(GradedModule source, GradedModule target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix))
{
    if (!(source_.ring() == target_.ring()) || !(source_.group() == target_.group()))
        throw UnsupportedMorphism("graded maps must share ring and grading group");
    if (matrix_.rows() != source_.rank() || matrix_.cols() != target_.rank())
        throw InputError("map matrix has the wrong shape");
    const auto& sf = source_.factors();
    const auto& tf = target_.factors();
    for (std::size_t i = 0; i < sf.size(); ++i)
        for (std::size_t j = 0; j < tf.size(); ++j) {
            Int& a = matrix_(i, j);
            if (tf[j].order > 0)
                a = mod_floor(a, tf[j].order);
            if (a == 0)
                continue;
            if (sf[i].degree != tf[j].degree)
                throw UnsupportedMorphism("map does not preserve degrees");
            // n_i * a must vanish in the target factor
            const Int ni = sf[i].order;
            const bool killed = tf[j].order == 0 ? ni == 0 : checked_mul(ni, a) % tf[j].order == 0;
            if (!killed)
                throw UnsupportedMorphism("map is not well defined on the source relations");
        }
}

GradedHom GradedHom::identity(const GradedModule& module)
{
    return GradedHom(module, module, IntMatrix::identity(module.rank()));
}

GradedHom GradedHom::permutation(const GradedModule& module, std::vector<std::size_t> perm)
{
    const std::size_t n = module.rank();
    if (perm.size() != n)
        throw UnsupportedMorphism("permutation length differs from the number of factors");
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (perm[i] >= n || hit[perm[i]])
            throw UnsupportedMorphism("factor map is not a bijection, so not an epimorphism");
        hit[perm[i]] = true;
        if (!(module.factors()[i] == module.factors()[perm[i]]))
            throw UnsupportedMorphism("factor permutation must preserve order and degree");
    }
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, perm[i]) = 1;
    return GradedHom(module, module, std::move(m));
}

GradedHom GradedHom::compose(const GradedHom& first, const GradedHom& second)
{
    if (!(first.target_ == second.source_))
        throw UnsupportedMorphism("maps are not composable");
    return GradedHom(first.source_, second.target_, first.matrix_.multiply(second.matrix_));
}

ModuleElement GradedHom::apply(const ModuleElement& x) const
{
    if (x.coordinates().size() != source_.rank())
        throw InputError("coordinate arity mismatch");
    std::vector<Int> out(target_.rank(), 0);
    for (std::size_t i = 0; i < source_.rank(); ++i)
        for (std::size_t j = 0; j < target_.rank(); ++j)
            out[j] = checked_add(out[j], checked_mul(x.coordinates()[i], matrix_(i, j)));
    return ModuleElement(target_, std::move(out));
}

IntMatrix GradedHom::slot_matrix(std::size_t source_slot, std::size_t target_slot) const
{
    const auto& rows = source_.slot_factors(source_slot);
    const auto& cols = target_.slot_factors(target_slot);
    IntMatrix m(rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b)
            m(a, b) = matrix_(rows[a], cols[b]);
    return m;
}

GradedSubmodule GradedHom::image(const GradedSubmodule& n) const
{
    if (!(n.module() == source_))
        throw ModuleMismatch();
    std::vector<IntMatrix> lattices;
    for (std::size_t t = 0; t < target_.slot_count(); ++t) {
        auto s = source_.slot_of(target_.slot_degree(t));
        if (!s) {
            lattices.emplace_back(0, target_.slot_factors(t).size());
            continue;
        }
        lattices.push_back(n.block(*s).multiply(slot_matrix(*s, t)));
    }
    return GradedSubmodule::from_slot_lattices(target_, std::move(lattices));
}

GradedSubmodule GradedHom::preimage(const GradedSubmodule& n) const
{
    if (!(n.module() == target_))
        throw ModuleMismatch();
    std::vector<IntMatrix> lattices;
    for (std::size_t s = 0; s < source_.slot_count(); ++s) {
        auto t = target_.slot_of(source_.slot_degree(s));
        if (!t) {
            lattices.push_back(IntMatrix::identity(source_.slot_factors(s).size()));
            continue;
        }
        lattices.push_back(lattice_preimage(slot_matrix(s, *t), n.block(*t), source_.slot_moduli(s),
                                            target_.slot_moduli(*t)));
    }
    return GradedSubmodule::from_slot_lattices(source_, std::move(lattices));
}

GradedSubmodule GradedHom::kernel() const { return preimage(GradedSubmodule::zero(target_)); }

bool GradedHom::is_epimorphism() const { return image(GradedSubmodule::whole(source_)).is_whole(); }

bool GradedHom::is_injective() const { return kernel().is_zero(); }

QuotientModule quotient_module(const GradedSubmodule& k)
{
    const GradedModule& m = k.module();
    std::vector<Factor> factors;
    // (source factor, target factor, coefficient)
    struct Entry {
        std::size_t row;
        std::size_t col;
        Int value;
    };
    std::vector<Entry> entries;
    for (std::size_t s = 0; s < m.slot_count(); ++s) {
        const SmithForm snf = smith_form(k.block(s));
        const auto& idx = m.slot_factors(s);
        for (std::size_t t = 0; t < snf.diagonal.size(); ++t) {
            const Int d = snf.diagonal[t];
            if (d == 1)
                continue;
            const std::size_t col = factors.size();
            factors.push_back({d, m.slot_degree(s)});
            for (std::size_t j = 0; j < idx.size(); ++j)
                entries.push_back({idx[j], col, snf.right(j, t)});
        }
    }
    GradedModule target(m.ring(), m.group(), std::move(factors));
    IntMatrix mat(m.rank(), target.rank());
    for (const Entry& e : entries)
        mat(e.row, e.col) = e.value;
    return {target, GradedHom(m, target, std::move(mat))};
}

}  // namespace gps
