#include "gps/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "gps/errors.hpp"

namespace gps {

// ---------------------------------------------------------------- GradingGroup

GradingGroup::GradingGroup(std::vector<Int> cyclic_orders) : orders_(std::move(cyclic_orders))
{
    for (Int k : orders_)
        if (k < 1)
            throw InputError("grading group orders must be >= 1");
}

Int GradingGroup::size() const
{
    Int s = 1;
    for (Int k : orders_)
        s = checked_mul(s, k);
    return s;
}

Degree GradingGroup::add(const Degree& a, const Degree& b) const
{
    if (!contains(a) || !contains(b))
        throw InputError("degree is not an element of the grading group");
    Degree out(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i)
        out[i] = (a[i] + b[i]) % orders_[i];
    return out;
}

bool GradingGroup::contains(const Degree& d) const
{
    if (d.size() != orders_.size())
        return false;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] < 0 || d[i] >= orders_[i])
            return false;
    return true;
}

std::vector<Degree> GradingGroup::elements() const
{
    std::vector<Degree> out;
    Degree cur(orders_.size(), 0);
    for (;;) {
        out.push_back(cur);
        std::size_t i = orders_.size();
        while (i > 0) {
            --i;
            if (++cur[i] < orders_[i])
                break;
            cur[i] = 0;
            if (i == 0)
                return out;
        }
        if (orders_.empty())
            return out;
    }
}

// ---------------------------------------------------------------- BaseRing

BaseRing BaseRing::modular(Int n)
{
    if (n < 1)
        throw InputError("ring modulus must be >= 1");
    return BaseRing(n);
}

Int BaseRing::reduce(Int r) const { return modulus_ == 0 ? r : mod_floor(r, modulus_); }

bool BaseRing::is_unit(Int r) const
{
    if (modulus_ == 0)
        return r == 1 || r == -1;
    return gcd(r, modulus_) == 1;
}

bool BaseRing::is_nilpotent(Int r) const
{
    if (modulus_ == 0)
        return r == 0;
    return reduce(r) % squarefree_kernel(modulus_) == 0;
}

bool BaseRing::is_field() const { return modulus_ != 0 && is_prime(modulus_); }

bool BaseRing::is_domain() const { return modulus_ == 0 || is_field(); }

std::vector<Int> BaseRing::elements() const
{
    if (modulus_ == 0)
        throw InfiniteModuleError("the ring Z has infinitely many elements");
    std::vector<Int> out(static_cast<std::size_t>(modulus_));
    for (Int i = 0; i < modulus_; ++i)
        out[static_cast<std::size_t>(i)] = i;
    return out;
}

// ---------------------------------------------------------------- Ideal

Ideal::Ideal(BaseRing ring, Int raw) : ring_(ring), gen_(0)
{
    if (ring_.is_integers())
        gen_ = raw < 0 ? checked_neg(raw) : raw;
    else
        gen_ = gcd(raw, ring_.modulus());
}

bool Ideal::contains(Int r) const
{
    if (gen_ == 0)
        return r == 0;
    return r % gen_ == 0;
}

bool Ideal::is_subset_of(const Ideal& other) const
{
    if (!(ring_ == other.ring_))
        throw InputError("ideals live in different rings");
    return other.contains(gen_);
}

bool Ideal::is_zero() const { return ring_.is_integers() ? gen_ == 0 : gen_ == ring_.modulus(); }

bool Ideal::is_prime() const
{
    if (ring_.is_integers() && gen_ == 0)
        return true;
    return gps::is_prime(gen_);
}

bool Ideal::is_maximal() const { return gen_ != 0 && gps::is_prime(gen_); }

Ideal Ideal::radical() const { return Ideal(ring_, squarefree_kernel(gen_)); }

Ideal Ideal::intersect(const Ideal& other) const
{
    if (!(ring_ == other.ring_))
        throw InputError("ideals live in different rings");
    return Ideal(ring_, lcm(gen_, other.gen_));
}

Ideal Ideal::sum(const Ideal& other) const
{
    if (!(ring_ == other.ring_))
        throw InputError("ideals live in different rings");
    return Ideal(ring_, gcd(gen_, other.gen_));
}

Ideal Ideal::product(const Ideal& other) const
{
    if (!(ring_ == other.ring_))
        throw InputError("ideals live in different rings");
    return Ideal(ring_, checked_mul(gen_, other.gen_));
}

std::string Ideal::to_string() const
{
    std::ostringstream os;
    os << '(' << (is_zero() ? 0 : gen_) << ')';
    return os.str();
}

Ideal ideal_radical(const Ideal& ideal) { return ideal.radical(); }

// ---------------------------------------------------------------- GradedModule

struct GradedModule::Data {
    BaseRing ring;
    GradingGroup group;
    std::vector<Factor> factors;
    std::vector<Degree> slot_degrees;
    std::vector<std::vector<std::size_t>> slot_factors;
    std::vector<std::vector<Int>> slot_moduli;
    std::vector<IntMatrix> slot_relations;
    std::vector<std::size_t> factor_slot;
};

GradedModule::GradedModule(BaseRing ring, GradingGroup group, std::vector<Factor> factors)
{
    auto d = std::make_shared<Data>(Data{ring, std::move(group), std::move(factors), {}, {}, {}, {}, {}});
    std::map<Degree, std::vector<std::size_t>> by_degree;
    for (std::size_t i = 0; i < d->factors.size(); ++i) {
        const Factor& f = d->factors[i];
        if (!d->group.contains(f.degree))
            throw InputError("factor degree is not an element of the grading group");
        if (f.order < 0 || f.order == 1)
            throw InputError("factor order must be 0 (for Z) or at least 2");
        if (ring.is_finite()) {
            if (f.order == 0 || ring.modulus() % f.order != 0) {
                std::ostringstream os;
                os << "factor order " << f.order << " does not divide ring modulus " << ring.modulus();
                throw InputError(os.str());
            }
        }
        by_degree[f.degree].push_back(i);
    }
    d->factor_slot.assign(d->factors.size(), 0);
    for (auto& [deg, idx] : by_degree) {
        const std::size_t slot = d->slot_degrees.size();
        d->slot_degrees.push_back(deg);
        std::vector<Int> moduli;
        IntMatrix rel(0, idx.size());
        std::vector<Int> row(idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j) {
            d->factor_slot[idx[j]] = slot;
            const Int n = d->factors[idx[j]].order;
            moduli.push_back(n);
            if (n > 0) {
                std::fill(row.begin(), row.end(), 0);
                row[j] = n;
                rel.append_row(row);
            }
        }
        d->slot_factors.push_back(idx);
        d->slot_moduli.push_back(std::move(moduli));
        d->slot_relations.push_back(std::move(rel));
    }
    d_ = std::move(d);
}

const BaseRing& GradedModule::ring() const { return d_->ring; }
const GradingGroup& GradedModule::group() const { return d_->group; }
const std::vector<Factor>& GradedModule::factors() const { return d_->factors; }

bool GradedModule::is_finite() const
{
    return std::none_of(d_->factors.begin(), d_->factors.end(), [](const Factor& f) { return f.order == 0; });
}

Int GradedModule::cardinality() const
{
    if (!is_finite())
        throw InfiniteModuleError("module is infinite");
    Int c = 1;
    for (const Factor& f : d_->factors)
        c = checked_mul(c, f.order);
    return c;
}

Int GradedModule::exponent() const
{
    Int e = 1;
    for (const Factor& f : d_->factors) {
        if (f.order == 0)
            return 0;
        e = lcm(e, f.order);
    }
    return e;
}

std::size_t GradedModule::slot_count() const { return d_->slot_degrees.size(); }
const Degree& GradedModule::slot_degree(std::size_t slot) const { return d_->slot_degrees.at(slot); }
const std::vector<std::size_t>& GradedModule::slot_factors(std::size_t slot) const
{
    return d_->slot_factors.at(slot);
}

std::optional<std::size_t> GradedModule::slot_of(const Degree& d) const
{
    auto it = std::lower_bound(d_->slot_degrees.begin(), d_->slot_degrees.end(), d);
    if (it == d_->slot_degrees.end() || *it != d)
        return std::nullopt;
    return static_cast<std::size_t>(it - d_->slot_degrees.begin());
}

std::size_t GradedModule::slot_of_factor(std::size_t factor) const { return d_->factor_slot.at(factor); }
const std::vector<Int>& GradedModule::slot_moduli(std::size_t slot) const { return d_->slot_moduli.at(slot); }
const IntMatrix& GradedModule::slot_relations(std::size_t slot) const { return d_->slot_relations.at(slot); }

Int GradedModule::slot_cardinality(std::size_t slot) const
{
    Int c = 1;
    for (Int n : slot_moduli(slot)) {
        if (n == 0)
            throw InfiniteModuleError("module is infinite");
        c = checked_mul(c, n);
    }
    return c;
}

bool operator==(const GradedModule& a, const GradedModule& b)
{
    if (a.d_ == b.d_)
        return true;
    return a.d_->ring == b.d_->ring && a.d_->group == b.d_->group && a.d_->factors == b.d_->factors;
}

// ---------------------------------------------------------------- ModuleElement

ModuleElement::ModuleElement(const GradedModule& module, std::vector<Int> coordinates)
    : coords_(std::move(coordinates))
{
    if (coords_.size() != module.rank()) {
        std::ostringstream os;
        os << "coordinate arity mismatch: module has " << module.rank() << " factors, vector has "
           << coords_.size();
        throw InputError(os.str());
    }
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (Int n = module.factors()[i].order; n > 0)
            coords_[i] = mod_floor(coords_[i], n);
}

bool ModuleElement::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](Int x) { return x == 0; });
}

std::vector<HomogeneousComponent> homogeneous_components(const GradedModule& module, const ModuleElement& x)
{
    if (x.coordinates().size() != module.rank())
        throw InputError("coordinate arity mismatch");
    std::vector<HomogeneousComponent> out;
    for (std::size_t s = 0; s < module.slot_count(); ++s) {
        std::vector<Int> v(module.rank(), 0);
        bool nonzero = false;
        for (std::size_t i : module.slot_factors(s)) {
            v[i] = x.coordinates()[i];
            nonzero = nonzero || v[i] != 0;
        }
        if (nonzero)
            out.push_back({module.slot_degree(s), ModuleElement(module, std::move(v))});
    }
    return out;
}

bool is_homogeneous(const GradedModule& module, const ModuleElement& x)
{
    return homogeneous_components(module, x).size() <= 1;
}

// ---------------------------------------------------------------- GradedSubmodule

namespace {

IntMatrix canonical_block(const GradedModule& m, std::size_t slot, IntMatrix lattice)
{
    lattice.append_rows(m.slot_relations(slot));
    return hermite_form(std::move(lattice), m.slot_moduli(slot));
}

std::vector<Int> slot_part(const GradedModule& m, std::size_t slot, const std::vector<Int>& coords)
{
    std::vector<Int> out;
    for (std::size_t i : m.slot_factors(slot))
        out.push_back(coords[i]);
    return out;
}

}  // namespace

GradedSubmodule GradedSubmodule::zero(const GradedModule& module)
{
    std::vector<IntMatrix> blocks;
    for (std::size_t s = 0; s < module.slot_count(); ++s)
        blocks.push_back(canonical_block(module, s, IntMatrix(0, module.slot_factors(s).size())));
    return GradedSubmodule(module, std::move(blocks));
}

GradedSubmodule GradedSubmodule::whole(const GradedModule& module)
{
    std::vector<IntMatrix> blocks;
    for (std::size_t s = 0; s < module.slot_count(); ++s)
        blocks.push_back(IntMatrix::identity(module.slot_factors(s).size()));
    return GradedSubmodule(module, std::move(blocks));
}

GradedSubmodule GradedSubmodule::from_generators(const GradedModule& module, std::span<const ModuleElement> gens)
{
    std::vector<IntMatrix> lattices;
    for (std::size_t s = 0; s < module.slot_count(); ++s)
        lattices.emplace_back(0, module.slot_factors(s).size());
    for (const ModuleElement& g : gens) {
        if (g.coordinates().size() != module.rank())
            throw InputError("coordinate arity mismatch");
        for (std::size_t s = 0; s < module.slot_count(); ++s) {
            auto part = slot_part(module, s, g.coordinates());
            if (std::any_of(part.begin(), part.end(), [](Int x) { return x != 0; }))
                lattices[s].append_row(part);
        }
    }
    return from_slot_lattices(module, std::move(lattices));
}

GradedSubmodule GradedSubmodule::from_slot_lattices(const GradedModule& module, std::vector<IntMatrix> lattices)
{
    if (lattices.size() != module.slot_count())
        throw InputError("one lattice per degree slot expected");
    std::vector<IntMatrix> blocks;
    for (std::size_t s = 0; s < module.slot_count(); ++s) {
        if (lattices[s].cols() != module.slot_factors(s).size())
            throw InputError("lattice width does not match the degree slot");
        blocks.push_back(canonical_block(module, s, std::move(lattices[s])));
    }
    return GradedSubmodule(module, std::move(blocks));
}

std::vector<ModuleElement> GradedSubmodule::generators() const
{
    std::vector<ModuleElement> out;
    for (std::size_t s = 0; s < blocks_.size(); ++s) {
        const auto& idx = module_.slot_factors(s);
        const auto& moduli = module_.slot_moduli(s);
        for (std::size_t r = 0; r < blocks_[s].rows(); ++r) {
            std::vector<Int> v(module_.rank(), 0);
            bool nonzero = false;
            for (std::size_t j = 0; j < idx.size(); ++j) {
                Int x = blocks_[s](r, j);
                if (moduli[j] > 0)
                    x = mod_floor(x, moduli[j]);
                v[idx[j]] = x;
                nonzero = nonzero || x != 0;
            }
            if (!nonzero)
                continue;
            ModuleElement e(module_, std::move(v));
            if (std::find(out.begin(), out.end(), e) == out.end())
                out.push_back(std::move(e));
        }
    }
    return out;
}

bool GradedSubmodule::is_zero() const { return *this == zero(module_); }

bool GradedSubmodule::is_whole() const
{
    for (const auto& b : blocks_)
        if (!(b == IntMatrix::identity(b.cols())))
            return false;
    return true;
}

bool GradedSubmodule::contains(const ModuleElement& x) const
{
    if (x.coordinates().size() != module_.rank())
        throw InputError("coordinate arity mismatch");
    for (std::size_t s = 0; s < blocks_.size(); ++s)
        if (!hermite_contains(blocks_[s], slot_part(module_, s, x.coordinates())))
            return false;
    return true;
}

void GradedSubmodule::require_same_module(const GradedSubmodule& other) const
{
    if (!(module_ == other.module_))
        throw ModuleMismatch();
}

bool GradedSubmodule::contains(const GradedSubmodule& other) const
{
    require_same_module(other);
    for (std::size_t s = 0; s < blocks_.size(); ++s)
        for (std::size_t r = 0; r < other.blocks_[s].rows(); ++r)
            if (!hermite_contains(blocks_[s], other.blocks_[s].row(r)))
                return false;
    return true;
}

GradedSubmodule GradedSubmodule::sum(const GradedSubmodule& other) const
{
    require_same_module(other);
    std::vector<IntMatrix> blocks;
    for (std::size_t s = 0; s < blocks_.size(); ++s) {
        IntMatrix m = blocks_[s];
        m.append_rows(other.blocks_[s]);
        blocks.push_back(hermite_form(std::move(m), module_.slot_moduli(s)));
    }
    return GradedSubmodule(module_, std::move(blocks));
}

GradedSubmodule GradedSubmodule::intersect(const GradedSubmodule& other) const
{
    require_same_module(other);
    std::vector<IntMatrix> blocks;
    for (std::size_t s = 0; s < blocks_.size(); ++s) {
        IntMatrix m = lattice_intersection(blocks_[s], other.blocks_[s], module_.slot_moduli(s));
        blocks.push_back(canonical_block(module_, s, std::move(m)));
    }
    return GradedSubmodule(module_, std::move(blocks));
}

GradedSubmodule GradedSubmodule::scaled(const Ideal& ideal) const
{
    if (!(ideal.ring() == module_.ring()))
        throw InputError("ideal and module are over different rings");
    const Int c = ideal.generator();
    std::vector<IntMatrix> lattices;
    for (const auto& b : blocks_) {
        IntMatrix m = b;
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(r, j) = checked_mul(m(r, j), c);
        lattices.push_back(std::move(m));
    }
    return from_slot_lattices(module_, std::move(lattices));
}

Int GradedSubmodule::cardinality() const
{
    Int total = 1;
    for (std::size_t s = 0; s < blocks_.size(); ++s) {
        Int index = 1;
        for (std::size_t r = 0; r < blocks_[s].rows(); ++r)
            index = checked_mul(index, blocks_[s](r, r));
        total = checked_mul(total, module_.slot_cardinality(s) / index);
    }
    return total;
}

bool operator==(const GradedSubmodule& a, const GradedSubmodule& b)
{
    return a.blocks_ == b.blocks_ && a.module_ == b.module_;
}

std::strong_ordering operator<=>(const GradedSubmodule& a, const GradedSubmodule& b)
{
    return std::lexicographical_compare_three_way(a.blocks_.begin(), a.blocks_.end(), b.blocks_.begin(),
                                                  b.blocks_.end());
}

bool canonical_less(const GradedSubmodule& a, const GradedSubmodule& b)
{
    if (a.module().is_finite()) {
        const Int ca = a.cardinality(), cb = b.cardinality();
        if (ca != cb)
            return ca < cb;
    }
    return (a <=> b) < 0;
}

// ---------------------------------------------------------------- colon, invariants

namespace {

// Generator of { r in Z : r * e_j lies in the lattice }.
Int conductor_of_column(const IntMatrix& block, std::size_t j, const std::vector<Int>& moduli)
{
    const std::size_t k = block.cols();
    std::vector<std::size_t> order;
    std::vector<Int> perm_moduli;
    for (std::size_t c = 0; c < k; ++c)
        if (c != j)
            order.push_back(c);
    order.push_back(j);
    for (std::size_t c : order)
        perm_moduli.push_back(moduli[c]);
    IntMatrix h = hermite_form(block.select_cols(order), perm_moduli);
    if (h.rows() == 0)
        return 0;
    auto last = h.row(h.rows() - 1);
    for (std::size_t c = 0; c + 1 < k; ++c)
        if (last[c] != 0)
            return 0;
    return last[k - 1];
}

}  // namespace

Int factor_conductor(const GradedSubmodule& n, std::size_t factor)
{
    const GradedModule& m = n.module();
    if (factor >= m.rank())
        throw InputError("factor index out of range");
    const std::size_t s = m.slot_of_factor(factor);
    const auto& idx = m.slot_factors(s);
    const auto j = static_cast<std::size_t>(std::find(idx.begin(), idx.end(), factor) - idx.begin());
    return conductor_of_column(n.block(s), j, m.slot_moduli(s));
}

Ideal colon_ideal(const GradedSubmodule& n)
{
    const GradedModule& m = n.module();
    Ideal out = Ideal::unit(m.ring());
    for (std::size_t s = 0; s < m.slot_count(); ++s)
        for (std::size_t j = 0; j < m.slot_factors(s).size(); ++j)
            out = out.intersect(Ideal(m.ring(), conductor_of_column(n.block(s), j, m.slot_moduli(s))));
    return out;
}

Ideal annihilator(const GradedModule& module) { return colon_ideal(GradedSubmodule::zero(module)); }

GradedSubmodule ideal_times_module(const Ideal& ideal, const GradedModule& module)
{
    return GradedSubmodule::whole(module).scaled(ideal);
}

QuotientInvariants quotient_invariants(const GradedSubmodule& n, std::size_t slot)
{
    QuotientInvariants out;
    for (Int d : smith_form(n.block(slot)).diagonal) {
        if (d == 0)
            ++out.free_rank;
        else if (d > 1)
            out.torsion.push_back(d);
    }
    return out;
}

QuotientInvariants quotient_invariants(const GradedSubmodule& n, const Degree& degree)
{
    if (auto slot = n.module().slot_of(degree))
        return quotient_invariants(n, *slot);
    return {};
}

// ---------------------------------------------------------------- enumeration

namespace {

std::vector<IntMatrix> slot_subgroups(const GradedModule& m, std::size_t slot)
{
    const auto& moduli = m.slot_moduli(slot);
    const std::size_t k = moduli.size();
    const IntMatrix& rel = m.slot_relations(slot);

    std::set<IntMatrix> cyclic_seen;
    std::vector<IntMatrix> cyclic;
    std::vector<Int> x(k, 0);
    for (;;) {
        IntMatrix g = rel;
        g.append_row(x);
        IntMatrix h = hermite_form(std::move(g), moduli);
        if (cyclic_seen.insert(h).second)
            cyclic.push_back(std::move(h));
        std::size_t i = k;
        bool done = true;
        while (i > 0) {
            --i;
            if (++x[i] < moduli[i]) {
                done = false;
                break;
            }
            x[i] = 0;
        }
        if (done)
            break;
    }

    std::set<IntMatrix> seen;
    std::vector<IntMatrix> all;
    IntMatrix zero = hermite_form(rel, moduli);
    seen.insert(zero);
    all.push_back(zero);
    for (std::size_t q = 0; q < all.size(); ++q)
        for (const IntMatrix& c : cyclic) {
            IntMatrix j = all[q];
            j.append_rows(c);
            IntMatrix h = hermite_form(std::move(j), moduli);
            if (seen.insert(h).second)
                all.push_back(std::move(h));
        }
    return all;
}

}  // namespace

std::vector<GradedSubmodule> enumerate_graded_submodules(const GradedModule& module, std::size_t bound)
{
    if (!module.is_finite())
        throw InfiniteModuleError("module is infinite; graded submodules cannot be enumerated");
    if (module.cardinality() > static_cast<Int>(bound)) {
        std::ostringstream os;
        os << "module has " << module.cardinality() << " elements, above the enumeration bound " << bound;
        throw EnumerationBoundExceeded(os.str());
    }
    std::vector<std::vector<IntMatrix>> per_slot;
    for (std::size_t s = 0; s < module.slot_count(); ++s)
        per_slot.push_back(slot_subgroups(module, s));

    std::vector<GradedSubmodule> out;
    std::vector<std::size_t> pick(per_slot.size(), 0);
    for (;;) {
        std::vector<IntMatrix> blocks;
        for (std::size_t s = 0; s < per_slot.size(); ++s)
            blocks.push_back(per_slot[s][pick[s]]);
        out.push_back(GradedSubmodule(module, std::move(blocks)));
        std::size_t s = per_slot.size();
        bool done = true;
        while (s > 0) {
            --s;
            if (++pick[s] < per_slot[s].size()) {
                done = false;
                break;
            }
            pick[s] = 0;
        }
        if (done)
            break;
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

}  // namespace gps
