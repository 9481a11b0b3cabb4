#include "gps/int_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gps {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0)
{
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

void IntMatrix::append_row(std::span<const Int> values)
{
    if (values.size() != cols_)
        throw std::invalid_argument("IntMatrix::append_row: width mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

void IntMatrix::append_rows(const IntMatrix& other)
{
    if (other.cols_ != cols_)
        throw std::invalid_argument("IntMatrix::append_rows: width mismatch");
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    rows_ += other.rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::truncate_rows(std::size_t n)
{
    if (n >= rows_)
        return;
    rows_ = n;
    data_.resize(rows_ * cols_);
}

IntMatrix IntMatrix::multiply(const IntMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("IntMatrix::multiply: shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) = checked_add(out(i, j), checked_mul(a, rhs(k, j)));
        }
    return out;
}

IntMatrix IntMatrix::select_cols(std::span<const std::size_t> cols) const
{
    IntMatrix out(rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out(i, j) = (*this)(i, cols[j]);
    return out;
}

std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b)
{
    if (auto c = a.rows_ <=> b.rows_; c != 0)
        return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.data_.begin(), a.data_.end(), b.data_.begin(),
                                                  b.data_.end());
}

namespace {

// row[dst] += factor * row[src]
void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, Int factor, std::size_t from = 0)
{
    if (factor == 0)
        return;
    for (std::size_t c = from; c < m.cols(); ++c)
        m(dst, c) = checked_add(m(dst, c), checked_mul(factor, m(src, c)));
}

void reduce_tail(IntMatrix& m, std::size_t r, std::size_t from, std::span<const Int> moduli)
{
    if (moduli.empty())
        return;
    for (std::size_t c = from; c < m.cols(); ++c)
        if (moduli[c] > 0)
            m(r, c) = mod_floor(m(r, c), moduli[c]);
}

}  // namespace

IntMatrix hermite_form(IntMatrix m, std::span<const Int> column_moduli)
{
    const std::size_t ncols = m.cols();
    if (!column_moduli.empty() && column_moduli.size() != ncols)
        throw std::invalid_argument("hermite_form: moduli width mismatch");
    for (std::size_t r = 0; r < m.rows(); ++r)
        reduce_tail(m, r, 0, column_moduli);

    std::size_t pr = 0;
    for (std::size_t col = 0; col < ncols; ++col) {
        // Reducing mod n_col silently used n_col * e_col; put it back so the
        // lattice is unchanged.
        if (!column_moduli.empty() && column_moduli[col] > 0) {
            std::vector<Int> rel(ncols, 0);
            rel[col] = column_moduli[col];
            m.append_row(rel);
        }
        const std::size_t nrows = m.rows();
        if (pr >= nrows)
            continue;
        for (std::size_t i = pr + 1; i < nrows; ++i) {
            const Int b = m(i, col);
            if (b == 0)
                continue;
            const Int a = m(pr, col);
            if (a == 0) {
                m.swap_rows(pr, i);
                continue;
            }
            if (b % a == 0) {
                add_row_multiple(m, i, pr, -(b / a), col);
            } else {
                const auto [g, x, y] = ext_gcd(a, b);
                const Int ag = a / g, bg = b / g;
                for (std::size_t c = col; c < ncols; ++c) {
                    const Int u = m(pr, c), v = m(i, c);
                    m(pr, c) = checked_add(checked_mul(x, u), checked_mul(y, v));
                    m(i, c) = checked_sub(checked_mul(ag, v), checked_mul(bg, u));
                }
                reduce_tail(m, pr, col + 1, column_moduli);
            }
            reduce_tail(m, i, col + 1, column_moduli);
        }
        if (m(pr, col) == 0)
            continue;
        if (m(pr, col) < 0) {
            for (std::size_t c = col; c < ncols; ++c)
                m(pr, c) = checked_neg(m(pr, c));
            reduce_tail(m, pr, col + 1, column_moduli);
        }
        const Int pivot = m(pr, col);
        for (std::size_t k = 0; k < pr; ++k) {
            const Int q = floor_div(m(k, col), pivot);
            if (q != 0) {
                add_row_multiple(m, k, pr, -q, col);
                reduce_tail(m, k, col + 1, column_moduli);
            }
        }
        ++pr;
    }
    m.truncate_rows(pr);
    return m;
}

bool hermite_contains(const IntMatrix& hnf, std::span<const Int> v)
{
    if (v.size() != hnf.cols())
        throw std::invalid_argument("hermite_contains: width mismatch");
    std::vector<Int> w(v.begin(), v.end());
    for (std::size_t r = 0; r < hnf.rows(); ++r) {
        std::size_t p = 0;
        while (hnf(r, p) == 0)
            ++p;
        for (std::size_t c = 0; c < p; ++c)
            if (w[c] != 0)
                return false;
        if (w[p] % hnf(r, p) != 0)
            return false;
        const Int q = w[p] / hnf(r, p);
        for (std::size_t c = p; c < w.size(); ++c)
            w[c] = checked_sub(w[c], checked_mul(q, hnf(r, c)));
    }
    return std::all_of(w.begin(), w.end(), [](Int x) { return x == 0; });
}

namespace {

// Rows of an echelon matrix whose first `split` entries vanish, restricted to
// the trailing columns.
IntMatrix trailing_block(const IntMatrix& echelon, std::size_t split)
{
    IntMatrix out(0, echelon.cols() - split);
    std::vector<Int> buf(echelon.cols() - split);
    for (std::size_t r = 0; r < echelon.rows(); ++r) {
        auto row = echelon.row(r);
        if (std::any_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(split),
                        [](Int x) { return x != 0; }))
            continue;
        std::copy(row.begin() + static_cast<std::ptrdiff_t>(split), row.end(), buf.begin());
        out.append_row(buf);
    }
    return out;
}

std::vector<Int> concat_moduli(std::span<const Int> a, std::size_t na, std::span<const Int> b,
                               std::size_t nb)
{
    std::vector<Int> out;
    if (a.empty() && b.empty())
        return out;
    out.assign(na + nb, 0);
    std::copy(a.begin(), a.end(), out.begin());
    std::copy(b.begin(), b.end(), out.begin() + static_cast<std::ptrdiff_t>(na));
    return out;
}

}  // namespace

IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b, std::span<const Int> column_moduli)
{
    if (a.cols() != b.cols())
        throw std::invalid_argument("lattice_intersection: width mismatch");
    const std::size_t n = a.cols();
    IntMatrix aug(0, 2 * n);
    std::vector<Int> buf(2 * n);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::copy(a.row(r).begin(), a.row(r).end(), buf.begin());
        std::copy(a.row(r).begin(), a.row(r).end(), buf.begin() + static_cast<std::ptrdiff_t>(n));
        aug.append_row(buf);
    }
    for (std::size_t r = 0; r < b.rows(); ++r) {
        std::copy(b.row(r).begin(), b.row(r).end(), buf.begin());
        std::fill(buf.begin() + static_cast<std::ptrdiff_t>(n), buf.end(), 0);
        aug.append_row(buf);
    }
    const auto moduli = concat_moduli(column_moduli, n, column_moduli, n);
    return hermite_form(trailing_block(hermite_form(std::move(aug), moduli), n), column_moduli);
}

IntMatrix lattice_preimage(const IntMatrix& map, const IntMatrix& target, std::span<const Int> source_moduli,
                           std::span<const Int> target_moduli)
{
    if (map.cols() != target.cols())
        throw std::invalid_argument("lattice_preimage: width mismatch");
    const std::size_t n = map.cols();
    const std::size_t k = map.rows();
    IntMatrix aug(0, n + k);
    std::vector<Int> buf(n + k);
    for (std::size_t r = 0; r < k; ++r) {
        std::fill(buf.begin(), buf.end(), 0);
        std::copy(map.row(r).begin(), map.row(r).end(), buf.begin());
        buf[n + r] = 1;
        aug.append_row(buf);
    }
    for (std::size_t r = 0; r < target.rows(); ++r) {
        std::fill(buf.begin(), buf.end(), 0);
        std::copy(target.row(r).begin(), target.row(r).end(), buf.begin());
        aug.append_row(buf);
    }
    const auto moduli = concat_moduli(target_moduli, n, source_moduli, k);
    return hermite_form(trailing_block(hermite_form(std::move(aug), moduli), n), source_moduli);
}

namespace {

struct SmithWork {
    IntMatrix d;
    IntMatrix v;
    IntMatrix vinv;

    void swap_cols(std::size_t a, std::size_t b)
    {
        d.swap_cols(a, b);
        v.swap_cols(a, b);
        vinv.swap_rows(a, b);
    }

    // column dst += factor * column src
    void add_col_multiple(std::size_t dst, std::size_t src, Int factor)
    {
        if (factor == 0)
            return;
        for (std::size_t r = 0; r < d.rows(); ++r)
            d(r, dst) = checked_add(d(r, dst), checked_mul(factor, d(r, src)));
        for (std::size_t r = 0; r < v.rows(); ++r)
            v(r, dst) = checked_add(v(r, dst), checked_mul(factor, v(r, src)));
        // V^-1 <- E^-1 V^-1 with E^-1 = I - factor * e_src e_dst^T
        for (std::size_t c = 0; c < vinv.cols(); ++c)
            vinv(src, c) = checked_sub(vinv(src, c), checked_mul(factor, vinv(dst, c)));
    }
};

}  // namespace

SmithForm smith_form(const IntMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SmithWork w{a, IntMatrix::identity(n), IntMatrix::identity(n)};
    IntMatrix& d = w.d;

    const auto abs_of = [](Int x) { return x < 0 ? -x : x; };
    const std::size_t diag = std::min(m, n);
    for (std::size_t t = 0; t < diag; ++t) {
        // smallest nonzero entry of the trailing block goes to (t, t)
        std::size_t bi = m, bj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (d(i, j) != 0 && (bi == m || abs_of(d(i, j)) < abs_of(d(bi, bj)))) {
                    bi = i;
                    bj = j;
                }
        if (bi == m)
            break;
        d.swap_rows(t, bi);
        w.swap_cols(t, bj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0)
                    continue;
                const Int q = d(i, t) / d(t, t);
                add_row_multiple(d, i, t, -q);
                if (d(i, t) != 0) {
                    clean = false;
                    d.swap_rows(t, i);
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0)
                    continue;
                const Int q = d(t, j) / d(t, t);
                w.add_col_multiple(j, t, -q);
                if (d(t, j) != 0) {
                    clean = false;
                    w.swap_cols(t, j);
                }
            }
            if (!clean)
                continue;
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        add_row_multiple(d, t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (d(t, t) < 0)
            for (std::size_t j = 0; j < n; ++j)
                d(t, j) = checked_neg(d(t, j));
    }

    SmithForm out;
    out.diagonal.assign(n, 0);
    for (std::size_t t = 0; t < diag; ++t)
        out.diagonal[t] = d(t, t);
    out.right = std::move(w.v);
    out.right_inverse = std::move(w.vinv);
    return out;
}

}  // namespace gps
