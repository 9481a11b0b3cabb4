#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "gps/arith.hpp"

namespace gps {

/// Dense row-major integer matrix. Rows are read as generators of a lattice
/// throughout this library.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }

    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Int> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Int> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const Int> values);
    void append_rows(const IntMatrix& other);
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void truncate_rows(std::size_t n);

    IntMatrix multiply(const IntMatrix& rhs) const;
    IntMatrix select_cols(std::span<const std::size_t> cols) const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
    friend std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

// Row Hermite normal form of the lattice spanned by the rows of `m`: echelon
// rows with positive pivots, entries above each pivot reduced into
// [0, pivot), zero rows dropped. Unique per lattice.
//
// `column_moduli`, when nonempty, promises that moduli[j] * e_j lies in the
// lattice for every j with moduli[j] > 0; entries in not-yet-pivoted columns
// are then kept reduced, which bounds intermediate growth.
IntMatrix hermite_form(IntMatrix m, std::span<const Int> column_moduli = {});

// Membership of v in the lattice of a matrix already in Hermite form.
bool hermite_contains(const IntMatrix& hnf, std::span<const Int> v);

// Intersection of two row lattices in the same ambient Z^n.
IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b,
                               std::span<const Int> column_moduli = {});

// { x in Z^k : x * map lies in the row lattice of `target` }, where `map` is
// k x n and `target` has n columns.
IntMatrix lattice_preimage(const IntMatrix& map, const IntMatrix& target,
                           std::span<const Int> source_moduli = {},
                           std::span<const Int> target_moduli = {});

/// Smith form D = U * A * V of a row lattice. `diagonal` has one entry per
/// column (0 past the rank), nonnegative, each dividing the next nonzero one.
/// `right` is V and `right_inverse` is V^-1; x -> x * V carries the lattice
/// onto the diagonal lattice.
struct SmithForm {
    std::vector<Int> diagonal;
    IntMatrix right;
    IntMatrix right_inverse;
};

SmithForm smith_form(const IntMatrix& a);

}  // namespace gps
