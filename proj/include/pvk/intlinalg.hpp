// Exact integer linear algebra: dense matrices over Z with Smith and Hermite
// normal forms, and an incremental sparse echelon lattice for the larger
// rank computations.

#ifndef PVK_INTLINALG_HPP
#define PVK_INTLINALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pvk {

using Integer = mpz_class;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Integer> row(std::size_t r) const;
    std::vector<Integer> col(std::size_t c) const;
    void append_row(const std::vector<Integer>& row);

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    std::vector<Integer> operator*(const std::vector<Integer>& v) const;
    bool operator==(const IntMatrix& rhs) const = default;

    bool is_zero() const;
    std::string to_string() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// U * M * V = D with D diagonal, d_1 | d_2 | ..., d_i >= 0, and U, V unimodular.
struct SmithForm {
    std::vector<Integer> diagonal; // length min(rows, cols)
    IntMatrix left;                // U, rows x rows
    IntMatrix right;               // V, cols x cols

    std::size_t rank() const;
    /// Invariant factors greater than one.
    std::vector<Integer> torsion() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Row Hermite normal form: echelon, positive pivots, entries above each pivot
/// reduced into [0, pivot). Zero rows are dropped.
struct HermiteForm {
    IntMatrix h;
    std::vector<std::size_t> pivot_cols;
};

HermiteForm hermite_normal_form(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);
Integer determinant(const IntMatrix& m);
/// |det M| = 1; throws std::invalid_argument for non-square input.
bool is_unit_determinant(const IntMatrix& m);
/// Z-basis (as rows) of { x : M x = 0 }.
IntMatrix kernel_basis(const IntMatrix& m);
/// Z-basis (as rows) of { y : y M = 0 }.
IntMatrix left_kernel_basis(const IntMatrix& m);

/// Row lattices spanned by the rows of a and b coincide.
bool same_row_lattice(const IntMatrix& a, const IntMatrix& b);
/// Every row of `sub` lies in the row lattice of `m`.
bool row_lattice_contains(const IntMatrix& m, const IntMatrix& sub);
/// Integer coefficients c with c * M = v, if any.
std::optional<std::vector<Integer>> solve_row_combination(const IntMatrix& m, const std::vector<Integer>& v);

using SparseVector = std::vector<std::pair<std::size_t, Integer>>; // sorted by column, no zeros

SparseVector to_sparse(const std::vector<Integer>& dense);
std::vector<Integer> to_dense(const SparseVector& v, std::size_t dim);

/// Row-echelon basis of a sublattice of Z^dim, built one vector at a time.
/// Each stored row has a positive pivot at its leading column.
class EchelonLattice {
public:
    explicit EchelonLattice(std::size_t dim) : dim_(dim) {}

    /// Adds `v` to the spanning set; returns true when the lattice grew.
    bool insert(SparseVector v);
    bool insert_dense(const std::vector<Integer>& v) { return insert(to_sparse(v)); }

    bool contains(const SparseVector& v) const;
    std::size_t rank() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }
    /// True when every pivot is 1, which implies Z^dim / L is torsion-free.
    bool unit_pivots() const;

    /// Fully reduced (Hermite) rows in pivot order.
    std::vector<SparseVector> reduced_rows() const;
    IntMatrix to_matrix() const;

    /// Invariant factors > 1 of Z^dim / L (empty when torsion-free).
    std::vector<Integer> quotient_torsion() const;

private:
    std::size_t dim_;
    std::map<std::size_t, SparseVector> rows_; // pivot column -> row
};

std::string to_string(const std::vector<Integer>& v);

} // namespace pvk

#endif
