// SPDX-License-Identifier: Apache-2.0

#ifndef NONGRS_MATRIX_HPP
#define NONGRS_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nongrs/evalset.hpp"
#include "nongrs/field.hpp"

namespace nongrs {

/// Desk-scale bound on either matrix dimension.
inline constexpr std::size_t kMaxMatrixDim = std::size_t{1} << 16;

/// Dense row-major matrix over a single field.
class FieldMatrix {
public:
    FieldMatrix(Field field, std::size_t rows, std::size_t cols);
    /// Throws std::invalid_argument if rows*cols != data.size() or an entry
    /// is not reduced.
    FieldMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> data);

    static FieldMatrix identity(const Field& field, std::size_t n);
    static FieldMatrix from_rows(const Field& field, const std::vector<std::vector<Elem>>& rows);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<const Elem> data() const { return data_; }
    std::vector<Elem> column(std::size_t j) const;

    FieldMatrix transpose() const;
    FieldMatrix select_columns(std::span<const std::size_t> cols) const;
    /// Drop the given trailing number of columns.
    FieldMatrix leading_columns(std::size_t count) const;

    /// M * v^T for a length-cols vector.
    std::vector<Elem> apply(std::span<const Elem> v) const;

    friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

/// [A; B]
FieldMatrix vstack(const FieldMatrix& a, const FieldMatrix& b);
/// [A | B]
FieldMatrix hstack(const FieldMatrix& a, const FieldMatrix& b);
/// [A | v^T]
FieldMatrix append_column(const FieldMatrix& a, std::span<const Elem> v);

/// In-place Gaussian elimination on an n x n buffer. Destroys `a`.
Elem determinant_inplace(const Field& f, std::span<Elem> a, std::size_t n);

/// Throws std::invalid_argument on non-square input.
Elem determinant(const FieldMatrix& m);

struct Echelon {
    FieldMatrix reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form with leading-one pivots chosen leftmost.
Echelon rref(const FieldMatrix& m);

std::size_t rank(const FieldMatrix& m);

/// Basis of {x : M x^T = 0} as rows, in reduced echelon form.
FieldMatrix kernel_basis(const FieldMatrix& m);

/// One solution of M x^T = t: pivot variables from the reduced echelon form,
/// free variables zero. std::nullopt if inconsistent.
std::optional<std::vector<Elem>> solve_linear(const FieldMatrix& m, std::span<const Elem> t);

/// True iff the row spaces coincide.
bool row_space_equal(const FieldMatrix& a, const FieldMatrix& b);

/// Rows a^e for each exponent e, columns indexed by `points`.
FieldMatrix power_rows(const Field& f, std::span<const Elem> points, std::span<const unsigned> exponents);

enum class VandermondeKind { Full, RowDropped, Generalized };

/// Full: rows a^0..a^{n-1}.
/// RowDropped(r): rows a^0..a^{n-r-1}, a^{n-r+1}..a^n, 1 <= r <= n-1.
/// Generalized(h): rows a^0..a^{n-2}, a^h.
FieldMatrix vandermonde_family(VandermondeKind kind, const EvalSet& s, unsigned param = 0);

}  // namespace nongrs

#endif
