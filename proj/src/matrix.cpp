// SPDX-License-Identifier: Apache-2.0

#include "nongrs/matrix.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace nongrs {

namespace {

void check_dims(std::size_t rows, std::size_t cols) {
    if (rows > kMaxMatrixDim || cols > kMaxMatrixDim)
        throw std::invalid_argument("matrix dimension exceeds " + std::to_string(kMaxMatrixDim));
}

void same_field(const FieldMatrix& a, const FieldMatrix& b) {
    if (!(a.field() == b.field())) throw FieldError("matrices over different fields");
}

// Reduce rows [0, rows) of a row-major buffer; returns pivot columns.
// Only columns [0, pivot_cols) may hold pivots.
std::vector<std::size_t> reduce(const Field& f, std::vector<Elem>& a, std::size_t rows, std::size_t cols,
                                std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p * cols + c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
        }
        const Elem inv = f.inv(a[r * cols + c]);
        for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = f.mul(a[r * cols + j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Elem factor = a[i * cols + c];
            if (factor == 0) continue;
            for (std::size_t j = c; j < cols; ++j)
                a[i * cols + j] = f.sub(a[i * cols + j], f.mul(factor, a[r * cols + j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

FieldMatrix::FieldMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    check_dims(rows, cols);
}

FieldMatrix::FieldMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
    check_dims(rows, cols);
    if (data_.size() != rows * cols) throw std::invalid_argument("matrix data length does not match rows*cols");
    for (Elem v : data_) {
        if (!field_.contains(v)) throw std::invalid_argument("matrix entry " + std::to_string(v) + " not reduced");
    }
}

FieldMatrix FieldMatrix::identity(const Field& field, std::size_t n) {
    FieldMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

FieldMatrix FieldMatrix::from_rows(const Field& field, const std::vector<std::vector<Elem>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    std::vector<Elem> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged matrix rows");
        data.insert(data.end(), row.begin(), row.end());
    }
    return FieldMatrix(field, r, c, std::move(data));
}

std::vector<Elem> FieldMatrix::column(std::size_t j) const {
    std::vector<Elem> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

FieldMatrix FieldMatrix::select_columns(std::span<const std::size_t> cols) const {
    FieldMatrix out(field_, rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j] >= cols_) throw std::out_of_range("column index out of range");
            out(i, j) = (*this)(i, cols[j]);
        }
    return out;
}

FieldMatrix FieldMatrix::leading_columns(std::size_t count) const {
    if (count > cols_) throw std::out_of_range("column count out of range");
    std::vector<std::size_t> idx(count);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return select_columns(idx);
}

std::vector<Elem> FieldMatrix::apply(std::span<const Elem> v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length does not match column count");
    std::vector<Elem> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        Elem acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc = field_.add(acc, field_.mul((*this)(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
    same_field(a, b);
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    const Field& f = a.field();
    FieldMatrix out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Elem x = a(i, l);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(l, j)));
        }
    return out;
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

FieldMatrix vstack(const FieldMatrix& a, const FieldMatrix& b) {
    same_field(a, b);
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    std::vector<Elem> data(a.data().begin(), a.data().end());
    data.insert(data.end(), b.data().begin(), b.data().end());
    return FieldMatrix(a.field(), a.rows() + b.rows(), a.cols(), std::move(data));
}

FieldMatrix hstack(const FieldMatrix& a, const FieldMatrix& b) {
    same_field(a, b);
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    FieldMatrix out(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

FieldMatrix append_column(const FieldMatrix& a, std::span<const Elem> v) {
    if (v.size() != a.rows()) throw std::invalid_argument("appended column length mismatch");
    return hstack(a, FieldMatrix(a.field(), a.rows(), 1, std::vector<Elem>(v.begin(), v.end())));
}

Elem determinant_inplace(const Field& f, std::span<Elem> a, std::size_t n) {
    Elem det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p * n + c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = c; j < n; ++j) std::swap(a[p * n + j], a[c * n + j]);
            det = f.neg(det);
        }
        const Elem pivot = a[c * n + c];
        det = f.mul(det, pivot);
        const Elem inv = f.inv(pivot);
        for (std::size_t i = c + 1; i < n; ++i) {
            const Elem factor = f.mul(a[i * n + c], inv);
            if (factor == 0) continue;
            for (std::size_t j = c + 1; j < n; ++j) a[i * n + j] = f.sub(a[i * n + j], f.mul(factor, a[c * n + j]));
        }
    }
    return det;
}

Elem determinant(const FieldMatrix& m) {
    if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
    std::vector<Elem> buf(m.data().begin(), m.data().end());
    return determinant_inplace(m.field(), buf, m.rows());
}

Echelon rref(const FieldMatrix& m) {
    std::vector<Elem> buf(m.data().begin(), m.data().end());
    auto pivots = reduce(m.field(), buf, m.rows(), m.cols(), m.cols());
    return {FieldMatrix(m.field(), m.rows(), m.cols(), std::move(buf)), std::move(pivots)};
}

std::size_t rank(const FieldMatrix& m) { return rref(m).pivots.size(); }

FieldMatrix kernel_basis(const FieldMatrix& m) {
    const Field& f = m.field();
    const Echelon e = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    std::vector<Elem> basis;
    std::size_t count = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Elem> x(n, 0);
        x[free] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = f.neg(e.reduced(i, free));
        basis.insert(basis.end(), x.begin(), x.end());
        ++count;
    }
    FieldMatrix k(f, count, n, std::move(basis));
    if (count == 0) return k;
    return rref(k).reduced;
}

std::optional<std::vector<Elem>> solve_linear(const FieldMatrix& m, std::span<const Elem> t) {
    if (t.size() != m.rows()) throw std::invalid_argument("right-hand side length does not match row count");
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols() + 1;
    std::vector<Elem> buf(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) buf[i * cols + j] = m(i, j);
        buf[i * cols + m.cols()] = t[i];
    }
    const auto pivots = reduce(m.field(), buf, rows, cols, m.cols());
    for (std::size_t i = pivots.size(); i < rows; ++i) {
        if (buf[i * cols + m.cols()] != 0) return std::nullopt;
    }
    std::vector<Elem> x(m.cols(), 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = buf[i * cols + m.cols()];
    return x;
}

bool row_space_equal(const FieldMatrix& a, const FieldMatrix& b) {
    same_field(a, b);
    if (a.cols() != b.cols()) throw std::invalid_argument("row space comparison needs equal column counts");
    const std::size_t ra = rank(a);
    return ra == rank(b) && ra == rank(vstack(a, b));
}

FieldMatrix power_rows(const Field& f, std::span<const Elem> points, std::span<const unsigned> exponents) {
    FieldMatrix m(f, exponents.size(), points.size());
    for (std::size_t i = 0; i < exponents.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j) m(i, j) = f.pow(points[j], exponents[i]);
    return m;
}

FieldMatrix vandermonde_family(VandermondeKind kind, const EvalSet& s, unsigned param) {
    const auto n = static_cast<unsigned>(s.size());
    std::vector<unsigned> exps;
    switch (kind) {
        case VandermondeKind::Full:
            for (unsigned e = 0; e < n; ++e) exps.push_back(e);
            break;
        case VandermondeKind::RowDropped:
            if (param < 1 || param > n - 1)
                throw std::invalid_argument("row_dropped needs 1 <= r <= n-1, got r=" + std::to_string(param));
            for (unsigned e = 0; e <= n; ++e)
                if (e != n - param) exps.push_back(e);
            break;
        case VandermondeKind::Generalized:
            for (unsigned e = 0; e + 1 < n; ++e) exps.push_back(e);
            exps.push_back(param);
            break;
    }
    return power_rows(s.field(), s.points(), exps);
}

}  // namespace nongrs
