#include "rmlocus/linalg.hpp"

namespace rmlocus {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rs, std::size_t c) {
    Matrix m(rs.size(), c);
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (rs[i].size() != c) throw InternalError("row length mismatch");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rs[i][j];
    }
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data.begin() + i * cols, data.begin() + (i + 1) * cols);
}

Vector Matrix::col(std::size_t j) const {
    Vector v(rows);
    for (std::size_t i = 0; i < rows; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<Vector> Matrix::row_vectors() const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < rows; ++i) out.push_back(row(i));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw InternalError("matrix product shape mismatch");
    Matrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols != v.size()) throw InternalError("matrix-vector shape mismatch");
    Vector r(a.rows, Rational(0));
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) r[i] += a(i, j) * v[j];
    return r;
}

Echelon rref(const Matrix& m) {
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
        std::size_t p = r;
        while (p < a.rows && a(p, c) == 0) ++p;
        if (p == a.rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols; ++j) std::swap(a(p, j), a(r, j));
        Rational inv = 1 / a(r, c);
        for (std::size_t j = c; j < a.cols; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rational f = a(i, c);
            for (std::size_t j = c; j < a.cols; ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(r, a.cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) reduced(i, j) = a(i, j);
    return {reduced, pivots};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::size_t rank(const std::vector<Vector>& rows, std::size_t cols) {
    return rank(Matrix::from_rows(rows, cols));
}

std::vector<Vector> nullspace(const Matrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> out;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        Vector v = zero_vector(m.cols);
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
        out.push_back(v);
    }
    return out;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    Matrix aug(m.rows, m.cols + 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
        aug(i, m.cols) = b[i];
    }
    Echelon e = rref(aug);
    Vector x = zero_vector(m.cols);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == m.cols) return std::nullopt;
        x[e.pivots[i]] = e.reduced(i, m.cols);
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows != m.cols) return std::nullopt;
    std::size_t n = m.rows;
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    Echelon e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

Rational determinant(const Matrix& m) {
    if (m.rows != m.cols) throw InternalError("determinant of non-square matrix");
    Matrix a = m;
    std::size_t n = a.rows;
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            Rational f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

Subspace Subspace::span(const std::vector<Vector>& gens, std::size_t ambient) {
    Subspace s(ambient);
    if (gens.empty()) return s;
    s.basis_ = rref(Matrix::from_rows(gens, ambient)).reduced.row_vectors();
    return s;
}

Subspace Subspace::whole(std::size_t ambient) {
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < ambient; ++i) gens.push_back(unit_vector(ambient, i));
    return span(gens, ambient);
}

bool Subspace::contains(const Vector& v) const {
    auto gens = basis_;
    gens.push_back(v);
    return rank(gens, ambient_) == basis_.size();
}

bool Subspace::contains(const Subspace& other) const {
    return (*this + other).dim() == dim();
}

Subspace Subspace::operator+(const Subspace& other) const {
    auto gens = basis_;
    gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
    return span(gens, ambient_);
}

Subspace Subspace::intersect(const Subspace& other) const {
    // x = sum a_i u_i = sum b_j w_j ; solve [U^T | -W^T] (a,b) = 0
    std::size_t p = basis_.size(), q = other.basis_.size();
    if (p == 0 || q == 0) return Subspace(ambient_);
    Matrix m(ambient_, p + q);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t k = 0; k < ambient_; ++k) m(k, i) = basis_[i][k];
    for (std::size_t j = 0; j < q; ++j)
        for (std::size_t k = 0; k < ambient_; ++k) m(k, p + j) = -other.basis_[j][k];
    std::vector<Vector> gens;
    for (const auto& c : nullspace(m)) {
        Vector x = zero_vector(ambient_);
        for (std::size_t i = 0; i < p; ++i)
            if (c[i] != 0) x = x + c[i] * basis_[i];
        gens.push_back(x);
    }
    return span(gens, ambient_);
}

} // namespace rmlocus
