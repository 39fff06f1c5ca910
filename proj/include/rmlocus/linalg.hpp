#ifndef RMLOCUS_LINALG_HPP
#define RMLOCUS_LINALG_HPP

#include "rmlocus/rational.hpp"

#include <optional>

namespace rmlocus {

struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rs, std::size_t cols);

    Rational& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;
    std::vector<Vector> row_vectors() const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const = default;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);

struct Echelon {
    Matrix reduced;                 // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
std::size_t rank(const std::vector<Vector>& rows, std::size_t cols);

// Basis (as rows) of {x : m x = 0}.
std::vector<Vector> nullspace(const Matrix& m);

// Some solution of m x = b, if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

std::optional<Matrix> inverse(const Matrix& m);
Rational determinant(const Matrix& m);

// A linear subspace of Q^n, kept as the canonical RREF basis so that
// equality of subspaces is equality of representations.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}
    static Subspace span(const std::vector<Vector>& gens, std::size_t ambient);
    static Subspace whole(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const& { return basis_; }
    std::vector<Vector> basis() && { return std::move(basis_); }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    Subspace operator+(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    bool operator==(const Subspace& other) const = default;

private:
    std::size_t ambient_;
    std::vector<Vector> basis_;
};

} // namespace rmlocus

#endif
