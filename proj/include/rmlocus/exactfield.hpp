#ifndef RMLOCUS_EXACTFIELD_HPP
#define RMLOCUS_EXACTFIELD_HPP

#include "rmlocus/linalg.hpp"

#include <memory>

namespace rmlocus {

RMLOCUS_ERROR(NotTotallyReal);
RMLOCUS_ERROR(NotSquarefree);
RMLOCUS_ERROR(Reducible);
RMLOCUS_ERROR(DivisionByZero);
RMLOCUS_ERROR(SingularGram);

// Element of a number field in the power basis 1, t, ..., t^(g-1).
struct FieldElement {
    Vector coords;

    FieldElement() = default;
    explicit FieldElement(Vector c) : coords(std::move(c)) {}

    std::size_t size() const { return coords.size(); }
    bool is_zero() const { return rmlocus::is_zero(coords); }
    bool operator==(const FieldElement& o) const = default;

    FieldElement operator+(const FieldElement& o) const { return FieldElement(coords + o.coords); }
    FieldElement operator-(const FieldElement& o) const { return FieldElement(coords - o.coords); }
    FieldElement operator-() const { return FieldElement(-coords); }
    friend FieldElement operator*(const Rational& c, const FieldElement& x) {
        return FieldElement(c * x.coords);
    }
};

using IntPoly = std::vector<mpz_class>; // coefficients low to high

// Number of distinct real roots (Sturm's theorem).
int sturm_real_root_count(const IntPoly& p);
bool is_squarefree(const IntPoly& p);
// True if a factor over Q was found; only degrees <= 4 are supported.
bool has_rational_factor(const IntPoly& p);

class NumberField {
public:
    std::size_t degree() const { return g_; }
    const IntPoly& polynomial() const { return poly_; }
    const Matrix& gram() const { return gram_; }
    // Coordinates of t^i * t^j.
    const FieldElement& basis_product(std::size_t i, std::size_t j) const { return table_[i * g_ + j]; }

    FieldElement zero() const { return FieldElement(zero_vector(g_)); }
    FieldElement one() const { return basis(0); }
    FieldElement basis(std::size_t i) const { return FieldElement(unit_vector(g_, i)); }
    FieldElement from_coords(Vector c) const;

    FieldElement mul(const FieldElement& x, const FieldElement& y) const;
    FieldElement inv(const FieldElement& x) const;
    Matrix mult_matrix(const FieldElement& x) const; // column j = x * t^j
    Rational trace(const FieldElement& x) const;
    Rational trace_pairing(const FieldElement& x, const FieldElement& y) const;

    std::vector<FieldElement> power_basis() const;
    Matrix gram_of(const std::vector<FieldElement>& basis) const;
    std::vector<FieldElement> dual_basis(const std::vector<FieldElement>& basis) const;
    std::vector<FieldElement> orthogonal_basis() const;
    std::size_t rank_of(const std::vector<FieldElement>& elems) const;

    bool operator==(const NumberField& o) const { return poly_ == o.poly_; }

private:
    friend std::shared_ptr<const NumberField> make_field(const IntPoly& poly);
    std::size_t g_ = 0;
    IntPoly poly_;
    std::vector<FieldElement> table_;
    Matrix gram_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(const IntPoly& poly);
FieldPtr default_field(); // Q[t]/(t^4 - 10 t^2 + 1)
std::string field_to_string(const IntPoly& p);

} // namespace rmlocus

#endif
