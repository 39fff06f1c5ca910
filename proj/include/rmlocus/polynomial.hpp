#ifndef RMLOCUS_POLYNOMIAL_HPP
#define RMLOCUS_POLYNOMIAL_HPP

#include "rmlocus/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rmlocus {

using Monomial = std::vector<int>;

// Sparse polynomial over Q in a fixed number of variables.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
    Polynomial(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return nvars_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    int degree_in(std::size_t var) const;
    int total_degree() const;
    // Coefficient of x_var^k, as a polynomial in the same variables.
    Polynomial coefficient(std::size_t var, int k) const;
    bool involves(std::size_t var) const { return degree_in(var) > 0; }
    // Largest monomial dividing every term.
    Monomial monomial_content() const;
    Polynomial divided_by_monomial(const Monomial& m) const;

    Rational eval(const std::vector<Rational>& x) const;
    std::string to_string(const std::vector<std::string>& names) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator+(const Rational& c) const { return *this + Polynomial(nvars_, c); }
    Polynomial operator-(const Rational& c) const { return *this - Polynomial(nvars_, c); }
    Polynomial operator*(const Rational& c) const;
    friend Polynomial operator+(const Rational& c, const Polynomial& p) { return p + c; }
    friend Polynomial operator-(const Rational& c, const Polynomial& p) { return -p + c; }
    friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }
    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

private:
    void add_term(const Monomial& m, const Rational& c);
    std::size_t nvars_ = 0;
    std::map<Monomial, Rational> terms_;
};

Polynomial pow(const Polynomial& p, unsigned k);

// Certificate that p = a*x + b is irreducible: deg_x p = 1 and one of a, b
// is a nonzero constant, or a is a monomial sharing no variable with the
// monomial content of b.
struct IrreducibilityCertificate {
    std::size_t variable = 0;
    std::string reason;
};
std::optional<IrreducibilityCertificate> linear_irreducibility_certificate(const Polynomial& p);

// V(p) is a translated codimension-one subtorus iff p is a monomial times a
// binomial. Decided exactly when p has at most 2 terms or carries an
// irreducibility certificate; otherwise `decided` is false.
struct BinomialTest {
    std::size_t term_count = 0;
    bool decided = false;
    bool is_torus_coset = false;
    std::optional<IrreducibilityCertificate> certificate;
};
BinomialTest binomial_test(const Polynomial& p);

} // namespace rmlocus

#endif
