#include "rmlocus/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace rmlocus {

Polynomial::Polynomial(std::size_t nvars, const Rational& c) : nvars_(nvars) {
    if (c != 0) terms_[Monomial(nvars, 0)] = c;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw InvalidInput("variable index out of range");
    Polynomial p(nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    p.terms_[m] = 1;
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial(nvars_, 0));
}

int Polynomial::degree_in(std::size_t var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

int Polynomial::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (int e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

Polynomial Polynomial::coefficient(std::size_t var, int k) const {
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] != k) continue;
        Monomial r = m;
        r[var] = 0;
        out.add_term(r, c);
    }
    return out;
}

Monomial Polynomial::monomial_content() const {
    if (terms_.empty()) return Monomial(nvars_, 0);
    Monomial g = terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < nvars_; ++i) g[i] = std::min(g[i], m[i]);
    return g;
}

Polynomial Polynomial::divided_by_monomial(const Monomial& d) const {
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) {
        Monomial r = m;
        for (std::size_t i = 0; i < nvars_; ++i) {
            r[i] -= d[i];
            if (r[i] < 0) throw InvalidInput("monomial does not divide the polynomial");
        }
        out.terms_[r] = c;
    }
    return out;
}

Rational Polynomial::eval(const std::vector<Rational>& x) const {
    if (x.size() != nvars_) throw InvalidInput("wrong number of values for polynomial evaluation");
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (int k = 0; k < m[i]; ++k) t *= x[i];
        total += t;
    }
    return total;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (names.size() != nvars_) throw InvalidInput("wrong number of variable names");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest total degree first, then lexicographically descending
    std::vector<std::pair<Monomial, Rational>> ts(terms_.begin(), terms_.end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (int e : a.first) da += e;
        for (int e : b.first) db += e;
        if (da != db) return da > db;
        return a.first > b.first;
    });
    for (const auto& [m, c] : ts) {
        bool unit = true;
        for (int e : m) unit = unit && e == 0;
        Rational a = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (unit) os << rmlocus::to_string(a);
        else if (a == 1) os << mono;
        else os << rmlocus::to_string(a) << "*" << mono;
        first = false;
    }
    return os.str();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw InvalidInput("polynomials in different rings");
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw InvalidInput("polynomials in different rings");
    Polynomial r(nvars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) m[i] = m1[i] + m2[i];
            r.add_term(m, c1 * c2);
        }
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return Polynomial(nvars_);
    Polynomial r = *this;
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
}

Polynomial pow(const Polynomial& p, unsigned k) {
    Polynomial r(p.nvars(), Rational(1)), b = p;
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

namespace {

bool shares_variable(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return true;
    return false;
}

} // namespace

std::optional<IrreducibilityCertificate> linear_irreducibility_certificate(const Polynomial& p) {
    for (std::size_t v = 0; v < p.nvars(); ++v) {
        if (p.degree_in(v) != 1) continue;
        Polynomial a = p.coefficient(v, 1), b = p.coefficient(v, 0);
        if (b.is_zero()) continue; // p = a*x is divisible by x
        if (a.is_constant()) return IrreducibilityCertificate{v, "coefficient of the variable is constant"};
        if (b.is_constant()) return IrreducibilityCertificate{v, "constant term in the variable is a nonzero constant"};
        if (a.is_monomial() && !shares_variable(a.terms().begin()->first, b.monomial_content()))
            return IrreducibilityCertificate{v, "coefficient of the variable is a monomial coprime to the rest"};
    }
    return std::nullopt;
}

BinomialTest binomial_test(const Polynomial& p) {
    BinomialTest t;
    t.term_count = p.term_count();
    if (t.term_count <= 2) {
        // zero polynomial: the whole torus; a monomial: empty on the torus
        t.decided = true;
        t.is_torus_coset = t.term_count != 1;
        return t;
    }
    // the monomial content is a unit on the torus
    Polynomial q = p.divided_by_monomial(p.monomial_content());
    t.certificate = linear_irreducibility_certificate(q);
    t.decided = t.certificate.has_value();
    t.is_torus_coset = false;
    return t;
}

} // namespace rmlocus
