#include "rmlocus/exactfield.hpp"

#include <sstream>

namespace rmlocus {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_q(const IntPoly& p) {
    QPoly q;
    for (const auto& c : p) q.emplace_back(c);
    trim(q);
    return q;
}

QPoly derivative(const QPoly& p) {
    QPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * p[i]);
    trim(d);
    return d;
}

QPoly remainder(QPoly a, const QPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    return a;
}

QPoly gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

int sign_changes(const std::vector<int>& signs) {
    int changes = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    return out;
}

mpz_class eval(const IntPoly& p, const mpz_class& x) {
    mpz_class v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

bool is_square(const mpz_class& n, mpz_class& root) {
    if (n < 0) return false;
    root = sqrt(n);
    return root * root == n;
}

} // namespace

int sturm_real_root_count(const IntPoly& poly) {
    QPoly p = to_q(poly);
    if (p.size() < 2) return 0;
    std::vector<QPoly> seq{p, derivative(p)};
    while (!seq.back().empty()) {
        QPoly r = remainder(seq[seq.size() - 2], seq.back());
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        seq.push_back(r);
    }
    std::vector<int> at_neg, at_pos;
    for (const auto& q : seq) {
        int lead = sgn(q.back());
        at_pos.push_back(lead);
        at_neg.push_back(((q.size() - 1) % 2 == 0) ? lead : -lead);
    }
    return sign_changes(at_neg) - sign_changes(at_pos);
}

bool is_squarefree(const IntPoly& poly) {
    QPoly p = to_q(poly);
    return gcd(p, derivative(p)).size() <= 1;
}

bool has_rational_factor(const IntPoly& poly) {
    IntPoly p = poly;
    while (!p.empty() && p.back() == 0) p.pop_back();
    std::size_t deg = p.size() - 1;
    if (deg > 4) throw InvalidInput("irreducibility test only supports degree <= 4");
    if (p.back() != 1) throw InvalidInput("polynomial must be monic");
    if (deg <= 1) return false;
    if (p[0] == 0) return true;
    for (const auto& d : divisors(p[0]))
        if (eval(p, d) == 0 || eval(p, -d) == 0) return true;
    if (deg < 4) return false;
    // (x^2 + a x + b)(x^2 + c x + d) with integer a, b, c, d (Gauss's lemma)
    for (const auto& dv : divisors(p[0])) {
        for (int sgn_b : {1, -1}) {
            mpz_class b = dv * sgn_b, d = p[0] / b;
            if (d != b) {
                mpz_class num = p[1] - p[3] * b, den = d - b;
                if (num % den != 0) continue;
                mpz_class a = num / den, c = p[3] - a;
                if (a * c + b + d == p[2]) return true;
            } else {
                if (p[1] != p[3] * b) continue;
                mpz_class disc = p[3] * p[3] - 4 * (p[2] - 2 * b), r;
                if (is_square(disc, r) && (p[3] + r) % 2 == 0) return true;
            }
        }
    }
    return false;
}

FieldPtr make_field(const IntPoly& poly_in) {
    IntPoly poly = poly_in;
    while (!poly.empty() && poly.back() == 0) poly.pop_back();
    if (poly.size() < 3) throw InvalidInput("field polynomial must have degree >= 2");
    if (poly.size() > 5) throw InvalidInput("field polynomial degree > 4 is not supported");
    if (poly.back() != 1) throw InvalidInput("field polynomial must be monic");
    std::size_t g = poly.size() - 1;
    if (!is_squarefree(poly)) throw NotSquarefree(field_to_string(poly));
    if (sturm_real_root_count(poly) < static_cast<int>(g)) throw NotTotallyReal(field_to_string(poly));
    if (has_rational_factor(poly)) throw Reducible(field_to_string(poly));

    auto f = std::shared_ptr<NumberField>(new NumberField());
    f->g_ = g;
    f->poly_ = poly;
    std::vector<Vector> powers{unit_vector(g, 0)};
    for (std::size_t k = 1; k < 2 * g - 1; ++k) {
        const Vector& prev = powers.back();
        Vector next = zero_vector(g);
        for (std::size_t i = 0; i + 1 < g; ++i) next[i + 1] = prev[i];
        for (std::size_t i = 0; i < g; ++i) next[i] -= prev[g - 1] * Rational(poly[i]);
        powers.push_back(next);
    }
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) f->table_.emplace_back(powers[i + j]);
    f->gram_ = Matrix(g, g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) f->gram_(i, j) = f->trace(FieldElement(powers[i + j]));
    return f;
}

FieldPtr default_field() {
    static const FieldPtr f = make_field({1, 0, -10, 0, 1});
    return f;
}

std::string field_to_string(const IntPoly& p) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i].get_str();
    os << "]";
    return os.str();
}

FieldElement NumberField::from_coords(Vector c) const {
    if (c.size() != g_) throw InvalidInput("field element has wrong length");
    return FieldElement(std::move(c));
}

FieldElement NumberField::mul(const FieldElement& x, const FieldElement& y) const {
    Vector r = zero_vector(g_);
    for (std::size_t i = 0; i < g_; ++i) {
        if (x.coords[i] == 0) continue;
        for (std::size_t j = 0; j < g_; ++j) {
            if (y.coords[j] == 0) continue;
            Rational c = x.coords[i] * y.coords[j];
            const Vector& b = basis_product(i, j).coords;
            for (std::size_t k = 0; k < g_; ++k) r[k] += c * b[k];
        }
    }
    return FieldElement(r);
}

Matrix NumberField::mult_matrix(const FieldElement& x) const {
    Matrix m(g_, g_);
    for (std::size_t j = 0; j < g_; ++j) {
        FieldElement col = mul(x, basis(j));
        for (std::size_t i = 0; i < g_; ++i) m(i, j) = col.coords[i];
    }
    return m;
}

FieldElement NumberField::inv(const FieldElement& x) const {
    if (x.is_zero()) throw DivisionByZero("inverse of zero");
    auto sol = solve(mult_matrix(x), unit_vector(g_, 0));
    if (!sol) throw DivisionByZero("element is a zero divisor");
    return FieldElement(*sol);
}

Rational NumberField::trace(const FieldElement& x) const {
    Matrix m = mult_matrix(x);
    Rational t = 0;
    for (std::size_t i = 0; i < g_; ++i) t += m(i, i);
    return t;
}

Rational NumberField::trace_pairing(const FieldElement& x, const FieldElement& y) const {
    Rational s = 0;
    for (std::size_t i = 0; i < g_; ++i) {
        if (x.coords[i] == 0) continue;
        for (std::size_t j = 0; j < g_; ++j) s += x.coords[i] * gram_(i, j) * y.coords[j];
    }
    return s;
}

std::vector<FieldElement> NumberField::power_basis() const {
    std::vector<FieldElement> b;
    for (std::size_t i = 0; i < g_; ++i) b.push_back(basis(i));
    return b;
}

Matrix NumberField::gram_of(const std::vector<FieldElement>& b) const {
    Matrix m(b.size(), b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = trace_pairing(b[i], b[j]);
    return m;
}

std::vector<FieldElement> NumberField::dual_basis(const std::vector<FieldElement>& b) const {
    if (b.size() != g_) throw SingularGram("need exactly g elements");
    auto ginv = inverse(gram_of(b));
    if (!ginv) throw SingularGram("input is not a basis");
    std::vector<FieldElement> dual;
    for (std::size_t j = 0; j < g_; ++j) {
        FieldElement s = zero();
        for (std::size_t k = 0; k < g_; ++k) s = s + (*ginv)(j, k) * b[k];
        dual.push_back(s);
    }
    return dual;
}

std::vector<FieldElement> NumberField::orthogonal_basis() const {
    std::vector<FieldElement> out;
    for (std::size_t i = 0; i < g_; ++i) {
        FieldElement v = basis(i);
        for (const auto& b : out) v = v - (trace_pairing(basis(i), b) / trace_pairing(b, b)) * b;
        out.push_back(v);
    }
    return out;
}

std::size_t NumberField::rank_of(const std::vector<FieldElement>& elems) const {
    std::vector<Vector> rows;
    for (const auto& e : elems) rows.push_back(e.coords);
    if (rows.empty()) return 0;
    return rank(rows, g_);
}

} // namespace rmlocus
