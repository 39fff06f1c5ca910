#include "rmlocus/rational.hpp"

namespace rmlocus {

Rational parse_rational(const std::string& s) {
    std::string t;
    for (char c : s)
        if (c != ' ') t += c;
    if (t.empty()) throw InvalidInput("empty rational");
    if (t[0] == '+') t.erase(0, 1);
    Rational q;
    if (q.set_str(t, 10) != 0) throw InvalidInput("bad rational '" + s + "'");
    if (q.get_den() == 0) throw InvalidInput("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n, Rational(0));
    v[i] = 1;
    return v;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Rational dot(const Vector& a, const Vector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vector operator+(const Vector& a, const Vector& b) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vector operator-(const Vector& a) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Vector operator*(const Rational& c, const Vector& v) {
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

Vector primitive(const Vector& v, bool fix_sign) {
    mpz_class l = 1, g = 0;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& x : v) {
        mpz_class n = x.get_num() * (l / x.get_den());
        ints.push_back(n);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (g == 0) return v;
    int sign = 1;
    for (const auto& n : ints) {
        if (!fix_sign || n == 0) continue;
        sign = n > 0 ? 1 : -1;
        break;
    }
    Vector r;
    for (const auto& n : ints) r.emplace_back(Rational(n * sign / g));
    return r;
}

} // namespace rmlocus
