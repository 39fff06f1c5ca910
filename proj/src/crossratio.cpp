#include "rmlocus/crossratio.hpp"

#include <algorithm>
#include <set>

namespace rmlocus {

const Rational& ProjRational::value() const {
    if (!v_) throw Indeterminate("point at infinity has no finite value");
    return *v_;
}

std::string ProjRational::to_string() const { return v_ ? rmlocus::to_string(*v_) : "inf"; }

ProjRational ProjRational::parse(const std::string& s) {
    if (s == "inf" || s == "oo" || s == "infinity") return infinity();
    return ProjRational(parse_rational(s));
}

bool ProjRational::operator<(const ProjRational& o) const {
    if (!v_ || !o.v_) return v_.has_value() && !o.v_.has_value();
    return *v_ < *o.v_;
}

namespace {

// Difference x - y tracked as (finite part, order): order +1 for a
// coincidence, -1 for a pole at infinity.
struct Factor {
    Rational value = 1;
    int order = 0;
    bool zero = false;
};

Factor difference(const ProjRational& x, const ProjRational& y) {
    if (x == y) return {1, 1, true};
    if (x.is_infinite() || y.is_infinite()) return {1, -1, false};
    return {x.value() - y.value(), 0, false};
}

} // namespace

ProjRational cross_ratio(const ProjRational& a, const ProjRational& b, const ProjRational& c, const ProjRational& d) {
    Factor n1 = difference(a, c), n2 = difference(b, d), d1 = difference(a, d), d2 = difference(b, c);
    if ((n1.zero || n2.zero) && (d1.zero || d2.zero)) throw Indeterminate("cross-ratio of a point triple is 0/0");
    int order = n1.order + n2.order - d1.order - d2.order;
    if (order > 0) return ProjRational(0);
    if (order < 0) return ProjRational::infinity();
    return ProjRational(Rational(n1.value * n2.value / (d1.value * d2.value)));
}

ProjRational Mobius::operator()(const ProjRational& z) const {
    Rational u = z.is_infinite() ? Rational(1) : z.value();
    Rational v = z.is_infinite() ? Rational(0) : Rational(1);
    Rational num = a * u + b * v, den = c * u + d * v;
    if (den == 0) return ProjRational::infinity();
    return ProjRational(Rational(num / den));
}

Mobius Mobius::operator*(const Mobius& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mobius Mobius::inverse() const {
    Rational det = a * d - b * c;
    if (det == 0) throw InvalidInput("singular Mobius matrix");
    return {d, -b, -c, a};
}

namespace {

std::pair<Rational, Rational> homogeneous(const ProjRational& z) {
    if (z.is_infinite()) return {1, 0};
    return {z.value(), 1};
}

// Sends infinity, 0, 1 to x[1], x[0], x[2].
Mobius from_standard(const std::array<ProjRational, 3>& x) {
    if (x[0] == x[1] || x[0] == x[2] || x[1] == x[2]) throw BadNormalization("Mobius points must be distinct");
    auto [u1, v1] = homogeneous(x[0]);
    auto [u2, v2] = homogeneous(x[1]);
    auto [u3, v3] = homogeneous(x[2]);
    // alpha * x0 + beta * x1 = x2
    Rational det = u1 * v2 - u2 * v1;
    Rational alpha = (u3 * v2 - u2 * v3) / det, beta = (u1 * v3 - u3 * v1) / det;
    return {beta * u2, alpha * u1, beta * v2, alpha * v1};
}

} // namespace

Mobius mobius_from_points(const std::array<ProjRational, 3>& x, const std::array<ProjRational, 3>& y) {
    return from_standard(y) * from_standard(x).inverse();
}

Mobius random_mobius(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-6, 6);
    for (;;) {
        Mobius m{coef(rng), coef(rng), coef(rng), coef(rng)};
        if (m.a * m.d - m.b * m.c != 0) return m;
    }
}

ProjRational& point(PointConfiguration& c, int edge, int end) { return end == 0 ? c.P.at(edge) : c.Q.at(edge); }
const ProjRational& point(const PointConfiguration& c, int edge, int end) {
    return end == 0 ? c.P.at(edge) : c.Q.at(edge);
}

void validate_configuration(const GraphShape& s, const PointConfiguration& c) {
    if (c.P.size() != s.edges.size() || c.Q.size() != s.edges.size())
        throw InvalidConfiguration("expected one P and one Q per edge");
    for (int v = 0; v < s.vertices; ++v) {
        auto hs = half_edges(s, v);
        if (hs.size() < 3) throw InvalidConfiguration("component " + std::to_string(v) + " has fewer than 3 points");
        std::set<ProjRational> seen;
        for (auto [e, end] : hs)
            if (!seen.insert(point(c, e, end)).second)
                throw InvalidConfiguration("points collide on component " + std::to_string(v));
    }
}

bool is_valid_configuration(const GraphShape& s, const PointConfiguration& c) {
    try {
        validate_configuration(s, c);
        return true;
    } catch (const InvalidConfiguration&) {
        return false;
    }
}

PointConfiguration apply_mobius(const GraphShape& s, const PointConfiguration& c, const std::vector<Mobius>& m) {
    if (static_cast<int>(m.size()) != s.vertices) throw InvalidInput("one Mobius map per component required");
    PointConfiguration out = c;
    for (int e = 0; e < s.edge_count(); ++e) {
        out.P[e] = m[s.edges[e].first](c.P[e]);
        out.Q[e] = m[s.edges[e].second](c.Q[e]);
    }
    return out;
}

PointConfiguration phi_iota(const PointConfiguration& c) { return {c.Q, c.P}; }

namespace {

struct Passage {
    ProjRational out, in;
};

// For each vertex of a simple loop, the points where it leaves and enters.
std::map<int, Passage> passages(const GraphShape& s, const PointConfiguration& c, const Loop& l) {
    if (!is_simple(s, l)) throw InvalidInput("loop " + loop_label(l) + " is not simple");
    auto vs = loop_vertices(s, l);
    std::map<int, Passage> out;
    std::size_t n = l.steps.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& st = l.steps[i];
        out[vs[i]].out = point(c, st.edge, st.forward ? 0 : 1);
        out[vs[(i + 1) % n]].in = point(c, st.edge, st.forward ? 1 : 0);
    }
    return out;
}

} // namespace

ProjRational psi_loop_pair(const GraphShape& s, const PointConfiguration& c, const Loop& a, const Loop& b) {
    auto ea = loop_edge_set(a), eb = loop_edge_set(b);
    for (int e : ea)
        if (std::find(eb.begin(), eb.end(), e) != eb.end())
            throw SharedEdge(loop_label(a) + " and " + loop_label(b) + " share edge " + std::to_string(e + 1));
    if (a.steps.empty() || b.steps.empty()) return ProjRational(1);
    auto pa = passages(s, c, a), pb = passages(s, c, b);
    Rational prod = 1;
    for (const auto& [v, x] : pa) {
        auto it = pb.find(v);
        if (it == pb.end()) continue;
        ProjRational r = cross_ratio(x.out, x.in, it->second.out, it->second.in);
        if (r.is_infinite() || r.value() == 0) throw Indeterminate("degenerate cross-ratio at a shared vertex");
        prod *= r.value();
    }
    return ProjRational(prod);
}

const std::vector<NamedStratum>& named_strata() {
    static const std::vector<NamedStratum> all{NamedStratum::Irreducible, NamedStratum::FiveByFive,
                                               NamedStratum::DoubledTriangle};
    return all;
}

std::string stratum_name(NamedStratum n) {
    switch (n) {
    case NamedStratum::Irreducible: return "(1,1)";
    case NamedStratum::FiveByFive: return "(2,2)";
    case NamedStratum::DoubledTriangle: return "(4,2)";
    }
    return "";
}

std::string stratum_key(NamedStratum n) {
    switch (n) {
    case NamedStratum::Irreducible: return "irreducible";
    case NamedStratum::FiveByFive: return "5x5";
    case NamedStratum::DoubledTriangle: return "doubled_triangle";
    }
    return "";
}

GraphShape named_shape(NamedStratum n) {
    switch (n) {
    case NamedStratum::Irreducible: return {1, {{0, 0}, {0, 0}, {0, 0}, {0, 0}}};
    case NamedStratum::FiveByFive: return {2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}}};
    case NamedStratum::DoubledTriangle: return {3, {{0, 1}, {1, 2}, {2, 0}, {0, 1}, {1, 2}, {2, 0}}};
    }
    throw InvalidInput("unknown stratum");
}

bool phi_iota_invariant(NamedStratum n) { return n != NamedStratum::DoubledTriangle; }

std::vector<FixedPoint> normalization(NamedStratum n) {
    const ProjRational inf = ProjRational::infinity();
    switch (n) {
    case NamedStratum::Irreducible: return {{0, 0, 0}, {0, 1, inf}, {1, 0, 1}};
    case NamedStratum::FiveByFive:
        return {{0, 0, 1}, {0, 1, 1}, {1, 0, 0}, {1, 1, 0}, {4, 0, inf}, {4, 1, inf}};
    case NamedStratum::DoubledTriangle:
        return {{0, 0, 0}, {2, 1, inf}, {5, 1, 1}, {1, 0, 0}, {0, 1, inf}, {3, 1, 1},
                {2, 0, 0}, {1, 1, inf}, {4, 1, 1}};
    }
    throw InvalidInput("unknown stratum");
}

namespace {

int vertex_of(const GraphShape& s, int edge, int end) {
    return end == 0 ? s.edges.at(edge).first : s.edges.at(edge).second;
}

} // namespace

PointConfiguration sample_configuration(const GraphShape& s, std::uint64_t seed, const std::vector<FixedPoint>& fixed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-24, 24), den(1, 8);
    PointConfiguration c;
    c.P.assign(s.edges.size(), ProjRational(0));
    c.Q.assign(s.edges.size(), ProjRational(0));
    std::vector<std::set<ProjRational>> used(s.vertices);
    std::set<std::pair<int, int>> pinned;
    for (const auto& f : fixed) {
        if (f.edge < 0 || f.edge >= s.edge_count() || (f.end != 0 && f.end != 1))
            throw BadNormalization("fixed point refers to a missing half-edge");
        if (!pinned.insert({f.edge, f.end}).second) throw BadNormalization("half-edge fixed twice");
        if (!used[vertex_of(s, f.edge, f.end)].insert(f.value).second)
            throw BadNormalization("fixed points collide on a component");
        point(c, f.edge, f.end) = f.value;
    }
    for (int e = 0; e < s.edge_count(); ++e)
        for (int end = 0; end < 2; ++end) {
            if (pinned.count({e, end})) continue;
            auto& seen = used[vertex_of(s, e, end)];
            for (;;) {
                Rational q(num(rng), den(rng));
                q.canonicalize();
                if (seen.insert(ProjRational(q)).second) {
                    point(c, e, end) = ProjRational(q);
                    break;
                }
            }
        }
    return c;
}

PointConfiguration sample_configuration(NamedStratum n, std::uint64_t seed) {
    return sample_configuration(named_shape(n), seed, normalization(n));
}

PointConfiguration normalize(NamedStratum n, const PointConfiguration& c) {
    GraphShape s = named_shape(n);
    std::vector<std::vector<FixedPoint>> at(s.vertices);
    for (const auto& f : normalization(n)) at[vertex_of(s, f.edge, f.end)].push_back(f);
    std::vector<Mobius> maps;
    for (const auto& fs : at) {
        if (fs.size() != 3) throw BadNormalization("normal form needs three fixed points per component");
        std::array<ProjRational, 3> x, y;
        for (int i = 0; i < 3; ++i) {
            x[i] = point(c, fs[i].edge, fs[i].end);
            y[i] = fs[i].value;
        }
        maps.push_back(mobius_from_points(x, y));
    }
    return apply_mobius(s, c, maps);
}

namespace {

Rational finite(const ProjRational& p) {
    if (p.is_infinite()) throw Indeterminate("coordinate at infinity");
    return p.value();
}

Loop single(int e) { return Loop{{{e, true}}}; }
// (j kbar) on the 5x5 stratum, 1-based.
Loop two_step(int j, int k) { return Loop{{{j - 1, true}, {k - 1, false}}}; }

} // namespace

Rational psi_5x5(const PointConfiguration& c, int i, int j, int k) {
    static const GraphShape s = named_shape(NamedStratum::FiveByFive);
    return finite(psi_loop_pair(s, c, two_step(i, 5), two_step(j, k)));
}

std::array<Rational, 5> five_by_five_z(const PointConfiguration& c) {
    Rational z13 = psi_5x5(c, 3, 1, 4);
    return {psi_5x5(c, 1, 2, 3) * z13, z13, psi_5x5(c, 4, 1, 3), psi_5x5(c, 3, 2, 4), psi_5x5(c, 4, 2, 3)};
}

DoubledTriangleValues doubled_triangle_values(const PointConfiguration& c) {
    auto P = [&](int k) { return c.P.at(k - 1); };
    auto Q = [&](int k) { return c.Q.at(k - 1); };
    DoubledTriangleValues v;
    v.R1 = finite(cross_ratio(P(1), Q(3), Q(6), P(4)));
    v.R2 = finite(cross_ratio(P(2), Q(1), Q(4), P(5)));
    v.R3 = finite(cross_ratio(P(3), Q(2), Q(5), P(6)));
    v.R4 = finite(cross_ratio(P(1), Q(6), P(4), Q(3))) * finite(cross_ratio(P(2), Q(4), P(5), Q(1))) *
           finite(cross_ratio(P(3), Q(5), P(6), Q(2)));
    return v;
}

std::array<Rational, 4> doubled_triangle_psi(const PointConfiguration& c) {
    static const GraphShape s = named_shape(NamedStratum::DoubledTriangle);
    Loop l14{{{0, true}, {3, false}}}, l25{{{1, true}, {4, false}}}, l36{{{2, true}, {5, false}}};
    Loop t1{{{0, true}, {1, true}, {2, true}}}, t2{{{3, true}, {4, true}, {5, true}}};
    return {finite(psi_loop_pair(s, c, l14, l36)), finite(psi_loop_pair(s, c, l25, l14)),
            finite(psi_loop_pair(s, c, l36, l25)), finite(psi_loop_pair(s, c, t1, t2))};
}

std::vector<Rational> cr_map(NamedStratum n, const PointConfiguration& c) {
    GraphShape s = named_shape(n);
    validate_configuration(s, c);
    switch (n) {
    case NamedStratum::Irreducible: {
        std::vector<Rational> out;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) out.push_back(finite(psi_loop_pair(s, c, single(i), single(j))));
        return out;
    }
    case NamedStratum::FiveByFive:
        return {psi_5x5(c, 1, 4, 2), psi_5x5(c, 2, 4, 1), psi_5x5(c, 1, 3, 2), psi_5x5(c, 2, 3, 1),
                psi_5x5(c, 3, 1, 4)};
    case NamedStratum::DoubledTriangle: {
        auto v = doubled_triangle_values(c);
        return {v.R1, v.R2, v.R3, v.R4};
    }
    }
    throw InvalidInput("unknown stratum");
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    Rational r(sqrt(n), sqrt(d));
    r.canonicalize();
    return r;
}

// Distinct rational roots of a x^2 + b x + c (a may vanish).
std::vector<Rational> rational_roots(const Rational& a, const Rational& b, const Rational& c) {
    if (a == 0) {
        if (b == 0) return {};
        return {Rational(-c / b)};
    }
    auto s = rational_sqrt(b * b - 4 * a * c);
    if (!s) return {};
    Rational r1 = (-b + *s) / (2 * a), r2 = (-b - *s) / (2 * a);
    if (r1 == r2) return {r1};
    return {r1, r2};
}

std::vector<Rational> roots_of(const Polynomial& p) {
    if (p.degree_in(0) > 2) throw InternalError("fiber equation of unexpected degree");
    auto coef = [&](int k) {
        Polynomial q = p.coefficient(0, k);
        return q.is_zero() ? Rational(0) : q.terms().begin()->second;
    };
    return rational_roots(coef(2), coef(1), coef(0));
}

// For [1, q2, r x, x] = r23 with r = R13: all x.
std::vector<Rational> irreducible_slice(const Rational& q2, const Rational& r1k, const Rational& r2k) {
    Polynomial x = Polynomial::variable(1, 0);
    const Rational one(1);
    Polynomial f = r2k * (one - x) * (q2 - r1k * x) - (one - r1k * x) * (q2 - x);
    return roots_of(f);
}

std::vector<std::pair<Rational, Rational>> ordered_pairs(const Rational& sum, const Rational& prod) {
    std::vector<std::pair<Rational, Rational>> out;
    auto rs = rational_roots(1, -sum, prod);
    if (rs.size() == 1) out.push_back({rs[0], rs[0]});
    if (rs.size() == 2) {
        out.push_back({rs[0], rs[1]});
        out.push_back({rs[1], rs[0]});
    }
    return out;
}

} // namespace

std::vector<PointConfiguration> torelli_fiber(NamedStratum n, const std::vector<Rational>& coords) {
    GraphShape s = named_shape(n);
    std::vector<PointConfiguration> candidates;
    PointConfiguration base = sample_configuration(n, 0);
    switch (n) {
    case NamedStratum::Irreducible: {
        if (coords.size() != 6) throw InvalidInput("irreducible stratum has 6 coordinates");
        if (coords[0] == 0) return {};
        Rational q2 = 1 / coords[0];
        // R13 = P3/Q3, R14 = P4/Q4 under the normal form
        for (const Rational& q3 : irreducible_slice(q2, coords[1], coords[3]))
            for (const Rational& q4 : irreducible_slice(q2, coords[2], coords[4])) {
                PointConfiguration c = base;
                c.Q[1] = q2;
                c.P[2] = Rational(coords[1] * q3);
                c.Q[2] = q3;
                c.P[3] = Rational(coords[2] * q4);
                c.Q[3] = q4;
                candidates.push_back(c);
            }
        break;
    }
    case NamedStratum::FiveByFive: {
        if (coords.size() != 5) throw InvalidInput("5x5 stratum has 5 coordinates");
        // (1-P)(1-Q) = c1 and PQ = c2 give P + Q = 1 + c2 - c1
        for (auto [p4, q4] : ordered_pairs(1 + coords[1] - coords[0], coords[1]))
            for (auto [p3, q3] : ordered_pairs(1 + coords[3] - coords[2], coords[3])) {
                PointConfiguration c = base;
                c.P[2] = p3;
                c.Q[2] = q3;
                c.P[3] = p4;
                c.Q[3] = q4;
                candidates.push_back(c);
            }
        break;
    }
    case NamedStratum::DoubledTriangle: {
        if (coords.size() != 4) throw InvalidInput("doubled triangle has 4 coordinates");
        for (int i = 0; i < 3; ++i)
            if (coords[i] == 0) return {};
        // R_i = 1 / P_{i+3} under the normal form
        PointConfiguration c = base;
        for (int i = 0; i < 3; ++i) c.P[3 + i] = Rational(1 / coords[i]);
        candidates.push_back(c);
        break;
    }
    }
    std::vector<PointConfiguration> fiber;
    for (const auto& c : candidates) {
        if (!is_valid_configuration(s, c)) continue;
        if (cr_map(n, c) != coords) continue;
        if (std::find(fiber.begin(), fiber.end(), c) == fiber.end()) fiber.push_back(c);
    }
    return fiber;
}

Rational gerritzen_eval(const std::array<Rational, 6>& R) { return gerritzen_expr<Rational>(R); }
Rational f5_eval(const std::array<Rational, 5>& z) { return f5_expr<Rational>(z); }

namespace {

template <std::size_t N>
std::array<Polynomial, N> variables(std::size_t nvars) {
    std::array<Polynomial, N> v;
    for (std::size_t i = 0; i < N; ++i) v[i] = Polynomial::variable(nvars, i);
    return v;
}

} // namespace

Polynomial gerritzen_polynomial() { return gerritzen_expr<Polynomial>(variables<6>(6)); }
Polynomial f5_polynomial() { return f5_expr<Polynomial>(variables<5>(5)); }
Polynomial doubled_triangle_polynomial() { return doubled_triangle_expr<Polynomial>(variables<4>(4)); }

Polynomial five_by_five_limit_polynomial() {
    // variables Z12, Z13, Z14, Z23, Z24, T
    auto v = variables<6>(6);
    const Polynomial& t = v[5];
    Polynomial f = gerritzen_expr<Polynomial>({v[0] * t, v[1] * t, v[2] * t, v[3] * t, v[4] * t, t});
    for (int k = 0; k <= f.degree_in(5); ++k) {
        Polynomial c = f.coefficient(5, k);
        if (c.is_zero()) continue;
        Polynomial out(5);
        for (const auto& [m, q] : c.terms()) {
            Monomial r(m.begin(), m.begin() + 5);
            Polynomial term(5, q);
            for (std::size_t i = 0; i < 5; ++i) term = term * pow(Polynomial::variable(5, i), r[i]);
            out = out + term;
        }
        return out;
    }
    throw InternalError("Gerritzen polynomial vanishes identically");
}

Rational five_by_five_limit_eval(const std::array<Rational, 5>& z) {
    static const Polynomial l = five_by_five_limit_polynomial();
    return l.eval({z.begin(), z.end()});
}

const std::vector<std::string>& gerritzen_variables() {
    static const std::vector<std::string> v{"R12", "R13", "R14", "R23", "R24", "R34"};
    return v;
}

const std::vector<std::string>& z_variables() {
    static const std::vector<std::string> v{"Z12", "Z13", "Z14", "Z23", "Z24"};
    return v;
}

const std::vector<std::string>& doubled_triangle_variables() {
    static const std::vector<std::string> v{"R1", "R2", "R3", "R4"};
    return v;
}

nlohmann::ordered_json configuration_to_json(const PointConfiguration& c) {
    nlohmann::ordered_json j;
    j["P"] = nlohmann::ordered_json::array();
    j["Q"] = nlohmann::ordered_json::array();
    for (const auto& p : c.P) j["P"].push_back(p.to_string());
    for (const auto& q : c.Q) j["Q"].push_back(q.to_string());
    return j;
}

} // namespace rmlocus
