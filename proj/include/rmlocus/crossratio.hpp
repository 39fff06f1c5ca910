#ifndef RMLOCUS_CROSSRATIO_HPP
#define RMLOCUS_CROSSRATIO_HPP

#include "rmlocus/dualgraph.hpp"
#include "rmlocus/polynomial.hpp"

#include <array>
#include <cstdint>
#include <random>

namespace rmlocus {

RMLOCUS_ERROR(Indeterminate);
RMLOCUS_ERROR(BadNormalization);
RMLOCUS_ERROR(InvalidConfiguration);

// A point of P^1(Q).
class ProjRational {
public:
    ProjRational() : v_(Rational(0)) {}
    ProjRational(const Rational& v) : v_(v) {}
    ProjRational(int v) : v_(Rational(v)) {}
    static ProjRational infinity() {
        ProjRational p;
        p.v_.reset();
        return p;
    }
    bool is_infinite() const { return !v_.has_value(); }
    // Throws Indeterminate at infinity.
    const Rational& value() const;
    std::string to_string() const; // "3/7" or "inf"
    static ProjRational parse(const std::string& s);
    bool operator==(const ProjRational& o) const { return v_ == o.v_; }
    bool operator<(const ProjRational& o) const;

private:
    std::optional<Rational> v_;
};

// [a,b,c,d] = (a-c)(b-d) / ((a-d)(b-c)); coinciding points count as zeros and
// infinite points as poles, cancelled between numerator and denominator.
ProjRational cross_ratio(const ProjRational& a, const ProjRational& b, const ProjRational& c, const ProjRational& d);

// z -> (a z + b) / (c z + d)
struct Mobius {
    Rational a = 1, b = 0, c = 0, d = 1;
    ProjRational operator()(const ProjRational& z) const;
    Mobius operator*(const Mobius& o) const; // composition, o applied first
    Mobius inverse() const;
};
// The Mobius map sending x_i to y_i; each triple must be distinct.
Mobius mobius_from_points(const std::array<ProjRational, 3>& x, const std::array<ProjRational, 3>& y);
Mobius random_mobius(std::mt19937_64& rng);

// Marked points: P[k] sits on the tail component of edge k, Q[k] on its head.
struct PointConfiguration {
    std::vector<ProjRational> P, Q;
    bool operator==(const PointConfiguration& o) const = default;
};

// Half-edge (edge, end) with end 0 = tail (P), 1 = head (Q).
ProjRational& point(PointConfiguration& c, int edge, int end);
const ProjRational& point(const PointConfiguration& c, int edge, int end);
// Throws InvalidConfiguration on size mismatch, collisions or < 3 points.
void validate_configuration(const GraphShape& s, const PointConfiguration& c);
bool is_valid_configuration(const GraphShape& s, const PointConfiguration& c);
PointConfiguration apply_mobius(const GraphShape& s, const PointConfiguration& c, const std::vector<Mobius>& per_vertex);
// Swap each P_k with Q_k (for self-loops and for same-vertex symmetric strata).
PointConfiguration phi_iota(const PointConfiguration& c);

// Product over common vertices v of [out_1(v), in_1(v), out_2(v), in_2(v)],
// where out/in are the points of the steps leaving/entering v.
ProjRational psi_loop_pair(const GraphShape& s, const PointConfiguration& c, const Loop& a, const Loop& b);

enum class NamedStratum { Irreducible, FiveByFive, DoubledTriangle };
const std::vector<NamedStratum>& named_strata();
std::string stratum_name(NamedStratum n);  // "(1,1)", "(2,2)", "(4,2)"
std::string stratum_key(NamedStratum n);   // "irreducible", "5x5", "doubled_triangle"
GraphShape named_shape(NamedStratum n);
bool phi_iota_invariant(NamedStratum n);

struct FixedPoint {
    int edge = 0;
    int end = 0;
    ProjRational value;
};
std::vector<FixedPoint> normalization(NamedStratum n);

// Distinct small rationals per component honoring `fixed`; deterministic in seed.
PointConfiguration sample_configuration(const GraphShape& s, std::uint64_t seed,
                                        const std::vector<FixedPoint>& fixed = {});
PointConfiguration sample_configuration(NamedStratum n, std::uint64_t seed);
// Move the configuration into the stratum's normal form by one Mobius map per component.
PointConfiguration normalize(NamedStratum n, const PointConfiguration& c);

// Coordinates of the cross-ratio map:
//   (1,1): R12, R13, R14, R23, R24, R34 with Rij = Psi(s_i (x) s_j)
//   (2,2): Psi(s1(x)(s4-s2)), Psi(s2(x)(s4-s1)), Psi(s1(x)(s3-s2)), Psi(s2(x)(s3-s1)), Psi(s3(x)(s1-s4))
//   (4,2): R1, R2, R3, R4
std::vector<Rational> cr_map(NamedStratum n, const PointConfiguration& c);
// Psi(s_i (x) (s_j - s_k)) on the 5x5 stratum, 1-based indices in 1..4.
Rational psi_5x5(const PointConfiguration& c, int i, int j, int k);
// Z12, Z13, Z14, Z23, Z24: Zij = Psi(s_i s_j - s3 s4).
std::array<Rational, 5> five_by_five_z(const PointConfiguration& c);

struct DoubledTriangleValues {
    Rational R1, R2, R3, R4;
};
DoubledTriangleValues doubled_triangle_values(const PointConfiguration& c);
// psi_i for the loop pairs meeting at a single vertex, psi_4 for the two triangles.
std::array<Rational, 4> doubled_triangle_psi(const PointConfiguration& c);

// All normalized configurations with the given cr_map coordinates.
std::vector<PointConfiguration> torelli_fiber(NamedStratum n, const std::vector<Rational>& coords);

// Polynomial identities, generic over Rational and Polynomial.
template <class T>
T gerritzen_expr(const std::array<T, 6>& R) {
    const Rational one(1);
    const T &r12 = R[0], &r13 = R[1], &r14 = R[2], &r23 = R[3], &r24 = R[4], &r34 = R[5];
    T m12 = r12 - one, m13 = r13 - one, m14 = r14 - one, m23 = r23 - one, m24 = r24 - one, m34 = r34 - one;
    T delta = m12 * m13 * m14 * m23 * m24 * m34;
    T h = r12 * r13 * r14 * r23 * r24 * r34 - r12 * r14 * r24 - r13 * r14 * r34 - r23 * r24 * r34 -
          r12 * r13 * r23 + r14 * r23 + r13 * r24 + r12 * r34;
    auto sq = [](const T& x) { return T(x * x); };
    T g = r12 * r34 * sq(m13) * sq(m14) * sq(m23) * sq(m24) + r13 * r24 * sq(m12) * sq(m14) * sq(m23) * sq(m34) +
          r14 * r23 * sq(m12) * sq(m13) * sq(m24) * sq(m34);
    return T(delta * h - g);
}

template <class T>
T f5_expr(const std::array<T, 5>& z) {
    const T &z12 = z[0], &z13 = z[1], &z14 = z[2], &z23 = z[3], &z24 = z[4];
    return T(z12 * z13 * z14 * z23 * z24 - z12 * z14 * z23 - z12 * z13 * z24 - z13 * z14 * z23 * z24);
}

template <class T>
T doubled_triangle_expr(const std::array<T, 4>& r) {
    const Rational one(1);
    return T(r[3] * (one - r[0]) * (one - r[1]) * (one - r[2]) - one);
}

Rational gerritzen_eval(const std::array<Rational, 6>& R);
Rational f5_eval(const std::array<Rational, 5>& z);

Polynomial gerritzen_polynomial();
Polynomial f5_polynomial();
Polynomial doubled_triangle_polynomial();
// Lowest coefficient in T of Gerritzen's F under R_ij = Z_ij T (ij != 34), R34 = T.
Polynomial five_by_five_limit_polynomial();
Rational five_by_five_limit_eval(const std::array<Rational, 5>& z);

const std::vector<std::string>& gerritzen_variables();
const std::vector<std::string>& z_variables();
const std::vector<std::string>& doubled_triangle_variables();

nlohmann::ordered_json configuration_to_json(const PointConfiguration& c);

} // namespace rmlocus

#endif
