#include <doctest.h>

#include "rmlocus/exactfield.hpp"
#include "test_util.hpp"

using namespace rmlocus;

namespace {

// Power sums of the roots via Newton's identities, from the coefficients only.
std::vector<Rational> newton_power_sums(const IntPoly& p, std::size_t count) {
    std::size_t g = p.size() - 1;
    std::vector<Rational> e(g + 1);
    e[0] = 1;
    for (std::size_t k = 1; k <= g; ++k) e[k] = Rational(p[g - k]) * ((k % 2) ? -1 : 1);
    std::vector<Rational> ps{Rational(static_cast<long>(g))};
    for (std::size_t k = 1; k < count; ++k) {
        Rational s = 0;
        for (std::size_t i = 1; i <= std::min(k - 1, g); ++i) s += ((i % 2) ? 1 : -1) * e[i] * ps[k - i];
        if (k <= g) s += ((k % 2) ? 1 : -1) * Rational(static_cast<long>(k)) * e[k];
        ps.push_back(s);
    }
    return ps;
}

// Counts sign changes of p on a fine rational grid (intermediate value oracle).
int grid_sign_changes(const IntPoly& p, int lo, int hi, int steps_per_unit) {
    int changes = 0, last = 0;
    for (int k = lo * steps_per_unit; k <= hi * steps_per_unit; ++k) {
        Rational x(k, steps_per_unit), v = 0;
        x.canonicalize();
        for (std::size_t i = p.size(); i-- > 0;) v = v * x + Rational(p[i]);
        int s = sgn(v);
        if (s != 0 && last != 0 && s != last) ++changes;
        if (s != 0) last = s;
    }
    return changes;
}

const IntPoly kF0{1, 0, -10, 0, 1};

} // namespace

TEST_CASE("default field is accepted with four real roots") {
    auto f = default_field();
    CHECK(f->degree() == 4);
    CHECK(sturm_real_root_count(kF0) == 4);
    CHECK(grid_sign_changes(kF0, -5, 5, 64) == 4);
}

TEST_CASE("Sturm count agrees with the grid oracle") {
    std::vector<IntPoly> polys{{-2, 0, 1}, {1, 0, 1}, {1, -3, 0, 1}, {-1, -3, 0, 1}, {5, 0, -6, 0, 1},
                               {2, 0, 0, 0, 1}, {1, 1, 1, 1, 1}, {-7, 0, 1, 0, 1}};
    for (const auto& p : polys) CHECK(sturm_real_root_count(p) == grid_sign_changes(p, -8, 8, 256));
}

TEST_CASE("make_field rejections") {
    CHECK(make_field({-2, 0, 1})->degree() == 2);
    CHECK_THROWS_AS(make_field({1, 0, 1}), NotTotallyReal);
    CHECK_THROWS_AS(make_field({4, 0, -4, 0, 1}), NotSquarefree);  // (t^2-2)^2
    CHECK_THROWS_AS(make_field({6, 0, -5, 0, 1}), Reducible);      // (t^2-2)(t^2-3)
    CHECK_THROWS_AS(make_field({0, -4, 0, 1}), Reducible);          // root t = 0
    CHECK_THROWS_AS(make_field({-6, -7, 0, 1}), Reducible);         // roots -1, -2, 3
    CHECK_THROWS_AS(make_field({2, 1, -9, 1, 1}), Reducible);       // (t^2-2t-1)(t^2+3t-2)
    CHECK(has_rational_factor({2, 1, -9, 1, 1}));
    CHECK_FALSE(has_rational_factor({1, 0, -10, 0, 1}));
    CHECK_THROWS_AS(make_field({1, -6, 7, -2, 0}), InvalidInput);   // not monic
    CHECK_THROWS_AS(make_field({3, 1}), InvalidInput);
    CHECK(make_field({1, -3, 0, 1})->degree() == 3);                // 2cos(2pi/9)
    CHECK(make_field({1, 0, -4, 0, 1})->degree() == 4);             // Q(sqrt2+sqrt6)/...
}

TEST_CASE("multiplication reduces by the defining polynomial") {
    auto f = default_field();
    auto t = f->basis(1);
    CHECK(f->mul(t, t) == f->basis(2));
    auto t2 = f->basis(2);
    CHECK(f->mul(t2, t2) == f->from_coords({-1, 0, 10, 0}));
    auto tinv = f->inv(t);
    CHECK(tinv == f->from_coords({0, 10, 0, -1}));
    CHECK(f->mul(t, tinv) == f->one());
    CHECK_THROWS_AS(f->inv(f->zero()), DivisionByZero);
}

TEST_CASE("ring axioms on random elements") {
    auto f = default_field();
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        auto x = testutil::rand_elem(f, rng), y = testutil::rand_elem(f, rng), z = testutil::rand_elem(f, rng);
        CHECK(f->mul(x, y) == f->mul(y, x));
        CHECK(f->mul(f->mul(x, y), z) == f->mul(x, f->mul(y, z)));
        CHECK(f->mul(x, y + z) == f->mul(x, y) + f->mul(x, z));
        if (!x.is_zero()) CHECK(f->mul(x, f->inv(x)) == f->one());
    }
}

TEST_CASE("trace form matches Newton's identities") {
    for (const IntPoly& p : {kF0, IntPoly{-2, 0, 1}, IntPoly{1, -3, 0, 1}, IntPoly{1, 0, -4, 0, 1}}) {
        auto f = make_field(p);
        std::size_t g = f->degree();
        auto ps = newton_power_sums(p, 2 * g - 1);
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j) CHECK(f->gram()(i, j) == ps[i + j]);
    }
    auto f = default_field();
    CHECK(newton_power_sums(kF0, 7) == std::vector<Rational>{4, 0, 20, 0, 196, 0, 1940});
    CHECK(f->trace_pairing(f->one(), f->one()) == 4);
    CHECK(f->trace_pairing(f->one(), f->basis(1)) == 0);
    CHECK(f->trace_pairing(f->basis(1), f->basis(1)) == 20);
}

TEST_CASE("trace pairing symmetry, bilinearity and Tr(xyz) symmetry") {
    auto f = default_field();
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        auto x = testutil::rand_elem(f, rng), y = testutil::rand_elem(f, rng), z = testutil::rand_elem(f, rng);
        Rational c = testutil::rand_q(rng);
        CHECK(f->trace_pairing(x, y) == f->trace_pairing(y, x));
        CHECK(f->trace_pairing(c * x + z, y) == c * f->trace_pairing(x, y) + f->trace_pairing(z, y));
        Rational t = f->trace(f->mul(f->mul(x, y), z));
        CHECK(t == f->trace(f->mul(f->mul(y, z), x)));
        CHECK(t == f->trace(f->mul(f->mul(z, x), y)));
        CHECK(t == f->trace(f->mul(f->mul(y, x), z)));
    }
}

TEST_CASE("Gram matrices of random bases are positive definite") {
    auto f = default_field();
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<FieldElement> b;
        for (int i = 0; i < 4; ++i) b.push_back(testutil::rand_elem(f, rng));
        if (f->rank_of(b) < 4) continue;
        Matrix gm = f->gram_of(b);
        for (std::size_t k = 1; k <= 4; ++k) {
            Matrix minor(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) minor(i, j) = gm(i, j);
            CHECK(determinant(minor) > 0);
        }
    }
}

TEST_CASE("dual basis") {
    auto f = default_field();
    auto pb = f->power_basis();
    auto dual = f->dual_basis(pb);
    Matrix gram = Matrix::from_rows({{4, 0, 20, 0}, {0, 20, 0, 196}, {20, 0, 196, 0}, {0, 196, 0, 1940}}, 4);
    Matrix ginv = *inverse(gram);
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(dual[j].coords == ginv.row(j));
        for (std::size_t i = 0; i < 4; ++i) CHECK(f->trace_pairing(pb[i], dual[j]) == (i == j ? 1 : 0));
    }
    CHECK(f->dual_basis(dual) == pb);
    std::vector<FieldElement> bad{f->one(), f->basis(1), f->basis(2), f->one() + f->basis(1)};
    CHECK_THROWS_AS(f->dual_basis(bad), SingularGram);
}

TEST_CASE("orthogonal basis") {
    auto f = default_field();
    auto b = f->orthogonal_basis();
    CHECK(b[0] == f->one());
    CHECK(b[1] == f->basis(1));
    // Gram-Schmidt oracle, done by hand: t^2 - Tr(t^2)/Tr(1) = t^2 - 5.
    CHECK(b[2] == f->from_coords({-5, 0, 1, 0}));
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(f->trace_pairing(b[i], b[i]) > 0);
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) CHECK(f->trace_pairing(b[i], b[j]) == 0);
    }
    auto dual = f->dual_basis(b);
    for (std::size_t i = 0; i < 4; ++i) CHECK(dual[i] == (1 / f->trace_pairing(b[i], b[i])) * b[i]);
}
