#include <doctest.h>

#include "rmlocus/rmtorus.hpp"
#include "test_util.hpp"

#include <algorithm>

using namespace rmlocus;

namespace {

WeightedGraph irreducible(const FieldPtr& f, const std::vector<FieldElement>& w) {
    WeightedGraph g{f, 1, {}};
    for (const auto& r : w) g.edges.push_back({0, 0, r});
    return g;
}

WeightedGraph five_by_five(const FieldPtr& f) {
    WeightedGraph g{f, 2, {}};
    FieldElement sum = f->zero();
    for (std::size_t i = 0; i < 4; ++i) {
        g.edges.push_back({0, 1, f->basis(i)});
        sum = sum + f->basis(i);
    }
    g.edges.push_back({0, 1, -sum});
    return g;
}

// Independent count of weights up to sign: pairwise comparison.
int naive_distinct(const WeightedGraph& g) {
    std::vector<FieldElement> seen;
    for (const auto& e : g.edges) {
        if (e.weight.is_zero()) continue;
        bool dup = false;
        for (const auto& s : seen)
            if (s == e.weight || s == -e.weight) dup = true;
        if (!dup) seen.push_back(e.weight);
    }
    return static_cast<int>(seen.size());
}

bool in_ker_ev(const FieldPtr& f, const Vector& x) { return ev_coords(f, x).is_zero(); }

} // namespace

TEST_CASE("n_space dimensions on named strata") {
    auto f = default_field();
    CHECK(n_space(irreducible(f, f->power_basis())).dim() == 6);
    CHECK(n_space(five_by_five(f)).dim() == 5);

    // V2 L2,1 M2 with both parallel edges carrying r and -r
    FieldElement r = f->basis(3);
    WeightedGraph g{f, 2, {{0, 0, f->basis(0)}, {0, 0, f->basis(1)}, {1, 1, f->basis(2)}, {0, 1, r}, {0, 1, -r}}};
    REQUIRE(validate(g).valid());
    CHECK(distinct_weights(g).size() == 4);
    CHECK(n_space(g).dim() == 6);
}

TEST_CASE("n_space rejects dependent squares") {
    auto f = default_field();
    // only valid inputs are guaranteed independent; a rescaled duplicate is not
    WeightedGraph g = irreducible(f, {f->basis(0), Rational(2) * f->basis(0), f->basis(1), f->basis(2)});
    CHECK(distinct_weights(g).size() == 4);
    CHECK_THROWS_AS(n_space(g), DimensionTheoremViolation);
}

TEST_CASE("orthogonal irreducible weighting is admissible with dim T 3") {
    auto f = default_field();
    auto b = f->orthogonal_basis();
    WeightedGraph g = irreducible(f, b);
    // sum (1/<b,b>) b (x) b is the inverse Gram form, hence in Lambda^1
    Vector eps = zero_vector(sym_dim(4));
    for (const auto& x : b) eps = eps + (Rational(1) / f->trace_pairing(x, x)) * sym_square(f, x).coords;
    REQUIRE(lambda_one(f).contains(eps));
    auto cert = is_admissible(g);
    CHECK(cert.admissible);
    CHECK_FALSE(cert.violating_ray);
    for (const auto& ray : cert.rays) CHECK(in_n_space(g, ray));
    CHECK(positive_combination_in_lambda_one(g));
    CHECK(dim_rm_torus(g) == 3);
    CHECK(dim_rm_torus_rank_nullity(g) == 3);
}

TEST_CASE("inadmissible weighting carries a verified violating ray") {
    auto f = default_field();
    auto shapes = enumerate_relevant().bridgeless;
    int found = 0;
    for (const auto& s : shapes) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            WeightedGraph g = sample_weights(s, f, seed);
            auto cert = is_admissible(g);
            if (cert.admissible) continue;
            ++found;
            REQUIRE(cert.violating_ray);
            const Vector& x = *cert.violating_ray;
            CHECK(in_ker_ev(f, x));
            for (const auto& sq : weight_squares(g)) CHECK(pair(sq, SymClass{f, x}) >= 0);
            CHECK_FALSE(in_n_space(g, x));
            CHECK_FALSE(positive_combination_in_lambda_one(g));
        }
    }
    CHECK(found > 0);
}

TEST_CASE("cone rays satisfy the defining inequalities") {
    auto f = default_field();
    for (const auto& s : enumerate_relevant().bridgeless) {
        WeightedGraph g = sample_weights(s, f, 11);
        auto cert = is_admissible(g);
        for (const auto& x : cert.rays) {
            CHECK(in_ker_ev(f, x));
            for (const auto& sq : weight_squares(g)) CHECK(pair(sq, SymClass{f, x}) >= 0);
        }
        for (const auto& x : cert.lineality) {
            CHECK(in_ker_ev(f, x));
            for (const auto& sq : weight_squares(g)) CHECK(pair(sq, SymClass{f, x}) == 0);
        }
    }
}

TEST_CASE("intersection_codim") {
    auto f = default_field();
    WeightedGraph g = irreducible(f, f->orthogonal_basis());
    std::vector<SymClass> basis;
    for (const auto& v : n_space(g).basis()) basis.push_back({f, v});
    CHECK(intersection_codim(g, basis) == dim_rm_torus(g));
    CHECK(intersection_codim(g, {}) == 0);

    // a witness outside N is rejected
    CHECK_THROWS_AS(intersection_codim(g, {cone_witness_outside_n(g)}), NotInN);

    Loop l1{{{0, true}}}, l2{{{1, true}}};
    auto t = loop_pair_tensor(g, l1, l2);
    CHECK(intersection_codim(g, {t}) >= 1);
}

TEST_CASE("loop_pair_tensor") {
    auto f = default_field();
    WeightedGraph g{f, 2, {{0, 0, f->basis(0)}, {1, 1, f->basis(1)}, {0, 1, f->basis(2)}, {0, 1, f->basis(3)},
                           {1, 0, f->basis(2) + f->basis(3)}}};
    REQUIRE(validate(g).valid());
    Loop a{{{0, true}}}, b{{{1, true}}};
    auto t = loop_pair_tensor(g, a, b);
    CHECK(ev(t) == f->mul(lambda_of_loop(g, a), lambda_of_loop(g, b)));
    CHECK_FALSE(ev(t).is_zero());
    for (const auto& sq : weight_squares(g)) CHECK(pair(sq, t) == 0);

    Loop c{{{2, true}, {4, true}}};
    Loop d{{{2, true}, {3, false}}};
    CHECK_THROWS_AS(loop_pair_tensor(g, c, d), SharedEdge);
    CHECK(loop_pair_tensor(g, a, Loop{}).coords == zero_vector(sym_dim(4)));
}

TEST_CASE("cone witness lies in C(S) but not N(S)") {
    auto f = default_field();
    auto en = enumerate_relevant();
    std::vector<GraphShape> all = en.bridgeless;
    all.insert(all.end(), en.with_bridges.begin(), en.with_bridges.end());
    for (const auto& s : all) {
        WeightedGraph g = sample_weights(s, f, 5);
        auto w = cone_witness_outside_n(g);
        auto sq = weight_squares(g);
        CHECK(pair(sq[0], w) == 1);
        for (std::size_t i = 1; i < sq.size(); ++i) CHECK(pair(sq[i], w) == 0);
        CHECK_FALSE(in_n_space(g, w.coords));
    }
}

TEST_CASE("invariant sweep over all shapes") {
    auto f = default_field();
    auto en = enumerate_relevant();
    std::vector<GraphShape> all = en.bridgeless;
    all.insert(all.end(), en.with_bridges.begin(), en.with_bridges.end());
    REQUIRE(all.size() == 28);
    for (const auto& s : all) {
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            WeightedGraph g = sample_weights(s, f, seed * 31 + 7);
            auto inv = stratum_invariants(g);
            int n = naive_distinct(g);
            CHECK(inv.n_distinct_weights == n);
            CHECK(inv.dim_ambient == 10 - n);
            CHECK(inv.dim_T == inv.dim_T_rank_nullity);
            CHECK(inv.dim_T <= 4);
            CHECK(inv.admissible == positive_combination_in_lambda_one(g));
            if (inv.admissible) CHECK(inv.dim_T <= 3);

            for (const auto& a : simple_loops(s)) {
                for (const auto& b : simple_loops(s)) {
                    auto ea = loop_edge_set(a), eb = loop_edge_set(b);
                    bool shared = std::any_of(ea.begin(), ea.end(), [&](int e) {
                        return std::find(eb.begin(), eb.end(), e) != eb.end();
                    });
                    if (shared) continue;
                    auto t = loop_pair_tensor(g, a, b);
                    CHECK(ev(t) == f->mul(lambda_of_loop(g, a), lambda_of_loop(g, b)));
                }
            }
            if (auto vd = find_vertex_disjoint_simple_loops(s)) {
                CHECK_FALSE(lambda_of_loop(g, vd->first).is_zero());
                CHECK_FALSE(lambda_of_loop(g, vd->second).is_zero());
                CHECK_FALSE(ev(loop_pair_tensor(g, vd->first, vd->second)).is_zero());
            }
        }
    }
}

TEST_CASE("admissible weightings found by search") {
    auto f = default_field();
    auto en = enumerate_relevant();
    std::vector<GraphShape> all = en.bridgeless;
    all.insert(all.end(), en.with_bridges.begin(), en.with_bridges.end());
    int found = 0;
    for (const auto& s : all) {
        auto g = find_admissible_weighting(s, f, 3, 200);
        if (!g) continue;
        ++found;
        REQUIRE(validate(*g).valid());
        CHECK(positive_combination_in_lambda_one(*g));
        int t = dim_rm_torus(*g);
        CHECK(t <= 3);
        bool self_loop = std::any_of(s.edges.begin(), s.edges.end(), [](auto e) { return e.first == e.second; });
        if (self_loop) CHECK(t == 3);
    }
    CHECK(found >= 5);
    CHECK(find_admissible_weighting(GraphShape{1, {{0, 0}, {0, 0}, {0, 0}, {0, 0}}}, f, 1, 10));
}
