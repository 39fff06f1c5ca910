#include <doctest.h>

#include "rmlocus/caseanalysis.hpp"

#include <set>

using namespace rmlocus;

namespace {

const FieldPtr& field() {
    static FieldPtr f = default_field();
    return f;
}

GraphShape find_shape(const std::string& label) {
    auto en = enumerate_relevant(4, 3);
    for (const auto* list : {&en.bridgeless, &en.with_bridges})
        for (const auto& s : *list)
            if (s.label() == label) return s;
    throw std::runtime_error("missing shape " + label);
}

const VerifyReport& sweep() {
    static VerifyReport r = [] {
        AnalysisOptions o;
        o.samples = 4;
        o.configurations = 30;
        return verify_all(field(), o);
    }();
    return r;
}

const StratumReport& stratum(const std::string& label) {
    for (const auto& s : sweep().strata)
        if (s.label == label) return s;
    throw std::runtime_error("missing stratum " + label);
}

} // namespace

TEST_CASE("verdict counts over the enumeration") {
    const auto& r = sweep();
    CHECK(r.strata.size() == 28);
    CHECK(r.verdict_counts.at("DisjointLoops") == 9);
    CHECK(r.verdict_counts.at("SharedVertex") == 6);
    CHECK(r.verdict_counts.at("Exceptional5x5") == 1);
    CHECK(r.verdict_counts.at("ExceptionalDoubledTriangle") == 1);
    CHECK(r.verdict_counts.at("SeparatingReduced") == 11);
    CHECK(r.verdict_counts.at("Unresolved") == 0);
    CHECK(r.unresolved.empty());
    CHECK(r.theorem_verified);
    CHECK_NOTHROW(require_theorem(r));

    CHECK(stratum("V2 L0,0 M5").verdict == Verdict::Exceptional5x5);
    CHECK(stratum("V3 L0,0,0 M2,2,2").verdict == Verdict::ExceptionalDoubledTriangle);
    CHECK(stratum("V1 L4").verdict == Verdict::SharedVertex);
    CHECK(stratum("V1 L4").graph_name == std::optional<std::string>("(1,1)"));
    CHECK(stratum("V2 L0,0 M5").graph_name == std::optional<std::string>("(2,2)"));
    CHECK(stratum("V3 L0,0,0 M2,2,2").graph_name == std::optional<std::string>("(4,2)"));

    int in_scope_bridge = 0;
    for (const auto& s : r.strata) {
        CHECK(s.in_scope == (s.bridgeless || s.dimension >= 4));
        if (!s.bridgeless) {
            CHECK(s.verdict == Verdict::SeparatingReduced);
            in_scope_bridge += s.in_scope;
        }
    }
    CHECK(in_scope_bridge == 2);
    CHECK(stratum("V2 L2,2 M1").in_scope);
    CHECK(stratum("V2 L3,1 M1").in_scope);
}

TEST_CASE("require_theorem names unresolved strata") {
    VerifyReport r = sweep();
    r.unresolved = {"V1 L4"};
    r.theorem_verified = false;
    CHECK_THROWS_AS(require_theorem(r), UnresolvedStratum);
}

TEST_CASE("serial and parallel sweeps are byte-identical") {
    AnalysisOptions o;
    o.seed = 11;
    o.samples = 2;
    o.configurations = 10;
    auto a = to_json(verify_all(field(), o)).dump();
    auto b = to_json(verify_all_serial(field(), o)).dump();
    CHECK(a == b);
}

TEST_CASE("disjoint-loop certificate: ev equals the product of loop periods") {
    for (const auto& s : enumerate_relevant(4, 3).bridgeless) {
        if (!find_vertex_disjoint_simple_loops(s)) continue;
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            auto g = sample_weights(s, field(), seed);
            auto d = criterion_disjoint_loops(g);
            REQUIRE(d);
            auto prod = field()->mul(lambda_of_loop(g, d->gamma1), lambda_of_loop(g, d->gamma2));
            CHECK(d->ev == prod);
            CHECK(d->ev_nonzero);
            CHECK(d->in_n);
        }
    }
    CHECK_FALSE(criterion_disjoint_loops(sample_weights(find_shape("V1 L4"), field(), 0)));
}

TEST_CASE("shared-vertex degenerations are precisely 2-connected and separate the loops") {
    for (const auto& s : enumerate_relevant(4, 3).bridgeless) {
        if (find_vertex_disjoint_simple_loops(s)) continue;
        auto g = sample_weights(s, field(), 3);
        for (const auto& [g1, g2] : shared_vertex_candidates(s)) {
            SharedVertexResult r;
            try {
                r = criterion_shared_vertex(g, g1, g2);
            } catch (const NoQualifyingDegeneration&) {
                continue;
            }
            CHECK_FALSE(r.degenerations.empty());
            for (const auto& d : r.degenerations) {
                auto h = split_vertex(g, r.vertex, d.side2);
                GraphShape t = h.shape();
                CHECK(connectivity_profile(t).is_precisely_2_connected);
                auto v1 = loop_vertices(t, g1), v2 = loop_vertices(t, g2), v3 = loop_vertices(t, d.gamma3);
                std::set<int> a(v1.begin(), v1.end()), b(v2.begin(), v2.end());
                for (int v : b) CHECK(a.count(v) == 0);
                std::set<int> partner = d.partner == 1 ? a : b;
                for (int v : v3) CHECK(partner.count(v) == 0);
                CHECK(d.ev_rank == 2);
                CHECK(t.label() == d.shape_label);
            }
        }
    }
}

TEST_CASE("single-vertex stratum: one degeneration shape for a pair of self-loops") {
    GraphShape s = find_shape("V1 L4");
    auto g = sample_weights(s, field(), 5);
    Loop a{{{0, true}}}, b{{{1, true}}};
    auto r = criterion_shared_vertex(g, a, b);
    CHECK(r.vertex == 0);
    CHECK(r.degeneration_shapes.size() == 1);
    CHECK_THROWS_AS(criterion_shared_vertex(g, a, a), InvalidInput);
}

TEST_CASE("doubled triangle: no qualifying degeneration for any shared-vertex pair") {
    GraphShape s = named_shape(NamedStratum::DoubledTriangle);
    auto g = sample_weights(s, field(), 2);
    auto cands = shared_vertex_candidates(s);
    CHECK(cands.size() == 3);
    for (const auto& [a, b] : cands) CHECK_THROWS_AS(criterion_shared_vertex(g, a, b), NoQualifyingDegeneration);
    auto x = exceptional_doubled_triangle(g, 0, 40);
    CHECK(x.relation_holds);
    CHECK(x.psi_relation_holds);
    CHECK(x.terms == 9);
    CHECK(x.binomial.decided);
    CHECK_FALSE(x.binomial.is_torus_coset);
    CHECK(x.dim_ambient == 4);
    CHECK(x.resolved());
}

TEST_CASE("5x5: loops meet in two vertices, so no shared-vertex candidate exists") {
    GraphShape s = named_shape(NamedStratum::FiveByFive);
    CHECK(shared_vertex_candidates(s).empty());
    CHECK_FALSE(find_vertex_disjoint_simple_loops(s));
    // splitting a vertex yields a graph where every pair of 2-cycles still shares a vertex
    auto g = sample_weights(s, field(), 4);
    for (const auto& split : vertex_splits(g, 0)) CHECK_FALSE(find_vertex_disjoint_simple_loops(split.graph.shape()));
}

TEST_CASE("5x5 handler") {
    GraphShape s = named_shape(NamedStratum::FiveByFive);
    const auto& f = field();
    auto g = sample_weights(s, f, 9);
    auto x = exceptional_5x5(g, 0, 50);
    CHECK_FALSE(x.f5_vanishes);
    REQUIRE(x.f5_counterexample);
    CHECK(x.f5_counterexample_value != 0);
    CHECK(f5_eval(five_by_five_z(*x.f5_counterexample)) == x.f5_counterexample_value);
    CHECK(x.limit_vanishes);
    CHECK(x.limit_terms == 22);
    CHECK(x.limit_singleton_classes > 0);
    CHECK(x.monomial_span_dim == 3);
    CHECK(x.pairings.size() == 3);
    CHECK(x.pairings_nonzero);
    CHECK(x.resolved());

    // first pairing: v3 - v4 has class s1 s2 - s1 s4 - s2 s3 + s3 s4 = (s1 - s3)(s2 - s4)
    std::vector<FieldElement> r;
    for (int k = 0; k < 4; ++k) r.push_back(g.edges[k].tail == 0 ? g.edges[k].weight : -g.edges[k].weight);
    auto d = f->dual_basis(r);
    CHECK(x.pairings[0].ev[1] == f->mul(d[0] - d[2], d[1] - d[3]));
    // and v1 - v2 gives s1 s3 + s2 s4 - 2 s3 s4
    auto s34 = f->mul(d[2], d[3]);
    CHECK(x.pairings[0].ev[0] == f->mul(d[0], d[2]) + f->mul(d[1], d[3]) - Rational(2) * s34);
}

TEST_CASE("5x5 handler on the power-basis weighting") {
    // symmetric weights merge some character classes; singletons remain
    const auto& f = field();
    WeightedGraph g{f, 2, {}};
    FieldElement last = f->zero();
    for (int k = 0; k < 4; ++k) {
        g.edges.push_back({0, 1, f->basis(k)});
        last = last - f->basis(k);
    }
    g.edges.push_back({0, 1, last});
    auto x = exceptional_5x5(g, 0, 20);
    CHECK(x.limit_ev_classes < x.limit_terms);
    CHECK(x.limit_singleton_classes > 0);
    CHECK(x.resolved());
    CHECK(analyze_weighted(g, {}).verdict == Verdict::Exceptional5x5);
}

TEST_CASE("5x5 handler rejects a dependent first four weights") {
    GraphShape s = named_shape(NamedStratum::FiveByFive);
    const auto& f = field();
    WeightedGraph g{f, 2, {}};
    std::vector<FieldElement> w{f->one(), f->basis(1), f->one() + f->basis(1), f->basis(2)};
    FieldElement last = f->zero();
    for (const auto& x : w) last = last - x;
    w.push_back(last);
    for (int k = 0; k < 5; ++k) g.edges.push_back({s.edges[k].first, s.edges[k].second, w[k]});
    CHECK_THROWS_AS(exceptional_5x5(g, 0, 5), BasisDegeneracy);
    CHECK_THROWS_AS(exceptional_5x5(sample_weights(find_shape("V1 L4"), f, 0), 0, 5), InvalidInput);
}

TEST_CASE("separating reduction") {
    const auto& f = field();
    CHECK_THROWS_AS(separating_reduction(sample_weights(find_shape("V1 L4"), f, 0), 0), NotABridgeGraph);
    for (const auto& s : enumerate_relevant(4, 3).with_bridges) {
        auto g = sample_weights(s, f, 7);
        auto r = separating_reduction(g, 1);
        CHECK_FALSE(r.bridges.empty());
        for (const auto& b : r.bridges) {
            CHECK(b.betti_side1 + b.betti_side2 == 4);
            CHECK(b.dim_f1 == b.betti_side1);
            CHECK(b.dim_f2 == b.betti_side2);
            CHECK(b.holds());
        }
        CHECK(r.target_nice);
        CHECK(bridges(r.target.shape()).empty());
        CHECK(r.target.shape().dimension() >= s.dimension());
        CHECK(validate(r.target).valid());
        CHECK(r.resolved());
        if (s.dimension() >= 4) CHECK(r.target_label == "V1 L4");
    }
}

TEST_CASE("contract_to_nice is the identity on nice graphs") {
    auto g = sample_weights(find_shape("V2 L0,0 M5"), field(), 1);
    std::vector<std::string> steps;
    auto h = contract_to_nice(g, &steps);
    CHECK(steps.empty());
    CHECK(weighted_isomorphic(g, h));
}

TEST_CASE("derive_seed") {
    CHECK(derive_seed(0, "V1 L4", 0) == derive_seed(0, "V1 L4", 0));
    std::set<std::uint64_t> seen;
    for (const auto& s : enumerate_relevant(4, 3).bridgeless)
        for (std::uint64_t i = 0; i < 10; ++i) seen.insert(derive_seed(0, s.label(), i));
    CHECK(seen.size() == 170);
    CHECK(derive_seed(1, "V1 L4", 0) != derive_seed(0, "V1 L4", 0));
}

TEST_CASE("analyze_weighted rejects invalid graphs") {
    auto g = sample_weights(find_shape("V2 L1,1 M3"), field(), 0);
    for (auto& e : g.edges)
        if (e.tail != e.head) {
            e.weight = e.weight + field()->one();
            break;
        }
    CHECK_THROWS_AS(analyze_weighted(g, {}), InvalidInput);
    auto ok = analyze_weighted(sample_weights(find_shape("V2 L1,1 M3"), field(), 0), {});
    CHECK(ok.verdict == Verdict::DisjointLoops);
    CHECK(to_json(ok)["verdict"] == "DisjointLoops");
}

TEST_CASE("one-edge degenerations of the 5x5 shape have no separating edge") {
    auto g = sample_weights(named_shape(NamedStratum::FiveByFive), field(), 0);
    int splits = 0;
    for (int v = 0; v < 2; ++v)
        for (const auto& split : vertex_splits(g, v)) {
            ++splits;
            CHECK(bridges(split.graph.shape()).empty());
            CHECK_THROWS_AS(separating_reduction(split.graph, 0), NotABridgeGraph);
        }
    CHECK(splits > 0);
}

TEST_CASE("bridge ledger: a 2+2 split has a 4-dimensional tensor, a 1+3 split a 3-dimensional one") {
    for (auto [label, dim] : {std::pair{"V2 L2,2 M1", 4}, std::pair{"V2 L3,1 M1", 3}}) {
        auto r = separating_reduction(sample_weights(find_shape(label), field(), 2), 0);
        REQUIRE(r.bridges.size() == 1);
        CHECK(r.bridges[0].dim_tensor == dim);
        CHECK(r.bridges[0].in_n);
        CHECK(r.bridges[0].ev_rank >= 2);
    }
}

TEST_CASE("verdict counts are stable on another totally real quartic field") {
    auto f = make_field({2, 0, -4, 0, 1});
    AnalysisOptions o;
    o.seed = 3;
    o.samples = 2;
    o.configurations = 10;
    auto r = verify_all(f, o);
    CHECK(r.verdict_counts.at("DisjointLoops") == 9);
    CHECK(r.verdict_counts.at("SharedVertex") == 6);
    CHECK(r.verdict_counts.at("Exceptional5x5") == 1);
    CHECK(r.verdict_counts.at("ExceptionalDoubledTriangle") == 1);
    CHECK(r.theorem_verified);
    CHECK_THROWS_AS(verify_all(make_field({-2, 0, 1}), o), InvalidInput);
}
