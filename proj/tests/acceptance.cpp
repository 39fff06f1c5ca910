// Acceptance checks: one PASS/FAIL line per criterion.
// Usage: acceptance [--criterion ID]   (IDs 1..8, with 6 split into 6a, 6b, 6c)

#include "oracles.hpp"
#include "rmlocus/caseanalysis.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace rmlocus;

namespace {

// Sample sizes and limits.
constexpr int kWeightSamples = 20;
constexpr int kTriples = 1000;
constexpr int kConfigurations = 100;
constexpr double kEnumerationSeconds = 1.0;

struct Outcome {
    bool pass;
    std::string detail;
};

const FieldPtr& field() {
    static FieldPtr f = default_field();
    return f;
}

std::vector<GraphShape> all_shapes() {
    auto en = enumerate_relevant(4, 3);
    auto out = en.bridgeless;
    out.insert(out.end(), en.with_bridges.begin(), en.with_bridges.end());
    return out;
}

Rational small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n(-9, 9), d(1, 6);
    Rational q(n(rng), d(rng));
    q.canonicalize();
    return q;
}

FieldElement random_element(std::mt19937_64& rng) {
    Vector v;
    for (int i = 0; i < 4; ++i) v.push_back(small_rational(rng));
    return FieldElement(v);
}

Outcome enumeration() {
    auto t0 = std::chrono::steady_clock::now();
    auto en = enumerate_relevant(4, 3);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::set<std::vector<int>> ob, obr, gb, gbr;
    oracle::oracle_enumerate(ob, obr);
    for (const auto& s : en.bridgeless) gb.insert(oracle::adjacency_canon(s));
    for (const auto& s : en.with_bridges) gbr.insert(oracle::adjacency_canon(s));
    int v1 = 0, v2 = 0;
    for (const auto& s : en.bridgeless) {
        v1 += s.vertices == 1;
        v2 += s.vertices == 2;
    }
    bool same = gb == ob && gbr == obr && gb.size() == en.bridgeless.size() && gbr.size() == en.with_bridges.size();
    std::ostringstream d;
    d << v1 << " one-vertex, " << v2 << " two-vertex bridgeless; oracle match " << (same ? "yes" : "no") << "; "
      << secs << " s";
    return {v1 == 1 && v2 == 5 && same && secs < kEnumerationSeconds, d.str()};
}

Outcome dimension_theorem() {
    int checked = 0, violations = 0;
    for (const auto& s : all_shapes())
        for (int k = 0; k < kWeightSamples; ++k) {
            auto g = sample_weights(s, field(), derive_seed(0, s.label(), k));
            int n = static_cast<int>(distinct_weights(g).size());
            // independent count: rank of the squares r (x) r in Sym
            std::vector<Vector> squares;
            for (const auto& e : g.edges)
                if (!e.weight.is_zero()) squares.push_back(sym_square(field(), e.weight).coords);
            int rank_sq = static_cast<int>(rank(squares, sym_dim(4)));
            int dim_n = -1;
            try {
                dim_n = static_cast<int>(n_space(g).dim());
            } catch (const DimensionTheoremViolation&) {
            }
            ++checked;
            if (dim_n != 10 - n || rank_sq != n) ++violations;
        }
    return {violations == 0, std::to_string(checked) + " weightings, " + std::to_string(violations) + " violations"};
}

Outcome torus_calculus() {
    int checked = 0, disagree = 0;
    for (const auto& s : all_shapes())
        for (int k = 0; k < kWeightSamples; ++k) {
            auto g = sample_weights(s, field(), derive_seed(0, s.label(), k));
            ++checked;
            if (dim_rm_torus(g) != dim_rm_torus_rank_nullity(g)) ++disagree;
        }
    auto g = orthogonal_weights(named_shape(NamedStratum::Irreducible), field());
    bool admissible = g && is_admissible(*g).admissible;
    int dim_t = g ? dim_rm_torus(*g) : -1;
    std::ostringstream d;
    d << checked << " weightings, " << disagree << " disagreements; orthogonal irreducible admissible "
      << (admissible ? "yes" : "no") << ", dim T " << dim_t;
    return {disagree == 0 && admissible && dim_t == 3, d.str()};
}

Outcome duality() {
    const auto& f = field();
    std::mt19937_64 rng(2024);
    int bad = 0;
    for (int k = 0; k < kTriples; ++k) {
        auto x = random_element(rng), s = random_element(rng), t = random_element(rng);
        if (pair(times_epsilon(f, x), sym_class(f, s, t)) != f->trace(f->mul(x, f->mul(s, t)))) ++bad;
    }
    std::vector<SymTensor> gens;
    for (const auto& v : lambda_one(f).basis()) gens.push_back({f, v});
    bool ann = annihilator_in_S(f, gens) == ker_ev(f);
    return {bad == 0 && ann, std::to_string(kTriples) + " triples, " + std::to_string(bad) +
                                 " failures; Ann(Lambda^1) == ker ev: " + (ann ? "yes" : "no")};
}

Outcome gerritzen() {
    int vanish = 0;
    for (int k = 0; k < kConfigurations; ++k) {
        auto c = sample_configuration(NamedStratum::Irreducible, derive_seed(0, "acceptance-gerritzen", k));
        auto R = cr_map(NamedStratum::Irreducible, c);
        vanish += gerritzen_eval({R[0], R[1], R[2], R[3], R[4], R[5]}) == 0;
    }
    std::mt19937_64 rng(7);
    std::array<Rational, 6> t;
    for (auto& x : t) x = small_rational(rng);
    Rational off = gerritzen_eval(t);
    return {vanish == kConfigurations && off != 0,
            std::to_string(vanish) + "/" + std::to_string(kConfigurations) + " vanish; off-image value " +
                to_string(off)};
}

Outcome f5_vanishing() {
    int vanish = 0;
    Rational first = 0;
    for (int k = 0; k < kConfigurations; ++k) {
        auto c = sample_configuration(NamedStratum::FiveByFive, derive_seed(0, "acceptance-f5", k));
        Rational v = f5_eval(five_by_five_z(c));
        if (v == 0)
            ++vanish;
        else if (first == 0)
            first = v;
    }
    std::string d = std::to_string(vanish) + "/" + std::to_string(kConfigurations) + " vanish";
    if (first != 0) d += "; first nonzero value " + to_string(first);
    return {vanish == kConfigurations, d};
}

Outcome doubled_triangle_relation() {
    int holds = 0;
    for (int k = 0; k < kConfigurations; ++k) {
        auto c = sample_configuration(NamedStratum::DoubledTriangle, derive_seed(0, "acceptance-dt", k));
        auto v = doubled_triangle_values(c);
        holds += v.R4 * (1 - v.R1) * (1 - v.R2) * (1 - v.R3) == 1;
    }
    return {holds == kConfigurations, std::to_string(holds) + "/" + std::to_string(kConfigurations) + " hold"};
}

Outcome doubled_triangle_binomial() {
    Polynomial p = doubled_triangle_polynomial();
    BinomialTest b = binomial_test(p);
    bool pass = p.term_count() >= 3 && b.decided && !b.is_torus_coset;
    return {pass, std::to_string(p.term_count()) + " monomials; torus coset: " +
                      (b.decided ? (b.is_torus_coset ? "yes" : "no") : "undecided")};
}

Outcome sweep() {
    VerifyReport r = verify_all(field(), AnalysisOptions{});
    auto count = [&](Verdict v) { return r.verdict_counts.at(verdict_name(v)); };
    bool counts = count(Verdict::DisjointLoops) == 9 && count(Verdict::SharedVertex) == 6 &&
                  count(Verdict::Exceptional5x5) == 1 && count(Verdict::ExceptionalDoubledTriangle) == 1;
    bool bridges_ok = true;
    int in_scope_bridges = 0;
    for (const auto& s : r.strata) {
        if (s.bridgeless || s.dimension < 4) continue;
        ++in_scope_bridges;
        bridges_ok = bridges_ok && s.verdict == Verdict::SeparatingReduced;
        for (const auto& sample : s.witness.value("samples", nlohmann::ordered_json::array()))
            for (const auto& b : sample["bridges"]) {
                int d = b["dim_F1_tensor_F2"];
                bridges_ok = bridges_ok && b["holds"] && (d == 3 || d == 4) && b["ev_rank"].get<int>() >= 2;
            }
    }
    int exit_code = r.theorem_verified ? 0 : 1;
    std::ostringstream d;
    d << "DisjointLoops " << count(Verdict::DisjointLoops) << ", SharedVertex " << count(Verdict::SharedVertex)
      << ", Exceptional5x5 " << count(Verdict::Exceptional5x5) << ", ExceptionalDoubledTriangle "
      << count(Verdict::ExceptionalDoubledTriangle) << "; " << in_scope_bridges << " dim>=4 bridge shapes "
      << (bridges_ok ? "reduced" : "NOT reduced") << "; exit " << exit_code;
    return {counts && bridges_ok && in_scope_bridges > 0 && exit_code == 0, d.str()};
}

Outcome torelli() {
    int pairs = 0, bad = 0;
    for (auto n : named_strata())
        for (int k = 0; k < kConfigurations; ++k) {
            auto x = sample_configuration(n, derive_seed(0, "acceptance-torelli-x", k));
            auto cx = cr_map(n, x);
            // an independent draw collides only if it is x or its phi-iota partner
            auto y = sample_configuration(n, derive_seed(0, "acceptance-torelli-y", k));
            std::vector<PointConfiguration> related{x};
            if (phi_iota_invariant(n)) related.push_back(normalize(n, phi_iota(x)));
            bool is_related = std::find(related.begin(), related.end(), y) != related.end();
            ++pairs;
            if ((cr_map(n, y) == cx) != is_related) ++bad;
            // the phi-iota partner collides exactly on the invariant strata
            auto z = normalize(n, phi_iota(x));
            ++pairs;
            if ((cr_map(n, z) == cx) != (phi_iota_invariant(n) || z == x)) ++bad;
            // and the fibre is exactly the related set
            auto fiber = torelli_fiber(n, cx);
            std::size_t expect = phi_iota_invariant(n) && !(related[1] == x) ? 2 : 1;
            if (fiber.size() != expect) ++bad;
            for (const auto& c : fiber)
                if (std::find(related.begin(), related.end(), c) == related.end()) ++bad;
        }
    return {bad == 0, std::to_string(pairs) + " pairs over " + std::to_string(named_strata().size()) + " strata, " +
                          std::to_string(bad) + " unexpected"};
}

struct Criterion {
    std::string id;
    std::string name;
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> c{
        {"1", "enumeration", enumeration},
        {"2", "dimension theorem", dimension_theorem},
        {"3", "torus calculus", torus_calculus},
        {"4", "duality identities", duality},
        {"5", "Gerritzen equation", gerritzen},
        {"6a", "F5 vanishes on (2,2) configurations", f5_vanishing},
        {"6b", "doubled-triangle relation", doubled_triangle_relation},
        {"6c", "doubled-triangle relation is not a torus coset", doubled_triangle_binomial},
        {"7", "criteria sweep", sweep},
        {"8", "Torelli sampling", torelli},
    };
    return c;
}

} // namespace

int main(int argc, char** argv) {
    std::string only;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--criterion" && i + 1 < argc) {
            only = argv[++i];
        } else {
            std::cerr << "usage: acceptance [--criterion ID]\n";
            return 2;
        }
    }
    bool all = true, ran = false;
    for (const auto& c : criteria()) {
        if (!only.empty() && c.id != only) continue;
        ran = true;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << ": " << o.detail << std::endl;
        all = all && o.pass;
    }
    if (!ran) {
        std::cerr << "unknown criterion " << only << "\n";
        return 2;
    }
    return all ? 0 : 1;
}
