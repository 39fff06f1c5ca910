#include "rmlocus/caseanalysis.hpp"

#include <algorithm>
#include <set>

namespace rmlocus {

using ojson = nlohmann::ordered_json;

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::DisjointLoops: return "DisjointLoops";
    case Verdict::SharedVertex: return "SharedVertex";
    case Verdict::Exceptional5x5: return "Exceptional5x5";
    case Verdict::ExceptionalDoubledTriangle: return "ExceptionalDoubledTriangle";
    case Verdict::SeparatingReduced: return "SeparatingReduced";
    case Verdict::Unresolved: return "Unresolved";
    }
    return "";
}

namespace {

std::set<int> vertex_set(const GraphShape& s, const Loop& l) {
    auto vs = loop_vertices(s, l);
    return {vs.begin(), vs.end()};
}

bool disjoint(const std::set<int>& a, const std::set<int>& b) {
    return std::none_of(a.begin(), a.end(), [&](int x) { return b.count(x) > 0; });
}

bool edge_disjoint(const Loop& a, const Loop& b) {
    auto ea = loop_edge_set(a), eb = loop_edge_set(b);
    return std::none_of(ea.begin(), ea.end(), [&](int e) { return std::find(eb.begin(), eb.end(), e) != eb.end(); });
}

bool same_cycle(const Loop& a, const Loop& b) { return loop_edge_set(a) == loop_edge_set(b); }

std::vector<std::string> coords_json(const FieldElement& x) {
    std::vector<std::string> out;
    for (const auto& c : x.coords) out.push_back(to_string(c));
    return out;
}

} // namespace

std::optional<DisjointLoopsResult> criterion_disjoint_loops(const WeightedGraph& g) {
    auto pair = find_vertex_disjoint_simple_loops(g.shape());
    if (!pair) return std::nullopt;
    DisjointLoopsResult r;
    r.gamma1 = pair->first;
    r.gamma2 = pair->second;
    r.tensor = sym_class(g.field, lambda_of_loop(g, r.gamma1), lambda_of_loop(g, r.gamma2));
    r.in_n = in_n_space(g, r.tensor.coords);
    r.ev = ev(r.tensor);
    r.ev_nonzero = !r.ev.is_zero();
    return r;
}

std::vector<std::pair<Loop, Loop>> shared_vertex_candidates(const GraphShape& s) {
    auto loops = simple_loops(s);
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> order;
    for (std::size_t i = 0; i < loops.size(); ++i)
        for (std::size_t j = i + 1; j < loops.size(); ++j) {
            if (!edge_disjoint(loops[i], loops[j])) continue;
            auto a = vertex_set(s, loops[i]), b = vertex_set(s, loops[j]);
            std::size_t common = 0;
            for (int v : a) common += b.count(v);
            if (common != 1) continue;
            order.emplace_back(loops[i].steps.size() + loops[j].steps.size(), i, j);
        }
    std::sort(order.begin(), order.end());
    std::vector<std::pair<Loop, Loop>> out;
    for (auto [n, i, j] : order) out.emplace_back(loops[i], loops[j]);
    return out;
}

SharedVertexResult criterion_shared_vertex(const WeightedGraph& g, const Loop& gamma1, const Loop& gamma2) {
    GraphShape s = g.shape();
    if (!edge_disjoint(gamma1, gamma2)) throw InvalidInput("loops share an edge");
    auto a = vertex_set(s, gamma1), b = vertex_set(s, gamma2);
    std::vector<int> common;
    for (int v : a)
        if (b.count(v)) common.push_back(v);
    if (common.size() != 1) throw InvalidInput("loops must share exactly one vertex");

    SharedVertexResult r{gamma1, gamma2, common[0], {}, {}};
    std::vector<VertexSplit> qualifying;
    for (auto& split : vertex_splits(g, r.vertex)) {
        GraphShape t = split.graph.shape();
        if (!is_valid_loop(t, gamma1) || !is_valid_loop(t, gamma2)) continue;
        if (!disjoint(vertex_set(t, gamma1), vertex_set(t, gamma2))) continue;
        if (!connectivity_profile(t).is_precisely_2_connected) continue;
        qualifying.push_back(std::move(split));
    }
    if (qualifying.empty())
        throw NoQualifyingDegeneration("no precisely 2-connected degeneration at vertex " + std::to_string(r.vertex) +
                                       " separates " + loop_label(gamma1) + " and " + loop_label(gamma2));
    std::set<std::string> labels;
    for (const auto& split : qualifying) {
        const WeightedGraph& h = split.graph;
        GraphShape t = h.shape();
        std::set<int> v1 = vertex_set(t, gamma1), v2 = vertex_set(t, gamma2);
        SymClass base = loop_pair_tensor(h, gamma1, gamma2);
        std::optional<DegenerationWitness> found;
        for (const auto& g3 : simple_loops(t)) {
            if (same_cycle(g3, gamma1) || same_cycle(g3, gamma2)) continue;
            auto v3 = vertex_set(t, g3);
            for (int partner : {1, 2}) {
                if (!disjoint(v3, partner == 1 ? v1 : v2)) continue;
                SymClass other = loop_pair_tensor(h, partner == 1 ? gamma1 : gamma2, g3);
                int rank = static_cast<int>(ev_rank(h.field, {base.coords, other.coords}));
                if (rank == 2) {
                    found = DegenerationWitness{split.side2, t.label(), g3, partner, rank};
                    break;
                }
            }
            if (found) break;
        }
        if (!found)
            throw NoGamma3("no third loop with a rank-2 certificate on degeneration " + t.label());
        labels.insert(found->shape_label);
        r.degenerations.push_back(*found);
    }
    r.degeneration_shapes.assign(labels.begin(), labels.end());
    return r;
}

namespace {

// (i, j) index pairs of Z12, Z13, Z14, Z23, Z24, 0-based.
constexpr std::array<std::pair<int, int>, 5> kZPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}};

const std::array<std::vector<int>, 4>& monomial_vectors() {
    static const std::array<std::vector<int>, 4> v{
        std::vector<int>{1, 1, 1, 1, 1}, {1, 0, 1, 1, 0}, {1, 1, 0, 0, 1}, {0, 1, 1, 1, 1}};
    return v;
}

std::vector<int> difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

} // namespace

FieldElement z_exponent_ev(const FieldPtr& f, const std::vector<FieldElement>& s, const std::vector<int>& e) {
    FieldElement total = f->zero();
    FieldElement s34 = f->mul(s[2], s[3]);
    for (std::size_t k = 0; k < kZPairs.size(); ++k) {
        if (e[k] == 0) continue;
        auto [i, j] = kZPairs[k];
        total = total + Rational(e[k]) * (f->mul(s[i], s[j]) - s34);
    }
    return total;
}

FiveByFiveResult exceptional_5x5(const WeightedGraph& g, std::uint64_t config_seed, int configurations) {
    if (!g.shape().isomorphic(named_shape(NamedStratum::FiveByFive)))
        throw InvalidInput("exceptional 5x5 handler needs two vertices joined by five edges");
    const FieldPtr& f = g.field;
    // orient every edge from vertex 0 to vertex 1
    std::vector<FieldElement> r;
    for (int k = 0; k < 4; ++k) {
        const Edge& e = g.edges[k];
        r.push_back(e.tail == 0 ? e.weight : -e.weight);
    }
    if (f->rank_of(r) != 4) throw BasisDegeneracy("r1..r4 are not a basis of F");
    auto s = f->dual_basis(r);

    FiveByFiveResult res;
    res.configurations = configurations;
    res.f5_vanishes = true;
    res.limit_vanishes = true;
    for (int k = 0; k < configurations; ++k) {
        auto c = sample_configuration(NamedStratum::FiveByFive, derive_seed(config_seed, "5x5", k));
        auto z = five_by_five_z(c);
        Rational v = f5_eval(z);
        if (v != 0 && res.f5_vanishes) {
            res.f5_vanishes = false;
            res.f5_counterexample = c;
            res.f5_counterexample_value = v;
        }
        if (five_by_five_limit_eval(z) != 0) res.limit_vanishes = false;
    }

    Polynomial l = five_by_five_limit_polynomial();
    res.limit_terms = l.term_count();
    std::map<Vector, int> images;
    for (const auto& [m, c] : l.terms()) images[z_exponent_ev(f, s, m).coords] += 1;
    res.limit_ev_classes = images.size();
    for (const auto& [v, n] : images) res.limit_singleton_classes += n == 1;

    const auto& v = monomial_vectors();
    std::vector<Vector> rows;
    for (const auto& x : v) rows.emplace_back(x.begin(), x.end());
    res.monomial_span_dim = static_cast<int>(rank(rows, 5));
    res.pairings_nonzero = true;
    for (std::array<int, 4> o : {std::array<int, 4>{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}) {
        PairingCheck p{o, {z_exponent_ev(f, s, difference(v[o[0]], v[o[1]])),
                           z_exponent_ev(f, s, difference(v[o[2]], v[o[3]]))}};
        if (p.ev[0].is_zero() && p.ev[1].is_zero()) res.pairings_nonzero = false;
        res.pairings.push_back(p);
    }
    return res;
}

DoubledTriangleResult exceptional_doubled_triangle(const WeightedGraph& g, std::uint64_t config_seed,
                                                   int configurations) {
    if (!g.shape().isomorphic(named_shape(NamedStratum::DoubledTriangle)))
        throw InvalidInput("doubled-triangle handler needs the doubled triangle shape");
    DoubledTriangleResult res;
    res.configurations = configurations;
    res.relation_holds = true;
    res.psi_relation_holds = true;
    for (int k = 0; k < configurations; ++k) {
        auto c = sample_configuration(NamedStratum::DoubledTriangle, derive_seed(config_seed, "doubled_triangle", k));
        auto v = doubled_triangle_values(c);
        if (doubled_triangle_expr<Rational>({v.R1, v.R2, v.R3, v.R4}) != 0) res.relation_holds = false;
        auto p = doubled_triangle_psi(c);
        if (p[0] * p[1] * p[2] * p[3] != (p[0] - 1) * (p[1] - 1) * (p[2] - 1)) res.psi_relation_holds = false;
    }
    Polynomial poly = doubled_triangle_polynomial();
    res.terms = poly.term_count();
    res.binomial = binomial_test(poly);
    res.dim_ambient = static_cast<int>(n_space(g).dim());
    return res;
}

namespace {

std::vector<int> component_of(const GraphShape& s, int start, int removed_edge) {
    std::vector<bool> seen(s.vertices, false);
    std::vector<int> stack{start}, out;
    seen[start] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        out.push_back(v);
        for (int e = 0; e < s.edge_count(); ++e) {
            if (e == removed_edge) continue;
            auto [a, b] = s.edges[e];
            for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}})
                if (x == v && !seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool disconnects(const GraphShape& s, int e1, int e2) {
    GraphShape t{s.vertices, {}};
    for (int e = 0; e < s.edge_count(); ++e)
        if (e != e1 && e != e2) t.edges.push_back(s.edges[e]);
    return !t.is_connected();
}

BridgeLedger bridge_ledger(const WeightedGraph& g, int bridge) {
    GraphShape s = g.shape();
    const FieldPtr& f = g.field;
    BridgeLedger b;
    b.bridge = bridge;
    auto side1 = component_of(s, s.edges[bridge].first, bridge);
    std::set<int> in1(side1.begin(), side1.end());
    int e1 = 0, e2 = 0;
    for (int e = 0; e < s.edge_count(); ++e) {
        if (e == bridge) continue;
        (in1.count(s.edges[e].first) ? e1 : e2) += 1;
    }
    int n1 = static_cast<int>(side1.size()), n2 = s.vertices - n1;
    b.betti_side1 = e1 - n1 + 1;
    b.betti_side2 = e2 - n2 + 1;

    std::vector<Vector> l1, l2;
    for (const auto& l : simple_loops(s)) {
        auto vs = vertex_set(s, l);
        bool on1 = std::all_of(vs.begin(), vs.end(), [&](int v) { return in1.count(v) > 0; });
        bool on2 = std::none_of(vs.begin(), vs.end(), [&](int v) { return in1.count(v) > 0; });
        if (on1) l1.push_back(lambda_of_loop(g, l).coords);
        if (on2) l2.push_back(lambda_of_loop(g, l).coords);
    }
    Subspace f1 = Subspace::span(l1, f->degree()), f2 = Subspace::span(l2, f->degree());
    b.dim_f1 = static_cast<int>(f1.dim());
    b.dim_f2 = static_cast<int>(f2.dim());
    std::vector<Vector> classes;
    b.in_n = true;
    for (const auto& x : f1.basis())
        for (const auto& y : f2.basis()) {
            SymClass c = sym_class(f, FieldElement(x), FieldElement(y));
            if (!in_n_space(g, c.coords)) b.in_n = false;
            classes.push_back(c.coords);
        }
    b.dim_tensor = static_cast<int>(Subspace::span(classes, sym_dim(f->degree())).dim());
    b.ev_rank = classes.empty() ? 0 : static_cast<int>(ev_rank(f, classes));
    return b;
}

} // namespace

WeightedGraph contract_to_nice(const WeightedGraph& g, std::vector<std::string>* steps) {
    WeightedGraph h = g;
    for (;;) {
        auto br = bridges(h.shape());
        if (br.empty()) break;
        if (steps) steps->push_back("contract bridge " + std::to_string(br[0] + 1) + " of " + h.shape().label());
        h = contract_edge(h, br[0]);
    }
    while (!connectivity_profile(h.shape()).is_nice) {
        GraphShape s = h.shape();
        std::optional<int> cut;
        for (int a = 0; a < s.edge_count() && !cut; ++a)
            for (int b = a + 1; b < s.edge_count() && !cut; ++b) {
                if (s.edges[a].first == s.edges[a].second || s.edges[b].first == s.edges[b].second) continue;
                if (disconnects(s, a, b)) cut = b;
            }
        if (!cut) throw InternalError("graph is not nice but has no 2-edge-cut");
        if (steps) steps->push_back("contract edge " + std::to_string(*cut + 1) + " of 2-edge-cut in " + s.label());
        h = contract_edge(h, *cut);
    }
    return h;
}

bool SeparatingResult::resolved() const {
    if (bridges.empty() || !target_nice || target_dimension < 4) return false;
    for (const auto& b : bridges)
        if (!b.holds()) return false;
    if (admissible_found && target_has_self_loop && admissible_dim_T != 3) return false;
    return true;
}

SeparatingResult separating_reduction(const WeightedGraph& g, std::uint64_t seed) {
    GraphShape s = g.shape();
    auto br = bridges(s);
    if (br.empty()) throw NotABridgeGraph(s.label() + " has no separating edge");
    SeparatingResult r;
    for (int e : br) r.bridges.push_back(bridge_ledger(g, e));
    r.target = contract_to_nice(g, &r.steps);
    GraphShape t = r.target.shape();
    r.target_label = t.label();
    r.target_dimension = t.dimension();
    r.target_nice = connectivity_profile(t).is_nice;
    r.target_has_self_loop = std::any_of(t.edges.begin(), t.edges.end(), [](auto e) { return e.first == e.second; });
    if (auto a = find_admissible_weighting(t, g.field, seed, 64)) {
        r.admissible_found = true;
        r.admissible_dim_T = dim_rm_torus(*a);
    }
    return r;
}

std::uint64_t derive_seed(std::uint64_t base, const std::string& label, std::uint64_t index) {
    // FNV-1a over the label, then splitmix64 finalization
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : label) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::uint64_t z = base ^ h ^ (index * 0x9E3779B97F4A7C15ULL);
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::optional<std::string> graph_name(const GraphShape& s) {
    for (auto n : named_strata())
        if (s.isomorphic(named_shape(n))) return stratum_name(n);
    return std::nullopt;
}

namespace {

ojson loop_json(const Loop& l) { return loop_label(l); }

ojson disjoint_json(const DisjointLoopsResult& r) {
    ojson j;
    j["gamma1"] = loop_json(r.gamma1);
    j["gamma2"] = loop_json(r.gamma2);
    j["in_N"] = r.in_n;
    j["ev"] = coords_json(r.ev);
    return j;
}

ojson shared_json(const SharedVertexResult& r) {
    ojson j;
    j["gamma1"] = loop_json(r.gamma1);
    j["gamma2"] = loop_json(r.gamma2);
    j["vertex"] = r.vertex;
    j["qualifying_splits"] = r.degenerations.size();
    j["degeneration_shapes"] = r.degeneration_shapes;
    ojson ds = ojson::array();
    for (const auto& d : r.degenerations) {
        ojson x;
        ojson side = ojson::array();
        for (auto [e, end] : d.side2) side.push_back({e + 1, end == 0 ? "tail" : "head"});
        x["side2"] = side;
        x["shape"] = d.shape_label;
        x["gamma3"] = loop_json(d.gamma3);
        x["disjoint_from"] = d.partner == 1 ? "gamma1" : "gamma2";
        x["ev_rank"] = d.ev_rank;
        ds.push_back(x);
    }
    j["degenerations"] = ds;
    return j;
}

ojson five_json(const FiveByFiveResult& r) {
    ojson j;
    j["configurations"] = r.configurations;
    j["f5_vanishes"] = r.f5_vanishes;
    if (r.f5_counterexample) {
        j["f5_counterexample"] = configuration_to_json(*r.f5_counterexample);
        j["f5_counterexample_value"] = to_string(r.f5_counterexample_value);
    }
    j["limit_polynomial_vanishes"] = r.limit_vanishes;
    j["limit_polynomial_terms"] = r.limit_terms;
    j["limit_ev_classes"] = r.limit_ev_classes;
    j["limit_singleton_classes"] = r.limit_singleton_classes;
    j["monomial_span_dim"] = r.monomial_span_dim;
    ojson ps = ojson::array();
    for (const auto& p : r.pairings) {
        ojson x;
        x["differences"] = {
            "v" + std::to_string(p.order[0] + 1) + "-v" + std::to_string(p.order[1] + 1),
            "v" + std::to_string(p.order[2] + 1) + "-v" + std::to_string(p.order[3] + 1)};
        x["ev"] = {coords_json(p.ev[0]), coords_json(p.ev[1])};
        ps.push_back(x);
    }
    j["pairings"] = ps;
    j["pairings_nonzero"] = r.pairings_nonzero;
    return j;
}

ojson triangle_json(const DoubledTriangleResult& r) {
    ojson j;
    j["configurations"] = r.configurations;
    j["relation_holds"] = r.relation_holds;
    j["psi_relation_holds"] = r.psi_relation_holds;
    j["relation"] = doubled_triangle_polynomial().to_string(doubled_triangle_variables());
    j["terms"] = r.terms;
    j["binomial_test_decided"] = r.binomial.decided;
    j["is_torus_coset"] = r.binomial.is_torus_coset;
    if (r.binomial.certificate) {
        j["irreducibility_variable"] = doubled_triangle_variables()[r.binomial.certificate->variable];
        j["irreducibility_reason"] = r.binomial.certificate->reason;
    }
    j["dim_ambient"] = r.dim_ambient;
    return j;
}

ojson separating_json(const SeparatingResult& r) {
    ojson j;
    ojson bs = ojson::array();
    for (const auto& b : r.bridges) {
        ojson x;
        x["bridge"] = b.bridge + 1;
        x["split"] = {b.betti_side1, b.betti_side2};
        x["dim_F1"] = b.dim_f1;
        x["dim_F2"] = b.dim_f2;
        x["dim_F1_tensor_F2"] = b.dim_tensor;
        x["ev_rank"] = b.ev_rank;
        x["in_N"] = b.in_n;
        x["holds"] = b.holds();
        bs.push_back(x);
    }
    j["bridges"] = bs;
    j["steps"] = r.steps;
    j["target"] = r.target_label;
    j["target_dimension"] = r.target_dimension;
    j["target_nice"] = r.target_nice;
    j["target_has_self_loop"] = r.target_has_self_loop;
    j["target_admissible_found"] = r.admissible_found;
    if (r.admissible_found) j["target_dim_T"] = r.admissible_dim_T;
    return j;
}

template <class F>
bool for_all_samples(const std::vector<WeightedGraph>& samples, ojson& per_sample, F&& run) {
    bool ok = true;
    per_sample = ojson::array();
    for (const auto& g : samples) {
        auto [pass, j] = run(g);
        per_sample.push_back(j);
        ok = ok && pass;
    }
    return ok;
}

} // namespace

StratumReport analyze_stratum(const GraphShape& s, const std::vector<WeightedGraph>& samples,
                              const std::vector<std::uint64_t>& seeds, const AnalysisOptions& opt) {
    if (samples.empty()) throw InvalidInput("at least one weighting is required");
    const FieldPtr& f = samples.front().field;
    StratumReport r;
    r.label = s.label();
    r.graph_name = graph_name(s);
    r.bridgeless = bridges(s).empty();
    r.dimension = s.dimension();
    r.in_scope = r.bridgeless || r.dimension >= 4;
    r.seeds = seeds;

    bool dim_thm = true, rank_nullity = true;
    int admissible = 0;
    ojson dims = ojson::array();
    for (const auto& g : samples) {
        auto inv = stratum_invariants(g);
        dim_thm = dim_thm && inv.dim_ambient == static_cast<int>(sym_dim(f->degree())) - inv.n_distinct_weights;
        rank_nullity = rank_nullity && inv.dim_T == inv.dim_T_rank_nullity;
        admissible += inv.admissible;
        dims.push_back({inv.n_distinct_weights, inv.dim_ambient, inv.dim_T});
    }
    r.invariants["n_dimN_dimT_per_sample"] = dims;
    r.invariants["dimension_theorem_holds"] = dim_thm;
    r.invariants["rank_nullity_agrees"] = rank_nullity;
    r.invariants["admissible_samples"] = admissible;
    std::uint64_t adm_seed = derive_seed(opt.seed, r.label, 1u << 20);
    if (auto a = find_admissible_weighting(s, f, adm_seed, opt.admissible_attempts)) {
        r.invariants["admissible_weighting"] = graph_to_json(*a);
        r.invariants["admissible_dim_T"] = dim_rm_torus(*a);
    } else {
        r.invariants["admissible_weighting"] = nullptr;
    }

    ojson per;
    if (r.bridgeless) {
        if (find_vertex_disjoint_simple_loops(s)) {
            bool ok = for_all_samples(samples, per, [](const WeightedGraph& g) {
                auto d = criterion_disjoint_loops(g);
                return std::pair{d->in_n && d->ev_nonzero, disjoint_json(*d)};
            });
            if (ok) {
                r.verdict = Verdict::DisjointLoops;
                r.witness["samples"] = per;
                return r;
            }
            r.notes.push_back("disjoint-loop certificate failed on some weighting");
        }
        for (const auto& [g1, g2] : shared_vertex_candidates(s)) {
            try {
                bool ok = for_all_samples(samples, per, [&](const WeightedGraph& g) {
                    return std::pair{true, shared_json(criterion_shared_vertex(g, g1, g2))};
                });
                if (ok) {
                    r.verdict = Verdict::SharedVertex;
                    r.witness["samples"] = per;
                    return r;
                }
            } catch (const NoQualifyingDegeneration& e) {
                r.notes.push_back(e.what());
            } catch (const NoGamma3& e) {
                r.notes.push_back(e.what());
            }
        }
        if (s.isomorphic(named_shape(NamedStratum::FiveByFive))) {
            bool ok = for_all_samples(samples, per, [&](const WeightedGraph& g) {
                auto x = exceptional_5x5(g, opt.seed, opt.configurations);
                return std::pair{x.resolved(), five_json(x)};
            });
            r.witness["samples"] = per;
            if (ok) r.verdict = Verdict::Exceptional5x5;
            return r;
        }
        if (s.isomorphic(named_shape(NamedStratum::DoubledTriangle))) {
            bool ok = for_all_samples(samples, per, [&](const WeightedGraph& g) {
                auto x = exceptional_doubled_triangle(g, opt.seed, opt.configurations);
                return std::pair{x.resolved(), triangle_json(x)};
            });
            r.witness["samples"] = per;
            if (ok) r.verdict = Verdict::ExceptionalDoubledTriangle;
            return r;
        }
        return r;
    }
    std::size_t k = 0;
    bool ok = for_all_samples(samples, per, [&](const WeightedGraph& g) {
        auto x = separating_reduction(g, derive_seed(opt.seed, r.label, (1u << 21) + k++));
        return std::pair{x.resolved(), separating_json(x)};
    });
    r.witness["samples"] = per;
    if (ok) r.verdict = Verdict::SeparatingReduced;
    return r;
}

StratumReport analyze_weighted(const WeightedGraph& g, const AnalysisOptions& opt) {
    auto rep = validate(g);
    if (!rep.valid()) {
        std::string msg;
        for (const auto& m : rep.messages) msg += (msg.empty() ? "" : "; ") + m;
        throw InvalidInput(msg);
    }
    return analyze_stratum(g.shape(), {g}, {}, opt);
}

ojson to_json(const StratumReport& r) {
    ojson j;
    j["label"] = r.label;
    j["graph_name"] = r.graph_name ? ojson(*r.graph_name) : ojson(nullptr);
    j["bridgeless"] = r.bridgeless;
    j["dimension"] = r.dimension;
    j["in_scope"] = r.in_scope;
    j["verdict"] = verdict_name(r.verdict);
    j["seeds"] = r.seeds;
    j["invariants"] = r.invariants;
    j["witness"] = r.witness;
    j["notes"] = r.notes;
    return j;
}

namespace {

VerifyReport run_sweep(const FieldPtr& f, const AnalysisOptions& opt, bool parallel) {
    if (f->degree() != 4) throw InvalidInput("the case analysis needs a quartic field");
    if (opt.samples < 1) throw InvalidInput("samples must be positive");
    auto en = enumerate_relevant(4, 3);
    std::vector<GraphShape> shapes = en.bridgeless;
    shapes.insert(shapes.end(), en.with_bridges.begin(), en.with_bridges.end());

    VerifyReport rep;
    rep.field = f;
    rep.options = opt;
    rep.strata.resize(shapes.size());
    const long n = static_cast<long>(shapes.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long i = 0; i < n; ++i) {
        const GraphShape& s = shapes[i];
        std::string label = s.label();
        std::vector<WeightedGraph> samples;
        std::vector<std::uint64_t> seeds;
        try {
            for (int k = 0; k < opt.samples; ++k) {
                seeds.push_back(derive_seed(opt.seed, label, k));
                samples.push_back(sample_weights(s, f, seeds.back()));
            }
            rep.strata[i] = analyze_stratum(s, samples, seeds, opt);
        } catch (const std::exception& e) {
            StratumReport r;
            r.label = label;
            r.graph_name = graph_name(s);
            r.bridgeless = bridges(s).empty();
            r.dimension = s.dimension();
            r.in_scope = r.bridgeless || r.dimension >= 4;
            r.seeds = seeds;
            r.notes.push_back(e.what());
            rep.strata[i] = r;
        }
    }
    for (auto v : {Verdict::DisjointLoops, Verdict::SharedVertex, Verdict::Exceptional5x5,
                   Verdict::ExceptionalDoubledTriangle, Verdict::SeparatingReduced, Verdict::Unresolved})
        rep.verdict_counts[verdict_name(v)] = 0;
    for (const auto& r : rep.strata) {
        rep.verdict_counts[verdict_name(r.verdict)] += 1;
        if (r.in_scope && r.verdict == Verdict::Unresolved) rep.unresolved.push_back(r.label);
    }
    rep.theorem_verified = rep.unresolved.empty();
    return rep;
}

} // namespace

VerifyReport verify_all(const FieldPtr& f, const AnalysisOptions& opt) { return run_sweep(f, opt, true); }
VerifyReport verify_all_serial(const FieldPtr& f, const AnalysisOptions& opt) { return run_sweep(f, opt, false); }

ojson to_json(const VerifyReport& r) {
    ojson j;
    j["field"] = field_to_string(r.field->polynomial());
    j["seed"] = r.options.seed;
    j["samples_per_shape"] = r.options.samples;
    j["configurations"] = r.options.configurations;
    ojson counts;
    for (auto v : {Verdict::DisjointLoops, Verdict::SharedVertex, Verdict::Exceptional5x5,
                   Verdict::ExceptionalDoubledTriangle, Verdict::SeparatingReduced, Verdict::Unresolved})
        counts[verdict_name(v)] = r.verdict_counts.at(verdict_name(v));
    j["verdict_counts"] = counts;
    j["unresolved"] = r.unresolved;
    j["theorem_verified"] = r.theorem_verified;
    ojson bl = ojson::array(), br = ojson::array();
    for (const auto& s : r.strata) (s.bridgeless ? bl : br).push_back(to_json(s));
    j["bridgeless"] = bl;
    j["with_bridges"] = br;
    return j;
}

void require_theorem(const VerifyReport& r) {
    if (r.theorem_verified) return;
    std::string msg;
    for (const auto& l : r.unresolved) msg += (msg.empty() ? "" : ", ") + l;
    throw UnresolvedStratum("unresolved strata: " + msg);
}

} // namespace rmlocus
