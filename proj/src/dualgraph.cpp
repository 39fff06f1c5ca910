#include "rmlocus/dualgraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace rmlocus {

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

bool connected_without(const GraphShape& s, const std::vector<int>& removed) {
    if (s.vertices == 0) return true;
    UnionFind uf(s.vertices);
    for (int e = 0; e < s.edge_count(); ++e) {
        if (std::find(removed.begin(), removed.end(), e) != removed.end()) continue;
        uf.unite(s.edges[e].first, s.edges[e].second);
    }
    for (int v = 1; v < s.vertices; ++v)
        if (uf.find(v) != uf.find(0)) return false;
    return true;
}

std::vector<std::pair<int, int>> relabeled(const GraphShape& s, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : s.edges) {
        int x = perm[a], y = perm[b];
        es.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(es.begin(), es.end());
    return es;
}

std::string join(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
    return out;
}

// Signed flow per edge: +1 tail->head, -1 head->tail.
int run_flow(const GraphShape& s, int p, int q, const std::vector<int>& removed, int limit,
             std::vector<int>& flow) {
    int m = s.edge_count();
    flow.assign(m, 0);
    std::vector<bool> off(m, false);
    for (int e : removed) off[e] = true;
    int value = 0;
    while (value < limit) {
        std::vector<int> via(s.vertices, -1), dir(s.vertices, 0);
        std::vector<bool> seen(s.vertices, false);
        std::deque<int> queue{p};
        seen[p] = true;
        while (!queue.empty() && !seen[q]) {
            int x = queue.front();
            queue.pop_front();
            for (int e = 0; e < m; ++e) {
                if (off[e]) continue;
                auto [t, h] = s.edges[e];
                if (t == h) continue;
                if (t == x && !seen[h] && flow[e] < 1) {
                    seen[h] = true, via[h] = e, dir[h] = 1;
                    queue.push_back(h);
                } else if (h == x && !seen[t] && flow[e] > -1) {
                    seen[t] = true, via[t] = e, dir[t] = -1;
                    queue.push_back(t);
                }
            }
        }
        if (!seen[q]) break;
        for (int x = q; x != p;) {
            int e = via[x];
            flow[e] += dir[x];
            x = dir[x] == 1 ? s.edges[e].first : s.edges[e].second;
        }
        ++value;
    }
    return value;
}

Vector canonical_sign(const Vector& w) {
    for (const auto& c : w) {
        if (c > 0) return w;
        if (c < 0) return -w;
    }
    return w;
}

std::string vector_key(const Vector& v) {
    std::string out;
    for (const auto& c : v) out += c.get_str() + ";";
    return out;
}

} // namespace

int GraphShape::degree(int v) const {
    int d = 0;
    for (auto [a, b] : edges) d += (a == v) + (b == v);
    return d;
}

int GraphShape::loops_at(int v) const {
    int c = 0;
    for (auto [a, b] : edges) c += (a == v && b == v);
    return c;
}

bool GraphShape::is_connected() const { return connected_without(*this, {}); }

int GraphShape::dimension() const {
    int d = 0;
    for (int v = 0; v < vertices; ++v) d += degree(v) - 3;
    return d;
}

std::vector<std::pair<int, int>> GraphShape::certificate() const {
    std::vector<int> perm(vertices);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<int, int>> best;
    bool first = true;
    do {
        auto es = relabeled(*this, perm);
        if (first || es < best) best = es;
        first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

GraphShape GraphShape::canonical() const { return GraphShape{vertices, certificate()}; }

std::string GraphShape::label() const {
    GraphShape c = canonical();
    std::vector<int> loops, mult;
    for (int v = 0; v < vertices; ++v) loops.push_back(c.loops_at(v));
    for (int i = 0; i < vertices; ++i)
        for (int j = i + 1; j < vertices; ++j)
            mult.push_back(static_cast<int>(std::count(c.edges.begin(), c.edges.end(), std::make_pair(i, j))));
    std::string out = "V" + std::to_string(vertices) + " L" + join(loops);
    if (!mult.empty()) out += " M" + join(mult);
    return out;
}

GraphShape WeightedGraph::shape() const {
    GraphShape s{vertices, {}};
    for (const auto& e : edges) s.edges.emplace_back(e.tail, e.head);
    return s;
}

std::vector<FieldElement> WeightedGraph::weights() const {
    std::vector<FieldElement> w;
    for (const auto& e : edges) w.push_back(e.weight);
    return w;
}

std::vector<int> loop_vertices(const GraphShape& s, const Loop& l) {
    std::vector<int> starts;
    for (std::size_t k = 0; k < l.steps.size(); ++k) {
        const auto& st = l.steps[k];
        if (st.edge < 0 || st.edge >= s.edge_count()) throw InvalidInput("loop edge out of range");
        auto [t, h] = s.edges[st.edge];
        starts.push_back(st.forward ? t : h);
    }
    for (std::size_t k = 0; k < l.steps.size(); ++k) {
        const auto& st = l.steps[k];
        auto [t, h] = s.edges[st.edge];
        int end = st.forward ? h : t;
        if (end != starts[(k + 1) % starts.size()]) throw InvalidInput("loop is not closed");
    }
    return starts;
}

bool is_valid_loop(const GraphShape& s, const Loop& l) {
    try {
        loop_vertices(s, l);
        return true;
    } catch (const InvalidInput&) {
        return false;
    }
}

bool is_simple(const GraphShape& s, const Loop& l) {
    if (l.steps.empty() || !is_valid_loop(s, l)) return false;
    auto vs = loop_vertices(s, l);
    std::set<int> uniq(vs.begin(), vs.end());
    return uniq.size() == vs.size();
}

std::vector<int> crossing_counts(const GraphShape& s, const Loop& l) {
    loop_vertices(s, l);
    std::vector<int> c(s.edge_count(), 0);
    for (const auto& st : l.steps) c[st.edge] += st.forward ? 1 : -1;
    return c;
}

std::vector<int> loop_edge_set(const Loop& l) {
    std::vector<int> es;
    for (const auto& st : l.steps) es.push_back(st.edge);
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return es;
}

Loop reversed(const Loop& l) {
    Loop r;
    for (auto it = l.steps.rbegin(); it != l.steps.rend(); ++it) r.steps.push_back({it->edge, !it->forward});
    return r;
}

std::string loop_label(const Loop& l) {
    std::string out = "(";
    for (std::size_t k = 0; k < l.steps.size(); ++k) {
        if (k) out += " ";
        if (!l.steps[k].forward) out += "-";
        out += std::to_string(l.steps[k].edge + 1);
    }
    return out + ")";
}

ValidationReport validate(const WeightedGraph& g) {
    ValidationReport r;
    GraphShape s = g.shape();
    std::size_t deg = g.field->degree();
    r.connected = s.is_connected();
    if (!r.connected) r.messages.push_back("graph is not connected");
    r.genus = s.betti();
    r.genus_matches_field = r.genus == static_cast<int>(deg);
    if (!r.genus_matches_field)
        r.messages.push_back("first Betti number " + std::to_string(r.genus) + " differs from field degree " +
                             std::to_string(deg));
    r.circulation = true;
    for (int v = 0; v < g.vertices; ++v) {
        FieldElement sum = g.field->zero();
        for (const auto& e : g.edges) {
            if (e.head == v) sum = sum + e.weight;
            if (e.tail == v) sum = sum - e.weight;
        }
        if (!sum.is_zero()) {
            r.circulation = false;
            r.circulation_failures.push_back(v);
            r.messages.push_back("circulation fails at vertex " + std::to_string(v));
        }
    }
    r.spanning = g.field->rank_of(g.weights()) == deg;
    if (!r.spanning) r.messages.push_back("weights do not span the field");
    r.stable = true;
    for (int v = 0; v < g.vertices; ++v)
        if (s.degree(v) < 3) {
            r.stable = false;
            r.unstable_vertices.push_back(v);
            r.messages.push_back("vertex " + std::to_string(v) + " has degree " + std::to_string(s.degree(v)));
        }
    r.dimension = s.dimension();
    if (r.genus == 4) {
        r.dimension_identity = r.dimension == 6 - g.vertices;
        if (!r.dimension_identity) r.messages.push_back("stratum dimension differs from 6 - V");
    }
    return r;
}

std::vector<std::vector<int>> cycle_basis(const GraphShape& s) {
    if (!s.is_connected()) throw NotConnected("shape is not connected");
    int n = s.vertices, m = s.edge_count();
    std::vector<int> parent_edge(n, -1);
    std::vector<bool> seen(n, false), tree(m, false);
    std::deque<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int e = 0; e < m; ++e) {
            auto [t, h] = s.edges[e];
            if (t == h) continue;
            int y = t == x ? h : (h == x ? t : -1);
            if (y < 0 || seen[y]) continue;
            seen[y] = true;
            parent_edge[y] = e;
            tree[e] = true;
            queue.push_back(y);
        }
    }
    // potential path from x to the root, as signed edge incidence
    auto to_root = [&](int x) {
        std::vector<int> p(m, 0);
        while (parent_edge[x] >= 0) {
            int e = parent_edge[x];
            auto [t, h] = s.edges[e];
            int up = t == x ? h : t;
            p[e] += t == x ? 1 : -1;
            x = up;
        }
        return p;
    };
    std::vector<std::vector<int>> basis;
    for (int e = 0; e < m; ++e) {
        if (tree[e]) continue;
        std::vector<int> c(m, 0);
        c[e] = 1;
        auto [t, h] = s.edges[e];
        if (t != h) {
            auto ph = to_root(h), pt = to_root(t);
            for (int k = 0; k < m; ++k) c[k] += ph[k] - pt[k];
        }
        basis.push_back(c);
    }
    return basis;
}

namespace {

WeightedGraph combine_cycles(const GraphShape& s, const FieldPtr& f, const std::vector<std::vector<int>>& cycles,
                             const std::vector<FieldElement>& coeffs) {
    WeightedGraph g{f, s.vertices, {}};
    for (int e = 0; e < s.edge_count(); ++e) {
        FieldElement w = f->zero();
        for (std::size_t k = 0; k < cycles.size(); ++k)
            if (cycles[k][e] != 0) w = w + Rational(cycles[k][e]) * coeffs[k];
        g.edges.push_back({s.edges[e].first, s.edges[e].second, w});
    }
    return g;
}

} // namespace

WeightedGraph sample_weights(const GraphShape& s, const FieldPtr& f, std::uint64_t seed) {
    if (!s.is_connected()) throw NotConnected("shape is not connected");
    if (s.betti() != static_cast<int>(f->degree()))
        throw ShapeGenusMismatch("shape has first Betti number " + std::to_string(s.betti()) +
                                 ", field degree " + std::to_string(f->degree()));
    auto cycles = cycle_basis(s);
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<FieldElement> coeffs;
        for (std::size_t k = 0; k < cycles.size(); ++k) {
            Vector c;
            for (std::size_t i = 0; i < f->degree(); ++i) c.emplace_back(static_cast<long>(rng() % 19) - 9);
            coeffs.emplace_back(c);
        }
        WeightedGraph g = combine_cycles(s, f, cycles, coeffs);
        if (f->rank_of(g.weights()) == f->degree()) return g;
    }
    throw InternalError("no spanning weighting found in 1000 attempts");
}

WeightedGraph weights_from_cycles(const GraphShape& s, const FieldPtr& f, const std::vector<FieldElement>& coeffs) {
    auto cycles = cycle_basis(s);
    if (coeffs.size() != cycles.size()) throw ShapeGenusMismatch("one coefficient per independent cycle required");
    return combine_cycles(s, f, cycles, coeffs);
}

std::optional<WeightedGraph> orthogonal_weights(const GraphShape& s, const FieldPtr& f) {
    if (s.betti() != static_cast<int>(f->degree())) throw ShapeGenusMismatch("shape genus differs from field degree");
    WeightedGraph g = combine_cycles(s, f, cycle_basis(s), f->orthogonal_basis());
    if (f->rank_of(g.weights()) != f->degree()) return std::nullopt;
    return g;
}

FieldElement lambda_of_loop(const WeightedGraph& g, const Loop& l) {
    auto c = crossing_counts(g.shape(), l);
    std::size_t deg = g.field->degree();
    Matrix m(g.edges.size(), deg);
    Vector rhs;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        Vector gr = g.field->gram() * g.edges[e].weight.coords;
        for (std::size_t i = 0; i < deg; ++i) m(e, i) = gr[i];
        rhs.emplace_back(c[e]);
    }
    auto x = solve(m, rhs);
    if (!x) throw InvalidInput("crossing functional of " + loop_label(l) + " is not a trace functional");
    return FieldElement(*x);
}

FieldElement lambda_via_dual_basis(const WeightedGraph& g, const Loop& l, const std::vector<int>& basis_edges) {
    auto c = crossing_counts(g.shape(), l);
    std::vector<FieldElement> r;
    for (int e : basis_edges) r.push_back(g.edges.at(e).weight);
    auto s = g.field->dual_basis(r);
    FieldElement x = g.field->zero();
    for (std::size_t i = 0; i < basis_edges.size(); ++i) x = x + Rational(c[basis_edges[i]]) * s[i];
    return x;
}

int max_flow(const GraphShape& s, int p, int q, const std::vector<int>& removed) {
    std::vector<int> flow;
    return run_flow(s, p, q, removed, s.edge_count() + 1, flow);
}

std::vector<int> bridges(const GraphShape& s) {
    std::vector<int> out;
    for (int e = 0; e < s.edge_count(); ++e) {
        if (s.edges[e].first == s.edges[e].second) continue;
        if (!connected_without(s, {e})) out.push_back(e);
    }
    return out;
}

ConnectivityProfile connectivity_profile(const GraphShape& s) {
    if (!s.is_connected()) throw NotConnected("graph is not connected");
    ConnectivityProfile p;
    p.bridges = bridges(s);
    if (s.vertices == 1) {
        p.is_nice = true;
        return p;
    }
    int best = s.edge_count();
    for (int v = 1; v < s.vertices; ++v) best = std::min(best, max_flow(s, 0, v));
    p.edge_connectivity = best;
    p.is_nice = best >= 3;
    p.is_precisely_2_connected = best == 2;
    return p;
}

std::optional<std::pair<Path, Path>> edge_disjoint_paths(const GraphShape& s, int p, int q) {
    if (p == q) throw InvalidInput("endpoints must differ");
    std::vector<int> flow;
    int value = run_flow(s, p, q, {}, 2, flow);
    if (value == 0) throw NotConnected("vertices " + std::to_string(p) + " and " + std::to_string(q));
    if (value < 2) return std::nullopt;
    std::vector<Path> paths;
    for (int k = 0; k < 2; ++k) {
        Path path;
        std::vector<int> at{p};
        int x = p;
        while (x != q) {
            int chosen = -1;
            bool fwd = true;
            for (int e = 0; e < s.edge_count() && chosen < 0; ++e) {
                if (flow[e] == 1 && s.edges[e].first == x) chosen = e, fwd = true;
                else if (flow[e] == -1 && s.edges[e].second == x) chosen = e, fwd = false;
            }
            if (chosen < 0) throw InternalError("flow decomposition failed");
            flow[chosen] = 0;
            x = fwd ? s.edges[chosen].second : s.edges[chosen].first;
            path.push_back({chosen, fwd});
            // drop cycles so that the path stays simple
            auto it = std::find(at.begin(), at.end(), x);
            if (it != at.end()) {
                std::size_t keep = static_cast<std::size_t>(it - at.begin());
                path.resize(keep);
                at.resize(keep + 1);
            } else {
                at.push_back(x);
            }
        }
        paths.push_back(path);
    }
    return std::make_pair(paths[0], paths[1]);
}

std::vector<Loop> simple_loops(const GraphShape& s) {
    int m = s.edge_count();
    std::vector<std::pair<std::vector<int>, Loop>> found;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> es;
        for (int e = 0; e < m; ++e)
            if (mask & (1u << e)) es.push_back(e);
        std::vector<int> deg(s.vertices, 0);
        for (int e : es) ++deg[s.edges[e].first], ++deg[s.edges[e].second];
        bool ok = true;
        int start = -1;
        for (int v = 0; v < s.vertices; ++v) {
            if (deg[v] != 0 && deg[v] != 2) ok = false;
            if (deg[v] == 2 && start < 0) start = v;
        }
        if (!ok) continue;
        Loop l;
        std::vector<bool> used(m, false);
        int x = start;
        for (std::size_t k = 0; k < es.size(); ++k) {
            int chosen = -1;
            for (int e : es)
                if (!used[e] && (s.edges[e].first == x || s.edges[e].second == x)) {
                    chosen = e;
                    break;
                }
            if (chosen < 0) break;
            used[chosen] = true;
            bool fwd = s.edges[chosen].first == x;
            l.steps.push_back({chosen, fwd});
            x = fwd ? s.edges[chosen].second : s.edges[chosen].first;
            if (x == start) break;
        }
        if (l.steps.size() != es.size() || x != start) continue; // disconnected subset
        found.emplace_back(es, l);
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    std::vector<Loop> out;
    for (auto& f : found) out.push_back(f.second);
    return out;
}

std::optional<std::pair<Loop, Loop>> find_vertex_disjoint_simple_loops(const GraphShape& s) {
    auto loops = simple_loops(s);
    std::optional<std::pair<Loop, Loop>> best;
    std::size_t best_size = 0;
    for (std::size_t i = 0; i < loops.size(); ++i) {
        auto vi = loop_vertices(s, loops[i]);
        for (std::size_t j = i + 1; j < loops.size(); ++j) {
            auto vj = loop_vertices(s, loops[j]);
            bool disjoint = std::none_of(vi.begin(), vi.end(),
                                         [&](int v) { return std::find(vj.begin(), vj.end(), v) != vj.end(); });
            if (!disjoint) continue;
            std::size_t size = loops[i].steps.size() + loops[j].steps.size();
            if (!best || size < best_size) {
                best = std::make_pair(loops[i], loops[j]);
                best_size = size;
            }
        }
    }
    return best;
}

std::vector<std::pair<int, int>> half_edges(const GraphShape& s, int v) {
    std::vector<std::pair<int, int>> hs;
    for (int e = 0; e < s.edge_count(); ++e) {
        if (s.edges[e].first == v) hs.emplace_back(e, 0);
        if (s.edges[e].second == v) hs.emplace_back(e, 1);
    }
    return hs;
}

WeightedGraph split_vertex(const WeightedGraph& g, int v, const std::vector<std::pair<int, int>>& side2) {
    WeightedGraph out = g;
    int nv = g.vertices;
    out.vertices = nv + 1;
    FieldElement w = g.field->zero();
    for (auto [e, end] : half_edges(g.shape(), v)) {
        bool moved = std::find(side2.begin(), side2.end(), std::make_pair(e, end)) != side2.end();
        if (moved) {
            (end == 0 ? out.edges[e].tail : out.edges[e].head) = nv;
        } else {
            w = end == 1 ? w + g.edges[e].weight : w - g.edges[e].weight;
        }
    }
    out.edges.push_back({v, nv, w});
    return out;
}

std::vector<VertexSplit> vertex_splits(const WeightedGraph& g, int v) {
    auto hs = half_edges(g.shape(), v);
    std::size_t k = hs.size();
    std::vector<VertexSplit> out;
    if (k < 4) return out;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        if (mask & 1u) continue; // first half-edge stays on side 1
        std::vector<std::pair<int, int>> side2;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (1u << i)) side2.push_back(hs[i]);
        if (side2.size() < 2 || k - side2.size() < 2) continue;
        VertexSplit sp{split_vertex(g, v, side2), v, g.vertices, g.edge_count(), side2};
        out.push_back(std::move(sp));
    }
    return out;
}

std::string weighted_certificate(const WeightedGraph& g) {
    std::vector<int> perm(g.vertices);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    bool first = true;
    do {
        std::vector<std::string> items;
        for (const auto& e : g.edges) {
            int a = perm[e.tail], b = perm[e.head];
            Vector w = e.weight.coords;
            if (a > b) {
                std::swap(a, b);
                w = -w;
            } else if (a == b) {
                w = canonical_sign(w);
            }
            items.push_back(std::to_string(a) + "-" + std::to_string(b) + ":" + vector_key(w));
        }
        std::sort(items.begin(), items.end());
        std::string key;
        for (const auto& it : items) key += it + "|";
        if (first || key < best) best = key;
        first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(g.vertices) + "#" + best;
}

bool weighted_isomorphic(const WeightedGraph& a, const WeightedGraph& b) {
    return weighted_certificate(a) == weighted_certificate(b);
}

std::vector<WeightedGraph> degenerations_at_vertex(const WeightedGraph& g, int v) {
    if (v < 0 || v >= g.vertices) throw InvalidInput("vertex out of range");
    std::vector<WeightedGraph> out;
    std::set<std::string> seen;
    for (auto& sp : vertex_splits(g, v))
        if (seen.insert(weighted_certificate(sp.graph)).second) out.push_back(std::move(sp.graph));
    return out;
}

namespace {

int contracted_id(int x, int keep, int gone) {
    if (x == gone) x = keep;
    return x > gone ? x - 1 : x;
}

} // namespace

WeightedGraph contract_edge(const WeightedGraph& g, int e) {
    if (e < 0 || e >= g.edge_count()) throw InvalidInput("edge out of range");
    const Edge& ce = g.edges[e];
    if (ce.tail == ce.head) throw SelfLoopContraction("edge " + std::to_string(e) + " is a self-loop");
    WeightedGraph out{g.field, g.vertices - 1, {}};
    for (int k = 0; k < g.edge_count(); ++k) {
        if (k == e) continue;
        const Edge& x = g.edges[k];
        out.edges.push_back({contracted_id(x.tail, ce.tail, ce.head), contracted_id(x.head, ce.tail, ce.head), x.weight});
    }
    return out;
}

GraphShape contract_edge(const GraphShape& s, int e) {
    if (e < 0 || e >= s.edge_count()) throw InvalidInput("edge out of range");
    auto [t, h] = s.edges[e];
    if (t == h) throw SelfLoopContraction("edge " + std::to_string(e) + " is a self-loop");
    GraphShape out{s.vertices - 1, {}};
    for (int k = 0; k < s.edge_count(); ++k)
        if (k != e) out.edges.emplace_back(contracted_id(s.edges[k].first, t, h), contracted_id(s.edges[k].second, t, h));
    return out;
}

namespace {

void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int k = 0; k <= total; ++k) {
        cur.push_back(k);
        compositions(total - k, parts - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

Enumeration enumerate_relevant(int genus, int max_vertices) {
    std::map<std::string, GraphShape> bridgeless, with_bridges;
    for (int n = 1; n <= max_vertices; ++n) {
        int edges = n + genus - 1;
        std::vector<std::pair<int, int>> slots;
        for (int v = 0; v < n; ++v) slots.emplace_back(v, v);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        compositions(edges, static_cast<int>(slots.size()), cur, comps);
        for (const auto& c : comps) {
            GraphShape s{n, {}};
            for (std::size_t k = 0; k < slots.size(); ++k)
                for (int r = 0; r < c[k]; ++r) s.edges.push_back(slots[k]);
            if (!s.is_connected()) continue;
            bool stable = true;
            for (int v = 0; v < n; ++v) stable = stable && s.degree(v) >= 3;
            if (!stable) continue;
            GraphShape canon = s.canonical();
            (bridges(canon).empty() ? bridgeless : with_bridges).emplace(canon.label(), canon);
        }
    }
    Enumeration out;
    for (auto& [k, s] : bridgeless) out.bridgeless.push_back(s);
    for (auto& [k, s] : with_bridges) out.with_bridges.push_back(s);
    return out;
}

bool complement_is_tree(const GraphShape& s, const std::vector<int>& edges) {
    std::set<int> uniq(edges.begin(), edges.end());
    if (static_cast<int>(edges.size()) != s.betti() || uniq.size() != edges.size())
        throw BadEdgeCount("expected " + std::to_string(s.betti()) + " distinct edges");
    for (int e : edges)
        if (e < 0 || e >= s.edge_count()) throw BadEdgeCount("edge id out of range");
    // V - 1 remaining edges: a tree exactly when they connect all vertices
    return connected_without(s, edges);
}

nlohmann::ordered_json field_element_to_json(const FieldElement& x) {
    auto a = nlohmann::ordered_json::array();
    for (const auto& c : x.coords) a.push_back(c.get_str());
    return a;
}

nlohmann::ordered_json graph_to_json(const WeightedGraph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = g.vertices;
    auto es = nlohmann::ordered_json::array();
    for (const auto& e : g.edges) es.push_back({e.tail, e.head, field_element_to_json(e.weight)});
    j["edges"] = es;
    auto f = nlohmann::ordered_json::array();
    for (const auto& c : g.field->polynomial()) f.push_back(c.get_si());
    j["field"] = f;
    return j;
}

nlohmann::ordered_json shape_to_json(const GraphShape& s) {
    nlohmann::ordered_json j;
    j["vertices"] = s.vertices;
    auto es = nlohmann::ordered_json::array();
    for (auto [a, b] : s.edges) es.push_back({a, b});
    j["edges"] = es;
    return j;
}

namespace {

Rational json_rational(const nlohmann::json& v) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw InvalidInput("weight coordinates must be integers or fraction strings");
}

} // namespace

WeightedGraph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InvalidInput("graph must be a JSON object");
    FieldPtr f = default_field();
    if (j.contains("field")) {
        IntPoly p;
        for (const auto& c : j.at("field")) {
            if (!c.is_number_integer()) throw InvalidInput("field coefficients must be integers");
            p.emplace_back(c.get<long>());
        }
        f = make_field(p);
    }
    if (!j.contains("vertices") || !j["vertices"].is_number_integer()) throw InvalidInput("missing vertex count");
    WeightedGraph g{f, j["vertices"].get<int>(), {}};
    if (g.vertices < 1) throw InvalidInput("need at least one vertex");
    if (!j.contains("edges") || !j["edges"].is_array()) throw InvalidInput("missing edge list");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3) throw InvalidInput("edge must be [tail, head, weight]");
        int t = e[0].get<int>(), h = e[1].get<int>();
        if (t < 0 || h < 0 || t >= g.vertices || h >= g.vertices) throw InvalidInput("edge endpoint out of range");
        Vector w;
        for (const auto& c : e[2]) w.push_back(json_rational(c));
        if (w.size() != f->degree()) throw InvalidInput("weight has wrong number of coordinates");
        g.edges.push_back({t, h, FieldElement(w)});
    }
    return g;
}

} // namespace rmlocus
