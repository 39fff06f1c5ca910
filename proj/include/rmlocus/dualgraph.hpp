#ifndef RMLOCUS_DUALGRAPH_HPP
#define RMLOCUS_DUALGRAPH_HPP

#include "rmlocus/exactfield.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <utility>

namespace rmlocus {

RMLOCUS_ERROR(ShapeGenusMismatch);
RMLOCUS_ERROR(NotConnected);
RMLOCUS_ERROR(SelfLoopContraction);
RMLOCUS_ERROR(BadEdgeCount);
RMLOCUS_ERROR(SharedEdge);

// Unweighted multigraph; edge orientation is kept only as a reference
// orientation for weights.
struct GraphShape {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
    int betti() const { return edge_count() - vertices + 1; }
    int degree(int v) const;
    int loops_at(int v) const;
    bool is_connected() const;
    // Stratum dimension sum_v (deg v - 3).
    int dimension() const;

    // Sorted (min, max) edge list minimized over vertex permutations.
    std::vector<std::pair<int, int>> certificate() const;
    GraphShape canonical() const;
    std::string label() const;
    bool isomorphic(const GraphShape& o) const { return vertices == o.vertices && certificate() == o.certificate(); }
};

struct Edge {
    int tail = 0;
    int head = 0;
    FieldElement weight;
};

struct WeightedGraph {
    FieldPtr field;
    int vertices = 0;
    std::vector<Edge> edges;

    GraphShape shape() const;
    int edge_count() const { return static_cast<int>(edges.size()); }
    std::vector<FieldElement> weights() const;
};

// One traversal of an edge; forward means tail -> head.
struct LoopStep {
    int edge = 0;
    bool forward = true;
    bool operator==(const LoopStep& o) const = default;
};

struct Loop {
    std::vector<LoopStep> steps;
    bool operator==(const Loop& o) const = default;
};

using Path = std::vector<LoopStep>;

// Vertex where each step starts, in order. Throws InvalidInput if not closed.
std::vector<int> loop_vertices(const GraphShape& s, const Loop& l);
bool is_valid_loop(const GraphShape& s, const Loop& l);
bool is_simple(const GraphShape& s, const Loop& l);
std::vector<int> crossing_counts(const GraphShape& s, const Loop& l);
std::vector<int> loop_edge_set(const Loop& l);
Loop reversed(const Loop& l);
// "(1 -4)": 1-based edge labels, '-' marks a backwards traversal.
std::string loop_label(const Loop& l);

struct ValidationReport {
    bool connected = false;
    int genus = 0;
    bool genus_matches_field = false;
    bool circulation = false;
    std::vector<int> circulation_failures;
    bool spanning = false;
    bool stable = false;
    std::vector<int> unstable_vertices;
    int dimension = 0;
    bool dimension_identity = true;
    std::vector<std::string> messages;
    bool valid() const {
        return connected && genus_matches_field && circulation && spanning && stable && dimension_identity;
    }
};

ValidationReport validate(const WeightedGraph& g);

// Circulation-valued weights: F-combinations of a fundamental cycle basis
// with integer coordinates in [-9, 9]; deterministic in `seed`.
WeightedGraph sample_weights(const GraphShape& s, const FieldPtr& f, std::uint64_t seed);
// Cycle-basis coefficients taken from the trace-orthogonal basis.
std::optional<WeightedGraph> orthogonal_weights(const GraphShape& s, const FieldPtr& f);
// Signed incidence vectors of a fundamental cycle basis.
std::vector<std::vector<int>> cycle_basis(const GraphShape& s);
// Weights sum_k coeffs[k] * cycle_k (not checked for spanning).
WeightedGraph weights_from_cycles(const GraphShape& s, const FieldPtr& f, const std::vector<FieldElement>& coeffs);

FieldElement lambda_of_loop(const WeightedGraph& g, const Loop& l);
// Sum n_i s_i over edges e_i whose weights form a basis with dual s_i.
FieldElement lambda_via_dual_basis(const WeightedGraph& g, const Loop& l, const std::vector<int>& basis_edges);

struct ConnectivityProfile {
    std::vector<int> bridges;
    std::optional<int> edge_connectivity; // absent for a single vertex
    bool is_nice = false;
    bool is_precisely_2_connected = false;
};

// Max number of edge-disjoint p-q paths, optionally ignoring some edges.
int max_flow(const GraphShape& s, int p, int q, const std::vector<int>& removed = {});
ConnectivityProfile connectivity_profile(const GraphShape& s);
std::vector<int> bridges(const GraphShape& s);
std::optional<std::pair<Path, Path>> edge_disjoint_paths(const GraphShape& s, int p, int q);

std::vector<Loop> simple_loops(const GraphShape& s);
std::optional<std::pair<Loop, Loop>> find_vertex_disjoint_simple_loops(const GraphShape& s);

// A splitting of vertex v: side-1 keeps id v, side-2 becomes a new vertex,
// original edge ids are kept and the joining edge (v -> new) is appended.
struct VertexSplit {
    WeightedGraph graph;
    int vertex = 0;
    int new_vertex = 0;
    int new_edge = 0;
    std::vector<std::pair<int, int>> side2; // half-edges (edge, end) moved; end 0 = tail, 1 = head
};

// Half-edges at v as (edge, end) pairs, self-loops contribute two.
std::vector<std::pair<int, int>> half_edges(const GraphShape& s, int v);
WeightedGraph split_vertex(const WeightedGraph& g, int v, const std::vector<std::pair<int, int>>& side2);
// All stable splittings, one per unordered bipartition.
std::vector<VertexSplit> vertex_splits(const WeightedGraph& g, int v);
// vertex_splits deduplicated up to weighted isomorphism.
std::vector<WeightedGraph> degenerations_at_vertex(const WeightedGraph& g, int v);

WeightedGraph contract_edge(const WeightedGraph& g, int e);
GraphShape contract_edge(const GraphShape& s, int e);

// Canonical key up to vertex relabeling, edge reordering and
// (reverse, negate) of each edge.
std::string weighted_certificate(const WeightedGraph& g);
bool weighted_isomorphic(const WeightedGraph& a, const WeightedGraph& b);

struct Enumeration {
    std::vector<GraphShape> bridgeless;
    std::vector<GraphShape> with_bridges;
};

// Connected multigraphs with first Betti number `genus`, at most
// `max_vertices` vertices and all degrees >= 3, canonical and label-sorted.
Enumeration enumerate_relevant(int genus = 4, int max_vertices = 3);

bool complement_is_tree(const GraphShape& s, const std::vector<int>& edges);

nlohmann::ordered_json graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const nlohmann::json& j);
nlohmann::ordered_json shape_to_json(const GraphShape& s);
nlohmann::ordered_json field_element_to_json(const FieldElement& x);

} // namespace rmlocus

#endif
