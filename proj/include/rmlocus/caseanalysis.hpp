#ifndef RMLOCUS_CASEANALYSIS_HPP
#define RMLOCUS_CASEANALYSIS_HPP

#include "rmlocus/crossratio.hpp"
#include "rmlocus/rmtorus.hpp"

#include <map>

namespace rmlocus {

RMLOCUS_ERROR(NoQualifyingDegeneration);
RMLOCUS_ERROR(NoGamma3);
RMLOCUS_ERROR(BasisDegeneracy);
RMLOCUS_ERROR(NotABridgeGraph);
RMLOCUS_ERROR(UnresolvedStratum);

enum class Verdict { DisjointLoops, SharedVertex, Exceptional5x5, ExceptionalDoubledTriangle, SeparatingReduced, Unresolved };
std::string verdict_name(Verdict v);

// Vertex-disjoint simple loops and the tensor a = lambda(g1) (x) lambda(g2).
struct DisjointLoopsResult {
    Loop gamma1, gamma2;
    SymClass tensor;
    FieldElement ev;
    bool in_n = false;
    bool ev_nonzero = false;
};
// nullopt when the shape has no vertex-disjoint simple loops.
std::optional<DisjointLoopsResult> criterion_disjoint_loops(const WeightedGraph& g);

struct DegenerationWitness {
    std::vector<std::pair<int, int>> side2;
    std::string shape_label;
    Loop gamma3;
    int partner = 0; // gamma3 is vertex-disjoint from gamma_partner
    int ev_rank = 0;
};
struct SharedVertexResult {
    Loop gamma1, gamma2;
    int vertex = 0;
    std::vector<DegenerationWitness> degenerations;
    std::vector<std::string> degeneration_shapes; // distinct canonical labels
};
// Throws NoQualifyingDegeneration or NoGamma3; InvalidInput if the loops do not
// share exactly one vertex or share an edge.
SharedVertexResult criterion_shared_vertex(const WeightedGraph& g, const Loop& gamma1, const Loop& gamma2);
// Edge-disjoint simple loop pairs meeting in exactly one vertex, fewest edges first.
std::vector<std::pair<Loop, Loop>> shared_vertex_candidates(const GraphShape& s);

struct PairingCheck {
    std::array<int, 4> order; // (a, b, c, d): differences v_a - v_b and v_c - v_d
    std::array<FieldElement, 2> ev;
};
struct FiveByFiveResult {
    int configurations = 0;
    bool f5_vanishes = false;
    std::optional<PointConfiguration> f5_counterexample;
    Rational f5_counterexample_value;
    bool limit_vanishes = false;
    std::size_t limit_terms = 0;
    std::size_t limit_ev_classes = 0;
    // Classes with one monomial; any such class keeps the limit polynomial
    // from vanishing on a translate of the torus.
    std::size_t limit_singleton_classes = 0;
    int monomial_span_dim = 0;
    std::vector<PairingCheck> pairings;
    bool pairings_nonzero = false; // every pairing has a difference with ev != 0
    bool resolved() const {
        return limit_vanishes && limit_singleton_classes > 0 && pairings_nonzero && monomial_span_dim == 3;
    }
};
FiveByFiveResult exceptional_5x5(const WeightedGraph& g, std::uint64_t config_seed, int configurations);
// ev of the S(F)-class attached to an exponent vector over (Z12, Z13, Z14, Z23, Z24).
FieldElement z_exponent_ev(const FieldPtr& f, const std::vector<FieldElement>& dual, const std::vector<int>& e);

struct DoubledTriangleResult {
    int configurations = 0;
    bool relation_holds = false;
    bool psi_relation_holds = false;
    std::size_t terms = 0;
    BinomialTest binomial;
    int dim_ambient = 0;
    bool resolved() const {
        return relation_holds && psi_relation_holds && terms >= 3 && binomial.decided && !binomial.is_torus_coset;
    }
};
DoubledTriangleResult exceptional_doubled_triangle(const WeightedGraph& g, std::uint64_t config_seed,
                                                   int configurations);

struct BridgeLedger {
    int bridge = 0;
    int betti_side1 = 0, betti_side2 = 0;
    int dim_f1 = 0, dim_f2 = 0;
    int dim_tensor = 0;
    int ev_rank = 0;
    bool in_n = false;
    bool holds() const {
        return in_n && dim_tensor == dim_f1 * dim_f2 && (dim_tensor == 4 || dim_tensor == 3) && ev_rank >= 2;
    }
};
struct SeparatingResult {
    std::vector<BridgeLedger> bridges;
    WeightedGraph target;
    std::string target_label;
    int target_dimension = 0;
    bool target_nice = false;
    std::vector<std::string> steps;
    bool admissible_found = false;
    int admissible_dim_T = 0;
    bool target_has_self_loop = false;
    bool resolved() const;
};
SeparatingResult separating_reduction(const WeightedGraph& g, std::uint64_t seed);
// Contract bridges, then one edge of each 2-edge-cut, until nice.
WeightedGraph contract_to_nice(const WeightedGraph& g, std::vector<std::string>* steps = nullptr);

struct StratumReport {
    std::string label;
    std::optional<std::string> graph_name;
    bool bridgeless = true;
    int dimension = 0;
    bool in_scope = true;
    Verdict verdict = Verdict::Unresolved;
    std::vector<std::uint64_t> seeds;
    nlohmann::ordered_json invariants;
    nlohmann::ordered_json witness;
    std::vector<std::string> notes;
};
nlohmann::ordered_json to_json(const StratumReport& r);

struct AnalysisOptions {
    std::uint64_t seed = 0;
    int samples = 20;
    int configurations = 100;
    int admissible_attempts = 64;
};
// Runs the criteria in order on the given weightings of one shape.
StratumReport analyze_stratum(const GraphShape& s, const std::vector<WeightedGraph>& samples,
                              const std::vector<std::uint64_t>& seeds, const AnalysisOptions& opt);
StratumReport analyze_weighted(const WeightedGraph& g, const AnalysisOptions& opt);

std::uint64_t derive_seed(std::uint64_t base, const std::string& label, std::uint64_t index);
// "(1,1)", "(2,2)" or "(4,2)" for the named strata, otherwise empty.
std::optional<std::string> graph_name(const GraphShape& s);

struct VerifyReport {
    FieldPtr field;
    AnalysisOptions options;
    std::vector<StratumReport> strata;
    std::map<std::string, int> verdict_counts;
    std::vector<std::string> unresolved;
    bool theorem_verified = false;
};
VerifyReport verify_all(const FieldPtr& f, const AnalysisOptions& opt);
VerifyReport verify_all_serial(const FieldPtr& f, const AnalysisOptions& opt);
nlohmann::ordered_json to_json(const VerifyReport& r);
// Throws UnresolvedStratum naming the unresolved shapes.
void require_theorem(const VerifyReport& r);

} // namespace rmlocus

#endif
