#ifndef RMLOCUS_RMTORUS_HPP
#define RMLOCUS_RMTORUS_HPP

#include "rmlocus/dualgraph.hpp"
#include "rmlocus/symtensor.hpp"

namespace rmlocus {

RMLOCUS_ERROR(DimensionTheoremViolation);
RMLOCUS_ERROR(NotInN);

// Nonzero weights up to sign, first nonzero coordinate made positive.
std::vector<FieldElement> distinct_weights(const WeightedGraph& g);
std::vector<SymTensor> weight_squares(const WeightedGraph& g);

struct AdmissibilityCertificate {
    bool admissible = false;
    std::vector<Vector> rays;       // S-coordinates
    std::vector<Vector> lineality;  // S-coordinates
    std::optional<Vector> violating_ray;
};

struct StratumInvariants {
    Subspace w_span;
    Subspace n_space;
    int n_distinct_weights = 0;
    int dim_ambient = 0;
    bool admissible = false;
    int dim_T = 0;
    int dim_T_rank_nullity = 0;
    AdmissibilityCertificate certificate;
};

// N(S), checking rank{r (x) r} = n.
Subspace n_space(const WeightedGraph& g);
bool in_n_space(const WeightedGraph& g, const Vector& class_coords);
StratumInvariants stratum_invariants(const WeightedGraph& g);

// Cone {x in ker ev : <x, r_i (x) r_i> >= 0} by double description.
AdmissibilityCertificate is_admissible(const WeightedGraph& g);
// Dual test: some strictly positive sum a_i r_i (x) r_i lies in Lambda^1.
bool positive_combination_in_lambda_one(const WeightedGraph& g);

int dim_rm_torus(const WeightedGraph& g);
int dim_rm_torus_rank_nullity(const WeightedGraph& g);
int intersection_codim(const WeightedGraph& g, const std::vector<SymClass>& u_ann);
SymClass loop_pair_tensor(const WeightedGraph& g, const Loop& a, const Loop& b);
// Element of C(S) not in N(S): pairs to 1 with the first r (x) r, 0 with the rest.
SymClass cone_witness_outside_n(const WeightedGraph& g);

// Orthogonal weighting, then permuted/rescaled orthogonal bases and random weightings.
std::optional<WeightedGraph> find_admissible_weighting(const GraphShape& s, const FieldPtr& f, std::uint64_t seed,
                                                       int attempts);

} // namespace rmlocus

#endif
