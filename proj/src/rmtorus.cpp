#include "rmlocus/rmtorus.hpp"

#include "rmlocus/cone.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace rmlocus {

std::vector<FieldElement> distinct_weights(const WeightedGraph& g) {
    std::vector<FieldElement> out;
    for (const auto& e : g.edges) {
        if (e.weight.is_zero()) continue;
        FieldElement w = e.weight;
        for (const auto& c : w.coords) {
            if (c == 0) continue;
            if (c < 0) w = -w;
            break;
        }
        if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    }
    return out;
}

std::vector<SymTensor> weight_squares(const WeightedGraph& g) {
    std::vector<SymTensor> out;
    for (const auto& r : distinct_weights(g)) out.push_back(sym_square(g.field, r));
    return out;
}

Subspace n_space(const WeightedGraph& g) {
    auto squares = weight_squares(g);
    std::vector<Vector> rows;
    for (const auto& s : squares) rows.push_back(s.coords);
    std::size_t d = sym_dim(g.field->degree());
    if (!rows.empty() && rank(rows, d) != rows.size())
        throw DimensionTheoremViolation("the r (x) r of " + std::to_string(rows.size()) +
                                        " distinct weights are dependent");
    return annihilator_in_S(g.field, squares);
}

bool in_n_space(const WeightedGraph& g, const Vector& cc) {
    SymClass c{g.field, cc};
    for (const auto& s : weight_squares(g))
        if (pair(s, c) != 0) return false;
    return true;
}

AdmissibilityCertificate is_admissible(const WeightedGraph& g) {
    const FieldPtr& f = g.field;
    std::size_t d = sym_dim(f->degree());
    auto kernel = ker_ev(f).basis();
    auto squares = weight_squares(g);
    // constraint i in kernel coordinates: y -> pair(r_i (x) r_i, sum y_j k_j)
    std::vector<Vector> cons;
    for (const auto& s : squares) {
        Vector phi = pairing_covector(s), c;
        for (const auto& k : kernel) c.push_back(dot(phi, k));
        cons.push_back(c);
    }
    auto dd = double_description(cons, kernel.size());
    auto lift = [&](const Vector& y) {
        Vector x = zero_vector(d);
        for (std::size_t j = 0; j < kernel.size(); ++j) x = x + y[j] * kernel[j];
        return x;
    };
    AdmissibilityCertificate cert;
    cert.admissible = true;
    for (const auto& y : dd.lineality) {
        Vector x = lift(y);
        cert.lineality.push_back(x);
        if (!in_n_space(g, x)) cert.admissible = false;
    }
    for (const auto& y : dd.rays) {
        Vector x = lift(y);
        cert.rays.push_back(x);
        if (!in_n_space(g, x) && !cert.violating_ray) {
            cert.admissible = false;
            cert.violating_ray = x;
        }
    }
    return cert;
}

bool positive_combination_in_lambda_one(const WeightedGraph& g) {
    const FieldPtr& f = g.field;
    std::size_t d = sym_dim(f->degree());
    auto squares = weight_squares(g);
    std::size_t n = squares.size();
    // L = {a : sum a_i r_i (x) r_i in Lambda^1}; by Stiemke's lemma L meets the
    // open orthant iff no nonzero y >= 0 is orthogonal to L.
    auto l1 = lambda_one(f).basis();
    Matrix m(d, n + l1.size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < d; ++k) m(k, i) = squares[i].coords[k];
    for (std::size_t j = 0; j < l1.size(); ++j)
        for (std::size_t k = 0; k < d; ++k) m(k, n + j) = -l1[j][k];
    std::vector<Vector> lgens;
    for (const auto& v : nullspace(m)) lgens.emplace_back(v.begin(), v.begin() + n);
    Subspace l = Subspace::span(lgens, n);
    if (l.dim() == 0) return false;
    auto perp = nullspace(Matrix::from_rows(l.basis(), n));
    if (perp.empty()) return true;
    // y = sum c_k perp_k, constraints y_i >= 0
    std::vector<Vector> cons;
    for (std::size_t i = 0; i < n; ++i) {
        Vector c;
        for (const auto& p : perp) c.push_back(p[i]);
        cons.push_back(c);
    }
    auto dd = double_description(cons, perp.size());
    return dd.rays.empty() && dd.lineality.empty();
}

int dim_rm_torus(const WeightedGraph& g) {
    return static_cast<int>(ev_rank(g.field, n_space(g).basis()));
}

int dim_rm_torus_rank_nullity(const WeightedGraph& g) {
    Subspace n = n_space(g);
    return static_cast<int>(n.dim() - n.intersect(ker_ev(g.field)).dim());
}

StratumInvariants stratum_invariants(const WeightedGraph& g) {
    StratumInvariants inv;
    auto squares = weight_squares(g);
    std::vector<Vector> rows;
    for (const auto& s : squares) rows.push_back(s.coords);
    std::size_t d = sym_dim(g.field->degree());
    inv.w_span = Subspace::span(rows, d);
    inv.n_space = n_space(g);
    inv.n_distinct_weights = static_cast<int>(squares.size());
    inv.dim_ambient = static_cast<int>(inv.n_space.dim());
    inv.dim_T = static_cast<int>(ev_rank(g.field, inv.n_space.basis()));
    inv.dim_T_rank_nullity =
        static_cast<int>(inv.n_space.dim() - inv.n_space.intersect(ker_ev(g.field)).dim());
    inv.certificate = is_admissible(g);
    inv.admissible = inv.certificate.admissible;
    return inv;
}

int intersection_codim(const WeightedGraph& g, const std::vector<SymClass>& u_ann) {
    std::vector<Vector> cs;
    for (const auto& u : u_ann) {
        if (!in_n_space(g, u.coords)) throw NotInN("generator pairs nontrivially with some r (x) r");
        cs.push_back(u.coords);
    }
    if (cs.empty()) return 0;
    return static_cast<int>(ev_rank(g.field, cs));
}

SymClass loop_pair_tensor(const WeightedGraph& g, const Loop& a, const Loop& b) {
    auto ea = loop_edge_set(a), eb = loop_edge_set(b);
    for (int e : ea)
        if (std::find(eb.begin(), eb.end(), e) != eb.end())
            throw SharedEdge(loop_label(a) + " and " + loop_label(b) + " share edge " + std::to_string(e + 1));
    FieldElement la = a.steps.empty() ? g.field->zero() : lambda_of_loop(g, a);
    FieldElement lb = b.steps.empty() ? g.field->zero() : lambda_of_loop(g, b);
    SymClass c = sym_class(g.field, la, lb);
    if (!in_n_space(g, c.coords)) throw InternalError("loop pair tensor is not in N(S)");
    return c;
}

SymClass cone_witness_outside_n(const WeightedGraph& g) {
    auto squares = weight_squares(g);
    std::size_t d = sym_dim(g.field->degree());
    std::vector<Vector> rows;
    Vector rhs;
    for (std::size_t i = 0; i < squares.size(); ++i) {
        rows.push_back(pairing_covector(squares[i]));
        rhs.emplace_back(i == 0 ? 1 : 0);
    }
    auto x = solve(Matrix::from_rows(rows, d), rhs);
    if (!x) throw DimensionTheoremViolation("weight squares are dependent");
    return {g.field, *x};
}

std::optional<WeightedGraph> find_admissible_weighting(const GraphShape& s, const FieldPtr& f, std::uint64_t seed,
                                                       int attempts) {
    if (auto g = orthogonal_weights(s, f); g && is_admissible(*g).admissible) return g;
    // alternate: permuted, rescaled orthogonal bases and plain random weightings
    auto ob = f->orthogonal_basis();
    std::vector<std::size_t> perm(ob.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed);
    for (int k = 0; k < attempts; ++k) {
        WeightedGraph g;
        if (k % 2 == 0) {
            std::next_permutation(perm.begin(), perm.end());
            std::vector<FieldElement> coeffs;
            for (std::size_t i = 0; i < ob.size(); ++i) {
                long c = static_cast<long>(rng() % 5) + 1;
                coeffs.push_back(Rational(rng() % 2 ? c : -c) * ob[perm[i]]);
            }
            if (static_cast<int>(coeffs.size()) != s.betti()) continue;
            g = weights_from_cycles(s, f, coeffs);
            if (f->rank_of(g.weights()) != f->degree()) continue;
        } else {
            g = sample_weights(s, f, rng());
        }
        if (is_admissible(g).admissible) return g;
    }
    return std::nullopt;
}

} // namespace rmlocus
