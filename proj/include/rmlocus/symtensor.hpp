#ifndef RMLOCUS_SYMTENSOR_HPP
#define RMLOCUS_SYMTENSOR_HPP

#include "rmlocus/exactfield.hpp"

namespace rmlocus {

RMLOCUS_ERROR(FieldMismatch);

// Both Sym(F) and S(F) have dimension g(g+1)/2 and are indexed by pairs
// i <= j in lexicographic order.
std::size_t sym_dim(std::size_t g);
std::size_t sym_index(std::size_t g, std::size_t i, std::size_t j);

// Element of Sym(F), basis b_i (x) b_i and b_i (x) b_j + b_j (x) b_i (i < j).
struct SymTensor {
    FieldPtr field;
    Vector coords;
    Matrix as_matrix() const; // symmetric M with T = sum M_ij b_i (x) b_j
    bool operator==(const SymTensor& o) const { return coords == o.coords; }
};

// Element of S(F), basis [b_i (x) b_j] (i <= j).
struct SymClass {
    FieldPtr field;
    Vector coords;
    bool operator==(const SymClass& o) const { return coords == o.coords; }
};

SymTensor sym_from_matrix(const FieldPtr& f, const Matrix& m);
SymTensor sym_square(const FieldPtr& f, const FieldElement& r);
SymTensor symmetrized(const FieldPtr& f, const FieldElement& a, const FieldElement& b);
SymClass class_from_matrix(const FieldPtr& f, const Matrix& a);
SymClass sym_class(const FieldPtr& f, const FieldElement& a, const FieldElement& b);

Rational pair(const SymTensor& s, const SymClass& c);
// The functional pair(s, .) in S-coordinates.
Vector pairing_covector(const SymTensor& s);
FieldElement ev(const SymClass& c);
FieldElement ev_coords(const FieldPtr& f, const Vector& class_coords);
std::size_t ev_rank(const FieldPtr& f, const std::vector<Vector>& class_coords);

SymTensor epsilon(const FieldPtr& f);
SymTensor epsilon(const FieldPtr& f, const std::vector<FieldElement>& basis);
// x.eps through the left module action on matrices.
SymTensor times_epsilon(const FieldPtr& f, const FieldElement& x);
// x.eps = sum (x r_i) (x) s_i for a basis r and its dual s.
SymTensor times_epsilon_formula(const FieldPtr& f, const FieldElement& x,
                                const std::vector<FieldElement>& basis);
// eps.x through the right action; equals x.eps.
SymTensor epsilon_times(const FieldPtr& f, const FieldElement& x);

Subspace lambda_one(const FieldPtr& f);
Subspace ker_ev(const FieldPtr& f);
Subspace annihilator_in_S(const FieldPtr& f, const std::vector<SymTensor>& gens);
Subspace annihilator_in_Sym(const FieldPtr& f, const std::vector<SymClass>& gens);
// Entry (a, b) = pair(Sym basis a, S basis b).
Matrix pairing_matrix(const FieldPtr& f);

} // namespace rmlocus

#endif
