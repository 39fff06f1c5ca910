#include "rmlocus/symtensor.hpp"

namespace rmlocus {

std::size_t sym_dim(std::size_t g) { return g * (g + 1) / 2; }

std::size_t sym_index(std::size_t g, std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return i * g - i * (i - 1) / 2 + (j - i);
}

namespace {

void same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!a || !b || !(*a == *b)) throw FieldMismatch("operands live over different fields");
}

Matrix outer(const FieldElement& a, const FieldElement& b) {
    Matrix m(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a.coords[i] * b.coords[j];
    return m;
}

} // namespace

Matrix SymTensor::as_matrix() const {
    std::size_t g = field->degree();
    Matrix m(g, g);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i; j < g; ++j) m(i, j) = m(j, i) = coords[sym_index(g, i, j)];
    return m;
}

SymTensor sym_from_matrix(const FieldPtr& f, const Matrix& m) {
    std::size_t g = f->degree();
    Vector c = zero_vector(sym_dim(g));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i; j < g; ++j) {
            if (m(i, j) != m(j, i)) throw InternalError("tensor is not symmetric");
            c[sym_index(g, i, j)] = m(i, j);
        }
    return {f, c};
}

SymTensor sym_square(const FieldPtr& f, const FieldElement& r) { return sym_from_matrix(f, outer(r, r)); }

SymTensor symmetrized(const FieldPtr& f, const FieldElement& a, const FieldElement& b) {
    Matrix m = outer(a, b);
    Matrix t = outer(b, a);
    for (std::size_t k = 0; k < m.data.size(); ++k) m.data[k] += t.data[k];
    return sym_from_matrix(f, m);
}

SymClass class_from_matrix(const FieldPtr& f, const Matrix& a) {
    std::size_t g = f->degree();
    Vector c = zero_vector(sym_dim(g));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) c[sym_index(g, i, j)] += a(i, j);
    return {f, c};
}

SymClass sym_class(const FieldPtr& f, const FieldElement& a, const FieldElement& b) {
    return class_from_matrix(f, outer(a, b));
}

Vector pairing_covector(const SymTensor& s) {
    std::size_t g = s.field->degree();
    const Matrix& G = s.field->gram();
    Matrix gmg = G * s.as_matrix() * G;
    Vector phi(sym_dim(g));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i; j < g; ++j) phi[sym_index(g, i, j)] = gmg(i, j);
    return phi;
}

Rational pair(const SymTensor& s, const SymClass& c) {
    same_field(s.field, c.field);
    return dot(pairing_covector(s), c.coords);
}

FieldElement ev_coords(const FieldPtr& f, const Vector& cc) {
    std::size_t g = f->degree();
    FieldElement r = f->zero();
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i; j < g; ++j) {
            const Rational& c = cc[sym_index(g, i, j)];
            if (c != 0) r = r + c * f->basis_product(i, j);
        }
    return r;
}

FieldElement ev(const SymClass& c) { return ev_coords(c.field, c.coords); }

std::size_t ev_rank(const FieldPtr& f, const std::vector<Vector>& class_coords) {
    std::vector<FieldElement> imgs;
    for (const auto& c : class_coords) imgs.push_back(ev_coords(f, c));
    return f->rank_of(imgs);
}

SymTensor epsilon(const FieldPtr& f, const std::vector<FieldElement>& basis) {
    return times_epsilon_formula(f, f->one(), basis);
}

SymTensor epsilon(const FieldPtr& f) { return epsilon(f, f->power_basis()); }

SymTensor times_epsilon_formula(const FieldPtr& f, const FieldElement& x,
                                const std::vector<FieldElement>& basis) {
    auto dual = f->dual_basis(basis);
    std::size_t g = f->degree();
    Matrix m(g, g);
    for (std::size_t i = 0; i < g; ++i) {
        Matrix o = outer(f->mul(x, basis[i]), dual[i]);
        for (std::size_t k = 0; k < m.data.size(); ++k) m.data[k] += o.data[k];
    }
    return sym_from_matrix(f, m);
}

SymTensor times_epsilon(const FieldPtr& f, const FieldElement& x) {
    return sym_from_matrix(f, f->mult_matrix(x) * epsilon(f).as_matrix());
}

SymTensor epsilon_times(const FieldPtr& f, const FieldElement& x) {
    return sym_from_matrix(f, epsilon(f).as_matrix() * f->mult_matrix(x).transpose());
}

Subspace lambda_one(const FieldPtr& f) {
    std::vector<Vector> gens;
    for (const auto& b : f->power_basis()) gens.push_back(times_epsilon(f, b).coords);
    return Subspace::span(gens, sym_dim(f->degree()));
}

Subspace ker_ev(const FieldPtr& f) {
    std::size_t g = f->degree(), d = sym_dim(g);
    Matrix e(g, d);
    for (std::size_t k = 0; k < d; ++k) {
        FieldElement img = ev_coords(f, unit_vector(d, k));
        for (std::size_t i = 0; i < g; ++i) e(i, k) = img.coords[i];
    }
    return Subspace::span(nullspace(e), d);
}

Subspace annihilator_in_S(const FieldPtr& f, const std::vector<SymTensor>& gens) {
    std::size_t d = sym_dim(f->degree());
    if (gens.empty()) return Subspace::whole(d);
    std::vector<Vector> rows;
    for (const auto& s : gens) {
        same_field(f, s.field);
        rows.push_back(pairing_covector(s));
    }
    return Subspace::span(nullspace(Matrix::from_rows(rows, d)), d);
}

Subspace annihilator_in_Sym(const FieldPtr& f, const std::vector<SymClass>& gens) {
    std::size_t d = sym_dim(f->degree());
    if (gens.empty()) return Subspace::whole(d);
    Matrix p = pairing_matrix(f);
    std::vector<Vector> rows;
    for (const auto& c : gens) {
        same_field(f, c.field);
        rows.push_back(p * c.coords);
    }
    return Subspace::span(nullspace(Matrix::from_rows(rows, d)), d);
}

Matrix pairing_matrix(const FieldPtr& f) {
    std::size_t d = sym_dim(f->degree());
    Matrix p(d, d);
    for (std::size_t a = 0; a < d; ++a) {
        Vector phi = pairing_covector({f, unit_vector(d, a)});
        for (std::size_t b = 0; b < d; ++b) p(a, b) = phi[b];
    }
    return p;
}

} // namespace rmlocus
