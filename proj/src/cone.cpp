#include "rmlocus/cone.hpp"

#include <algorithm>
#include <set>

namespace rmlocus {

namespace {

struct Ray {
    Vector z;
    std::set<std::size_t> tight;
};

bool is_subset(const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

ConeDescription double_description(const std::vector<Vector>& constraints, std::size_t dim) {
    ConeDescription out;
    if (constraints.empty()) {
        out.lineality = Subspace::whole(dim).basis();
        return out;
    }
    Matrix a = Matrix::from_rows(constraints, dim);
    out.lineality = nullspace(a);
    std::vector<Vector> basis = rref(a).reduced.row_vectors();
    std::size_t rho = basis.size();
    if (rho == 0) return out;

    // reduced constraints a' = a . basis^T, full column rank rho
    std::size_t n = constraints.size();
    std::vector<Vector> red(n, Vector(rho));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < rho; ++k) red[i][k] = dot(constraints[i], basis[k]);

    std::vector<std::size_t> chosen, rest;
    std::vector<Vector> acc;
    for (std::size_t i = 0; i < n; ++i) {
        acc.push_back(red[i]);
        if (chosen.size() < rho && rank(acc, rho) == chosen.size() + 1) {
            chosen.push_back(i);
        } else {
            acc.pop_back();
            rest.push_back(i);
        }
    }
    Matrix b(rho, rho);
    for (std::size_t r = 0; r < rho; ++r)
        for (std::size_t k = 0; k < rho; ++k) b(r, k) = red[chosen[r]][k];
    Matrix binv = *inverse(b);

    std::vector<Ray> rays;
    for (std::size_t k = 0; k < rho; ++k) {
        Ray r{binv.col(k), {}};
        for (std::size_t j = 0; j < rho; ++j)
            if (j != k) r.tight.insert(chosen[j]);
        rays.push_back(r);
    }

    for (std::size_t idx : rest) {
        const Vector& c = red[idx];
        std::vector<Rational> val;
        for (const auto& r : rays) val.push_back(dot(c, r.z));
        std::vector<Ray> next;
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (val[p] < 0) continue;
            Ray r = rays[p];
            if (val[p] == 0) r.tight.insert(idx);
            next.push_back(r);
        }
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (val[p] <= 0) continue;
            for (std::size_t q = 0; q < rays.size(); ++q) {
                if (val[q] >= 0) continue;
                std::set<std::size_t> common;
                std::set_intersection(rays[p].tight.begin(), rays[p].tight.end(), rays[q].tight.begin(),
                                      rays[q].tight.end(), std::inserter(common, common.end()));
                if (common.size() + 2 < rho) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != q && is_subset(common, rays[r].tight)) adjacent = false;
                if (!adjacent) continue;
                Ray nr{val[p] * rays[q].z - val[q] * rays[p].z, common};
                nr.tight.insert(idx);
                next.push_back(nr);
            }
        }
        rays = std::move(next);
    }

    std::set<Vector> uniq;
    for (const auto& r : rays) {
        Vector y = zero_vector(dim);
        for (std::size_t k = 0; k < rho; ++k) y = y + r.z[k] * basis[k];
        uniq.insert(primitive(y, false));
    }
    out.rays.assign(uniq.begin(), uniq.end());
    return out;
}

} // namespace rmlocus
