#ifndef RMLOCUS_CONE_HPP
#define RMLOCUS_CONE_HPP

#include "rmlocus/linalg.hpp"

namespace rmlocus {

// {y : a_i . y >= 0} as lineality space plus extreme rays of the pointed part
// (taken inside the row space of the constraints). Rays are primitive
// integer vectors in sorted order.
struct ConeDescription {
    std::vector<Vector> lineality;
    std::vector<Vector> rays;
};

ConeDescription double_description(const std::vector<Vector>& constraints, std::size_t dim);

} // namespace rmlocus

#endif
