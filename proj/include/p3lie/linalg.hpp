#ifndef P3LIE_LINALG_HPP
#define P3LIE_LINALG_HPP

#include "p3lie/tensor.hpp"

namespace p3lie {

// Exact kernel basis of m (as column vectors); empty when the kernel is trivial.
// Elimination is fraction-free (Bareiss) after clearing row denominators.
std::vector<Vec> nullspace(const Matrix& m);

int rank(const Matrix& m);

Scalar determinant(const Matrix& m);  // throws InputError unless square

}  // namespace p3lie

#endif
