#ifndef WIRSING_LINALG_HPP
#define WIRSING_LINALG_HPP

#include <vector>

#include "wirsing/rational.hpp"

namespace wirsing {

//=============================================================================
// Exact integer linear algebra (fraction-free Bareiss elimination).
//
// Everything here is over Z / Q with exact pivots; ranks and determinants
// are correct, not numerically estimated.
//=============================================================================

using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;

// determinant of a square matrix, exact (Bareiss)
Int bareiss_det(Mat m);

// rank of an arbitrary rectangular matrix, exact
int bareiss_rank(Mat m);

// primitive integer basis of the right kernel {v : m v = 0}
std::vector<Vec> kernel_basis(const Mat& m);

// cross product in Z^3 (line through two points / intersection of two lines
// in the projective plane)
Vec cross3(const Vec& a, const Vec& b);

// v with content divided out and first nonzero entry positive;
// throws ZeroInput on the zero vector
Vec primitive_vector(Vec v);

} // namespace wirsing

#endif
