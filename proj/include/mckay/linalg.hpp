#ifndef MCKAY_LINALG_HPP
#define MCKAY_LINALG_HPP

#include <optional>
#include <vector>

#include "mckay/cyclo.hpp"

namespace mckay {

using Vec = std::vector<CycNum>;
using Mat = std::vector<Vec>;

// Reduced row-echelon form in place; pivots are taken only among the first `pivot_cols` columns
// (all columns when negative). Returns the pivot column of each nonzero row.
std::vector<int> rref(Mat& m, int pivot_cols = -1);
int rank(Mat m);
// One solution of A x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);
std::vector<Vec> nullspace(const Mat& a);
Mat identity_matrix(std::size_t n, const CycField* f = nullptr);
Mat matmul(const Mat& a, const Mat& b);
CycNum trace(const Mat& a);

}  // namespace mckay

#endif
