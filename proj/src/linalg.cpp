#include "mckay/linalg.hpp"

#include <stdexcept>

namespace mckay {

namespace {

std::size_t bit_size(const CycNum& v) {
  std::size_t s = mpz_sizeinbase(v.denominator().get_mpz_t(), 2);
  for (const auto& c : v.numerators()) {
    if (c != 0) s += mpz_sizeinbase(c.get_mpz_t(), 2);
  }
  return s;
}

}  // namespace

std::vector<int> rref(Mat& m, int pivot_cols) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int cols = static_cast<int>(m[0].size());
  const int limit = pivot_cols < 0 ? cols : std::min(pivot_cols, cols);
  std::size_t row = 0;
  for (int col = 0; col < limit && row < m.size(); ++col) {
    std::size_t best = m.size();
    std::size_t best_size = 0;
    for (std::size_t r = row; r < m.size(); ++r) {
      if (m[r][col].is_zero()) continue;
      std::size_t s = bit_size(m[r][col]);
      if (best == m.size() || s < best_size) {
        best = r;
        best_size = s;
      }
    }
    if (best == m.size()) continue;
    std::swap(m[row], m[best]);
    const CycNum inv = m[row][col].inv();
    for (int c = col; c < cols; ++c) {
      if (!m[row][c].is_zero()) m[row][c] *= inv;
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const CycNum factor = m[r][col];
      for (int c = col; c < cols; ++c) {
        if (!m[row][c].is_zero()) m[r][c] -= factor * m[row][c];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: row count mismatch");
  if (a.empty()) return Vec{};
  const std::size_t n = a[0].size();
  Mat aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  auto piv = rref(aug, static_cast<int>(n));
  for (std::size_t r = piv.size(); r < aug.size(); ++r) {
    if (!aug[r][n].is_zero()) return std::nullopt;
  }
  Vec x(n, CycNum(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][n];
  return x;
}

std::vector<Vec> nullspace(const Mat& a) {
  if (a.empty()) return {};
  const std::size_t n = a[0].size();
  Mat m = a;
  auto piv = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (int p : piv) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, CycNum(0));
    v[free] = CycNum(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

Mat identity_matrix(std::size_t n, const CycField* f) {
  Mat m(n, Vec(n, CycNum::zero(f)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = CycNum::one(f);
  return m;
}

Mat matmul(const Mat& a, const Mat& b) {
  if (a.empty()) return {};
  const std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  Mat c(n, Vec(p, CycNum(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j].is_zero()) continue;
      for (std::size_t l = 0; l < p; ++l) {
        if (!b[j][l].is_zero()) c[i][l] += a[i][j] * b[j][l];
      }
    }
  }
  return c;
}

CycNum trace(const Mat& a) {
  CycNum t(0);
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

}  // namespace mckay
