#include "lb/linalg.hpp"

#include <stdexcept>

namespace lb {

int QMatrix::rank() const {
  auto a = a_;
  int r = 0;
  int rows = static_cast<int>(a.size());
  for (int c = 0; c < cols_ && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    for (int i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (int j = c; j < cols_; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<mpq_class> solve_unique(std::vector<std::vector<mpq_class>> A, std::vector<mpq_class> b) {
  int n = static_cast<int>(A.size());
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (A[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::logic_error("singular system");
    std::swap(A[c], A[piv]);
    std::swap(b[c], b[piv]);
    for (int i = 0; i < n; ++i) {
      if (i == c || A[i][c] == 0) continue;
      mpq_class f = A[i][c] / A[c][c];
      for (int j = c; j < n; ++j) A[i][j] -= f * A[c][j];
      b[i] -= f * b[c];
    }
  }
  std::vector<mpq_class> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
  return x;
}

}  // namespace lb
