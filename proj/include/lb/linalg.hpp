#pragma once

#include <gmpxx.h>

#include <vector>

namespace lb {

// Dense rational matrix, used for small exact solves.
class QMatrix {
 public:
  QMatrix(int rows, int cols) : cols_(cols), a_(rows, std::vector<mpq_class>(cols)) {}
  int rows() const { return static_cast<int>(a_.size()); }
  int cols() const { return cols_; }
  mpq_class& at(int i, int j) { return a_[i][j]; }
  void append_row(std::vector<mpq_class> row) { a_.push_back(std::move(row)); }
  int rank() const;

 private:
  int cols_;
  std::vector<std::vector<mpq_class>> a_;
};

// Solves A x = b for square nonsingular A; throws std::logic_error otherwise.
std::vector<mpq_class> solve_unique(std::vector<std::vector<mpq_class>> A, std::vector<mpq_class> b);

}  // namespace lb
