#include "scoh/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace scoh {

std::vector<int> RatMat::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int p = -1;
    for (int r = row; r < rows_; ++r) {
      if (!at(r, col).is_zero()) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row)
      for (int c = 0; c < cols_; ++c) std::swap(at(p, c), at(row, c));
    const Rat inv = Rat(1) / at(row, col);
    for (int c = col; c < cols_; ++c) at(row, c) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == row || at(r, col).is_zero()) continue;
      const Rat f = at(r, col);
      for (int c = col; c < cols_; ++c) at(r, c) -= f * at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int mat_rank(RatMat m) { return static_cast<int>(m.rref().size()); }

std::vector<std::vector<Rat>> kernel_basis(const RatMat& m) {
  RatMat r = m;
  const std::vector<int> pivots = r.rref();
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<Rat> v(static_cast<std::size_t>(m.cols()), Rat(0));
    v[static_cast<std::size_t>(free)] = Rat(1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[static_cast<std::size_t>(pivots[i])] = -r.at(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rat>> solve(const RatMat& A, const std::vector<Rat>& b) {
  if (static_cast<int>(b.size()) != A.rows())
    throw std::invalid_argument("solve: right-hand side size mismatch");
  RatMat aug(A.rows(), A.cols() + 1);
  for (int r = 0; r < A.rows(); ++r) {
    for (int c = 0; c < A.cols(); ++c) aug.at(r, c) = A.at(r, c);
    aug.at(r, A.cols()) = b[static_cast<std::size_t>(r)];
  }
  const std::vector<int> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;
  std::vector<Rat> x(static_cast<std::size_t>(A.cols()), Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[static_cast<std::size_t>(pivots[i])] = aug.at(static_cast<int>(i), A.cols());
  return x;
}

int rank_with_columns(const RatMat& A, const std::vector<std::vector<Rat>>& extra) {
  RatMat m(A.rows(), A.cols() + static_cast<int>(extra.size()));
  for (int r = 0; r < A.rows(); ++r)
    for (int c = 0; c < A.cols(); ++c) m.at(r, c) = A.at(r, c);
  for (std::size_t k = 0; k < extra.size(); ++k) {
    if (static_cast<int>(extra[k].size()) != A.rows())
      throw std::invalid_argument("rank_with_columns: column size mismatch");
    for (int r = 0; r < A.rows(); ++r)
      m.at(r, A.cols() + static_cast<int>(k)) = extra[k][static_cast<std::size_t>(r)];
  }
  return mat_rank(std::move(m));
}

}  // namespace scoh
