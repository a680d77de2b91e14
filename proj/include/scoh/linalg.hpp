#pragma once

#include "scoh/rat.hpp"

#include <optional>
#include <vector>

namespace scoh {

/// Dense exact-rational matrix with deterministic reduced-row-echelon
/// elimination (first nonzero entry in column order picks the pivot).
class RatMat {
public:
  RatMat() = default;
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }

  /// In-place reduction; returns the pivot columns (size = rank).
  std::vector<int> rref();

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> e_;
};

int mat_rank(RatMat m);

/// Deterministic kernel basis: one vector per free column, unit at that column.
std::vector<std::vector<Rat>> kernel_basis(const RatMat& m);

/// Particular solution of A x = b with free variables set to zero; nullopt if inconsistent.
std::optional<std::vector<Rat>> solve(const RatMat& A, const std::vector<Rat>& b);

/// rank([A | extra columns]).
int rank_with_columns(const RatMat& A, const std::vector<std::vector<Rat>>& extra);

}  // namespace scoh
