#include "doctest.h"
#include "scoh/linalg.hpp"
#include "test_util.hpp"

#include <random>
#include <vector>

using namespace scoh;

namespace {

RatMat from_rows(const std::vector<std::vector<Rat>>& rows) {
  RatMat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  return m;
}

std::vector<Rat> mat_vec(const RatMat& m, const std::vector<Rat>& v) {
  std::vector<Rat> out(static_cast<std::size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r) {
    Rat acc;
    for (int c = 0; c < m.cols(); ++c) acc += m.at(r, c) * v[static_cast<std::size_t>(c)];
    out[static_cast<std::size_t>(r)] = acc;
  }
  return out;
}

RatMat random_mat(std::mt19937_64& rng, int rows, int cols) {
  RatMat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = testutil::random_rat(rng);
  return m;
}

}  // namespace

TEST_CASE("row reduction finds pivot columns") {
  RatMat m = from_rows({{Rat(0), Rat(2), Rat(4)}, {Rat(1), Rat(1), Rat(1)}});
  const auto pivots = m.rref();
  CHECK(pivots == std::vector<int>{0, 1});
  CHECK(m.at(0, 0) == Rat(1));
  CHECK(m.at(0, 1) == Rat(0));
  CHECK(m.at(0, 2) == Rat(-1));
  CHECK(m.at(1, 1) == Rat(1));
  CHECK(m.at(1, 2) == Rat(2));
}

TEST_CASE("rank of frozen matrices") {
  CHECK(mat_rank(from_rows({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}})) == 1);
  CHECK(mat_rank(from_rows({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}})) == 2);
  CHECK(mat_rank(RatMat(3, 4)) == 0);
  CHECK(mat_rank(from_rows({{Rat(1, 2), Rat(1, 3)}, {Rat(3), Rat(2)}})) == 1);
}

TEST_CASE("kernel basis is one unit vector per free column") {
  const RatMat m = from_rows({{Rat(1), Rat(2), Rat(3)}});
  const auto ker = kernel_basis(m);
  CHECK(ker.size() == 2);
  CHECK(ker[0] == std::vector<Rat>{Rat(-2), Rat(1), Rat(0)});
  CHECK(ker[1] == std::vector<Rat>{Rat(-3), Rat(0), Rat(1)});
}

TEST_CASE("kernel vectors annihilate the matrix") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 30; ++t) {
    const RatMat m = random_mat(rng, 4, 6);
    const auto ker = kernel_basis(m);
    CHECK(static_cast<int>(ker.size()) == 6 - mat_rank(m));
    for (const auto& v : ker) {
      for (const Rat& entry : mat_vec(m, v)) CHECK(entry.is_zero());
    }
  }
}

TEST_CASE("linear solve returns a particular solution or nothing") {
  const RatMat A = from_rows({{Rat(1), Rat(1)}, {Rat(0), Rat(1)}});
  const auto sol = solve(A, {Rat(3), Rat(1)});
  CHECK(sol == std::vector<Rat>{Rat(2), Rat(1)});

  const RatMat B = from_rows({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}});
  CHECK(!solve(B, {Rat(1), Rat(3)}));
  CHECK(solve(B, {Rat(1), Rat(2)}) == std::vector<Rat>{Rat(1), Rat(0)});

  std::mt19937_64 rng(42);
  for (int t = 0; t < 30; ++t) {
    const RatMat m = random_mat(rng, 5, 4);
    std::vector<Rat> x(4);
    for (auto& e : x) e = testutil::random_rat(rng);
    const auto b = mat_vec(m, x);
    const auto found = solve(m, b);
    REQUIRE(found.has_value());
    CHECK(mat_vec(m, *found) == b);
  }
}

TEST_CASE("rank with extra columns bounds the base rank") {
  const RatMat A = from_rows({{Rat(1), Rat(0)}, {Rat(0), Rat(0)}});
  CHECK(rank_with_columns(A, {}) == 1);
  CHECK(rank_with_columns(A, {{Rat(0), Rat(1)}}) == 2);
  CHECK(rank_with_columns(A, {{Rat(2), Rat(0)}}) == 1);

  std::mt19937_64 rng(43);
  for (int t = 0; t < 20; ++t) {
    const RatMat m = random_mat(rng, 4, 3);
    std::vector<Rat> extra(4);
    for (auto& e : extra) e = testutil::random_rat(rng);
    const int r = mat_rank(m);
    const int rx = rank_with_columns(m, {extra});
    CHECK(rx >= r);
    CHECK(rx <= r + 1);
  }
}
