#pragma once

#include "scoh/classical.hpp"
#include "scoh/cochain.hpp"

#include <optional>
#include <string>
#include <vector>

namespace scoh {

/// Elimination summary for one (parity, weight) slice of the complex
/// C^0 -> C^1 -> C^2 at a fixed order cap.
struct SliceReport {
  Parity parity = Parity::Even;
  Rat w;
  long dim_c0 = 0, dim_c1 = 0, dim_c2 = 0;
  long rank_d0 = 0, rank_d1 = 0, ker_d1 = 0;
  long h1 = 0;
};

struct H1Report {
  Rat lam, mu;
  long dim_even = 0, dim_odd = 0;
  int order_cap = 0;
  Rat window;
  bool stabilized = false;
  std::vector<SliceReport> slices;
  std::vector<Cochain1> even_basis, odd_basis;

  /// One-line summary, fixed field order.
  std::string line() const;
};

int default_order_cap(const Rat& lam, const Rat& mu);

SliceReport compute_slice(const Rat& lam, const Rat& mu, Parity parity, const Rat& w,
                          int order_cap);

/// Degree-one cohomology dimensions split by cochain parity. Sweeps the
/// weight lattice (mu - lam) + (1/2)Z through [-window, window] plus weight
/// zero, extracts weight-zero representatives, and re-runs weight zero at
/// order_cap + 2 to set the stabilized flag.
H1Report h1_dims(const Rat& lam, const Rat& mu, std::optional<int> order_cap = {},
                 const Rat& window = Rat(3));

/// A with delta0(A) = c and order <= order_cap, if one exists there.
std::optional<DOp> solve_coboundary(const Cochain1& c, int order_cap);

/// Rank of the span of the given weight-zero cocycles in C^1 modulo
/// coboundaries of operators of order <= order_cap.
long rank_mod_coboundaries(const std::vector<Cochain1>& cs, int order_cap);

/// Classical blocks of one operator acting on F = f + theta g:
/// A(f + theta g) = [keep(f) + down(g)] + theta [up(f) + shift(g)].
struct OpBlocks {
  Rat lam, mu;
  ClassOp keep;   // lam     -> mu
  ClassOp shift;  // lam+1/2 -> mu+1/2
  ClassOp up;     // lam     -> mu+1/2
  ClassOp down;   // lam+1/2 -> mu
};

OpBlocks op_blocks(const DOp& A);
DOp op_from_blocks(const OpBlocks& b);

/// Classical components of a one-cochain: values on the three even
/// generators land in the sl2 blocks, values on the two odd generators
/// (arguments h = 1 and h = x) land in the two-slot h blocks.
struct ComponentSplit {
  Rat lam, mu;
  Parity parity = Parity::Even;
  ClassCochain1 sl2_keep, sl2_shift, sl2_up, sl2_down;
  std::array<ClassOp, 2> h_keep, h_shift, h_up, h_down;
};

ComponentSplit project_components(const Cochain1& c);
Cochain1 reassemble(const ComponentSplit& s);

}  // namespace scoh
