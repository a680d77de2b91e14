#pragma once

#include "scoh/cohomology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace scoh {

/// X_F -> multiplication by F' on densities of weight lam. Even cocycle
/// generating the diagonal cohomology.
Cochain1 diag_cocycle(const Rat& lam);

/// X_F -> etabar^2(F) etabar^{2k-1} between the weights ((1-k)/2, k/2).
/// Odd cocycle; rejects k < 1.
Cochain1 odd_cocycle(long k);

/// X_F -> (k-1) eta^4(F) etabar^{2k-3} + eta^3(F) etabar^{2k-2} at the same
/// weights. The first term is only formed for k >= 2. Rejects k < 1.
Cochain1 odd_cocycle_tilde(long k);

/// g -> multiplication by g' on classical densities of weight lam.
ClassCochain1 class_diag_cocycle(const Rat& lam);

/// g -> g' d^k between the classical weights ((1-k)/2, (1+k)/2). Rejects k < 1.
ClassCochain1 class_res_cocycle(long k);

/// g -> g'' d^{k-1} at the same weights. Rejects k < 1.
ClassCochain1 class_res_cocycle_tilde(long k);

enum class ResonanceType { Diagonal, OddResonant, Generic };

struct ResonanceInfo {
  ResonanceType type = ResonanceType::Generic;
  long k = 0;  // set for OddResonant
};

ResonanceInfo resonance_type(const Rat& lam, const Rat& mu);

/// "diagonal" | "odd-resonant k=<k>" | "generic"
std::string resonance_label(const Rat& lam, const Rat& mu);

struct CheckLine {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct TheoremVerdict {
  Rat lam, mu;
  long expected_even = 0, expected_odd = 0;
  H1Report report;
  std::vector<CheckLine> checks;
  bool ok = false;
};

/// Computes the dimensions, builds the applicable explicit cocycles, and
/// checks closedness, nontriviality, and that they span the computed classes.
TheoremVerdict verify_theorem(const Rat& lam, const Rat& mu, std::optional<int> order_cap = {});

struct CatalogueEntry {
  std::string name;
  Rat lam, mu;
  Parity parity = Parity::Even;
  int order = 0;
};

/// Named cocycle families instantiated at the given diagonal weight and for
/// resonance indices 1..kmax.
std::vector<CatalogueEntry> cocycle_catalogue(const Rat& lam, long kmax);

}  // namespace scoh
