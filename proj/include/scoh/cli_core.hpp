#pragma once

#include "scoh/classify.hpp"
#include "scoh/cocycles.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scoh {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFail = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitUnstabilized = 3;

enum class Format { Table, Csv, Json };

std::optional<Format> parse_format(std::string_view s);

struct ReportRow {
  Rat lam, mu;
  long dim_even = 0, dim_odd = 0;
  std::string label;
  int order_cap = 0;
  Rat window;
  bool stabilized = false;
};

ReportRow make_row(const H1Report& rep);

/// Accepts a single rational, a comma list "a,b,c", or an inclusive
/// arithmetic range "start:stop:step" with exact rational steps.
std::optional<std::vector<Rat>> parse_rat_list(std::string_view s);

struct SweepSpec {
  std::vector<Rat> lambdas;
  std::vector<Rat> deltas;  // values of mu - lambda
  std::optional<int> order_cap;
  Rat window = Rat(3);
  Format format = Format::Table;
  bool check = false;
};

struct CmdResult {
  int exit_code = kExitOk;
  std::string output;
};

CmdResult cmd_dims(const Rat& lam, const Rat& mu, std::optional<int> order_cap,
                   const Rat& window, Format format, bool check);
CmdResult cmd_sweep(const SweepSpec& spec);
CmdResult cmd_verify(const Rat& lam, const Rat& mu, std::optional<int> order_cap);
CmdResult cmd_table_check();
CmdResult cmd_invariants(const Rat& lam, const Rat& mu, std::optional<int> cap);
CmdResult cmd_catalogue(const Rat& lam, long kmax, Format format);

}  // namespace scoh
