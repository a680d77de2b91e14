#include "scoh/cli_core.hpp"

#include "json.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace scoh {

namespace {

using nlohmann::ordered_json;

constexpr const char* kColumns[] = {"lambda", "mu",    "dim_even", "dim_odd",
                                    "label",  "N",     "W",        "stabilized"};

std::vector<std::string> row_cells(const ReportRow& r) {
  return {r.lam.str(),
          r.mu.str(),
          std::to_string(r.dim_even),
          std::to_string(r.dim_odd),
          r.label,
          std::to_string(r.order_cap),
          r.window.str(),
          r.stabilized ? "yes" : "no"};
}

std::string render_table(const std::vector<std::vector<std::string>>& cells,
                         const std::vector<std::string>& header) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::string out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += row[c];
      if (c + 1 < row.size()) out += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += '\n';
  };
  emit(header);
  for (const auto& row : cells) emit(row);
  return out;
}

std::string render_csv(const std::vector<std::vector<std::string>>& cells,
                       const std::vector<std::string>& header) {
  std::string out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += row[c];
      if (c + 1 < row.size()) out += ',';
    }
    out += '\n';
  };
  emit(header);
  for (const auto& row : cells) emit(row);
  return out;
}

std::string render_rows(const std::vector<ReportRow>& rows, Format format) {
  const std::vector<std::string> header(std::begin(kColumns), std::end(kColumns));
  if (format == Format::Json) {
    ordered_json doc;
    doc["rows"] = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json jr;
      jr["lambda"] = r.lam.str();
      jr["mu"] = r.mu.str();
      jr["dim_even"] = r.dim_even;
      jr["dim_odd"] = r.dim_odd;
      jr["label"] = r.label;
      jr["N"] = r.order_cap;
      jr["W"] = r.window.str();
      jr["stabilized"] = r.stabilized;
      doc["rows"].push_back(std::move(jr));
    }
    return doc.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) cells.push_back(row_cells(r));
  return format == Format::Csv ? render_csv(cells, header) : render_table(cells, header);
}

/// Theorem-predicted dimensions at a point.
std::pair<long, long> predicted_dims(const Rat& lam, const Rat& mu) {
  const ResonanceInfo info = resonance_type(lam, mu);
  return {info.type == ResonanceType::Diagonal ? 1 : 0,
          info.type == ResonanceType::OddResonant ? 2 : 0};
}

}  // namespace

std::optional<Format> parse_format(std::string_view s) {
  if (s == "table") return Format::Table;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  return std::nullopt;
}

ReportRow make_row(const H1Report& rep) {
  ReportRow r;
  r.lam = rep.lam;
  r.mu = rep.mu;
  r.dim_even = rep.dim_even;
  r.dim_odd = rep.dim_odd;
  r.label = resonance_label(rep.lam, rep.mu);
  r.order_cap = rep.order_cap;
  r.window = rep.window;
  r.stabilized = rep.stabilized;
  return r;
}

std::optional<std::vector<Rat>> parse_rat_list(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::vector<Rat> out;
  if (s.find(':') != std::string_view::npos) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
      if (ch == ':') {
        parts.push_back(cur);
        cur.clear();
      } else cur.push_back(ch);
    }
    parts.push_back(cur);
    if (parts.size() != 3) return std::nullopt;
    const auto start = Rat::parse(parts[0]);
    const auto stop = Rat::parse(parts[1]);
    const auto step = Rat::parse(parts[2]);
    if (!start || !stop || !step || step->is_zero()) return std::nullopt;
    const Rat span = (*stop - *start) / *step;
    if (span < Rat(0)) return out;  // empty range
    if (Rat(100000) < span) return std::nullopt;
    for (Rat v = *start; step->sign() > 0 ? !(*stop < v) : !(v < *stop); v += *step)
      out.push_back(v);
    return out;
  }
  std::string cur;
  std::vector<std::string> toks;
  for (char ch : s) {
    if (ch == ',') {
      toks.push_back(cur);
      cur.clear();
    } else cur.push_back(ch);
  }
  toks.push_back(cur);
  for (const auto& t : toks) {
    const auto v = Rat::parse(t);
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  return out;
}

CmdResult cmd_dims(const Rat& lam, const Rat& mu, std::optional<int> order_cap,
                   const Rat& window, Format format, bool check) {
  const H1Report rep = h1_dims(lam, mu, order_cap, window);
  const ReportRow row = make_row(rep);
  CmdResult res;
  res.output = render_rows({row}, format);
  if (check) {
    const auto [pe, po] = predicted_dims(lam, mu);
    if (pe != row.dim_even || po != row.dim_odd) {
      res.output += "check failed: lambda=" + lam.str() + " mu=" + mu.str() + " computed (" +
                    std::to_string(row.dim_even) + "," + std::to_string(row.dim_odd) +
                    ") expected (" + std::to_string(pe) + "," + std::to_string(po) + ")\n";
      res.exit_code = kExitVerifyFail;
    }
  }
  if (!row.stabilized) res.exit_code = kExitUnstabilized;
  return res;
}

CmdResult cmd_sweep(const SweepSpec& spec) {
  std::vector<std::pair<Rat, Rat>> grid;  // (lambda, delta)
  for (const auto& l : spec.lambdas)
    for (const auto& d : spec.deltas) grid.push_back({l, d});
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<std::future<H1Report>> futures;
  futures.reserve(grid.size());
  for (const auto& [l, d] : grid)
    futures.push_back(std::async(std::launch::async, [l = l, d = d, &spec] {
      return h1_dims(l, l + d, spec.order_cap, spec.window);
    }));

  std::vector<ReportRow> rows;
  rows.reserve(grid.size());
  for (auto& f : futures) rows.push_back(make_row(f.get()));

  CmdResult res;
  res.output = render_rows(rows, spec.format);
  std::string diag;
  bool mismatch = false, unstab = false;
  for (const auto& row : rows) {
    if (!row.stabilized) unstab = true;
    if (spec.check) {
      const auto [pe, po] = predicted_dims(row.lam, row.mu);
      if (pe != row.dim_even || po != row.dim_odd) {
        mismatch = true;
        diag += "check failed: lambda=" + row.lam.str() + " mu=" + row.mu.str() +
                " computed (" + std::to_string(row.dim_even) + "," +
                std::to_string(row.dim_odd) + ") expected (" + std::to_string(pe) + "," +
                std::to_string(po) + ")\n";
      }
    }
  }
  res.output += diag;
  if (mismatch) res.exit_code = kExitVerifyFail;
  if (unstab) res.exit_code = kExitUnstabilized;
  return res;
}

CmdResult cmd_verify(const Rat& lam, const Rat& mu, std::optional<int> order_cap) {
  const TheoremVerdict v = verify_theorem(lam, mu, order_cap);
  CmdResult res;
  res.output = "verify lambda=" + lam.str() + " mu=" + mu.str() + " [" +
               resonance_label(lam, mu) + "]\n";
  for (const auto& ch : v.checks)
    res.output += std::string("  [") + (ch.ok ? "ok" : "FAIL") + "] " + ch.name + ": " +
                  ch.detail + "\n";
  res.output += v.report.line() + "\n";
  res.output += std::string("verdict: ") + (v.ok ? "pass" : "fail") + "\n";
  if (!v.ok) res.exit_code = v.report.stabilized ? kExitVerifyFail : kExitUnstabilized;
  return res;
}

CmdResult cmd_table_check() {
  const bool ok = check_table();
  CmdResult res;
  res.output = std::string("structure table: ") + (ok ? "pass" : "fail") + "\n";
  if (!ok) res.exit_code = kExitVerifyFail;
  return res;
}

CmdResult cmd_invariants(const Rat& lam, const Rat& mu, std::optional<int> cap) {
  const BilinearReport rep = invariant_bilinear(lam, mu, cap);
  CmdResult res;
  res.output = "invariant bilinear maps lambda=" + lam.str() + " mu=" + mu.str();
  if (rep.k) res.output += " k=" + std::to_string(*rep.k);
  res.output += "\ndim " + std::to_string(rep.dim) + "\n";
  for (const auto& op : rep.basis) res.output += "  " + op.str() + "\n";
  return res;
}

CmdResult cmd_catalogue(const Rat& lam, long kmax, Format format) {
  const auto entries = cocycle_catalogue(lam, kmax);
  const std::vector<std::string> header = {"name", "lambda", "mu", "parity", "order"};
  CmdResult res;
  if (format == Format::Json) {
    ordered_json doc;
    doc["catalogue"] = ordered_json::array();
    for (const auto& e : entries) {
      ordered_json je;
      je["name"] = e.name;
      je["lambda"] = e.lam.str();
      je["mu"] = e.mu.str();
      je["parity"] = e.parity == Parity::Even ? "even" : "odd";
      je["order"] = e.order;
      doc["catalogue"].push_back(std::move(je));
    }
    res.output = doc.dump(2) + "\n";
    return res;
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& e : entries)
    cells.push_back({e.name, e.lam.str(), e.mu.str(),
                     e.parity == Parity::Even ? "even" : "odd", std::to_string(e.order)});
  res.output = format == Format::Csv ? render_csv(cells, header) : render_table(cells, header);
  return res;
}

}  // namespace scoh
