#include "scoh/cli_core.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

struct CommonOpts {
  std::string lambda, mu, window = "3", format = "table", out;
  int order = -1;
  bool check = false;
};

std::optional<int> cap_of(const CommonOpts& o) {
  if (o.order < 0) return std::nullopt;
  return o.order;
}

int deliver(const scoh::CmdResult& res, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << res.output;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open output file '" << out_path << "'\n";
      return scoh::kExitParseError;
    }
    f << res.output;
  }
  return res.exit_code;
}

int fail_parse(const std::string& what) {
  std::cerr << "error: " << what << "\n";
  return scoh::kExitParseError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic computations for differential operators on weighted densities "
               "over the supercircle: cohomology dimensions, explicit cocycles, invariant "
               "bilinear maps, and structure-table self-checks."};
  app.require_subcommand(1);

  CommonOpts dims_o, sweep_o, verify_o, inv_o, cat_o;
  std::string sweep_delta, table_out, cat_lambda = "0";
  long verify_k = -1, cat_k = 3;

  auto* dims = app.add_subcommand("dims", "Cohomology dimensions at one weight pair");
  dims->add_option("--lambda", dims_o.lambda, "Source weight (rational p/q)")->required();
  dims->add_option("--mu", dims_o.mu, "Target weight (rational p/q)")->required();
  dims->add_option("--order", dims_o.order, "Operator order cap");
  dims->add_option("--weight-window", dims_o.window, "Weight window half-width");
  dims->add_option("--format", dims_o.format, "table, csv, or json");
  dims->add_option("--out", dims_o.out, "Write output to file");
  dims->add_flag("--check", dims_o.check, "Verify dims against the resonance label");

  auto* sweep = app.add_subcommand("sweep", "Dimensions over a (lambda, mu-lambda) grid");
  sweep->add_option("--lambda", sweep_o.lambda, "Lambda grid: value, list, or start:stop:step")
      ->required();
  sweep->add_option("--delta", sweep_delta, "mu-lambda grid: value, list, or start:stop:step")
      ->required();
  sweep->add_option("--order", sweep_o.order, "Operator order cap");
  sweep->add_option("--weight-window", sweep_o.window, "Weight window half-width");
  sweep->add_option("--format", sweep_o.format, "table, csv, or json");
  sweep->add_option("--out", sweep_o.out, "Write output to file");
  sweep->add_flag("--check", sweep_o.check, "Verify dims against the resonance labels");

  auto* verify = app.add_subcommand("verify", "Full verification at one weight pair");
  verify->add_option("--lambda", verify_o.lambda, "Source weight");
  verify->add_option("--mu", verify_o.mu, "Target weight");
  verify->add_option("--k", verify_k, "Shorthand for lambda=(1-k)/2, mu=k/2");
  verify->add_option("--order", verify_o.order, "Operator order cap");
  verify->add_option("--out", verify_o.out, "Write output to file");

  auto* table = app.add_subcommand("table-check", "Check the symmetry-algebra structure table");
  table->add_option("--out", table_out, "Write output to file");

  auto* inv = app.add_subcommand("invariants", "Invariant bilinear maps at one weight pair");
  inv->add_option("--lambda", inv_o.lambda, "Second-argument weight")->required();
  inv->add_option("--mu", inv_o.mu, "Output weight")->required();
  inv->add_option("--order", inv_o.order, "Derivative order cap for the second argument");
  inv->add_option("--out", inv_o.out, "Write output to file");

  auto* cat = app.add_subcommand("catalogue", "List the named cocycle families");
  cat->add_option("--lambda", cat_lambda, "Weight for the diagonal families");
  cat->add_option("--k", cat_k, "Largest resonance index to list");
  cat->add_option("--format", cat_o.format, "table, csv, or json");
  cat->add_option("--out", cat_o.out, "Write output to file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : scoh::kExitParseError;
  }

  try {
    if (*dims) {
      const auto lam = scoh::Rat::parse(dims_o.lambda);
      const auto mu = scoh::Rat::parse(dims_o.mu);
      const auto win = scoh::Rat::parse(dims_o.window);
      const auto fmt = scoh::parse_format(dims_o.format);
      if (!lam) return fail_parse("bad rational for --lambda: '" + dims_o.lambda + "'");
      if (!mu) return fail_parse("bad rational for --mu: '" + dims_o.mu + "'");
      if (!win) return fail_parse("bad rational for --weight-window: '" + dims_o.window + "'");
      if (!fmt) return fail_parse("bad format '" + dims_o.format + "'");
      return deliver(scoh::cmd_dims(*lam, *mu, cap_of(dims_o), *win, *fmt, dims_o.check),
                     dims_o.out);
    }
    if (*sweep) {
      const auto lams = scoh::parse_rat_list(sweep_o.lambda);
      const auto deltas = scoh::parse_rat_list(sweep_delta);
      const auto win = scoh::Rat::parse(sweep_o.window);
      const auto fmt = scoh::parse_format(sweep_o.format);
      if (!lams) return fail_parse("bad rational grid for --lambda: '" + sweep_o.lambda + "'");
      if (!deltas) return fail_parse("bad rational grid for --delta: '" + sweep_delta + "'");
      if (!win) return fail_parse("bad rational for --weight-window: '" + sweep_o.window + "'");
      if (!fmt) return fail_parse("bad format '" + sweep_o.format + "'");
      scoh::SweepSpec spec;
      spec.lambdas = *lams;
      spec.deltas = *deltas;
      spec.order_cap = cap_of(sweep_o);
      spec.window = *win;
      spec.format = *fmt;
      spec.check = sweep_o.check;
      return deliver(scoh::cmd_sweep(spec), sweep_o.out);
    }
    if (*verify) {
      scoh::Rat lam, mu;
      if (verify_k >= 0) {
        if (!verify_o.lambda.empty() || !verify_o.mu.empty())
          return fail_parse("--k excludes --lambda/--mu");
        if (verify_k < 1) return fail_parse("--k must be >= 1");
        lam = scoh::Rat(1 - verify_k, 2);
        mu = scoh::Rat(verify_k, 2);
      } else {
        if (verify_o.lambda.empty() || verify_o.mu.empty())
          return fail_parse("verify needs --lambda and --mu (or --k)");
        const auto l = scoh::Rat::parse(verify_o.lambda);
        const auto m = scoh::Rat::parse(verify_o.mu);
        if (!l) return fail_parse("bad rational for --lambda: '" + verify_o.lambda + "'");
        if (!m) return fail_parse("bad rational for --mu: '" + verify_o.mu + "'");
        lam = *l;
        mu = *m;
      }
      return deliver(scoh::cmd_verify(lam, mu, cap_of(verify_o)), verify_o.out);
    }
    if (*table) return deliver(scoh::cmd_table_check(), table_out);
    if (*inv) {
      const auto lam = scoh::Rat::parse(inv_o.lambda);
      const auto mu = scoh::Rat::parse(inv_o.mu);
      if (!lam) return fail_parse("bad rational for --lambda: '" + inv_o.lambda + "'");
      if (!mu) return fail_parse("bad rational for --mu: '" + inv_o.mu + "'");
      return deliver(scoh::cmd_invariants(*lam, *mu, cap_of(inv_o)), inv_o.out);
    }
    if (*cat) {
      const auto lam = scoh::Rat::parse(cat_lambda);
      const auto fmt = scoh::parse_format(cat_o.format);
      if (!lam) return fail_parse("bad rational for --lambda: '" + cat_lambda + "'");
      if (!fmt) return fail_parse("bad format '" + cat_o.format + "'");
      if (cat_k < 0) return fail_parse("--k must be >= 0");
      return deliver(scoh::cmd_catalogue(*lam, cat_k, *fmt), cat_o.out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return scoh::kExitVerifyFail;
  }
  return scoh::kExitOk;
}
