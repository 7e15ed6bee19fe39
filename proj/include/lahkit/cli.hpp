#pragma once

#include "lahkit/numbers.hpp"
#include "lahkit/polynomial.hpp"
#include "lahkit/recurrences.hpp"
#include "lahkit/table_io.hpp"
#include "lahkit/transition.hpp"
#include "lahkit/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage error. Data goes to `out`, diagnostics to `err`.

namespace lahkit::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verify_failed = 1;
inline constexpr int exit_usage = 2;

// LAHKIT_MAX_N, clamped to the oracle's hard limit.
inline std::size_t oracle_cap() {
  const char* env = std::getenv("LAHKIT_MAX_N");
  if (env == nullptr || *env == '\0') return oracle::max_n;
  char* end = nullptr;
  const long long v = std::strtoll(env, &end, 10);
  if (*end != '\0' || v < 0) throw ParameterError(std::string("bad LAHKIT_MAX_N: ") + env);
  return std::min<std::size_t>(static_cast<std::size_t>(v), oracle::max_n);
}

inline TriangleKind parse_kind(const std::string& name, std::optional<std::size_t> r) {
  if (name == "lrlah") {
    if (!r) throw ParameterError("--kind lrlah requires --r");
    return TriangleKind::lr_lah(*r);
  }
  if (r) throw ParameterError("--r only applies to --kind lrlah");
  if (name == "hlah") return TriangleKind::lah_hl();
  if (name == "olah") return TriangleKind::lah_order();
  if (name == "stirling1") return TriangleKind::stirling_first_hl();
  if (name == "stirling2") return TriangleKind::stirling_second_hl();
  throw ParameterError("unknown kind: " + name);
}

namespace detail {

struct Flags {
  std::string kind;
  long long s = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> r;
  std::size_t nmax = 0;
  std::size_t offset = 0;
  std::string format = "tsv";

  // poly
  bool rising = false;
  bool falling = false;
  std::string from = "standard";
  std::string to;
  std::optional<std::size_t> poly_n;
  std::string coeffs;
  std::string poly_format = "text";

  // verify
  std::string suite = "all";
  std::size_t vnmax = 6;
  long long smax = 3;
};

inline void add_kind(CLI::App* app, Flags& f, const std::vector<std::string>& kinds) {
  app->add_option("--kind", f.kind, "number family")->required()->check(CLI::IsMember(kinds));
  app->add_option("--r", f.r, "restriction parameter for lrlah")->check(CLI::NonNegativeNumber);
}

inline void print_poly(std::ostream& out, const Polynomial& p, const std::string& format) {
  if (format == "json") {
    out << to_json(p).dump() << '\n';
  } else {
    out << to_text(p) << '\n';
  }
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lah / higher-level Stirling number toolkit", "lahkit"};
  app.require_subcommand(1);
  detail::Flags f;
  const std::vector<std::string> all_kinds{"hlah", "olah", "stirling1", "stirling2", "lrlah"};

  auto* value_cmd = app.add_subcommand("value", "print one triangle entry");
  detail::add_kind(value_cmd, f, all_kinds);
  value_cmd->add_option("--s", f.s, "level / order")->required();
  value_cmd->add_option("--n", f.n)->required()->check(CLI::NonNegativeNumber);
  value_cmd->add_option("--k", f.k)->required()->check(CLI::NonNegativeNumber);

  auto* table_cmd = app.add_subcommand("table", "print rows 0..nmax of a triangle");
  detail::add_kind(table_cmd, f, all_kinds);
  table_cmd->add_option("--s", f.s)->required();
  table_cmd->add_option("--nmax", f.nmax)->required()->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--format", f.format)
      ->check(CLI::IsMember({"tsv", "json", "bfile", "pretty"}));
  table_cmd->add_option("--offset", f.offset, "first index for bfile format")
      ->check(CLI::NonNegativeNumber);

  auto* bfile_cmd = app.add_subcommand("bfile", "print a triangle as an OEIS b-file");
  detail::add_kind(bfile_cmd, f, all_kinds);
  bfile_cmd->add_option("--s", f.s)->required();
  bfile_cmd->add_option("--nmax", f.nmax)->required()->check(CLI::NonNegativeNumber);
  bfile_cmd->add_option("--offset", f.offset)->check(CLI::NonNegativeNumber);

  auto* poly_cmd = app.add_subcommand("poly", "polynomial expansion, conversion and recurrences");
  poly_cmd->require_subcommand(1);
  auto add_poly_format = [&](CLI::App* c) {
    c->add_option("--format", f.poly_format)->check(CLI::IsMember({"text", "json"}));
  };

  auto* expand_cmd = poly_cmd->add_subcommand("expand", "expand a rising/falling factorial");
  auto* rising_flag = expand_cmd->add_flag("--rising", f.rising);
  auto* falling_flag = expand_cmd->add_flag("--falling", f.falling);
  rising_flag->excludes(falling_flag);
  expand_cmd->add_option("--n", f.n)->required()->check(CLI::NonNegativeNumber);
  expand_cmd->add_option("--s", f.s)->required();
  add_poly_format(expand_cmd);

  auto* convert_cmd = poly_cmd->add_subcommand("convert", "change polynomial basis");
  convert_cmd->add_option("--from", f.from, "standard | rising:s | falling:s");
  convert_cmd->add_option("--to", f.to)->required();
  auto* n_opt = convert_cmd->add_option("--n", f.poly_n, "convert the degree-n basis element")
                    ->check(CLI::NonNegativeNumber);
  auto* c_opt = convert_cmd->add_option("--coeffs", f.coeffs, "comma-separated coefficients");
  n_opt->excludes(c_opt);
  add_poly_format(convert_cmd);

  auto* row_cmd = poly_cmd->add_subcommand("row", "row polynomial of a Lah family");
  detail::add_kind(row_cmd, f, {"hlah", "olah", "lrlah"});
  row_cmd->add_option("--n", f.n)->required()->check(CLI::NonNegativeNumber);
  row_cmd->add_option("--s", f.s)->required();
  add_poly_format(row_cmd);

  auto* step_cmd = poly_cmd->add_subcommand("step", "apply one polynomial recurrence step");
  detail::add_kind(step_cmd, f, {"hlah", "olah", "lrlah", "q"});
  step_cmd->add_option("--n", f.n)->required()->check(CLI::NonNegativeNumber);
  step_cmd->add_option("--s", f.s)->required();
  add_poly_format(step_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run an invariant suite");
  verify_cmd->add_option("--suite", f.suite)
      ->check(CLI::IsMember({"oracle", "identities", "inequalities", "closed-forms", "all"}));
  verify_cmd->add_option("--nmax", f.vnmax)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--smax", f.smax);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return exit_usage;
  }

  try {
    if (value_cmd->parsed()) {
      const auto kind = parse_kind(f.kind, f.r);
      out << value(kind, f.n, f.k, Level{f.s}) << '\n';
      return exit_ok;
    }
    if (table_cmd->parsed() || bfile_cmd->parsed()) {
      const auto kind = parse_kind(f.kind, f.r);
      const auto t = triangle(kind, Level{f.s}, f.nmax);
      const std::string format = bfile_cmd->parsed() ? "bfile" : f.format;
      if (format == "tsv") write_tsv(out, t);
      if (format == "json") write_json(out, t);
      if (format == "bfile") write_bfile(out, t, f.offset);
      if (format == "pretty") write_pretty(out, t);
      return exit_ok;
    }
    if (expand_cmd->parsed()) {
      if (!f.rising && !f.falling) throw ParameterError("expand needs --rising or --falling");
      const auto kind = f.rising ? FactorialKind::rising : FactorialKind::falling;
      detail::print_poly(out, factorial_poly(kind, f.n, Level{f.s}), f.poly_format);
      return exit_ok;
    }
    if (convert_cmd->parsed()) {
      const BasisTag from = BasisTag::parse(f.from);
      const BasisTag to = BasisTag::parse(f.to);
      Polynomial p;
      if (f.poly_n) {
        p = Polynomial::basis_element(from, *f.poly_n);
      } else if (c_opt->count() > 0) {
        p = Polynomial(parse_coeff_list(f.coeffs), from);
      } else {
        throw ParameterError("convert needs --n or --coeffs");
      }
      detail::print_poly(out, convert(p, to), f.poly_format);
      return exit_ok;
    }
    if (row_cmd->parsed()) {
      const Level s{f.s};
      const auto kind = parse_kind(f.kind, f.r);
      Polynomial p;
      switch (kind.family()) {
        case Family::lah_hl: p = row_poly_hl(f.n, s); break;
        case Family::lah_order: p = lah_order_poly(f.n, s); break;
        default: p = lr_row_poly(f.n, s, kind.r()); break;
      }
      detail::print_poly(out, p, f.poly_format);
      return exit_ok;
    }
    if (step_cmd->parsed()) {
      const Level s{f.s};
      Polynomial before;
      Polynomial after;
      if (f.kind == "q") {
        if (f.r) throw ParameterError("--r only applies to --kind lrlah");
        before = q_poly(f.n, s);
        after = q_step(before, f.n, s);
      } else {
        const auto kind = parse_kind(f.kind, f.r);
        switch (kind.family()) {
          case Family::lah_hl:
            before = row_poly_hl(f.n, s);
            after = row_poly_hl_step(before, f.n, s);
            break;
          case Family::lah_order:
            before = lah_order_poly(f.n, s);
            after = lah_order_poly_step(before, f.n, s);
            break;
          default:
            before = lr_row_poly(f.n, s, kind.r());
            after = lr_row_poly_step(before, f.n, s);
            break;
        }
      }
      if (f.poly_format == "json") {
        nlohmann::ordered_json j;
        j["n"] = f.n;
        j["before"] = to_json(before);
        j["after"] = to_json(after);
        out << j.dump() << '\n';
      } else {
        out << "before " << to_text(before) << '\n' << "after " << to_text(after) << '\n';
      }
      return exit_ok;
    }
    if (verify_cmd->parsed()) {
      const Level smax{f.smax};
      if ((f.suite == "oracle" || f.suite == "all") && f.vnmax > oracle_cap()) {
        throw ParameterError("oracle suite limited to nmax <= " + std::to_string(oracle_cap()) +
                             " (LAHKIT_MAX_N)");
      }
      const auto results = verify::run(verify::suite(f.suite, {f.vnmax, smax.value()}));
      return verify::report(out, results) ? exit_ok : exit_verify_failed;
    }
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  err << "error: no command\n";
  return exit_usage;
}

}  // namespace lahkit::cli
