#pragma once

// Command-line front end for the gw tool. `run_cli` is the whole program;
// main() only forwards to it, which lets tests drive every command.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gw/cache_store.hpp"
#include "gw/check_report.hpp"
#include "gw/complex_engine.hpp"
#include "gw/core.hpp"
#include "gw/p3_closed.hpp"
#include "gw/real_engine.hpp"
#include "gw/suites.hpp"
#include "gw/tables.hpp"

namespace gw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::uint32_t kDivisorSeed = 20161;
inline constexpr int kDivisorSamples = 40;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "3,3,5" -> {3,3,5}; empty string -> {}.
inline std::vector<int> parse_codims(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed codimension '" + item + "' in --codims '" + text + "'");
    }
    if (used != item.size()) throw UsageError("malformed codimension '" + item + "' in --codims '" + text + "'");
    if (value < 0) throw UsageError("codimensions must be non-negative: '" + text + "'");
    out.push_back(value);
  }
  if (text.back() == ',') throw UsageError("trailing comma in --codims '" + text + "'");
  return out;
}

struct Session {
  std::shared_ptr<ComplexContext> complex = std::make_shared<ComplexContext>();
  std::unique_ptr<RealContext> real = std::make_unique<RealContext>(complex);
  CacheStore cache;
  std::string cache_path;

  /// Seeds the engines from an existing cache file.
  void open_cache() {
    if (cache_path.empty() || !std::filesystem::exists(cache_path)) return;
    cache.load(cache_path);
    cache.seed(*complex, *real);
  }

  void close_cache() {
    if (cache_path.empty()) return;
    const bool existed = std::filesystem::exists(cache_path);
    if (cache.harvest(*complex, *real) > 0 || !existed) cache.save(cache_path);
  }
};

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Genus-0 complex and real Gromov-Witten invariants of projective spaces", "gw"};
  app.require_subcommand(1);
  Session session;
  app.add_option("--cache", session.cache_path, "Cache file (seeded before, updated after the command)")
      ->envname("GW_CACHE");

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  };

  // gw complex
  int dim = 0, degree = 0;
  std::string codims_text;
  bool json_out = false;
  auto* complex_cmd = app.add_subcommand("complex", "Complex invariant <H^c1,...,H^ck>_d of P^N");
  complex_cmd->add_option("--dim", dim, "Projective dimension N")->required();
  complex_cmd->add_option("--d", degree, "Degree")->required();
  complex_cmd->add_option("--codims", codims_text, "Comma-separated codimensions");
  complex_cmd->add_flag("--json", json_out, "Emit a JSON object");

  // gw real
  int half = 0;
  std::string phi_text = "tau";
  auto* real_cmd = app.add_subcommand("real", "Real invariant <c1,...,ck>_d of P^(2n-1)");
  real_cmd->add_option("--n", half, "Half dimension; the target is P^(2n-1)")->required();
  real_cmd->add_option("--d", degree, "Degree")->required();
  real_cmd->add_option("--codims", codims_text, "Comma-separated codimensions");
  real_cmd->add_option("--phi", phi_text, "Involution tag")->check(CLI::IsMember({"tau", "eta"}));
  real_cmd->add_flag("--json", json_out, "Emit a JSON object");

  // gw table1
  int dmax = 31;
  std::string engine_text = "both";
  auto* table1_cmd = app.add_subcommand("table1", "Signed real counts of curves through d conjugate point pairs in P^3");
  table1_cmd->add_option("--dmax", dmax, "Largest degree")->check(CLI::Range(1, 31));
  table1_cmd->add_option("--engine", engine_text, "closed | general | both")
      ->check(CLI::IsMember({"closed", "general", "both"}));
  add_format(table1_cmd);

  // gw table2
  std::string space_text;
  auto* table2_cmd = app.add_subcommand("table2", "Real counts in P^5 or P^7");
  table2_cmd->add_option("space", space_text, "p5 | p7")->required()->check(CLI::IsMember({"p5", "p7"}));
  add_format(table2_cmd);

  // gw check
  std::string suite_text;
  bool verbose = false;
  int check_dmax = 31;
  auto* check_cmd = app.add_subcommand("check", "Run a validator suite");
  check_cmd->add_option("suite", suite_text, "parity | mod4 | wdvv-identity | cross-dim | divisor | all")
      ->required()
      ->check(CLI::IsMember({"parity", "mod4", "wdvv-identity", "cross-dim", "divisor", "all"}));
  check_cmd->add_option("--dmax", check_dmax, "Largest degree for the mod4 suite")->check(CLI::Range(1, 200));
  check_cmd->add_flag("--verbose", verbose, "List passing checks too");

  // gw cache
  std::string cache_action;
  auto* cache_cmd = app.add_subcommand("cache", "Persist or inspect the invariant cache");
  cache_cmd->add_option("action", cache_action, "save | load | stats")
      ->required()
      ->check(CLI::IsMember({"save", "load", "stats"}));
  cache_cmd->add_option("--dmax", dmax, "Largest P^3 degree precomputed by save")->check(CLI::Range(1, 31));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (complex_cmd->parsed()) {
      session.open_cache();
      const std::vector<int> codims = parse_codims(codims_text);
      if (dim < 1) throw UsageError("--dim must be >= 1");
      if (degree < 0) throw UsageError("--d must be >= 0");
      const BigInt v = eval_complex(dim, degree, CodimVector::from_list(codims), *session.complex);
      if (json_out) {
        nlohmann::ordered_json j;
        j["space"] = "P" + std::to_string(dim);
        j["d"] = degree;
        j["codims"] = codims;
        j["value"] = to_decimal(v);
        out << j.dump() << '\n';
      } else {
        out << to_decimal(v) << '\n';
      }
      session.close_cache();
      return kExitOk;
    }

    if (real_cmd->parsed()) {
      session.open_cache();
      const std::vector<int> codims = parse_codims(codims_text);
      if (half < 2) throw UsageError("--n must be >= 2 (target P^(2n-1))");
      if (degree < 1) throw UsageError("--d must be >= 1 for real invariants");
      for (int c : codims) {
        if (c < 1) throw UsageError("real codimensions must be >= 1");
      }
      const Involution phi = phi_text == "eta" ? Involution::eta : Involution::tau;
      const BigInt v = eval_real(RealKey::make(half, degree, CodimVector::from_list(codims), phi), *session.real);
      if (json_out) {
        nlohmann::ordered_json j;
        j["space"] = "P" + std::to_string(2 * half - 1);
        j["phi"] = phi_text;
        j["d"] = degree;
        j["codims"] = codims;
        j["value"] = to_decimal(v);
        out << j.dump() << '\n';
      } else {
        out << to_decimal(v) << '\n';
      }
      session.close_cache();
      return kExitOk;
    }

    if (table1_cmd->parsed()) {
      session.open_cache();
      const Table1Engine engine = engine_text == "closed"    ? Table1Engine::closed
                                  : engine_text == "general" ? Table1Engine::general
                                                             : Table1Engine::both;
      const auto rows = table1_rows(dmax, engine, *session.real);
      bool agree = true;
      for (const auto& r : rows) {
        if (!r.agree()) {
          agree = false;
          err << "engine disagreement at d=" << r.d << ": closed=" << to_decimal(*r.closed)
              << " general=" << to_decimal(*r.general) << '\n';
        }
      }
      if (format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& r : rows) j.push_back({{"d", r.d}, {"value", to_decimal(r.value())}});
        out << j.dump(2) << '\n';
      } else if (format == "csv") {
        out << "d,value\n";
        for (const auto& r : rows) out << r.d << ',' << to_decimal(r.value()) << '\n';
      } else {
        out << "d\tN_d^R\n";
        for (const auto& r : rows) out << r.d << '\t' << to_decimal(r.value()) << '\n';
      }
      session.close_cache();
      return agree ? kExitOk : kExitFailed;
    }

    if (table2_cmd->parsed()) {
      session.open_cache();
      const int n = space_text == "p5" ? 3 : 4;
      const auto rows = table2_rows(n, *session.real);
      if (format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
          j.push_back({{"d", r.d}, {"signature", r.signature(n)}, {"value", to_decimal(r.value)}});
        }
        out << j.dump(2) << '\n';
      } else if (format == "csv") {
        out << "d,signature,value\n";
        for (const auto& r : rows) out << r.d << ',' << r.signature(n) << ',' << to_decimal(r.value) << '\n';
      } else {
        out << "d\tcond\t<...>_d in P" << 2 * n - 1 << '\n';
        for (const auto& r : rows) out << r.d << '\t' << r.signature(n) << '\t' << to_decimal(r.value) << '\n';
      }
      session.close_cache();
      return kExitOk;
    }

    if (check_cmd->parsed()) {
      session.open_cache();
      const bool all = suite_text == "all";
      std::vector<CheckReport> reports;
      if (all || suite_text == "parity") {
        CheckReport r("parity");
        r.absorb(parity_report(2, {1, 3, 5}, *session.real));
        r.absorb(parity_report(3, {1, 3, 5}, *session.real));
        reports.push_back(std::move(r));
      }
      if (all || suite_text == "mod4") reports.push_back(congruence_mod4_report(check_dmax));
      if (all || suite_text == "wdvv-identity") {
        reports.push_back(exchange_identity_report(exchange_identity_samples(), *session.real));
      }
      if (all || suite_text == "cross-dim") reports.push_back(cross_dim_report(*session.real));
      if (all || suite_text == "divisor") reports.push_back(divisor_report(kDivisorSeed, kDivisorSamples));
      bool ok = true;
      for (const auto& r : reports) {
        r.print(out, verbose);
        ok = ok && r.ok();
      }
      session.close_cache();
      return ok ? kExitOk : kExitFailed;
    }

    if (cache_cmd->parsed()) {
      if (session.cache_path.empty()) throw UsageError("cache commands need --cache <path> or GW_CACHE");
      if (cache_action == "save") {
        session.open_cache();
        table1_rows(dmax, Table1Engine::general, *session.real);
        table2_rows(3, *session.real);
        table2_rows(4, *session.real);
        const std::size_t fresh = session.cache.harvest(*session.complex, *session.real);
        session.cache.save(session.cache_path);
        out << "saved " << session.cache.size() << " records (" << fresh << " new) to " << session.cache_path << '\n';
        return kExitOk;
      }
      if (!std::filesystem::exists(session.cache_path)) throw CacheError("no cache file at " + session.cache_path);
      session.cache.load(session.cache_path);
      if (cache_action == "load") {
        out << "loaded " << session.cache.size() << " records from " << session.cache_path << '\n';
        return kExitOk;
      }
      const auto complex_count = session.cache.count(CacheKind::complex);
      const auto real_count = session.cache.count(CacheKind::real);
      out << "records\t" << session.cache.size() << '\n';
      out << "complex\t" << complex_count << '\n';
      out << "real\t" << real_count << '\n';
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CacheError& e) {
    err << "cache error: " << e.what() << '\n';
    return kExitFailed;
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace gw::cli
