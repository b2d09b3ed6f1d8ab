#include "scrimkit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include "scrimkit/chainring.hpp"
#include "scrimkit/hlcd.hpp"
#include "scrimkit/poly_text.hpp"

namespace scrimkit {

namespace {

using json = nlohmann::json;

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json counts_json(const ScrimCounts& c) { return {{"omega", c.omega}, {"lambda", c.lambda}}; }

// Counts that fit in 64 bits are numbers, larger ones decimal strings.
json big_json(const BigInt& v) {
  if (v <= std::numeric_limits<u64>::max()) return v.convert_to<u64>();
  return v.str();
}

int cmd_factor(u64 q, u64 n, const std::string& format, std::ostream& out) {
  const auto report = factor_xn_minus_1(q, n);
  const auto& F = report.field;
  if (format == "json") {
    json doc;
    doc["q"] = q;
    doc["n"] = n;
    doc["omega"] = json::array();
    for (const auto& f : report.omega) doc["omega"].push_back(format_poly(F, f));
    doc["lambda"] = json::array();
    for (const auto& [g, h] : report.lambda_pairs) doc["lambda"].push_back({format_poly(F, g), format_poly(F, h)});
    doc["counts"] = {{"explicit", counts_json(report.explicit_counts)},
                     {"direct", counts_json(report.direct_counts)},
                     {"recursive", {{"omega", report.recursive_omega}}}};
    out << doc.dump() << '\n';
  } else {
    out << "x^" << n << " - 1 over F_" << F.size() << "\n";
    out << "SCRIM factors (" << report.omega.size() << "):\n";
    for (const auto& f : report.omega) out << "  " << format_poly(F, f) << '\n';
    out << "CRIM pairs (" << report.lambda_pairs.size() << "):\n";
    for (const auto& [g, h] : report.lambda_pairs) {
      out << "  " << format_poly(F, g) << "  |  " << format_poly(F, h) << '\n';
    }
    out << "counts: explicit " << report.explicit_counts.omega << "/" << report.explicit_counts.lambda
        << ", direct " << report.direct_counts.omega << "/" << report.direct_counts.lambda << ", recursive "
        << report.recursive_omega << '\n';
  }
  if (!report.counts_agree()) throw VerificationFailure("counting paths disagree");
  return kExitOk;
}

int cmd_codes(u64 q, u64 n, std::optional<unsigned> t, const std::string& mode, bool enumerate,
              const Budget& budget, std::ostream& out) {
  if (mode == "lcd") {
    out << count_hermitian_lcd(q, n) << '\n';
    if (!enumerate) return kExitOk;
    HermitianLcd lcd(FieldSpec::for_q(q), n);
    for (const auto& code : lcd.enumerate(budget)) {
      const auto verdict = lcd.is_hermitian_lcd(code, budget);
      if (!verdict.consistent() || !verdict.is_lcd()) {
        throw VerificationFailure("enumerated code failed the LCD test: " +
                                  format_poly(lcd.field(), code.generator));
      }
      out << format_poly(lcd.field(), code.generator) << '\n';
    }
    return kExitOk;
  }

  if (!t || *t < 2) throw Error(Errc::NilpotencyTooSmall, "--mode selfdual needs --t >= 2");
  out << count_self_dual(q, n, *t) << '\n';
  if (!enumerate || *t % 2 != 0) return kExitOk;
  auto lift = std::make_shared<const LiftedFactorization>(hensel_lift(q, n, *t));
  const bool run_oracle = oracle_within_budget(*lift, budget);
  for (const auto& code : enumerate_self_dual(lift, budget)) {
    if (!is_hermitian_self_dual(code) || (run_oracle && !codeword_duality_oracle(code, budget).self_dual)) {
      throw VerificationFailure("enumerated code is not self-dual");
    }
    std::ostringstream ks;
    for (std::size_t i = 0; i < code.k.size(); ++i) ks << (i ? "," : "") << code.k[i];
    out << "k=(" << ks.str() << ") " << format_rpoly(lift->ring, code.generator()) << '\n';
  }
  return kExitOk;
}

struct CensusRow {
  u64 q = 0;
  u64 n = 0;
  std::optional<unsigned> t;
  ScrimCounts counts;
  BigInt lcd_count;
  std::optional<BigInt> selfdual_count;
  bool agree = false;
  long long ms = 0;
};

struct CensusCell {
  std::vector<CensusRow> rows;
  std::string note;
};

CensusCell census_cell(u64 q, u64 n, const std::vector<unsigned>& ts) {
  const auto start = std::chrono::steady_clock::now();
  CensusCell cell;
  const ScrimCounts direct = count_direct(q, n);
  bool agree = direct.omega == count_recursive(q, n);
  try {
    const auto report = factor_xn_minus_1(q, n);
    agree = agree && report.counts_agree();
  } catch (const Error& e) {
    if (e.code() != Errc::SizeLimitExceeded) throw;
    cell.note = "q=" + std::to_string(q) + " n=" + std::to_string(n) +
                ": explicit factorization skipped (extension too large)";
  }
  const BigInt lcd = count_hermitian_lcd(q, n);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                      .count();
  auto base = CensusRow{q, n, std::nullopt, direct, lcd, std::nullopt, agree, ms};
  if (ts.empty()) {
    cell.rows.push_back(base);
  } else {
    for (unsigned t : ts) {
      CensusRow row = base;
      row.t = t;
      row.selfdual_count = count_self_dual(q, n, t);
      cell.rows.push_back(std::move(row));
    }
  }
  return cell;
}

void write_row(std::ostream& os, const CensusRow& r, bool csv) {
  if (csv) {
    os << r.q << ',' << r.n << ',' << (r.t ? std::to_string(*r.t) : "") << ',' << r.counts.omega << ','
       << r.counts.lambda << ',' << r.lcd_count << ',' << (r.selfdual_count ? r.selfdual_count->str() : "") << ','
       << (r.agree ? "true" : "false") << ',' << r.ms << '\n';
    return;
  }
  json row = {{"q", r.q},
              {"n", r.n},
              {"t", r.t ? json(*r.t) : json(nullptr)},
              {"omega", r.counts.omega},
              {"lambda", r.counts.lambda},
              {"lcd_count", big_json(r.lcd_count)},
              {"selfdual_count", r.selfdual_count ? big_json(*r.selfdual_count) : json(nullptr)},
              {"agree", r.agree},
              {"ms", r.ms}};
  os << row.dump() << '\n';
}

int cmd_census(std::vector<u64> qs, u64 n_max, std::vector<unsigned> ts, const std::string& format,
               const std::string& path, std::ostream& out, std::ostream& err) {
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (u64 q : qs) nt::as_prime_power(q);
  for (unsigned t : ts) {
    if (t < 2) throw Error(Errc::NilpotencyTooSmall, "--t-list entries must be at least 2");
  }

  std::ofstream file;
  if (!path.empty()) {
    file.open(path, std::ios::out | std::ios::trunc);
    if (!file) {
      err << "error: cannot open " << path << " for writing\n";
      return kExitOutput;
    }
  }
  std::ostream& sink = path.empty() ? out : file;

  std::vector<std::pair<u64, u64>> tasks;
  for (u64 q : qs) {
    for (u64 n = 1; n <= n_max; ++n) {
      if (std::gcd(q, n) != 1) {
        err << "note: skipping q=" << q << " n=" << n << " (gcd(n, q) != 1)\n";
        continue;
      }
      tasks.emplace_back(q, n);
    }
  }

  std::vector<CensusCell> cells(tasks.size());
  std::vector<std::exception_ptr> failures(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        cells[i] = census_cell(tasks[i].first, tasks[i].second, ts);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16));
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  pool.clear();

  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  const bool csv = format == "csv";
  if (csv) sink << "q,n,t,omega,lambda,lcd_count,selfdual_count,agree,ms\n";
  bool all_agree = true;
  for (const auto& cell : cells) {
    if (!cell.note.empty()) err << "note: " << cell.note << '\n';
    for (const auto& row : cell.rows) {
      write_row(sink, row, csv);
      all_agree = all_agree && row.agree;
    }
  }
  sink.flush();
  if (!sink) {
    err << "error: writing " << (path.empty() ? "output" : path) << " failed\n";
    return kExitOutput;
  }
  if (!all_agree) throw VerificationFailure("counting paths disagree on at least one row");
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"SCRIM factorizations, Hermitian LCD codes and self-dual codes over chain rings"};
  app.require_subcommand(1);

  u64 q = 0, n = 0;
  std::string format = "text";
  auto* factor = app.add_subcommand("factor", "Factor x^n - 1 over F_{q^2} into SCRIM factors and CRIM pairs");
  factor->add_option("--q", q, "prime power q")->required();
  factor->add_option("--n", n, "length n, coprime to q")->required()->check(CLI::PositiveNumber);
  factor->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  u64 cq = 0, cn = 0;
  std::optional<unsigned> ct;
  std::string mode;
  bool enumerate = false;
  auto* codes = app.add_subcommand("codes", "Count or list Hermitian LCD / self-dual cyclic codes");
  codes->add_option("--q", cq, "prime power q")->required();
  codes->add_option("--n", cn, "length n")->required()->check(CLI::PositiveNumber);
  codes->add_option("--t", ct, "nilpotency index of F_{q^2}[u]/(u^t)");
  codes->add_option("--mode", mode, "lcd or selfdual")->required()->check(CLI::IsMember({"lcd", "selfdual"}));
  codes->add_flag("--enumerate", enumerate, "print every generator");

  std::vector<u64> qs;
  u64 n_max = 0;
  std::vector<unsigned> ts;
  std::string census_format = "csv";
  std::string path;
  auto* census = app.add_subcommand("census", "Parameter sweep with one row per (q, n[, t])");
  census->add_option("--q-list", qs, "comma-separated prime powers")->required()->delimiter(',');
  census->add_option("--n-max", n_max, "largest n")->required()->check(CLI::PositiveNumber);
  census->add_option("--t-list", ts, "comma-separated nilpotency indices")->delimiter(',');
  census->add_option("--out", census_format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
  census->add_option("--output", path, "write rows to this file instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Budget budget;
  try {
    budget = Budget::from_env();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*factor) return cmd_factor(q, n, format, out);
    if (*codes) return cmd_codes(cq, cn, ct, mode, enumerate, budget, out);
    return cmd_census(qs, n_max, ts, census_format, path, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_precondition(e.code()) ? kExitPrecondition : kExitVerification;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerification;
  }
}

}  // namespace scrimkit
