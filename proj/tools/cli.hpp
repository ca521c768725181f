#pragma once

// The `mzv` command line: products, identity verification over (k, n) grids,
// MZV evaluation and golden-file generation.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mzv/mzv.hpp"

namespace mzv::cli {

enum class OutputFormat { text, json, csv };

struct RunConfig {
  std::vector<IdentityId> identities{kAllIdentities.begin(), kAllIdentities.end()};
  int k_min = 2;
  int k_max = 5;
  int n_min = 2;
  int n_max = 12;
  double tol = 1e-10;
  OutputFormat format = OutputFormat::text;
  bool oracle = false;
  unsigned jobs = 1;

  ProductEngine engine() const { return oracle ? ProductEngine::oracle : ProductEngine::recursive; }
};

/// Throws std::invalid_argument describing the first problem.
inline void validate(const RunConfig& c) {
  if (c.k_min > c.k_max) throw std::invalid_argument("empty k-range");
  if (c.n_min > c.n_max) throw std::invalid_argument("empty n-range");
  if (c.k_min < 0 || c.n_min < 0) throw std::invalid_argument("k and n must be nonnegative");
  if (c.n_max > max_weight()) {
    throw std::invalid_argument("n-max " + std::to_string(c.n_max) + " exceeds the weight ceiling " +
                                std::to_string(max_weight()));
  }
  if (!(c.tol > 0)) throw std::invalid_argument("tolerance must be positive");
  if (c.identities.empty()) throw std::invalid_argument("no identities selected");
  if (c.jobs == 0) throw std::invalid_argument("--jobs must be >= 1");
}

// ---------------------------------------------------------------------------

/// Product of two words given as text. Compositions use the stuffle or the
/// transported shuffle; two {x,y} words under `shuffle` use the word shuffle.
inline std::string cmd_product(const std::string& kind, const std::string& u, const std::string& v,
                               bool oracle = false) {
  const ProductEngine engine = oracle ? ProductEngine::oracle : ProductEngine::recursive;
  const bool u_word = looks_like_binary_word(u);
  const bool v_word = looks_like_binary_word(v);
  auto as_composition = [](const std::string& text) {
    return looks_like_binary_word(text) ? word_to_composition(parse_binary_word(text)) : parse_composition(text);
  };
  if (kind == "stuffle") {
    const Composition a = as_composition(u);
    const Composition b = as_composition(v);
    return to_string(engine == ProductEngine::oracle ? oracle::quasi_shuffle(a, b) : stuffle(a, b));
  }
  if (kind == "shuffle") {
    if (u_word && v_word) {
      const BinaryWord a = parse_binary_word(u);
      const BinaryWord b = parse_binary_word(v);
      return to_string(engine == ProductEngine::oracle ? oracle::shuffle(a, b) : shuffle_words(a, b));
    }
    return to_string(transported_shuffle(as_composition(u), as_composition(v), engine));
  }
  throw std::invalid_argument("unknown product kind '" + kind + "' (expected stuffle or shuffle)");
}

struct Cell {
  IdentityId identity;
  int k;
  int n;
};

/// Cells of the grid, sorted by (identity, k, n); out-of-domain cells are
/// skipped.
inline std::vector<Cell> grid_cells(const RunConfig& c) {
  std::vector<IdentityId> ids = c.identities;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<Cell> cells;
  for (IdentityId id : ids) {
    for (int k = c.k_min; k <= c.k_max; ++k) {
      for (int n = c.n_min; n <= c.n_max; ++n) {
        if (cell_in_domain(id, k, n)) cells.push_back({id, k, n});
      }
    }
  }
  return cells;
}

namespace detail {

inline std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace detail

inline void write_report(std::ostream& out, const IdentityReport& r, OutputFormat format) {
  switch (format) {
    case OutputFormat::json:
      out << to_json(r).dump() << '\n';
      break;
    case OutputFormat::csv:
      out << to_string(r.identity) << ',' << r.k << ',' << r.n << ',' << (r.verified() ? "verified" : "failed")
          << ',' << detail::csv_quote(to_string(r.discrepancy)) << '\n';
      break;
    case OutputFormat::text:
      out << to_string(r.identity) << " k=" << r.k << " n=" << r.n << ' '
          << (r.verified() ? "verified" : "failed");
      if (!r.verified()) out << " discrepancy: " << to_string(r.discrepancy);
      out << '\n';
      break;
  }
}

/// Runs every grid cell (up to `jobs` at once) and writes the reports in
/// grid order. Returns 0 iff every cell verified.
inline int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  const std::vector<Cell> cells = grid_cells(config);
  if (config.format == OutputFormat::csv) out << "identity,k,n,status,discrepancy\n";
  if (cells.empty()) {
    err << "warning: the requested grid contains no valid (identity, k, n) cells\n";
    return 0;
  }
  std::vector<std::optional<IdentityReport>> reports(cells.size());
  std::vector<std::string> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        reports[i] = verify(cells[i].identity, cells[i].k, cells[i].n, config.engine());
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  const unsigned workers = std::min<unsigned>(config.jobs, static_cast<unsigned>(cells.size()));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  std::size_t verified = 0;
  std::size_t failed = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (reports[i]) {
      write_report(out, *reports[i], config.format);
      (reports[i]->verified() ? verified : failed)++;
    } else {
      ++failed;
      err << "error: " << to_string(cells[i].identity) << " k=" << cells[i].k << " n=" << cells[i].n << ": "
          << errors[i] << '\n';
    }
  }
  err << cells.size() << " cells: " << verified << " verified, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

/// Evaluates zeta(s) and prints the value with its error bound.
inline int cmd_eval(const std::string& text, double tol, OutputFormat format, std::ostream& out,
                    std::ostream& err) {
  try {
    const Composition s = parse_composition(text);
    const NumericValue v = mzv(s, tol);
    if (format == OutputFormat::json) {
      nlohmann::json j;
      j["composition"] = s.parts();
      j["value"] = v.value.str(40);
      j["err"] = v.err.str(3, std::ios_base::scientific);
      out << j.dump() << '\n';
    } else {
      out << "zeta" << to_string(s).substr(1) << " = " << format_value(v) << '\n';
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

/// Writes oracle-computed products for every pair up to `max_weight` total:
///   stuffle.golden  "u | v | u * v"      (compositions)
///   shuffle.golden  "u | v | u ⧢ v"      (binary words over {x, y})
inline void dump_golden(const std::filesystem::path& dir, int max_weight) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(dir / "stuffle.golden");
    for (int total = 2; total <= max_weight; ++total) {
      for (int a = 1; a < total; ++a) {
        for (const auto& u : all_compositions_of_weight(a)) {
          for (const auto& v : all_compositions_of_weight(total - a)) {
            f << to_string(u) << " | " << to_string(v) << " | " << to_string(oracle::quasi_shuffle(u, v)) << '\n';
          }
        }
      }
    }
  }
  {
    std::ofstream f(dir / "shuffle.golden");
    auto words_of_length = [](int len) {
      std::vector<BinaryWord> out;
      for (unsigned m = 0; m < (1u << len); ++m) {
        std::vector<Letter> letters;
        for (int i = len - 1; i >= 0; --i) letters.push_back((m >> i) & 1u ? Letter::X1 : Letter::X0);
        out.emplace_back(std::move(letters));
      }
      return out;
    };
    for (int total = 2; total <= max_weight; ++total) {
      for (int a = 1; a < total; ++a) {
        for (const auto& u : words_of_length(a)) {
          for (const auto& v : words_of_length(total - a)) {
            f << to_string(u) << " | " << to_string(v) << " | " << to_string(oracle::shuffle(u, v)) << '\n';
          }
        }
      }
    }
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact quasi-shuffle and shuffle algebra engine for multiple zeta values"};
  app.require_subcommand(0, 1);

  std::string golden_dir;
  int golden_weight = 7;
  app.add_option("--dump-golden", golden_dir, "Write oracle-generated golden files into this directory");
  app.add_option("--golden-weight", golden_weight, "Largest total weight in the golden files")->check(
      CLI::Range(2, 12));

  const std::map<std::string, OutputFormat> formats{
      {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};

  auto* product = app.add_subcommand("product", "Multiply two words");
  std::string kind;
  std::string lhs;
  std::string rhs;
  bool product_oracle = false;
  product->add_option("kind", kind, "stuffle or shuffle")->required()->check(CLI::IsMember({"stuffle", "shuffle"}));
  product->add_option("u", lhs, "First word, e.g. z(2,1), 2,1 or xyy")->required();
  product->add_option("v", rhs, "Second word")->required();
  product->add_flag("--oracle", product_oracle, "Use the brute-force enumerators");

  auto* verify_cmd = app.add_subcommand("verify", "Verify identities over a (k, n) grid");
  RunConfig config;
  std::string identity = "all";
  verify_cmd->add_option("--identity", identity, "Identity name (Thm31, Thm32, ...) or 'all'");
  verify_cmd->add_option("--k-min", config.k_min);
  verify_cmd->add_option("--k-max", config.k_max);
  verify_cmd->add_option("--n-min", config.n_min);
  verify_cmd->add_option("--n-max", config.n_max);
  verify_cmd->add_option("--tol", config.tol, "Numeric tolerance");
  verify_cmd->add_option("--format", config.format, "text, json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  verify_cmd->add_flag("--oracle", config.oracle, "Route products through the brute-force enumerators");
  verify_cmd->add_option("--jobs", config.jobs, "Cells evaluated concurrently");

  auto* eval = app.add_subcommand("eval", "Evaluate a multiple zeta value");
  std::string composition;
  double tol = 1e-10;
  OutputFormat eval_format = OutputFormat::text;
  eval->add_option("composition", composition, "Index, e.g. z(2,1) or 2,1")->required();
  eval->add_option("--tol", tol, "Absolute error bound");
  eval->add_option("--format", eval_format, "text or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; every other parse failure is a config error.
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  if (!golden_dir.empty()) {
    dump_golden(golden_dir, golden_weight);
    err << "golden files written to " << golden_dir << '\n';
    if (app.get_subcommands().empty()) return 0;
  }

  if (product->parsed()) {
    try {
      out << cmd_product(kind, lhs, rhs, product_oracle) << '\n';
      return 0;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    }
  }
  if (verify_cmd->parsed()) {
    if (identity != "all") {
      auto id = identity_from_string(identity);
      if (!id) {
        err << "error: unknown identity '" << identity << "'\n";
        return 2;
      }
      config.identities = {*id};
    }
    return cmd_verify(config, out, err);
  }
  if (eval->parsed()) return cmd_eval(composition, tol, eval_format, out, err);

  out << app.help();
  return golden_dir.empty() ? 2 : 0;
}

}  // namespace mzv::cli
