#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "sumplete/error.hpp"
#include "sumplete/generator.hpp"
#include "sumplete/instance_io.hpp"
#include "sumplete/reduction.hpp"
#include "sumplete/rng.hpp"
#include "sumplete/solver.hpp"
#include "sumplete/xsat_io.hpp"

namespace sumplete::cli {

namespace {

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Io {
 public:
  Io(std::istream& in, std::ostream& out, std::ostream& err, bool quiet)
      : in_(in), out_(out), err_(err), null_(nullptr), quiet_(quiet) {}

  std::string read(const std::string& path) {
    if (path == "-") {
      if (stdin_used_) throw IoFailure("standard input can only be read once");
      stdin_used_ = true;
      return {std::istreambuf_iterator<char>(in_), {}};
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoFailure("cannot open '" + path + "' for reading");
    return {std::istreambuf_iterator<char>(file), {}};
  }

  /// Empty path or "-" means standard output.
  void write(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
      out_ << data;
      return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << data)) {
      throw IoFailure("cannot write '" + path + "'");
    }
  }

  std::ostream& out() { return out_; }
  std::ostream& diag() { return quiet_ ? null_ : err_; }
  std::ostream& error() { return err_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  std::ostream null_;
  bool quiet_;
  bool stdin_used_ = false;
};

Instance load_instance(Io& io, const std::string& path) {
  const std::string text = io.read(path);
  return parse_instance(text, detect_format(text));
}

Mask load_mask(Io& io, const std::string& path) {
  const std::string text = io.read(path);
  return parse_mask(text, detect_format(text));
}

XsatInstance load_xsat(Io& io, const std::string& path) {
  const std::string text = io.read(path);
  return parse_xsat(text, detect_format(text));
}

Assignment load_assignment(Io& io, const std::string& path) {
  const std::string text = io.read(path);
  return parse_assignment(text, detect_format(text));
}

void warn_if_not_digits(Io& io, const Instance& inst) {
  const auto big = std::count_if(inst.grid().begin(), inst.grid().end(),
                                 [](Value v) { return v > 9; });
  if (big > 0) {
    io.diag() << "warning: " << big
              << " cell(s) hold values above 9 (not single-digit)\n";
  }
}

std::string signed_str(Value v) {
  return (v > 0 ? "+" : "") + std::to_string(v);
}

Pruning parse_pruning(const std::string& name) {
  if (name == "none") return Pruning::None;
  if (name == "interval") return Pruning::Interval;
  return Pruning::Reachability;
}

std::uint64_t parse_u64(std::string_view text, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorKind::Syntax, what,
                "expected a non-negative integer, got '" + std::string(text) +
                    "'");
  }
  return v;
}

/// "p/q", an integer, or a decimal such as 0.25.
Probability parse_probability(const std::string& text) {
  Probability p;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    p.num = parse_u64(std::string_view(text).substr(0, slash), "--keep-prob");
    p.den = parse_u64(std::string_view(text).substr(slash + 1), "--keep-prob");
  } else if (auto dot = text.find('.'); dot != std::string::npos) {
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const std::size_t places = text.size() - dot - 1;
    if (places > 18) {
      throw Error(ErrorKind::Syntax, "--keep-prob", "too many decimal places");
    }
    p.num = parse_u64(digits, "--keep-prob");
    p.den = 1;
    for (std::size_t k = 0; k < places; ++k) p.den *= 10;
  } else {
    p.num = parse_u64(text, "--keep-prob");
    p.den = 1;
  }
  if (p.den == 0 || p.num > p.den) {
    throw Error(ErrorKind::Precondition, "--keep-prob",
                "probability must lie in [0, 1]");
  }
  return p;
}

/// "1,3", "(1,3)" or "1..9".
std::vector<Value> parse_alphabet(std::string text) {
  text.erase(std::remove_if(text.begin(), text.end(),
                            [](char c) { return c == '(' || c == ')' || c == ' '; }),
             text.end());
  std::vector<Value> out;
  if (auto range = text.find(".."); range != std::string::npos) {
    const auto lo = parse_u64(std::string_view(text).substr(0, range), "--alphabet");
    const auto hi = parse_u64(std::string_view(text).substr(range + 2), "--alphabet");
    if (lo > hi || hi > static_cast<std::uint64_t>(kMaxCellValue)) {
      throw Error(ErrorKind::Precondition, "--alphabet", "bad range");
    }
    for (auto v = lo; v <= hi; ++v) out.push_back(static_cast<Value>(v));
    return out;
  }
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto v = parse_u64(item, "--alphabet");
    if (v > static_cast<std::uint64_t>(kMaxCellValue)) {
      throw Error(ErrorKind::Precondition, "--alphabet", "value too large");
    }
    out.push_back(static_cast<Value>(v));
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_verify(Io& io, const std::string& instance_path,
               const std::string& mask_path, bool strict) {
  const Instance inst = load_instance(io, instance_path);
  if (strict) warn_if_not_digits(io, inst);
  const Mask mask = load_mask(io, mask_path);
  if (verify(inst, mask)) {
    io.out() << "valid\n";
    return kOk;
  }
  io.out() << "invalid\n";
  const auto rows = row_sums(inst, mask);
  const auto cols = col_sums(inst, mask);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] != inst.row_hint(i)) {
      io.diag() << "row " << i + 1 << ": sum " << rows[i] << ", hint "
                << inst.row_hint(i) << ", delta "
                << signed_str(rows[i] - inst.row_hint(i)) << '\n';
    }
  }
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] != inst.col_hint(j)) {
      io.diag() << "column " << j + 1 << ": sum " << cols[j] << ", hint "
                << inst.col_hint(j) << ", delta "
                << signed_str(cols[j] - inst.col_hint(j)) << '\n';
    }
  }
  return kNegative;
}

struct SolveOptions {
  std::string path;
  bool count = false;
  bool stats = false;
  bool timing = false;
  bool strict = false;
  std::optional<std::uint64_t> limit;
  std::optional<std::uint64_t> cap;
  std::string pruning = "reachability";
};

void print_stats(Io& io, const SolveStats& stats, bool timing) {
  io.diag() << "nodes_expanded=" << stats.nodes_expanded
            << " row_subsets_enumerated=" << stats.row_subsets_enumerated;
  if (timing) {
    io.diag() << " elapsed_us="
              << std::chrono::duration_cast<std::chrono::microseconds>(
                     stats.elapsed)
                     .count();
  }
  io.diag() << '\n';
}

int cmd_solve(Io& io, const SolveOptions& opt, Format format) {
  const Instance inst = load_instance(io, opt.path);
  if (opt.strict) warn_if_not_digits(io, inst);
  SolverConfig cfg;
  cfg.node_limit = opt.limit;
  cfg.solution_cap = opt.cap;
  cfg.deterministic = !opt.timing;
  cfg.pruning = parse_pruning(opt.pruning);

  if (opt.count) {
    const CountOutcome result = count_solutions(inst, cfg);
    io.out() << result.count << '\n';
    if (!result.exhausted) {
      io.diag() << "search incomplete; count is a lower bound\n";
    }
    if (opt.stats) print_stats(io, result.stats, opt.timing);
    if (result.count > 0) return kOk;
    return result.exhausted ? kNegative : kResourceLimit;
  }

  const SolveOutcome result = solve(inst, cfg);
  if (opt.stats) print_stats(io, result.stats, opt.timing);
  switch (result.status) {
    case SolveStatus::Solved:
      io.out() << serialize_mask(*result.witness, format);
      return kOk;
    case SolveStatus::Unsolvable:
      io.out() << "UNSOLVABLE\n";
      return kNegative;
    case SolveStatus::ResourceLimit:
      io.out() << "RESOURCE-LIMIT\n";
      return kResourceLimit;
  }
  return kBadInput;
}

struct ReduceOptions {
  std::string path;
  std::string output;
  std::string witness;
  std::string mask_output;
};

int cmd_reduce(Io& io, const ReduceOptions& opt, Format format) {
  const XsatInstance phi = load_xsat(io, opt.path);
  io.write(opt.output, serialize_instance(reduce(phi), format));
  if (opt.witness.empty()) return kOk;

  const Assignment a = load_assignment(io, opt.witness);
  io.write(opt.mask_output, serialize_mask(assignment_to_mask(phi, a), format));
  if (!verify_assignment(phi, a)) {
    io.diag() << "assignment does not satisfy the formula; the mask is not a "
                 "solution\n";
    return kNegative;
  }
  return kOk;
}

int cmd_decode(Io& io, const std::string& formula_path,
               const std::string& mask_path, Format format) {
  const XsatInstance phi = load_xsat(io, formula_path);
  const Mask mask = load_mask(io, mask_path);
  if (!is_regular(phi)) {
    throw Error(ErrorKind::NotRegular, "", "formula is not 3-CNF+3");
  }
  const Instance inst = reduce(phi);
  if (!verify(inst, mask)) {
    io.diag() << "mask does not solve the reduced instance\n";
    return kNegative;
  }
  io.out() << serialize_assignment(mask_to_assignment(phi, mask), format);
  return kOk;
}

int cmd_xsat_verify(Io& io, const std::string& formula_path,
                    const std::string& assignment_path) {
  const XsatInstance phi = load_xsat(io, formula_path);
  const Assignment a = load_assignment(io, assignment_path);
  if (verify_assignment(phi, a)) {
    io.out() << "satisfied\n";
    return kOk;
  }
  io.out() << "unsatisfied\n";
  for (std::size_t i = 0; i < phi.clauses().size(); ++i) {
    int true_count = 0;
    for (auto v : phi.clauses()[i]) true_count += a.values[v] ? 1 : 0;
    if (true_count != 1) {
      io.diag() << "clause " << i + 1 << ": " << true_count
                << " true literals\n";
    }
  }
  return kNegative;
}

struct GenOptions {
  std::string kind;
  std::size_t rows = 5;
  std::size_t cols = 5;
  std::string size;
  std::string alphabet = "1..9";
  std::string keep_prob = "1/2";
  std::size_t n = 6;
  bool unique = false;
  std::size_t max_attempts = 100;
  std::string output;
  std::string witness_output;
};

int cmd_gen(Io& io, GenOptions opt, std::uint64_t seed, Format format) {
  if (opt.kind == "xsat") {
    io.write(opt.output, serialize_xsat(gen_xsat_regular(opt.n, seed), format));
    return kOk;
  }
  if (opt.kind == "planted") {
    const PlantedXsat planted = gen_xsat_planted(opt.n, seed);
    io.write(opt.output, serialize_xsat(planted.instance, format));
    if (!opt.witness_output.empty()) {
      io.write(opt.witness_output, serialize_assignment(planted.assignment, format));
    }
    return kOk;
  }

  GenConfig cfg;
  if (!opt.size.empty()) {
    const auto x = opt.size.find('x');
    if (x == std::string::npos) {
      throw Error(ErrorKind::Syntax, "--size", "expected ROWSxCOLS");
    }
    opt.rows = parse_u64(std::string_view(opt.size).substr(0, x), "--size");
    opt.cols = parse_u64(std::string_view(opt.size).substr(x + 1), "--size");
  }
  cfg.rows = opt.rows;
  cfg.cols = opt.cols;
  cfg.alphabet = parse_alphabet(opt.alphabet);
  cfg.keep_prob = parse_probability(opt.keep_prob);

  // Attempt 0 uses the seed itself; later attempts use its sub-streams.
  for (std::size_t attempt = 0; attempt < opt.max_attempts; ++attempt) {
    cfg.seed = attempt == 0 ? seed : stream_seed(seed, attempt - 1);
    GeneratedPuzzle puzzle = gen_puzzle(cfg);
    if (opt.unique) {
      SolverConfig scfg;
      scfg.solution_cap = 2;
      const CountOutcome counted = count_solutions(puzzle.instance, scfg);
      if (counted.count != 1 || !counted.exhausted) continue;
    }
    io.write(opt.output, serialize_instance(puzzle.instance, format));
    if (!opt.witness_output.empty()) {
      io.write(opt.witness_output, serialize_mask(puzzle.witness, format));
    }
    return kOk;
  }
  io.diag() << "no uniquely solvable puzzle within " << opt.max_attempts
            << " attempts\n";
  return kResourceLimit;
}

struct EquivOptions {
  std::size_t n = 6;
  std::size_t count = 50;
  std::size_t jobs = 1;
};

struct EquivRow {
  bool planted = false;
  bool satisfiable = false;
  SolveStatus status = SolveStatus::Unsolvable;
  std::exception_ptr failure;
};

int cmd_equiv(Io& io, const EquivOptions& opt, std::uint64_t seed) {
  if (opt.n < 3 || opt.n > kXsatOracleMaxVars) {
    io.error() << "equiv: n must be in [3, " << kXsatOracleMaxVars
               << "] (brute-force XSAT oracle bound)\n";
    return kBadInput;
  }
  if (opt.count == 0) {
    io.error() << "equiv: count must be at least 1\n";
    return kBadInput;
  }

  // Even indices are plain regular formulas; when n is a multiple of 3 odd
  // indices are planted (satisfiable) ones so both answers get exercised.
  auto formula = [&](std::size_t k, bool& planted) {
    const std::uint64_t s = stream_seed(seed, k);
    planted = opt.n % 3 == 0 && k % 2 == 1;
    return planted ? gen_xsat_planted(opt.n, s).instance
                   : gen_xsat_regular(opt.n, s);
  };

  std::vector<EquivRow> rows(opt.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < opt.count;) {
      EquivRow& row = rows[k];
      try {
        const XsatInstance phi = formula(k, row.planted);
        row.satisfiable = brute_force_xsat(phi).satisfiable;
        row.status = solve(reduce(phi)).status;
      } catch (...) {
        row.failure = std::current_exception();
      }
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(opt.jobs, 1, opt.count);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t sat = 0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const EquivRow& row = rows[k];
    if (row.failure) std::rethrow_exception(row.failure);
    io.out() << "instance " << k << (row.planted ? " planted" : " regular")
             << ": xsat=" << (row.satisfiable ? "sat" : "unsat")
             << " sumplete=" << to_string(row.status) << '\n';
    if (row.status == SolveStatus::ResourceLimit) return kResourceLimit;
    const bool solvable = row.status == SolveStatus::Solved;
    if (solvable != row.satisfiable) {
      bool planted = false;
      io.out() << "counterexample: instance " << k << '\n'
               << serialize_xsat(formula(k, planted), Format::Text);
      return kNegative;
    }
    sat += row.satisfiable ? 1 : 0;
  }
  io.out() << "agree " << rows.size() << "/" << rows.size() << " (sat " << sat
           << ", unsat " << rows.size() - sat << ")\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Sumplete puzzles and the XSAT reduction", "sumplete"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format_name = "json";
  std::uint64_t seed = 0;
  bool quiet = false;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "Seed for gen and equiv");
  app.add_flag("-q,--quiet", quiet, "Suppress diagnostics on standard error");

  std::string instance_path, mask_path, formula_path, assignment_path;
  bool strict_verify = false;

  auto* verify_cmd = app.add_subcommand("verify", "Check a mask against an instance");
  verify_cmd->add_option("instance", instance_path)->required();
  verify_cmd->add_option("mask", mask_path)->required();
  verify_cmd->add_flag("--strict", strict_verify, "Warn about values above 9");

  SolveOptions solve_opt;
  auto* solve_cmd = app.add_subcommand("solve", "Find a solution or count them");
  solve_cmd->add_option("instance", solve_opt.path)->required();
  solve_cmd->add_flag("--count", solve_opt.count, "Count solutions");
  solve_cmd->add_option("--limit", solve_opt.limit, "Node limit")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--cap", solve_opt.cap, "Solution cap for --count")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--stats", solve_opt.stats, "Print search statistics");
  solve_cmd->add_flag("--timing", solve_opt.timing,
                      "Measure elapsed time (output no longer reproducible)");
  solve_cmd->add_flag("--strict", solve_opt.strict, "Warn about values above 9");
  solve_cmd->add_option("--pruning", solve_opt.pruning)
      ->check(CLI::IsMember({"none", "interval", "reachability"}));

  ReduceOptions reduce_opt;
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a 3-CNF+3 formula to (1,3)-Sumplete");
  reduce_cmd->add_option("formula", reduce_opt.path)->required();
  reduce_cmd->add_option("-o,--output", reduce_opt.output, "Instance output path");
  reduce_cmd->add_option("--emit-witness", reduce_opt.witness,
                         "Assignment to map onto a mask");
  reduce_cmd->add_option("--mask-out", reduce_opt.mask_output,
                         "Mask output path (default: standard output)");

  auto* decode_cmd = app.add_subcommand("decode", "Map a solution mask back to an assignment");
  decode_cmd->add_option("formula", formula_path)->required();
  decode_cmd->add_option("mask", mask_path)->required();

  auto* xsat_cmd = app.add_subcommand("xsat-verify", "Check an assignment against a formula");
  xsat_cmd->add_option("formula", formula_path)->required();
  xsat_cmd->add_option("assignment", assignment_path)->required();

  GenOptions gen_opt;
  auto* gen_cmd = app.add_subcommand("gen", "Generate puzzles or formulas");
  gen_cmd->add_option("kind", gen_opt.kind)
      ->required()
      ->check(CLI::IsMember({"puzzle", "xsat", "planted"}));
  gen_cmd->add_option("--rows", gen_opt.rows);
  gen_cmd->add_option("--cols", gen_opt.cols);
  gen_cmd->add_option("--size", gen_opt.size, "ROWSxCOLS");
  gen_cmd->add_option("--alphabet", gen_opt.alphabet, "e.g. 1,3 or (1,3) or 1..9");
  gen_cmd->add_option("--keep-prob", gen_opt.keep_prob, "p/q or decimal");
  gen_cmd->add_option("--n", gen_opt.n, "Variables (xsat, planted)");
  gen_cmd->add_flag("--unique", gen_opt.unique, "Only emit uniquely solvable puzzles");
  gen_cmd->add_option("--max-attempts", gen_opt.max_attempts)
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("-o,--output", gen_opt.output);
  gen_cmd->add_option("--witness-out", gen_opt.witness_output);

  EquivOptions equiv_opt;
  auto* equiv_cmd = app.add_subcommand("equiv", "Check XSAT vs reduced-Sumplete answers");
  equiv_cmd->add_option("--n", equiv_opt.n)->required();
  equiv_cmd->add_option("--count", equiv_opt.count);
  equiv_cmd->add_option("--jobs", equiv_opt.jobs);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  Io io(in, out, err, quiet);
  const Format format = format_name == "text" ? Format::Text : Format::Json;
  try {
    if (verify_cmd->parsed()) return cmd_verify(io, instance_path, mask_path, strict_verify);
    if (solve_cmd->parsed()) return cmd_solve(io, solve_opt, format);
    if (reduce_cmd->parsed()) return cmd_reduce(io, reduce_opt, format);
    if (decode_cmd->parsed()) return cmd_decode(io, formula_path, mask_path, format);
    if (xsat_cmd->parsed()) return cmd_xsat_verify(io, formula_path, assignment_path);
    if (gen_cmd->parsed()) return cmd_gen(io, gen_opt, seed, format);
    if (equiv_cmd->parsed()) return cmd_equiv(io, equiv_opt, seed);
  } catch (const Error& e) {
    io.error() << "sumplete: " << e.what() << '\n';
    return e.kind() == ErrorKind::NotRegular ? kNotRegular : kBadInput;
  } catch (const std::exception& e) {
    io.error() << "sumplete: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace sumplete::cli
