// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Thresholds are wall-clock and measured around the whole check.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "sumplete/error.hpp"
#include "sumplete/generator.hpp"
#include "sumplete/instance_io.hpp"
#include "sumplete/oracle.hpp"
#include "sumplete/reduction.hpp"
#include "sumplete/solver.hpp"
#include "sumplete/xsat_io.hpp"
#include "test_support.hpp"

using namespace sumplete;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void report(const char* id, const char* title, const Check& check, double seconds,
            double limit = 0) {
  Check c = check;
  if (limit > 0 && seconds >= limit) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "took %.2f s, limit %.0f s", seconds, limit);
    c.require(false, buf);
  }
  std::printf("[%s] %s %s (%.3f s)%s%s\n", c.ok ? "PASS" : "FAIL", id, title, seconds,
              c.ok ? "" : ": ", c.detail.c_str());
  std::fflush(stdout);
  if (!c.ok) ++failures;
}

template <typename Fn>
void criterion(const char* id, const char* title, double limit, Fn&& body) {
  Check check;
  const auto start = Clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  report(id, title, check, seconds, limit);
}

void ac1(Check& check) {
  const auto inst = parse_instance(test::read_fixture("puzzle5x5.json"), Format::Json);
  const auto mask = parse_mask(test::read_fixture("puzzle5x5_solution.json"), Format::Json);
  check.require(inst == test::puzzle5x5(), "fixture differs from the builder");
  check.require(verify(inst, mask), "fixture mask does not verify");
  const auto out = solve(inst);
  check.require(out.status == SolveStatus::Solved, "solver did not find a solution");
  check.require(out.witness && verify(inst, *out.witness), "witness does not verify");
}

void ac2(Check& check) {
  const auto text = serialize_instance(
      reduce(parse_xsat(test::read_fixture("formula6.xsat"), Format::Text)), Format::Json);
  check.require(text == test::read_fixture("reduced6.json"),
                "serialized reduction differs from fixture");
  const auto inst = parse_instance(text, Format::Json);
  check.require(inst.rows() == 7 && inst.cols() == 6, "shape is not 7x6");
  check.require(is_two_valued(inst, 1, 3), "values outside {1,3}");
  check.require(std::ranges::equal(inst.row_hints(), std::vector<Value>{1, 1, 1, 1, 1, 1, 12}), "row hints");
  check.require(std::ranges::equal(inst.col_hints(), std::vector<Value>(6, 3)), "column hints");
}

void ac3(Check& check) {
  const auto phi = test::formula6();
  const Assignment a{{false, true, false, true, false, false}};
  const Mask mask = assignment_to_mask(phi, a);
  check.require(verify(reduce(phi), mask), "mask does not verify");
  check.require(mask_to_assignment(phi, mask) == a, "round trip changed the assignment");
}

void ac4(Check& check) {
  std::size_t total = 0;
  std::size_t sat = 0;
  auto compare = [&](const XsatInstance& phi, const std::string& label) {
    check.require(is_regular(phi), label + " is not regular");
    const bool xsat = brute_force_xsat(phi).satisfiable;
    const auto out = solve(reduce(phi));
    check.require(out.status != SolveStatus::ResourceLimit, label + ": resource limit");
    check.require(xsat == (out.status == SolveStatus::Solved), label + ": disagreement");
    ++total;
    sat += xsat;
  };
  for (std::size_t n : {3U, 6U, 9U, 12U, 15U}) {
    for (std::uint64_t k = 0; k < 40; ++k) {
      const std::uint64_t seed = stream_seed(1000 + n, k);
      const std::string label = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      compare(k % 2 ? gen_xsat_planted(n, seed).instance : gen_xsat_regular(n, seed), label);
    }
  }
  for (std::size_t n : {4U, 5U}) {
    for (std::uint64_t k = 0; k < 20; ++k) {
      compare(gen_xsat_regular(n, stream_seed(2000 + n, k)),
              "n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    // Drop one clause: a shape that reduce must refuse.
    auto clauses = gen_xsat_regular(n, n).clauses();
    clauses.pop_back();
    bool rejected = false;
    try {
      reduce(XsatInstance(n, clauses));
    } catch (const Error& e) {
      rejected = e.kind() == ErrorKind::NotRegular;
    }
    check.require(rejected, "non-regular n=" + std::to_string(n) + " was not rejected");
  }
  check.require(total >= 200, "fewer than 200 instances");
  check.require(sat > 0 && sat < total, "only one answer class exercised");
}

void ac5(Check& check) {
  std::size_t solutions = 0;
  for (std::size_t n : {3U, 6U, 9U}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto phi = seed % 2 ? gen_xsat_planted(n, seed).instance
                                : gen_xsat_regular(n, seed);
      const auto inst = reduce(phi);
      const std::string label = "n=" + std::to_string(n) + " seed=" + std::to_string(seed);
      const auto counted = for_each_solution(inst, {}, [&](const Mask& m) {
        ++solutions;
        check.require(verify(inst, m), label + ": solution does not verify");
        Value total = 0;
        for (std::size_t i = 0; i < n; ++i) {
          std::size_t kept = 0;
          for (std::size_t j = 0; j < n; ++j) {
            if (!m.kept(i, j)) continue;
            ++kept;
            check.require(inst.at(i, j) == 1, label + ": kept a 3 in a clause row");
            total += inst.at(i, j);
          }
          check.require(kept == 1, label + ": clause row keeps " + std::to_string(kept));
        }
        for (std::size_t j = 0; j < n; ++j) {
          std::size_t ones = 0;
          for (std::size_t i = 0; i < n; ++i) ones += m.kept(i, j);
          check.require(ones == 0 || ones == 3, label + ": column keeps " +
                                                    std::to_string(ones) + " ones");
        }
        Value bottom = 0;
        for (std::size_t j = 0; j < n; ++j) bottom += m.kept(n, j) ? inst.at(n, j) : 0;
        check.require(bottom == static_cast<Value>(2 * n), label + ": bottom row sum");
        check.require(total + bottom == static_cast<Value>(3 * n), label + ": total sum");
      });
      check.require(counted.exhausted, label + ": enumeration not exhausted");
    }
  }
  check.require(solutions > 0, "no solutions enumerated");
}

void ac6(Check& check) {
  Rng rng(20240601);
  std::size_t solved = 0;
  for (int k = 0; k < 500; ++k) {
    Instance inst = test::random_small_instance(rng);
    if (k % 2) {
      // Planted half, so both answers are well represented.
      GenConfig cfg;
      cfg.seed = rng.next();
      cfg.rows = 1 + rng.below(4);
      cfg.cols = 1 + rng.below(4);
      inst = gen_puzzle(cfg).instance;
    }
    const std::string label = "instance " + std::to_string(k);
    const auto oracle = brute_force(inst);
    const auto out = solve(inst);
    check.require((out.status == SolveStatus::Solved) == (oracle.count > 0),
                  label + ": status");
    if (out.witness && oracle.first_witness) {
      check.require(*out.witness == *oracle.first_witness, label + ": first witness");
    }
    const auto counted = count_solutions(inst);
    check.require(counted.exhausted && counted.count == oracle.count, label + ": count");
    solved += oracle.count > 0;
  }
  check.require(solved > 0 && solved < 500, "only one answer class exercised");
}

void ac7(Check& check) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.rows = 1 + seed % 7;
    cfg.cols = 1 + (seed / 7) % 7;
    if (seed % 2) cfg.alphabet = GenConfig::ones_and_threes();
    const auto p = gen_puzzle(cfg);
    check.require(verify(p.instance, p.witness), "puzzle seed " + std::to_string(seed));
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    check.require(is_regular(gen_xsat_regular(3 + seed % 30, seed)),
                  "regular seed " + std::to_string(seed));
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto p = gen_xsat_planted(3 * (1 + seed % 6), seed);
    const std::string label = "planted seed " + std::to_string(seed);
    check.require(verify_assignment(p.instance, p.assignment), label + ": assignment");
    check.require(brute_force_xsat(p.instance).satisfiable, label + ": oracle");
  }
}

struct Captured {
  int code;
  std::string out;
  std::string err;
  std::vector<std::string> files;

  bool operator==(const Captured&) const = default;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void ac8(Check& check) {
  const fs::path dir = fs::temp_directory_path() / "sumplete_acceptance_ac8";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto tmp = [&](const char* name) { return (dir / name).string(); };
  const auto fix = [](const char* name) { return test::fixture_path(name); };

  const std::string all_keep = tmp("allkeep.json");
  std::ofstream(all_keep, std::ios::binary) << serialize_mask(Mask::all_kept(test::puzzle5x5()), Format::Json);

  struct Case {
    std::vector<std::string> args;
    std::string input;
    std::vector<std::string> outputs;
  };
  const std::vector<Case> cases = {
      {{"verify", fix("puzzle5x5.json"), fix("puzzle5x5_solution.json")}, {}, {}},
      {{"verify", fix("puzzle5x5.json"), all_keep}, {}, {}},
      {{"solve", "--stats", fix("puzzle5x5.json")}, {}, {}},
      {{"--format", "text", "solve", "--count", fix("reduced6.json")}, {}, {}},
      {{"solve", "-"}, "1 1\n3\n1\n1\n", {}},
      {{"reduce", fix("formula6.xsat"), "-o", tmp("r.json"), "--emit-witness",
        fix("formula6_assignment.txt"), "--mask-out", tmp("m.json")},
       {},
       {tmp("r.json"), tmp("m.json")}},
      {{"decode", fix("formula6.xsat"), fix("reduced6_solution.json")}, {}, {}},
      {{"xsat-verify", fix("formula6.xsat"), fix("formula6_assignment.txt")}, {}, {}},
      {{"--seed", "7", "gen", "puzzle", "--size", "5x5", "--alphabet", "1,3"}, {}, {}},
      {{"--seed", "7", "gen", "puzzle", "--size", "4x4", "--unique", "-o", tmp("u.json"),
        "--witness-out", tmp("uw.json")},
       {},
       {tmp("u.json"), tmp("uw.json")}},
      {{"--seed", "1", "gen", "xsat", "--n", "9"}, {}, {}},
      {{"--seed", "1", "--format", "text", "gen", "planted", "--n", "9", "-o", tmp("p.xsat"),
        "--witness-out", tmp("p.txt")},
       {},
       {tmp("p.xsat"), tmp("p.txt")}},
      {{"--seed", "5", "equiv", "--n", "6", "--count", "20", "--jobs", "4"}, {}, {}},
      {{"--seed", "5", "equiv", "--n", "5", "--count", "10"}, {}, {}},
      {{"equiv", "--n", "30"}, {}, {}},
  };

  for (const auto& c : cases) {
    auto once = [&] {
      for (const auto& f : c.outputs) fs::remove(f);
      std::vector<std::string> args = c.args;
      args.insert(args.begin(), "sumplete");
      std::istringstream in(c.input);
      std::ostringstream out, err;
      Captured cap{cli::run(args, in, out, err), out.str(), err.str(), {}};
      for (const auto& f : c.outputs) cap.files.push_back(slurp(f));
      return cap;
    };
    std::string label;
    for (const auto& a : c.args) label += (label.empty() ? "" : " ") + a;
    const Captured first = once();
    const Captured second = once();
    check.require(first == second, "output differs for: " + label);
    const bool wrote = std::any_of(first.files.begin(), first.files.end(),
                                   [](const std::string& f) { return !f.empty(); });
    check.require(!first.out.empty() || !first.err.empty() || wrote,
                  "no output for: " + label);
  }
  fs::remove_all(dir);
}

}  // namespace

int main() {
  criterion("AC1", "example puzzle verifies and solves", 1.0, ac1);
  criterion("AC2", "golden reduction is byte-identical", 0, ac2);
  criterion("AC3", "example witness round trip", 0, ac3);
  criterion("AC4", "XSAT vs reduced Sumplete equivalence", 60.0, ac4);
  criterion("AC5", "structure of all reduced solutions", 0, ac5);
  criterion("AC6", "solver agrees with brute-force oracle", 30.0, ac6);
  criterion("AC7", "generator soundness", 0, ac7);
  criterion("AC8", "CLI determinism", 0, ac8);
  std::printf("%s: %d failing criteria\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
