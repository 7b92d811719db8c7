#include "sumplete/xsat.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "sumplete/error.hpp"

namespace sumplete {

XsatInstance::XsatInstance(std::size_t n_vars, std::vector<Clause> clauses)
    : n_vars_(n_vars), clauses_(std::move(clauses)) {
  if (n_vars_ == 0) {
    throw Error(ErrorKind::Invariant, "n_vars", "need at least one variable");
  }
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    auto& clause = clauses_[i];
    const std::string where = "clause " + std::to_string(i + 1);
    for (auto v : clause) {
      if (v >= n_vars_) {
        throw Error(ErrorKind::Invariant, where,
                    "variable " + std::to_string(std::uint64_t{v} + 1) +
                        " outside 1.." + std::to_string(n_vars_));
      }
    }
    std::sort(clause.begin(), clause.end());
    if (clause[0] == clause[1] || clause[1] == clause[2]) {
      throw Error(ErrorKind::Invariant, where,
                  "clause must contain three distinct variables");
    }
  }
}

std::vector<std::size_t> occurrences(const XsatInstance& phi) {
  std::vector<std::size_t> count(phi.n_vars(), 0);
  for (const auto& clause : phi.clauses()) {
    for (auto v : clause) ++count[v];
  }
  return count;
}

bool is_regular(const XsatInstance& phi) {
  if (phi.clauses().size() != phi.n_vars()) return false;
  const auto count = occurrences(phi);
  return std::all_of(count.begin(), count.end(),
                     [](std::size_t k) { return k == 3; });
}

bool verify_assignment(const XsatInstance& phi, const Assignment& a) {
  if (a.values.size() != phi.n_vars()) {
    throw Error(ErrorKind::DimensionMismatch, "assignment",
                "assignment has " + std::to_string(a.values.size()) +
                    " values but formula has " + std::to_string(phi.n_vars()) +
                    " variables");
  }
  return std::all_of(phi.clauses().begin(), phi.clauses().end(),
                     [&](const Clause& clause) {
                       int true_count = 0;
                       for (auto v : clause) true_count += a.values[v] ? 1 : 0;
                       return true_count == 1;
                     });
}

XsatOracleResult brute_force_xsat(
    const XsatInstance& phi,
    const std::function<void(const Assignment&)>& on_solution) {
  const std::size_t n = phi.n_vars();
  if (n > kXsatOracleMaxVars) {
    throw Error(ErrorKind::Capacity, "n_vars",
                "XSAT oracle handles at most " +
                    std::to_string(kXsatOracleMaxVars) + " variables");
  }
  std::vector<std::uint32_t> clause_bits;
  clause_bits.reserve(phi.clauses().size());
  for (const auto& clause : phi.clauses()) {
    clause_bits.push_back((1U << clause[0]) | (1U << clause[1]) |
                          (1U << clause[2]));
  }
  auto decode = [n](std::uint32_t bits) {
    Assignment a;
    a.values.resize(n);
    for (std::size_t j = 0; j < n; ++j) a.values[j] = (bits >> j) & 1U;
    return a;
  };

  XsatOracleResult result;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t raw = 0; raw < total; ++raw) {
    const auto bits = static_cast<std::uint32_t>(raw);
    const bool ok = std::all_of(
        clause_bits.begin(), clause_bits.end(),
        [bits](std::uint32_t c) { return std::popcount(bits & c) == 1; });
    if (!ok) continue;
    ++result.count;
    if (!result.witness) result.witness = decode(bits);
    if (on_solution) on_solution(decode(bits));
  }
  result.satisfiable = result.count > 0;
  return result;
}

}  // namespace sumplete
