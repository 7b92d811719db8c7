#include "sumplete/reduction.hpp"

#include <string>

#include "sumplete/error.hpp"

namespace sumplete {

namespace {

void require_regular(const XsatInstance& phi) {
  if (!is_regular(phi)) {
    throw Error(ErrorKind::NotRegular, "",
                "reduction needs m == n with every variable in exactly three "
                "clauses (n=" + std::to_string(phi.n_vars()) +
                    ", m=" + std::to_string(phi.clauses().size()) + ")");
  }
}

}  // namespace

Instance reduce(const XsatInstance& phi) {
  require_regular(phi);
  const std::size_t n = phi.n_vars();
  std::vector<Value> grid((n + 1) * n, 3);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto v : phi.clauses()[i]) grid[i * n + v] = 1;
  }
  std::vector<Value> row_hints(n + 1, 1);
  row_hints[n] = static_cast<Value>(2 * n);
  std::vector<Value> col_hints(n, 3);
  return Instance(n + 1, n, std::move(grid), std::move(row_hints),
                  std::move(col_hints));
}

Mask assignment_to_mask(const XsatInstance& phi, const Assignment& a) {
  require_regular(phi);
  const std::size_t n = phi.n_vars();
  if (a.values.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "assignment",
                "assignment has " + std::to_string(a.values.size()) +
                    " values but formula has " + std::to_string(n) +
                    " variables");
  }
  Mask mask(n + 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto v : phi.clauses()[i]) mask.set(i, v, a.values[v]);
  }
  for (std::size_t j = 0; j < n; ++j) mask.set(n, j, !a.values[j]);
  return mask;
}

Assignment mask_to_assignment(const XsatInstance& phi, const Mask& mask) {
  const Instance inst = reduce(phi);
  if (!verify(inst, mask)) {
    throw Error(ErrorKind::Precondition, "mask",
                "mask is not a solution of the reduced instance");
  }
  const std::size_t n = phi.n_vars();
  Assignment a;
  a.values.assign(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (inst.at(i, j) == 1 && mask.kept(i, j)) a.values[j] = true;
    }
  }
  return a;
}

}  // namespace sumplete
