#pragma once

#include "sumplete/instance.hpp"
#include "sumplete/xsat.hpp"

namespace sumplete {

/// Builds the (n+1) x n (1,3)-Sumplete instance of a regular formula.
///
/// Row i < n stands for clause i: a cell holds 1 where the column's variable
/// occurs in the clause and 3 elsewhere, with row hint 1. The last row is all
/// 3s with hint 2n, and every column hint is 3. A row-1 hint forces exactly
/// one kept 1 per clause row (one true literal per clause); a column hint of
/// 3 forces a column's 1s to be kept all together or not at all, with the
/// bottom 3 kept exactly when they are not.
///
/// Throws ErrorKind::NotRegular unless is_regular(phi).
Instance reduce(const XsatInstance& phi);

/// Solution mask of reduce(phi) induced by an assignment: in clause rows a
/// 1 is kept iff its variable is true; in the last row column j is kept iff
/// x_j is false. The result verifies iff `a` satisfies phi.
Mask assignment_to_mask(const XsatInstance& phi, const Assignment& a);

/// Reads an assignment back from a solution of reduce(phi): x_j is true iff
/// some value-1 cell of column j in the clause rows is kept. Masks that do
/// not solve reduce(phi) are rejected with ErrorKind::Precondition.
Assignment mask_to_assignment(const XsatInstance& phi, const Mask& mask);

}  // namespace sumplete
