#pragma once

#include <map>
#include <vector>

#include "lb/multicomplex.hpp"
#include "lb/qlaurent.hpp"

namespace lb {

std::vector<int> grouping(const std::vector<int>& seq);
int r_of_partition(const std::vector<int>& lam);
std::vector<int> g_of_partition(const std::vector<int>& lam);
int eps_of(int j);
std::vector<int> eps_of_partition(const std::vector<int>& lam);

// Partitions with b parts and largest part <= k, in lexicographic order.
std::vector<std::vector<int>> partitions_Tk(int b, int k);

// omega on the edge lam^[j,j+1] in direction i: H(lam^j) - H(lam^{j+1}).
int omega(const Params& p, const std::vector<int>& lam, int i, int j);
// The V-level part of zeta (phi, psi or chi phi) and the full defining word.
Word zeta_core(const std::vector<int>& lam, int i, int j);
Word zeta_word(const Params& p, const std::vector<int>& lam, int i, int j);

std::map<std::vector<int>, int> integrate_H(const Params& p, int k);
// Closed form for H(k^r 0^{b-r}).
long H_corner(const Params& p, int k, int r);

MultiComplex build_P(const Params& p, int k);

// Sum over objects of the quantum multinomial of the grouping at q = 1.
Int object_count(const MultiComplex& P);

CheckResult check_P_corners(const Params& p, int k);
CheckResult check_P_factorization(const MultiComplex& P);
CheckResult check_P_annihilation(const MultiComplex& P);
CheckResult check_P_minimality(const MultiComplex& P, const EdgeMatrices& em);
CheckResult check_P_counts(const MultiComplex& P);
// Words (and, when with_matrices, matrices) of every U_{k,r} component against
// the F^{k-1} complex of (a+r, b-r, c, d).
CheckResult check_P_splitting(const MultiComplex& P, bool with_matrices);

}  // namespace lb
