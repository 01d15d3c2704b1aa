#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lb/multicomplex.hpp"

namespace lb {

int r_of_eps(const std::vector<int>& eps);

// upsilon on the edge eps^[j,j+1] in direction i (1-based): G(eps^j) - G(eps^{j+1}).
int upsilon(const Params& p, const std::vector<int>& eps, int i, int j);

// alpha (descending) and beta* (ascending) built from eps_{i+1..b}.
std::pair<Word, Word> edge_strings(const std::vector<int>& eps, int i);
Word hat(const Word& w);

// phi, psi or chi for the edge eps^[j,j+1] in direction i (eps_i is ignored).
Word component_word(const std::vector<int>& eps, int i, int j);

std::map<std::vector<int>, int> integrate_G(const Params& p);
// (G(eps) + G(eps*)) / 2 predicted by the closed form.
long G_closed_form(const Params& p);

MultiComplex build_K(const Params& p);

CheckResult check_K_adjoint(const MultiComplex& k);
CheckResult check_K_closed_form(const MultiComplex& k);
// Q_r-vanishing: Z_{(r-1)r} after every psi component is zero.
CheckResult check_K_psi_vanishing(const MultiComplex& k);

}  // namespace lb
