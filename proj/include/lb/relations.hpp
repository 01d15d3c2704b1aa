#pragma once

#include "lb/multicomplex.hpp"

namespace lb {

// Nil-Hecke relations (including far commutativity and the twisted Leibniz rule)
// on every V_r, for the indices that act there.
CheckResult check_nilhecke_relations(const Params& p);
// s_i s_{i+1} d_i = d_{i+1} s_i s_{i+1} and its two companions.
CheckResult check_mixed_braid(const Params& p);
// Self-adjointness of the generators, Q_t and Z commutation rules, Q_t = 0 for t > r,
// and Z_{r(r+1)} s_r Z_{(r+1)r} = Z_{r(r-1)} s_r Z_{(r-1)r}.
CheckResult check_qz_relations(const Params& p);
// d_{t-1} Q_t = Q_{t-1} s_{t-1} + Q_t d_{t-1}.
CheckResult check_dq_relation(const Params& p);
// The same identity with s_t in place of s_{t-1}: counts where it is defined and where it fails.
CheckResult check_dq_relation_shifted(const Params& p);
// pi p iota = Id on every W^g_r, and iota pi p is idempotent.
CheckResult check_projectors(const Params& p);

CheckResult check_all_relations(const Params& p);

}  // namespace lb
