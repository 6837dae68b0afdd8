#pragma once

#include "thetasym/symbols.hpp"

#include <vector>

namespace thetasym {

/// Weakly decreasing non-negative integers, as drawn from a symbol's two
/// rows merged.
class EntrySequence {
public:
    EntrySequence() = default;
    explicit EntrySequence(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    int sum() const;
    /// Rank of any symbol carrying these entries: sum - floor((m-1)^2/4).
    int rank() const;

private:
    std::vector<int> entries_;
};

/// Order of an entry sequence (the closed form): with m entries z_1 >= ...
/// >= z_m and n the rank,
///   sum (m-i) z_i - sum z_i(z_i+1)
///     + n(n+1) - (m-1)(m-3)(2m-1)/24   (m odd)
///     + n^2    - m(m-2)(2m-5)/24       (m even).
int ord_entries(const EntrySequence& z);

/// ord(s): the degree of the dimension polynomial of the character the
/// symbol labels.  Depends only on the merged entry multiset.
int ord_closed(const Symbol& s);

/// Degrees of the individual factors of the dimension polynomial.
/// total = deg_group_order + deg_delta_A + deg_delta_B + deg_pi
///         - deg_theta_A - deg_theta_B - deg_q_power.
/// c is the exponent of the 2-power denominator; it never contributes to
/// the degree and is excluded from total.
struct DegreeBreakdown {
    int deg_delta_A = 0;
    int deg_delta_B = 0;
    int deg_theta_A = 0;
    int deg_theta_B = 0;
    int deg_pi = 0;
    int deg_group_order = 0;
    int deg_q_power = 0;
    int total = 0;
    int c = 0;
};

/// Evaluates every factor degree independently of ord_entries; the total
/// must agree with ord_closed.
DegreeBreakdown ord_oracle(const Symbol& s);

/// Exact ord change when entry k gains a box and entry l loses one
/// (1-based, k < l; monotonicity must survive where neighbours exist:
/// z_{k-1} >= z_k + 1 for k > 1 and z_l - 1 >= z_{l+1} for l < m).
/// Negative whenever z comes from a symbol (no entry repeats thrice).
int entry_move_ord_delta(const EntrySequence& z, int k, int l);

} // namespace thetasym
