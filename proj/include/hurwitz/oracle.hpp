#pragma once

#include "hurwitz/enumerate.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

#include <vector>

namespace hurwitz::oracle {

/// Permutation of {0..d-1} in one-line notation.
using Permutation = std::vector<int>;

/// Oracle caps: exhaustive search over S_d.
inline constexpr SearchLimits kDefaultLimits{6, 8};

/// Cycle type of a permutation as a partition.
Partition cycle_type(const Permutation& p);

/// True iff the group generated by `perms` has a single orbit on {0..d-1}.
bool is_transitive(const std::vector<Permutation>& perms, int degree);

/// Number of tuples (sigma0, tau_1..tau_r) with sigma0 of type lambda,
/// sigma0 * tau_1 * ... * tau_r of type mu, tau_i transpositions, and a
/// transitive generated group. This is the raw integer count.
BigInt count_monodromy_tuples(int genus, const Partition& lambda, const Partition& mu,
                              const SearchLimits& limits = kDefaultLimits);

/// count_monodromy_tuples / d!.
Rational monodromy_count(int genus, const Partition& lambda, const Partition& mu,
                         const SearchLimits& limits = kDefaultLimits);

}  // namespace hurwitz::oracle
