#pragma once

#include "hurwitz/cover.hpp"
#include "hurwitz/enumerate.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hurwitz {

/// True iff the red'' reduction (odd symmetric cycles and forks collapsed)
/// has no even inner edge. Throws ExcludedConfiguration for excluded types.
bool is_zigzag(const TropicalCover& c);

/// Independent check: the odd edges outside odd symmetric pairs form one
/// string S (or S is a single vertex with three even edges) and every
/// component of C \ S is an admissible tail.
bool is_zigzag_structural(const TropicalCover& c);

struct ZigzagStats {
    int a_l = 0;  ///< tails ending in an odd fork of (-inf)-leaves
    int a_r = 0;  ///< tails ending in an odd fork of (+inf)-leaves
    int b_l = 0;  ///< bends of S with the peak pointing left
    int b_r = 0;  ///< bends of S with the peak pointing right
    int c = 0;    ///< unbent vertices of S
    int g_l = 0;  ///< symmetric cycles on tails to the left
    int g_r = 0;  ///< symmetric cycles on tails to the right

    friend bool operator==(const ZigzagStats&, const ZigzagStats&) = default;
};

/// Throws HypothesisViolated when c is not a zigzag cover.
ZigzagStats zigzag_stats(const TropicalCover& c);

/// a_l! * a_r! * b_l! * b_r!.
BigInt unmixed_ordering_count(const ZigzagStats& stats);

/// Z_g(lambda, mu) by the memoized sweep.
BigInt zigzag_number(int genus, const Partition& lambda, const Partition& mu, const SearchLimits& limits = {});

/// Z_g(lambda, mu) by filtering enumerate_covers with is_zigzag.
BigInt zigzag_number_by_enumeration(int genus, const Partition& lambda, const Partition& mu,
                                    const SearchLimits& limits = {});

/// The closed-form existence criterion in terms of tail decompositions.
/// Pure partition arithmetic: defined for excluded types too.
bool zigzag_exists(int genus, const Partition& lambda, const Partition& mu);

/// True iff l(lambda_0, mu_0) <= 2 and (lambda_oo, mu_oo) is non-empty.
bool sufficient_condition(const Partition& lambda, const Partition& mu);

/// Domain of lower_bound: the sufficient condition, or g = 0 with
/// l(lambda_0, mu_0) = 2 (the string needs no tail to carry cycles).
bool lower_bound_applies(int genus, const Partition& lambda, const Partition& mu);

/// Maximal number of sign changes of a walk starting at k that adds every
/// part of `plus` and subtracts every part of `mu` exactly once.
/// Requires k odd and all parts even (so the walk never hits 0).
int bends(long k, const Partition& plus, const Partition& minus);

struct LowerBoundDetail {
    BigInt value;
    int which = 0;         ///< 1, 2 or 3
    long k = 0;            ///< start of the walk
    int bends = 0;
    bool swapped = false;  ///< obtained from the (mu, lambda) orientation
};

/// Every applicable case, for all k and both orientations.
std::vector<LowerBoundDetail> lower_bound_candidates(int genus, const Partition& lambda, const Partition& mu);

/// The best candidate. Throws HypothesisViolated outside lower_bound_applies.
LowerBoundDetail lower_bound_detail(int genus, const Partition& lambda, const Partition& mu);
BigInt lower_bound(int genus, const Partition& lambda, const Partition& mu);

/// A zigzag cover of the given type built from a string with tails.
/// Throws HypothesisViolated unless sufficient_condition holds.
TropicalCover construct_zigzag_witness(int genus, const Partition& lambda, const Partition& mu);

}  // namespace hurwitz
