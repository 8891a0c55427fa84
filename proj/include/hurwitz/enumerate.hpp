#pragma once

#include "hurwitz/cover.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

#include <functional>
#include <vector>

namespace hurwitz {

/// Guards for exhaustive searches. Exceeding a cap raises CapExceeded.
struct SearchLimits {
    int max_degree = 12;
    int max_branch_points = 16;
};

/// Throws CapExceeded when degree or r exceed the limits.
void check_limits(const Partition& lambda, const Partition& mu, int genus, const SearchLimits& limits);

enum class SweepFilter {
    All,         ///< every tropical cover
    ZigzagOnly,  ///< prune partial sweeps that cannot end in a zigzag cover
};

/// Streams one representative per isomorphism class of tropical covers of genus g,
/// type (lambda, mu), built as event sequences (one JOIN or SPLIT per branch point).
/// The visiting order is the search order, not the canonical order.
void for_each_cover(int genus, const Partition& lambda, const Partition& mu,
                    const std::function<void(const TropicalCover&)>& visit,
                    SweepFilter filter = SweepFilter::All, const SearchLimits& limits = {});

/// All isomorphism classes, deduplicated by canonical encoding and sorted by it.
/// Requires |lambda| = |mu| and r >= 1.
std::vector<TropicalCover> enumerate_covers(int genus, const Partition& lambda, const Partition& mu,
                                            const SearchLimits& limits = {});

/// Only the zigzag covers, same order as enumerate_covers. Requires an admissible type.
std::vector<TropicalCover> enumerate_zigzag_covers(int genus, const Partition& lambda,
                                                   const Partition& mu, const SearchLimits& limits = {});

/// Sum of complex multiplicities over all tropical covers. Evaluated by a memoized
/// sweep over abstract active-edge states; equals the sum over enumerate_covers.
Rational hurwitz_complex(int genus, const Partition& lambda, const Partition& mu,
                         const SearchLimits& limits = {});

/// Same sum, computed by materializing every cover.
Rational hurwitz_complex_by_enumeration(int genus, const Partition& lambda, const Partition& mu,
                                        const SearchLimits& limits = {});

/// Number of zigzag covers by the memoized sweep. Requires an admissible type.
BigInt count_zigzag_covers(int genus, const Partition& lambda, const Partition& mu,
                           const SearchLimits& limits = {});

}  // namespace hurwitz
