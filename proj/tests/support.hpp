#pragma once

#include "hurwitz/enumerate.hpp"

#include <doctest.h>

#include <functional>
#include <string>
#include <vector>

namespace test_support {

using namespace hurwitz;

inline TropicalCover cover_with_encoding(int g, const Partition& l, const Partition& m, const std::string& code) {
    for (const auto& c : enumerate_covers(g, l, m)) {
        if (c.encoding() == code) return c;
    }
    FAIL("no cover with encoding " << code);
    return {};
}

/// Calls visit(g, lambda, mu) for every type with degree <= max_d and 1 <= r <= max_r.
inline void for_each_type(int max_d, int max_r, const std::function<void(int, const Partition&, const Partition&)>& visit,
                          int max_g = 1000) {
    for (int d = 1; d <= max_d; ++d) {
        for (const auto& l : partitions_of(d)) {
            for (const auto& m : partitions_of(d)) {
                for (int g = 0; g <= max_g; ++g) {
                    const int r = simple_branch_count(l, m, g);
                    if (r > max_r) break;
                    if (r >= 1) visit(g, l, m);
                }
            }
        }
    }
}

}  // namespace test_support
