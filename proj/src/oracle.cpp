#include "hurwitz/oracle.hpp"

#include "hurwitz/errors.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace hurwitz::oracle {

Partition cycle_type(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> lengths;
    for (std::size_t start = 0; start < p.size(); ++start) {
        if (seen[start]) continue;
        int length = 0;
        for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(p[x])) {
            seen[x] = true;
            ++length;
        }
        lengths.push_back(length);
    }
    return Partition(std::move(lengths));
}

bool is_transitive(const std::vector<Permutation>& perms, int degree) {
    if (degree <= 1) return true;
    std::vector<bool> reached(static_cast<std::size_t>(degree), false);
    std::vector<int> frontier{0};
    reached[0] = true;
    int count = 1;
    while (!frontier.empty()) {
        const int x = frontier.back();
        frontier.pop_back();
        for (const auto& p : perms) {
            const int y = p[static_cast<std::size_t>(x)];
            if (!reached[static_cast<std::size_t>(y)]) {
                reached[static_cast<std::size_t>(y)] = true;
                ++count;
                frontier.push_back(y);
            }
        }
    }
    return count == degree;
}

namespace {

// Depth-first count over transposition sequences. The state after k steps is
// the partial product together with the orbit partition of the group
// generated so far; identical states are memoized.
class TupleCounter {
public:
    TupleCounter(int degree, Partition target) : degree_(degree), target_(std::move(target)) {
        for (int i = 0; i < degree; ++i) {
            for (int j = i + 1; j < degree; ++j) transpositions_.emplace_back(i, j);
        }
    }

    BigInt count(int remaining, Permutation product, std::vector<int> orbit) {
        normalize(orbit);
        return search(remaining, product, orbit);
    }

private:
    static void normalize(std::vector<int>& orbit) {
        // Relabel blocks in order of first appearance.
        std::vector<int> relabel(orbit.size(), -1);
        int next = 0;
        for (int& b : orbit) {
            auto& slot = relabel[static_cast<std::size_t>(b)];
            if (slot < 0) slot = next++;
            b = slot;
        }
    }

    std::uint64_t encode(int remaining, const Permutation& p, const std::vector<int>& orbit) const {
        std::uint64_t key = static_cast<std::uint64_t>(remaining);
        for (int x : p) key = key * static_cast<std::uint64_t>(degree_) + static_cast<std::uint64_t>(x);
        for (int b : orbit) key = key * static_cast<std::uint64_t>(degree_) + static_cast<std::uint64_t>(b);
        return key;
    }

    BigInt search(int remaining, Permutation& product, std::vector<int>& orbit) {
        const int cycles = cycle_type(product).length();
        const int needed = target_.length();
        if (std::abs(cycles - needed) > remaining || (remaining - std::abs(cycles - needed)) % 2 != 0) {
            return 0;
        }
        if (remaining == 0) {
            const bool single = std::all_of(orbit.begin(), orbit.end(), [](int b) { return b == 0; });
            return (single && cycle_type(product) == target_) ? 1 : 0;
        }
        const std::uint64_t key = encode(remaining, product, orbit);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        BigInt total = 0;
        for (const auto& [i, j] : transpositions_) {
            // Right multiplication by (i j) swaps two entries of the one-line form.
            std::swap(product[static_cast<std::size_t>(i)], product[static_cast<std::size_t>(j)]);
            std::vector<int> merged = orbit;
            const int from = merged[static_cast<std::size_t>(j)];
            const int to = merged[static_cast<std::size_t>(i)];
            if (from != to) {
                for (int& b : merged) {
                    if (b == from) b = to;
                }
                normalize(merged);
            }
            total += search(remaining - 1, product, merged);
            std::swap(product[static_cast<std::size_t>(i)], product[static_cast<std::size_t>(j)]);
        }
        memo_.emplace(key, total);
        return total;
    }

    int degree_;
    Partition target_;
    std::vector<std::pair<int, int>> transpositions_;
    std::unordered_map<std::uint64_t, BigInt> memo_;
};

}  // namespace

BigInt count_monodromy_tuples(int genus, const Partition& lambda, const Partition& mu,
                              const SearchLimits& limits) {
    if (genus < 0) throw Error("genus must be non-negative");
    const int r = simple_branch_count(lambda, mu, genus);
    if (r < 0) throw Error("negative number of branch points");
    check_limits(lambda, mu, genus, limits);
    const int d = lambda.weight();

    TupleCounter counter(d, mu);
    BigInt total = 0;
    Permutation sigma(static_cast<std::size_t>(d));
    std::iota(sigma.begin(), sigma.end(), 0);
    // Every element of the conjugacy class of lambda serves as sigma0.
    do {
        if (cycle_type(sigma) != lambda) continue;
        std::vector<int> orbit(static_cast<std::size_t>(d), -1);
        int block = 0;
        for (int start = 0; start < d; ++start) {
            if (orbit[static_cast<std::size_t>(start)] >= 0) continue;
            for (int x = start; orbit[static_cast<std::size_t>(x)] < 0; x = sigma[static_cast<std::size_t>(x)]) {
                orbit[static_cast<std::size_t>(x)] = block;
            }
            ++block;
        }
        total += counter.count(r, sigma, orbit);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

Rational monodromy_count(int genus, const Partition& lambda, const Partition& mu, const SearchLimits& limits) {
    return Rational(count_monodromy_tuples(genus, lambda, mu, limits), factorial(lambda.weight()));
}

}  // namespace hurwitz::oracle
