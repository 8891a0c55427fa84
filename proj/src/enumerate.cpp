#include "hurwitz/enumerate.hpp"

#include "hurwitz/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <type_traits>
#include <unordered_map>

namespace hurwitz {

void check_limits(const Partition& lambda, const Partition& mu, int genus, const SearchLimits& limits) {
    const int r = simple_branch_count(lambda, mu, genus);
    if (lambda.weight() > limits.max_degree) {
        throw CapExceeded("degree " + std::to_string(lambda.weight()) + " exceeds --max-degree " +
                          std::to_string(limits.max_degree));
    }
    if (r > limits.max_branch_points) {
        throw CapExceeded("r = " + std::to_string(r) + " exceeds --max-branch-points " +
                          std::to_string(limits.max_branch_points));
    }
}

namespace {

// Zigzag bookkeeping for even edges and odd sibling pairs.
//  kAnchored: collapsing odd symmetric pairs would merge the edge into a (-inf)-leaf.
//  kObliged: the edge sits on a chain that must collapse into a (+inf)-leaf.
enum Flag : std::uint8_t { kPlain = 0, kAnchored = 1, kObliged = 2 };

void require_enumerable(int genus, const Partition& lambda, const Partition& mu) {
    if (genus < 0) throw Error("genus must be non-negative");
    if (simple_branch_count(lambda, mu, genus) <= 0) {
        throw ExcludedConfiguration("excluded configuration: r <= 0");
    }
}

// ---------------------------------------------------------------------------
// Materializing sweep.

struct Active {
    int source = kMinusInfinity;
    int weight = 0;
    int comp = 0;
    Flag flag = kPlain;
};

class CoverSweep {
public:
    CoverSweep(int genus, const Partition& lambda, const Partition& mu, SweepFilter filter,
               const std::function<void(const TropicalCover&)>& visit)
        : genus_(genus), mu_(mu), zigzag_(filter == SweepFilter::ZigzagOnly), visit_(visit) {
        r_ = simple_branch_count(lambda, mu, genus);
        int comp = 0;
        for (int w : lambda) active_.push_back({kMinusInfinity, w, comp++, kPlain});
        components_ = comp;
    }

    void run() { step(0); }

private:
    static bool siblings(const Active& a, const Active& b) {
        return a.source == b.source && a.weight == b.weight;
    }
    static bool anchored(const Active& a) { return a.source == kMinusInfinity || a.flag == kAnchored; }

    // Zigzag admissibility of consuming `a` at the current vertex.
    bool may_consume(const Active& a, bool split_into_odd_pair, const Active* join_partner) const {
        if (!zigzag_) return true;
        if (a.weight % 2 == 0 && !anchored(a)) return split_into_odd_pair;
        if (a.weight % 2 == 1 && a.flag == kObliged) {
            return join_partner != nullptr && siblings(a, *join_partner) && a.source != kMinusInfinity;
        }
        return true;
    }

    bool feasible(int vertex) const {
        const int k = r_ - vertex;
        const int n = static_cast<int>(active_.size());
        const int target = mu_.length();
        if (std::abs(n - target) > k || (k + target - n) % 2 != 0) return false;
        const int joins_left = (k + n - target) / 2;
        return components_ - 1 <= joins_left;
    }

    // Indices of one representative per class of interchangeable active edges.
    std::vector<std::size_t> class_representatives() const {
        std::vector<std::size_t> reps;
        for (std::size_t i = 0; i < active_.size(); ++i) {
            bool seen = false;
            for (std::size_t j : reps) {
                if (siblings(active_[i], active_[j])) { seen = true; break; }
            }
            if (!seen) reps.push_back(i);
        }
        return reps;
    }

    std::size_t second_member(std::size_t i) const {
        for (std::size_t j = 0; j < active_.size(); ++j) {
            if (j != i && siblings(active_[i], active_[j])) return j;
        }
        return active_.size();
    }

    void finish() {
        if (components_ != 1) return;
        std::vector<int> weights;
        for (const Active& a : active_) weights.push_back(a.weight);
        if (Partition(weights) != mu_) return;
        std::vector<Edge> edges = done_;
        for (const Active& a : active_) edges.push_back({a.source, kPlusInfinity, a.weight});
        visit_(TropicalCover(genus_, r_, std::move(edges)));
    }

    void step(int vertex) {
        if (vertex == r_) {
            finish();
            return;
        }
        if (!feasible(vertex)) return;
        const auto reps = class_representatives();

        // SPLIT w -> {b, w-b}
        for (std::size_t ri : reps) {
            const Active a = active_[ri];
            for (int b = 1; 2 * b <= a.weight; ++b) {
                const int c = a.weight - b;
                const bool odd_pair = (b == c) && (b % 2 == 1);
                if (!may_consume(a, odd_pair, nullptr)) continue;
                Flag child = kPlain;
                if (odd_pair) child = anchored(a) ? kAnchored : kObliged;
                const auto saved = active_;
                const auto saved_done = done_.size();
                done_.push_back({a.source, vertex, a.weight});
                active_.erase(active_.begin() + static_cast<std::ptrdiff_t>(ri));
                active_.push_back({vertex, b, a.comp, child});
                active_.push_back({vertex, c, a.comp, child});
                step(vertex + 1);
                active_ = saved;
                done_.resize(saved_done);
            }
        }

        // JOIN a + b
        for (std::size_t x = 0; x < reps.size(); ++x) {
            for (std::size_t y = x; y < reps.size(); ++y) {
                const std::size_t i = reps[x];
                const std::size_t j = (x == y) ? second_member(i) : reps[y];
                if (j >= active_.size()) continue;
                const Active a = active_[i];
                const Active b = active_[j];
                if (!may_consume(a, false, &b) || !may_consume(b, false, &a)) continue;
                Flag out = kPlain;
                if (siblings(a, b) && a.weight % 2 == 1) {
                    out = a.source == kMinusInfinity ? kAnchored : a.flag;
                }
                const auto saved = active_;
                const int saved_components = components_;
                const auto saved_done = done_.size();
                done_.push_back({a.source, vertex, a.weight});
                done_.push_back({b.source, vertex, b.weight});
                const std::size_t hi = std::max(i, j), lo = std::min(i, j);
                active_.erase(active_.begin() + static_cast<std::ptrdiff_t>(hi));
                active_.erase(active_.begin() + static_cast<std::ptrdiff_t>(lo));
                if (a.comp != b.comp) {
                    for (Active& e : active_) {
                        if (e.comp == b.comp) e.comp = a.comp;
                    }
                    --components_;
                }
                active_.push_back({vertex, a.weight + b.weight, a.comp, out});
                step(vertex + 1);
                active_ = saved;
                components_ = saved_components;
                done_.resize(saved_done);
            }
        }
    }

    int genus_;
    int r_ = 0;
    Partition mu_;
    bool zigzag_;
    const std::function<void(const TropicalCover&)>& visit_;
    std::vector<Active> active_;
    std::vector<Edge> done_;
    int components_ = 0;
};

// ---------------------------------------------------------------------------
// Memoized aggregate sweep. Active edges are abstracted to items:
//   Leaf(w)   untouched (-inf)-leaf, interchangeable with all leaves of weight w
//   Single(w) inner-sourced edge with no equal-weight sibling still active
//   Pair(w)   two active siblings of equal weight
// grouped into connected components.

enum Kind : int { kLeaf = 0, kSingle = 1, kPair = 2 };

constexpr int code(int weight, Kind kind, Flag flag) { return weight * 16 + kind * 4 + flag; }
constexpr int weight_of(int c) { return c / 16; }
constexpr Kind kind_of(int c) { return static_cast<Kind>((c / 4) % 4); }
constexpr Flag flag_of(int c) { return static_cast<Flag>(c % 4); }

using State = std::vector<std::vector<int>>;

struct KeyHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

template <typename Value>
class AggregateSweep {
public:
    AggregateSweep(const Partition& lambda, const Partition& mu, int r, bool zigzag)
        : mu_(mu), r_(r), zigzag_(zigzag) {
        for (int w : lambda) initial_.push_back({code(w, kLeaf, kPlain)});
        canonicalize(initial_);
    }

    Value run() { return solve(r_, initial_); }

private:
    struct Handle {
        std::size_t comp;
        std::size_t item;
    };

    static void canonicalize(State& s) {
        for (auto& comp : s) std::sort(comp.begin(), comp.end());
        std::sort(s.begin(), s.end());
    }

    static bool anchored(int item) {
        return kind_of(item) == kLeaf || (kind_of(item) == kSingle && flag_of(item) == kAnchored);
    }

    // Zigzag admissibility of consuming one edge of `item`.
    bool may_consume(int item, bool split_into_odd_pair, bool closes_pair) const {
        if (!zigzag_) return true;
        const int w = weight_of(item);
        if (w % 2 == 0 && !anchored(item)) return split_into_odd_pair;
        if (kind_of(item) == kPair && flag_of(item) == kObliged) return closes_pair;
        return true;
    }

    // State with one edge of `h` consumed; `h` itself is left in place for pairs.
    static void consume(State& s, const Handle& h) {
        int& item = s[h.comp][h.item];
        if (kind_of(item) == kPair) {
            item = code(weight_of(item), kSingle, kPlain);
        } else {
            item = -1;
        }
    }

    static void drop_consumed(State& s) {
        for (auto& comp : s) std::erase(comp, -1);
        std::erase_if(s, [](const std::vector<int>& c) { return c.empty(); });
    }

    // Counting mode (BigInt) weighs every cover by 1.
    static constexpr bool kWeighted = std::is_same_v<Value, Rational>;

    static Value inner_factor(int item) {
        if (!kWeighted || kind_of(item) == kLeaf) return Value(1);
        return Value(weight_of(item));
    }

    static Value half() {
        if constexpr (kWeighted) {
            return Rational(BigInt(1), BigInt(2));
        } else {
            return Value(1);
        }
    }

    Value terminal(const State& s) const {
        if (s.size() != 1) return Value(0);
        std::vector<int> weights;
        int pairs = 0;
        for (int item : s.front()) {
            weights.push_back(weight_of(item));
            if (kind_of(item) == kPair) {
                weights.push_back(weight_of(item));
                ++pairs;
            }
        }
        if (Partition(weights) != mu_) return Value(0);
        Value out(1);
        for (int i = 0; i < pairs; ++i) out *= half();
        return out;
    }

    bool feasible(int k, const State& s) const {
        int n = 0;
        for (const auto& comp : s) {
            for (int item : comp) n += kind_of(item) == kPair ? 2 : 1;
        }
        const int target = mu_.length();
        if (std::abs(n - target) > k || (k + target - n) % 2 != 0) return false;
        const int joins_left = (k + n - target) / 2;
        return static_cast<int>(s.size()) - 1 <= joins_left;
    }

    Value solve(int k, const State& s) {
        if (k == 0) return terminal(s);
        if (!feasible(k, s)) return Value(0);
        std::vector<int> key{k};
        for (const auto& comp : s) {
            key.insert(key.end(), comp.begin(), comp.end());
            key.push_back(-1);
        }
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        // One handle per class of interchangeable edges; leaves merge across components.
        std::vector<Handle> handles;
        std::vector<int> leaf_weights_seen;
        for (std::size_t c = 0; c < s.size(); ++c) {
            for (std::size_t i = 0; i < s[c].size(); ++i) {
                const int item = s[c][i];
                if (kind_of(item) == kLeaf) {
                    if (std::find(leaf_weights_seen.begin(), leaf_weights_seen.end(), weight_of(item)) !=
                        leaf_weights_seen.end()) {
                        continue;
                    }
                    leaf_weights_seen.push_back(weight_of(item));
                }
                handles.push_back({c, i});
            }
        }
        auto leaf_count = [&](int w) {
            int n = 0;
            for (const auto& comp : s) {
                for (int item : comp) n += (item == code(w, kLeaf, kPlain)) ? 1 : 0;
            }
            return n;
        };

        Value total(0);

        // SPLIT
        for (const Handle& h : handles) {
            const int item = s[h.comp][h.item];
            const int w = weight_of(item);
            for (int b = 1; 2 * b <= w; ++b) {
                const int c = w - b;
                const bool odd_pair = (b == c) && (b % 2 == 1);
                if (!may_consume(item, odd_pair, false)) continue;
                State next = s;
                consume(next, h);
                if (b == c) {
                    Flag flag = kPlain;
                    if (zigzag_ && odd_pair) flag = anchored(item) ? kAnchored : kObliged;
                    next[h.comp].push_back(code(b, kPair, flag));
                } else {
                    next[h.comp].push_back(code(b, kSingle, kPlain));
                    next[h.comp].push_back(code(c, kSingle, kPlain));
                }
                drop_consumed(next);
                canonicalize(next);
                total += inner_factor(item) * solve(k - 1, next);
            }
        }

        // JOIN
        for (std::size_t x = 0; x < handles.size(); ++x) {
            for (std::size_t y = x; y < handles.size(); ++y) {
                const Handle a = handles[x];
                const Handle b = handles[y];
                const int ia = s[a.comp][a.item];
                const int ib = s[b.comp][b.item];
                const int wa = weight_of(ia), wb = weight_of(ib);
                State next = s;
                Value factor(1);
                Flag out = kPlain;
                std::size_t target_comp = a.comp;
                if (x == y) {
                    if (kind_of(ia) == kPair) {
                        // Close the sibling pair: a symmetric cycle.
                        if (!may_consume(ia, false, true)) continue;
                        factor = kWeighted ? Value(wa) * Value(wa) * half() : Value(1);
                        if (wa % 2 == 1) out = flag_of(ia);
                        next[a.comp][a.item] = -1;
                    } else if (kind_of(ia) == kLeaf && leaf_count(wa) >= 2) {
                        // Two (-inf)-leaves of equal weight: a symmetric fork.
                        factor = half();
                        if (wa % 2 == 1) out = kAnchored;
                        std::size_t other = s.size();
                        for (std::size_t c = 0; c < s.size(); ++c) {
                            if (c != a.comp && s[c].size() == 1 && s[c][0] == ia) { other = c; break; }
                        }
                        next[a.comp][a.item] = -1;
                        next[other][0] = -1;
                        for (int item : next[other]) {
                            if (item != -1) next[a.comp].push_back(item);
                        }
                        next[other].clear();
                    } else {
                        continue;
                    }
                } else {
                    const bool ok = may_consume(ia, false, false) && may_consume(ib, false, false);
                    if (!ok) continue;
                    factor = inner_factor(ia) * inner_factor(ib);
                    consume(next, a);
                    consume(next, b);
                    if (a.comp != b.comp) {
                        for (int item : next[b.comp]) next[a.comp].push_back(item);
                        next[b.comp].clear();
                    }
                }
                next[target_comp].push_back(code(wa + wb, kSingle, (zigzag_ && (wa + wb) % 2 == 0) ? out : kPlain));
                drop_consumed(next);
                canonicalize(next);
                total += factor * solve(k - 1, next);
            }
        }

        memo_.emplace(std::move(key), total);
        return total;
    }

    Partition mu_;
    int r_;
    bool zigzag_;
    State initial_;
    std::unordered_map<std::vector<int>, Value, KeyHash> memo_;
};

}  // namespace

void for_each_cover(int genus, const Partition& lambda, const Partition& mu,
                    const std::function<void(const TropicalCover&)>& visit, SweepFilter filter,
                    const SearchLimits& limits) {
    require_enumerable(genus, lambda, mu);
    if (filter == SweepFilter::ZigzagOnly) require_admissible(lambda, mu, genus);
    check_limits(lambda, mu, genus, limits);
    CoverSweep sweep(genus, lambda, mu, filter, visit);
    sweep.run();
}

namespace {

std::vector<TropicalCover> collect(int genus, const Partition& lambda, const Partition& mu,
                                   SweepFilter filter, const SearchLimits& limits) {
    std::vector<TropicalCover> out;
    for_each_cover(genus, lambda, mu, [&](const TropicalCover& c) { out.push_back(c); }, filter, limits);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::vector<TropicalCover> enumerate_covers(int genus, const Partition& lambda, const Partition& mu,
                                            const SearchLimits& limits) {
    return collect(genus, lambda, mu, SweepFilter::All, limits);
}

std::vector<TropicalCover> enumerate_zigzag_covers(int genus, const Partition& lambda,
                                                   const Partition& mu, const SearchLimits& limits) {
    return collect(genus, lambda, mu, SweepFilter::ZigzagOnly, limits);
}

Rational hurwitz_complex(int genus, const Partition& lambda, const Partition& mu,
                         const SearchLimits& limits) {
    require_enumerable(genus, lambda, mu);
    check_limits(lambda, mu, genus, limits);
    AggregateSweep<Rational> sweep(lambda, mu, simple_branch_count(lambda, mu, genus), false);
    return sweep.run();
}

Rational hurwitz_complex_by_enumeration(int genus, const Partition& lambda, const Partition& mu,
                                        const SearchLimits& limits) {
    Rational total;
    for (const auto& c : enumerate_covers(genus, lambda, mu, limits)) total += mult_complex(c);
    return total;
}

BigInt count_zigzag_covers(int genus, const Partition& lambda, const Partition& mu,
                           const SearchLimits& limits) {
    require_enumerable(genus, lambda, mu);
    require_admissible(lambda, mu, genus);
    check_limits(lambda, mu, genus, limits);
    AggregateSweep<BigInt> sweep(lambda, mu, simple_branch_count(lambda, mu, genus), true);
    return sweep.run();
}

}  // namespace hurwitz
