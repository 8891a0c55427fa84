#include "hurwitz/zigzag.hpp"

#include "hurwitz/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hurwitz {

bool is_zigzag(const TropicalCover& c) {
    const TropicalCover reduced = reduce(c, Reduction::RedDoublePrime);
    return std::none_of(reduced.edges().begin(), reduced.edges().end(),
                        [](const Edge& e) { return e.is_inner() && e.even(); });
}

namespace {

struct Tail {
    bool left = false;
    bool fork = false;
    int cycles = 0;
};

struct Structure {
    std::vector<int> s_vertices;
    std::vector<bool> s_edge;
    std::vector<Tail> tails;
};

int other_end(const Edge& e, int v) { return e.source == v ? e.target : e.source; }

class Analysis {
public:
    explicit Analysis(const TropicalCover& c) : c_(c), edge_count_(c.edges().size()) {}

    std::optional<Structure> run() {
        std::vector<bool> odd_pair(edge_count_, false);
        for (const auto& f : symmetric_features(c_)) {
            if (f.is_cycle() && !f.odd()) return std::nullopt;
            if (f.odd()) {
                odd_pair[static_cast<std::size_t>(f.edges[0])] = true;
                odd_pair[static_cast<std::size_t>(f.edges[1])] = true;
            }
        }
        std::vector<bool> string_edge(edge_count_, false);
        bool any = false;
        for (std::size_t e = 0; e < edge_count_; ++e) {
            if (!c_.edge(static_cast<int>(e)).even() && !odd_pair[e]) {
                string_edge[e] = true;
                any = true;
            }
        }
        if (any) return attempt(string_edge, string_vertices(string_edge));
        // No odd string: S must be a single vertex with three even edges.
        for (int v = 0; v < c_.vertex_count(); ++v) {
            const auto inc = c_.incident(v);
            const bool all_even =
                std::all_of(inc.begin(), inc.end(), [&](int e) { return c_.edge(e).even(); });
            if (!all_even) continue;
            if (auto s = attempt(string_edge, {v})) return s;
        }
        return std::nullopt;
    }

private:
    std::vector<int> string_vertices(const std::vector<bool>& string_edge) const {
        std::set<int> vs;
        for (std::size_t e = 0; e < edge_count_; ++e) {
            if (!string_edge[e]) continue;
            const Edge& edge = c_.edge(static_cast<int>(e));
            if (edge.source != kMinusInfinity) vs.insert(edge.source);
            if (edge.target != kPlusInfinity) vs.insert(edge.target);
        }
        return {vs.begin(), vs.end()};
    }

    bool string_connected(const std::vector<bool>& string_edge, const std::vector<int>& vertices) const {
        if (vertices.empty()) return true;
        std::set<int> reached{vertices.front()};
        std::vector<int> stack{vertices.front()};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int e : c_.incident(v)) {
                if (!string_edge[static_cast<std::size_t>(e)]) continue;
                const int w = other_end(c_.edge(e), v);
                if (w == kMinusInfinity || w == kPlusInfinity) continue;
                if (reached.insert(w).second) stack.push_back(w);
            }
        }
        return reached.size() == vertices.size();
    }

    std::optional<Structure> attempt(const std::vector<bool>& string_edge, const std::vector<int>& vertices) {
        if (!string_connected(string_edge, vertices)) return std::nullopt;
        Structure out{vertices, string_edge, {}};
        std::vector<bool> seen_edge = string_edge;
        std::vector<bool> seen_vertex(static_cast<std::size_t>(c_.vertex_count()), false);
        for (int v : vertices) seen_vertex[static_cast<std::size_t>(v)] = true;
        for (int v : vertices) {
            for (int e : c_.incident(v)) {
                if (string_edge[static_cast<std::size_t>(e)]) continue;
                auto tail = walk(v, e, seen_edge, seen_vertex);
                if (!tail) return std::nullopt;
                out.tails.push_back(*tail);
            }
        }
        if (std::find(seen_edge.begin(), seen_edge.end(), false) != seen_edge.end()) return std::nullopt;
        return out;
    }

    std::optional<Tail> walk(int from, int e, std::vector<bool>& seen_edge, std::vector<bool>& seen_vertex) const {
        Tail tail;
        tail.left = c_.edge(e).target == from;
        while (true) {
            if (seen_edge[static_cast<std::size_t>(e)] || !c_.edge(e).even()) return std::nullopt;
            seen_edge[static_cast<std::size_t>(e)] = true;
            const int w = other_end(c_.edge(e), from);
            if (w == kMinusInfinity || w == kPlusInfinity) return tail;
            if (seen_vertex[static_cast<std::size_t>(w)]) return std::nullopt;
            seen_vertex[static_cast<std::size_t>(w)] = true;
            std::vector<int> rest;
            for (int x : c_.incident(w)) {
                if (x != e) rest.push_back(x);
            }
            if (rest.size() != 2) return std::nullopt;
            const Edge& a = c_.edge(rest[0]);
            if (a != c_.edge(rest[1]) || a.even()) return std::nullopt;
            seen_edge[static_cast<std::size_t>(rest[0])] = true;
            seen_edge[static_cast<std::size_t>(rest[1])] = true;
            if (a.is_leaf()) {
                tail.fork = true;
                return tail;
            }
            ++tail.cycles;
            const int u = other_end(a, w);
            if (seen_vertex[static_cast<std::size_t>(u)]) return std::nullopt;
            seen_vertex[static_cast<std::size_t>(u)] = true;
            int next = -1;
            for (int x : c_.incident(u)) {
                if (x != rest[0] && x != rest[1]) next = x;
            }
            from = u;
            e = next;
        }
    }

    const TropicalCover& c_;
    std::size_t edge_count_;
};

}  // namespace

bool is_zigzag_structural(const TropicalCover& c) {
    require_admissible(c.lambda(), c.mu(), c.genus());
    return Analysis(c).run().has_value();
}

ZigzagStats zigzag_stats(const TropicalCover& c) {
    require_admissible(c.lambda(), c.mu(), c.genus());
    const auto s = Analysis(c).run();
    if (!s) throw HypothesisViolated("not a zigzag cover: " + c.encoding());
    ZigzagStats stats;
    for (const Tail& t : s->tails) {
        if (t.fork) ++(t.left ? stats.a_l : stats.a_r);
        (t.left ? stats.g_l : stats.g_r) += t.cycles;
    }
    const bool single_vertex = std::find(s->s_edge.begin(), s->s_edge.end(), true) == s->s_edge.end();
    if (single_vertex) {
        stats.c = 1;
        return stats;
    }
    for (int v : s->s_vertices) {
        int in = 0, out = 0;
        for (int e : c.incident(v)) {
            if (!s->s_edge[static_cast<std::size_t>(e)]) continue;
            ++(c.edge(e).target == v ? in : out);
        }
        if (in == 2) {
            ++stats.b_r;
        } else if (out == 2) {
            ++stats.b_l;
        } else {
            ++stats.c;
        }
    }
    return stats;
}

BigInt unmixed_ordering_count(const ZigzagStats& stats) {
    return factorial(stats.a_l) * factorial(stats.a_r) * factorial(stats.b_l) * factorial(stats.b_r);
}

BigInt zigzag_number(int genus, const Partition& lambda, const Partition& mu, const SearchLimits& limits) {
    return count_zigzag_covers(genus, lambda, mu, limits);
}

BigInt zigzag_number_by_enumeration(int genus, const Partition& lambda, const Partition& mu,
                                    const SearchLimits& limits) {
    require_admissible(lambda, mu, genus);
    BigInt n = 0;
    for (const auto& c : enumerate_covers(genus, lambda, mu, limits)) {
        if (is_zigzag(c)) ++n;
    }
    return n;
}

bool sufficient_condition(const Partition& lambda, const Partition& mu) {
    const auto l = tail_decomposition(lambda);
    const auto m = tail_decomposition(mu);
    return l.zero.length() + m.zero.length() <= 2 && !(l.oo.empty() && m.oo.empty());
}

bool lower_bound_applies(int genus, const Partition& lambda, const Partition& mu) {
    const auto l = tail_decomposition(lambda);
    const auto m = tail_decomposition(mu);
    if (l.zero.length() + m.zero.length() > 2) return false;
    if (!l.oo.empty() || !m.oo.empty()) return true;
    return genus == 0 && l.zero.length() + m.zero.length() == 2;
}

bool zigzag_exists(int genus, const Partition& lambda, const Partition& mu) {
    simple_branch_count(lambda, mu, genus);
    const auto l = tail_decomposition(lambda);
    const auto m = tail_decomposition(mu);
    const int zeros = l.zero.length() + m.zero.length();
    if (zeros > 2) return false;
    const bool no_odd_parts = l.oo.empty() && l.zero.empty() && m.oo.empty() && m.zero.empty();
    const int even_tails = l.two_e.length() + l.two_o.length() + m.two_e.length() + m.two_o.length();
    if (genus == 0 && no_odd_parts && even_tails > 3) return false;
    const bool no_odd_tails = l.two_o.empty() && l.oo.empty() && m.two_o.empty() && m.oo.empty();
    if (genus == 1 && no_odd_tails && zeros > 0) return false;
    if (genus > 1 && no_odd_tails) return false;
    return true;
}

namespace {

class BendsSearch {
public:
    BendsSearch(const Partition& plus, const Partition& minus) {
        for (int p : plus) values_plus_.push_back(p);
        for (int m : minus) values_minus_.push_back(m);
        dedup(values_plus_, counts_plus_, plus);
        dedup(values_minus_, counts_minus_, minus);
    }

    int run(long start) { return best(start, counts_plus_, counts_minus_); }

private:
    static void dedup(std::vector<int>& values, std::vector<int>& counts, const Partition& p) {
        values.erase(std::unique(values.begin(), values.end()), values.end());
        for (int v : values) counts.push_back(p.multiplicity(v));
    }

    int best(long value, std::vector<int>& plus, std::vector<int>& minus) {
        std::vector<long> key{value};
        key.insert(key.end(), plus.begin(), plus.end());
        key.insert(key.end(), minus.begin(), minus.end());
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        int result = 0;
        auto try_step = [&](std::vector<int>& counts, std::size_t i, long next) {
            --counts[i];
            const int changes = ((value > 0) != (next > 0)) ? 1 : 0;
            result = std::max(result, changes + best(next, plus, minus));
            ++counts[i];
        };
        for (std::size_t i = 0; i < plus.size(); ++i) {
            if (plus[i] > 0) try_step(plus, i, value + values_plus_[i]);
        }
        for (std::size_t i = 0; i < minus.size(); ++i) {
            if (minus[i] > 0) try_step(minus, i, value - values_minus_[i]);
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

    std::vector<int> values_plus_, values_minus_;
    std::vector<int> counts_plus_, counts_minus_;
    std::map<std::vector<long>, int> memo_;
};

Partition tail_part(const TailDecomposition& t) { return concat(concat(t.two_e, t.two_o), t.oo); }

std::vector<int> distinct(const Partition& p) {
    std::vector<int> out(p.begin(), p.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

BigInt split_factorials(int b) { return factorial(b / 2) * factorial((b + 1) / 2); }

void orientation_candidates(int genus, const Partition& a, const Partition& b, bool swapped,
                            std::vector<LowerBoundDetail>& out) {
    const auto ta = tail_decomposition(a);
    const auto tb = tail_decomposition(b);
    const Partition tail_a = tail_part(ta);
    const Partition tail_b = tail_part(tb);
    const BigInt oo_a = factorial(ta.oo.length());
    const BigInt oo_b = factorial(tb.oo.length());
    for (int k : distinct(ta.zero)) {
        const int bb = bends(k, doubled(tail_a), doubled(tail_b));
        out.push_back({oo_a * oo_b * split_factorials(bb), 1, k, bb, swapped});
    }
    if (!ta.zero.empty() || !tb.zero.empty()) return;
    if (genus == 0) {
        for (int k : distinct(ta.oo)) {
            const int bb = bends(k, doubled(tail_a.without(k)), doubled(tail_b));
            out.push_back({factorial(ta.oo.length() - 1) * oo_b * split_factorials(bb), 2, k, bb, swapped});
        }
    } else {
        const int bb = bends(1, doubled(tail_a), doubled(tail_b));
        if (bb % 2 != 0) throw Error("odd number of bends for a closed string");
        const BigInt half = factorial(bb / 2);
        out.push_back({oo_a * oo_b * half * half, 3, 1, bb, swapped});
    }
}

}  // namespace

int bends(long k, const Partition& plus, const Partition& minus) {
    if (k % 2 == 0) throw HypothesisViolated("bends needs an odd start value, got " + std::to_string(k));
    for (const auto* p : {&plus, &minus}) {
        for (int part : *p) {
            if (part % 2 != 0) throw HypothesisViolated("bends needs even parts, got " + p->str());
        }
    }
    return BendsSearch(plus, minus).run(k);
}

std::vector<LowerBoundDetail> lower_bound_candidates(int genus, const Partition& lambda, const Partition& mu) {
    require_admissible(lambda, mu, genus);
    if (!lower_bound_applies(genus, lambda, mu)) {
        throw HypothesisViolated("lower bound needs l(lambda_0, mu_0) <= 2 and (lambda_oo, mu_oo) non-empty or g = 0");
    }
    std::vector<LowerBoundDetail> out;
    orientation_candidates(genus, lambda, mu, false, out);
    orientation_candidates(genus, mu, lambda, true, out);
    return out;
}

LowerBoundDetail lower_bound_detail(int genus, const Partition& lambda, const Partition& mu) {
    const auto all = lower_bound_candidates(genus, lambda, mu);
    if (all.empty()) throw HypothesisViolated("no case of the lower bound applies");
    return *std::max_element(all.begin(), all.end(), [](const auto& x, const auto& y) {
        if (x.value != y.value) return x.value < y.value;
        // Ties resolved towards the first candidate.
        return false;
    });
}

BigInt lower_bound(int genus, const Partition& lambda, const Partition& mu) {
    return lower_bound_detail(genus, lambda, mu).value;
}

namespace {

// Abstract weighted oriented graph; vertex positions come from a topological sort.
class GraphBuilder {
public:
    int vertex() { return count_++; }

    void edge(int from, int to, int weight) { edges_.push_back({from, to, weight}); }

    // Forward edge of positive weight, or the reversed edge for a negative value.
    void signed_edge(int from, int to, long value) {
        if (value > 0) {
            edge(from, to, static_cast<int>(value));
        } else {
            edge(to, from, static_cast<int>(-value));
        }
    }

    TropicalCover build(int genus) const {
        std::vector<int> indegree(static_cast<std::size_t>(count_), 0);
        for (const Edge& e : edges_) {
            if (e.source != kMinusInfinity && e.target != kPlusInfinity) ++indegree[static_cast<std::size_t>(e.target)];
        }
        std::set<int> ready;
        for (int v = 0; v < count_; ++v) {
            if (indegree[static_cast<std::size_t>(v)] == 0) ready.insert(v);
        }
        std::vector<int> position(static_cast<std::size_t>(count_), -1);
        int next = 0;
        while (!ready.empty()) {
            const int v = *ready.begin();
            ready.erase(ready.begin());
            position[static_cast<std::size_t>(v)] = next++;
            for (const Edge& e : edges_) {
                if (e.source == v && e.target != kPlusInfinity &&
                    --indegree[static_cast<std::size_t>(e.target)] == 0) {
                    ready.insert(e.target);
                }
            }
        }
        if (next != count_) throw Error("witness graph has an oriented loop");
        std::vector<Edge> placed;
        for (Edge e : edges_) {
            if (e.source != kMinusInfinity) e.source = position[static_cast<std::size_t>(e.source)];
            if (e.target != kPlusInfinity) e.target = position[static_cast<std::size_t>(e.target)];
            placed.push_back(e);
        }
        return TropicalCover(genus, count_, std::move(placed));
    }

private:
    int count_ = 0;
    std::vector<Edge> edges_;
};

enum class TailType { Fork, OddLeaf, EvenLeaf };

struct TailSpec {
    bool left;       // part of lambda
    TailType type;
    int half;        // the stored value; the tail meets S with weight 2 * half
    int cycles = 0;
};

struct End {
    bool left;
    int weight;
};

void attach(GraphBuilder& g, int s, const TailSpec& t) {
    const int w = 2 * t.half;
    if (t.type != TailType::Fork) {
        if (t.left) {
            g.edge(kMinusInfinity, s, w);
        } else {
            g.edge(s, kPlusInfinity, w);
        }
        return;
    }
    if (t.left) {
        const int fork = g.vertex();
        g.edge(kMinusInfinity, fork, t.half);
        g.edge(kMinusInfinity, fork, t.half);
        int cur = fork;
        for (int i = 0; i < t.cycles; ++i) {
            const int a = g.vertex(), b = g.vertex();
            g.edge(cur, a, w);
            g.edge(a, b, t.half);
            g.edge(a, b, t.half);
            cur = b;
        }
        g.edge(cur, s, w);
    } else {
        int cur = s;
        for (int i = 0; i < t.cycles; ++i) {
            const int a = g.vertex(), b = g.vertex();
            g.edge(cur, a, w);
            g.edge(a, b, t.half);
            g.edge(a, b, t.half);
            cur = b;
        }
        const int fork = g.vertex();
        g.edge(cur, fork, w);
        g.edge(fork, kPlusInfinity, t.half);
        g.edge(fork, kPlusInfinity, t.half);
    }
}

long flow(const TailSpec& t) { return t.left ? 2L * t.half : -2L * t.half; }

std::vector<TailSpec> tails_of(const TailDecomposition& d, bool left) {
    std::vector<TailSpec> out;
    for (int o : d.oo) out.push_back({left, TailType::Fork, o});
    for (int o : d.two_o) out.push_back({left, TailType::OddLeaf, o});
    for (int e : d.two_e) out.push_back({left, TailType::EvenLeaf, e});
    return out;
}

void place_cycles(std::vector<TailSpec>& tails, int cycles) {
    if (cycles == 0) return;
    for (auto& t : tails) {
        if (t.type == TailType::Fork) {
            t.cycles = cycles;
            return;
        }
    }
    throw Error("no tail of the first type to carry the cycles");
}

TropicalCover string_witness(int genus, const std::vector<TailSpec>& tails, End first, End last) {
    if (tails.empty()) throw HypothesisViolated("the string needs at least one tail");
    GraphBuilder g;
    std::vector<int> s;
    for (std::size_t i = 0; i < tails.size(); ++i) s.push_back(g.vertex());
    long value = first.left ? first.weight : -first.weight;
    if (first.left) {
        g.edge(kMinusInfinity, s.front(), first.weight);
    } else {
        g.edge(s.front(), kPlusInfinity, first.weight);
    }
    for (std::size_t i = 0; i < tails.size(); ++i) {
        attach(g, s[i], tails[i]);
        value += flow(tails[i]);
        if (i + 1 < tails.size()) g.signed_edge(s[i], s[i + 1], value);
    }
    if (value != (last.left ? -last.weight : last.weight)) throw Error("string weights do not close up");
    if (last.left) {
        g.edge(kMinusInfinity, s.back(), last.weight);
    } else {
        g.edge(s.back(), kPlusInfinity, last.weight);
    }
    return g.build(genus);
}

TropicalCover loop_witness(int genus, const std::vector<TailSpec>& tails) {
    if (tails.size() < 2) throw HypothesisViolated("a closed string needs at least two tails");
    GraphBuilder g;
    std::vector<int> s;
    for (std::size_t i = 0; i < tails.size(); ++i) s.push_back(g.vertex());
    // The gluing edge carries weight 1 into the first vertex; with the
    // (+inf)-tails first the string changes direction, so it is no oriented loop.
    const long gluing = 1;
    long value = gluing;
    for (std::size_t i = 0; i < tails.size(); ++i) {
        attach(g, s[i], tails[i]);
        value += flow(tails[i]);
        if (i + 1 < tails.size()) g.signed_edge(s[i], s[i + 1], value);
    }
    if (value != gluing) throw Error("closed string weights do not close up");
    g.signed_edge(s.back(), s.front(), gluing);
    return g.build(genus);
}

}  // namespace

TropicalCover construct_zigzag_witness(int genus, const Partition& lambda, const Partition& mu) {
    require_admissible(lambda, mu, genus);
    if (!sufficient_condition(lambda, mu)) {
        throw HypothesisViolated("witness needs l(lambda_0, mu_0) <= 2 and (lambda_oo, mu_oo) non-empty");
    }
    const auto l = tail_decomposition(lambda);
    const auto m = tail_decomposition(mu);
    auto left = tails_of(l, true);
    auto right = tails_of(m, false);
    std::vector<TailSpec> tails;

    TropicalCover out;
    if (l.zero.length() + m.zero.length() == 2) {
        std::vector<End> ends;
        for (int z : l.zero) ends.push_back({true, z});
        for (int z : m.zero) ends.push_back({false, z});
        tails = left;
        tails.insert(tails.end(), right.begin(), right.end());
        place_cycles(tails, genus);
        out = string_witness(genus, tails, ends[0], ends[1]);
    } else if (l.oo.length() + m.oo.length() > 1 || genus == 0) {
        // A part alpha of the paired odd parts weights both ends of S.
        const bool from_lambda = !l.oo.empty();
        auto& pool = from_lambda ? left : right;
        const int alpha = pool.front().half;
        pool.erase(pool.begin());
        tails = left;
        tails.insert(tails.end(), right.begin(), right.end());
        place_cycles(tails, genus);
        const End end{from_lambda, alpha};
        out = string_witness(genus, tails, end, end);
    } else {
        tails = right;
        tails.insert(tails.end(), left.begin(), left.end());
        place_cycles(tails, genus - 1);
        out = loop_witness(genus, tails);
    }

    const auto problems = cover_violations(out, lambda, mu, genus);
    if (!problems.empty()) throw Error("witness is not a valid cover: " + problems.front());
    return out;
}

}  // namespace hurwitz
