#include "hurwitz/cover.hpp"

#include "hurwitz/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hurwitz {

namespace {

std::string endpoint_str(int x) {
    if (x == kMinusInfinity) return "-";
    if (x == kPlusInfinity) return "+";
    return std::to_string(x);
}

// Union-find over inner vertices plus one node per end.
class Dsu {
public:
    explicit Dsu(int n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            auto& p = parent_[static_cast<std::size_t>(x)];
            p = parent_[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[static_cast<std::size_t>(a)] = b;
        return true;
    }

private:
    std::vector<int> parent_;
};

}  // namespace

TropicalCover::TropicalCover(int genus, int vertex_count, std::vector<Edge> edges)
    : genus_(genus), vertex_count_(vertex_count), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
}

std::vector<int> TropicalCover::incident(int v) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        if (edges_[static_cast<std::size_t>(i)].source == v || edges_[static_cast<std::size_t>(i)].target == v) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<int> TropicalCover::incoming(int v) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        if (edges_[static_cast<std::size_t>(i)].target == v) out.push_back(i);
    }
    return out;
}

std::vector<int> TropicalCover::outgoing(int v) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        if (edges_[static_cast<std::size_t>(i)].source == v) out.push_back(i);
    }
    return out;
}

Partition TropicalCover::lambda() const {
    std::vector<int> parts;
    for (const Edge& e : edges_) {
        if (e.source == kMinusInfinity) parts.push_back(e.weight);
    }
    return Partition(std::move(parts));
}

Partition TropicalCover::mu() const {
    std::vector<int> parts;
    for (const Edge& e : edges_) {
        if (e.target == kPlusInfinity) parts.push_back(e.weight);
    }
    return Partition(std::move(parts));
}

std::string TropicalCover::encoding() const {
    std::string out = "g" + std::to_string(genus_) + "|r" + std::to_string(vertex_count_) + "|";
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (i != 0) out += ',';
        out += endpoint_str(edges_[i].source) + ":" + endpoint_str(edges_[i].target) + ":" +
               std::to_string(edges_[i].weight);
    }
    return out;
}

std::vector<std::string> cover_violations(const TropicalCover& c) {
    std::vector<std::string> out;
    const int r = c.vertex_count();
    std::vector<int> valence(static_cast<std::size_t>(r), 0);
    std::vector<long> balance(static_cast<std::size_t>(r), 0);
    auto inner = [r](int x) { return x >= 0 && x < r; };
    for (const Edge& e : c.edges()) {
        if (e.weight < 1) out.push_back("non-positive weight " + std::to_string(e.weight));
        if (e.source == kPlusInfinity || e.target == kMinusInfinity) {
            out.push_back("edge oriented away from its end");
            continue;
        }
        if (e.source == kMinusInfinity && e.target == kPlusInfinity) {
            out.push_back("edge without inner vertex");
            continue;
        }
        if (e.source != kMinusInfinity && !inner(e.source)) out.push_back("bad source vertex");
        if (e.target != kPlusInfinity && !inner(e.target)) out.push_back("bad target vertex");
        if (inner(e.source) && inner(e.target) && e.source >= e.target) {
            out.push_back("edge " + std::to_string(e.source) + "->" + std::to_string(e.target) +
                          " not compatible with vertex order");
        }
        if (inner(e.source)) {
            ++valence[static_cast<std::size_t>(e.source)];
            balance[static_cast<std::size_t>(e.source)] -= e.weight;
        }
        if (inner(e.target)) {
            ++valence[static_cast<std::size_t>(e.target)];
            balance[static_cast<std::size_t>(e.target)] += e.weight;
        }
    }
    if (!out.empty()) return out;
    for (int v = 0; v < r; ++v) {
        if (valence[static_cast<std::size_t>(v)] != 3) {
            out.push_back("vertex " + std::to_string(v) + " has valence " +
                          std::to_string(valence[static_cast<std::size_t>(v)]));
        }
        if (balance[static_cast<std::size_t>(v)] != 0) {
            out.push_back("vertex " + std::to_string(v) + " is not balanced");
        }
    }
    // Ends get their own nodes r, r+1, ...
    const int ends = static_cast<int>(std::count_if(c.edges().begin(), c.edges().end(),
                                                    [](const Edge& e) { return e.is_leaf(); }));
    Dsu dsu(r + ends);
    int next_end = r;
    int components = r + ends;
    for (const Edge& e : c.edges()) {
        const int a = e.source == kMinusInfinity ? next_end++ : e.source;
        const int b = e.target == kPlusInfinity ? next_end++ : e.target;
        if (dsu.unite(a, b)) --components;
    }
    if (components != 1) out.push_back("graph is disconnected");
    const int betti = static_cast<int>(c.edges().size()) - (r + ends) + components;
    if (betti != c.genus()) {
        out.push_back("first Betti number " + std::to_string(betti) + " != genus " +
                      std::to_string(c.genus()));
    }
    return out;
}

std::vector<std::string> cover_violations(const TropicalCover& c, const Partition& lambda,
                                          const Partition& mu, int genus) {
    auto out = cover_violations(c);
    if (c.genus() != genus) out.push_back("genus differs from requested genus");
    if (c.lambda() != lambda) out.push_back("(-inf)-leaves " + c.lambda().str() + " != " + lambda.str());
    if (c.mu() != mu) out.push_back("(+inf)-leaves " + c.mu().str() + " != " + mu.str());
    if (c.vertex_count() != lambda.length() + mu.length() + 2 * genus - 2) {
        out.push_back("number of inner vertices does not match r");
    }
    return out;
}

std::vector<SymmetricFeature> symmetric_features(const TropicalCover& c) {
    std::vector<SymmetricFeature> out;
    const auto& edges = c.edges();
    // Sorted storage puts identical triples next to each other.
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        if (edges[i] != edges[i + 1]) continue;
        const Edge& e = edges[i];
        SymmetricFeature f;
        f.weight = e.weight;
        f.edges = {static_cast<int>(i), static_cast<int>(i + 1)};
        if (e.is_inner()) {
            f.kind = FeatureKind::Cycle;
            f.vertex = e.source;
        } else {
            f.kind = FeatureKind::Fork;
            f.vertex = e.source == kMinusInfinity ? e.target : e.source;
        }
        out.push_back(f);
        ++i;
    }
    return out;
}

std::vector<SymmetricFeature> scf(const TropicalCover& c) {
    auto all = symmetric_features(c);
    std::erase_if(all, [](const SymmetricFeature& f) { return !f.is_cycle() && !f.odd(); });
    return all;
}

std::vector<SymmetricFeature> sc(const TropicalCover& c) {
    auto all = symmetric_features(c);
    std::erase_if(all, [](const SymmetricFeature& f) { return !f.is_cycle(); });
    return all;
}

BigInt automorphism_count(const TropicalCover& c) {
    BigInt out = 1;
    out <<= static_cast<mp_bitcnt_t>(symmetric_features(c).size());
    return out;
}

Rational mult_complex(const TropicalCover& c) {
    BigInt product = 1;
    for (const Edge& e : c.edges()) {
        if (e.is_inner()) product *= e.weight;
    }
    return Rational(product, automorphism_count(c));
}

std::vector<int> even_inner_edges(const TropicalCover& c) {
    std::vector<bool> in_cycle(c.edges().size(), false);
    for (const auto& f : sc(c)) {
        in_cycle[static_cast<std::size_t>(f.edges[0])] = true;
        in_cycle[static_cast<std::size_t>(f.edges[1])] = true;
    }
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(c.edges().size()); ++i) {
        const Edge& e = c.edge(i);
        if (e.is_inner() && e.even() && !in_cycle[static_cast<std::size_t>(i)]) out.push_back(i);
    }
    return out;
}

TropicalCover reduce(const TropicalCover& c, Reduction mode) {
    require_admissible(c.lambda(), c.mu(), c.genus());

    auto selected = [mode](const SymmetricFeature& f) {
        switch (mode) {
            case Reduction::Red: return f.is_cycle() || f.odd();
            case Reduction::RedPrime: return true;
            case Reduction::RedDoublePrime: return f.odd();
        }
        return false;
    };

    std::vector<Edge> edges = c.edges();
    std::vector<bool> removed(edges.size(), false);
    int genus = c.genus();
    for (const auto& f : symmetric_features(c)) {
        if (!selected(f)) continue;
        edges[static_cast<std::size_t>(f.edges[0])].weight *= 2;
        removed[static_cast<std::size_t>(f.edges[1])] = true;
        if (f.is_cycle()) --genus;
    }
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!removed[i]) kept.push_back(edges[i]);
    }

    // Smooth 2-valent vertices: one incoming and one outgoing edge of equal weight.
    const int r = c.vertex_count();
    std::vector<bool> alive(static_cast<std::size_t>(r), true);
    for (int v = 0; v < r; ++v) {
        int in = -1, out = -1, valence = 0;
        for (int i = 0; i < static_cast<int>(kept.size()); ++i) {
            if (kept[static_cast<std::size_t>(i)].target == v) { in = i; ++valence; }
            if (kept[static_cast<std::size_t>(i)].source == v) { out = i; ++valence; }
        }
        if (valence != 2) continue;
        if (in < 0 || out < 0) throw Error("reduction produced a 2-valent fold vertex");
        Edge merged{kept[static_cast<std::size_t>(in)].source, kept[static_cast<std::size_t>(out)].target,
                    kept[static_cast<std::size_t>(in)].weight};
        const auto hi = static_cast<std::size_t>(std::max(in, out));
        const auto lo = static_cast<std::size_t>(std::min(in, out));
        kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(hi));
        kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(lo));
        kept.push_back(merged);
        alive[static_cast<std::size_t>(v)] = false;
    }

    std::vector<int> renumber(static_cast<std::size_t>(r), -1);
    int next = 0;
    for (int v = 0; v < r; ++v) {
        if (alive[static_cast<std::size_t>(v)]) renumber[static_cast<std::size_t>(v)] = next++;
    }
    for (Edge& e : kept) {
        if (e.source != kMinusInfinity) e.source = renumber[static_cast<std::size_t>(e.source)];
        if (e.target != kPlusInfinity) e.target = renumber[static_cast<std::size_t>(e.target)];
    }
    if (next == 0) {
        throw ExcludedConfiguration("reduction collapsed the cover to a single edge");
    }
    return TropicalCover(genus, next, std::move(kept));
}

}  // namespace hurwitz
