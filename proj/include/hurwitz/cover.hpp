#pragma once

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

#include <array>
#include <compare>
#include <limits>
#include <string>
#include <vector>

namespace hurwitz {

/// Endpoint sentinels. Inner vertices are numbered 0..r-1 by the position of
/// their image x_1 < ... < x_r.
inline constexpr int kMinusInfinity = -1;
inline constexpr int kPlusInfinity = std::numeric_limits<int>::max();

/// Edge oriented from the smaller to the larger image.
struct Edge {
    int source = kMinusInfinity;
    int target = kPlusInfinity;
    int weight = 1;

    bool is_leaf() const { return source == kMinusInfinity || target == kPlusInfinity; }
    bool is_inner() const { return !is_leaf(); }
    bool even() const { return weight % 2 == 0; }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Combinatorial tropical cover: a weighted oriented graph with inner vertices
/// ordered by position. Edges are kept sorted (source, target, weight), which
/// is a canonical encoding of the isomorphism class: with the vertex order
/// fixed, two covers are isomorphic iff their edge multisets agree.
class TropicalCover {
public:
    TropicalCover() = default;
    TropicalCover(int genus, int vertex_count, std::vector<Edge> edges);

    int genus() const { return genus_; }
    int vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

    /// Ids of the edges incident to inner vertex v, in edge order.
    std::vector<int> incident(int v) const;
    /// Ids of the edges ending at v (left side) and starting at v (right side).
    std::vector<int> incoming(int v) const;
    std::vector<int> outgoing(int v) const;

    Partition lambda() const;
    Partition mu() const;
    int degree() const { return lambda().weight(); }

    /// Compact canonical string, e.g. "g0|r2|-:0:3,0:1:2,0:+:1,1:+:1,1:+:1".
    std::string encoding() const;

    friend bool operator==(const TropicalCover&, const TropicalCover&) = default;
    friend auto operator<=>(const TropicalCover& a, const TropicalCover& b) {
        if (auto c = a.genus_ <=> b.genus_; c != 0) return c;
        if (auto c = a.vertex_count_ <=> b.vertex_count_; c != 0) return c;
        return a.edges_ <=> b.edges_;
    }

private:
    int genus_ = 0;
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
};

/// Human-readable list of violated structural invariants; empty when the cover is valid.
/// Checks 3-valence, balancing, orientation, connectivity and b_1 = genus.
std::vector<std::string> cover_violations(const TropicalCover& c);

/// As above, and additionally that the cover has type (lambda, mu) and
/// r = l(lambda) + l(mu) + 2g - 2 inner vertices.
std::vector<std::string> cover_violations(const TropicalCover& c, const Partition& lambda,
                                          const Partition& mu, int genus);

enum class FeatureKind { Cycle, Fork };

/// Pair of edges with the same endpoints and the same weight.
struct SymmetricFeature {
    FeatureKind kind = FeatureKind::Cycle;
    int weight = 0;
    std::array<int, 2> edges{};
    /// Inner vertex the fork hangs from; for cycles, the source vertex.
    int vertex = 0;

    bool odd() const { return weight % 2 == 1; }
    bool is_cycle() const { return kind == FeatureKind::Cycle; }

    friend bool operator==(const SymmetricFeature&, const SymmetricFeature&) = default;
};

/// All symmetric cycles and forks of both parities, ordered by edge id.
std::vector<SymmetricFeature> symmetric_features(const TropicalCover& c);
/// Symmetric cycles (any parity) and odd symmetric forks.
std::vector<SymmetricFeature> scf(const TropicalCover& c);
/// Symmetric cycles only.
std::vector<SymmetricFeature> sc(const TropicalCover& c);

/// 2^(number of symmetric cycles and forks).
BigInt automorphism_count(const TropicalCover& c);

/// Product of inner edge weights divided by |Aut|.
Rational mult_complex(const TropicalCover& c);

/// Ids of even inner edges that are not part of a symmetric cycle.
std::vector<int> even_inner_edges(const TropicalCover& c);

enum class Reduction {
    Red,             ///< symmetric cycles and odd symmetric forks
    RedPrime,        ///< all symmetric cycles and forks
    RedDoublePrime,  ///< odd symmetric cycles and odd symmetric forks
};

/// Replaces every selected pair by one edge/leaf of twice the weight and
/// smooths the resulting 2-valent vertices. Throws ExcludedConfiguration for
/// excluded types.
TropicalCover reduce(const TropicalCover& c, Reduction mode);

}  // namespace hurwitz
