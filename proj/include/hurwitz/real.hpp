#pragma once

#include "hurwitz/cover.hpp"
#include "hurwitz/enumerate.hpp"
#include "hurwitz/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hurwitz {

enum class Sign { Plus, Minus };
enum class Colour { Red, Green };
enum class VertexSign { Plus, Minus, Incompatible };

/// Signs of the branch points x_1 < ... < x_r.
class SignSplitting {
public:
    SignSplitting() = default;
    explicit SignSplitting(std::vector<Sign> signs) : signs_(std::move(signs)) {}

    /// "++-" style; throws ParseError on other characters.
    static SignSplitting parse(std::string_view text);
    /// First p points positive, the remaining r - p negative.
    static SignSplitting canonical(int r, int p);
    /// Bit i of `mask` set means x_{i+1} is positive.
    static SignSplitting from_mask(int r, unsigned mask);

    int size() const { return static_cast<int>(signs_.size()); }
    int p() const;
    Sign operator[](int i) const { return signs_[static_cast<std::size_t>(i)]; }
    unsigned mask() const;
    std::string str() const;

    friend bool operator==(const SignSplitting&, const SignSplitting&) = default;

private:
    std::vector<Sign> signs_;
};

/// T as membership flags over scf(c) (same order), plus one colour per
/// component of the even subgraph of C \ T (order of even_components).
struct Colouring {
    std::vector<bool> in_t;
    std::vector<Colour> component_colour;

    friend bool operator==(const Colouring&, const Colouring&) = default;
};

/// Components of the subgraph of even edges of C minus the interiors of the
/// edges in T. Each component is a sorted list of edge ids; components are
/// ordered by their smallest edge id.
std::vector<std::vector<int>> even_components(const TropicalCover& c, const std::vector<bool>& in_t);

/// Local shape of a vertex. The "pair side" is the side carrying two edges.
enum class VertexPattern {
    AllEven,  ///< three even edges, pair not in T
    Through,  ///< odd edge on each side, the even edge on the pair side
    Bend,     ///< two odd edges on the pair side, not in T
    PairInT,  ///< the pair side is a cycle or fork contained in T
};

VertexPattern vertex_pattern(const TropicalCover& c, const std::vector<bool>& in_t, int v);

/// Sign of the branch point under v. Incompatible only for colourings that do
/// not fit the cover (wrong sizes).
VertexSign vertex_sign(const TropicalCover& c, const Colouring& rho, int v);

/// Colourings inducing the given signs, ordered by T (as a bitmask over scf(c)).
std::vector<Colouring> enumerate_colourings(const TropicalCover& c, const SignSplitting& s);

/// 2^(|EI| - |SCF|) times the product of mult_T(s) over symmetric cycles.
BigInt mult_real(const TropicalCover& c, const Colouring& rho);

/// Per splitting mask (bit i = x_{i+1} positive): number of compatible
/// colourings and the sum of their real multiplicities.
struct SplittingTable {
    std::vector<int> colourings;
    std::vector<BigInt> multiplicity;
};

SplittingTable splitting_table(const TropicalCover& c);

/// Sum of real multiplicities over all covers and compatible colourings.
BigInt hurwitz_real(int genus, const Partition& lambda, const Partition& mu, const SignSplitting& s,
                    const SearchLimits& limits = {});

/// H^R for every splitting at once, indexed by mask.
std::vector<BigInt> hurwitz_real_all_splittings(int genus, const Partition& lambda, const Partition& mu,
                                                const SearchLimits& limits = {});

char sign_char(VertexSign s);
std::string colour_name(Colour c);

}  // namespace hurwitz
