#include "hurwitz/real.hpp"

#include "hurwitz/errors.hpp"

#include <algorithm>
#include <numeric>

namespace hurwitz {

SignSplitting SignSplitting::parse(std::string_view text) {
    std::vector<Sign> signs;
    for (char ch : text) {
        if (ch == '+') {
            signs.push_back(Sign::Plus);
        } else if (ch == '-') {
            signs.push_back(Sign::Minus);
        } else {
            throw ParseError("sign string may only contain '+' and '-': \"" + std::string(text) + "\"");
        }
    }
    return SignSplitting(std::move(signs));
}

SignSplitting SignSplitting::canonical(int r, int p) {
    if (p < 0 || p > r) {
        throw Error("p = " + std::to_string(p) + " outside 0.." + std::to_string(r));
    }
    std::vector<Sign> signs(static_cast<std::size_t>(r), Sign::Minus);
    std::fill_n(signs.begin(), p, Sign::Plus);
    return SignSplitting(std::move(signs));
}

SignSplitting SignSplitting::from_mask(int r, unsigned mask) {
    std::vector<Sign> signs;
    for (int i = 0; i < r; ++i) signs.push_back(((mask >> i) & 1U) != 0 ? Sign::Plus : Sign::Minus);
    return SignSplitting(std::move(signs));
}

int SignSplitting::p() const {
    return static_cast<int>(std::count(signs_.begin(), signs_.end(), Sign::Plus));
}

unsigned SignSplitting::mask() const {
    unsigned m = 0;
    for (std::size_t i = 0; i < signs_.size(); ++i) {
        if (signs_[i] == Sign::Plus) m |= 1U << i;
    }
    return m;
}

std::string SignSplitting::str() const {
    std::string out;
    for (Sign s : signs_) out += s == Sign::Plus ? '+' : '-';
    return out;
}

char sign_char(VertexSign s) {
    switch (s) {
        case VertexSign::Plus: return '+';
        case VertexSign::Minus: return '-';
        case VertexSign::Incompatible: return '?';
    }
    return '?';
}

std::string colour_name(Colour c) { return c == Colour::Red ? "red" : "green"; }

namespace {

// Edge ids of the features in T.
std::vector<bool> t_edges(const TropicalCover& c, const std::vector<bool>& in_t) {
    const auto features = scf(c);
    if (in_t.size() != features.size()) throw Error("T does not match the symmetric cycles and odd forks");
    std::vector<bool> out(c.edges().size(), false);
    for (std::size_t i = 0; i < features.size(); ++i) {
        if (!in_t[i]) continue;
        out[static_cast<std::size_t>(features[i].edges[0])] = true;
        out[static_cast<std::size_t>(features[i].edges[1])] = true;
    }
    return out;
}

// Component index per edge id, -1 for edges outside the even subgraph.
std::vector<int> component_of_edge(const TropicalCover& c, const std::vector<std::vector<int>>& comps) {
    std::vector<int> out(c.edges().size(), -1);
    for (std::size_t k = 0; k < comps.size(); ++k) {
        for (int e : comps[k]) out[static_cast<std::size_t>(e)] = static_cast<int>(k);
    }
    return out;
}

// Sign produced by a red component at a vertex of the given shape; green flips it.
Sign red_sign(VertexPattern p) { return p == VertexPattern::Bend ? Sign::Minus : Sign::Plus; }

Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

struct VertexData {
    VertexPattern pattern;
    int component;
};

std::vector<VertexData> vertex_data(const TropicalCover& c, const std::vector<bool>& in_t,
                                    const std::vector<int>& comp_of) {
    std::vector<VertexData> out;
    for (int v = 0; v < c.vertex_count(); ++v) {
        int comp = -1;
        for (int e : c.incident(v)) {
            if (comp_of[static_cast<std::size_t>(e)] >= 0) {
                comp = comp_of[static_cast<std::size_t>(e)];
                break;
            }
        }
        out.push_back({vertex_pattern(c, in_t, v), comp});
    }
    return out;
}

BigInt t_multiplicity(const TropicalCover& c, const std::vector<bool>& in_t) {
    const auto features = scf(c);
    const long exponent = static_cast<long>(even_inner_edges(c).size()) - static_cast<long>(features.size());
    if (exponent < 0) throw Error("|EI| - |SCF| < 0 for " + c.encoding());
    BigInt out = 1;
    out <<= static_cast<mp_bitcnt_t>(exponent);
    for (std::size_t i = 0; i < features.size(); ++i) {
        const auto& f = features[i];
        if (!f.is_cycle()) continue;
        if (in_t[i]) {
            out *= f.weight;
        } else if (!f.odd()) {
            out *= 4;
        }
    }
    return out;
}

std::vector<bool> t_from_mask(std::size_t n, unsigned mask) {
    std::vector<bool> in_t(n);
    for (std::size_t i = 0; i < n; ++i) in_t[i] = ((mask >> i) & 1U) != 0;
    return in_t;
}

}  // namespace

std::vector<std::vector<int>> even_components(const TropicalCover& c, const std::vector<bool>& in_t) {
    const auto removed = t_edges(c, in_t);
    const int n = static_cast<int>(c.edges().size());
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    auto in_subgraph = [&](int e) { return c.edge(e).even() && !removed[static_cast<std::size_t>(e)]; };
    for (int v = 0; v < c.vertex_count(); ++v) {
        int first = -1;
        for (int e : c.incident(v)) {
            if (!in_subgraph(e)) continue;
            if (first < 0) {
                first = e;
            } else {
                const int a = find(first), b = find(e);
                if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
            }
        }
    }
    std::vector<std::vector<int>> comps;
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    for (int e = 0; e < n; ++e) {
        if (!in_subgraph(e)) continue;
        const int root = find(e);
        if (index[static_cast<std::size_t>(root)] < 0) {
            index[static_cast<std::size_t>(root)] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[static_cast<std::size_t>(index[static_cast<std::size_t>(root)])].push_back(e);
    }
    return comps;
}

VertexPattern vertex_pattern(const TropicalCover& c, const std::vector<bool>& in_t, int v) {
    auto in = c.incoming(v);
    auto out = c.outgoing(v);
    if (in.size() + out.size() != 3 || in.empty() || out.empty()) {
        throw Error("vertex " + std::to_string(v) + " is not a 3-valent vertex with edges on both sides");
    }
    const auto& pair = in.size() == 2 ? in : out;
    const int single = in.size() == 2 ? out.front() : in.front();
    const auto removed = t_edges(c, in_t);
    if (removed[static_cast<std::size_t>(pair[0])] && removed[static_cast<std::size_t>(pair[1])] &&
        c.edge(pair[0]) == c.edge(pair[1])) {
        return VertexPattern::PairInT;
    }
    if (!c.edge(pair[0]).even() && !c.edge(pair[1]).even()) return VertexPattern::Bend;
    if (!c.edge(single).even()) return VertexPattern::Through;
    return VertexPattern::AllEven;
}

VertexSign vertex_sign(const TropicalCover& c, const Colouring& rho, int v) {
    if (rho.in_t.size() != scf(c).size() || v < 0 || v >= c.vertex_count()) return VertexSign::Incompatible;
    const auto comps = even_components(c, rho.in_t);
    if (rho.component_colour.size() != comps.size()) return VertexSign::Incompatible;
    const auto comp_of = component_of_edge(c, comps);
    int comp = -1;
    for (int e : c.incident(v)) {
        const int k = comp_of[static_cast<std::size_t>(e)];
        if (k < 0) continue;
        if (comp >= 0 && rho.component_colour[static_cast<std::size_t>(k)] !=
                             rho.component_colour[static_cast<std::size_t>(comp)]) {
            return VertexSign::Incompatible;
        }
        comp = k;
    }
    if (comp < 0) return VertexSign::Incompatible;
    Sign s = red_sign(vertex_pattern(c, rho.in_t, v));
    if (rho.component_colour[static_cast<std::size_t>(comp)] == Colour::Green) s = flip(s);
    return s == Sign::Plus ? VertexSign::Plus : VertexSign::Minus;
}

std::vector<Colouring> enumerate_colourings(const TropicalCover& c, const SignSplitting& s) {
    require_admissible(c.lambda(), c.mu(), c.genus());
    if (s.size() != c.vertex_count()) {
        throw Error("splitting has " + std::to_string(s.size()) + " signs, cover has " +
                    std::to_string(c.vertex_count()) + " branch points");
    }
    const std::size_t n = scf(c).size();
    std::vector<Colouring> out;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        auto in_t = t_from_mask(n, mask);
        const auto comps = even_components(c, in_t);
        const auto data = vertex_data(c, in_t, component_of_edge(c, comps));
        // Each vertex forces the colour of its even component.
        std::vector<int> forced(comps.size(), -1);
        bool ok = true;
        for (int v = 0; v < c.vertex_count() && ok; ++v) {
            const auto& d = data[static_cast<std::size_t>(v)];
            if (d.component < 0) { ok = false; break; }
            const int colour = red_sign(d.pattern) == s[v] ? 0 : 1;
            int& slot = forced[static_cast<std::size_t>(d.component)];
            if (slot < 0) {
                slot = colour;
            } else if (slot != colour) {
                ok = false;
            }
        }
        if (!ok) continue;
        Colouring rho{std::move(in_t), {}};
        for (int colour : forced) rho.component_colour.push_back(colour == 1 ? Colour::Green : Colour::Red);
        out.push_back(std::move(rho));
    }
    return out;
}

BigInt mult_real(const TropicalCover& c, const Colouring& rho) { return t_multiplicity(c, rho.in_t); }

SplittingTable splitting_table(const TropicalCover& c) {
    const int r = c.vertex_count();
    if (r > 24) throw CapExceeded("splitting table needs r <= 24");
    SplittingTable table;
    table.colourings.assign(std::size_t{1} << r, 0);
    table.multiplicity.assign(std::size_t{1} << r, 0);
    const std::size_t n = scf(c).size();
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        const auto in_t = t_from_mask(n, mask);
        const auto comps = even_components(c, in_t);
        const auto data = vertex_data(c, in_t, component_of_edge(c, comps));
        // Positive vertices of each component when it is red; green gives the complement.
        std::vector<unsigned> touched(comps.size(), 0), red_plus(comps.size(), 0);
        for (int v = 0; v < r; ++v) {
            const auto& d = data[static_cast<std::size_t>(v)];
            if (d.component < 0) throw Error("vertex without even edge in " + c.encoding());
            touched[static_cast<std::size_t>(d.component)] |= 1U << v;
            if (red_sign(d.pattern) == Sign::Plus) red_plus[static_cast<std::size_t>(d.component)] |= 1U << v;
        }
        std::vector<unsigned> splittings{0};
        for (std::size_t k = 0; k < comps.size(); ++k) {
            std::vector<unsigned> next;
            next.reserve(splittings.size() * 2);
            for (unsigned m : splittings) {
                next.push_back(m | red_plus[k]);
                next.push_back(m | (touched[k] & ~red_plus[k]));
            }
            splittings = std::move(next);
        }
        const BigInt mult = t_multiplicity(c, in_t);
        for (unsigned m : splittings) {
            ++table.colourings[m];
            table.multiplicity[m] += mult;
        }
    }
    return table;
}

BigInt hurwitz_real(int genus, const Partition& lambda, const Partition& mu, const SignSplitting& s,
                    const SearchLimits& limits) {
    require_admissible(lambda, mu, genus);
    const int r = simple_branch_count(lambda, mu, genus);
    if (s.size() != r) {
        throw Error("splitting has " + std::to_string(s.size()) + " signs, expected r = " + std::to_string(r));
    }
    BigInt total = 0;
    for (const auto& c : enumerate_covers(genus, lambda, mu, limits)) {
        for (const auto& rho : enumerate_colourings(c, s)) total += mult_real(c, rho);
    }
    return total;
}

std::vector<BigInt> hurwitz_real_all_splittings(int genus, const Partition& lambda, const Partition& mu,
                                                const SearchLimits& limits) {
    require_admissible(lambda, mu, genus);
    const int r = simple_branch_count(lambda, mu, genus);
    std::vector<BigInt> out(std::size_t{1} << r, 0);
    for (const auto& c : enumerate_covers(genus, lambda, mu, limits)) {
        const auto table = splitting_table(c);
        for (std::size_t m = 0; m < out.size(); ++m) out[m] += table.multiplicity[m];
    }
    return out;
}

}  // namespace hurwitz
