#pragma once

#include <compare>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hurwitz {

/// Integer partition stored weakly decreasing. Equality is multiset equality.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }

    /// Number of parts equal to `value`.
    int multiplicity(int value) const;
    bool contains(int value) const { return multiplicity(value) > 0; }
    /// Removes one copy of `value`; the value must be present.
    Partition without(int value) const;

    /// "2,1,1"; the empty partition prints as "-".
    std::string str() const;

    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

private:
    std::vector<int> parts_;
};

/// Parses "2,1,1" or "-" for the empty partition.
Partition parse_partition(std::string_view text);

/// Multiset union (lambda, mu).
Partition concat(const Partition& a, const Partition& b);
/// 2*lambda.
Partition doubled(const Partition& p);
/// lambda^2: every part duplicated.
Partition squared(const Partition& p);
/// (lambda, 1^{2m}).
Partition pad_ones(const Partition& p, int m);
/// (lambda, 2^m).
Partition pad_twos(const Partition& p, int m);

/// All partitions of n, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

/// lambda = (2*two_e, 2*two_o, oo^2, zero) with two_e even, two_o and oo odd,
/// zero odd with distinct parts.
struct TailDecomposition {
    Partition two_e;
    Partition two_o;
    Partition oo;
    Partition zero;

    friend bool operator==(const TailDecomposition&, const TailDecomposition&) = default;
};

TailDecomposition tail_decomposition(const Partition& p);
Partition recombine(const TailDecomposition& t);

/// Number of simple branch points r = l(lambda) + l(mu) + 2g - 2.
/// Throws WeightMismatch when |lambda| != |mu|.
int simple_branch_count(const Partition& lambda, const Partition& mu, int genus);

/// True iff r <= 0 or both partitions lie in {(d), (d/2, d/2)}.
bool excluded_configuration(const Partition& lambda, const Partition& mu, int genus);

/// Throws WeightMismatch or ExcludedConfiguration when the input is not admissible.
void require_admissible(const Partition& lambda, const Partition& mu, int genus);

}  // namespace hurwitz
