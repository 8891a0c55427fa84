#pragma once

#include "hurwitz/enumerate.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hurwitz {

enum class SweepVariant {
    Ones,   ///< (lambda, 1^2m), (mu, 1^2m)
    Mixed,  ///< (lambda, 2^m), (mu, 1^2m)
    Twos,   ///< (lambda, 2^m), (mu, 2^m)
};

SweepVariant parse_variant(const std::string& name);
std::string variant_name(SweepVariant v);
/// Exponent e in z(m) >= (m - m_0)!^e: 4, 3 and 2 respectively.
int variant_exponent(SweepVariant v);
/// The padded pair of partitions for row m.
std::pair<Partition, Partition> padded(const Partition& lambda, const Partition& mu, int m, SweepVariant v);

struct SweepRow {
    int m = 0;
    BigInt z, z_prime, z_dblprime;
    Rational h_complex, h_prime, h_dblprime;
    /// For the selected variant; empty outside the bound's domain.
    std::optional<BigInt> lower_bound;
    double runtime_ms = 0;
};

struct SweepResult {
    SweepVariant variant = SweepVariant::Ones;
    std::vector<SweepRow> rows;
    /// Set when a cap stopped the sweep early.
    std::optional<std::string> truncated;
    /// Smallest m_0 with z(m) >= (m - m_0)!^e for every computed m > m_0.
    std::optional<int> m0;

    const BigInt& z_of(const SweepRow& row) const;
    const Rational& h_of(const SweepRow& row) const;
};

SweepResult sweep(int genus, const Partition& lambda, const Partition& mu, int m_max, SweepVariant variant,
                  const SearchLimits& limits = {});

/// Smallest m_0 in [0, m_max] such that values[m] >= (m - m_0)!^exponent for all m > m_0.
std::optional<int> discover_m0(const std::vector<BigInt>& values, int exponent);

/// Row-level invariants: z <= h, z = h mod 2 (in 2h = 2z mod 4 form) and lower_bound <= z.
std::vector<std::string> sweep_violations(const SweepResult& result);

/// Fixed column order, header first; rationals as num/den. The runtime
/// column stays empty unless `timing` is set, keeping the output reproducible.
std::string sweep_csv(const SweepResult& result, bool timing = false);

}  // namespace hurwitz
