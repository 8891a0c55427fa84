#include "hurwitz/sweep.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/zigzag.hpp"

#include <array>
#include <chrono>
#include <sstream>

namespace hurwitz {

SweepVariant parse_variant(const std::string& name) {
    if (name == "ones") return SweepVariant::Ones;
    if (name == "mixed") return SweepVariant::Mixed;
    if (name == "twos") return SweepVariant::Twos;
    throw ParseError("unknown sweep variant \"" + name + "\" (ones, mixed, twos)");
}

std::string variant_name(SweepVariant v) {
    switch (v) {
        case SweepVariant::Ones: return "ones";
        case SweepVariant::Mixed: return "mixed";
        case SweepVariant::Twos: return "twos";
    }
    return "ones";
}

int variant_exponent(SweepVariant v) {
    switch (v) {
        case SweepVariant::Ones: return 4;
        case SweepVariant::Mixed: return 3;
        case SweepVariant::Twos: return 2;
    }
    return 4;
}

std::pair<Partition, Partition> padded(const Partition& lambda, const Partition& mu, int m, SweepVariant v) {
    switch (v) {
        case SweepVariant::Ones: return {pad_ones(lambda, m), pad_ones(mu, m)};
        case SweepVariant::Mixed: return {pad_twos(lambda, m), pad_ones(mu, m)};
        case SweepVariant::Twos: return {pad_twos(lambda, m), pad_twos(mu, m)};
    }
    return {lambda, mu};
}

const BigInt& SweepResult::z_of(const SweepRow& row) const {
    switch (variant) {
        case SweepVariant::Ones: return row.z;
        case SweepVariant::Mixed: return row.z_prime;
        case SweepVariant::Twos: return row.z_dblprime;
    }
    return row.z;
}

const Rational& SweepResult::h_of(const SweepRow& row) const {
    switch (variant) {
        case SweepVariant::Ones: return row.h_complex;
        case SweepVariant::Mixed: return row.h_prime;
        case SweepVariant::Twos: return row.h_dblprime;
    }
    return row.h_complex;
}

std::optional<int> discover_m0(const std::vector<BigInt>& values, int exponent) {
    const int n = static_cast<int>(values.size());
    for (int m0 = 0; m0 < n; ++m0) {
        bool holds = true;
        for (int m = m0 + 1; m < n && holds; ++m) {
            BigInt bound;
            mpz_pow_ui(bound.get_mpz_t(), factorial(m - m0).get_mpz_t(), static_cast<unsigned long>(exponent));
            holds = values[static_cast<std::size_t>(m)] >= bound;
        }
        if (holds) return m0;
    }
    return std::nullopt;
}

SweepResult sweep(int genus, const Partition& lambda, const Partition& mu, int m_max, SweepVariant variant,
                  const SearchLimits& limits) {
    if (m_max < 0) throw Error("m_max must be non-negative");
    SweepResult result;
    result.variant = variant;
    for (int m = 0; m <= m_max; ++m) {
        for (SweepVariant v : {SweepVariant::Ones, SweepVariant::Mixed, SweepVariant::Twos}) {
            const auto [l, u] = padded(lambda, mu, m, v);
            require_admissible(l, u, genus);
        }
        const auto start = std::chrono::steady_clock::now();
        SweepRow row;
        row.m = m;
        try {
            const auto [l1, u1] = padded(lambda, mu, m, SweepVariant::Ones);
            const auto [l2, u2] = padded(lambda, mu, m, SweepVariant::Mixed);
            const auto [l3, u3] = padded(lambda, mu, m, SweepVariant::Twos);
            row.z = zigzag_number(genus, l1, u1, limits);
            row.h_complex = hurwitz_complex(genus, l1, u1, limits);
            row.z_prime = zigzag_number(genus, l2, u2, limits);
            row.h_prime = hurwitz_complex(genus, l2, u2, limits);
            row.z_dblprime = zigzag_number(genus, l3, u3, limits);
            row.h_dblprime = hurwitz_complex(genus, l3, u3, limits);
        } catch (const CapExceeded& e) {
            result.truncated = "m = " + std::to_string(m) + ": " + e.what();
            break;
        }
        const auto [l, u] = padded(lambda, mu, m, variant);
        if (lower_bound_applies(genus, l, u)) row.lower_bound = lower_bound(genus, l, u);
        row.runtime_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        result.rows.push_back(std::move(row));
    }
    std::vector<BigInt> zs;
    for (const auto& row : result.rows) zs.push_back(result.z_of(row));
    result.m0 = discover_m0(zs, variant_exponent(variant));
    return result;
}

std::vector<std::string> sweep_violations(const SweepResult& result) {
    std::vector<std::string> out;
    for (const auto& row : result.rows) {
        const std::string at = "m = " + std::to_string(row.m) + ": ";
        const std::array<std::pair<const BigInt*, const Rational*>, 3> cells{
            {{&row.z, &row.h_complex}, {&row.z_prime, &row.h_prime}, {&row.z_dblprime, &row.h_dblprime}}};
        for (const auto& [z, h] : cells) {
            if (Rational(*z) > *h) out.push_back(at + "Z " + z->get_str() + " exceeds H^C " + h->str());
            // 2 H^C = 2 Z mod 4
            const Rational diff = (*h - Rational(*z)) * Rational(2);
            if (!diff.is_integer() || diff.numerator() % 4 != 0) {
                out.push_back(at + "Z " + z->get_str() + " and H^C " + h->str() + " differ in parity");
            }
        }
        if (row.lower_bound && *row.lower_bound > result.z_of(row)) {
            out.push_back(at + "lower bound " + row.lower_bound->get_str() + " exceeds Z");
        }
    }
    return out;
}

std::string sweep_csv(const SweepResult& result, bool timing) {
    std::ostringstream os;
    os << "m,z,z_prime,z_dblprime,h_complex,h_prime,h_dblprime,lower_bound,runtime_ms\n";
    for (const auto& row : result.rows) {
        os << row.m << ',' << row.z.get_str() << ',' << row.z_prime.get_str() << ',' << row.z_dblprime.get_str()
           << ',' << row.h_complex.fraction_str() << ',' << row.h_prime.fraction_str() << ','
           << row.h_dblprime.fraction_str() << ',' << (row.lower_bound ? row.lower_bound->get_str() : "") << ',';
        if (timing) os << static_cast<long>(row.runtime_ms);
        os << "\n";
    }
    if (result.truncated) os << "# truncated: " << *result.truncated << "\n";
    return os.str();
}

}  // namespace hurwitz
