#include "hurwitz/audit.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/real.hpp"
#include "hurwitz/zigzag.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace hurwitz {

void AuditCheck::record(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    ++failures;
    if (samples.size() < 5) samples.push_back(what);
}

bool AuditReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.passed(); });
}

namespace {

enum CheckId {
    kCoverInvariants,
    kDeterminism,
    kComplexSweep,
    kComplexSymmetry,
    kOracle,
    kZigzagSweep,
    kZigzagStructural,
    kZigzagOddComplex,
    kZigzagOddReal,
    kSandwich,
    kParity,
    kSplittingInvariance,
    kUniqueColouring,
    kExistence,
    kLowerBound,
    kWitness,
    kCheckCount,
};

const char* const kNames[kCheckCount] = {
    "cover invariants (valence, balancing, genus, type; |EI| >= |SCF| when admissible)",
    "enumeration is deterministic",
    "H^C sweep equals sum over enumerated covers",
    "H^C(lambda, mu) = H^C(mu, lambda)",
    "H^C equals the monodromy count",
    "Z sweep equals zigzag covers among enumerated covers",
    "red'' test agrees with the string-and-tails test",
    "zigzag iff mult^C odd",
    "zigzag iff mult^R odd for every colouring",
    "Z <= H^R(p) <= H^C",
    "Z = H^R(p) = H^C mod 2",
    "H^R depends only on p",
    "unique colouring for zigzag covers, some empty splitting otherwise",
    "existence predicate iff Z > 0",
    "lower bound <= Z",
    "witness is a zigzag cover of the enumerated list",
};

std::string type_name(int g, const Partition& l, const Partition& m) {
    return "g=" + std::to_string(g) + " lambda=" + l.str() + " mu=" + m.str();
}

}  // namespace

AuditReport run_audit(const AuditRange& range, const SearchLimits& limits) {
    std::vector<AuditCheck> checks(kCheckCount);
    for (int i = 0; i < kCheckCount; ++i) checks[static_cast<std::size_t>(i)].name = kNames[i];
    auto check = [&](CheckId id) -> AuditCheck& { return checks[static_cast<std::size_t>(id)]; };
    const SearchLimits oracle_limits{std::max(limits.max_degree, range.max_degree),
                                     std::max(limits.max_branch_points, range.max_branch_points)};
    long reflection_types = 0, reflection_holds = 0;

    for (int d = 1; d <= range.max_degree; ++d) {
        const auto parts = partitions_of(d);
        for (const auto& lambda : parts) {
            for (const auto& mu : parts) {
                for (int g = 0;; ++g) {
                    const int r = simple_branch_count(lambda, mu, g);
                    if (r > range.max_branch_points) break;
                    if (r < 1) continue;
                    const std::string name = type_name(g, lambda, mu);
                    const auto covers = enumerate_covers(g, lambda, mu, limits);
                    check(kDeterminism).record(covers == enumerate_covers(g, lambda, mu, limits), name);
                    const bool excluded = excluded_configuration(lambda, mu, g);
                    for (const auto& c : covers) {
                        const long slack = static_cast<long>(even_inner_edges(c).size()) -
                                           static_cast<long>(scf(c).size());
                        check(kCoverInvariants).record(cover_violations(c, lambda, mu, g).empty() && (excluded || slack >= 0),
                                                       c.encoding());
                    }
                    const Rational hc = hurwitz_complex(g, lambda, mu, limits);
                    check(kComplexSweep).record(hc == hurwitz_complex_by_enumeration(g, lambda, mu, limits), name);
                    check(kComplexSymmetry).record(hc == hurwitz_complex(g, mu, lambda, limits), name);
                    check(kOracle).record(hc == oracle::monodromy_count(g, lambda, mu, oracle_limits), name);

                    if (excluded) continue;

                    BigInt zigzags = 0;
                    std::vector<BigInt> real(std::size_t{1} << r, 0);
                    for (const auto& c : covers) {
                        const bool z = is_zigzag(c);
                        if (z) ++zigzags;
                        check(kZigzagStructural).record(z == is_zigzag_structural(c), c.encoding());
                        check(kZigzagOddComplex).record(z == mult_complex(c).is_odd_integer(), c.encoding());
                        const auto table = splitting_table(c);
                        bool parity_ok = true, unique = true, some_empty = false;
                        for (std::size_t m = 0; m < real.size(); ++m) {
                            real[m] += table.multiplicity[m];
                            if (table.colourings[static_cast<std::size_t>(m)] != 1) unique = false;
                            if (table.colourings[static_cast<std::size_t>(m)] == 0) some_empty = true;
                        }
                        const std::size_t n = scf(c).size();
                        for (unsigned t = 0; t < (1U << n); ++t) {
                            Colouring rho;
                            for (std::size_t i = 0; i < n; ++i) rho.in_t.push_back(((t >> i) & 1U) != 0);
                            const bool odd = mpz_odd_p(mult_real(c, rho).get_mpz_t()) != 0;
                            if (odd != z) parity_ok = false;
                        }
                        check(kZigzagOddReal).record(parity_ok, c.encoding());
                        check(kUniqueColouring).record(z ? unique : some_empty, c.encoding());
                    }
                    const BigInt zsweep = zigzag_number(g, lambda, mu, limits);
                    check(kZigzagSweep).record(zsweep == zigzags, name);

                    // H^R per p, compared across every splitting with that p.
                    std::map<int, BigInt> by_p;
                    bool invariant = true, sandwich = true, parity = true;
                    for (std::size_t m = 0; m < real.size(); ++m) {
                        const int p = std::popcount(static_cast<unsigned>(m));
                        auto [it, fresh] = by_p.emplace(p, real[m]);
                        if (!fresh && it->second != real[m]) invariant = false;
                        if (real[m] < zigzags || Rational(real[m]) > hc) sandwich = false;
                        if (!hc.is_integer() || !same_parity(real[m], zigzags) ||
                            !same_parity(real[m], hc.numerator())) {
                            parity = false;
                        }
                    }
                    check(kSplittingInvariance).record(invariant, name);
                    check(kSandwich).record(sandwich, name);
                    check(kParity).record(parity, name);
                    ++reflection_types;
                    bool reflects = true;
                    for (const auto& [p, value] : by_p) {
                        if (by_p.at(r - p) != value) reflects = false;
                    }
                    if (reflects) ++reflection_holds;

                    check(kExistence).record(zigzag_exists(g, lambda, mu) == (zigzags > 0), name);
                    if (lower_bound_applies(g, lambda, mu)) {
                        check(kLowerBound).record(lower_bound(g, lambda, mu) <= zigzags, name);
                    }
                    if (sufficient_condition(lambda, mu)) {
                        const auto w = construct_zigzag_witness(g, lambda, mu);
                        const bool listed = std::binary_search(covers.begin(), covers.end(), w);
                        check(kWitness).record(listed && is_zigzag(w), name);
                    }
                }
            }
        }
    }

    AuditReport report;
    report.checks = std::move(checks);
    report.observations.push_back("H^R(p) = H^R(r - p) for every p in " + std::to_string(reflection_holds) +
                                  " of " + std::to_string(reflection_types) + " admissible types");
    return report;
}

}  // namespace hurwitz
