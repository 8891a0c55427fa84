// Acceptance suite: one PASS/FAIL line per criterion.

#include "hurwitz/enumerate.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/real.hpp"
#include "hurwitz/sweep.hpp"
#include "hurwitz/zigzag.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace hurwitz;

namespace {

struct Verdict {
    bool pass = true;
    long cases = 0;
    long failures = 0;
    std::string first_failure;
    std::string note;

    void record(bool ok, const std::string& what) {
        ++cases;
        if (ok) return;
        pass = false;
        if (failures++ == 0) first_failure = what;
    }
};

void for_each_type(int max_d, int max_r, int max_g, const std::function<void(int, const Partition&, const Partition&)>& f) {
    for (int d = 1; d <= max_d; ++d) {
        for (const auto& l : partitions_of(d)) {
            for (const auto& m : partitions_of(d)) {
                for (int g = 0; g <= max_g; ++g) {
                    const int r = simple_branch_count(l, m, g);
                    if (r > max_r) break;
                    if (r >= 1) f(g, l, m);
                }
            }
        }
    }
}

std::string type_name(int g, const Partition& l, const Partition& m) {
    return "(" + std::to_string(g) + ", (" + l.str() + "), (" + m.str() + "))";
}

constexpr int kAny = 1000;

Verdict oracle_equivalence() {
    Verdict v;
    for_each_type(4, 6, kAny, [&](int g, const Partition& l, const Partition& m) {
        if (l.weight() < 2) return;
        v.record(hurwitz_complex(g, l, m) == oracle::monodromy_count(g, l, m), type_name(g, l, m));
    });
    const bool named = hurwitz_complex(0, {2, 1}, {2, 1}) == Rational(4) &&
                       hurwitz_complex(0, {3}, {1, 1, 1}) == Rational(1);
    v.record(named, "named values 4 and 1");
    return v;
}

Verdict degree_five_spot_checks() {
    Verdict v;
    const std::vector<std::tuple<int, Partition, Partition>> spots{
        {0, {3, 2}, {3, 2}}, {0, {5}, {2, 2, 1}}, {1, {4, 1}, {3, 2}}, {0, {2, 2, 1}, {3, 1, 1}}};
    std::ostringstream values;
    for (const auto& [g, l, m] : spots) {
        const Rational h = hurwitz_complex(g, l, m);
        v.record(h == oracle::monodromy_count(g, l, m), type_name(g, l, m));
        values << type_name(g, l, m) << " = " << h << "; ";
    }
    v.note = values.str();
    return v;
}

Verdict sandwich_and_parity() {
    Verdict v;
    for_each_type(4, kAny, kAny, [&](int g, const Partition& l, const Partition& m) {
        if (simple_branch_count(l, m, g) > 6 || excluded_configuration(l, m, g)) return;
        const Rational hc = hurwitz_complex(g, l, m);
        const BigInt z = zigzag_number(g, l, m);
        const int r = simple_branch_count(l, m, g);
        for (int p = 0; p <= r; ++p) {
            const BigInt h = hurwitz_real(g, l, m, SignSplitting::canonical(r, p));
            const bool ok = z <= h && Rational(h) <= hc && hc.is_integer() && same_parity(z, h) &&
                            same_parity(h, hc.numerator());
            v.record(ok, type_name(g, l, m) + " p=" + std::to_string(p));
        }
    });
    v.note = "all admissible types with d <= 4, r <= 6";
    return v;
}

Verdict splitting_invariance() {
    Verdict v;
    for_each_type(4, 6, kAny, [&](int g, const Partition& l, const Partition& m) {
        if (excluded_configuration(l, m, g)) return;
        const int r = simple_branch_count(l, m, g);
        const auto all = hurwitz_real_all_splittings(g, l, m);
        for (int p = 0; p <= r; ++p) {
            std::set<std::string> values;
            int splittings = 0;
            for (unsigned mask = 0; mask < all.size(); ++mask) {
                if (SignSplitting::from_mask(r, mask).p() != p) continue;
                ++splittings;
                values.insert(all[mask].get_str());
            }
            // Cross-check the table against a direct evaluation on two splittings.
            const SignSplitting first = SignSplitting::canonical(r, p);
            std::vector<Sign> rev;
            for (int i = r - 1; i >= 0; --i) rev.push_back(first[i]);
            const SignSplitting last(rev);
            const bool direct = hurwitz_real(g, l, m, first) == hurwitz_real(g, l, m, last) &&
                                hurwitz_real(g, l, m, first) == all[first.mask()];
            v.record(values.size() == 1 && direct, type_name(g, l, m) + " p=" + std::to_string(p) + " (" +
                                                       std::to_string(splittings) + " splittings)");
        }
    });
    v.note = "every splitting of every admissible type with d <= 4, r <= 6";
    return v;
}

Verdict odd_multiplicity() {
    Verdict v;
    for_each_type(5, 7, kAny, [&](int g, const Partition& l, const Partition& m) {
        if (excluded_configuration(l, m, g)) return;
        for (const auto& c : enumerate_covers(g, l, m)) {
            const bool z = is_zigzag(c);
            bool ok = z == mult_complex(c).is_odd_integer();
            const std::size_t n = scf(c).size();
            for (unsigned t = 0; t < (1U << n) && ok; ++t) {
                Colouring rho;
                for (std::size_t i = 0; i < n; ++i) rho.in_t.push_back(((t >> i) & 1U) != 0);
                ok = (mpz_odd_p(mult_real(c, rho).get_mpz_t()) != 0) == z;
            }
            v.record(ok, c.encoding());
        }
    });
    v.note = "every cover of every admissible type with d <= 5, r <= 7";
    return v;
}

Verdict unique_colouring() {
    Verdict v;
    long zigzags = 0;
    for_each_type(6, 6, kAny, [&](int g, const Partition& l, const Partition& m) {
        if (excluded_configuration(l, m, g)) return;
        for (const auto& c : enumerate_covers(g, l, m)) {
            const bool z = is_zigzag(c);
            if (z) ++zigzags;
            const auto table = splitting_table(c);
            bool all_one = true, some_zero = false;
            for (int count : table.colourings) {
                if (count != 1) all_one = false;
                if (count == 0) some_zero = true;
            }
            v.record(z ? all_one : some_zero, c.encoding());
        }
    });
    v.note = "d <= 6, r <= 6, " + std::to_string(zigzags) + " zigzag covers";
    return v;
}

Verdict existence() {
    Verdict v;
    for_each_type(6, kAny, 2, [&](int g, const Partition& l, const Partition& m) {
        if (excluded_configuration(l, m, g)) return;
        v.record(zigzag_exists(g, l, m) == (zigzag_number(g, l, m) > 0), type_name(g, l, m));
    });
    v.note = "all admissible types with d <= 6, g <= 2";
    return v;
}

Verdict lower_bound_check() {
    Verdict v;
    for_each_type(6, kAny, 2, [&](int g, const Partition& l, const Partition& m) {
        if (excluded_configuration(l, m, g) || !lower_bound_applies(g, l, m)) return;
        v.record(lower_bound(g, l, m) <= zigzag_number(g, l, m), type_name(g, l, m));
    });
    v.note = "types with d <= 6, g <= 2 inside the bound's hypotheses";
    return v;
}

Verdict reduced_edge_count() {
    Verdict v;
    long loose = 0, covers = 0;
    for_each_type(5, 7, kAny, [&](int g, const Partition& l, const Partition& m) {
        if (excluded_configuration(l, m, g)) return;
        for (const auto& c : enumerate_covers(g, l, m)) {
            const long expected = static_cast<long>(even_inner_edges(c).size()) - static_cast<long>(scf(c).size());
            const auto red = reduce(c, Reduction::Red);
            long all_even = 0;
            for (const Edge& e : red.edges()) all_even += e.is_inner() && e.even();
            ++covers;
            if (all_even == expected) ++loose;
            std::ostringstream what;
            what << c.encoding() << ": |EI(red)| = " << even_inner_edges(red).size() << ", |EI| - |SCF| = "
                 << expected;
            v.record(static_cast<long>(even_inner_edges(red).size()) == expected, what.str());
        }
    });
    v.note = "d <= 5, r <= 7; counting every even inner edge of the reduced cover (symmetric cycles included) "
             "gives equality for " + std::to_string(loose) + " of " + std::to_string(covers) + " covers";
    return v;
}

Verdict asymptotic_sweep() {
    Verdict v;
    const SweepResult result = sweep(0, {2, 1}, {2, 1}, 3, SweepVariant::Ones);
    v.record(!result.truncated && result.rows.size() == 4, "sweep completed");
    const auto problems = sweep_violations(result);
    v.record(problems.empty(), problems.empty() ? "" : problems.front());
    for (std::size_t i = 1; i < result.rows.size(); ++i) {
        v.record(result.rows[i].z >= result.rows[i - 1].z, "z(" + std::to_string(i) + ") < z(" +
                                                               std::to_string(i - 1) + ")");
    }
    std::ostringstream note;
    note << "z =";
    for (const auto& row : result.rows) note << ' ' << row.z.get_str();
    note << "; m0 = " << (result.m0 ? std::to_string(*result.m0) : "none");
    v.record(result.m0.has_value(), "no m0 found");
    v.note = note.str();
    return v;
}

struct Criterion {
    const char* name;
    std::function<Verdict()> run;
    double budget_seconds;
    /// Failing is documented and expected.
    bool known_failure = false;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"oracle equivalence, d in {2,3,4}, r <= 6", oracle_equivalence, 300},
        {"oracle spot checks at d = 5", degree_five_spot_checks, 600},
        {"real sandwich and parity", sandwich_and_parity, 600},
        {"splitting invariance", splitting_invariance, 600},
        {"odd-multiplicity characterization", odd_multiplicity, 600},
        {"unique colouring for zigzag covers", unique_colouring, 600},
        {"existence predicate", existence, 900},
        {"lower bound", lower_bound_check, 900},
        {"reduced cover |EI(red)| = |EI| - |SCF|", reduced_edge_count, 600, true},
        {"sweep m = 0..3 on ((2,1),(2,1),0)", asymptotic_sweep, 600},
    };
    bool ok = true;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Verdict v = c.run();
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > c.budget_seconds) {
            v.pass = false;
            v.first_failure = "over time budget";
        }
        std::cout << (v.pass ? "PASS" : "FAIL") << " [" << index << "] " << c.name << " (" << v.cases << " cases, "
                  << v.failures << " failures, " << std::fixed;
        std::cout.precision(2);
        std::cout << seconds << "s)";
        if (!v.pass) std::cout << " first: " << v.first_failure;
        if (!v.pass && c.known_failure) std::cout << " [known failure]";
        std::cout << "\n";
        if (!v.note.empty()) std::cout << "     " << v.note << "\n";
        if (!v.pass && !c.known_failure) ok = false;
    }
    return ok ? 0 : 1;
}
