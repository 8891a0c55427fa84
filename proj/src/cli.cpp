#include "hurwitz/cli.hpp"

#include "hurwitz/audit.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/format.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/real.hpp"
#include "hurwitz/sweep.hpp"
#include "hurwitz/zigzag.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

namespace hurwitz::cli {

namespace {

using nlohmann::json;

struct TypeArgs {
    int genus = 0;
    std::string lambda;
    std::string mu;

    Partition l() const { return parse_partition(lambda); }
    Partition m() const { return parse_partition(mu); }
};

void add_type(CLI::App* cmd, TypeArgs& t, bool with_genus = true) {
    if (with_genus) cmd->add_option("-g,--genus", t.genus, "genus")->check(CLI::NonNegativeNumber);
    cmd->add_option("-l,--lambda", t.lambda, "profile over 0, e.g. 2,1,1 (- for empty)")->required();
    cmd->add_option("-m,--mu", t.mu, "profile over infinity")->required();
}

std::string json_rational(const Rational& q) { return q.fraction_str(); }

struct Caps {
    std::optional<int> max_degree;
    std::optional<int> max_branch_points;

    SearchLimits resolve(const SearchLimits& defaults) const {
        return {max_degree.value_or(defaults.max_degree), max_branch_points.value_or(defaults.max_branch_points)};
    }
};

struct SignArgs {
    std::string signs;
    std::optional<int> p;

    bool given() const { return !signs.empty() || p.has_value(); }
    SignSplitting resolve(int r) const {
        if (!signs.empty()) {
            SignSplitting s = SignSplitting::parse(signs);
            if (s.size() != r) {
                throw ParseError("--signs has " + std::to_string(s.size()) + " entries, expected r = " +
                                 std::to_string(r));
            }
            return s;
        }
        if (*p < 0 || *p > r) throw ParseError("--p must lie in [0, " + std::to_string(r) + "]");
        return SignSplitting::canonical(r, *p);
    }
};

void add_signs(CLI::App* cmd, SignArgs& s) {
    auto* signs = cmd->add_option("--signs", s.signs, "signs of x_1..x_r, e.g. ++-");
    auto* p = cmd->add_option("--p", s.p, "number of positive branch points (first p positive)");
    signs->excludes(p);
}

std::string lower_case(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return s;
}

int cmd_complex(const TypeArgs& t, const SearchLimits& limits, const std::string& format, std::ostream& out) {
    const Rational h = hurwitz_complex(t.genus, t.l(), t.m(), limits);
    if (format == "json") {
        out << json{{"genus", t.genus}, {"lambda", partition_json(t.l())}, {"mu", partition_json(t.m())},
                    {"h_complex", json_rational(h)}}.dump()
            << "\n";
    } else {
        out << h << "\n";
    }
    return kExitOk;
}

int cmd_real(const TypeArgs& t, const SignArgs& s, bool verify, const SearchLimits& limits,
             const std::string& format, std::ostream& out, std::ostream& err) {
    const Partition l = t.l(), m = t.m();
    require_admissible(l, m, t.genus);
    const int r = simple_branch_count(l, m, t.genus);
    if (!s.given()) throw ParseError("one of --signs or --p is required");
    const SignSplitting split = s.resolve(r);
    const BigInt h = hurwitz_real(t.genus, l, m, split, limits);
    std::optional<BigInt> z;
    std::optional<Rational> hc;
    std::vector<std::string> problems;
    if (verify) {
        z = zigzag_number(t.genus, l, m, limits);
        hc = hurwitz_complex(t.genus, l, m, limits);
        if (h < *z) problems.push_back("H^R < Z");
        if (Rational(h) > *hc) problems.push_back("H^R > H^C");
        if (!same_parity(h, *z)) problems.push_back("H^R and Z differ mod 2");
        if (!hc->is_integer() || !same_parity(h, hc->numerator())) problems.push_back("H^R and H^C differ mod 2");
    }
    if (format == "json") {
        json j{{"genus", t.genus}, {"lambda", partition_json(l)}, {"mu", partition_json(m)},
               {"signs", split.str()}, {"p", split.p()}, {"h_real", h.get_str()}};
        if (verify) {
            j["zigzag"] = z->get_str();
            j["h_complex"] = json_rational(*hc);
            j["violations"] = problems;
        }
        out << j.dump() << "\n";
    } else if (verify) {
        out << "h_real " << h.get_str() << "\nzigzag " << z->get_str() << "\nh_complex " << *hc << "\n"
            << (problems.empty() ? "ok" : "violated") << "\n";
    } else {
        out << h.get_str() << "\n";
    }
    for (const auto& p : problems) err << "invariant violated: " << p << "\n";
    return problems.empty() ? kExitOk : kExitViolation;
}

int cmd_zigzag(const TypeArgs& t, bool enumerate, bool witness, const SearchLimits& limits,
               const std::string& format, std::ostream& out, std::ostream& err) {
    const Partition l = t.l(), m = t.m();
    if (witness) {
        const TropicalCover w = construct_zigzag_witness(t.genus, l, m);
        if (format == "json") {
            out << cover_json(w).dump() << "\n";
        } else {
            out << cover_record(w);
        }
        return kExitOk;
    }
    const BigInt z = zigzag_number(t.genus, l, m, limits);
    if (enumerate) {
        const BigInt counted = zigzag_number_by_enumeration(t.genus, l, m, limits);
        if (counted != z) {
            err << "invariant violated: sweep gives " << z.get_str() << ", enumeration gives " << counted.get_str()
                << "\n";
            return kExitViolation;
        }
    }
    if (format == "json") {
        out << json{{"genus", t.genus}, {"lambda", partition_json(l)}, {"mu", partition_json(m)},
                    {"zigzag", z.get_str()}}.dump()
            << "\n";
    } else {
        out << z.get_str() << "\n";
    }
    return kExitOk;
}

int cmd_bound(const TypeArgs& t, const std::string& format, std::ostream& out) {
    const LowerBoundDetail best = lower_bound_detail(t.genus, t.l(), t.m());
    if (format == "json") {
        json candidates = json::array();
        for (const auto& c : lower_bound_candidates(t.genus, t.l(), t.m())) {
            candidates.push_back({{"value", c.value.get_str()}, {"case", c.which}, {"k", c.k},
                                  {"bends", c.bends}, {"swapped", c.swapped}});
        }
        out << json{{"lower_bound", best.value.get_str()}, {"case", best.which}, {"k", best.k},
                    {"bends", best.bends}, {"swapped", best.swapped}, {"candidates", candidates}}.dump()
            << "\n";
    } else {
        out << best.value.get_str() << "\n";
    }
    return kExitOk;
}

int cmd_covers(const TypeArgs& t, const std::string& format, bool dot, bool zigzag_only, const SignArgs& s,
               const SearchLimits& limits, std::ostream& out) {
    const Partition l = t.l(), m = t.m();
    const auto covers = zigzag_only ? enumerate_zigzag_covers(t.genus, l, m, limits)
                                    : enumerate_covers(t.genus, l, m, limits);
    std::optional<SignSplitting> split;
    if (s.given()) {
        require_admissible(l, m, t.genus);
        split = s.resolve(simple_branch_count(l, m, t.genus));
    }
    const bool admissible = !excluded_configuration(l, m, t.genus);
    if (dot) {
        for (std::size_t i = 0; i < covers.size(); ++i) out << cover_dot(covers[i], "cover" + std::to_string(i));
        return kExitOk;
    }
    if (format == "csv") {
        out << "index,encoding,aut,mult_complex,zigzag";
        if (split) out << ",colourings,mult_real";
        out << "\n";
        for (std::size_t i = 0; i < covers.size(); ++i) {
            const auto& c = covers[i];
            out << i << ',' << c.encoding() << ',' << automorphism_count(c).get_str() << ','
                << mult_complex(c).fraction_str() << ',' << (admissible ? (is_zigzag(c) ? "1" : "0") : "");
            if (split) {
                BigInt total = 0;
                const auto rhos = enumerate_colourings(c, *split);
                for (const auto& rho : rhos) total += mult_real(c, rho);
                out << ',' << rhos.size() << ',' << total.get_str();
            }
            out << "\n";
        }
        return kExitOk;
    }
    if (format == "json") {
        json list = json::array();
        for (const auto& c : covers) {
            json j = cover_json(c);
            if (admissible) j["zigzag"] = is_zigzag(c);
            if (split) {
                json rhos = json::array();
                for (const auto& rho : enumerate_colourings(c, *split)) rhos.push_back(colouring_json(c, rho));
                j["colourings"] = rhos;
            }
            list.push_back(j);
        }
        out << list.dump(2) << "\n";
        return kExitOk;
    }
    for (const auto& c : covers) {
        out << cover_record(c);
        if (split) {
            for (const auto& rho : enumerate_colourings(c, *split)) out << colouring_record(c, rho);
        }
    }
    return kExitOk;
}

std::string sweep_text(const SweepResult& result) {
    std::ostringstream os;
    os << "variant " << variant_name(result.variant) << "\n";
    for (const auto& row : result.rows) {
        os << "m " << row.m << "  z " << row.z.get_str() << "  z' " << row.z_prime.get_str() << "  z'' "
           << row.z_dblprime.get_str() << "  h " << row.h_complex << "  h' " << row.h_prime << "  h'' "
           << row.h_dblprime << "  bound " << (row.lower_bound ? row.lower_bound->get_str() : "-") << "\n";
    }
    return os.str();
}

int cmd_sweep(const TypeArgs& t, int m_max, const std::string& variant, const std::string& format, bool timing,
              const SearchLimits& limits, std::ostream& out, std::ostream& err) {
    const SweepResult result = sweep(t.genus, t.l(), t.m(), m_max, parse_variant(variant), limits);
    const auto problems = sweep_violations(result);
    if (format == "json") {
        json rows = json::array();
        for (const auto& row : result.rows) {
            json j{{"m", row.m}, {"z", row.z.get_str()}, {"z_prime", row.z_prime.get_str()},
                   {"z_dblprime", row.z_dblprime.get_str()}, {"h_complex", json_rational(row.h_complex)},
                   {"h_prime", json_rational(row.h_prime)}, {"h_dblprime", json_rational(row.h_dblprime)},
                   {"lower_bound", row.lower_bound ? json(row.lower_bound->get_str()) : json(nullptr)}};
            if (timing) j["runtime_ms"] = row.runtime_ms;
            rows.push_back(j);
        }
        json doc{{"variant", variant_name(result.variant)}, {"exponent", variant_exponent(result.variant)},
                 {"rows", rows}, {"m0", result.m0 ? json(*result.m0) : json(nullptr)},
                 {"truncated", result.truncated ? json(*result.truncated) : json(nullptr)},
                 {"violations", problems}};
        out << doc.dump(2) << "\n";
    } else {
        out << (format == "text" ? sweep_text(result) : sweep_csv(result, timing));
        if (result.m0) out << "# m0 " << *result.m0 << " exponent " << variant_exponent(result.variant) << "\n";
        if (result.truncated && format == "text") out << "# truncated: " << *result.truncated << "\n";
    }
    for (const auto& p : problems) err << "invariant violated: " << p << "\n";
    if (!problems.empty()) return kExitViolation;
    if (result.truncated) {
        err << "cap exceeded: " << *result.truncated << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_audit(const AuditRange& range, const SearchLimits& limits, const std::string& format, std::ostream& out) {
    const AuditReport report = run_audit(range, limits);
    if (format == "json") {
        json checks = json::array();
        for (const auto& c : report.checks) {
            checks.push_back({{"name", c.name}, {"cases", c.cases}, {"failures", c.failures},
                              {"samples", c.samples}, {"passed", c.passed()}});
        }
        out << json{{"checks", checks}, {"observations", report.observations}, {"passed", report.passed()}}.dump(2)
            << "\n";
    } else {
        for (const auto& c : report.checks) {
            out << (c.passed() ? "PASS " : "FAIL ") << c.name << " [" << c.cases << " cases";
            if (!c.passed()) out << ", " << c.failures << " failures";
            out << "]\n";
            for (const auto& s : c.samples) out << "  " << s << "\n";
        }
        for (const auto& o : report.observations) out << "NOTE " << o << "\n";
    }
    return report.passed() ? kExitOk : kExitViolation;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact complex, real and zigzag double Hurwitz numbers via tropical covers", "hurwitz"};
    app.require_subcommand(1);

    Caps caps;
    app.add_option("--max-degree", caps.max_degree, "cap on the degree d")->envname("MAX_DEGREE");
    app.add_option("--max-branch-points", caps.max_branch_points, "cap on r")->envname("MAX_BRANCH_POINTS");

    TypeArgs type;
    SignArgs signs;
    std::string format = "text";
    const auto formats = CLI::IsMember({"text", "json", "csv"}, CLI::ignore_case);

    auto* complex = app.add_subcommand("complex", "H^C_g(lambda, mu)");
    add_type(complex, type);
    complex->add_option("--format", format)->check(formats);

    auto* real = app.add_subcommand("real", "H^R_g(lambda, mu) for a sign splitting");
    bool verify = false;
    add_type(real, type);
    add_signs(real, signs);
    real->add_flag("--verify", verify, "check Z <= H^R <= H^C and the parities");
    real->add_option("--format", format)->check(formats);

    auto* zigzag = app.add_subcommand("zigzag", "number of zigzag covers Z_g(lambda, mu)");
    bool enumerate = false, witness = false;
    add_type(zigzag, type);
    zigzag->add_flag("--enumerate", enumerate, "cross-check against explicit enumeration");
    zigzag->add_flag("--witness", witness, "print one zigzag cover instead of the count");
    zigzag->add_option("--format", format)->check(formats);

    auto* exists = app.add_subcommand("exists", "whether a zigzag cover exists");
    add_type(exists, type);

    auto* bound = app.add_subcommand("bound", "lower bound for Z_g(lambda, mu)");
    add_type(bound, type);
    bound->add_option("--format", format)->check(formats);

    auto* bends_cmd = app.add_subcommand("bends", "Bends(k, lambda, mu)");
    long k = 1;
    bends_cmd->add_option("-k,--k", k, "odd starting value")->required();
    add_type(bends_cmd, type, false);

    auto* oracle_cmd = app.add_subcommand("oracle", "H^C by counting monodromy tuples in S_d");
    add_type(oracle_cmd, type);

    auto* covers = app.add_subcommand("covers", "list tropical covers");
    bool dot = false, zigzag_only = false;
    add_type(covers, type);
    covers->add_option("--format", format)->check(formats);
    covers->add_flag("--dot", dot, "Graphviz output");
    covers->add_flag("--zigzag-only", zigzag_only, "only zigzag covers");
    add_signs(covers, signs);

    auto* sweep_cmd = app.add_subcommand("sweep", "table of z(m), h(m) and the lower bound for m = 0..m_max");
    int m_max = 3;
    std::string variant = "ones";
    bool timing = false;
    add_type(sweep_cmd, type);
    sweep_cmd->add_option("--m-max", m_max, "largest m")->check(CLI::NonNegativeNumber);
    sweep_cmd->add_option("--variant", variant, "ones, mixed or twos");
    sweep_cmd->add_option("--format", format)->check(formats);
    sweep_cmd->add_flag("--timing", timing, "fill the runtime_ms column");

    auto* audit = app.add_subcommand("audit", "run the invariant suite over a range of types");
    AuditRange range;
    audit->add_option("--degree", range.max_degree, "largest degree")->check(CLI::PositiveNumber);
    audit->add_option("--branch-points", range.max_branch_points, "largest r")->check(CLI::PositiveNumber);
    audit->add_option("--format", format)->check(formats);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }
    format = lower_case(format);

    try {
        const SearchLimits limits = caps.resolve(SearchLimits{});
        if (complex->parsed()) return cmd_complex(type, limits, format, out);
        if (real->parsed()) return cmd_real(type, signs, verify, limits, format, out, err);
        if (zigzag->parsed()) return cmd_zigzag(type, enumerate, witness, limits, format, out, err);
        if (exists->parsed()) {
            out << (zigzag_exists(type.genus, type.l(), type.m()) ? "true" : "false") << "\n";
            return kExitOk;
        }
        if (bound->parsed()) return cmd_bound(type, format, out);
        if (bends_cmd->parsed()) {
            out << bends(k, type.l(), type.m()) << "\n";
            return kExitOk;
        }
        if (oracle_cmd->parsed()) {
            out << oracle::monodromy_count(type.genus, type.l(), type.m(), caps.resolve(oracle::kDefaultLimits))
                << "\n";
            return kExitOk;
        }
        if (covers->parsed()) return cmd_covers(type, format, dot, zigzag_only, signs, limits, out);
        if (sweep_cmd->parsed()) {
            return cmd_sweep(type, m_max, variant, format == "text" && !sweep_cmd->count("--format") ? "csv" : format,
                             timing, limits, out, err);
        }
        if (audit->parsed()) return cmd_audit(range, caps.resolve(oracle::kDefaultLimits), format, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return kExitUsage;
    } catch (const WeightMismatch& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ExcludedConfiguration& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const HypothesisViolated& e) {
        err << "hypothesis violated: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitUsage;
}

}  // namespace hurwitz::cli
