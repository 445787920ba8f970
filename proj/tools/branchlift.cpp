// Command-line surface for the lifting decisions: every subcommand reads a
// cover (inline tuple, JSON file, or curve string), prints schema-stable
// JSON (or --table text), and exits 0 for an affirmative verdict, 3 for a
// negative one, 1 on input errors, 2 on internal invariant breaches.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "branchlift/branchlift.hpp"
#include "branchlift/json_io.hpp"

namespace {

using nlohmann::json;
using namespace branchlift;

constexpr int kExitYes = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;
constexpr int kExitNo = 3;

std::int64_t aut_bound_from_env() {
    const char* env = std::getenv("BRANCHLIFT_MAX_AUT");
    if (!env) return kDefaultMaxAutOrder;
    try {
        std::size_t used = 0;
        std::int64_t v = std::stoll(env, &used);
        if (used != std::string(env).size() || v < 1) throw std::invalid_argument("range");
        return v;
    } catch (const std::exception&) {
        throw Error("BRANCHLIFT_MAX_AUT must be a positive integer, got \"" + std::string(env) + "\"");
    }
}

struct CoverInput {
    std::int64_t group = 0;                // --group N  (Z/N)
    std::vector<std::int64_t> factors;     // --factors 2,4
    std::vector<std::string> tuple;        // --tuple entries
    std::string cover_file;                // --cover-file path
};

void add_cover_options(CLI::App* cmd, CoverInput& in) {
    auto* group = cmd->add_option("--group", in.group, "cyclic deck group Z/N");
    auto* factors = cmd->add_option("--factors", in.factors,
                                    "invariant factors of a non-cyclic deck group, e.g. 2,4")
                        ->delimiter(',');
    auto* tuple = cmd->add_option("--tuple", in.tuple,
                                  "branch tuple; cyclic: 1,1,3  non-cyclic: 1:0,0:1,1:1")
                      ->delimiter(',');
    auto* file = cmd->add_option("--cover-file", in.cover_file,
                                 "JSON file with {\"invariant_factors\":[...],\"tuple\":[[...],...]}")
                     ->check(CLI::ExistingFile);
    group->excludes(factors)->excludes(file);
    factors->excludes(file);
    tuple->excludes(file);
}

std::vector<std::int64_t> parse_coeffs(const std::string& entry) {
    std::vector<std::int64_t> out;
    std::stringstream ss(entry);
    std::string part;
    while (std::getline(ss, part, ':')) {
        std::size_t used = 0;
        out.push_back(std::stoll(part, &used));
        if (used != part.size()) throw Error("bad tuple entry \"" + entry + "\"");
    }
    if (out.empty()) throw Error("empty tuple entry");
    return out;
}

CoverSpec resolve_cover(const CoverInput& in) {
    if (!in.cover_file.empty()) {
        std::ifstream f(in.cover_file);
        if (!f) throw Error("cannot open " + in.cover_file);
        json j;
        f >> j;
        return cover_from_json(j);
    }
    if (in.group == 0 && in.factors.empty())
        throw Error("no cover given: use --group/--factors with --tuple, or --cover-file");
    if (in.tuple.empty()) throw Error("missing --tuple");
    GroupSpec g(in.factors.empty() ? std::vector<std::int64_t>{in.group} : in.factors);
    std::vector<GroupElement> tuple;
    for (const auto& entry : in.tuple) tuple.push_back(g.element(parse_coeffs(entry)));
    return CoverSpec(std::move(g), std::move(tuple));
}

void emit(const json& j, bool table, const std::string& table_text) {
    if (table)
        std::cout << table_text;
    else
        std::cout << j.dump(2) << "\n";
}

std::string witness_table_text(const GroupSpec& g, const Automorphism& psi) {
    if (g.is_cyclic()) return "u=" + std::to_string(psi.images[0].coeffs[0]);
    std::string out = "images ";
    out += tuple_string(g, psi.images);
    return out;
}

// branchlift lifts
int cmd_lifts(const CoverInput& in, const std::string& perm, int orientation, bool verify,
              bool table, std::int64_t max_aut) {
    CoverSpec c = resolve_cover(in);
    MappingClass mc(Permutation::parse_cycles(perm, c.k()), orientation);
    LiftDecision d = lifts(c, mc, max_aut);

    json out{{"lifts", d.lifts}, {"witness", nullptr}, {"oracle_agrees", nullptr}};
    std::string text = std::string("lifts: ") + (d.lifts ? "yes" : "no") + "\n";
    if (d.witness) {
        out["witness"] = witness_to_json(*d.witness);
        text += "witness: " + witness_table_text(c.group(), *d.witness) + "\n";
    }
    bool oracle_mismatch = false;
    if (verify) {
        bool oracle = lifts_homology_oracle(c, mc);
        out["oracle_agrees"] = oracle == d.lifts;
        text += std::string("oracle_agrees: ") + (oracle == d.lifts ? "yes" : "no") + "\n";
        oracle_mismatch = oracle != d.lifts;
    }
    emit(out, table, text);
    if (oracle_mismatch) {
        std::cerr << "internal error: homology oracle disagrees with the witness search\n";
        return kExitInternal;
    }
    return d.lifts ? kExitYes : kExitNo;
}

// branchlift check-all
int cmd_check_all(const CoverInput& in, const std::string& mode, bool table, std::int64_t max_aut) {
    CoverSpec c = resolve_cover(in);
    std::optional<bool> theorem, brute_adjacent, brute_full;

    if (mode == "theorem" || mode == "both") theorem = all_lift_theorem(c);
    if (mode == "brute" || mode == "both") {
        brute_adjacent = all_lift_bruteforce(c, BruteForceMode::Transpositions, max_aut);
        if (c.k() <= kDefaultMaxFullK)
            brute_full = all_lift_bruteforce(c, BruteForceMode::Full, max_aut);
    }

    std::vector<bool> got;
    for (auto v : {theorem, brute_adjacent, brute_full})
        if (v) got.push_back(*v);
    bool agree = true;
    for (bool v : got) agree = agree && v == got.front();
    bool verdict = got.front();

    auto opt_json = [](std::optional<bool> v) { return v ? json(*v) : json(nullptr); };
    json out{{"all_lift", verdict},
             {"mode", mode},
             {"verdicts",
              {{"theorem", opt_json(theorem)},
               {"brute_transpositions", opt_json(brute_adjacent)},
               {"brute_full", opt_json(brute_full)}}}};
    std::string text = std::string("all_lift: ") + (verdict ? "yes" : "no") + "\n";
    emit(out, table, text);

    if (!agree) {
        std::cerr << "internal error: verdict mismatch between modes; diagnostic dump:\n"
                  << out.dump(2) << "\n";
        return kExitInternal;
    }
    return verdict ? kExitYes : kExitNo;
}

// branchlift curve
int cmd_curve(const std::string& curve_text, const std::string& question, bool table,
              std::int64_t /*max_aut*/) {
    CurveSpec cv = parse_curve(curve_text);
    if (question == "cover") {
        CoverSpec c = to_cover(cv);
        json out = cover_to_json(c);
        out["infinity_branch"] = has_infinity_branch(cv);
        std::string text = "cover: " + tuple_string(c.group(), c.tuple()) + " over " +
                           group_string(c.group()) + "\ninfinity_branch: " +
                           (has_infinity_branch(cv) ? "yes" : "no") + "\n";
        emit(out, table, text);
        return kExitYes;
    }
    if (question == "genus") {
        SurfaceInvariants s = surface_invariants(to_cover(cv));
        std::string text = "genus: " + std::to_string(s.genus) + "\n";
        emit(invariants_to_json(s), table, text);
        return kExitYes;
    }
    // lift: the closed form for curves, cross-checked against the cyclic
    // criterion on the induced cover
    bool corollary = all_lift_corollary(cv);
    bool theorem = all_lift_theorem(to_cover(cv));
    json out{{"all_lift", corollary}, {"corollary", corollary}, {"theorem", theorem}};
    std::string text = std::string("all_lift: ") + (corollary ? "yes" : "no") + "\n";
    emit(out, table, text);
    if (corollary != theorem) {
        std::cerr << "internal error: curve criterion disagrees with the cyclic criterion\n";
        return kExitInternal;
    }
    return corollary ? kExitYes : kExitNo;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s, const char* what) {
    auto colon = s.find(':');
    try {
        if (colon == std::string::npos) {
            std::int64_t v = std::stoll(s);
            return {v, v};
        }
        return {std::stoll(s.substr(0, colon)), std::stoll(s.substr(colon + 1))};
    } catch (const std::exception&) {
        throw Error(std::string("bad ") + what + " range \"" + s + "\" (use N or LO:HI)");
    }
}

// branchlift classify
int cmd_classify(const std::string& n_spec, const std::string& k_spec,
                 const std::vector<std::int64_t>& factors, bool unlabeled, bool table,
                 std::int64_t max_aut) {
    auto [k_lo, k_hi] = parse_range(k_spec, "k");
    CensusReport report;
    if (!factors.empty()) {
        if (!n_spec.empty()) throw Error("--factors and --n are mutually exclusive");
        if (k_lo != k_hi) throw Error("ranged k needs a cyclic group (--n)");
        GroupSpec g(factors);
        report.unlabeled = unlabeled;
        auto rows = classify(g, static_cast<int>(k_lo), unlabeled, max_aut);
        CensusCellTotals totals{g, static_cast<int>(k_lo), static_cast<std::int64_t>(rows.size()), 0};
        for (const auto& row : rows)
            if (row.all_lift) ++totals.all_lift_classes;
        report.totals.push_back(std::move(totals));
        report.rows = std::move(rows);
    } else {
        if (n_spec.empty()) throw Error("classify needs --n (or --factors)");
        auto [n_lo, n_hi] = parse_range(n_spec, "n");
        report = census(n_lo, n_hi, static_cast<int>(k_lo), static_cast<int>(k_hi), unlabeled, max_aut);
    }
    emit(report_to_json(report), table, render_census_table(report));
    return kExitYes;
}

// branchlift genus
int cmd_genus(const CoverInput& in, bool table) {
    SurfaceInvariants s = surface_invariants(resolve_cover(in));
    std::string text = "euler_characteristic: " + std::to_string(s.euler_characteristic) +
                       "\ngenus: " + std::to_string(s.genus) +
                       "\nhyperbolic: " + (s.hyperbolic ? "yes" : "no") + "\n";
    emit(invariants_to_json(s), table, text);
    return kExitYes;
}

// branchlift smod
int cmd_smod(const CoverInput& in, bool table) {
    CoverSpec c = resolve_cover(in);
    bool iso = smod_iso(c);
    json out{{"smod_iso", iso}, {"hyperbolic", is_hyperbolic(c)}};
    std::string text = std::string("smod_iso: ") + (iso ? "yes" : "no") + "\n";
    emit(out, table, text);
    return iso ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decide which sphere homeomorphisms lift to a cyclic branched cover"};
    app.require_subcommand(1);
    app.fallthrough();  // --table / --json may follow the subcommand

    bool table = false;
    bool json_flag = false;
    app.add_flag("--table", table, "human-readable output instead of JSON");
    app.add_flag("--json", json_flag, "JSON output (the default)");

    CoverInput lifts_in, check_in, genus_in, smod_in;
    std::string perm = "id";
    std::string orientation = "+1";
    bool verify = false;
    auto* lifts_cmd = app.add_subcommand("lifts", "does the mapping class lift?");
    add_cover_options(lifts_cmd, lifts_in);
    lifts_cmd->add_option("--perm", perm, "permutation of branch points, cycle notation: \"(2 3)\" or id");
    lifts_cmd->add_option("--orientation", orientation, "+1 (preserving) or -1 (reversing)")
        ->check(CLI::IsMember({"+1", "1", "-1"}));
    lifts_cmd->add_flag("--verify", verify, "cross-check against the homology kernel oracle");

    std::string mode = "both";
    auto* check_cmd = app.add_subcommand("check-all", "does every homeomorphism lift?");
    add_cover_options(check_cmd, check_in);
    check_cmd->add_option("--mode", mode, "theorem | brute | both")
        ->check(CLI::IsMember({"theorem", "brute", "both"}));

    std::string curve_text, question = "lift";
    auto* curve_cmd = app.add_subcommand("curve", "superelliptic curve front end");
    curve_cmd->add_option("curve", curve_text, "e.g. \"y^5 = (x-0)(x-1)(x-2)^3\"")->required();
    curve_cmd->add_option("--question", question, "lift | cover | genus")
        ->check(CLI::IsMember({"lift", "cover", "genus"}));

    std::string n_spec, k_spec;
    std::vector<std::int64_t> classify_factors;
    bool unlabeled = false;
    auto* classify_cmd = app.add_subcommand("classify", "census of admissible tuples");
    classify_cmd->add_option("--n", n_spec, "cyclic modulus N or range LO:HI");
    classify_cmd->add_option("--k", k_spec, "branch points K or range LO:HI")->required();
    classify_cmd->add_option("--factors", classify_factors, "non-cyclic invariant factors")
        ->delimiter(',');
    classify_cmd->add_flag("--unlabeled", unlabeled, "also quotient by branch-point relabeling");

    auto* genus_cmd = app.add_subcommand("genus", "surface invariants of a cover");
    add_cover_options(genus_cmd, genus_in);

    auto* smod_cmd = app.add_subcommand("smod", "symmetric mapping class group criterion");
    add_cover_options(smod_cmd, smod_in);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        std::int64_t max_aut = aut_bound_from_env();
        int orient = (orientation == "-1") ? -1 : +1;
        if (app.got_subcommand(lifts_cmd))
            return cmd_lifts(lifts_in, perm, orient, verify, table, max_aut);
        if (app.got_subcommand(check_cmd)) return cmd_check_all(check_in, mode, table, max_aut);
        if (app.got_subcommand(curve_cmd)) return cmd_curve(curve_text, question, table, max_aut);
        if (app.got_subcommand(classify_cmd))
            return cmd_classify(n_spec, k_spec, classify_factors, unlabeled, table, max_aut);
        if (app.got_subcommand(genus_cmd)) return cmd_genus(genus_in, table);
        if (app.got_subcommand(smod_cmd)) return cmd_smod(smod_in, table);
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
