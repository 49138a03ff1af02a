// Command-line front end: counting, enumeration, type decomposition, group
// inspection, series expansion, and the cross-module verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input.

#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubemagic/cone.hpp"
#include "cubemagic/enumerate.hpp"
#include "cubemagic/labelling.hpp"
#include "cubemagic/series.hpp"
#include "cubemagic/symmetry.hpp"
#include "cubemagic/verify.hpp"

namespace {

using json = nlohmann::json;
using namespace cubemagic;

json labelling_to_json(const EdgeLabelling& l) {
    json arr = json::array();
    for (int e = 1; e <= kNumEdges; ++e) arr.push_back(l.label(e));
    return arr;
}

json permutation_to_json(const EdgePermutation& u) {
    json arr = json::array();
    for (int e = 1; e <= kNumEdges; ++e) arr.push_back(u(e));
    return arr;
}

std::array<std::int64_t, 6> parse_ks(const std::string& s) {
    std::array<std::int64_t, 6> ks{};
    std::size_t pos = 0;
    for (int i = 0; i < 6; ++i) {
        std::size_t next = 0;
        long long v = std::stoll(s.substr(pos), &next);
        if (v < 0) throw std::invalid_argument("multiplicities must be nonnegative");
        ks[i] = v;
        pos += next;
        if (i < 5) {
            if (pos >= s.size() || s[pos] != ',')
                throw std::invalid_argument("expected 6 comma-separated multiplicities");
            ++pos;
        }
    }
    if (pos != s.size()) throw std::invalid_argument("expected exactly 6 multiplicities");
    return ks;
}

int run_count(Label sum, bool distinct) {
    json out;
    out["r"] = sum;
    out["total"] = count_by_type(sum).str();
    if (distinct) {
        CountReport rep = count_report(sum);
        out["distinct_raw"] = rep.distinct_raw.str();
        out["distinct_orbits"] = rep.distinct_orbits.str();
    }
    std::cout << out.dump() << '\n';
    return 0;
}

int run_enumerate(Label sum, bool distinct, bool canonical, const std::string& format) {
    const bool csv = format == "csv";
    json arr = json::array();
    for_each_by_type(sum, [&](const EdgeLabelling& l) {
        if ((distinct || canonical) && !is_distinct(l)) return;
        if (canonical && !(is_canonical_shape_i(l) || is_canonical_shape_ii(l))) return;
        if (csv)
            std::cout << to_csv(l) << '\n';
        else
            arr.push_back(labelling_to_json(l));
    });
    if (!csv) std::cout << arr.dump() << '\n';
    return 0;
}

int run_decompose(const std::string& labelling) {
    const EdgeLabelling l = labelling_from_csv(labelling);
    const TypeDecomposition d = classify(l);  // throws invalid_argument if not magic
    json out;
    out["type"] = std::string(to_string(d.tag));
    out["ks"] = d.ks;
    std::cout << out.dump() << '\n';
    return 0;
}

int run_compose(const std::string& type, const std::string& ks_str) {
    auto tag = type_tag_from_string(type);
    if (!tag) throw std::invalid_argument("unknown type tag: " + type);
    TypeDecomposition d;
    d.tag = *tag;
    d.ks = parse_ks(ks_str);
    const EdgeLabelling l = compose(d);
    json out;
    out["type"] = type;
    out["ks"] = d.ks;
    out["labelling"] = labelling_to_json(l);
    out["magic_sum"] = *magic_sum_of(l);
    std::cout << out.dump() << '\n';
    return 0;
}

int run_series(const std::string& target, int terms, const std::string& format) {
    RationalGF f;
    if (target == "G") f = closed_form_G();
    else if (target == "Gstar") f = closed_form_Gstar();
    else if (target == "F1") f = closed_form_F1_spec();
    else if (target == "F2") f = closed_form_F2_spec();
    else throw std::invalid_argument("unknown series target: " + target);

    const std::vector<BigInt> coeffs = expand(f, terms);
    if (format == "csv") {
        for (std::size_t r = 0; r < coeffs.size(); ++r)
            std::cout << r << ',' << coeffs[r].str() << '\n';
    } else {
        json out;
        out["target"] = target;
        out["form"] = f.to_string();
        json arr = json::array();
        for (const BigInt& v : coeffs) arr.push_back(v.str());
        out["coefficients"] = arr;
        std::cout << out.dump() << '\n';
    }
    return 0;
}

int run_group(const std::string& show, int edge) {
    const PermutationGroup& g = cube_group();
    json out;
    if (show == "elements") {
        out["size"] = g.size();
        json arr = json::array();
        for (const auto& u : g.elements) arr.push_back(cycle_notation(u));
        out["elements"] = arr;
        json imgs = json::array();
        for (const auto& u : g.elements) imgs.push_back(permutation_to_json(u));
        out["images"] = imgs;
    } else if (show == "orbits") {
        out["orbits"] = orbits(g);
    } else if (show == "stabilizer") {
        const PermutationGroup s = stabilizer(g, edge);
        out["edge"] = edge;
        out["size"] = s.size();
        json arr = json::array();
        for (const auto& u : s.elements) arr.push_back(cycle_notation(u));
        out["elements"] = arr;
        out["orbits"] = orbits(s);
    } else {
        throw std::invalid_argument("unknown group view: " + show);
    }
    std::cout << out.dump() << '\n';
    return 0;
}

int run_verify(const std::string& suite, Label max_sum) {
    std::vector<CheckResult> results;
    if (suite == "all") results = verify_all(max_sum);
    else if (suite == "cone") results = verify_cone(max_sum);
    else if (suite == "symmetry") results = verify_symmetry(max_sum);
    else if (suite == "series") results = verify_series(max_sum);
    else if (suite == "distinct") results = verify_distinct(max_sum);
    else throw std::invalid_argument("unknown suite: " + suite);

    for (const CheckResult& c : results) {
        std::cout << (c.passed ? "ok   " : "FAIL ") << c.name;
        if (!c.detail.empty()) std::cout << " -- " << c.detail;
        std::cout << '\n';
    }
    const bool ok = all_passed(results);
    std::cout << (ok ? "all checks passed" : "CHECKS FAILED") << " (" << results.size() << ")\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counting and classification of magic labellings of the cube"};
    app.require_subcommand(1);

    Label sum = 0;
    bool distinct = false, canonical = false;
    std::string format = "json", labelling, type, ks, target = "G", show = "elements",
                suite = "all";
    int terms = 20, edge = 1;
    Label max_sum = 8;

    auto* count = app.add_subcommand("count", "Count magic labellings with a given magic sum");
    count->add_option("--sum", sum, "magic sum r")->required()->check(CLI::NonNegativeNumber);
    count->add_flag("--distinct", distinct, "also count distinct labellings (raw and orbits)");

    auto* enumerate = app.add_subcommand("enumerate", "List magic labellings with a given magic sum");
    enumerate->add_option("--sum", sum, "magic sum r")->required()->check(CLI::NonNegativeNumber);
    enumerate->add_flag("--distinct", distinct, "only labellings with pairwise-distinct labels");
    enumerate->add_flag("--canonical", canonical, "only canonical orbit representatives (implies --distinct)");
    enumerate->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* decompose = app.add_subcommand("decompose", "Type decomposition of a magic labelling");
    decompose->add_option("--labelling", labelling, "12 comma-separated labels")->required();

    auto* compose_cmd = app.add_subcommand("compose", "Rebuild a labelling from type and multiplicities");
    compose_cmd->add_option("--type", type, "one of t1,t2,t31,t32,t33,t34,t351,t352")->required();
    compose_cmd->add_option("--ks", ks, "6 comma-separated multiplicities")->required();

    auto* series = app.add_subcommand("series", "Expand a generating function");
    series->add_option("--target", target, "G, Gstar, F1 or F2")->required();
    series->add_option("--terms", terms, "highest power of y")->required()->check(CLI::NonNegativeNumber);
    series->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* group = app.add_subcommand("group", "Inspect the edge-automorphism group");
    group->add_option("--show", show, "elements, orbits or stabilizer")->required();
    group->add_option("--edge", edge, "edge fixed by the stabilizer (default 1)")
        ->check(CLI::Range(1, 12));

    auto* verify = app.add_subcommand("verify", "Run cross-module verification suites");
    verify->add_option("--suite", suite, "all, cone, symmetry, series or distinct");
    verify->add_option("--max-sum", max_sum, "largest magic sum for exhaustive scans")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*count) return run_count(sum, distinct);
        if (*enumerate) return run_enumerate(sum, distinct, canonical, format);
        if (*decompose) return run_decompose(labelling);
        if (*compose_cmd) return run_compose(type, ks);
        if (*series) return run_series(target, terms, format);
        if (*group) return run_group(show, edge);
        if (*verify) return run_verify(suite, max_sum);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
