// cardmat: exact-arithmetic toolkit for cardinality-constrained matroid
// polytopes over file-based instances. Every subcommand prints one JSON
// document; all numerics on the wire are rational strings.

#include "cardmat/cutting_plane.hpp"
#include "cardmat/errors.hpp"
#include "cardmat/facets.hpp"
#include "cardmat/io.hpp"
#include "cardmat/separation.hpp"
#include "cardmat/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using cardmat::Json;

struct Limits {
    std::size_t enumeration = cardmat::kDefaultEnumerationLimit;
    std::size_t bruteforce = cardmat::kDefaultBruteforceLimit;
    std::size_t bipartition = cardmat::kDefaultBipartitionLimit;
};

Limits limits_from_env() {
    Limits limits;
    if (const char* raw = std::getenv("CARDMAT_SIZE_LIMIT")) {
        char* end = nullptr;
        unsigned long value = std::strtoul(raw, &end, 10);
        if (end == raw || *end != '\0')
            cardmat::fail("parse-error", "CARDMAT_SIZE_LIMIT must be a nonnegative integer");
        limits.enumeration = limits.bruteforce = limits.bipartition =
            static_cast<std::size_t>(value);
    }
    return limits;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    for (char ch : text) {
        if (ch == ',') {
            out.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    out.push_back(current);
    return out;
}

cardmat::CardinalitySequence parse_sequence(const std::string& text) {
    std::vector<std::size_t> values;
    for (const auto& part : split_csv(text)) {
        try {
            values.push_back(static_cast<std::size_t>(std::stoul(part)));
        } catch (const std::exception&) {
            cardmat::fail("parse-error", "malformed cardinality '" + part + "'");
        }
    }
    return cardmat::CardinalitySequence(std::move(values));
}

cardmat::Subset parse_subset(const std::string& text, std::size_t n) {
    std::vector<int> indices;
    for (const auto& part : split_csv(text)) {
        try {
            indices.push_back(std::stoi(part));
        } catch (const std::exception&) {
            cardmat::fail("parse-error", "malformed element index '" + part + "'");
        }
    }
    return cardmat::Subset::from_indices(indices, n);
}

cardmat::RationalVector parse_rationals(const std::string& text, std::size_t n) {
    cardmat::RationalVector out;
    for (const auto& part : split_csv(text)) out.push_back(cardmat::Rational::parse(part));
    if (out.size() != n)
        cardmat::fail("parse-error", "expected " + std::to_string(n) + " entries, got " +
                                         std::to_string(out.size()));
    return out;
}

void emit(const Json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) cardmat::fail("parse-error", "cannot open output file '" + out_path + "'");
    out << doc.dump(2) << "\n";
}

struct Options {
    std::string instance;
    std::string instance2;
    std::string c_text;
    std::string weights_text;
    std::string point_text;
    std::string subset_text;
    std::size_t k = 0;
    std::size_t trials = 200;
    std::uint64_t seed = 0;
    std::string mode;
    std::string out;
};

cardmat::MatroidInstance load_instance(const std::string& path) {
    if (path.empty()) cardmat::fail("parse-error", "--instance is required");
    auto m = cardmat::load_matroid_file(path);
    m.validate();
    return m;
}

int run_rank(const Options& opt, const Limits&) {
    auto m = load_instance(opt.instance);
    auto f = parse_subset(opt.subset_text, m.size());
    Json doc;
    doc["rank"] = std::to_string(m.rank(f));
    emit(doc, opt.out);
    return 0;
}

int run_optimize(const Options& opt, const Limits&) {
    auto m = load_instance(opt.instance);
    auto c = parse_sequence(opt.c_text);
    auto w = parse_rationals(opt.weights_text, m.size());
    auto result = cardmat::optimize_chs(m, w, c);
    Json doc;
    doc["set"] = cardmat::subset_to_json(result.set);
    doc["value"] = result.value.str();
    emit(doc, opt.out);
    return 0;
}

int run_enumerate(const Options& opt, const Limits& limits) {
    auto m = load_instance(opt.instance);
    auto c = parse_sequence(opt.c_text);
    auto sets = cardmat::enumerate_feasible(m, c, limits.enumeration);
    Json doc;
    doc["count"] = sets.size();
    Json arr = Json::array();
    for (const auto& s : sets) arr.push_back(cardmat::subset_to_json(s));
    doc["sets"] = std::move(arr);
    emit(doc, opt.out);
    return 0;
}

int run_build_cut(const Options& opt, const Limits&) {
    auto m = load_instance(opt.instance);
    auto f = parse_subset(opt.subset_text, m.size());
    cardmat::LinearInequality cut;
    if (opt.mode == "rank") {
        cut = cardmat::build_rank_ineq(m, f);
    } else if (opt.mode == "fs") {
        cut = cardmat::build_fs(m, f, parse_sequence(opt.c_text));
    } else {
        cardmat::fail("parse-error", "--mode must be rank or fs");
    }
    emit(cardmat::inequality_to_json(cut), opt.out);
    return 0;
}

int run_facet(const Options& opt, const Limits& limits) {
    auto m = load_instance(opt.instance);
    Json doc;
    if (opt.k > 0) {
        std::optional<cardmat::Subset> f;
        if (!opt.subset_text.empty()) f = parse_subset(opt.subset_text, m.size());
        auto verdict = cardmat::single_k_predicates(m, f, opt.k, limits.bipartition);
        doc["k"] = verdict.k;
        doc["full_dimension"] = verdict.full_dimension;
        doc["rank_ineq_facet"] =
            verdict.rank_ineq_facet ? Json(*verdict.rank_ineq_facet) : Json(nullptr);
        emit(doc, opt.out);
        return 0;
    }

    auto c = parse_sequence(opt.c_text);
    auto f = parse_subset(opt.subset_text, m.size());
    bool fs_applicable = c.size() >= 2 && c.gap_level(m.rank(f)).has_value();
    if (opt.mode == "oracle") {
        doc["rank"] = cardmat::facet_verdict_to_json(
            cardmat::facet_oracle(m, c, cardmat::build_rank_ineq(m, f), limits.enumeration));
        doc["fs"] = fs_applicable
                        ? cardmat::facet_verdict_to_json(cardmat::facet_oracle(
                              m, c, cardmat::build_fs(m, f, c), limits.enumeration))
                        : Json(nullptr);
    } else if (opt.mode == "theorem") {
        Json rank_part;
        rank_part["is_facet"] = cardmat::rank_facet_verdict(m, f, c, limits.bipartition);
        doc["rank"] = std::move(rank_part);
        if (fs_applicable) {
            auto v = cardmat::fs_facet_verdict(m, f, c, limits.bipartition, limits.enumeration);
            Json fs_part;
            fs_part["is_facet"] = v.is_facet;
            fs_part["clause"] = std::string(1, v.clause);
            fs_part["used_enumeration_fallback"] = v.used_enumeration_fallback;
            doc["fs"] = std::move(fs_part);
        } else {
            doc["fs"] = Json(nullptr);
        }
    } else {
        cardmat::fail("parse-error", "--mode must be oracle or theorem");
    }
    emit(doc, opt.out);
    return 0;
}

int run_separate(const Options& opt, const Limits&) {
    auto m = load_instance(opt.instance);
    auto c = parse_sequence(opt.c_text);
    auto x = parse_rationals(opt.point_text, m.size());
    auto outcome = cardmat::separate_point(m, x, c);
    emit(cardmat::outcome_to_json(outcome), opt.out);
    return outcome.violated() ? 3 : 0;
}

int run_lp(const Options& opt, const Limits& limits) {
    auto m = load_instance(opt.instance);
    auto c = parse_sequence(opt.c_text);
    auto w = parse_rationals(opt.weights_text, m.size());
    Json doc;
    if (opt.mode.empty() || opt.mode == "cutting-plane") {
        auto result = cardmat::cutting_plane_optimize(m, c, w);
        doc["point"] = cardmat::point_to_json(result.point);
        doc["value"] = result.value.str();
        doc["cuts"] = result.cuts.size();
        doc["iterations"] = result.iterations;
    } else if (opt.mode == "full-system") {
        auto sys = cardmat::build_full_system(m, c, true, limits.enumeration);
        auto sol = cardmat::simplex_max(sys, w);
        doc["point"] = cardmat::point_to_json(sol.point);
        doc["value"] = sol.value.str();
        doc["rows"] = sys.rows.size();
    } else {
        cardmat::fail("parse-error", "--mode must be cutting-plane or full-system");
    }
    emit(doc, opt.out);
    return 0;
}

int run_verify(const Options& opt, const Limits& limits) {
    auto m = load_instance(opt.instance);
    auto c = parse_sequence(opt.c_text);
    bool include_fs = true;
    if (opt.mode == "no-fs") include_fs = false;
    else if (!opt.mode.empty() && opt.mode != "full")
        cardmat::fail("parse-error", "--mode must be full or no-fs");
    auto report = cardmat::verify_completeness(m, c, opt.trials, opt.seed, opt.instance,
                                               include_fs, limits.enumeration);
    emit(cardmat::verification_report_to_json(report), opt.out);
    return 0;
}

int run_probe(const Options& opt, const Limits& limits) {
    auto m1 = load_instance(opt.instance);
    if (opt.instance2.empty()) cardmat::fail("parse-error", "--instance2 is required");
    auto m2 = load_instance(opt.instance2);
    auto c = parse_sequence(opt.c_text);
    auto report = cardmat::probe_intersection_conjecture(m1, m2, c, opt.trials, opt.seed,
                                                         limits.enumeration);
    emit(cardmat::intersection_report_to_json(report), opt.out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cardinality-constrained matroid polytopes: exact construction, "
                 "classification, separation and verification"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool needs_c) {
        sub->add_option("--instance", opt.instance, "matroid instance JSON file");
        sub->add_option("--out", opt.out, "write the JSON document to this file");
        if (needs_c) sub->add_option("--c", opt.c_text, "cardinality sequence, e.g. 1,3");
        return sub;
    };

    auto* rank = add_common(app.add_subcommand("rank", "rank of a subset"), false);
    rank->add_option("--subset", opt.subset_text)->required();

    auto* optimize =
        add_common(app.add_subcommand("optimize", "greedy optimum over the sequence"), true);
    optimize->add_option("--weights", opt.weights_text)->required();

    add_common(app.add_subcommand("enumerate", "vertices of the polytope"), true);

    auto* build_cut = add_common(
        app.add_subcommand("build-cut", "rank or forbidden-set inequality for a subset"), true);
    build_cut->add_option("--subset", opt.subset_text)->required();
    build_cut->add_option("--mode", opt.mode, "rank | fs")->required();

    auto* facet = add_common(
        app.add_subcommand("facet", "facet classification (oracle or theorem form)"), true);
    facet->add_option("--subset", opt.subset_text);
    facet->add_option("--mode", opt.mode, "oracle | theorem");
    facet->add_option("--k", opt.k, "single-cardinality analysis at this k");

    auto* separate =
        add_common(app.add_subcommand("separate", "separate a point from the polytope"), true);
    separate->add_option("--point", opt.point_text)->required();

    auto* lp = add_common(app.add_subcommand("lp", "optimize over the polytope by LP"), true);
    lp->add_option("--weights", opt.weights_text)->required();
    lp->add_option("--mode", opt.mode, "cutting-plane | full-system");

    auto* verify = add_common(
        app.add_subcommand("verify", "randomized completeness check of the description"), true);
    verify->add_option("--trials", opt.trials);
    verify->add_option("--seed", opt.seed);
    verify->add_option("--mode", opt.mode, "full | no-fs");

    auto* probe = add_common(
        app.add_subcommand("probe-intersection", "probe the intersection conjecture"), true);
    probe->add_option("--instance2", opt.instance2, "second matroid instance JSON file");
    probe->add_option("--trials", opt.trials);
    probe->add_option("--seed", opt.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        Limits limits = limits_from_env();
        if (rank->parsed()) return run_rank(opt, limits);
        if (optimize->parsed()) return run_optimize(opt, limits);
        if (app.get_subcommand("enumerate")->parsed()) return run_enumerate(opt, limits);
        if (build_cut->parsed()) return run_build_cut(opt, limits);
        if (facet->parsed()) return run_facet(opt, limits);
        if (separate->parsed()) return run_separate(opt, limits);
        if (lp->parsed()) return run_lp(opt, limits);
        if (verify->parsed()) return run_verify(opt, limits);
        if (probe->parsed()) return run_probe(opt, limits);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const cardmat::Error& e) {
        Json doc;
        doc["error"] = {{"code", e.code()}, {"message", e.what()}};
        std::cout << doc.dump(2) << "\n";
        return e.code() == "parse-error" ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
}
