#include "cardmat/io.hpp"

#include "cardmat/errors.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace cardmat {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail("parse-error", what); }

std::vector<std::string> labels_from(const Json& j) {
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        for (const auto& entry : j.at("labels")) labels.push_back(entry.get<std::string>());
    }
    return labels;
}

std::vector<int> int_list(const Json& j) {
    std::vector<int> out;
    for (const auto& entry : j) out.push_back(entry.get<int>());
    return out;
}

} // namespace

MatroidInstance matroid_from_json(const Json& j) {
    try {
        const std::string kind = j.at("kind").get<std::string>();
        auto labels = labels_from(j);
        if (kind == "uniform") {
            return MatroidInstance::uniform(j.at("n").get<std::size_t>(),
                                            j.at("k").get<std::size_t>(), std::move(labels));
        }
        if (kind == "graphic") {
            std::vector<std::pair<int, int>> edges;
            for (const auto& edge : j.at("edges")) {
                auto ends = int_list(edge);
                if (ends.size() != 2) parse_fail("each edge needs two endpoints");
                edges.emplace_back(ends[0], ends[1]);
            }
            return MatroidInstance::graphic(j.at("vertices").get<std::size_t>(),
                                            std::move(edges), std::move(labels));
        }
        if (kind == "partition") {
            std::vector<std::vector<int>> blocks;
            int max_element = -1;
            for (const auto& block : j.at("blocks")) {
                blocks.push_back(int_list(block));
                for (int e : blocks.back()) max_element = std::max(max_element, e);
            }
            std::vector<std::size_t> capacities;
            for (const auto& cap : j.at("capacities"))
                capacities.push_back(cap.get<std::size_t>());
            std::size_t n = j.contains("n") ? j.at("n").get<std::size_t>()
                                            : static_cast<std::size_t>(max_element + 1);
            return MatroidInstance::partition(n, std::move(blocks), std::move(capacities),
                                              std::move(labels));
        }
        if (kind == "linear_gf2") {
            std::vector<std::string> columns;
            for (const auto& col : j.at("columns")) columns.push_back(col.get<std::string>());
            return MatroidInstance::linear_gf2(std::move(columns), std::move(labels));
        }
        if (kind == "explicit") {
            std::vector<std::vector<int>> maximal;
            for (const auto& set : j.at("maximal_independent")) maximal.push_back(int_list(set));
            return MatroidInstance::explicit_family(j.at("n").get<std::size_t>(),
                                                    std::move(maximal), std::move(labels));
        }
        if (kind == "free") {
            return MatroidInstance::free_matroid(j.at("n").get<std::size_t>(),
                                                 std::move(labels));
        }
        parse_fail("unknown matroid kind '" + kind + "'");
    } catch (const Json::exception& e) {
        parse_fail(std::string("malformed matroid document: ") + e.what());
    }
}

MatroidInstance load_matroid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("parse-error", "cannot open instance file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        fail("parse-error", std::string("invalid JSON in '") + path + "': " + e.what());
    }
    return matroid_from_json(j);
}

Subset subset_from_json(const Json& j, std::size_t n) {
    try {
        return Subset::from_indices(int_list(j), n);
    } catch (const Json::exception& e) {
        parse_fail(std::string("malformed subset: ") + e.what());
    }
}

Json subset_to_json(const Subset& s) { return Json(s.indices()); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    parse_fail("rationals must be strings like \"7/8\"");
}

Json rational_to_json(const Rational& r) { return Json(r.str()); }

Point point_from_json(const Json& j, std::size_t n) {
    if (!j.is_array() || j.size() != n)
        parse_fail("expected " + std::to_string(n) + " coordinates");
    Point p;
    p.reserve(n);
    for (const auto& entry : j) p.push_back(rational_from_json(entry));
    return p;
}

Json point_to_json(const Point& p) {
    Json out = Json::array();
    for (const auto& x : p) out.push_back(x.str());
    return out;
}

CardinalitySequence cardinality_from_json(const Json& j) {
    try {
        std::vector<std::size_t> values;
        for (const auto& entry : j) values.push_back(entry.get<std::size_t>());
        return CardinalitySequence(std::move(values));
    } catch (const Json::exception& e) {
        parse_fail(std::string("malformed cardinality sequence: ") + e.what());
    }
}

Json cardinality_to_json(const CardinalitySequence& c) { return Json(c.values()); }

namespace {

Json provenance_to_json(const Provenance& p) {
    Json out;
    switch (p.type) {
        case Provenance::Type::rank:
            out["type"] = "rank";
            break;
        case Provenance::Type::fs:
            out["type"] = "fs";
            if (p.level) out["p"] = *p.level;
            break;
        case Provenance::Type::lower_bound:
            out["type"] = "lower-bound";
            break;
        case Provenance::Type::upper_bound:
            out["type"] = "upper-bound";
            break;
        case Provenance::Type::nonneg:
            out["type"] = "nonneg";
            if (p.element) out["element"] = *p.element;
            break;
        case Provenance::Type::custom:
            out["type"] = "custom";
            break;
    }
    if (p.set) out["set"] = subset_to_json(*p.set);
    return out;
}

Provenance provenance_from_json(const Json& j, std::size_t n) {
    Provenance p;
    const std::string type = j.value("type", "custom");
    if (type == "rank") p.type = Provenance::Type::rank;
    else if (type == "fs") p.type = Provenance::Type::fs;
    else if (type == "lower-bound") p.type = Provenance::Type::lower_bound;
    else if (type == "upper-bound") p.type = Provenance::Type::upper_bound;
    else if (type == "nonneg") p.type = Provenance::Type::nonneg;
    else if (type == "custom") p.type = Provenance::Type::custom;
    else parse_fail("unknown provenance type '" + type + "'");
    if (j.contains("set")) p.set = subset_from_json(j.at("set"), n);
    if (j.contains("p")) p.level = j.at("p").get<std::size_t>();
    if (j.contains("element")) p.element = j.at("element").get<std::size_t>();
    return p;
}

} // namespace

LinearInequality inequality_from_json(const Json& j) {
    try {
        LinearInequality ineq;
        for (const auto& entry : j.at("coeffs")) ineq.coeffs.push_back(rational_from_json(entry));
        const std::string sense = j.at("sense").get<std::string>();
        if (sense == "<=") ineq.sense = Sense::le;
        else if (sense == ">=") ineq.sense = Sense::ge;
        else parse_fail("sense must be \"<=\" or \">=\"");
        ineq.rhs = rational_from_json(j.at("rhs"));
        if (j.contains("provenance"))
            ineq.provenance = provenance_from_json(j.at("provenance"), ineq.coeffs.size());
        return ineq;
    } catch (const Json::exception& e) {
        parse_fail(std::string("malformed inequality: ") + e.what());
    }
}

Json inequality_to_json(const LinearInequality& ineq) {
    Json out;
    out["coeffs"] = point_to_json(ineq.coeffs);
    out["sense"] = ineq.sense == Sense::le ? "<=" : ">=";
    out["rhs"] = ineq.rhs.str();
    out["provenance"] = provenance_to_json(ineq.provenance);
    return out;
}

Json certificate_to_json(const MinMaxCertificate& cert) {
    Json out;
    out["y"] = point_to_json(cert.y);
    Json decomposition = Json::array();
    for (const auto& [weight, set] : cert.decomposition) {
        Json member;
        member["weight"] = weight.str();
        member["set"] = subset_to_json(set);
        decomposition.push_back(std::move(member));
    }
    out["decomposition"] = std::move(decomposition);
    out["f_star"] = subset_to_json(cert.f_star);
    out["value"] = cert.value.str();
    return out;
}

Json outcome_to_json(const SeparationOutcome& outcome) {
    Json out;
    out["status"] = outcome.violated() ? "violated" : "inside";
    if (outcome.cut) out["cut"] = inequality_to_json(*outcome.cut);
    if (outcome.witness) out["witness"] = subset_to_json(*outcome.witness);
    if (outcome.violated()) out["violation"] = outcome.violation.str();
    if (outcome.delta) out["delta"] = outcome.delta->str();
    if (outcome.certificate) out["certificate"] = certificate_to_json(*outcome.certificate);
    return out;
}

Json facet_verdict_to_json(const FacetVerdict& v) {
    Json out;
    out["is_facet"] = v.is_facet;
    out["dim_face"] = v.dim_face;
    out["dim_polytope"] = v.dim_polytope;
    Json witness = Json::array();
    for (const auto& s : v.witness) witness.push_back(subset_to_json(s));
    out["witness"] = std::move(witness);
    return out;
}

namespace {

Json objective_to_json(const std::vector<long>& objective) {
    Json out = Json::array();
    for (long w : objective) out.push_back(Rational(w).str());
    return out;
}

} // namespace

Json verification_report_to_json(const VerificationReport& report) {
    Json out;
    out["instance"] = report.instance_id;
    out["trials"] = report.trials;
    out["seed"] = report.seed;
    out["passed"] = report.passed;
    // elapsed_seconds stays off the wire: identical inputs and seed must
    // yield byte-identical documents.
    Json failures = Json::array();
    for (const auto& f : report.failures) {
        Json entry;
        entry["trial"] = f.trial;
        entry["objective"] = objective_to_json(f.objective);
        entry["lp_value"] = f.lp_value.str();
        entry["combinatorial_value"] = f.combinatorial_value.str();
        entry["point"] = point_to_json(f.lp_point);
        failures.push_back(std::move(entry));
    }
    out["failures"] = std::move(failures);
    return out;
}

Json intersection_report_to_json(const IntersectionProbeReport& report) {
    Json out;
    out["trials"] = report.trials;
    out["seed"] = report.seed;
    out["counterexample_found"] = !report.candidates.empty();
    Json candidates = Json::array();
    for (const auto& cand : report.candidates) {
        Json entry;
        entry["trial"] = cand.trial;
        entry["objective"] = objective_to_json(cand.objective);
        entry["lp_value"] = cand.lp_value.str();
        entry["combinatorial_value"] = cand.combinatorial_value.str();
        entry["point"] = point_to_json(cand.lp_point);
        candidates.push_back(std::move(entry));
    }
    out["candidates"] = std::move(candidates);
    return out;
}

} // namespace cardmat
