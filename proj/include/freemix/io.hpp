#pragma once

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "simulate.hpp"

namespace freemix {

using json = nlohmann::json;

// {"label": ..., "even_moments": ["1", "3/2", ...]}
inline json to_json(const moment_sequence& seq) {
    json entries = json::array();
    for (const auto& q : seq.even) entries.push_back(to_string(q));
    return json{{"label", seq.label}, {"even_moments", entries}};
}

inline moment_sequence moment_sequence_from_json(const json& j) {
    moment_sequence seq;
    seq.label = j.value("label", "");
    if (!j.contains("even_moments") || !j["even_moments"].is_array())
        throw std::invalid_argument("moment sequence JSON requires an \"even_moments\" array");
    for (const auto& entry : j["even_moments"])
        seq.even.push_back(parse_rational(entry.get<std::string>()));
    seq.variance_warning = !seq.unit_variance();
    return seq;
}

// {"label": ..., "moments": ["0", "1", ...]}
inline json to_json(const general_moment_sequence& seq) {
    json entries = json::array();
    for (const auto& q : seq.moments) entries.push_back(to_string(q));
    return json{{"label", seq.label}, {"moments", entries}};
}

inline general_moment_sequence general_moment_sequence_from_json(const json& j) {
    general_moment_sequence seq;
    seq.label = j.value("label", "");
    if (!j.contains("moments") || !j["moments"].is_array())
        throw std::invalid_argument("general moment sequence JSON requires a \"moments\" array");
    for (const auto& entry : j["moments"])
        seq.moments.push_back(parse_rational(entry.get<std::string>()));
    return seq;
}

// Blocks as arrays of 1-based integers, sorted by minimum.
inline json to_json(const set_partition& p) {
    json blocks = json::array();
    for (const auto& block : p.blocks()) blocks.push_back(block);
    return blocks;
}

// {"kind": "rademacher"} | {"kind": "gaussian", "sigma": "3/2"} |
// {"kind": "finite-atoms", "atoms": [["1","1/2"],["-1","1/2"]]}
inline distribution_spec distribution_spec_from_json(const json& j) {
    std::string kind = j.value("kind", "");
    if (kind == "rademacher") return distribution_spec::rademacher();
    if (kind == "gaussian")
        return distribution_spec::gaussian(parse_rational(j.value("sigma", "1")));
    if (kind == "finite-atoms") {
        std::vector<std::pair<bigrat, bigrat>> atoms;
        for (const auto& atom : j.at("atoms"))
            atoms.emplace_back(parse_rational(atom.at(0).get<std::string>()),
                               parse_rational(atom.at(1).get<std::string>()));
        return distribution_spec::finite_atoms(std::move(atoms));
    }
    throw std::invalid_argument("unknown distribution kind: \"" + kind + "\"");
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

inline json config_to_json(const sim_config& config) {
    json head;
    if (std::holds_alternative<int>(config.head))
        head = "zm:" + std::to_string(std::get<int>(config.head));
    else
        head = std::get<distribution_spec>(config.head).name();
    json tails = json::array();
    for (const auto& tail : config.tails) tails.push_back(tail.name());
    return json{{"scenario", to_string(config.scenario)},
                {"n", config.n},
                {"trials", config.trials},
                {"k_max", config.k_max},
                {"seed", config.seed},
                {"rel_tol", config.rel_tol},
                {"threads", config.threads},
                {"zm_m", config.zm_m},
                {"head", head},
                {"tails", tails}};
}

inline json to_json(const sim_report& report, bool with_timestamp = true) {
    json rows = json::array();
    for (const auto& row : report.rows)
        rows.push_back(json{{"k", row.k},
                            {"estimate", row.estimate},
                            {"se", row.se},
                            {"exact", row.exact},
                            {"rel_err", row.rel_err},
                            {"z", row.z},
                            {"verdict", row.pass ? "pass" : "fail"}});
    json exact = json::array();
    for (const auto& q : report.exact) exact.push_back(to_string(q));
    json out{{"config", config_to_json(report.config)},
             {"rows", rows},
             {"exact_values", exact},
             {"all_pass", report.all_pass()}};
    if (with_timestamp) {
        out["timestamp"] = static_cast<long long>(
            std::chrono::duration_cast<std::chrono::seconds>(
                std::chrono::system_clock::now().time_since_epoch())
                .count());
        out["wall_seconds"] = report.wall_seconds;
    }
    return out;
}

inline std::string to_csv(const sim_report& report) {
    std::ostringstream out;
    out << "k,estimate,se,exact,rel_err,z,verdict\n";
    out.precision(17);
    for (const auto& row : report.rows)
        out << row.k << ',' << row.estimate << ',' << row.se << ',' << row.exact << ','
            << row.rel_err << ',' << row.z << ',' << (row.pass ? "pass" : "fail") << '\n';
    return out.str();
}

}  // namespace freemix
