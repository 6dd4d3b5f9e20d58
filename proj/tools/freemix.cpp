// freemix: exact moments of orthogonally mixed distributions, non-crossing
// partition counts, identity verification, and Monte Carlo cross-checks.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>

#include "freemix/io.hpp"
#include "freemix/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw usage_error("cannot write to " + out_path);
    out << text;
}

freemix::partition_type parse_alpha(const std::string& text) {
    std::vector<long long> counts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) counts.push_back(std::stoll(item));
    if (counts.empty()) throw usage_error("empty type vector");
    try {
        return freemix::partition_type(std::move(counts));
    } catch (const std::invalid_argument& e) {
        throw usage_error(std::string("bad type vector \"") + text + "\": " + e.what());
    }
}

std::vector<freemix::partition_type> parse_alphas(const std::string& text) {
    std::vector<freemix::partition_type> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) out.push_back(parse_alpha(item));
    if (out.empty()) throw usage_error("empty type vector list");
    return out;
}

// zm:m | rademacher | gaussian[:sigma] | file:path
bool parse_zm(const std::string& spec, int& m) {
    if (spec.rfind("zm:", 0) != 0) return false;
    m = std::stoi(spec.substr(3));
    if (m < 0) throw usage_error("zm parameter must be nonnegative");
    return true;
}

freemix::distribution_spec parse_distribution(const std::string& spec) {
    if (spec == "rademacher") return freemix::distribution_spec::rademacher();
    if (spec == "gaussian") return freemix::distribution_spec::gaussian(1);
    if (spec.rfind("gaussian:", 0) == 0)
        return freemix::distribution_spec::gaussian(freemix::parse_rational(spec.substr(9)));
    if (spec.rfind("file:", 0) == 0)
        return freemix::distribution_spec_from_json(freemix::load_json_file(spec.substr(5)));
    throw usage_error("unknown distribution spec \"" + spec +
                      "\" (expected rademacher | gaussian[:sigma] | file:path)");
}

freemix::moment_sequence parse_moment_source(const std::string& spec, int k_max) {
    int m = 0;
    if (parse_zm(spec, m)) return freemix::zm_moments(m, k_max);
    std::string path;
    if (spec.rfind("file:", 0) == 0)
        path = spec.substr(5);
    else if (std::filesystem::exists(spec) && spec != "rademacher" && spec.rfind("gaussian", 0) != 0)
        path = spec;  // bare path form
    if (!path.empty()) {
        freemix::moment_sequence seq =
            freemix::moment_sequence_from_json(freemix::load_json_file(path));
        if (seq.max_k() < k_max)
            throw usage_error("moment file \"" + path + "\" supplies only " +
                              std::to_string(seq.max_k()) + " even moments, need " +
                              std::to_string(k_max));
        return seq;
    }
    return parse_distribution(spec).even_moments(k_max);
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        // "zm:2,rademacher" splits cleanly; gaussian sigmas carry no commas
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

int default_threads() {
    if (const char* env = std::getenv("FREEMIX_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    return 1;
}

// ---- moments ----------------------------------------------------------

int run_moments(const std::string& chain_text, const std::vector<std::string>& op_r_specs,
                int k_max, bool inductive_only, const std::string& format,
                const std::string& out_path) {
    using namespace freemix;
    std::ostringstream text;
    json out_json;

    if (!chain_text.empty()) {
        std::vector<std::string> items = split_commas(chain_text);
        if (items.empty()) throw usage_error("empty chain specification");
        int m = 0;
        if (!parse_zm(items.front(), m))
            throw usage_error("chain must start with a zm:<m> head, got \"" + items.front() + "\"");
        chain_spec chain;
        chain.m = m;
        for (size_t i = 1; i < items.size(); ++i)
            chain.tails.push_back(parse_moment_source(items[i], k_max));
        if (chain.s() > chain.m && !inductive_only)
            throw usage_error("closed form requires s <= m (s=" + std::to_string(chain.s()) +
                              ", m=" + std::to_string(chain.m) + "); pass --inductive-only");

        moment_sequence inductive = chain_moments_inductive(chain, k_max);
        std::optional<moment_sequence> closed;
        if (!inductive_only) closed = chain_moments_closed(chain, k_max);

        bool warn = inductive.variance_warning;
        json rows = json::array();
        text << std::left << std::setw(4) << "k" << std::setw(28) << "inductive";
        if (closed) text << std::setw(28) << "closed" << std::setw(7) << "agree";
        text << "value\n";
        bool all_agree = true;
        for (int k = 1; k <= k_max; ++k) {
            bigrat v = inductive.entry(k);
            bool agree = !closed || closed->entry(k) == v;
            all_agree = all_agree && agree;
            text << std::left << std::setw(4) << k << std::setw(28) << to_string(v);
            if (closed)
                text << std::setw(28) << to_string(closed->entry(k)) << std::setw(7)
                     << (agree ? "yes" : "NO");
            text << to_double(v) << "\n";
            json row{{"k", k}, {"inductive", to_string(v)}, {"value", to_double(v)}};
            if (closed) {
                row["closed"] = to_string(closed->entry(k));
                row["agree"] = agree;
            }
            rows.push_back(row);
        }
        if (warn) text << "warning: input variance differs from 1\n";
        out_json = json{{"command", "moments"},
                        {"mode", "chain"},
                        {"m", chain.m},
                        {"s", chain.s()},
                        {"k_max", k_max},
                        {"variance_warning", warn},
                        {"rows", rows}};
        if (format == "json") {
            emit(out_json.dump(2) + "\n", out_path);
        } else if (format == "csv") {
            std::ostringstream csv;
            csv << "k,inductive" << (closed ? ",closed,agree" : "") << ",value\n";
            csv.precision(17);
            for (int k = 1; k <= k_max; ++k) {
                csv << k << ',' << to_string(inductive.entry(k));
                if (closed)
                    csv << ',' << to_string(closed->entry(k)) << ','
                        << (closed->entry(k) == inductive.entry(k) ? "yes" : "no");
                csv << ',' << to_double(inductive.entry(k)) << '\n';
            }
            emit(csv.str(), out_path);
        } else {
            emit(text.str(), out_path);
        }
        return all_agree ? kExitPass : kExitCheckFailed;
    }

    if (op_r_specs.size() != 2) throw usage_error("--op-r takes exactly two moment sources");
    moment_sequence a = parse_moment_source(op_r_specs[0], k_max);
    moment_sequence b = parse_moment_source(op_r_specs[1], k_max);
    moment_sequence result = op_r(a, b, k_max);

    json rows = json::array();
    text << std::left << std::setw(4) << "k" << std::setw(28) << "exact" << "value\n";
    for (int k = 1; k <= k_max; ++k) {
        bigrat v = result.entry(k);
        text << std::left << std::setw(4) << k << std::setw(28) << to_string(v) << to_double(v)
             << "\n";
        rows.push_back(json{{"k", k}, {"exact", to_string(v)}, {"value", to_double(v)}});
    }
    if (result.variance_warning) text << "warning: input variance differs from 1\n";
    out_json = json{{"command", "moments"},
                    {"mode", "op_r"},
                    {"label", result.label},
                    {"k_max", k_max},
                    {"variance_warning", result.variance_warning},
                    {"rows", rows}};
    if (format == "json")
        emit(out_json.dump(2) + "\n", out_path);
    else if (format == "csv") {
        std::ostringstream csv;
        csv << "k,exact,value\n";
        csv.precision(17);
        for (int k = 1; k <= k_max; ++k)
            csv << k << ',' << to_string(result.entry(k)) << ',' << to_double(result.entry(k))
                << '\n';
        emit(csv.str(), out_path);
    } else {
        emit(text.str(), out_path);
    }
    return kExitPass;
}

// ---- count ------------------------------------------------------------

int run_count(const std::string& alpha_text, const std::string& alphas_text, int m, int c,
              bool brute, bool dump, const std::string& format, const std::string& out_path) {
    using namespace freemix;
    bigint closed;
    std::optional<bigint> enumerated;
    json out_json{{"command", "count"}};
    json dumped = json::array();

    if (!alpha_text.empty()) {
        partition_type alpha = parse_alpha(alpha_text);
        out_json["alpha"] = alpha.counts();
        if (m > 1) {
            closed = count_nc_scaled(alpha, m);
            out_json["m"] = m;
            if (brute) enumerated = count_nc_scaled_direct(alpha, m);
        } else {
            closed = count_nc_by_type(alpha);
            if (brute) enumerated = count_nc_by_type_direct(alpha);
            if (dump) {
                for_each_noncrossing(alpha.k(), [&](const set_partition& p) {
                    if (type_of(p) == alpha) dumped.push_back(to_json(p));
                });
            }
        }
    } else if (!alphas_text.empty()) {
        std::vector<partition_type> alphas = parse_alphas(alphas_text);
        if (m < static_cast<int>(alphas.size()))
            throw usage_error("--alphas requires --m >= number of type vectors");
        json ja = json::array();
        for (const auto& a : alphas) ja.push_back(a.counts());
        out_json["alphas"] = ja;
        out_json["m"] = m;
        if (c > 0) {
            out_json["c"] = c;
            closed = count_np_general_cgon(alphas, m, c);
            if (brute) enumerated = count_np_general_cgon_direct(alphas, m, c);
        } else {
            closed = count_np_general(alphas, m);
            if (brute) enumerated = count_np_general_direct(alphas, m);
        }
    } else {
        throw usage_error("count needs --alpha or --alphas");
    }

    out_json["closed_form"] = to_string(closed);
    bool agree = true;
    if (enumerated) {
        agree = *enumerated == closed;
        out_json["enumerated"] = to_string(*enumerated);
        out_json["agree"] = agree;
    }
    if (dump) out_json["partitions"] = dumped;

    if (format == "json") {
        emit(out_json.dump(2) + "\n", out_path);
    } else if (format == "csv") {
        std::ostringstream csv;
        csv << "closed_form" << (enumerated ? ",enumerated,agree" : "") << "\n";
        csv << to_string(closed);
        if (enumerated) csv << ',' << to_string(*enumerated) << ',' << (agree ? "yes" : "no");
        csv << '\n';
        emit(csv.str(), out_path);
    } else {
        std::ostringstream text;
        if (enumerated)
            text << to_string(closed) << " = " << to_string(*enumerated)
                 << (agree ? "" : "  MISMATCH") << "\n";
        else
            text << to_string(closed) << "\n";
        if (dump) text << dumped.dump() << "\n";
        emit(text.str(), out_path);
    }
    return agree ? kExitPass : kExitCheckFailed;
}

// ---- verify -----------------------------------------------------------

int run_verify(const std::string& suite, int k_cap, const std::string& format,
               const std::string& out_path) {
    using namespace freemix;
    std::vector<check_result> results = run_verification_suite(suite, k_cap);
    bool all_pass = true;
    std::ostringstream text;
    json checks = json::array();
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        if (r.pass)
            text << "ok   " << r.name << " (" << r.cases << " cases)\n";
        else
            text << "FAIL " << r.name << ": " << r.counterexample << "\n";
        checks.push_back(json{{"name", r.name},
                              {"pass", r.pass},
                              {"cases", r.cases},
                              {"counterexample", r.counterexample}});
    }
    text << (all_pass ? "all checks passed\n" : "verification FAILED\n");
    if (format == "json") {
        emit(json{{"command", "verify"}, {"suite", suite}, {"all_pass", all_pass}, {"checks", checks}}
                 .dump(2) +
                 "\n",
             out_path);
    } else {
        emit(text.str(), out_path);
    }
    return all_pass ? kExitPass : kExitCheckFailed;
}

// ---- simulate ---------------------------------------------------------

int run_simulate(freemix::sim_config config, const std::string& head_text,
                 const std::string& tail_text, bool no_timestamp, const std::string& format,
                 const std::string& out_path) {
    using namespace freemix;
    if (config.scenario == scenario_kind::drd_chain) {
        int m = 0;
        if (parse_zm(head_text, m))
            config.head = m;
        else
            config.head = parse_distribution(head_text);
        if (!tail_text.empty())
            for (const auto& item : split_commas(tail_text))
                config.tails.push_back(parse_distribution(item));
    }

    sim_report report = run_scenario(config);

    if (format == "csv") {
        emit(to_csv(report), out_path);
    } else if (format == "json") {
        emit(to_json(report, !no_timestamp).dump(2) + "\n", out_path);
    } else {
        std::ostringstream text;
        text << "scenario " << to_string(config.scenario) << "  n=" << config.n
             << "  trials=" << config.trials << "  seed=" << config.seed << "\n";
        text << std::left << std::setw(4) << "k" << std::setw(14) << "estimate" << std::setw(14)
             << "se" << std::setw(14) << "exact" << std::setw(13) << "rel_err" << std::setw(14)
             << "z" << "verdict\n";
        for (const auto& row : report.rows)
            text << std::left << std::setw(4) << row.k << std::setw(14) << row.estimate
                 << std::setw(14) << row.se << std::setw(14) << row.exact << std::setw(13)
                 << row.rel_err << std::setw(14) << row.z << (row.pass ? "pass" : "fail") << "\n";
        emit(text.str(), out_path);
    }
    return report.all_pass() ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact moments of orthogonally mixed distributions and their Monte Carlo checks"};
    app.require_subcommand(1);

    std::string format = "pretty";
    std::string out_path;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    // moments
    auto* moments = app.add_subcommand("moments", "exact moment tables for op_r and zm chains");
    moments->fallthrough();
    std::string chain_text;
    std::vector<std::string> op_r_specs;
    int k_max = 4;
    bool inductive_only = false;
    moments->add_option("--chain", chain_text, "zm:<m>[,tail...] chain specification");
    moments->add_option("--op-r", op_r_specs, "two moment sources to mix")->expected(2);
    moments->add_option("--k", k_max, "number of even moments")->check(CLI::PositiveNumber);
    moments->add_flag("--inductive-only", inductive_only, "skip the closed form (allows s > m)");

    // count
    auto* count = app.add_subcommand("count", "non-crossing partition counts");
    count->fallthrough();
    std::string alpha_text, alphas_text;
    int count_m = 1;
    int count_c = 0;
    bool brute = false, dump = false;
    count->add_option("--alpha", alpha_text, "type vector, e.g. 2,1,0,0");
    count->add_option("--alphas", alphas_text, "semicolon list of type vectors, e.g. \"2,0;2,0\"");
    count->add_option("--m", count_m, "scale / family parameter");
    count->add_option("--c", count_c, "anchored c-gon size");
    count->add_flag("--brute", brute, "also enumerate and compare");
    count->add_flag("--dump", dump, "dump matching partitions as JSON blocks");

    // verify
    auto* verify = app.add_subcommand("verify", "run the exact identity suites");
    verify->fallthrough();
    std::string suite = "all";
    int k_cap = 0;
    verify->add_option("--suite", suite, "identities | partitions | freeprob | all")
        ->check(CLI::IsMember({"identities", "partitions", "freeprob", "all"}));
    verify->add_option("--kmax", k_cap, "cap the main range parameter of every check");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimates vs exact formulas");
    simulate->fallthrough();
    freemix::sim_config config;
    config.threads = default_threads();
    std::string scenario_text = "drd-chain";
    std::string head_text = "rademacher";
    std::string tail_text;
    bool no_timestamp = false;
    simulate->add_option("--scenario", scenario_text, "drd-chain | matrix-product | graph-z2")
        ->check(CLI::IsMember({"drd-chain", "matrix-product", "graph-z2"}));
    simulate->add_option("--head", head_text, "head spec (zm:<m> or a distribution)");
    simulate->add_option("--tail", tail_text, "comma list of tail distributions");
    simulate->add_option("--m", config.zm_m, "matrix-product parameter");
    simulate->add_option("--n", config.n, "matrix dimension")->check(CLI::PositiveNumber);
    simulate->add_option("--trials", config.trials, "number of trials")->check(CLI::PositiveNumber);
    simulate->add_option("--k", config.k_max, "largest trace power")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", config.seed, "RNG seed");
    simulate->add_option("--rel-tol", config.rel_tol, "relative tolerance for verdicts");
    simulate->add_option("--threads", config.threads, "worker threads (FREEMIX_THREADS fallback)");
    simulate->add_flag("--no-timestamp", no_timestamp, "omit the timestamp from JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*moments) return run_moments(chain_text, op_r_specs, k_max, inductive_only, format, out_path);
        if (*count) return run_count(alpha_text, alphas_text, count_m, count_c, brute, dump, format, out_path);
        if (*verify) return run_verify(suite, k_cap, format, out_path);
        if (*simulate) {
            if (scenario_text == "matrix-product")
                config.scenario = freemix::scenario_kind::matrix_product;
            else if (scenario_text == "graph-z2")
                config.scenario = freemix::scenario_kind::graph_z2;
            else
                config.scenario = freemix::scenario_kind::drd_chain;
            return run_simulate(config, head_text, tail_text, no_timestamp, format, out_path);
        }
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
