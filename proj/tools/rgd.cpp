#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rgd/design.hpp"
#include "rgd/develop.hpp"
#include "rgd/difference.hpp"
#include "rgd/errors.hpp"
#include "rgd/gdd.hpp"
#include "rgd/graph.hpp"
#include "rgd/graph_io.hpp"
#include "rgd/search.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_not_exists = 2;
constexpr int exit_inconclusive = 3;
constexpr int exit_usage = 64;
constexpr int exit_domain = 65;

std::string read_all(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) rgd::fail(rgd::errc::bad_argument, "cannot open " + path);
        buffer << in.rdbuf();
    }
    return buffer.str();
}

void write_all(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) rgd::fail(rgd::errc::bad_argument, "cannot open " + path + " for writing");
    out << content;
}

// Design files may hold either the text format or the JSON form.
rgd::Design read_design(const std::string& path) {
    auto text = read_all(path);
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{') return rgd::design_from_json(text);
    return rgd::design_from_text(text);
}

long long resolve_budget(const std::optional<long long>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("RGD_BUDGET")) {
        try {
            std::size_t used = 0;
            long long value = std::stoll(env, &used);
            if (used != std::string(env).size() || value <= 0)
                rgd::fail(rgd::errc::bad_argument, "RGD_BUDGET must be a positive integer");
            return value;
        } catch (const rgd::error&) {
            throw;
        } catch (const std::exception&) {
            rgd::fail(rgd::errc::bad_argument, "RGD_BUDGET must be a positive integer");
        }
    }
    return rgd::default_node_budget;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) parts.push_back(item);
    return parts;
}

std::string graph_payload(const rgd::Graph& g, const std::string& format) {
    if (format == "edge-list") return rgd::to_edge_list(g);
    return rgd::to_graph6(g) + "\n";
}

int run_params(long long n, int delta, bool json) {
    auto p = rgd::params(n, delta);
    if (json) {
        nlohmann::json j{{"n", n},
                         {"delta", delta},
                         {"k", p.k},
                         {"admissible", p.admissible}};
        j["b"] = p.b ? nlohmann::json(*p.b) : nlohmann::json(nullptr);
        j["r"] = p.r ? nlohmann::json(*p.r) : nlohmann::json(nullptr);
        j["remainder"] =
            p.remainder_count ? nlohmann::json(*p.remainder_count) : nlohmann::json(nullptr);
        std::cout << j.dump() << "\n";
        return exit_ok;
    }
    auto opt = [](const std::optional<long long>& v) {
        return v ? std::to_string(*v) : std::string("-");
    };
    std::cout << "k=" << p.k << " b=" << opt(p.b) << " r=" << opt(p.r)
              << " remainder=" << opt(p.remainder_count) << ' '
              << (p.admissible ? "admissible" : "inadmissible") << "\n";
    return exit_ok;
}

int emit_design(const rgd::Design& d, bool json) {
    if (json)
        std::cout << rgd::to_json(d) << "\n";
    else
        std::cout << rgd::to_text(d);
    return exit_ok;
}

int run_develop(const std::string& in, const std::string& table, bool json) {
    rgd::BaseBlockSet bbs;
    if (!table.empty()) {
        auto parts = split(table, ':');
        if (parts.size() != 2) {
            std::cerr << "error: --table expects ORDER:FAMILY, e.g. 10:delta3\n";
            return exit_usage;
        }
        int order = 0;
        try {
            std::size_t used = 0;
            order = std::stoi(parts[0], &used);
            if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
        } catch (const std::exception&) {
            std::cerr << "error: --table expects a numeric order, got " << parts[0] << "\n";
            return exit_usage;
        }
        bbs = rgd::builtin_table(order, rgd::table_family_from_string(parts[1]));
    } else {
        bbs = rgd::base_blocks_from_text(read_all(in));
    }
    return emit_design(rgd::develop(bbs), json);
}

int run_table(int order, const std::string& family) {
    if (!family.empty()) {
        std::cout << rgd::to_text(rgd::builtin_table(order, rgd::table_family_from_string(family)));
        return exit_ok;
    }
    for (auto f : {rgd::TableFamily::delta2, rgd::TableFamily::delta3, rgd::TableFamily::delta4}) {
        auto orders = rgd::builtin_orders(f);
        for (int o : orders)
            if (o == order) {
                std::cout << rgd::to_text(rgd::builtin_table(order, f));
                return exit_ok;
            }
    }
    rgd::fail(rgd::errc::bad_argument, "no built-in table for order " + std::to_string(order));
}

int report_verification(const rgd::Design& d, const rgd::VerificationReport& report, bool json) {
    if (json) {
        nlohmann::json j{{"ok", report.ok()},
                         {"n", d.n},
                         {"delta", d.delta},
                         {"blocks", d.blocks.size()}};
        auto violations = nlohmann::json::array();
        for (const auto& v : report.violations) violations.push_back(v.to_string());
        j["violations"] = violations;
        std::cout << j.dump() << "\n";
    } else if (report.ok()) {
        std::cout << "ok n=" << d.n << " delta=" << d.delta << " blocks=" << d.blocks.size()
                  << "\n";
    } else {
        std::cout << "invalid violations=" << report.violations.size() << "\n";
        for (const auto& v : report.violations) std::cout << v.to_string() << "\n";
    }
    return report.ok() ? exit_ok : exit_invalid;
}

int run_verify(const std::string& design_path, const std::string& graph_spec, bool recover,
               bool json) {
    auto d = read_design(design_path);
    rgd::Graph g = recover ? rgd::recover_graph(d) : rgd::graph_from_spec(graph_spec);
    return report_verification(d, rgd::verify(d, g), json);
}

int run_recover(const std::string& design_path, const std::string& format) {
    auto d = read_design(design_path);
    std::cout << graph_payload(rgd::recover_graph(d), format);
    return exit_ok;
}

int run_pairtable(const std::string& graph_spec) {
    std::cout << rgd::render(rgd::pair_table(rgd::graph_from_spec(graph_spec)));
    return exit_ok;
}

int run_cycle(int n, bool emit_base_blocks, bool json) {
    if (emit_base_blocks) {
        std::cout << rgd::to_text(rgd::cycle_design_base_blocks(n));
        return exit_ok;
    }
    auto [d, g] = rgd::cycle_design(n);
    (void)g;
    return emit_design(d, json);
}

int run_gdd_make_g3(int g) {
    std::cout << rgd::to_json(rgd::gdd_g3(g)) << "\n";
    return exit_ok;
}

int run_gdd_verify(const std::string& in, bool json) {
    auto gdd = rgd::gdd_from_json(read_all(in));
    auto report = rgd::verify_gdd(gdd);
    if (json) {
        nlohmann::json j{{"ok", report.ok()},
                         {"k", gdd.k},
                         {"points", gdd.point_count()},
                         {"groups", gdd.groups.size()},
                         {"blocks", gdd.blocks.size()}};
        auto violations = nlohmann::json::array();
        for (const auto& v : report.violations) violations.push_back(v.to_string());
        j["violations"] = violations;
        std::cout << j.dump() << "\n";
    } else if (report.ok()) {
        std::cout << "ok points=" << gdd.point_count() << " groups=" << gdd.groups.size()
                  << " blocks=" << gdd.blocks.size() << "\n";
    } else {
        std::cout << "invalid violations=" << report.violations.size() << "\n";
        for (const auto& v : report.violations) std::cout << v.to_string() << "\n";
    }
    return report.ok() ? exit_ok : exit_invalid;
}

int run_wilson(const std::string& gdd_path, const std::vector<std::string>& fills,
               const std::string& graph_out, bool json) {
    auto gdd = rgd::gdd_from_json(read_all(gdd_path));
    std::map<int, std::pair<rgd::Design, rgd::Graph>> ingredients;
    for (const auto& fill : fills) {
        auto eq = fill.find('=');
        auto colon = fill.find(':', eq == std::string::npos ? 0 : eq + 1);
        if (eq == std::string::npos || colon == std::string::npos) {
            std::cerr << "error: --fill expects SIZE=DESIGNFILE:GRAPH, e.g. 21=d21.txt:cycle:21\n";
            return exit_usage;
        }
        int size = 0;
        try {
            std::size_t used = 0;
            size = std::stoi(fill.substr(0, eq), &used);
            if (used != eq) throw std::invalid_argument(fill);
        } catch (const std::exception&) {
            std::cerr << "error: --fill expects a numeric group size, got " << fill.substr(0, eq)
                      << "\n";
            return exit_usage;
        }
        auto design = read_design(fill.substr(eq + 1, colon - eq - 1));
        auto graph = rgd::graph_from_spec(fill.substr(colon + 1));
        ingredients.emplace(size, std::make_pair(std::move(design), std::move(graph)));
    }
    auto [d, g] = rgd::wilson_fill(gdd, ingredients);
    if (!graph_out.empty()) write_all(graph_out, graph_payload(g, "graph6"));
    return emit_design(d, json);
}

int run_search(const std::string& graph_spec, const std::string& algo, const std::string& mode,
               const std::optional<long long>& budget_flag, bool json) {
    auto g = rgd::graph_from_spec(graph_spec);
    long long budget = resolve_budget(budget_flag);
    rgd::CoverMode cover_mode = rgd::CoverMode::decide;
    if (mode == "first")
        cover_mode = rgd::CoverMode::first;
    else if (mode == "count")
        cover_mode = rgd::CoverMode::count;
    if (cover_mode != rgd::CoverMode::decide && algo != "cover") {
        std::cerr << "error: --mode " << mode << " applies only to --algo cover\n";
        return exit_usage;
    }

    rgd::SearchOutcome out;
    if (algo == "a")
        out = rgd::algorithm_a(g);
    else if (algo == "b")
        out = rgd::algorithm_b(g, budget);
    else if (algo == "c")
        out = rgd::algorithm_c(g);
    else if (algo == "d")
        out = rgd::algorithm_d(g);
    else
        out = rgd::exact_cover(g, cover_mode, budget);

    if (json) {
        nlohmann::json j{{"status", rgd::to_string(out.status)},
                         {"stage", out.stage},
                         {"witness", out.witness},
                         {"nodes", out.nodes}};
        j["count"] = out.count ? nlohmann::json(*out.count) : nlohmann::json(nullptr);
        j["design"] =
            out.design ? nlohmann::json::parse(rgd::to_json(*out.design)) : nlohmann::json(nullptr);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << rgd::to_string(out.status) << " stage=" << out.stage
                  << " witness=" << out.witness << "\n";
        if (out.count) std::cout << "count=" << *out.count << "\n";
        if (cover_mode == rgd::CoverMode::first && out.design) std::cout << rgd::to_text(*out.design);
    }
    switch (out.status) {
        case rgd::Status::exists: return exit_ok;
        case rgd::Status::not_exists: return exit_not_exists;
        case rgd::Status::inconclusive: return exit_inconclusive;
    }
    return exit_domain;
}

int run_batch(const std::string& in, const std::string& pipeline, int threads,
              const std::optional<long long>& budget_flag) {
    rgd::BatchOptions options;
    options.pipeline = split(pipeline, ',');
    for (const auto& stage : options.pipeline)
        if (stage != "a" && stage != "b" && stage != "c" && stage != "d" && stage != "cover") {
            std::cerr << "error: unknown pipeline stage '" << stage
                      << "' (expected a, b, c, d or cover)\n";
            return exit_usage;
        }
    options.node_budget = resolve_budget(budget_flag);
    options.threads = threads;

    rgd::BatchReport report;
    if (in == "-") {
        report = rgd::run_batch(std::cin, options);
    } else {
        std::ifstream file(in, std::ios::binary);
        if (!file) rgd::fail(rgd::errc::bad_argument, "cannot open " + in);
        report = rgd::run_batch(file, options);
    }
    std::cout << rgd::to_tsv(report);
    return report.errors == 0 ? exit_ok : exit_invalid;
}

int run_gen(const std::string& random_spec, const std::string& name, const std::string& format) {
    if (random_spec.empty() == name.empty()) {
        std::cerr << "error: gen needs exactly one of --random or --name\n";
        return exit_usage;
    }
    rgd::Graph g;
    if (!random_spec.empty()) {
        auto parts = split(random_spec, ',');
        if (parts.size() != 3) {
            std::cerr << "error: --random expects n,delta,seed\n";
            return exit_usage;
        }
        try {
            std::size_t used = 0;
            int n = std::stoi(parts[0], &used);
            if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
            int delta = std::stoi(parts[1], &used);
            if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
            unsigned long long seed = std::stoull(parts[2], &used);
            if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
            g = rgd::random_regular_girth5(n, delta, seed);
        } catch (const rgd::error&) {
            throw;
        } catch (const std::exception&) {
            std::cerr << "error: --random expects n,delta,seed as integers\n";
            return exit_usage;
        }
    } else {
        g = rgd::graph_from_spec(name);
    }
    std::cout << graph_payload(g, format);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construct, complete, verify, and refute regular-graph designs "
                 "(every edge covered twice, every other pair once, blocks of size delta+1)."};
    app.require_subcommand(1);

    auto* sub_params = app.add_subcommand("params", "Block count, replication and remainder size");
    long long params_n = 0;
    int params_delta = 0;
    bool params_json = false;
    sub_params->add_option("--n", params_n, "number of points")->required();
    sub_params->add_option("--delta", params_delta, "graph degree")->required();
    sub_params->add_flag("--json", params_json, "JSON output");

    auto* sub_develop = app.add_subcommand("develop", "Develop base blocks into a full design");
    std::string develop_in, develop_table;
    bool develop_json = false;
    auto* develop_in_opt =
        sub_develop->add_option("--in", develop_in, "base-block file ('-' for stdin)");
    auto* develop_table_opt = sub_develop->add_option(
        "--table", develop_table, "built-in table ORDER:FAMILY (families delta2, delta3, delta4)");
    develop_in_opt->excludes(develop_table_opt);
    sub_develop->add_flag("--json", develop_json, "JSON output");

    auto* sub_table = app.add_subcommand("table", "Print a built-in base-block table");
    int table_order = 0;
    std::string table_family;
    sub_table->add_option("--order", table_order, "design order")->required();
    sub_table->add_option("--family", table_family, "delta2, delta3 or delta4");

    auto* sub_verify = app.add_subcommand("verify", "Check a design against its graph");
    std::string verify_design = "-", verify_graph;
    bool verify_recover = false, verify_json = false;
    sub_verify->add_option("--design", verify_design, "design file ('-' for stdin)");
    auto* verify_graph_opt =
        sub_verify->add_option("--graph", verify_graph, "graph file or spec (e.g. cycle:9)");
    auto* verify_recover_opt = sub_verify->add_flag("--recover", verify_recover,
                                                    "recover the graph from the design itself");
    verify_graph_opt->excludes(verify_recover_opt);
    sub_verify->add_flag("--json", verify_json, "JSON output");

    auto* sub_recover = app.add_subcommand("recover", "Recover the graph from a design");
    std::string recover_design = "-", recover_format = "graph6";
    sub_recover->add_option("--design", recover_design, "design file ('-' for stdin)");
    sub_recover->add_option("--format", recover_format, "graph6 or edge-list")
        ->check(CLI::IsMember({"graph6", "edge-list"}));

    auto* sub_pairtable = app.add_subcommand("pairtable", "Render the pair coverage table");
    std::string pairtable_graph;
    sub_pairtable->add_option("--graph", pairtable_graph, "graph file or spec")->required();

    auto* sub_cycle = app.add_subcommand("cycle", "Cyclic design on the n-cycle");
    int cycle_n = 0;
    bool cycle_base_blocks = false, cycle_json = false;
    sub_cycle->add_option("--n", cycle_n, "cycle length (n = 3 or 5 mod 6)")->required();
    sub_cycle->add_flag("--emit-base-blocks", cycle_base_blocks,
                        "print the generating base blocks instead of the design");
    sub_cycle->add_flag("--json", cycle_json, "JSON output");

    auto* sub_gdd = app.add_subcommand("gdd", "Group divisible designs");
    sub_gdd->require_subcommand(1);
    auto* sub_gdd_make = sub_gdd->add_subcommand("make-g3", "Three equal groups, blocks of size 3");
    int gdd_g = 0;
    sub_gdd_make->add_option("--g", gdd_g, "group size")->required();
    auto* sub_gdd_verify = sub_gdd->add_subcommand("verify", "Check the covering properties");
    std::string gdd_in = "-";
    bool gdd_json = false;
    sub_gdd_verify->add_option("--in", gdd_in, "GDD JSON file ('-' for stdin)");
    sub_gdd_verify->add_flag("--json", gdd_json, "JSON output");

    auto* sub_wilson = app.add_subcommand("wilson", "Fill GDD groups with ingredient designs");
    std::string wilson_gdd, wilson_graph_out;
    std::vector<std::string> wilson_fills;
    bool wilson_json = false;
    sub_wilson->add_option("--gdd", wilson_gdd, "GDD JSON file")->required();
    sub_wilson
        ->add_option("--fill", wilson_fills,
                     "ingredient SIZE=DESIGNFILE:GRAPH (repeat per group size)")
        ->required();
    sub_wilson->add_option("--graph-out", wilson_graph_out, "also write the composed graph6 here");
    sub_wilson->add_flag("--json", wilson_json, "JSON output");

    auto* sub_search = app.add_subcommand("search", "Decide whether a completion exists");
    std::string search_graph, search_algo = "cover", search_mode = "decide";
    std::optional<long long> search_budget;
    bool search_json = false;
    sub_search->add_option("--graph", search_graph, "graph file or spec")->required();
    sub_search->add_option("--algo", search_algo, "a, b, c, d or cover")
        ->check(CLI::IsMember({"a", "b", "c", "d", "cover"}));
    sub_search->add_option("--mode", search_mode, "decide, first or count")
        ->check(CLI::IsMember({"decide", "first", "count"}));
    sub_search->add_option("--budget", search_budget, "node budget (or env RGD_BUDGET)");
    sub_search->add_flag("--json", search_json, "JSON output");

    auto* sub_batch = app.add_subcommand("batch", "Run a pipeline over graph6 records");
    std::string batch_in = "-", batch_pipeline = "a,cover";
    int batch_threads = 1;
    std::optional<long long> batch_budget;
    sub_batch->add_option("--in", batch_in, "graph6 file ('-' for stdin)");
    sub_batch->add_option("--pipeline", batch_pipeline, "comma-separated stages from a,b,c,d,cover");
    sub_batch->add_option("--threads", batch_threads, "worker threads (0 = all cores)");
    sub_batch->add_option("--budget", batch_budget, "node budget per stage (or env RGD_BUDGET)");

    auto* sub_gen = app.add_subcommand("gen", "Emit a graph");
    std::string gen_random, gen_name, gen_format = "graph6";
    sub_gen->add_option("--random", gen_random, "random regular girth-5 graph n,delta,seed");
    sub_gen->add_option("--name", gen_name,
                        "named graph spec (cycle:N, gp:N,K, petersen, sylvester, hs, "
                        "union:A+B, complete:N)");
    sub_gen->add_option("--format", gen_format, "graph6 or edge-list")
        ->check(CLI::IsMember({"graph6", "edge-list"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*sub_params) return run_params(params_n, params_delta, params_json);
        if (*sub_develop) {
            if (develop_in.empty() && develop_table.empty()) {
                std::cerr << "error: develop needs --in or --table\n";
                return exit_usage;
            }
            return run_develop(develop_in, develop_table, develop_json);
        }
        if (*sub_table) return run_table(table_order, table_family);
        if (*sub_verify) {
            if (verify_graph.empty() && !verify_recover) {
                std::cerr << "error: verify needs --graph or --recover\n";
                return exit_usage;
            }
            return run_verify(verify_design, verify_graph, verify_recover, verify_json);
        }
        if (*sub_recover) return run_recover(recover_design, recover_format);
        if (*sub_pairtable) return run_pairtable(pairtable_graph);
        if (*sub_cycle) return run_cycle(cycle_n, cycle_base_blocks, cycle_json);
        if (*sub_gdd_make) return run_gdd_make_g3(gdd_g);
        if (*sub_gdd_verify) return run_gdd_verify(gdd_in, gdd_json);
        if (*sub_wilson)
            return run_wilson(wilson_gdd, wilson_fills, wilson_graph_out, wilson_json);
        if (*sub_search)
            return run_search(search_graph, search_algo, search_mode, search_budget, search_json);
        if (*sub_batch) return run_batch(batch_in, batch_pipeline, batch_threads, batch_budget);
        if (*sub_gen) return run_gen(gen_random, gen_name, gen_format);
        std::cerr << "error: no subcommand\n";
        return exit_usage;
    } catch (const rgd::error& e) {
        if (e.code() == rgd::errc::no_design_exists) {
            std::cerr << "NotExists: " << e.what() << "\n";
            return exit_not_exists;
        }
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    }
}
