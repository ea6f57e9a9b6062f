#include "homlab/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "homlab/approximation.hpp"
#include "homlab/canonical.hpp"
#include "homlab/duality.hpp"
#include "homlab/enumerate.hpp"
#include "homlab/errors.hpp"
#include "homlab/families.hpp"
#include "homlab/generators.hpp"
#include "homlab/hom.hpp"
#include "homlab/io.hpp"
#include "homlab/sparsity.hpp"

namespace homlab {

namespace {

struct Report {
    std::vector<std::pair<std::string, std::string>> lines;

    void add(const std::string& key, const std::string& value) {
        lines.emplace_back(key, value);
    }
    void add(const std::string& key, long long value) { add(key, std::to_string(value)); }
    void add(const std::string& key, int value) { add(key, std::to_string(value)); }
    void add(const std::string& key, double value) {
        std::ostringstream s;
        s << value;
        add(key, s.str());
    }

    void print(std::ostream& out, bool as_json, const std::string& command, int exit_code) {
        if (as_json) {
            nlohmann::json j;
            j["command"] = command;
            j["exit"] = exit_code;
            for (const auto& [k, v] : lines) j[k] = v;
            out << j.dump(2) << '\n';
        } else {
            for (const auto& [k, v] : lines) out << k << ": " << v << '\n';
        }
    }
};

std::string map_to_string(const std::vector<int>& map) {
    std::ostringstream out;
    for (size_t i = 0; i < map.size(); ++i) out << (i ? " " : "") << map[i];
    return out.str();
}

void report_verdict(Report& report, const Verdict& verdict) {
    report.add("verdict", verdict.holds ? "holds" : "fails");
    if (!verdict.holds) {
        report.add("direction", verdict.direction);
        if (verdict.counterexample)
            report.add("counterexample", to_compact_text(*verdict.counterexample));
        if (verdict.witness) report.add("witness-map", map_to_string(verdict.witness->map));
    }
    if (verdict.family_avoids_dual)
        report.add("family-avoids-dual", *verdict.family_avoids_dual ? "true" : "false");
}

struct DualityInputs {
    std::vector<std::string> family_paths;
    std::string dual_path;
    std::string universe_spec;
    std::string job_path;
    long long budget = -1;

    void load_job() {
        if (job_path.empty()) return;
        std::ifstream file(job_path);
        if (!file) throw parse_error(job_path + ": cannot open");
        std::string line;
        int line_no = 0;
        while (std::getline(file, line)) {
            ++line_no;
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            std::istringstream stream(line);
            std::string key;
            if (!(stream >> key)) continue;
            const std::string where = job_path + ":" + std::to_string(line_no);
            if (key == "family") {
                std::string path;
                bool any = false;
                while (stream >> path) {
                    family_paths.push_back(path);
                    any = true;
                }
                if (!any) throw parse_error(where + ": family needs at least one path");
            } else if (key == "dual") {
                if (!(stream >> dual_path)) throw parse_error(where + ": dual needs a path");
            } else if (key == "universe") {
                std::string rest;
                std::getline(stream, rest);
                while (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
                if (rest.empty()) throw parse_error(where + ": universe needs a spec");
                universe_spec = rest;
            } else if (key == "budget") {
                if (!(stream >> budget)) throw parse_error(where + ": budget needs a number");
            } else {
                throw parse_error(where + ": unknown key '" + key + "'");
            }
        }
    }

    std::vector<Structure> family() const {
        std::vector<Structure> out;
        for (const auto& p : family_paths) out.push_back(as_structure(parse_input(p)));
        if (out.empty()) throw argument_error("no family members given");
        return out;
    }
    Structure dual() const {
        if (dual_path.empty()) throw argument_error("no dual given");
        return as_structure(parse_input(dual_path));
    }
    ClassSample universe() const {
        if (universe_spec.empty()) throw argument_error("no universe given");
        return enumerate_sample(GeneratorSpec::parse(universe_spec));
    }
};

void write_or_print(Report& report, const std::string& out_path, const std::string& key,
                    const std::string& content) {
    if (out_path.empty()) {
        std::string compact = content;
        for (auto& c : compact)
            if (c == '\n') c = ';';
        if (!compact.empty() && compact.back() == ';') compact.pop_back();
        report.add(key, compact);
    } else {
        write_file(out_path, content);
        report.add(key + "-path", out_path);
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"homlab: homomorphism dualities, cores and sparsity grades at desk scale"};
    app.require_subcommand(1);
    app.fallthrough(); // global --json/--budget may follow the subcommand

    bool as_json = false;
    long long budget = -1;
    app.add_flag("--json", as_json, "emit a single JSON object instead of key: value lines");
    app.add_option("--budget", budget,
                   "search node budget (default: HOMLAB_BUDGET env or 50000000)");

    std::string arg_a, arg_b, out_path, universe_spec, measure = "omega";
    int arg_k = 0, arg_t = 0, arg_s = 0, arg_g = 3, max_order = 4;
    bool odd = false;
    DualityInputs duality;

    auto* hom_cmd = app.add_subcommand("hom", "decide A -> B and print a witness");
    hom_cmd->add_option("A", arg_a)->required();
    hom_cmd->add_option("B", arg_b)->required();

    auto* count_cmd = app.add_subcommand("count", "count homomorphisms A -> B");
    count_cmd->add_option("A", arg_a)->required();
    count_cmd->add_option("B", arg_b)->required();

    auto* core_cmd = app.add_subcommand("core", "compute the core and a retraction");
    core_cmd->add_option("A", arg_a)->required();
    core_cmd->add_option("-o,--out", out_path, "write the core to a file");

    auto* chromatic_cmd = app.add_subcommand("chromatic", "exact chromatic number");
    chromatic_cmd->add_option("G", arg_a)->required();

    auto* girth_cmd = app.add_subcommand("girth", "girth / odd-girth via BFS");
    girth_cmd->add_option("G", arg_a)->required();
    girth_cmd->add_flag("--odd", odd, "report the odd-girth instead");

    auto* td_cmd = app.add_subcommand("treedepth", "exact tree-depth");
    td_cmd->add_option("G", arg_a)->required();

    auto* chit_cmd = app.add_subcommand("chit", "low tree-depth coloring / chi_t");
    chit_cmd->add_option("G", arg_a)->required();
    chit_cmd->add_option("--t", arg_t, "subset size parameter")->required();

    auto* grade_cmd = app.add_subcommand("grade", "shallow topological minor grade");
    grade_cmd->add_option("G", arg_a)->required();
    grade_cmd->add_option("--s", arg_s, "max internal subdivision vertices per edge")
        ->required();
    grade_cmd->add_option("--measure", measure, "omega | chi | avg_degree");
    grade_cmd->add_option("--max-order", max_order, "largest minor order considered");

    auto* subdivide_cmd = app.add_subcommand("subdivide", "exact k-subdivision");
    subdivide_cmd->add_option("G", arg_a)->required();
    subdivide_cmd->add_option("--k", arg_k, "internal vertices per edge")->required();
    subdivide_cmd->add_option("-o,--out", out_path, "write the result to a file");

    auto* product_cmd = app.add_subcommand("product", "categorical product");
    product_cmd->add_option("A", arg_a)->required();
    product_cmd->add_option("B", arg_b)->required();
    product_cmd->add_option("-o,--out", out_path);

    auto* gaifman_cmd = app.add_subcommand("gaifman", "Gaifman graph of a structure");
    gaifman_cmd->add_option("A", arg_a)->required();
    gaifman_cmd->add_option("-o,--out", out_path);

    auto* incidence_cmd = app.add_subcommand(
        "incidence", "incidence graph (graphs are encoded one block per edge)");
    incidence_cmd->add_option("A", arg_a)->required();
    incidence_cmd->add_option("-o,--out", out_path);

    auto add_duality_inputs = [&](CLI::App* cmd) {
        cmd->add_option("--family", duality.family_paths, "forbidden structures");
        cmd->add_option("--dual", duality.dual_path, "candidate dual");
        cmd->add_option("--universe", duality.universe_spec, "generator spec");
        cmd->add_option("--job", duality.job_path, "job file with family/dual/universe/budget");
    };

    auto* verify_cmd = app.add_subcommand("duality-verify", "verify a duality over a sample");
    add_duality_inputs(verify_cmd);

    auto* minimize_cmd =
        app.add_subcommand("duality-minimize", "minimize a verified forbidden family");
    add_duality_inputs(minimize_cmd);
    minimize_cmd->add_option("-o,--out", out_path, "directory for minimized members");

    auto* construct_cmd =
        app.add_subcommand("dual-construct", "build a dual from t-approximations");
    construct_cmd->add_option("--family", duality.family_paths)->required();
    construct_cmd->add_option("--universe", duality.universe_spec)->required();
    construct_cmd->add_option("--t", arg_t)->required();
    construct_cmd->add_option("-o,--out", out_path);

    auto* approx_cmd = app.add_subcommand(
        "approx", "quotient t-approximation of A, or check that B approximates A");
    approx_cmd->add_option("A", arg_a)->required();
    approx_cmd->add_option("B", arg_b, "when given, run the t-approximation check");
    approx_cmd->add_option("--t", arg_t)->required();

    auto* theta_cmd = app.add_subcommand("theta", "exact Theta^t by candidate enumeration");
    theta_cmd->add_option("A", arg_a)->required();
    theta_cmd->add_option("--t", arg_t)->required();
    theta_cmd->add_option("--max-order", max_order, "largest candidate order");

    auto* generate_cmd = app.add_subcommand("generate", "produce a class sample");
    generate_cmd->add_option("--universe", universe_spec)->required();
    generate_cmd->add_option("-o,--out", out_path, "directory for member files");

    auto* ghrv_cmd = app.add_subcommand("ghrv", "verify the directed path/tournament duality");
    ghrv_cmd->add_option("--k", arg_k)->required();
    ghrv_cmd->add_option("--max-order", max_order, "digraph order bound for the sample");

    auto* odd_cmd = app.add_subcommand("experiment-oddgirth",
                                       "odd-girth criterion over a sample");
    odd_cmd->add_option("--universe", universe_spec)->required();
    odd_cmd->add_option("--g", arg_g, "odd girth threshold")->required();
    odd_cmd->add_option("--t", arg_t)->required();

    std::vector<const char*> argv;
    argv.push_back("homlab");
    for (const auto& a : args) argv.push_back(a.c_str());

    Report report;
    std::string command;
    int exit_code = 0;
    auto started = std::chrono::steady_clock::now();

    try {
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp& e) {
            out << app.help();
            return 0;
        } catch (const CLI::ParseError& e) {
            err << "usage error: " << e.what() << '\n';
            return 2;
        }

        duality.load_job();
        if (duality.budget >= 0 && budget < 0) budget = duality.budget;
        HomSearchConfig cfg;
        cfg.node_budget = budget;

        if (app.got_subcommand(hom_cmd)) {
            command = "hom";
            Structure a = as_structure(parse_input(arg_a));
            Structure b = as_structure(parse_input(arg_b));
            auto witness = hom_exists(a, b, cfg);
            if (witness) {
                report.add("hom", "found");
                report.add("map", map_to_string(witness->map));
            } else {
                report.add("hom", "none");
                exit_code = 1;
            }
        } else if (app.got_subcommand(count_cmd)) {
            command = "count";
            Structure a = as_structure(parse_input(arg_a));
            Structure b = as_structure(parse_input(arg_b));
            report.add("count", hom_count(a, b, cfg));
        } else if (app.got_subcommand(core_cmd)) {
            command = "core";
            Structure a = as_structure(parse_input(arg_a));
            CoreResult result = core(a, cfg, std::max(kDefaultCoreCap, 0));
            report.add("order", a.order());
            report.add("core-order", result.core.order());
            report.add("retraction", map_to_string(result.retraction.map));
            write_or_print(report, out_path, "core", to_text(result.core));
        } else if (app.got_subcommand(chromatic_cmd)) {
            command = "chromatic";
            Graph g = require_graph(parse_input(arg_a), "chromatic");
            report.add("chi", chromatic_number(g, cfg));
        } else if (app.got_subcommand(girth_cmd)) {
            command = "girth";
            Graph g = require_graph(parse_input(arg_a), "girth");
            auto value = odd ? odd_girth(g) : girth(g);
            report.add(odd ? "odd-girth" : "girth",
                       value ? std::to_string(*value) : std::string("infinity"));
        } else if (app.got_subcommand(td_cmd)) {
            command = "treedepth";
            Graph g = require_graph(parse_input(arg_a), "treedepth");
            report.add("treedepth", tree_depth(g));
        } else if (app.got_subcommand(chit_cmd)) {
            command = "chit";
            Graph g = require_graph(parse_input(arg_a), "chit");
            bool exact = g.order() <= kChiTExactOrderCap && arg_t <= kChiTExactTCap;
            TdColoring coloring = low_td_coloring(g, arg_t);
            report.add("chi-t", coloring.color_count);
            report.add("exact", exact ? "true" : "false");
            report.add("coloring", map_to_string(coloring.colors));
        } else if (app.got_subcommand(grade_cmd)) {
            command = "grade";
            Graph g = require_graph(parse_input(arg_a), "grade");
            GradeMeasure m;
            if (measure == "omega")
                m = GradeMeasure::omega;
            else if (measure == "chi")
                m = GradeMeasure::chi;
            else if (measure == "avg_degree")
                m = GradeMeasure::avg_degree;
            else
                throw argument_error("grade: unknown measure '" + measure + "'");
            report.add("grade", grade(g, DepthParam{arg_s}, m, max_order));
            report.add("scope", "minors<=order " + std::to_string(max_order));
        } else if (app.got_subcommand(subdivide_cmd)) {
            command = "subdivide";
            Graph g = require_graph(parse_input(arg_a), "subdivide");
            Graph result = subdivide(g, arg_k);
            report.add("order", result.order());
            report.add("edges", result.size());
            write_or_print(report, out_path, "graph", to_text(result));
        } else if (app.got_subcommand(product_cmd)) {
            command = "product";
            Structure a = as_structure(parse_input(arg_a));
            Structure b = as_structure(parse_input(arg_b));
            Structure result = categorical_product(a, b);
            report.add("order", result.order());
            write_or_print(report, out_path, "product", to_text(result));
        } else if (app.got_subcommand(gaifman_cmd)) {
            command = "gaifman";
            Structure a = as_structure(parse_input(arg_a));
            Graph result = gaifman(a);
            report.add("order", result.order());
            report.add("edges", result.size());
            write_or_print(report, out_path, "graph", to_text(result));
        } else if (app.got_subcommand(incidence_cmd)) {
            command = "incidence";
            ParsedInput input = parse_input(arg_a);
            Structure s = std::holds_alternative<Graph>(input)
                              ? to_structure_oriented(std::get<Graph>(input))
                              : as_structure(input);
            Graph result = incidence(s);
            report.add("order", result.order());
            report.add("edges", result.size());
            write_or_print(report, out_path, "graph", to_text(result));
        } else if (app.got_subcommand(verify_cmd)) {
            command = "duality-verify";
            ClassSample universe = duality.universe();
            DualityInstance inst{duality.family(), duality.dual()};
            Verdict verdict = verify_duality(inst, universe, cfg);
            report.add("scope", universe.description);
            report.add("members", static_cast<long long>(universe.members.size()));
            report_verdict(report, verdict);
            if (!verdict.holds) exit_code = 1;
        } else if (app.got_subcommand(minimize_cmd)) {
            command = "duality-minimize";
            ClassSample universe = duality.universe();
            DualityInstance inst{duality.family(), duality.dual()};
            DualityInstance minimized = minimize_family(inst, universe, cfg);
            report.add("scope", universe.description);
            report.add("family-size", static_cast<long long>(minimized.family.size()));
            for (size_t i = 0; i < minimized.family.size(); ++i) {
                std::string key = "member-" + std::to_string(i);
                if (out_path.empty()) {
                    report.add(key, to_compact_text(minimized.family[i]));
                } else {
                    std::filesystem::create_directories(out_path);
                    std::string path = out_path + "/member_" + std::to_string(i) + ".g";
                    write_file(path, to_text(minimized.family[i]));
                    report.add(key, path);
                }
            }
        } else if (app.got_subcommand(construct_cmd)) {
            command = "dual-construct";
            ClassSample universe = duality.universe();
            Structure dual = dual_construct(duality.family(), universe, arg_t, cfg);
            report.add("scope", universe.description);
            report.add("dual-order", dual.order());
            // isolated vertices are allowed in the dual; the core size is the
            // normalized view
            if (dual.order() > 0 && dual.order() <= kDefaultCoreCap)
                report.add("dual-core-order", core(dual, cfg).core.order());
            write_or_print(report, out_path, "dual", to_text(dual));
        } else if (app.got_subcommand(approx_cmd)) {
            command = "approx";
            Structure a = as_structure(parse_input(arg_a));
            if (arg_b.empty()) {
                auto [result, trace] = quotient_approximation(a, arg_t, cfg);
                report.add("order", result.approx.order());
                report.add("exact", "false");
                report.add("forward-map", map_to_string(result.forward.map));
                report.add("approx", to_compact_text(result.approx));
                std::string text = trace.to_text();
                for (auto& c : text)
                    if (c == '\n') c = ';';
                report.add("trace", text);
            } else {
                Structure b = as_structure(parse_input(arg_b));
                Verdict verdict = is_t_approximation(a, b, arg_t, cfg);
                report_verdict(report, verdict);
                if (!verdict.holds) exit_code = 1;
            }
        } else if (app.got_subcommand(theta_cmd)) {
            command = "theta";
            Structure a = as_structure(parse_input(arg_a));
            ThetaConfig theta_cfg;
            theta_cfg.search = cfg;
            auto result = theta_oracle(a, arg_t, max_order, theta_cfg);
            if (result) {
                report.add("theta", result->approx.order());
                report.add("witness", to_compact_text(result->approx));
            } else {
                report.add("theta", "not-found within max-order " + std::to_string(max_order));
            }
        } else if (app.got_subcommand(generate_cmd)) {
            command = "generate";
            GeneratorSpec spec = GeneratorSpec::parse(universe_spec);
            ClassSample sample = enumerate_sample(spec);
            report.add("scope", sample.description);
            report.add("members", static_cast<long long>(sample.members.size()));
            std::map<int, int> census;
            for (const auto& m : sample.members) ++census[m.order()];
            std::string cs;
            for (auto [order, count] : census) {
                if (!cs.empty()) cs += ' ';
                cs += std::to_string(order) + ":" + std::to_string(count);
            }
            report.add("census", cs);
            std::string flags;
            const std::pair<const char*, bool> flag_list[] = {
                {"hereditary", sample.flags.hereditary},
                {"addable", sample.flags.addable},
                {"monotone", sample.flags.monotone},
                {"topologically-closed", sample.flags.topologically_closed},
            };
            for (const auto& [name, set] : flag_list) {
                if (!set) continue;
                if (!flags.empty()) flags += ' ';
                flags += name;
            }
            report.add("flags", flags);
            if (!out_path.empty()) {
                std::filesystem::create_directories(out_path);
                for (size_t i = 0; i < sample.members.size(); ++i) {
                    std::ostringstream name;
                    name << out_path << "/member_" << i << ".g";
                    ParsedInput value = sample.members[i];
                    if (auto g = as_graph(sample.members[i])) value = *g;
                    else if (auto d = as_digraph(sample.members[i])) value = *d;
                    write_file(name.str(), to_text(value));
                }
                report.add("written", static_cast<long long>(sample.members.size()));
            }
        } else if (app.got_subcommand(ghrv_cmd)) {
            command = "ghrv";
            DualityInstance inst = ghrv_instance(arg_k);
            GeneratorSpec spec;
            spec.kind = GeneratorSpec::Kind::all_digraphs;
            spec.max_order = max_order;
            ClassSample universe = enumerate_sample(spec);
            Verdict verdict = verify_duality(inst, universe, cfg);
            report.add("k", arg_k);
            report.add("scope", "digraphs<=" + std::to_string(max_order));
            report_verdict(report, verdict);
            if (!verdict.holds) exit_code = 1;
        } else if (app.got_subcommand(odd_cmd)) {
            command = "experiment-oddgirth";
            ClassSample sample = enumerate_sample(GeneratorSpec::parse(universe_spec));
            Structure h;
            Verdict verdict = odd_girth_criterion_experiment(sample, arg_g, arg_t, cfg, &h);
            report.add("scope", sample.description);
            report.add("g", arg_g);
            report.add("dual-order", h.order());
            report_verdict(report, verdict);
            if (!verdict.holds) exit_code = 1;
        }
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const argument_error& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const budget_error& e) {
        err << "budget error: " << e.what() << '\n';
        return 3;
    } catch (const capacity_error& e) {
        err << "capacity error: " << e.what() << '\n';
        return 3;
    } catch (const internal_error& e) {
        err << "construction failed: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    report.add("time-ms", static_cast<long long>(elapsed));
    report.print(out, as_json, command, exit_code);
    return exit_code;
}

} // namespace homlab
