#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "torclus/groth.hpp"
#include "torclus/seedio.hpp"

using namespace torclus;

namespace {

constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<int64_t> int_list(const std::string& text) {
    std::vector<int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("expected a comma-separated integer list, got '" + text + "'");
        }
    }
    return out;
}

int cmd_cartan(const std::string& type, int64_t max_m) {
    const CartanPtr d = make_cartan(type);
    for (int i = 1; i <= d->rank() && max_m > 0; ++i)
        for (int j = 1; j <= d->rank(); ++j) {
            std::cout << i << "," << j << ":";
            for (int64_t m = 1; m <= max_m; ++m) std::cout << (m > 1 ? "," : " ") << d->ctilde(i, j, m);
            std::cout << "\n";
        }
    return 0;
}

int cmd_nexp(const std::string& type, const std::string& pair) {
    const auto p = int_list(pair);
    if (p.size() != 4) throw UsageError("--pair takes i,p,j,s");
    const CartanPtr d = make_cartan(type);
    for (int k : {0, 2})
        if (p[k] < 1 || p[k] > d->rank()) throw Error(ErrorKind::UnknownLabel, "node " + std::to_string(p[k]));
    std::cout << ParamMonomial(n_sequence(*d, static_cast<int>(p[0]), p[1], static_cast<int>(p[2]), p[3])).str() << "\n";
    return 0;
}

struct BackendFlags {
    std::string type = "A1";
    std::string quotient = "none";
    std::string project;
    std::string seed;

    BackendPtr make() const {
        if (!seed.empty()) return seed_from_json(read_file(seed)).backend;
        std::optional<std::vector<int64_t>> keep;
        if (!project.empty()) keep = int_list(project);
        return make_cartan_backend(make_cartan(type), parse_quotient(quotient), keep);
    }
};

int cmd_star(const BackendFlags& flags, const std::vector<std::string>& exprs) {
    const BackendPtr b = flags.make();
    TorusElement out = TorusElement::one(b);
    for (const auto& e : exprs) out = star(out, parse_element(b, e));
    std::cout << out.str() << "\n";
    return 0;
}

void write_out(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

int cmd_mutate(const std::string& path, const std::vector<int>& word, const std::string& out) {
    const ToroidalSeed seed = seed_from_json(read_file(path));
    std::vector<int> w;
    for (int k : word) {
        if (k < 1 || k > seed.m) throw UsageError("direction " + std::to_string(k) + " is not exchangeable");
        w.push_back(k - 1);
    }
    write_out(seed_to_json(mutate_word(seed, w)), out);
    return 0;
}

size_t graph_bound(std::optional<size_t> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("TORCLUS_MAX_NODES")) {
        const auto v = int_list(env);
        if (v.size() != 1 || v[0] < 1) throw UsageError("TORCLUS_MAX_NODES must be a positive integer");
        return static_cast<size_t>(v[0]);
    }
    return 2000;
}

int cmd_graph(const std::string& path, std::optional<size_t> max, int jobs, bool dot, bool partial) {
    const ToroidalSeed seed = seed_from_json(read_file(path));
    const ExchangeGraph g = exchange_graph(seed, graph_bound(max), jobs, partial);
    if (dot) std::cout << g.dot();
    std::cout << g.summary() << "\n";
    return 0;
}

nlohmann::json report_json(const Report& r) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& a : r.items()) {
        nlohmann::json it{{"id", a.id}, {"status", a.pass ? "pass" : "fail"}};
        if (!a.pass) {
            it["expected"] = a.expected;
            it["actual"] = a.actual;
        }
        items.push_back(it);
    }
    return {{"id", r.name()}, {"ok", r.ok()}, {"assertions", items}};
}

int cmd_verify(std::vector<std::string> ids, const std::string& format, int jobs) {
    if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) ids = verify_ids();
    const auto known = verify_ids();
    for (const auto& id : ids)
        if (std::find(known.begin(), known.end(), id) == known.end()) throw UsageError("unknown verify id '" + id + "'");
    std::vector<Report> reports(ids.size());
    if (jobs <= 1) {
        for (size_t k = 0; k < ids.size(); ++k) reports[k] = run_verify(ids[k]);
    } else {
        std::vector<std::future<Report>> futs;
        for (const auto& id : ids) futs.push_back(std::async(std::launch::async, run_verify, id));
        for (size_t k = 0; k < ids.size(); ++k) reports[k] = futs[k].get();
    }
    bool ok = true;
    nlohmann::json all = nlohmann::json::array();
    for (const auto& r : reports) {
        ok = ok && r.ok();
        if (format == "json") all.push_back(report_json(r));
        else std::cout << r.text();
    }
    if (format == "json") std::cout << nlohmann::json{{"ok", ok}, {"reports", all}}.dump(2) << "\n";
    return ok ? 0 : kFail;
}

void print_class(const std::string& label, const TorusElement& x) { std::cout << "L(" << label << ") = " << x.str() << "\n"; }

std::string y(int i, int64_t r) { return "Y[" + std::to_string(i) + "," + std::to_string(r) + "]"; }

int cmd_characters(const std::string& type, const std::string& category, const std::string& xi_text) {
    if (category == "b2-qflat") {
        const CategoryProfile p = profile_b2_qflat();
        const BackendPtr b = p.backend();
        for (const auto& v : p.generators) print_class(y(v.i, v.r), truncate(fundamental_class_thin(b, v.i, v.r), p.generators));
        return 0;
    }
    if (category == "cq-sl3") {
        const CategoryProfile p = profile_cq_sl3();
        const BackendPtr b = p.backend();
        for (const auto& v : p.generators) print_class(y(v.i, v.r), truncate(fundamental_class_thin(b, v.i, v.r), p.generators));
        return 0;
    }
    const CartanPtr d = make_cartan(type);
    if (category == "c1") {
        HeightFunction xi = bipartite_height(*d);
        if (!xi_text.empty()) xi.xi = int_list(xi_text);
        const CategoryProfile p = profile_c1(d, xi);
        const BackendPtr b = p.backend();
        for (int i = 1; i <= d->rank(); ++i) {
            const int64_t x = xi(i);
            print_class(y(i, x + 2), truncated_class_C1(b, xi, C1Label::Top, i));
            print_class(y(i, x) + " " + y(i, x + 2), truncated_class_C1(b, xi, C1Label::KR, i));
            print_class(y(i, x), truncated_class_C1(b, xi, C1Label::Bottom, i));
        }
        return 0;
    }
    if (category == "c1-ob") {
        const CategoryProfile p = profile_c1_ob(d);
        const BackendPtr b = p.backend();
        for (const auto& v : p.generators) print_class(y(v.i, v.r), truncate(fundamental_class_thin(b, v.i, v.r), p.generators));
        return 0;
    }
    if (category == "cz") {
        const CategoryProfile p = profile_cz(d);
        const BackendPtr b = p.backend();
        for (int i = 1; i <= d->rank(); ++i) print_class(y(i, p.xi(i)), fundamental_class_thin(b, i, p.xi(i)));
        return 0;
    }
    throw UsageError("unknown category '" + category + "' (c1, c1-ob, cz, cq-sl3, b2-qflat)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toroidal cluster algebras and Grothendieck rings"};
    app.require_subcommand(1);

    std::string type = "A1", pair, seed_path, out, format = "text", category, xi_text;
    int64_t max_m = 12;
    int jobs = 1;
    std::optional<size_t> max_nodes;
    bool no_dot = false, partial = false;
    std::vector<std::string> exprs, ids;
    std::vector<int> word;
    BackendFlags flags;

    auto* cartan = app.add_subcommand("cartan", "Print the expansion coefficients of the inverse quantized Cartan matrix");
    cartan->add_option("--type", type, "Dynkin type")->required();
    cartan->add_option("--max-m", max_m, "Largest power")->check(CLI::NonNegativeNumber);

    auto* nexp = app.add_subcommand("nexp", "Print prod_a t_a^{N_a(i,p;j,s)}");
    nexp->add_option("--type", type, "Dynkin type")->required();
    nexp->add_option("--pair", pair, "i,p,j,s")->required();

    auto* starc = app.add_subcommand("star", "Multiply expressions in the quantum torus");
    starc->add_option("exprs", exprs, "Expressions, multiplied left to right")->required();
    starc->add_option("--type", flags.type, "Dynkin type of the Cartan backend");
    starc->add_option("--quotient", flags.quotient, "none or standard");
    starc->add_option("--project", flags.project, "Comma-separated parameter indices to keep");
    starc->add_option("--seed", flags.seed, "Take the backend from a seed file");

    auto* mutate = app.add_subcommand("mutate", "Mutate a seed file along a word of directions");
    mutate->add_option("seed", seed_path, "Seed file")->required();
    mutate->add_option("k", word, "Directions, 1-based")->required();
    mutate->add_option("-o,--out", out, "Output file (default stdout)");

    auto* graph = app.add_subcommand("graph", "Enumerate the exchange graph of a seed file");
    graph->add_option("seed", seed_path, "Seed file")->required();
    graph->add_option("--max", max_nodes, "Seed bound (default TORCLUS_MAX_NODES or 2000)");
    graph->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    graph->add_flag("--no-dot", no_dot, "Print only the summary line");
    graph->add_flag("--allow-partial", partial, "Report a truncated graph instead of failing");

    auto* verify = app.add_subcommand("verify", "Run golden identity checks");
    verify->add_option("ids", ids, "Check ids, or 'all'");
    verify->add_option("--report", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--jobs", jobs, "Run checks in parallel")->check(CLI::PositiveNumber);
    auto* list = verify->add_flag("--list", "List the check ids");

    auto* chars = app.add_subcommand("characters", "Print truncated classes of a category");
    chars->add_option("--type", type, "Dynkin type");
    chars->add_option("--category", category, "c1, c1-ob, cz, cq-sl3 or b2-qflat")->required();
    chars->add_option("--xi", xi_text, "Height function for c1, comma-separated");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*cartan) return cmd_cartan(type, max_m);
        if (*nexp) return cmd_nexp(type, pair);
        if (*starc) return cmd_star(flags, exprs);
        if (*mutate) return cmd_mutate(seed_path, word, out);
        if (*graph) return cmd_graph(seed_path, max_nodes, jobs, !no_dot, partial);
        if (*verify) {
            if (*list) {
                for (const auto& id : verify_ids()) std::cout << id << "\n";
                return 0;
            }
            return cmd_verify(ids, format, jobs);
        }
        if (*chars) return cmd_characters(type, category, xi_text);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        const ErrorKind k = e.kind();
        return k == ErrorKind::ParseError || k == ErrorKind::UnknownType || k == ErrorKind::UnknownLabel ? kUsage : kFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
