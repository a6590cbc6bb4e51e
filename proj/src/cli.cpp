#include "qbrauer/cli.hpp"

#include "qbrauer/diagram.hpp"
#include "qbrauer/errors.hpp"
#include "qbrauer/rep.hpp"
#include "qbrauer/rmatrix.hpp"
#include "qbrauer/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace qbrauer {

namespace {

struct Config {
    std::vector<std::string> suites;
    std::string n = "2";
    std::string l = "2";
    std::vector<std::string> q;
    std::string out;
    std::string format = "text";
    std::string negative_control;
    std::string name;
    std::string in;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<Rational> q_points(const Config& cfg) {
    if (cfg.q.empty()) return default_q_points();
    std::vector<Rational> out;
    for (const auto& t : cfg.q) out.push_back(parse_rational(t));
    return out;
}

// Writes to --out when given, else to the console stream.
void emit(const Config& cfg, std::ostream& console, const std::string& text) {
    if (cfg.out.empty()) {
        console << text;
        return;
    }
    std::ofstream file(cfg.out);
    if (!file) throw UsageError("cannot write " + cfg.out);
    file << text;
}

std::vector<SuiteId> selected_suites(const Config& cfg) {
    if (cfg.suites.empty()) throw UsageError("verify needs --suite");
    std::vector<SuiteId> picked;
    for (const auto& s : cfg.suites) {
        if (s == "all") return all_suites();
        auto id = parse_suite(s);
        if (!id) throw UsageError("unknown suite '" + s + "'");
        if (std::find(picked.begin(), picked.end(), *id) == picked.end()) picked.push_back(*id);
    }
    // Canonical order regardless of the order on the command line.
    std::vector<SuiteId> out;
    for (SuiteId id : all_suites())
        if (std::find(picked.begin(), picked.end(), id) != picked.end()) out.push_back(id);
    return out;
}

struct Cell {
    SuiteId suite;
    int n;
    int l;
};

int cmd_verify(const Config& cfg, std::ostream& out) {
    const auto suites = selected_suites(cfg);
    const auto [n0, n1] = parse_range(cfg.n);
    const auto [l0, l1] = parse_range(cfg.l);
    SuiteOptions options;
    options.q_points = q_points(cfg);
    if (cfg.negative_control == "perturb-r")
        options.perturb_r = true;
    else if (cfg.negative_control == "z-shift")
        options.z_shift = 1;
    else if (!cfg.negative_control.empty())
        throw UsageError("unknown negative control '" + cfg.negative_control + "'");

    std::vector<Cell> cells;
    for (SuiteId s : suites)
        for (int n = n0; n <= (suite_uses_n(s) ? n1 : n0); ++n)
            for (int l = l0; l <= (suite_uses_l(s) ? l1 : l0); ++l) cells.push_back({s, n, l});

    std::vector<std::vector<RelationReport>> results(cells.size());
    std::vector<std::exception_ptr> errors(cells.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next++) < cells.size();) {
            try {
                results[i] = verify_relation_suite(cells[i].suite, cells[i].n, cells[i].l, options);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<RelationReport> all;
    for (auto& r : results) all.insert(all.end(), r.begin(), r.end());
    if (cfg.format == "json") {
        emit(cfg, out, to_json(all) + "\n");
    } else {
        std::map<Verdict, int> counts;
        for (const auto& r : all) ++counts[r.verdict];
        std::ostringstream summary;
        summary << "summary";
        for (Verdict v : {Verdict::pass, Verdict::fail, Verdict::skipped, Verdict::observed})
            summary << ' ' << verdict_name(v) << '=' << counts[v];
        summary << '\n';
        emit(cfg, out, to_text(all) + summary.str());
        if (!cfg.out.empty()) out << summary.str();
    }
    return any_failure(all) ? kExitFail : kExitPass;
}

int cmd_build(const Config& cfg, std::ostream& out) {
    const auto [n, n_hi] = parse_range(cfg.n);
    if (n != n_hi) throw UsageError("build takes a single --n");
    PolyMatrix m;
    if (auto op = parse_operator_name(cfg.name)) {
        m = build_operator(*op, n).matrix;
    } else if (cfg.name == "S") {
        m = rep_S(n, parse_range(cfg.l).first);
    } else {
        const int l = parse_range(cfg.l).first;
        const RepContext ctx(n, l);
        m = rep_word(ctx, GeneratorWord::parse(l, cfg.name));
    }
    std::ostringstream text;
    if (cfg.q.empty())
        write_matrix(text, m);
    else
        write_matrix(text, specialize(m, parse_rational(cfg.q.front())));
    emit(cfg, out, text.str());
    return kExitPass;
}

long long double_factorial_odd(int l) {
    long long r = 1;
    for (int k = 1; k <= 2 * l - 1; k += 2) r *= k;
    return r;
}

int cmd_dims(const Config& cfg, std::ostream& out) {
    const auto [n, n_hi] = parse_range(cfg.n);
    const auto [l, l_hi] = parse_range(cfg.l);
    if (n != n_hi || l != l_hi) throw UsageError("dims takes a single --n and --l");
    const auto points = q_points(cfg);
    const DualityResult d = check_centralizer_duality(l, n, points);
    const long long diagrams = double_factorial_odd(l);
    std::ostringstream text;
    if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["l"] = l;
        j["q"] = d.report.specialization;
        j["algebra"] = d.algebra_dimension;
        j["commutant"] = d.commutant_dimension;
        j["diagrams"] = diagrams;
        j["duality_observed"] = d.equal();
        text << j.dump(2) << '\n';
    } else {
        text << "algebra " << d.algebra_dimension << '\n'
             << "commutant " << d.commutant_dimension << '\n'
             << "diagrams " << diagrams << '\n';
    }
    emit(cfg, out, text.str());
    return kExitPass;
}

int cmd_export(const Config& cfg, std::ostream& out) {
    std::ostringstream text;
    if (cfg.name == "diagrams") {
        const int l = parse_range(cfg.l).first;
        const auto ds = enumerate_diagrams(l);
        if (cfg.format == "json") {
            nlohmann::ordered_json j = nlohmann::ordered_json::array();
            for (const auto& d : ds) j.push_back(d.to_string());
            text << j.dump(2) << '\n';
        } else {
            for (const auto& d : ds) text << d.to_string() << '\n';
        }
    } else if (cfg.name == "catalog") {
        if (cfg.format == "json") {
            nlohmann::ordered_json j = nlohmann::ordered_json::array();
            for (const auto& e : relation_catalog())
                j.push_back({{"suite", suite_name(e.suite)}, {"relation_id", e.relation_id}, {"statement", e.statement}});
            text << j.dump(2) << '\n';
        } else {
            for (const auto& e : relation_catalog())
                text << suite_name(e.suite) << ' ' << e.relation_id << "  " << e.statement << '\n';
        }
    } else if (cfg.name == "report") {
        if (cfg.in.empty()) throw UsageError("export report needs --in");
        std::ifstream file(cfg.in);
        if (!file) throw UsageError("cannot read " + cfg.in);
        std::stringstream buf;
        buf << file.rdbuf();
        const auto reports = reports_from_json(buf.str());
        text << (cfg.format == "json" ? to_json(reports) + "\n" : to_text(reports));
    } else if (cfg.name == "matrices") {
        if (cfg.out.empty()) throw UsageError("export matrices needs --out <directory>");
        const auto [n, n_hi] = parse_range(cfg.n);
        const int l = parse_range(cfg.l).first;
        const RepContext ctx(n, l);
        std::filesystem::create_directories(cfg.out);
        auto save = [&](const std::string& file, const PolyMatrix& m) {
            std::ofstream f(std::filesystem::path(cfg.out) / file);
            if (!f) throw UsageError("cannot write " + file);
            if (cfg.q.empty())
                write_matrix(f, m);
            else
                write_matrix(f, specialize(m, parse_rational(cfg.q.front())));
            out << file << '\n';
        };
        for (int i = 1; i < l; ++i) {
            save("sigma" + std::to_string(i) + ".mat", ctx.sigma(i));
            save("e" + std::to_string(i) + ".mat", ctx.e(i));
        }
        save("S.mat", rep_S(n, l));
        return kExitPass;
    } else {
        throw UsageError("unknown export kind '" + cfg.name + "' (diagrams, catalog, report, matrices)");
    }
    emit(cfg, out, text.str());
    return kExitPass;
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
    auto to_int = [&](const std::string& s) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) throw std::invalid_argument("bad range '" + text + "'");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = to_int(text);
        return {v, v};
    }
    const int a = to_int(text.substr(0, dots)), b = to_int(text.substr(dots + 2));
    if (a > b) throw std::invalid_argument("empty range '" + text + "'");
    return {a, b};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Exact operators and relation checks for the quantum Brauer algebra", "qbrauer"};
    app.require_subcommand(1);
    auto common = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "local dimension, N or A..B");
        sub->add_option("--l", cfg.l, "tensor power, N or A..B");
        sub->add_option("--q", cfg.q, "rational specialisation point p/r (repeatable)");
        sub->add_option("--out", cfg.out, "output file");
        sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };
    auto* verify = app.add_subcommand("verify", "run relation suites over an (n, l) grid");
    common(verify);
    verify->add_option("--suite", cfg.suites, "suite name or 'all' (repeatable)")->delimiter(',');
    verify->add_option("--negative-control", cfg.negative_control, "perturb-r or z-shift");
    auto* build = app.add_subcommand("build", "write one operator in the interchange format");
    common(build);
    build->add_option("name", cfg.name, "R Rtilde P Rprime Rcheck RcheckInv Q Qbar D, S, or a word like 's1 e2'")
        ->required();
    auto* dims = app.add_subcommand("dims", "algebra, commutant and diagram dimensions");
    common(dims);
    auto* exp = app.add_subcommand("export", "diagrams, catalog, report or matrices");
    common(exp);
    exp->add_option("kind", cfg.name, "diagrams, catalog, report or matrices")->required();
    exp->add_option("--in", cfg.in, "report file for 'export report'");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "qbrauer: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(cfg, out);
        if (build->parsed()) return cmd_build(cfg, out);
        if (dims->parsed()) return cmd_dims(cfg, out);
        return cmd_export(cfg, out);
    } catch (const GuardError& e) {
        err << "qbrauer: guard: " << e.what() << '\n';
    } catch (const GenericityError& e) {
        err << "qbrauer: genericity: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "qbrauer: " << e.what() << '\n';
    }
    return kExitUsage;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace qbrauer
