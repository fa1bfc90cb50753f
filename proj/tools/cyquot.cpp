// Command-line frontend: classification of local types, admissible primes,
// exhaustive configuration solving, verification of configuration files,
// S_n tables, and the bundled worked examples.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cyq/examples.hpp"
#include "cyq/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckedFalse = 1;
constexpr int kExitInputError = 2;

struct Options {
    bool json = false;
};

std::string approx(const cyq::Cyclotomic& z) {
    std::complex<double> v = z.embed();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f%+.6fi", v.real(), v.imag());
    return buf;
}

void emit(const Options& opt, const cyq::json& payload, const std::vector<std::string>& lines) {
    if (opt.json) {
        std::cout << payload.dump(2) << "\n";
    } else {
        for (const auto& line : lines) std::cout << line << "\n";
    }
}

std::vector<unsigned> parse_exponents(const std::string& csv) {
    std::vector<unsigned> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(static_cast<unsigned>(std::stoul(item)));
    if (out.size() != 3) throw std::invalid_argument("expected three comma-separated exponents");
    return out;
}

int cmd_classify(const Options& opt, unsigned p, const std::string& exps_csv) {
    auto e = parse_exponents(exps_csv);
    cyq::LocalType t(p, {e[0], e[1], e[2]});
    cyq::SingularityClassification c = cyq::classify(t);

    cyq::json payload{{"command", "classify"}, {"type", cyq::to_json(t)},
                      {"classification", cyq::to_json(c)}};
    std::vector<std::string> lines;
    const auto& a = t.exponents();
    std::ostringstream head;
    head << "local type p=" << p << " exponents (" << a[0] << "," << a[1] << "," << a[2] << ")";
    lines.push_back(head.str());
    lines.push_back("  isolated:         " + std::string(c.isolated ? "true" : "false"));
    lines.push_back("  quasi-reflection: " + std::string(c.quasi_reflection ? "true" : "false"));
    lines.push_back("  gorenstein:       " + std::string(c.gorenstein ? "true" : "false"));
    if (c.canonical) lines.push_back("  canonical:        " + std::string(*c.canonical ? "true" : "false"));
    if (c.terminal) lines.push_back("  terminal:         " + std::string(*c.terminal ? "true" : "false"));
    lines.push_back("  s = " + std::to_string(c.s));
    for (const auto& [u, age] : c.ages)
        lines.push_back("  age(u=" + std::to_string(u) + ") = " + cyq::to_string(age));
    emit(opt, payload, lines);
    return kExitOk;
}

int cmd_primes(const Options& opt, unsigned long max) {
    auto list = cyq::admissible_primes(max);
    cyq::json rows = cyq::json::array();
    std::vector<std::string> lines;
    lines.push_back("admissible primes up to " + std::to_string(max) +
                    " (quotient with only terminal points, nonempty fixed locus):");
    for (const auto& ap : list) {
        rows.push_back(cyq::to_json(ap));
        lines.push_back("  p = " + std::to_string(ap.p) + "  fixed points q = " +
                        std::to_string(ap.q));
    }
    if (list.empty()) lines.push_back("  (none)");
    emit(opt, cyq::json{{"command", "primes"}, {"max", max}, {"primes", rows}}, lines);
    return kExitOk;
}

void describe_config(const cyq::FixedConfig& config, const cyq::ConfigReport& report,
                     std::vector<std::string>& lines, const std::string& indent) {
    std::ostringstream os;
    os << indent << "p=" << config.prime() << " r=" << config.trace_exponent() << " points="
       << config.total_points() << " [";
    bool first = true;
    for (const auto& pm : config.points()) {
        const auto& e = pm.type.exponents();
        if (!first) os << ", ";
        os << pm.multiplicity << "x(" << e[0] << "," << e[1] << "," << e[2] << ")";
        first = false;
    }
    os << "]";
    lines.push_back(os.str());
    lines.push_back(indent + "  lhs = " + report.lhs.to_string() + "  (~" + approx(report.lhs) +
                    ")");
    lines.push_back(indent + "  rhs = " + report.rhs.to_string() + "  (~" + approx(report.rhs) +
                    ")");
    lines.push_back(indent + "  valid = " + std::string(report.valid ? "true" : "false"));
    lines.push_back(indent + "  conti: " + report.conti.lhs.get_str() + " = " +
                    report.conti.rhs.get_str() + " -> " + (report.conti.ok ? "ok" : "FAIL"));
    for (const auto& pr : report.points) {
        const auto& e = pr.type.exponents();
        std::ostringstream ps;
        ps << indent << "  " << pr.multiplicity << "x(" << e[0] << "," << e[1] << "," << e[2]
           << "): S0=" << pr.s0.get_str();
        if (pr.classification.terminal)
            ps << (*pr.classification.terminal ? " terminal" : " non-terminal");
        if (pr.classification.gorenstein) ps << " gorenstein";
        lines.push_back(ps.str());
    }
    if (report.order3) {
        lines.push_back(indent + "  order-3 counts: n1=" + std::to_string(report.order3->n1) +
                        " n2=" + std::to_string(report.order3->n2) +
                        (report.order3->consistent ? " (consistent)" : " (INCONSISTENT)"));
    }
    if (report.order5) {
        lines.push_back(indent + "  order-5 counts: n=" + std::to_string(report.order5->n) +
                        " q1=" + std::to_string(report.order5->q1) + " q2=" +
                        std::to_string(report.order5->q2) +
                        (report.order5->consistent ? " (n = 5 + q2)" : " (INCONSISTENT)"));
    }
}

int cmd_solve(const Options& opt, unsigned p, unsigned r, unsigned max_points) {
    auto sols = cyq::solve_configs(p, r, max_points);
    cyq::json rows = cyq::json::array();
    std::vector<std::string> lines;
    lines.push_back("configurations with p=" + std::to_string(p) + " r=" + std::to_string(r) +
                    " and at most " + std::to_string(max_points) + " points: " +
                    std::to_string(sols.size()));
    for (const auto& sol : sols) {
        cyq::ConfigReport rep = cyq::verify_config(sol);
        cyq::json row{{"config", cyq::to_json(sol)}, {"report", cyq::to_json(rep)}};
        rows.push_back(row);
        describe_config(sol, rep, lines, "  ");
    }
    emit(opt,
         cyq::json{{"command", "solve"},
                   {"p", p},
                   {"r", r},
                   {"max_points", max_points},
                   {"solutions", rows}},
         lines);
    return kExitOk;
}

int cmd_verify(const Options& opt, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open '" << path << "'\n";
        return kExitInputError;
    }
    cyq::json j = cyq::json::parse(in);
    cyq::FixedConfig config = cyq::fixed_config_from_json(j);
    cyq::ConfigReport report = cyq::verify_config(config);
    std::vector<std::string> lines;
    describe_config(config, report, lines, "");
    emit(opt,
         cyq::json{{"command", "verify"}, {"config", cyq::to_json(config)},
                   {"report", cyq::to_json(report)}},
         lines);
    return report.valid ? kExitOk : kExitCheckedFalse;
}

int cmd_s0(const Options& opt, unsigned p, const std::string& exps_csv, bool full) {
    std::vector<std::string> lines;
    cyq::json rows = cyq::json::array();
    auto table_for = [&](const cyq::LocalType& t) {
        const auto& e = t.exponents();
        std::ostringstream os;
        os << "(" << e[0] << "," << e[1] << "," << e[2] << "):";
        cyq::json row{{"type", cyq::to_json(t)}};
        if (full) {
            cyq::json values = cyq::json::array();
            for (unsigned n = 0; n < p; ++n) {
                cyq::Integer v = cyq::congruence_sum(t, n);
                os << " S" << n << "=" << v.get_str();
                values.push_back(cyq::to_json(v));
            }
            row["s_n"] = values;
        } else {
            cyq::Integer v = cyq::congruence_sum(t, 0);
            os << " S0=" << v.get_str();
            row["s0"] = cyq::to_json(v);
        }
        if (t.terminal()) os << " (terminal)";
        row["terminal"] = t.terminal();
        rows.push_back(row);
        lines.push_back("  " + os.str());
    };
    if (!exps_csv.empty()) {
        auto e = parse_exponents(exps_csv);
        cyq::LocalType t(p, {e[0], e[1], e[2]});
        lines.push_back("S_n table for p=" + std::to_string(p) + ":");
        table_for(t);
    } else {
        lines.push_back("S_n table over all isolated types for p=" + std::to_string(p) + ":");
        for (const auto& t : cyq::enumerate_isolated_types(p)) table_for(t);
        lines.push_back("closed form for terminal types: " +
                        cyq::to_string(cyq::terminal_s0_value(p)));
    }
    emit(opt, cyq::json{{"command", "s0"}, {"p", p}, {"rows", rows}}, lines);
    return kExitOk;
}

int cmd_example(const Options& opt, const std::string& name, const std::string& data_dir) {
    namespace fs = std::filesystem;
    fs::path path = fs::path(data_dir) / "examples" / (name + ".json");
    std::ifstream in(path);
    if (!in) {
        std::cerr << "unknown example '" << name << "' (no file " << path.string() << ")\n";
        return kExitInputError;
    }
    cyq::json data = cyq::json::parse(in);
    cyq::ExampleReport report = cyq::run_example(data);

    std::vector<std::string> lines;
    lines.push_back("example " + report.name +
                    (report.title.empty() ? "" : ": " + report.title));
    cyq::json jlines = cyq::json::array();
    for (const auto& line : report.lines) {
        std::string tag = line.status == cyq::CheckLine::Status::Pass   ? "PASS"
                          : line.status == cyq::CheckLine::Status::Fail ? "FAIL"
                                                                        : "info";
        lines.push_back("  [" + tag + "] " + line.name + ": " + line.detail);
        jlines.push_back(cyq::json{{"status", tag}, {"name", line.name}, {"detail", line.detail}});
    }
    lines.push_back(report.ok() ? "all checks passed" : "SOME CHECKS FAILED");
    emit(opt,
         cyq::json{{"command", "example"},
                   {"name", report.name},
                   {"checks", jlines},
                   {"details", report.details},
                   {"ok", report.ok()}},
         lines);
    return report.ok() ? kExitOk : kExitCheckedFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of isolated fixed points of prime-order automorphisms "
                 "of Calabi-Yau threefolds"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "machine-readable JSON output");

    unsigned p = 2, r = 0, max_points = 64;
    unsigned long max_prime = 100;
    std::string exps, file, name, data_dir = CYQUOT_DEFAULT_DATA_DIR;
    bool full = false;

    CLI::App* classify = app.add_subcommand("classify", "classify a local type");
    classify->add_option("--p", p, "prime order")->required();
    classify->add_option("--exps", exps, "comma-separated exponents a1,a2,a3")->required();

    CLI::App* primes = app.add_subcommand("primes", "admissible primes for terminal quotients");
    primes->add_option("--max", max_prime, "upper bound")->required();

    CLI::App* solve = app.add_subcommand("solve", "enumerate admissible configurations");
    solve->add_option("--p", p, "prime order")->required();
    solve->add_option("--r", r, "trace exponent")->required();
    solve->add_option("--max", max_points, "maximal number of points");

    CLI::App* verify = app.add_subcommand("verify", "verify a configuration file");
    verify->add_option("file", file, "configuration JSON file")->required();

    CLI::App* s0 = app.add_subcommand("s0", "print S_n tables");
    s0->add_option("--p", p, "prime order")->required();
    s0->add_option("--exps", exps, "comma-separated exponents a1,a2,a3");
    s0->add_flag("--full", full, "all S_n, not only S_0");

    CLI::App* example = app.add_subcommand("example", "run a bundled worked example");
    example->add_option("name", name, "example name (p2p2, fermat5, p1x4-klein, d16xz2)")
        ->required();
    example->add_option("--data", data_dir, "data directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (classify->parsed()) return cmd_classify(opt, p, exps);
        if (primes->parsed()) return cmd_primes(opt, max_prime);
        if (solve->parsed()) return cmd_solve(opt, p, r, max_points);
        if (verify->parsed()) return cmd_verify(opt, file);
        if (s0->parsed()) return cmd_s0(opt, p, exps, full);
        if (example->parsed()) return cmd_example(opt, name, data_dir);
    } catch (const cyq::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
