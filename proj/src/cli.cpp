#include "pwalk/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pwalk/calculus.hpp"
#include "pwalk/distance.hpp"
#include "pwalk/harness.hpp"
#include "pwalk/martrep.hpp"
#include "pwalk/regions.hpp"
#include "pwalk/walk.hpp"

namespace pwalk {
namespace {

Eisenstein parse_start(const std::string& text) {
    // "a,b", tolerating surrounding parentheses and spaces.
    std::string s = text;
    std::erase_if(s, [](char c) { return c == '(' || c == ')' || c == ' '; });
    const std::size_t comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--start", "expected 'a,b', got '" + text + "'");
    try {
        std::size_t used_a = 0, used_b = 0;
        const std::int64_t a = std::stoll(s.substr(0, comma), &used_a);
        const std::int64_t b = std::stoll(s.substr(comma + 1), &used_b);
        if (used_a != comma || used_b != s.size() - comma - 1)
            throw std::invalid_argument("trailing characters");
        return {a, b};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--start", "expected 'a,b', got '" + text + "'");
    }
}

// Sink selected by --out: a file when given, the session stream otherwise.
class Sink {
  public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw CLI::ValidationError("--out", "cannot open '" + path + "'");
            stream_ = file_.get();
        }
    }
    std::ostream& get() { return *stream_; }

  private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_;
};

int finish(const VerificationReport& report, const std::string& out_path, std::ostream& out) {
    Sink sink(out_path, out);
    sink.get() << to_json_string(report) << "\n";
    return report.pass() ? 0 : 1;
}

void write_simulation(const WalkPath& path, const std::string& format, std::ostream& os) {
    const std::vector<LocalTimeLedger> ledgers = local_time(path);
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t t = 0; t < path.positions.size(); ++t) {
            const Eisenstein& z = path.positions[t];
            rows.push_back({{"t", t},
                            {"a", z.a},
                            {"b", z.b},
                            {"region", to_string(classify(z))},
                            {"norm", norm(z)},
                            {"l1", ledgers[t].l1},
                            {"l3", ledgers[t].l3},
                            {"l5", ledgers[t].l5},
                            {"L", ledgers[t].L()},
                            {"X", norm(z) - ledgers[t].L()}});
        }
        os << rows.dump(2) << "\n";
        return;
    }
    os << "t,a,b,region,norm,l1,l3,l5,L,X\n";
    for (std::size_t t = 0; t < path.positions.size(); ++t) {
        const Eisenstein& z = path.positions[t];
        const std::int64_t nz = norm(z);
        os << t << "," << z.a << "," << z.b << "," << to_string(classify(z)) << "," << nz << ","
           << ledgers[t].l1 << "," << ledgers[t].l3 << "," << ledgers[t].l5 << ","
           << ledgers[t].L() << "," << nz - ledgers[t].L() << "\n";
    }
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Parisian walks on the Eisenstein lattice: simulation, exact calculus, "
                 "and verification"};
    app.require_subcommand(1);

    // Shared across subcommands (same meaning and default everywhere).
    std::string start_text = "0,0";
    std::uint64_t seed = 1;
    std::string out_path;
    std::string format = "csv";
    int rc = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--start", start_text, "start point as a,b");
        cmd->add_option("--out", out_path, "write output to this file");
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    };

    // simulate
    std::int64_t sim_steps = 100;
    {
        CLI::App* cmd = app.add_subcommand("simulate", "generate one walk and emit its ledger");
        add_common(cmd);
        add_format(cmd);
        cmd->add_option("--steps", sim_steps, "number of steps")->check(CLI::NonNegativeNumber);
        cmd->add_option("--seed", seed, "random seed");
        cmd->callback([&] {
            const WalkPath path = simulate(parse_start(start_text), sim_steps, seed);
            Sink sink(out_path, out);
            write_simulation(path, format, sink.get());
            rc = 0;
        });
    }

    // classify
    {
        CLI::App* cmd = app.add_subcommand("classify", "region label and closure memberships");
        add_common(cmd);
        add_format(cmd);
        cmd->callback([&] {
            const Eisenstein z = parse_start(start_text);
            std::vector<std::string> closures;
            for (ClosureId c : kClosures)
                if (in_closure(z, c)) closures.push_back(to_string(c));
            Sink sink(out_path, out);
            if (format == "json") {
                nlohmann::json j{{"start", to_string(z)},
                                 {"region", to_string(classify(z))},
                                 {"closures", closures}};
                sink.get() << j.dump(2) << "\n";
            } else {
                sink.get() << "region: " << to_string(classify(z)) << "\n";
                sink.get() << "closures:";
                if (closures.empty()) sink.get() << " none";
                for (const std::string& c : closures) sink.get() << " " << c;
                sink.get() << "\n";
            }
            rc = 0;
        });
    }

    // norm
    {
        CLI::App* cmd = app.add_subcommand("norm", "graph distance from the anchor triangle");
        add_common(cmd);
        add_format(cmd);
        cmd->callback([&] {
            const Eisenstein z = parse_start(start_text);
            Sink sink(out_path, out);
            if (format == "json")
                sink.get() << nlohmann::json{{"start", to_string(z)}, {"norm", norm(z)}}.dump(2)
                           << "\n";
            else
                sink.get() << norm(z) << "\n";
            rc = 0;
        });
    }

    // tables
    std::int64_t tables_radius = 40;
    {
        CLI::App* cmd = app.add_subcommand("tables", "check g1/g2/g3 against the region table");
        add_common(cmd);
        cmd->add_option("--radius", tables_radius, "scan radius")->check(CLI::PositiveNumber);
        cmd->callback(
            [&] { rc = finish(verify_tables(tables_radius), out_path, out); });
    }

    // verify-ito
    int ito_t = 6;
    {
        CLI::App* cmd = app.add_subcommand(
            "verify-ito", "pathwise increment decomposition for a family of functions");
        add_common(cmd);
        cmd->add_option("--t", ito_t, "path horizon (all 3^t paths)")->check(CLI::Range(0, 10));
        cmd->add_option("--seed", seed, "seed for the random functions");
        cmd->callback([&] {
            const Eisenstein start = parse_start(start_text);
            const std::int64_t r = std::max(std::abs(start.a), std::abs(start.b)) + ito_t + 2;
            const PathEnumeration paths(start, ito_t);
            std::vector<VerificationReport> parts;
            parts.push_back(ito_path_scan(norm_function(r), paths));
            parts.push_back(ito_path_scan(coordinate_a_function(r), paths));
            parts.push_back(ito_path_scan(coordinate_b_function(r), paths));
            for (std::uint64_t k = 1; k <= 5; ++k)
                parts.push_back(ito_path_scan(random_lattice_function(r, seed + k), paths));
            rc = finish(
                merge_reports("ito identity, 8 functions, T=" + std::to_string(ito_t), parts),
                out_path, out);
        });
    }

    // verify-tanaka
    std::int64_t tanaka_radius = 60;
    int tanaka_t = 9;
    {
        CLI::App* cmd = app.add_subcommand(
            "verify-tanaka", "norm increment vs martingale-plus-local-time decomposition");
        add_common(cmd);
        cmd->add_option("--radius", tanaka_radius, "site scan radius")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--t", tanaka_t, "path horizon from the three anchor starts")
            ->check(CLI::Range(0, 13));
        cmd->callback([&] {
            std::vector<VerificationReport> parts;
            parts.push_back(tanaka_site_scan(tanaka_radius));
            for (const Eisenstein& p : kAnchors)
                parts.push_back(tanaka_path_scan(PathEnumeration(p, tanaka_t)));
            rc = finish(merge_reports("tanaka identity, radius " +
                                          std::to_string(tanaka_radius) + " and anchor paths T=" +
                                          std::to_string(tanaka_t),
                                      parts),
                        out_path, out);
        });
    }

    // verify-martrep
    int martrep_t = 5;
    {
        CLI::App* cmd = app.add_subcommand(
            "verify-martrep", "orthonormal basis and exact reconstruction of adapted processes");
        add_common(cmd);
        cmd->add_option("--t", martrep_t, "gram/reconstruction horizon")
            ->check(CLI::Range(1, 7));
        cmd->add_option("--seed", seed, "seed for the random functional");
        cmd->callback([&] {
            const Eisenstein start = parse_start(start_text);
            const int t = martrep_t;
            std::vector<VerificationReport> parts;
            parts.push_back(gram_check(std::min(t, 5)));
            for (const AdaptedFunctional& x :
                 {adapted_z(start, t), adapted_conj_z(start, t), adapted_radial(start, t),
                  adapted_random(start, t, seed)})
                parts.push_back(representation_check(x, t));
            rc = finish(
                merge_reports("martingale representation, T=" + std::to_string(t), parts),
                out_path, out);
        });
    }

    // verify-theorem
    std::int64_t theorem_radius = 60;
    int theorem_t = 9;
    {
        CLI::App* cmd = app.add_subcommand(
            "verify-theorem", "radial process is a simple walk: per-site and exhaustive");
        add_common(cmd);
        cmd->add_option("--radius", theorem_radius, "per-site scan radius")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--t", theorem_t, "exhaustive path horizon")->check(CLI::Range(1, 12));
        cmd->callback([&] {
            std::vector<VerificationReport> parts;
            parts.push_back(per_site_bijection_check(theorem_radius));
            parts.push_back(exhaustive_theorem_check(parse_start(start_text), theorem_t));
            rc = finish(merge_reports("radial theorem, radius " +
                                          std::to_string(theorem_radius) + ", T=" +
                                          std::to_string(theorem_t),
                                      parts),
                        out_path, out);
        });
    }

    // mc
    std::int64_t mc_trials = 100000;
    std::int64_t mc_steps = 100;
    {
        CLI::App* cmd = app.add_subcommand("mc", "monte carlo law check of the radial process");
        add_common(cmd);
        cmd->add_option("--trials", mc_trials, "number of walks")->check(CLI::PositiveNumber);
        cmd->add_option("--steps", mc_steps, "steps per walk")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", seed, "master seed");
        cmd->callback([&] {
            RunConfig cfg;
            cfg.seed = seed;
            cfg.trials = mc_trials;
            cfg.steps = mc_steps;
            cfg.start = parse_start(start_text);
            rc = finish(monte_carlo_check(cfg), out_path, out);
        });
    }

    // scaling-probe
    std::int64_t probe_trials = 10000;
    std::int64_t probe_steps = 10000;
    {
        CLI::App* cmd = app.add_subcommand(
            "scaling-probe", "normal approximation and isotropy at diffusive scale");
        add_common(cmd);
        cmd->add_option("--steps", probe_steps, "steps per walk (>= 10000)");
        cmd->add_option("--trials", probe_trials, "number of walks")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--seed", seed, "master seed");
        cmd->callback([&] {
            RunConfig cfg;
            cfg.seed = seed;
            cfg.trials = probe_trials;
            cfg.steps = probe_steps;
            cfg.start = parse_start(start_text);
            rc = finish(scaling_probe(cfg), out_path, out);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

}  // namespace pwalk
