#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pwalk/calculus.hpp"
#include "pwalk/distance.hpp"
#include "pwalk/harness.hpp"
#include "pwalk/martrep.hpp"
#include "pwalk/parallel.hpp"
#include "pwalk/report.hpp"
#include "pwalk/walk.hpp"

// Times every scan kernel in both execution modes and checks that the two
// reports agree. The serial run is the reference; the speedup column is the
// whole point of keeping both.

namespace {

struct BenchCase {
    std::string name;
    std::function<pwalk::VerificationReport(pwalk::Exec)> run;
};

double run_ms(const std::function<pwalk::VerificationReport(pwalk::Exec)>& fn, pwalk::Exec exec,
              pwalk::VerificationReport* out) {
    const auto t0 = std::chrono::steady_clock::now();
    *out = fn(exec);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
    using pwalk::Eisenstein;
    using pwalk::Exec;
    using pwalk::RunConfig;

    std::vector<BenchCase> cases;
    cases.push_back({"tables radius 120",
                     [](Exec e) { return pwalk::verify_tables(120, e); }});
    cases.push_back({"tanaka sites radius 150",
                     [](Exec e) { return pwalk::tanaka_site_scan(150, e); }});
    cases.push_back({"tanaka paths T=11", [](Exec e) {
                         return pwalk::tanaka_path_scan(
                             pwalk::PathEnumeration(Eisenstein{0, 0}, 11), e);
                     }});
    cases.push_back({"per-site bijection radius 200",
                     [](Exec e) { return pwalk::per_site_bijection_check(200, e); }});
    cases.push_back({"theorem bijection T=11", [](Exec e) {
                         return pwalk::exhaustive_theorem_check(Eisenstein{0, 0}, 11, e);
                     }});
    cases.push_back({"gram t=5", [](Exec e) { return pwalk::gram_check(5, e); }});
    cases.push_back({"monte carlo 2e5 x 100", [](Exec e) {
                         RunConfig cfg;
                         cfg.trials = 200000;
                         cfg.steps = 100;
                         return pwalk::monte_carlo_check(cfg, e);
                     }});
    cases.push_back({"scaling probe 4e3 x 1e4", [](Exec e) {
                         RunConfig cfg;
                         cfg.trials = 4000;
                         cfg.steps = 10000;
                         return pwalk::scaling_probe(cfg, e);
                     }});

    std::printf("workers: %d\n", pwalk::effective_workers());
    std::printf("%-32s %12s %12s %9s %7s %7s\n", "kernel", "serial ms", "parallel ms", "speedup",
                "match", "pass");
    int bad = 0;
    for (const BenchCase& c : cases) {
        pwalk::VerificationReport serial, parallel;
        const double ts = run_ms(c.run, Exec::Serial, &serial);
        const double tp = run_ms(c.run, Exec::Parallel, &parallel);
        const bool match = same_outcome(serial, parallel);
        if (!match || !serial.pass()) ++bad;
        std::printf("%-32s %12.1f %12.1f %8.2fx %7s %7s\n", c.name.c_str(), ts, tp,
                    tp > 0 ? ts / tp : 0.0, match ? "yes" : "NO",
                    serial.pass() ? "yes" : "NO");
    }
    return bad == 0 ? 0 : 1;
}
