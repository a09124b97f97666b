#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pwalk/eisenstein.hpp"
#include "pwalk/parallel.hpp"
#include "pwalk/rational.hpp"
#include "pwalk/report.hpp"
#include "pwalk/walk.hpp"

// The orthonormal family dZ_S indexed by words over {1, zeta, zeta^2}, and
// the exact expansion of adapted functionals in it: Gram identity, expansion
// coefficients, and the reconstruction with the predictable integrands
// regrouped against dZ_t, conj(dZ_t), and a drift term. All expectations are
// exhaustive rational averages over the 3^t equally likely paths.

namespace pwalk {

// Word S = (s_1, ..., s_t). Letter i selects the factor contributed by
// increment i: One -> no factor, Zeta -> dZ_i, ZetaSq -> conj(dZ_i).
using SignatureWord = std::vector<Step>;

// Word with lexicographic index `index` among the 3^t of length t
// (big-endian base-3 digits, same ordering as PathEnumeration).
SignatureWord signature_from_index(int t, std::int64_t index);

// The basis element: product over i of the selected factors (empty product
// = 1). The value is always a unit of the ring. Throws if the path is
// shorter than the word.
Eisenstein onb_element(const SignatureWord& S, const WalkPath& path);

// A process adapted to the step filtration: one exact value per (time t,
// prefix of length t), materialized for every prefix up to the horizon.
class AdaptedFunctional {
  public:
    // eval receives the prefix path of length t and returns X_t. martingale
    // marks processes whose drift term must vanish identically; the
    // reconstruction check enforces it.
    AdaptedFunctional(std::string name, const Eisenstein& start, int horizon,
                      const std::function<EisensteinQ3(const WalkPath&)>& eval, bool martingale);

    const std::string& name() const { return name_; }
    const Eisenstein& start() const { return start_; }
    int horizon() const { return horizon_; }
    bool martingale_hint() const { return martingale_; }

    // X_t on the length-t prefix with lexicographic index prefix_index.
    const EisensteinQ3& value(int t, std::int64_t prefix_index) const;

  private:
    std::string name_;
    Eisenstein start_;
    int horizon_;
    bool martingale_;
    std::vector<std::vector<EisensteinQ3>> levels_;  // levels_[t] has 3^t entries
};

AdaptedFunctional adapted_z(const Eisenstein& start, int horizon);
AdaptedFunctional adapted_conj_z(const Eisenstein& start, int horizon);
// X_t = ||Z_t|| - L_t (a real martingale by the radial theorem).
AdaptedFunctional adapted_radial(const Eisenstein& start, int horizon);
// Seeded values in (1/3) Z[zeta], adapted by construction; not a martingale.
AdaptedFunctional adapted_random(const Eisenstein& start, int horizon, std::uint64_t seed);
// X_t = t: pure drift, reconstruction must still be exact.
AdaptedFunctional adapted_time(const Eisenstein& start, int horizon);

// E[dZ_S conj(dZ_S')] over all 3^t paths is 1 at S = S' and 0 elsewhere;
// checked as exact integer sums (sum = 3^t or 0). Cap t <= 5.
VerificationReport gram_check(int t, Exec exec = Exec::Parallel);

// x_S = E[(X_t - X_{t-1}) conj(dZ_S)] for every word of length t, indexed
// lexicographically.
std::vector<EisensteinQ3> coefficients(const AdaptedFunctional& X, int t);

// On every prefix and every time t <= T, check
//   X_t - X_{t-1} = (sum_{s_t=zeta} x_S dZ_S') dZ_t
//                 + (sum_{s_t=zeta^2} x_S dZ_S') conj(dZ_t)
//                 + sum_{s_t=1} x_S dZ_S'
// exactly, where S' drops the last letter; for martingale_hint processes the
// drift sum must also vanish on every prefix. Cap T <= 7.
VerificationReport representation_check(const AdaptedFunctional& X, int T,
                                        Exec exec = Exec::Parallel);

}  // namespace pwalk
