#ifndef COBORD_SEVERI_HPP
#define COBORD_SEVERI_HPP

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "cobord/graded_poly.hpp"
#include "cobord/rational.hpp"

namespace cobord {

// Plane curves of degree d with delta nodes and tangency multiplicities with
// a fixed line: alpha[k-1] points of contact order k at assigned points,
// beta[k-1] at unassigned points. Contact orders must balance the degree:
// sum k*(alpha_k + beta_k) = d.
struct CHState {
    int d = 0;
    int delta = 0;
    std::vector<int> alpha;
    std::vector<int> beta;
};

// beta = (d), alpha empty: the plain Severi degree N^{d,delta}.
CHState severi_state(int d, int delta);

// The Caporaso-Harris recursion with a synchronized memo table. Values are
// exact and nonnegative; InvalidState on a degree-balance violation.
class SeveriEngine {
public:
    Int evaluate(const CHState& state);

private:
    using Key = std::tuple<int, int, std::vector<int>, std::vector<int>>;
    Int evaluate_locked(const CHState& state);

    std::mutex mutex_;
    std::map<Key, Int> memo_;
};

// Convenience wrapper over a shared engine.
Int severi(const CHState& state);

// Exact interpolating polynomial in d through the first degree+1 samples;
// the remaining samples must match it (InconsistentSamples otherwise, which
// signals d below the polynomiality threshold).
GradedPoly fit_polynomial(const std::vector<std::pair<int, Int>>& samples, int degree);

// Leading coefficient helper for fitted polynomials.
Rational leading_coefficient(const GradedPoly& poly_in_d);

} // namespace cobord

#endif
