#include "cobord/severi.hpp"

#include <algorithm>
#include <functional>

#include "cobord/errors.hpp"
#include "cobord/rat_matrix.hpp"

namespace cobord {

namespace {

void trim(std::vector<int>& v) {
    while (!v.empty() && v.back() == 0)
        v.pop_back();
}

int weighted_sum(const std::vector<int>& v) {
    int total = 0;
    for (size_t k = 0; k < v.size(); ++k)
        total += static_cast<int>(k + 1) * v[k];
    return total;
}

int plain_sum(const std::vector<int>& v) {
    int total = 0;
    for (int x : v)
        total += x;
    return total;
}

// All multiplicity vectors gamma with sum k*gamma_k = target.
std::vector<std::vector<int>> contact_distributions(int target) {
    std::vector<std::vector<int>> result;
    std::vector<int> current(static_cast<size_t>(std::max(target, 0)), 0);
    std::function<void(int, int)> recurse = [&](int k, int remaining) {
        if (remaining == 0) {
            result.push_back(current);
            return;
        }
        if (k > remaining)
            return;
        for (int count = 0; count * k <= remaining; ++count) {
            current[static_cast<size_t>(k - 1)] = count;
            recurse(k + 1, remaining - count * k);
        }
        current[static_cast<size_t>(k - 1)] = 0;
    };
    if (target >= 0)
        recurse(1, target);
    return result;
}

} // namespace

CHState severi_state(int d, int delta) {
    CHState state;
    state.d = d;
    state.delta = delta;
    if (d >= 1)
        state.beta.assign(static_cast<size_t>(d), 0);
    if (d >= 1)
        state.beta[0] = d;
    return state;
}

Int severi(const CHState& state) {
    static SeveriEngine engine;
    return engine.evaluate(state);
}

Int SeveriEngine::evaluate(const CHState& state) {
    if (state.d < 1)
        throw InvalidState("degree must be at least 1");
    if (state.delta < 0)
        throw InvalidState("node count must be nonnegative");
    if (weighted_sum(state.alpha) + weighted_sum(state.beta) != state.d)
        throw InvalidState("contact orders do not balance the degree");
    std::lock_guard<std::mutex> lock(mutex_);
    return evaluate_locked(state);
}

Int SeveriEngine::evaluate_locked(const CHState& state) {
    CHState s = state;
    trim(s.alpha);
    trim(s.beta);

    if (s.d == 1)
        return s.delta == 0 ? 1 : 0;

    Key key{s.d, s.delta, s.alpha, s.beta};
    auto found = memo_.find(key);
    if (found != memo_.end())
        return found->second;

    Int total = 0;

    // Specialize one unassigned contact point onto the fixed line.
    for (size_t k = 0; k < s.beta.size(); ++k) {
        if (s.beta[k] == 0)
            continue;
        CHState next = s;
        if (next.alpha.size() < k + 1)
            next.alpha.resize(k + 1, 0);
        next.alpha[k] += 1;
        next.beta[k] -= 1;
        total += Int(static_cast<long>(k + 1)) * evaluate_locked(next);
    }

    // Split off the line: a residual curve of degree d-1 meets the line in
    // contact orders alpha' <= alpha and beta' >= beta.
    int d1 = s.d - 1;
    std::vector<int> alpha_prime(s.alpha.size(), 0);
    std::function<void(size_t, int, Int)> choose_alpha = [&](size_t idx, int i_alpha,
                                                             Int alpha_binom) {
        if (idx == s.alpha.size()) {
            int rest = d1 - i_alpha - weighted_sum(s.beta);
            if (rest < 0)
                return;
            for (const std::vector<int>& gamma : contact_distributions(rest)) {
                int delta_prime = s.delta + plain_sum(gamma) - d1;
                if (delta_prime < 0)
                    continue;
                CHState next;
                next.d = d1;
                next.delta = delta_prime;
                next.alpha = alpha_prime;
                next.beta = s.beta;
                if (next.beta.size() < gamma.size())
                    next.beta.resize(gamma.size(), 0);
                Int multiplier = alpha_binom;
                for (size_t k = 0; k < gamma.size(); ++k) {
                    if (gamma[k] == 0)
                        continue;
                    next.beta[k] += gamma[k];
                    for (int e = 0; e < gamma[k]; ++e)
                        multiplier *= static_cast<long>(k + 1);
                    // choose which of the beta'_k contacts persist as beta_k
                    multiplier *= binomial(next.beta[k], gamma[k]);
                }
                if (weighted_sum(next.alpha) + weighted_sum(next.beta) != next.d)
                    continue;
                total += multiplier * evaluate_locked(next);
            }
            return;
        }
        for (int take = 0; take <= s.alpha[idx]; ++take) {
            alpha_prime[idx] = take;
            choose_alpha(idx + 1, i_alpha + static_cast<int>(idx + 1) * take,
                         Int(alpha_binom * binomial(s.alpha[idx], take)));
        }
        alpha_prime[idx] = 0;
    };
    choose_alpha(0, 0, 1);

    memo_.emplace(std::move(key), total);
    return total;
}

GradedPoly fit_polynomial(const std::vector<std::pair<int, Int>>& samples, int degree) {
    if (degree < 0)
        throw InvalidState("polynomial degree must be nonnegative");
    if (samples.size() < static_cast<size_t>(degree) + 1)
        throw InvalidState("need at least degree+1 samples");

    size_t n = static_cast<size_t>(degree) + 1;
    RatMatrix vandermonde(n, n);
    std::vector<Rational> rhs(n);
    for (size_t r = 0; r < n; ++r) {
        Rational power = 1;
        for (size_t c = 0; c < n; ++c) {
            vandermonde.at(r, c) = power;
            power *= samples[r].first;
        }
        rhs[r] = Rational(samples[r].second);
    }
    std::vector<Rational> coeffs = solve_linear(vandermonde, rhs);

    auto table = std::make_shared<VarTable>(std::vector<std::string>{"d"}, std::vector<int>{1});
    GradedPoly poly(table);
    for (size_t c = 0; c < n; ++c)
        poly.add_term({static_cast<int>(c)}, coeffs[c]);

    for (const auto& [x, y] : samples) {
        if (poly.evaluate({make_rational(x)}) != Rational(y))
            throw InconsistentSamples("sample at d=" + std::to_string(x) +
                                      " is off the interpolating polynomial");
    }
    return poly;
}

Rational leading_coefficient(const GradedPoly& poly_in_d) {
    Rational lead = 0;
    int best = -1;
    for (const auto& [exps, coeff] : poly_in_d.terms()) {
        if (exps[0] > best) {
            best = exps[0];
            lead = coeff;
        }
    }
    return lead;
}

} // namespace cobord
