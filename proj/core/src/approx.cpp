#include "uff/approx.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uff {

namespace {

double to_double(const BigInt& v) { return v.convert_to<double>(); }

double rel_error_of(double approx, const BigInt& exact) {
    const double e = to_double(exact);
    return std::abs(approx - e) / e;
}

}  // namespace

double stirling_binom(int k, int j) {
    if (k < 1 || j <= 0 || j >= k)
        throw std::domain_error("stirling_binom: requires 0 < j < k (endpoints are singular)");
    const double kk = k, jj = j, d = k - j;
    const double log_value = -0.5 * std::log(2.0 * std::numbers::pi) + (kk + 0.5) * std::log(kk) -
                             (jj + 0.5) * std::log(jj) - (d + 0.5) * std::log(d);
    return std::exp(log_value);
}

double central_binom_approx(int n) {
    if (n < 1) throw std::invalid_argument("central_binom_approx: n must be >= 1");
    const double log_value = 0.5 * std::log(2.0 / std::numbers::pi) +
                             n * std::numbers::ln2 - 0.5 * std::log(static_cast<double>(n));
    return std::exp(log_value);
}

DominanceRatio dominance_ratio(int n) {
    if (n < 4) throw std::invalid_argument("dominance_ratio: n must be >= 4");
    const int m = (n + 1) / 2;
    const BigRat exact(binomial(n, m), binomial(m - 1, m / 2));
    DominanceRatio r;
    r.exact_ratio = exact.convert_to<double>();
    r.paper_estimate = std::exp2(0.5 * (n - 1));
    return r;
}

double cushion_split_estimate(int n, int t) {
    if (t < 1 || t > n - 1) throw std::invalid_argument("cushion_split_estimate: t out of [1,n-1]");
    const double log_value = -std::log(2.0 * std::numbers::pi) + (n + 2) * std::numbers::ln2 -
                             0.5 * std::log(static_cast<double>(t) * (n - t));
    return std::exp(log_value);
}

ApproxReport stirling_report(int k, int j) {
    ApproxReport r;
    r.n = k;
    r.exact = binomial(k, j);
    r.approx = stirling_binom(k, j);
    r.rel_error = rel_error_of(r.approx, r.exact);
    return r;
}

ApproxReport central_report(int n) {
    ApproxReport r;
    r.n = n;
    r.exact = binomial(n, (n + 1) / 2);
    r.approx = central_binom_approx(n);
    r.rel_error = rel_error_of(r.approx, r.exact);
    return r;
}

}  // namespace uff
