#ifndef RAMAN_NUMKERNEL_HPP
#define RAMAN_NUMKERNEL_HPP

#include <vector>

namespace raman {

/// Table of ln(n!) used wherever factorial ratios would overflow doubles.
/// Built once; immutable afterwards, safe to read concurrently.
struct LogFactorialTable {
    std::vector<double> values;
    int max_n = 0;

    explicit LogFactorialTable(int max_n_arg);
};

/// ln(n!) — table lookup below the build threshold, lgamma above it.
double log_factorial(int n);

/// 0.5 * (ln a! + ln b! - ln c! - ln d!), all arguments >= 0.
double half_log_factorial_ratio(int a, int b, int c, int d);

/// ln C(n, k); 0 <= k <= n.
double log_binomial(int n, int k);

/// Generalized Laguerre polynomial L_n^{(a)}(x), stable forward recurrence.
double laguerre(int n, double a, double x);

/// Terminating confluent hypergeometric 1F1(-m; b; x).
/// b must not be an integer in (-m, 0].
double kummer_poly(int m, double b, double x);

} // namespace raman

#endif
