#include "raman/numkernel.hpp"
#include "raman/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace raman {

namespace {
constexpr int kTableMax = 512;

const LogFactorialTable& table() {
    static const LogFactorialTable t(kTableMax);
    return t;
}
} // namespace

LogFactorialTable::LogFactorialTable(int max_n_arg) : max_n(max_n_arg) {
    values.resize(static_cast<size_t>(max_n) + 1);
    values[0] = 0.0;
    for (int n = 1; n <= max_n; ++n)
        values[n] = values[n - 1] + std::log(static_cast<double>(n));
}

double log_factorial(int n) {
    if (n < 0) throw std::domain_error("log_factorial: n must be nonnegative");
    const auto& t = table();
    if (n <= t.max_n) return t.values[n];
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double half_log_factorial_ratio(int a, int b, int c, int d) {
    return 0.5 * (log_factorial(a) + log_factorial(b) - log_factorial(c) - log_factorial(d));
}

double log_binomial(int n, int k) {
    if (k < 0 || k > n) throw std::domain_error("log_binomial: need 0 <= k <= n");
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double laguerre(int n, double a, double x) {
    if (n < 0) throw std::domain_error("laguerre: n must be nonnegative");
    if (!std::isfinite(a) || !std::isfinite(x))
        throw std::domain_error("laguerre: non-finite argument");
    if (n == 0) return 1.0;
    double lkm1 = 1.0;
    double lk = 1.0 + a - x;
    for (int k = 1; k < n; ++k) {
        double lkp1 = ((2.0 * k + 1.0 + a - x) * lk - (k + a) * lkm1) / (k + 1.0);
        lkm1 = lk;
        lk = lkp1;
    }
    return lk;
}

double kummer_poly(int m, double b, double x) {
    if (m < 0) throw std::domain_error("kummer_poly: m must be nonnegative");
    if (!std::isfinite(b) || !std::isfinite(x))
        throw std::domain_error("kummer_poly: non-finite argument");
    // (b)_k vanishes inside the sum when b is an integer in (-m, 0].
    double br = std::round(b);
    if (b == br && br <= 0.0 && br > -static_cast<double>(m))
        throw std::domain_error("kummer_poly: b is a forbidden nonpositive integer");
    double term = 1.0; // k = 0
    double sum = 1.0;
    for (int k = 0; k < m; ++k) {
        term *= (static_cast<double>(-m + k) * x) / ((b + k) * (k + 1.0));
        sum += term;
    }
    return sum;
}

} // namespace raman
