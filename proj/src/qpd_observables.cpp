#include "raman/qpd_observables.hpp"
#include "raman/errors.hpp"
#include "raman/numkernel.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace raman {

cplx ordering_shift_char(cplx C_value, double sum_beta_sq, double s1, double s2) {
    if (s1 < -1.0 || s1 > 1.0 || s2 < -1.0 || s2 > 1.0)
        throw std::domain_error("ordering_shift_char: s outside [-1, 1]");
    return C_value * std::exp(0.5 * (s2 - s1) * sum_beta_sq);
}

double photocount_from_intensity_moments(const std::vector<double>& W, int n) {
    if (n < 0) throw std::domain_error("photocount_from_intensity_moments: n < 0");
    if (static_cast<size_t>(n) >= W.size())
        throw std::invalid_argument("photocount_from_intensity_moments: need <W^k> "
                                    "beyond k = n");
    double sum = 0.0, comp = 0.0, max_term = 0.0, last = 0.0;
    const double lognf = log_factorial(n);
    for (size_t k = 0; n + k < W.size(); ++k) {
        const double mag = std::exp(std::log(std::max(std::abs(W[n + k]), 1e-300))
                                    - lognf - log_factorial(static_cast<int>(k)));
        const double term = ((k % 2 == 0) ? 1.0 : -1.0)
                            * ((W[n + k] < 0.0) ? -mag : mag);
        max_term = std::max(max_term, std::abs(term));
        const double t = sum + term;
        comp += (std::abs(sum) >= std::abs(term)) ? (sum - t) + term : (term - t) + sum;
        sum = t;
        last = std::abs(term);
    }
    sum += comp;
    const double denom = std::max(std::abs(sum), 1e-300);
    if (max_term / denom > 1e10)
        throw precision_error("photocount_from_intensity_moments: alternating sum "
                              "ill-conditioned; use the Laguerre route");
    if (last > 1e-12 * std::max(1.0, max_term))
        throw precision_error("photocount_from_intensity_moments: moment sequence "
                              "too short for convergence");
    return sum;
}

double gamma2(double mean, double second_factorial) {
    if (mean <= 0.0) throw std::domain_error("gamma2: mean must be positive");
    return second_factorial / (mean * mean) - 1.0;
}

double interbeam_g2(double cross_nm, double mean_n, double mean_m) {
    if (mean_n <= 0.0 || mean_m <= 0.0)
        throw std::domain_error("interbeam_g2: means must be positive");
    return cross_nm / (mean_n * mean_m) - 1.0;
}

double PrincipalSqueezingReport::var(double theta) const {
    return 2.0 * (std::exp(cplx{0.0, -2.0 * theta}) * da2).real() + 2.0 * ndagn + 1.0;
}

PrincipalSqueezingReport principal_squeezing(cplx da2, double ndag_n) {
    PrincipalSqueezingReport r;
    r.da2 = da2;
    r.ndagn = ndag_n;
    const double mod = std::abs(da2);
    r.var_min = -2.0 * mod + 2.0 * ndag_n + 1.0;
    r.var_max = 2.0 * mod + 2.0 * ndag_n + 1.0;
    r.wigner_cov = 4.0 * da2.imag();
    r.theta_min = 0.5 * (std::arg(da2) + M_PI);
    r.theta_max = r.theta_min + M_PI_2;
    r.standard = std::min(ndag_n + da2.real(), ndag_n - da2.real()) < 0.0;
    r.principal = ndag_n < mod;
    return r;
}

TwoModeQuadratureReport two_mode_quadratures(cplx da2_1, double n_1,
                                             cplx da2_2, double n_2,
                                             cplx d12, cplx dbar12) {
    TwoModeQuadratureReport r;
    const cplx da2 = da2_1 + da2_2 + 2.0 * d12;
    const double ndagn = n_1 + n_2 + 2.0 * dbar12.real();
    r.var1 = 2.0 * da2.real() + 2.0 * ndagn + 2.0;
    r.var2 = -2.0 * da2.real() + 2.0 * ndagn + 2.0;
    r.var_min = -2.0 * std::abs(da2) + 2.0 * ndagn + 2.0;
    r.var_max = 2.0 * std::abs(da2) + 2.0 * ndagn + 2.0;
    r.x11 = 2.0 * (d12 + dbar12).real();
    r.x22 = 2.0 * (-d12 + dbar12).real();
    r.x12 = 2.0 * (d12 + dbar12).imag();
    r.x21 = 2.0 * (d12 - dbar12).imag();
    r.wigner_cov = 4.0 * da2_1.imag() + 4.0 * da2_2.imag() + 2.0 * r.x12 + 2.0 * r.x21;
    r.standard = std::min(r.var1, r.var2) < 2.0;
    r.principal = r.var_min < 2.0;
    return r;
}

CentralMoments central_moments(const MomentSet& ms) {
    CentralMoments cm;
    const cplx aL = std::conj(ms.a_L);   // <a_L>
    const cplx aS = std::conj(ms.a_S);
    cm.dL2 = std::conj(ms.a_L2) - aL * aL;
    cm.dS2 = std::conj(ms.a_S2) - aS * aS;
    cm.nL = ms.mean_n - std::norm(aL);
    cm.nS = ms.mean_m - std::norm(aS);
    cm.dLS = std::conj(ms.a_L_a_S) - aL * aS;
    cm.dbarLS = ms.a_Ldag_a_S - ms.a_L * aS;
    return cm;
}

// ------------------------------------------------------- Q reconstruction

namespace {

// <k | T^{(s)}(alpha) | k + kappa>, kappa >= 0 branch;
// s = -1 is the coherent-projector limit.
cplx t_element(int k, int kappa, cplx alpha, double s) {
    if (kappa < 0) return std::conj(t_element(k + kappa, -kappa, alpha, s));
    const double a2 = std::norm(alpha);
    if (s == -1.0) {
        if (a2 == 0.0) return (k == 0 && kappa == 0) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
        const double mag = std::exp(-a2 + 0.5 * (2 * k + kappa) * std::log(a2)
                                    - half_log_factorial_ratio(k, k + kappa, 0, 0));
        return std::polar(mag, -std::arg(alpha) * kappa);
    }
    const double om = 1.0 - s;
    const double ratio = (s + 1.0) / (s - 1.0); // |ratio| < 1 for s < 0
    const double lag = laguerre(k, kappa, 4.0 * a2 / (1.0 - s * s));
    double mag = std::exp(half_log_factorial_ratio(k, 0, k + kappa, 0)
                          + (kappa + 1) * std::log(2.0 / om)
                          - 2.0 * a2 / om + 0.5 * kappa * std::log(std::max(a2, 1e-300)));
    if (a2 == 0.0 && kappa > 0) return {0.0, 0.0};
    const double sgn_pow = std::pow(ratio, k);
    return std::polar(mag, -std::arg(alpha) * kappa) * sgn_pow * lag;
}

} // namespace

std::vector<double> q_function_grid(const DensityTensor& rho,
                                    const std::vector<cplx>& grid_L,
                                    const std::vector<cplx>& grid_S,
                                    double s) {
    if (s >= 0.0)
        throw unsupported_ordering_error(
            "q_function_grid: only s < 0 converges for truncated states");
    const int NL = static_cast<int>(grid_L.size());
    const int NS = static_cast<int>(grid_S.size());
    const int K = rho.cutoff_K();
    const int mu_span = 2 * rho.mu_max() + 1;

    // stage 1: A[(m, mu)](alpha_L) = sum_{n, nu} rho*_{n m}(nu mu) T^L_{n, n+nu}
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(NL, (K + 1) * mu_span);
    std::vector<cplx> tL(static_cast<size_t>((K + 1) * (2 * rho.nu_max() + 1)));
    for (int iL = 0; iL < NL; ++iL) {
        const cplx aL = grid_L[iL];
        for (int n = 0; n <= K; ++n)
            for (int nu = -rho.nu_max(); nu <= rho.nu_max(); ++nu)
                tL[static_cast<size_t>(n * (2 * rho.nu_max() + 1)
                                       + nu + rho.nu_max())] =
                    (n + nu >= 0) ? t_element(n, nu, aL, s) : cplx{0.0, 0.0};
        for (const auto& [key, c] : rho.chains()) {
            const int col0 = key.mu + rho.mu_max();
            for (int i = 0; i < static_cast<int>(c.v.size()); ++i) {
                const int m = c.m_lo + i;
                const int n = key.K - m;
                const cplx w = std::conj(c.v[i])
                               * tL[static_cast<size_t>(n * (2 * rho.nu_max() + 1)
                                                        + key.nu + rho.nu_max())];
                A(iL, m * mu_span + col0) += w;
            }
        }
    }

    // stage 2: W = A * T^S^T over (m, mu)
    Eigen::MatrixXcd TS = Eigen::MatrixXcd::Zero((K + 1) * mu_span, NS);
    for (int iS = 0; iS < NS; ++iS) {
        const cplx aS = grid_S[iS];
        for (int m = 0; m <= K; ++m)
            for (int mu = -rho.mu_max(); mu <= rho.mu_max(); ++mu)
                if (m + mu >= 0)
                    TS(m * mu_span + mu + rho.mu_max(), iS) = t_element(m, mu, aS, s);
    }
    Eigen::MatrixXcd W = A * TS;

    std::vector<double> out(static_cast<size_t>(NL) * NS);
    for (int iL = 0; iL < NL; ++iL)
        for (int iS = 0; iS < NS; ++iS)
            out[static_cast<size_t>(iL) * NS + iS] = W(iL, iS).real();
    return out;
}

double q_function_from_rho(const DensityTensor& rho, cplx alpha_L, cplx alpha_S,
                           double s) {
    return q_function_grid(rho, {alpha_L}, {alpha_S}, s)[0];
}

// ------------------------------------------------------------- quadrature

std::pair<std::vector<double>, std::vector<double>> gauss_hermite(int order) {
    if (order < 1) throw std::domain_error("gauss_hermite: order must be >= 1");
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(order, order);
    for (int k = 1; k < order; ++k) {
        const double b = std::sqrt(0.5 * k);
        J(k, k - 1) = J(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    std::vector<double> nodes(order), weights(order);
    const double mu0 = std::sqrt(M_PI);
    for (int i = 0; i < order; ++i) {
        nodes[i] = es.eigenvalues()[i];
        const double v0 = es.eigenvectors()(0, i);
        weights[i] = mu0 * v0 * v0;
    }
    return {nodes, weights};
}

namespace {

cplx order_conversion_once(const std::function<double(cplx)>& W_s2,
                           int m, int n, double s1, double s2,
                           const QuadratureSpec& q, int order) {
    const auto [x, w] = gauss_hermite(order);
    const double half = 0.5 * (s2 - s1); // negative
    cplx acc{0.0, 0.0};
    for (size_t i = 0; i < x.size(); ++i) {
        for (size_t j = 0; j < x.size(); ++j) {
            const cplx alpha = q.center + q.width * cplx{x[i], x[j]};
            const double lag = laguerre(m, n - m, 2.0 * std::norm(alpha) / (s1 - s2));
            cplx kern = std::pow(half, m) * std::pow(alpha, n - m) * lag;
            kern *= std::exp(log_factorial(m));
            const double expw = std::exp(x[i] * x[i] + x[j] * x[j]);
            acc += w[i] * w[j] * expw * kern * W_s2(alpha);
        }
    }
    // d^2 alpha / pi with the width substitution
    return acc * (q.width * q.width / M_PI);
}

} // namespace

cplx moment_order_conversion(const std::function<double(cplx)>& W_s2,
                             int m, int n, double s1, double s2,
                             const QuadratureSpec& quad) {
    if (!(s2 < s1))
        throw std::domain_error("moment_order_conversion: need s2 < s1");
    if (m < 0 || n < 0)
        throw std::domain_error("moment_order_conversion: negative powers");
    if (n < m) return std::conj(moment_order_conversion(W_s2, n, m, s1, s2, quad));
    const cplx a = order_conversion_once(W_s2, m, n, s1, s2, quad, quad.order);
    const cplx b = order_conversion_once(W_s2, m, n, s1, s2, quad, quad.order + 12);
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    if (std::abs(a - b) > 1e-6 * scale)
        throw precision_error("moment_order_conversion: quadrature not converged");
    return b;
}

} // namespace raman
