#ifndef RAMAN_QPD_OBSERVABLES_HPP
#define RAMAN_QPD_OBSERVABLES_HPP

#include "raman/fock_core.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace raman {

/// C^{(s2)} from C^{(s1)} at the same beta arguments.
cplx ordering_shift_char(cplx C_value, double sum_beta_sq, double s1, double s2);

/// p(n) from normally ordered intensity moments W_moments[j] = <W^j>;
/// guarded alternating sum, throws precision_error on blow-up.
double photocount_from_intensity_moments(const std::vector<double>& W_moments, int n);

/// <n(n-1)>/<n>^2 - 1; second_factorial = <n(n-1)>.
double gamma2(double mean, double second_factorial);

/// <nm>/(<n><m>) - 1.
double interbeam_g2(double cross_nm, double mean_n, double mean_m);

struct PrincipalSqueezingReport {
    cplx da2{0, 0};       // <(Delta a)^2>
    double ndagn = 0.0;   // <Delta a^+ Delta a>
    double var_min = 0, var_max = 0;
    double wigner_cov = 0;
    double theta_min = 0, theta_max = 0; // theta_max - theta_min = pi/2
    bool standard = false, principal = false;

    double var(double theta) const;
};

PrincipalSqueezingReport principal_squeezing(cplx da2, double ndag_n);

struct TwoModeQuadratureReport {
    double var1 = 0, var2 = 0;        // theta = 0, pi/2
    double var_min = 0, var_max = 0;
    double wigner_cov = 0;
    double x11 = 0, x22 = 0, x12 = 0, x21 = 0; // cross covariances
    bool standard = false, principal = false;  // thresholds at 2
};

TwoModeQuadratureReport two_mode_quadratures(cplx da2_1, double n_1,
                                             cplx da2_2, double n_2,
                                             cplx d12, cplx dbar12);

/// Central moments assembled from a MomentSet (creation-operator fields).
struct CentralMoments {
    cplx dL2{0, 0}, dS2{0, 0};
    double nL = 0, nS = 0;
    cplx dLS{0, 0};     // <Delta a_L Delta a_S>
    cplx dbarLS{0, 0};  // <Delta a_L^+ Delta a_S>
};
CentralMoments central_moments(const MomentSet& ms);

/// Q-function (s = -1; any s < 0 accepted) reconstructed from the stored
/// Fock elements. Throws for s >= 0.
double q_function_from_rho(const DensityTensor& rho, cplx alpha_L, cplx alpha_S,
                           double s = -1.0);

/// Same reconstruction on a product grid of phase-space points,
/// result[iL * grid_S.size() + iS].
std::vector<double> q_function_grid(const DensityTensor& rho,
                                    const std::vector<cplx>& grid_L,
                                    const std::vector<cplx>& grid_S,
                                    double s = -1.0);

/// Gauss-Hermite nodes/weights for weight exp(-x^2).
std::pair<std::vector<double>, std::vector<double>> gauss_hermite(int order);

struct QuadratureSpec {
    int order = 48;
    cplx center{0.0, 0.0};
    double width = 1.0;
};

/// s1-ordered moment <a^{+m} a^{n}> from a single-mode quasidistribution
/// W^{(s2)} via the Laguerre-kernel integral; s2 < s1. Compares two
/// quadrature orders and throws precision_error when they disagree.
cplx moment_order_conversion(const std::function<double(cplx)>& W_s2,
                             int m, int n, double s1, double s2,
                             const QuadratureSpec& quad = {});

} // namespace raman

#endif
