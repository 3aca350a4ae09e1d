#ifndef RAMAN_PARAMETRIC_HPP
#define RAMAN_PARAMETRIC_HPP

#include "raman/fock_core.hpp"

#include <vector>

namespace raman {

enum class WhichScattered { stokes, antistokes };

/// Linearized-pump model constants. kappa_SA is pinned to sqrt(kS kA) with
/// twice the pump phase, so |kappa_SA|^2 = kappa_S kappa_A holds exactly.
struct ParametricConfig {
    double kappa_S = 0.0;     // Stokes gain
    double kappa_A = 0.0;     // anti-Stokes damping
    double delta_omega = 0.0; // frequency mismatch
    double n_V = 0.0;         // mean thermal phonons
    double s = 1.0;           // ordering parameter in [-1, 1]
    double pump_phase = 0.0;  // arg of the classical pump amplitude

    cplx kappa_SA() const;
};

struct UVFunctions {
    cplx U_S, V_S, U_A, V_A;
};

/// Coefficient propagators; degenerate characteristic roots handled
/// analytically.
UVFunctions uv_functions(const ParametricConfig& cfg, double dt);

/// Gaussian noise bookkeeping of the two scattered modes.
struct NoiseCoefficients {
    double B_S = 0.0, B_A = 0.0;
    cplx C_S{0, 0}, C_A{0, 0};
    cplx D_SA{0, 0}, Dbar_SA{0, 0};
    cplx xi_S{0, 0}, xi_A{0, 0};
    double s = 1.0;
    double time = 0.0;
};

/// Squeezed (+) chaotic initial coefficients per mode.
NoiseCoefficients initial_gaussian(cplx xi_S, double r_S, double phi_S, double nch_S,
                                   cplx xi_A, double r_A, double phi_A, double nch_A,
                                   double s);

/// Same state expressed at a different ordering parameter.
NoiseCoefficients with_ordering(const NoiseCoefficients& c, double s_new);

/// Full coefficient evolution over dt; init must carry D_SA = Dbar_SA = 0.
NoiseCoefficients evolve_noise(const ParametricConfig& cfg,
                               const NoiseCoefficients& init, double dt);

/// Two-mode s-parametrized characteristic function value.
cplx char_fn(const NoiseCoefficients& c, cplx beta_S, cplx beta_A);

struct ExistenceReport {
    double K_A = 0.0;       // B_A^2 - |C_A|^2
    double L2 = 0.0;        // squared quasidistribution normalization factor
    double Lbar = 0.0;      // scalar existence function
    double ReCA_BA = 0.0;   // Re C_A + B_A
    bool exists = false;
    double s_max = 0.0;     // largest ordering with an existing QPD
};

ExistenceReport existence_from_coeffs(const NoiseCoefficients& c);
ExistenceReport qpd_existence(const ParametricConfig& cfg,
                              const NoiseCoefficients& init, double dt);

/// Two-mode s-parametrized quasidistribution value (shifted Gaussian);
/// throws domain_error when the QPD does not exist at this ordering.
double qpd_eval(const NoiseCoefficients& c, cplx alpha_S, cplx alpha_A);

/// Laguerre-form generating function: every root enters with weight
/// (1 + lambda root)^{-1/2} exp(-lambda amp / (1 + lambda root)).
struct GeneratingSpec {
    std::vector<double> roots;  // noise components, >= 0
    std::vector<double> amps;   // signal components per root
    int mode_count = 1;
    bool factored = true;       // false: fall back to the polynomial form
};

/// <exp(-lambda W)> at the coefficients' own ordering (polynomial route).
double generating_value(const NoiseCoefficients& c, double lambda);
/// Same value from a factored spec.
double spec_value(const GeneratingSpec& spec, double lambda);

GeneratingSpec two_mode_spec(const NoiseCoefficients& c);
GeneratingSpec single_mode_spec(const NoiseCoefficients& c, WhichScattered mode);

double photocount_pn(const GeneratingSpec& spec, int n);
std::vector<double> photocount_table(const GeneratingSpec& spec, int n_max);
/// <W^k>_(1)
double factorial_moment(const GeneratingSpec& spec, int k);

struct ParametricSqueezingReport {
    double var_S1 = 0, var_S2 = 0, var_A1 = 0, var_A2 = 0;
    double var_S_min = 0, var_S_max = 0, var_A_min = 0, var_A_max = 0;
    double cov_S = 0, cov_A = 0;
    double xS1xA1 = 0, xS2xA2 = 0, xS1xA2 = 0, xS2xA1 = 0;
    double var_two_mode_1 = 0, var_two_mode_2 = 0;
    double var_two_mode_min = 0, var_two_mode_max = 0;
    bool standard_S = false, principal_S = false;
    bool standard_A = false, principal_A = false;
    bool standard_two_mode = false, principal_two_mode = false;
};

ParametricSqueezingReport squeezing_report(const NoiseCoefficients& c);

} // namespace raman

#endif
