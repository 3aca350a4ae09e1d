#ifndef RAMAN_NO_DEPLETION_HPP
#define RAMAN_NO_DEPLETION_HPP

#include "raman/fock_core.hpp"

#include <vector>

namespace raman {

/// Coherent (+) chaotic split of the amplified Stokes mode.
struct SuperpositionParams {
    double m_c = 0.0;   // coherent-part mean
    double m_ch = 0.0;  // chaotic-part mean
};

/// Undepleted-pump density-matrix element (binomial-sum form); mu >= 0.
cplx rho_approx(const ModeState& laser, const ModeState& stokes,
                int nu, int mu, int n, int m, double dtau);

/// Stokes moments from the pump-averaged exponential sums; pump moments are
/// time-independent in this approximation.
MomentSet stokes_moments_nodep(const ModeState& laser, double m1, double m2,
                               double dtau);

/// <m^r> of the coherent (+) chaotic superposition (finite double sum; the
/// m_ch -> 0 limit is exact).
double superposition_moments(const SuperpositionParams& p, int r);
/// 1 - (m_c / <m>)^2
double superposition_gamma2(const SuperpositionParams& p);

/// Coherent-pump closed forms and their short-time expansions, for the
/// side-by-side method comparison datasets.
namespace nodep_forms {
double mean_m(double nL, double nS, double dtau);          // exponential form
double mean_m2(double nL, double nS, double dtau);
double cross_nm(double nL, double nS, double dtau);
double mean_m_par(double nL, double nS, double dtau);      // linearized-pump form
double mean_m2_par(double nL, double nS, double dtau);
double cross_nm_par(double nL, double nS, double dtau);
double gamma2_S_expansion(double nL, double nS, double dtau);      // stimulated/spontaneous
double gamma2_S_expansion_par(double nL, double nS, double dtau);
double g2_LS_expansion(double nL, double nS, double dtau);
} // namespace nodep_forms

/// One row of the four-method comparison (exact / short-time / linearized /
/// undepleted-pump).
struct FormalismComparisonRow {
    double tau = 0.0;
    double exact_mean_m = 0, exact_mean_m2 = 0, exact_gamma2_S = 0, exact_g2_LS = 0;
    double st_mean_m = 0, st_mean_m2 = 0, st_gamma2_S = 0, st_g2_LS = 0;
    double par_mean_m = 0, par_mean_m2 = 0, par_gamma2_S = 0, par_g2_LS = 0;
    double nd_mean_m = 0, nd_mean_m2 = 0, nd_gamma2_S = 0, nd_g2_LS = 0;
};

std::vector<FormalismComparisonRow> compare_formalisms(cplx alpha_L, cplx alpha_S,
                                                       const std::vector<double>& taus,
                                                       int cutoff_K, int threads = 1);

} // namespace raman

#endif
