#ifndef RAMAN_SHORT_TIME_HPP
#define RAMAN_SHORT_TIME_HPP

#include "raman/fock_core.hpp"

namespace raman {

/// Initial-time moments of an independent pump (x) Stokes product state.
/// photon[k] holds <n^k>; amplitude entries are normal-ordered <a+^p a^q>.
struct InitialMoments {
    double n[5] = {1, 0, 0, 0, 0}; // n[k] = <n^k>, n[0] = 1
    double m[5] = {1, 0, 0, 0, 0};
    cplx aL[4][4] = {};            // aL[p][q] = <a_L^{+p} a_L^q>, p+q <= 5
    cplx aS[4][4] = {};

    static InitialMoments coherent(cplx alpha_L, cplx alpha_S);
};

enum class WhichMode { laser, stokes };

/// Taylor moments of the depleted-pump evolution: <n>, <n^2> to O(dtau^2),
/// <m>, <m^2>, <nm> to O(dtau^3).
MomentSet photon_moments_short(const InitialMoments& init, double dtau);

/// Normalized second factorial moment. The laser branch and the stimulated
/// Stokes branch carry O(dtau^2); the spontaneous (vacuum) Stokes branch is
/// an O(dtau) result.
double gamma2_short(const InitialMoments& init, double dtau, WhichMode mode);

/// Interbeam degree of second-order coherence to O(dtau^2).
double interbeam_g2_short(const InitialMoments& init, double dtau);

/// <a_S^+>, <a_L^+>, <a_S^+2>, <a_L^+2>, <a_L^+ a_S^+>, <a_L^+ a_S>
/// to O(dtau^2); photon fields left zero.
MomentSet amplitude_moments_short(const InitialMoments& init, double dtau);

/// Quadrature-variance report for initially coherent modes, composed from
/// the O(dtau^2) moment series.
struct QuadratureShortReport {
    cplx dS2{0, 0}, dL2{0, 0};    // <(Delta a)^2>
    double nS = 0.0, nL = 0.0;    // <Delta a^+ Delta a>
    cplx dLS{0, 0};               // <Delta a_L Delta a_S>
    cplx dbarLS{0, 0};            // <Delta a_L^+ Delta a_S>

    double var_stokes(double theta) const;
    double var_laser(double theta) const;

    double var_stokes_min = 0, var_stokes_max = 0;
    double var_laser_min = 0, var_laser_max = 0;
    double cov_stokes = 0, cov_laser = 0;          // {DX1, DX2} Wigner covariances
    double uncertainty_lhs_stokes = 0;             // var1*var2 - cov^2/4 - 1
    double uncertainty_lhs_laser = 0;
    double xL1xS1 = 0, xL2xS2 = 0, xL1xS2 = 0, xL2xS1 = 0;
    double two_mode_cov = 0;
    double var_two_mode_1 = 0, var_two_mode_2 = 0;
    double var_two_mode_min = 0, var_two_mode_max = 0;
};

QuadratureShortReport quadrature_short(cplx alpha_L, cplx alpha_S, double dtau);

} // namespace raman

#endif
