#include "raman/no_depletion.hpp"
#include "raman/errors.hpp"
#include "raman/exact_solver.hpp"
#include "raman/numkernel.hpp"
#include "raman/parametric.hpp"
#include "raman/qpd_observables.hpp"
#include "raman/short_time.hpp"

#include <cmath>
#include <stdexcept>

namespace raman {

cplx rho_approx(const ModeState& laser, const ModeState& stokes,
                int nu, int mu, int n, int m, double dtau) {
    if (mu < 0) throw std::domain_error("rho_approx: mu must be nonnegative");
    if (n < 0 || m < 0) throw std::domain_error("rho_approx: negative Fock index");
    if (dtau < 0.0) throw std::domain_error("rho_approx: dtau must be >= 0");
    const cplx rhoL = laser.element(n, nu);
    if (rhoL == cplx{0.0, 0.0}) return {0.0, 0.0};
    const double decay = -n * (m + 1.0 + 0.5 * mu) * dtau;
    // l * ln(e^{n dtau} - 1), in log space; n dtau = 0 leaves only l = 0
    const double x = n * dtau;
    const double log_gain = x > 0.0 ? x + std::log1p(-std::exp(-x))
                                    : -std::numeric_limits<double>::infinity();
    cplx sum{0.0, 0.0};
    for (int l = 0; l <= m; ++l) {
        const cplx rhoS = stokes.element(m - l, mu);
        if (rhoS == cplx{0.0, 0.0}) continue;
        double logw = 0.5 * (log_binomial(m, l) + log_binomial(m + mu, l)) + decay;
        if (l > 0) {
            if (!std::isfinite(log_gain)) continue;
            logw += l * log_gain;
        }
        sum += std::exp(logw) * rhoS;
    }
    return rhoL * sum;
}

MomentSet stokes_moments_nodep(const ModeState& laser, double m1, double m2,
                               double dtau) {
    if (dtau < 0.0) throw std::domain_error("stokes_moments_nodep: dtau must be >= 0");
    const int ncut = laser.auto_cutoff();
    // pump-averaged exponentials, accumulated in log space against overflow
    double lse1 = -std::numeric_limits<double>::infinity();
    double lse2 = lse1, lsf1 = lse1;
    double n_sum = 0.0, n2_sum = 0.0;
    auto logadd = [](double a, double b) {
        if (a == -std::numeric_limits<double>::infinity()) return b;
        if (b == -std::numeric_limits<double>::infinity()) return a;
        const double hi = std::max(a, b);
        return hi + std::log1p(std::exp(std::min(a, b) - hi));
    };
    for (int n = 0; n <= ncut; ++n) {
        const double p = laser.occupation(n);
        if (p <= 0.0) continue;
        const double lp = std::log(p);
        lse1 = logadd(lse1, lp + n * dtau);
        lse2 = logadd(lse2, lp + 2.0 * n * dtau);
        if (n > 0) lsf1 = logadd(lsf1, lp + std::log(double(n)) + n * dtau);
        n_sum += n * p;
        n2_sum += double(n) * n * p;
    }
    const double E1 = std::exp(lse1);
    const double E2 = std::exp(lse2);
    const double F1 = std::exp(lsf1);

    MomentSet ms;
    ms.time = dtau;
    ms.mean_m = m1 * E1 + (E1 - 1.0);
    ms.mean_m2 = (m2 + 3.0 * m1 + 2.0) * E2 - 3.0 * (m1 + 1.0) * E1 + 1.0;
    ms.cross_nm = (m1 + 1.0) * F1 - n_sum;
    ms.mean_n = n_sum;
    ms.mean_n2 = n2_sum;
    return ms;
}

double superposition_moments(const SuperpositionParams& p, int r) {
    if (r < 0) throw std::domain_error("superposition_moments: r must be >= 0");
    if (p.m_c < 0.0 || p.m_ch < 0.0)
        throw std::domain_error("superposition_moments: negative means");
    // r! m_ch^r L_r(-m_c/m_ch) = r! sum_k C(r,k) m_c^k m_ch^{r-k} / k!
    double sum = 0.0;
    for (int k = 0; k <= r; ++k) {
        double term = std::exp(log_factorial(r) - log_factorial(k)
                               + log_binomial(r, k));
        term *= std::pow(p.m_c, k) * std::pow(p.m_ch, r - k);
        sum += term;
    }
    return sum;
}

double superposition_gamma2(const SuperpositionParams& p) {
    const double mean = p.m_c + p.m_ch;
    if (mean <= 0.0)
        throw std::domain_error("superposition_gamma2: zero mean");
    const double ratio = p.m_c / mean;
    return 1.0 - ratio * ratio;
}

namespace nodep_forms {

double mean_m(double nL, double nS, double dtau) {
    return (nS + 1.0) * std::exp(nL * std::expm1(dtau)) - 1.0;
}

double mean_m2(double nL, double nS, double dtau) {
    return (nS * nS + 4.0 * nS + 2.0) * std::exp(nL * std::expm1(2.0 * dtau))
           - 3.0 * (nS + 1.0) * std::exp(nL * std::expm1(dtau)) + 1.0;
}

double cross_nm(double nL, double nS, double dtau) {
    return nL * (nS + 1.0) * std::exp(nL * std::expm1(dtau) + dtau) - nL;
}

double mean_m_par(double nL, double nS, double dtau) {
    return (nS + 1.0) * std::exp(nL * dtau) - 1.0;
}

double mean_m2_par(double nL, double nS, double dtau) {
    return (nS * nS + 4.0 * nS + 2.0) * std::exp(2.0 * nL * dtau)
           - 3.0 * (nS + 1.0) * std::exp(nL * dtau) + 1.0;
}

double cross_nm_par(double nL, double nS, double dtau) {
    return mean_m_par(nL, nS, dtau) * nL;
}

double gamma2_S_expansion(double nL, double nS, double dtau) {
    if (nS > 0.0) {
        return 2.0 * nL / nS * dtau
               - (nL * (3.0 + nS) - nS * nS - 5.0 * nS - 2.0)
                     * nL / (nS * nS) * dtau * dtau;
    }
    return 1.0 + 2.0 / nL + 2.0 * dtau + (2.0 + 5.0 / 6.0 * nL) * dtau * dtau;
}

double gamma2_S_expansion_par(double nL, double nS, double dtau) {
    if (nS > 0.0) {
        return 2.0 * nL / nS * dtau
               - (3.0 + nS) * nL * nL / (nS * nS) * dtau * dtau;
    }
    return 1.0;
}

double g2_LS_expansion(double nL, double nS, double dtau) {
    if (nS > 0.0) {
        return (1.0 + 1.0 / nS) * dtau
               - (1.0 + nS) * (2.0 * nL - nS) / (nS * nS) * 0.5 * dtau * dtau;
    }
    return 1.0 / nL + 0.5 * dtau + (nL + 3.0) / 12.0 * 0.5 * dtau * dtau;
}

} // namespace nodep_forms

std::vector<FormalismComparisonRow> compare_formalisms(cplx alpha_L, cplx alpha_S,
                                                       const std::vector<double>& taus,
                                                       int cutoff_K, int threads) {
    const double nL = std::norm(alpha_L);
    const double nS = std::norm(alpha_S);
    const DensityTensor rho0 = build_product_state(ModeState::coherent(alpha_L),
                                                   ModeState::coherent(alpha_S),
                                                   cutoff_K, 2, 2);
    const std::vector<DensityTensor> evolved =
        evolve_grid(rho0, taus, Direction::stokes, threads);
    const InitialMoments im = InitialMoments::coherent(alpha_L, alpha_S);

    std::vector<FormalismComparisonRow> out;
    out.reserve(taus.size());
    for (size_t i = 0; i < taus.size(); ++i) {
        const double tau = taus[i];
        FormalismComparisonRow row;
        row.tau = tau;

        const MomentSet ex = extract_moments(evolved[i]);
        row.exact_mean_m = ex.mean_m;
        row.exact_mean_m2 = ex.mean_m2;
        row.exact_gamma2_S = ex.mean_m > 0.0
                                 ? gamma2(ex.mean_m, ex.mean_m2 - ex.mean_m)
                                 : 0.0;
        row.exact_g2_LS = (ex.mean_n > 0.0 && ex.mean_m > 0.0)
                              ? interbeam_g2(ex.cross_nm, ex.mean_n, ex.mean_m)
                              : 0.0;

        const MomentSet st = photon_moments_short(im, tau);
        row.st_mean_m = st.mean_m;
        row.st_mean_m2 = st.mean_m2;
        row.st_gamma2_S = (nS > 0.0 || tau > 0.0)
                              ? gamma2_short(im, tau, WhichMode::stokes)
                              : 0.0;
        row.st_g2_LS = tau > 0.0 || nS > 0.0 ? interbeam_g2_short(im, tau) : 0.0;

        row.par_mean_m = nodep_forms::mean_m_par(nL, nS, tau);
        row.par_mean_m2 = nodep_forms::mean_m2_par(nL, nS, tau);
        row.par_gamma2_S = nodep_forms::gamma2_S_expansion_par(nL, nS, tau);
        row.par_g2_LS = 0.0;

        row.nd_mean_m = nodep_forms::mean_m(nL, nS, tau);
        row.nd_mean_m2 = nodep_forms::mean_m2(nL, nS, tau);
        row.nd_gamma2_S = nodep_forms::gamma2_S_expansion(nL, nS, tau);
        row.nd_g2_LS = nodep_forms::g2_LS_expansion(nL, nS, tau);

        out.push_back(row);
    }
    return out;
}

} // namespace raman
