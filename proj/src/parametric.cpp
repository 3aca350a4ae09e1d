#include "raman/parametric.hpp"
#include "raman/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace raman {

namespace {
constexpr double kZeroTol = 1e-13;

cplx sinhc(cplx z) {
    if (std::abs(z) < 1e-4) {
        const cplx z2 = z * z;
        return 1.0 + z2 / 6.0 + z2 * z2 / 120.0;
    }
    return std::sinh(z) / z;
}
} // namespace

cplx ParametricConfig::kappa_SA() const {
    return std::polar(std::sqrt(kappa_S * kappa_A), 2.0 * pump_phase);
}

UVFunctions uv_functions(const ParametricConfig& cfg, double dt) {
    if (dt < 0.0) throw std::domain_error("uv_functions: dt must be >= 0");
    const double kS = cfg.kappa_S, kA = cfg.kappa_A, dO = cfg.delta_omega;
    const cplx disc = std::sqrt(cplx{(kS - kA) * (kS - kA) / 4.0 - 4.0 * dO * dO,
                                     4.0 * (kS + kA) / 2.0 * dO});
    const cplx pbar = cplx{(kS - kA) / 4.0, 0.0}; // (P1 + P2) / 2
    const cplx delta = disc;                      // P1 - P2
    const cplx ebar = std::exp(pbar * dt);
    const cplx shc = sinhc(0.5 * delta * dt);
    const cplx Q1 = ebar * dt * shc;
    const cplx Q2 = ebar * (std::cosh(0.5 * delta * dt) + pbar * dt * shc);

    UVFunctions uv;
    const cplx kSA = cfg.kappa_SA();
    uv.U_S = Q2 + cplx{kA / 2.0, dO} * Q1;
    uv.V_S = 0.5 * kSA * Q1;
    uv.U_A = std::conj(Q2) - cplx{kS / 2.0, -dO} * std::conj(Q1);
    uv.V_A = -0.5 * kSA * std::conj(Q1);
    return uv;
}

NoiseCoefficients initial_gaussian(cplx xi_S, double r_S, double phi_S, double nch_S,
                                   cplx xi_A, double r_A, double phi_A, double nch_A,
                                   double s) {
    if (r_S < 0.0 || r_A < 0.0 || nch_S < 0.0 || nch_A < 0.0)
        throw std::domain_error("initial_gaussian: r and n_ch must be nonnegative");
    NoiseCoefficients c;
    c.s = s;
    c.B_S = std::cosh(r_S) * std::cosh(r_S) + nch_S - 0.5 * (s + 1.0);
    c.B_A = std::cosh(r_A) * std::cosh(r_A) + nch_A - 0.5 * (s + 1.0);
    c.C_S = 0.5 * std::polar(std::sinh(2.0 * r_S), phi_S);
    c.C_A = 0.5 * std::polar(std::sinh(2.0 * r_A), phi_A);
    c.xi_S = xi_S;
    c.xi_A = xi_A;
    return c;
}

NoiseCoefficients with_ordering(const NoiseCoefficients& c, double s_new) {
    NoiseCoefficients out = c;
    out.B_S += 0.5 * (c.s - s_new);
    out.B_A += 0.5 * (c.s - s_new);
    out.s = s_new;
    return out;
}

NoiseCoefficients evolve_noise(const ParametricConfig& cfg,
                               const NoiseCoefficients& init, double dt) {
    if (std::abs(init.s - cfg.s) > 1e-12)
        throw std::invalid_argument("evolve_noise: ordering mismatch between cfg and init");
    if (std::abs(init.D_SA) > 1e-12 || std::abs(init.Dbar_SA) > 1e-12)
        throw std::invalid_argument("evolve_noise: initial modes must be uncorrelated");
    const UVFunctions uv = uv_functions(cfg, dt);
    const double s = cfg.s, nV = cfg.n_V;
    const double gS = init.B_S + nV + 0.5 * (1.0 + s); // amplified block
    const double gA = init.B_A - nV - 0.5 * (1.0 - s); // attenuated block

    NoiseCoefficients c;
    c.s = s;
    c.time = init.time + dt;
    c.B_S = gS * std::norm(uv.U_S) + gA * std::norm(uv.V_S) - nV - 0.5 * (1.0 + s);
    c.B_A = gA * std::norm(uv.U_A) + gS * std::norm(uv.V_A) + nV + 0.5 * (1.0 - s);
    c.D_SA = gS * uv.U_S * uv.V_A + gA * uv.V_S * uv.U_A;
    c.Dbar_SA = init.C_S * uv.U_S * std::conj(uv.V_A)
                + std::conj(init.C_A) * std::conj(uv.U_A) * uv.V_S;
    c.C_S = init.C_S * uv.U_S * uv.U_S + std::conj(init.C_A) * uv.V_S * uv.V_S;
    c.C_A = init.C_A * uv.U_A * uv.U_A + std::conj(init.C_S) * uv.V_A * uv.V_A;
    c.xi_S = uv.U_S * init.xi_S + uv.V_S * std::conj(init.xi_A);
    c.xi_A = uv.U_A * init.xi_A + uv.V_A * std::conj(init.xi_S);
    return c;
}

cplx char_fn(const NoiseCoefficients& c, cplx beta_S, cplx beta_A) {
    cplx expo{0.0, 0.0};
    expo += -c.B_S * std::norm(beta_S) - c.B_A * std::norm(beta_A);
    expo += (std::conj(c.C_S) * beta_S * beta_S).real()
            + (std::conj(c.C_A) * beta_A * beta_A).real();
    const cplx phase = beta_S * std::conj(c.xi_S) - std::conj(beta_S) * c.xi_S
                       + beta_A * std::conj(c.xi_A) - std::conj(beta_A) * c.xi_A;
    expo += phase;
    expo += 2.0 * (c.D_SA * std::conj(beta_S) * std::conj(beta_A)).real();
    expo += 2.0 * (c.Dbar_SA * beta_S * std::conj(beta_A)).real();
    return std::exp(expo);
}

// ----------------------------------------------------------- QPD existence

namespace {

struct ExistenceFns {
    double K_S, K_A, L2, Lbar, ReCA_BA;
    bool all_positive() const {
        return K_A > 0.0 && L2 > 0.0 && Lbar > 0.0 && ReCA_BA > 0.0;
    }
};

ExistenceFns existence_fns(const NoiseCoefficients& c) {
    ExistenceFns f;
    const double Kp = std::norm(c.D_SA) + std::norm(c.Dbar_SA);
    const double Km = std::norm(c.D_SA) - std::norm(c.Dbar_SA);
    f.K_S = c.B_S * c.B_S - std::norm(c.C_S);
    f.K_A = c.B_A * c.B_A - std::norm(c.C_A);
    cplx bracket = c.C_S * c.C_A * std::conj(c.D_SA) * std::conj(c.D_SA)
                   + c.C_S * std::conj(c.C_A) * c.Dbar_SA * c.Dbar_SA
                   + 2.0 * c.B_S * std::conj(c.C_A) * c.D_SA * c.Dbar_SA
                   + 2.0 * c.B_A * std::conj(c.C_S) * std::conj(c.D_SA) * c.Dbar_SA;
    f.L2 = f.K_S * f.K_A - 2.0 * c.B_S * c.B_A * Kp - 2.0 * bracket.real() + Km * Km;
    f.ReCA_BA = c.C_A.real() + c.B_A;

    const bool coherent_family = std::abs(c.C_S) < kZeroTol
                                 && std::abs(c.C_A) < kZeroTol
                                 && std::abs(c.Dbar_SA) < kZeroTol;
    if (coherent_family) {
        f.Lbar = c.B_S * c.B_A - std::norm(c.D_SA);
    } else if (f.K_A > 0.0) {
        const double rka = std::sqrt(f.K_A);
        const cplx dd = c.Dbar_SA - c.D_SA;
        f.Lbar = rka * (c.C_S.real() + c.B_S)
                 + (1.0 / rka) * ((std::conj(c.C_A) * dd * dd).real()
                                  - c.B_A * std::norm(dd));
    } else {
        f.Lbar = -std::numeric_limits<double>::infinity();
    }
    return f;
}

} // namespace

ExistenceReport existence_from_coeffs(const NoiseCoefficients& c) {
    const ExistenceFns f = existence_fns(c);
    ExistenceReport rep;
    rep.K_A = f.K_A;
    rep.L2 = f.L2;
    rep.Lbar = f.Lbar;
    rep.ReCA_BA = f.ReCA_BA;
    rep.exists = f.all_positive();

    const bool coherent_family = std::abs(c.C_S) < kZeroTol
                                 && std::abs(c.C_A) < kZeroTol
                                 && std::abs(c.Dbar_SA) < kZeroTol;
    if (coherent_family) {
        // B at normal order, then the closed-form bound
        const double bs1 = c.B_S + 0.5 * (c.s - 1.0);
        const double ba1 = c.B_A + 0.5 * (c.s - 1.0);
        const double lbar1 = bs1 * ba1 - std::norm(c.D_SA);
        const double sum = bs1 + ba1;
        rep.s_max = sum + 1.0 - std::sqrt(std::max(0.0, sum * sum - 4.0 * lbar1));
    } else {
        // monotone in s: bisect the existence boundary
        auto ok = [&](double s_try) {
            return existence_fns(with_ordering(c, s_try)).all_positive();
        };
        double lo = -1.0, hi = 1.0;
        if (ok(hi)) {
            rep.s_max = 1.0;
        } else if (!ok(lo)) {
            rep.s_max = -1.0;
        } else {
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (lo + hi);
                (ok(mid) ? lo : hi) = mid;
            }
            rep.s_max = lo;
        }
    }
    return rep;
}

ExistenceReport qpd_existence(const ParametricConfig& cfg,
                              const NoiseCoefficients& init, double dt) {
    return existence_from_coeffs(evolve_noise(cfg, init, dt));
}

double qpd_eval(const NoiseCoefficients& c, cplx alpha_S, cplx alpha_A) {
    const ExistenceFns f = existence_fns(c);
    if (!f.all_positive())
        throw std::domain_error("qpd_eval: quasidistribution does not exist at this "
                                "ordering; consult the existence report");
    const double Kp = std::norm(c.D_SA) + std::norm(c.Dbar_SA);
    const double Km = std::norm(c.D_SA) - std::norm(c.Dbar_SA);
    const cplx CS = c.C_S, CA = c.C_A, D = c.D_SA, Db = c.Dbar_SA;
    const double BS = c.B_S, BA = c.B_A;

    const double E1 = BS * f.K_A - BA * Kp + 2.0 * (std::conj(CA) * D * Db).real();
    const double E2 = BA * f.K_S - BS * Kp + 2.0 * (CS * std::conj(D) * Db).real();
    const cplx E3 = CS * f.K_A + 2.0 * BA * D * std::conj(Db)
                    + std::conj(CA) * D * D + CA * std::conj(Db) * std::conj(Db);
    const cplx E4 = CA * f.K_S + 2.0 * BS * D * Db
                    + CS * Db * Db + std::conj(CS) * D * D;
    const cplx E5 = D * (BS * BA - Km) + BS * CA * std::conj(Db)
                    + BA * CS * Db + CS * CA * std::conj(D);
    const cplx E6 = -Db * (BS * BA + Km) - BS * CA * std::conj(D)
                    - BA * std::conj(CS) * D - std::conj(CS) * CA * std::conj(Db);

    const cplx dS = alpha_S - c.xi_S;
    const cplx dA = alpha_A - c.xi_A;
    double expo = -E1 * std::norm(dS) - E2 * std::norm(dA);
    expo += 2.0 * (0.5 * E3 * std::conj(dS) * std::conj(dS)
                   + 0.5 * E4 * std::conj(dA) * std::conj(dA)
                   + E5 * std::conj(dS) * std::conj(dA)
                   + E6 * dS * std::conj(dA)).real();
    return std::exp(expo / f.L2) / std::sqrt(f.L2);
}

// ---------------------------------------------------- generating functions

namespace {

// a_j, b_j of the fourth/third order polynomials at normal ordering
struct GenPolys {
    double a[4];
    double b[5];
};

GenPolys gen_polys(const NoiseCoefficients& cin) {
    const NoiseCoefficients c = with_ordering(cin, 1.0);
    const double BS = c.B_S, BA = c.B_A;
    const cplx CS = c.C_S, CA = c.C_A, D = c.D_SA, Db = c.Dbar_SA;
    const cplx xS = c.xi_S, xA = c.xi_A;
    const double KS = BS * BS - std::norm(CS);
    const double KA = BA * BA - std::norm(CA);
    const double Kp = std::norm(D) + std::norm(Db);
    const double Km = std::norm(D) - std::norm(Db);
    const cplx DbAS = std::conj(Db); // Dbar_AS = conj(Dbar_SA)
    const double nS2 = std::norm(xS), nA2 = std::norm(xA);

    GenPolys g;
    g.a[3] = -(nS2 + nA2);

    auto a2_half = [&](double B1, double B2, cplx C1, cplx Db1, cplx x1, cplx x2) {
        // one orientation of the symmetrized a2; Db1 is Dbar with the first
        // index leading (Dbar_SA or Dbar_AS)
        return -(B1 + 2.0 * B2) * std::norm(x1)
               + (std::conj(C1) * x1 * x1 + D * x1 * x2
                  - Db1 * x1 * std::conj(x2)).real();
    };
    g.a[2] = a2_half(BS, BA, CS, Db, xS, xA) + a2_half(BA, BS, CA, DbAS, xA, xS);

    auto a1_half = [&](double B1, double B2, cplx C1, double K2, cplx Db12, cplx Db21,
                       cplx x1, cplx x2) {
        double v = (-2.0 * B1 * B2 - K2 + Kp) * std::norm(x1);
        const cplx t = (B2 * std::conj(C1) + D * Db12) * x1 * x1
                       + (B1 * D + std::conj(C1) * Db21) * x1 * x2
                       - (B1 * Db12 + std::conj(C1) * std::conj(D)) * x1 * std::conj(x2);
        return v + 2.0 * t.real();
    };
    g.a[1] = a1_half(BS, BA, CS, KA, Db, DbAS, xS, xA)
             + a1_half(BA, BS, CA, KS, DbAS, Db, xA, xS);

    auto a0_half = [&](double B1, double B2, cplx C1, cplx C2, double K2,
                       cplx Db12, cplx Db21, cplx x1, cplx x2) {
        double v = (-B1 * K2 + B2 * Kp + 2.0 * (C2 * D * Db21).real()) * std::norm(x1);
        const cplx t1 = (B2 * D * Db12
                         + 0.5 * (std::conj(C1) * K2 + C2 * D * D
                                  + std::conj(C2) * Db12 * Db12)) * x1 * x1;
        const cplx t2 = 0.5 * (B1 * B2 * D + 2.0 * B1 * std::conj(C2) * Db12
                               + std::conj(C1) * std::conj(C2) * std::conj(D)
                               - D * Km) * x1 * x2;
        const cplx t3 = -0.5 * (B1 * B2 * Db12 + 2.0 * B1 * C2 * D
                                + std::conj(C1) * C2 * Db21
                                + Db12 * Km) * x1 * std::conj(x2);
        return v + 2.0 * (t1 + t2 + t3).real();
    };
    g.a[0] = a0_half(BS, BA, CS, CA, KA, Db, DbAS, xS, xA)
             + a0_half(BA, BS, CA, CS, KS, DbAS, Db, xA, xS);

    auto b0_half = [&](double B1, cplx C1, cplx C2, cplx Db21) {
        // one orientation; Db21 carries the trailing Dbar index
        return 0.5 * KS * KA - BS * BA * Kp + 0.5 * Km * Km
               - B1 * 2.0 * (std::conj(C2) * std::conj(D) * Db21).real()
               - (C2 * (C1 * D * D + std::conj(C1) * Db21 * Db21)).real();
    };
    g.b[0] = b0_half(BS, CS, CA, DbAS) + b0_half(BA, CA, CS, Db);
    g.b[1] = 2.0 * BS * (KA - Kp) + 2.0 * BA * (KS - Kp)
             - 4.0 * (CS * D * Db).real() - 4.0 * (CA * D * DbAS).real();
    g.b[2] = 4.0 * BS * BA + KS + KA - 2.0 * Kp;
    g.b[3] = 2.0 * (BS + BA);
    g.b[4] = 1.0;
    return g;
}

} // namespace

double generating_value(const NoiseCoefficients& cin, double lambda) {
    if (lambda < 0.0) throw std::domain_error("generating_value: lambda must be >= 0");
    if (lambda == 0.0) return 1.0;
    const GenPolys g = gen_polys(cin);
    // at normal order the polynomial variable is 1/lambda
    const double u = 1.0 / lambda;
    double L1 = 0.0, L2 = 0.0;
    for (int j = 4; j >= 0; --j) L1 = L1 * u + g.b[j];
    for (int j = 3; j >= 0; --j) L2 = L2 * u + g.a[j];
    if (L1 <= 0.0)
        throw precision_error("generating_value: nonpositive quartic value");
    return std::exp(L2 / L1) / (lambda * lambda * std::sqrt(L1));
}

double spec_value(const GeneratingSpec& spec, double lambda) {
    double v = 1.0;
    for (size_t i = 0; i < spec.roots.size(); ++i) {
        const double den = 1.0 + lambda * spec.roots[i];
        v *= std::exp(-lambda * spec.amps[i] / den) / std::sqrt(den);
    }
    return v;
}

GeneratingSpec two_mode_spec(const NoiseCoefficients& cin) {
    const NoiseCoefficients c = with_ordering(cin, 1.0);
    GeneratingSpec spec;
    spec.mode_count = 2;
    const bool coherent_family = std::abs(c.C_S) < kZeroTol
                                 && std::abs(c.C_A) < kZeroTol
                                 && std::abs(c.Dbar_SA) < kZeroTol;
    if (coherent_family) {
        const double BS = c.B_S, BA = c.B_A;
        const double R = std::sqrt((BS - BA) * (BS - BA) + 4.0 * std::norm(c.D_SA));
        const double l1 = 0.5 * (BS + BA - R);
        const double l2 = 0.5 * (BS + BA + R);
        const double sum = 0.5 * (std::norm(c.xi_S) + std::norm(c.xi_A));
        double asym = 0.0;
        if (R > 1e-300) {
            asym = (0.5 * (BS - BA) * (std::norm(c.xi_A) - std::norm(c.xi_S))
                    - 2.0 * (c.D_SA * c.xi_S * std::conj(c.xi_A)).real()) / R;
        }
        const double A1 = asym + sum;
        const double A2 = -asym + sum;
        // doubled half-weight roots reproduce the full-weight pair
        spec.roots = {l1, l1, l2, l2};
        spec.amps = {0.5 * A1, 0.5 * A1, 0.5 * A2, 0.5 * A2};
        return spec;
    }
    // quartic roots via the companion matrix
    const GenPolys g = gen_polys(cin);
    Eigen::Matrix4d comp = Eigen::Matrix4d::Zero();
    comp(1, 0) = comp(2, 1) = comp(3, 2) = 1.0;
    for (int j = 0; j < 4; ++j) comp(j, 3) = -g.b[j]; // b4 = 1
    const Eigen::EigenSolver<Eigen::Matrix4d> es(comp);
    std::vector<double> roots;
    for (int i = 0; i < 4; ++i) {
        const std::complex<double> ev = es.eigenvalues()[i];
        const double scale = std::max(1.0, std::abs(ev));
        if (std::abs(ev.imag()) > 1e-9 * scale) {
            spec.factored = false;
            return spec;
        }
        roots.push_back(-ev.real()); // lambda_k = -x_k
    }
    std::sort(roots.begin(), roots.end());
    for (size_t i = 0; i + 1 < roots.size(); ++i) {
        const double scale = std::max(1.0, std::abs(roots[i + 1]));
        if (std::abs(roots[i + 1] - roots[i]) < 1e-9 * scale) {
            spec.factored = false; // repeated root: polynomial fallback
            return spec;
        }
    }
    spec.roots = roots;
    spec.amps.resize(4);
    for (int k = 0; k < 4; ++k) {
        const double invk = 1.0 / roots[k];
        double prod = 1.0;
        for (int l = 0; l < 4; ++l) {
            if (l == k) continue;
            prod *= invk - 1.0 / roots[l];
        }
        double num = 0.0;
        for (int l = 3; l >= 0; --l) num = num * (-invk) + g.a[l];
        spec.amps[k] = num / prod;
    }
    return spec;
}

GeneratingSpec single_mode_spec(const NoiseCoefficients& cin, WhichScattered mode) {
    const NoiseCoefficients c = with_ordering(cin, 1.0);
    const double B = (mode == WhichScattered::stokes) ? c.B_S : c.B_A;
    const cplx C = (mode == WhichScattered::stokes) ? c.C_S : c.C_A;
    const cplx xi = (mode == WhichScattered::stokes) ? c.xi_S : c.xi_A;
    GeneratingSpec spec;
    spec.mode_count = 1;
    const double ac = std::abs(C);
    const double half = 0.5 * std::norm(xi);
    double tilt = 0.0;
    if (ac > 1e-300) tilt = 0.5 * (std::conj(C) * xi * xi).real() / ac;
    spec.roots = {B - ac, B + ac};
    spec.amps = {half - tilt, half + tilt};
    return spec;
}

namespace {

// u_k = (lam/(1+lam))^k L_k^{(-1/2)}(-A/(lam(1+lam))), overflow-free recurrence
std::vector<double> photon_factor_table(double lam, double A, int n_max) {
    std::vector<double> u(static_cast<size_t>(n_max) + 1, 0.0);
    const double z = lam / (1.0 + lam);
    const double y = A / ((1.0 + lam) * (1.0 + lam)); // -x * z
    u[0] = 1.0;
    if (n_max >= 1) u[1] = 0.5 * z + y;
    for (int k = 1; k < n_max; ++k)
        u[k + 1] = ((2.0 * k + 0.5) * z * u[k] + y * u[k]
                    - (k - 0.5) * z * z * u[k - 1]) / (k + 1.0);
    const double pref = std::exp(-A / (1.0 + lam)) / std::sqrt(1.0 + lam);
    for (double& x : u) x *= pref;
    return u;
}

// v_k = lam^k L_k^{(-1/2)}(-A/lam)
std::vector<double> moment_factor_table(double lam, double A, int k_max) {
    std::vector<double> v(static_cast<size_t>(k_max) + 1, 0.0);
    v[0] = 1.0;
    if (k_max >= 1) v[1] = 0.5 * lam + A;
    for (int k = 1; k < k_max; ++k)
        v[k + 1] = ((2.0 * k + 0.5) * lam * v[k] + A * v[k]
                    - (k - 0.5) * lam * lam * v[k - 1]) / (k + 1.0);
    return v;
}

std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b,
                             int n_max) {
    std::vector<double> r(static_cast<size_t>(n_max) + 1, 0.0);
    for (int i = 0; i <= n_max; ++i) {
        if (a[i] == 0.0) continue;
        for (int j = 0; i + j <= n_max; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

void check_spec(const GeneratingSpec& spec) {
    if (!spec.factored)
        throw std::invalid_argument("generating spec is not factored; use the "
                                    "polynomial generating function instead");
    if (spec.roots.size() != spec.amps.size() || spec.roots.empty())
        throw std::invalid_argument("generating spec: roots/amps size mismatch");
    for (size_t i = 0; i < spec.roots.size(); ++i)
        if (spec.roots[i] < -1e-12)
            throw std::domain_error("generating spec: negative noise root");
}

} // namespace

std::vector<double> photocount_table(const GeneratingSpec& spec, int n_max) {
    check_spec(spec);
    std::vector<double> acc;
    for (size_t i = 0; i < spec.roots.size(); ++i) {
        const double lam = std::max(0.0, spec.roots[i]);
        auto u = photon_factor_table(lam, spec.amps[i], n_max);
        acc = acc.empty() ? std::move(u) : convolve(acc, u, n_max);
    }
    return acc;
}

double photocount_pn(const GeneratingSpec& spec, int n) {
    if (n < 0) throw std::domain_error("photocount_pn: n must be >= 0");
    return photocount_table(spec, n)[static_cast<size_t>(n)];
}

double factorial_moment(const GeneratingSpec& spec, int k) {
    if (k < 0) throw std::domain_error("factorial_moment: k must be >= 0");
    check_spec(spec);
    std::vector<double> acc;
    for (size_t i = 0; i < spec.roots.size(); ++i) {
        auto v = moment_factor_table(std::max(0.0, spec.roots[i]), spec.amps[i], k);
        acc = acc.empty() ? std::move(v) : convolve(acc, v, k);
    }
    double kfact = 1.0;
    for (int j = 2; j <= k; ++j) kfact *= j;
    return kfact * acc[static_cast<size_t>(k)];
}

ParametricSqueezingReport squeezing_report(const NoiseCoefficients& c) {
    ParametricSqueezingReport r;
    const double s = c.s;
    r.var_S1 = 2.0 * c.C_S.real() + 2.0 * c.B_S + s;
    r.var_S2 = -2.0 * c.C_S.real() + 2.0 * c.B_S + s;
    r.var_A1 = 2.0 * c.C_A.real() + 2.0 * c.B_A + s;
    r.var_A2 = -2.0 * c.C_A.real() + 2.0 * c.B_A + s;
    r.var_S_min = -2.0 * std::abs(c.C_S) + 2.0 * c.B_S + s;
    r.var_S_max = 2.0 * std::abs(c.C_S) + 2.0 * c.B_S + s;
    r.var_A_min = -2.0 * std::abs(c.C_A) + 2.0 * c.B_A + s;
    r.var_A_max = 2.0 * std::abs(c.C_A) + 2.0 * c.B_A + s;
    r.cov_S = 4.0 * c.C_S.imag();
    r.cov_A = 4.0 * c.C_A.imag();
    r.xS1xA1 = 2.0 * (c.D_SA - c.Dbar_SA).real();
    r.xS2xA2 = -2.0 * (c.D_SA + c.Dbar_SA).real();
    r.xS1xA2 = 2.0 * (c.D_SA - c.Dbar_SA).imag();
    r.xS2xA1 = 2.0 * (c.D_SA + c.Dbar_SA).imag();

    const cplx ctot = c.C_S + c.C_A + 2.0 * c.D_SA;
    const double btot = c.B_S + c.B_A - 2.0 * c.Dbar_SA.real() + s;
    r.var_two_mode_1 = 2.0 * ctot.real() + 2.0 * btot;
    r.var_two_mode_2 = -2.0 * ctot.real() + 2.0 * btot;
    r.var_two_mode_min = -2.0 * std::abs(ctot) + 2.0 * btot;
    r.var_two_mode_max = 2.0 * std::abs(ctot) + 2.0 * btot;

    r.standard_S = std::abs(c.C_S.real()) > c.B_S + 0.5 * s;
    r.principal_S = std::abs(c.C_S) > c.B_S + 0.5 * s;
    r.standard_A = std::abs(c.C_A.real()) > c.B_A + 0.5 * s;
    r.principal_A = std::abs(c.C_A) > c.B_A + 0.5 * s;
    r.standard_two_mode = std::abs(ctot.real()) > btot;
    r.principal_two_mode = std::abs(ctot) > btot;
    return r;
}

} // namespace raman
