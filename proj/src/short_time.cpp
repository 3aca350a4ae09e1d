#include "raman/short_time.hpp"
#include "raman/errors.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace raman {

namespace {

// truncated power series in dtau
template <typename T, int N>
struct Ser {
    std::array<T, N> c{};

    T eval(double t) const {
        T acc = c[N - 1];
        for (int k = N - 2; k >= 0; --k) acc = acc * t + c[k];
        return acc;
    }
};

template <typename T, int N>
Ser<T, N> mul(const Ser<T, N>& a, const Ser<T, N>& b) {
    Ser<T, N> r;
    for (int k = 0; k < N; ++k)
        for (int j = 0; j <= k; ++j) r.c[k] += a.c[j] * b.c[k - j];
    return r;
}

template <typename T, int N>
Ser<T, N> sub(const Ser<T, N>& a, const Ser<T, N>& b) {
    Ser<T, N> r;
    for (int k = 0; k < N; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
}

template <typename T, int N>
Ser<T, N> div(const Ser<T, N>& num, const Ser<T, N>& den) {
    Ser<T, N> r;
    for (int k = 0; k < N; ++k) {
        T s = num.c[k];
        for (int j = 0; j < k; ++j) s -= r.c[j] * den.c[k - j];
        r.c[k] = s / den.c[0];
    }
    return r;
}

template <int N>
Ser<cplx, N> conj(const Ser<cplx, N>& a) {
    Ser<cplx, N> r;
    for (int k = 0; k < N; ++k) r.c[k] = std::conj(a.c[k]);
    return r;
}

template <int N>
Ser<double, N> real(const Ser<cplx, N>& a) {
    Ser<double, N> r;
    for (int k = 0; k < N; ++k) r.c[k] = a.c[k].real();
    return r;
}

using Ser4d = Ser<double, 4>;
using Ser3c = Ser<cplx, 3>;
using Ser3d = Ser<double, 3>;

// ---- photon-number moment series (orders as printed; <nm> cubic re-derived)

Ser4d series_n(const InitialMoments& im) {
    const double *n = im.n, *m = im.m;
    Ser4d s;
    s.c[0] = n[1];
    s.c[1] = -n[1] * (m[1] + 1);
    s.c[2] = -0.5 * (n[2] * (m[1] + 1) - n[1] * (m[2] + 3 * m[1] + 2));
    return s;
}

Ser4d series_n2(const InitialMoments& im) {
    const double *n = im.n, *m = im.m;
    Ser4d s;
    s.c[0] = n[2];
    s.c[1] = -(2 * n[2] - n[1]) * (m[1] + 1);
    s.c[2] = -0.5 * (2 * n[3] * (m[1] + 1) - n[2] * (4 * m[2] + 13 * m[1] + 9)
                     + 3 * n[1] * (m[2] + 3 * m[1] + 2));
    return s;
}

Ser4d series_m(const InitialMoments& im) {
    const double *n = im.n, *m = im.m;
    Ser4d s;
    s.c[0] = m[1];
    s.c[1] = n[1] * (m[1] + 1);
    s.c[2] = -0.5 * (m[2] * n[1] + m[1] * (3 * n[1] - n[2]) + 2 * n[1] - n[2]);
    s.c[3] = (m[3] * n[1] + m[2] * (7 * n[1] - 4 * n[2])
              + m[1] * (14 * n[1] - 12 * n[2] + n[3]) + 8 * n[1] - 8 * n[2] + n[3]) / 6.0;
    return s;
}

Ser4d series_m2(const InitialMoments& im) {
    const double *n = im.n, *m = im.m;
    Ser4d s;
    s.c[0] = m[2];
    s.c[1] = n[1] * (2 * m[2] + 3 * m[1] + 1);
    s.c[2] = -0.5 * (2 * m[3] * n[1] + m[2] * (9 * n[1] - 4 * n[2])
                     + m[1] * (13 * n[1] - 9 * n[2]) + 6 * n[1] - 5 * n[2]);
    s.c[3] = (2 * m[4] * n[1] + m[3] * (21 * n[1] - 14 * n[2])
              + m[2] * (73 * n[1] - 72 * n[2] + 8 * n[3])
              + m[1] * (102 * n[1] - 118 * n[2] + 21 * n[3])
              + 48 * n[1] - 60 * n[2] + 13 * n[3]) / 6.0;
    return s;
}

Ser4d series_nm(const InitialMoments& im) {
    const double *n = im.n, *m = im.m;
    Ser4d s;
    s.c[0] = n[1] * m[1];
    s.c[1] = n[2] * (m[1] + 1) - n[1] * (m[2] + 2 * m[1] + 1);
    s.c[2] = 0.5 * (n[3] * (m[1] + 1) - n[2] * (4 * m[2] + 11 * m[1] + 7)
                    + n[1] * (m[3] + 6 * m[2] + 11 * m[1] + 6));
    // cubic term re-derived from the master-equation generator
    s.c[3] = (n[4] * (m[1] + 1) - n[3] * (32 * m[1] + 11 * m[2] + 21)
              + n[2] * (124 * m[1] + 67 * m[2] + 11 * m[3] + 68)
              - n[1] * (94 * m[1] + 59 * m[2] + 14 * m[3] + m[4] + 48)) / 6.0;
    return s;
}

// ---- amplitude moment series (O(dtau^2))

Ser3c series_aSp(const InitialMoments& im) {
    Ser3c s;
    const auto& L = im.aL;
    const auto& S = im.aS;
    s.c[0] = S[1][0];
    s.c[1] = 0.5 * L[1][1] * S[1][0];
    s.c[2] = (L[2][2] * S[1][0] - 2.0 * L[1][1] * S[2][1] - 3.0 * L[1][1] * S[1][0]) / 8.0;
    return s;
}

Ser3c series_aLp(const InitialMoments& im) {
    Ser3c s;
    const auto& L = im.aL;
    const auto& S = im.aS;
    s.c[0] = L[1][0];
    s.c[1] = -0.5 * L[1][0] * (S[1][1] + 1.0);
    s.c[2] = (L[1][0] * S[2][2] - 2.0 * L[2][1] * (S[1][1] + 1.0)
              + L[1][0] * (3.0 * S[1][1] + 1.0)) / 8.0;
    return s;
}

Ser3c series_aSp2(const InitialMoments& im) {
    Ser3c s;
    const auto& L = im.aL;
    const auto& S = im.aS;
    s.c[0] = S[2][0];
    s.c[1] = L[1][1] * S[2][0];
    s.c[2] = 0.5 * (L[2][2] * S[2][0] - L[1][1] * S[3][1] - 2.0 * L[1][1] * S[2][0]);
    return s;
}

Ser3c series_aLp2(const InitialMoments& im) {
    Ser3c s;
    const auto& L = im.aL;
    const auto& S = im.aS;
    s.c[0] = L[2][0];
    s.c[1] = -L[2][0] * (S[1][1] + 1.0);
    s.c[2] = 0.5 * (L[2][0] * S[2][2] - L[3][1] * (S[1][1] + 1.0)
                    + L[2][0] * (3.0 * S[1][1] + 1.0));
    return s;
}

Ser3c series_aLp_aSp(const InitialMoments& im) {
    Ser3c s;
    const auto& L = im.aL;
    const auto& S = im.aS;
    s.c[0] = L[1][0] * S[1][0];
    s.c[1] = 0.5 * (L[2][1] * S[1][0] - L[1][0] * S[2][1] - 2.0 * L[1][0] * S[1][0]);
    s.c[2] = (L[3][2] * S[1][0] - 11.0 * L[2][1] * S[1][0] - 6.0 * L[2][1] * S[2][1]
              + 5.0 * L[1][0] * S[2][1] + L[1][0] * S[3][2]
              + 4.0 * L[1][0] * S[1][0]) / 8.0;
    return s;
}

// <a_L a_S^+>; both orders re-derived from the Lindblad adjoint
// (difference-operator calculus on a_L a_S^+ g(n, m)).
Ser3c series_aL_aSp(const InitialMoments& im) {
    Ser3c s;
    const auto& L = im.aL;
    const auto& S = im.aS;
    const cplx A0 = L[0][1];
    const cplx A1 = L[0][1] + L[1][2];
    const cplx A2 = L[0][1] + 3.0 * L[1][2] + L[2][3];
    const cplx B0 = S[1][0];
    const cplx B1 = S[2][1];
    const cplx B2 = S[2][1] + S[3][2];
    s.c[0] = A0 * B0;
    s.c[1] = 0.5 * (A1 * B0 - A0 * B1 - 2.0 * A0 * B0);
    s.c[2] = 1.5 * A0 * B0 - 1.5 * A1 * B0 + 0.125 * A2 * B0 + A0 * B1
             - 0.75 * A1 * B1 + 0.125 * A0 * B2;
    return s;
}

template <int N>
Ser<double, N> truncate4(const Ser4d& s) {
    Ser<double, N> r;
    for (int k = 0; k < N; ++k) r.c[k] = s.c[k];
    return r;
}

} // namespace

InitialMoments InitialMoments::coherent(cplx alpha_L, cplx alpha_S) {
    InitialMoments im;
    const double x = std::norm(alpha_L);
    const double y = std::norm(alpha_S);
    im.n[1] = x;
    im.n[2] = x * x + x;
    im.n[3] = x * x * x + 3 * x * x + x;
    im.n[4] = x * x * x * x + 6 * x * x * x + 7 * x * x + x;
    im.m[1] = y;
    im.m[2] = y * y + y;
    im.m[3] = y * y * y + 3 * y * y + y;
    im.m[4] = y * y * y * y + 6 * y * y * y + 7 * y * y + y;
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) {
            if (p + q > 5) continue;
            im.aL[p][q] = std::pow(std::conj(alpha_L), p) * std::pow(alpha_L, q);
            im.aS[p][q] = std::pow(std::conj(alpha_S), p) * std::pow(alpha_S, q);
        }
    return im;
}

MomentSet photon_moments_short(const InitialMoments& init, double dtau) {
    if (dtau < 0.0) throw std::domain_error("photon_moments_short: dtau must be >= 0");
    MomentSet ms;
    ms.time = dtau;
    ms.mean_n = series_n(init).eval(dtau);
    ms.mean_n2 = series_n2(init).eval(dtau);
    ms.mean_m = series_m(init).eval(dtau);
    ms.mean_m2 = series_m2(init).eval(dtau);
    ms.cross_nm = series_nm(init).eval(dtau);
    return ms;
}

double gamma2_short(const InitialMoments& init, double dtau, WhichMode mode) {
    if (mode == WhichMode::laser) {
        if (init.n[1] <= 0.0)
            throw std::domain_error("gamma2_short: laser branch needs <n> > 0");
        const auto num = sub(truncate4<3>(series_n2(init)), truncate4<3>(series_n(init)));
        const auto den = mul(truncate4<3>(series_n(init)), truncate4<3>(series_n(init)));
        auto g = div(num, den);
        g.c[0] -= 1.0;
        return g.eval(dtau);
    }
    if (init.m[1] > 0.0) {
        const auto num = sub(truncate4<3>(series_m2(init)), truncate4<3>(series_m(init)));
        const auto den = mul(truncate4<3>(series_m(init)), truncate4<3>(series_m(init)));
        auto g = div(num, den);
        g.c[0] -= 1.0;
        return g.eval(dtau);
    }
    // spontaneous branch: <m^k> = 0, both numerator and denominator start at
    // dtau^2; the result is an O(dtau) expansion.
    if (init.m[2] != 0.0 || init.m[3] != 0.0 || init.m[4] != 0.0)
        throw std::domain_error("gamma2_short: vacuum Stokes branch needs all <m^k> = 0");
    if (init.n[1] <= 0.0)
        throw std::domain_error("gamma2_short: vacuum Stokes branch needs <n> > 0");
    const Ser4d msr = series_m(init);
    const Ser4d m2s = series_m2(init);
    Ser<double, 2> num, den;
    num.c[0] = m2s.c[2] - msr.c[2];
    num.c[1] = m2s.c[3] - msr.c[3];
    den.c[0] = msr.c[1] * msr.c[1];
    den.c[1] = 2.0 * msr.c[1] * msr.c[2];
    auto g = div(num, den);
    g.c[0] -= 1.0;
    return g.eval(dtau);
}

double interbeam_g2_short(const InitialMoments& init, double dtau) {
    const Ser4d nm = series_nm(init);
    const Ser4d ns = series_n(init);
    const Ser4d msr = series_m(init);
    if (init.m[1] > 0.0) {
        Ser3d num = truncate4<3>(nm);
        Ser3d den = mul(truncate4<3>(ns), truncate4<3>(msr));
        auto g = div(num, den);
        g.c[0] -= 1.0;
        return g.eval(dtau);
    }
    if (init.n[1] <= 0.0)
        throw std::domain_error("interbeam_g2_short: needs <n> > 0");
    // vacuum Stokes: numerator and denominator both vanish at dtau = 0.
    const Ser4d den4 = mul(ns, msr);
    Ser3d num{{nm.c[1], nm.c[2], nm.c[3]}};
    Ser3d den{{den4.c[1], den4.c[2], den4.c[3]}};
    auto g = div(num, den);
    g.c[0] -= 1.0;
    return g.eval(dtau);
}

MomentSet amplitude_moments_short(const InitialMoments& init, double dtau) {
    if (dtau < 0.0) throw std::domain_error("amplitude_moments_short: dtau must be >= 0");
    MomentSet ms;
    ms.time = dtau;
    ms.a_S = series_aSp(init).eval(dtau);
    ms.a_L = series_aLp(init).eval(dtau);
    ms.a_S2 = series_aSp2(init).eval(dtau);
    ms.a_L2 = series_aLp2(init).eval(dtau);
    ms.a_L_a_S = series_aLp_aSp(init).eval(dtau);
    ms.a_Ldag_a_S = std::conj(series_aL_aSp(init).eval(dtau));
    return ms;
}

double QuadratureShortReport::var_stokes(double theta) const {
    return 2.0 * (std::exp(cplx{0.0, -2.0 * theta}) * dS2).real() + 2.0 * nS + 1.0;
}

double QuadratureShortReport::var_laser(double theta) const {
    return 2.0 * (std::exp(cplx{0.0, -2.0 * theta}) * dL2).real() + 2.0 * nL + 1.0;
}

QuadratureShortReport quadrature_short(cplx alpha_L, cplx alpha_S, double dtau) {
    if (dtau < 0.0) throw std::domain_error("quadrature_short: dtau must be >= 0");
    const InitialMoments im = InitialMoments::coherent(alpha_L, alpha_S);

    const Ser3c aSp = series_aSp(im);          // <a_S^+>
    const Ser3c aLp = series_aLp(im);
    const Ser3c aS = conj(aSp);                // <a_S>
    const Ser3c aL = conj(aLp);
    const Ser3c aS2 = conj(series_aSp2(im));   // <a_S^2>
    const Ser3c aL2 = conj(series_aLp2(im));
    const Ser3c aLaS = conj(series_aLp_aSp(im));   // <a_L a_S>
    const Ser3c aLpaS = conj(series_aL_aSp(im));   // <a_L^+ a_S>

    Ser3d nSs = truncate4<3>(series_m(im));    // <a_S^+ a_S>
    Ser3d nLs = truncate4<3>(series_n(im));

    const Ser3c dS2 = sub(aS2, mul(aS, aS));
    const Ser3c dL2 = sub(aL2, mul(aL, aL));
    const Ser3d NS = sub(nSs, real(mul(aSp, aS)));
    const Ser3d NL = sub(nLs, real(mul(aLp, aL)));
    const Ser3c dLS = sub(aLaS, mul(aL, aS));
    const Ser3c dbarLS = sub(aLpaS, mul(aLp, aS));

    QuadratureShortReport r;
    r.dS2 = dS2.eval(dtau);
    r.dL2 = dL2.eval(dtau);
    r.nS = NS.eval(dtau);
    r.nL = NL.eval(dtau);
    r.dLS = dLS.eval(dtau);
    r.dbarLS = dbarLS.eval(dtau);

    r.var_stokes_min = -2.0 * std::abs(r.dS2) + 2.0 * r.nS + 1.0;
    r.var_stokes_max = 2.0 * std::abs(r.dS2) + 2.0 * r.nS + 1.0;
    r.var_laser_min = -2.0 * std::abs(r.dL2) + 2.0 * r.nL + 1.0;
    r.var_laser_max = 2.0 * std::abs(r.dL2) + 2.0 * r.nL + 1.0;
    r.cov_stokes = 4.0 * r.dS2.imag();
    r.cov_laser = 4.0 * r.dL2.imag();

    // uncertainty combination composed at series level, like the variances
    auto var_ser = [](const Ser3c& d2, const Ser3d& N, double sign) {
        Ser3d v;
        for (int k = 0; k < 3; ++k) v.c[k] = sign * 2.0 * d2.c[k].real() + 2.0 * N.c[k];
        v.c[0] += 1.0;
        return v;
    };
    auto unc = [&](const Ser3c& d2, const Ser3d& N) {
        const Ser3d v1 = var_ser(d2, N, +1.0);
        const Ser3d v2 = var_ser(d2, N, -1.0);
        Ser3d cov;
        for (int k = 0; k < 3; ++k) cov.c[k] = 4.0 * d2.c[k].imag();
        Ser3d lhs = mul(v1, v2);
        const Ser3d cov2 = mul(cov, cov);
        for (int k = 0; k < 3; ++k) lhs.c[k] -= 0.25 * cov2.c[k];
        lhs.c[0] -= 1.0;
        return lhs;
    };
    r.uncertainty_lhs_stokes = unc(dS2, NS).eval(dtau);
    r.uncertainty_lhs_laser = unc(dL2, NL).eval(dtau);

    r.xL1xS1 = 2.0 * (r.dLS + r.dbarLS).real();
    r.xL2xS2 = 2.0 * (-r.dLS + r.dbarLS).real();
    r.xL1xS2 = 2.0 * (r.dLS + r.dbarLS).imag();
    r.xL2xS1 = 2.0 * (r.dLS - r.dbarLS).imag();
    r.two_mode_cov = r.cov_laser + r.cov_stokes + 2.0 * r.xL1xS2 + 2.0 * r.xL2xS1;

    // aggregate mode a_L + a_S
    Ser3c dsum2;
    Ser3d Nsum;
    for (int k = 0; k < 3; ++k) {
        dsum2.c[k] = dL2.c[k] + dS2.c[k] + 2.0 * dLS.c[k];
        Nsum.c[k] = NL.c[k] + NS.c[k] + 2.0 * dbarLS.c[k].real();
    }
    const cplx ds2 = dsum2.eval(dtau);
    const double nsum = Nsum.eval(dtau);
    r.var_two_mode_1 = 2.0 * ds2.real() + 2.0 * nsum + 2.0;
    r.var_two_mode_2 = -2.0 * ds2.real() + 2.0 * nsum + 2.0;
    r.var_two_mode_min = -2.0 * std::abs(ds2) + 2.0 * nsum + 2.0;
    r.var_two_mode_max = 2.0 * std::abs(ds2) + 2.0 * nsum + 2.0;
    return r;
}

} // namespace raman
