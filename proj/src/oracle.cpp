#include "raman/oracle.hpp"
#include "raman/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace raman {

ChainGenerator ChainGenerator::make(const ChainKey& key, int m_lo, int m_hi,
                                    Direction dir) {
    ChainGenerator gen;
    gen.direction = dir;
    const int len = m_hi - m_lo + 1;
    gen.decay.resize(static_cast<size_t>(len));
    gen.feed.assign(static_cast<size_t>(len), 0.0);
    for (int i = 0; i < len; ++i) {
        const int m = m_lo + i;
        const int n = key.K - m;
        if (dir == Direction::stokes) {
            gen.decay[i] = 0.5 * (double(n) * (m + 1) + double(n + key.nu) * (m + key.mu + 1));
            // source element (n+1, m-1)
            if (i > 0) {
                const double w2 = double(n + 1) * (n + key.nu + 1) * m * (m + key.mu);
                gen.feed[i] = std::sqrt(std::max(0.0, w2));
            }
        } else {
            gen.decay[i] = 0.5 * (double(n + 1) * m + double(n + key.nu + 1) * (m + key.mu));
            // source element (n-1, m+1)
            if (i + 1 < len) {
                const double w2 = double(n) * (n + key.nu) * (m + 1) * (m + key.mu + 1);
                gen.feed[i] = std::sqrt(std::max(0.0, w2));
            }
        }
    }
    return gen;
}

double ChainGenerator::max_decay() const {
    double mx = 0.0;
    for (double d : decay) mx = std::max(mx, d);
    return mx;
}

double default_step(const ChainGenerator& gen) {
    const double f = gen.max_decay();
    return f > 0.0 ? std::min(1e-3, 0.1 / f) : 1e-3;
}

namespace {

void apply(const ChainGenerator& gen, const std::vector<cplx>& v, std::vector<cplx>& out) {
    const int len = static_cast<int>(v.size());
    for (int i = 0; i < len; ++i) {
        cplx acc = -gen.decay[i] * v[i];
        if (gen.direction == Direction::stokes) {
            if (i > 0) acc += gen.feed[i] * v[i - 1];
        } else {
            if (i + 1 < len) acc += gen.feed[i] * v[i + 1];
        }
        out[i] = acc;
    }
}

} // namespace

std::vector<cplx> integrate_chain(const ChainGenerator& gen,
                                  const std::vector<cplx>& v0,
                                  double dtau, double h) {
    if (dtau < 0.0) throw std::domain_error("integrate_chain: dtau must be >= 0");
    if (h <= 0.0) throw std::domain_error("integrate_chain: h must be > 0");
    if (h * gen.max_decay() > 0.5)
        throw stability_error("integrate_chain: step too large for chain decay rates");
    if (v0.size() != gen.decay.size())
        throw std::invalid_argument("integrate_chain: vector/generator size mismatch");

    std::vector<cplx> v = v0;
    const size_t len = v.size();
    std::vector<cplx> k1(len), k2(len), k3(len), k4(len), tmp(len);

    double remaining = dtau;
    while (remaining > 0.0) {
        const double step = std::min(h, remaining);
        apply(gen, v, k1);
        for (size_t i = 0; i < len; ++i) tmp[i] = v[i] + 0.5 * step * k1[i];
        apply(gen, tmp, k2);
        for (size_t i = 0; i < len; ++i) tmp[i] = v[i] + 0.5 * step * k2[i];
        apply(gen, tmp, k3);
        for (size_t i = 0; i < len; ++i) tmp[i] = v[i] + step * k3[i];
        apply(gen, tmp, k4);
        for (size_t i = 0; i < len; ++i)
            v[i] += step / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        remaining -= step;
    }
    return v;
}

std::vector<cplx> expm_chain(const ChainGenerator& gen,
                             const std::vector<cplx>& v0, double dtau) {
    if (dtau < 0.0) throw std::domain_error("expm_chain: dtau must be >= 0");
    const int len = static_cast<int>(v0.size());
    if (len != static_cast<int>(gen.decay.size()))
        throw std::invalid_argument("expm_chain: vector/generator size mismatch");
    if (len > 200) throw std::invalid_argument("expm_chain: chain length above 200");
    if (len == 0) return {};

    // Dense real generator; triangular so exp stays triangular.
    std::vector<double> A(static_cast<size_t>(len) * len, 0.0);
    auto at = [len](std::vector<double>& M, int r, int c) -> double& {
        return M[static_cast<size_t>(r) * len + c];
    };
    for (int i = 0; i < len; ++i) {
        at(A, i, i) = -gen.decay[i] * dtau;
        if (gen.direction == Direction::stokes) {
            if (i > 0) at(A, i, i - 1) = gen.feed[i] * dtau;
        } else {
            if (i + 1 < len) at(A, i, i + 1) = gen.feed[i] * dtau;
        }
    }

    double norm1 = 0.0;
    for (int c = 0; c < len; ++c) {
        double s = 0.0;
        for (int r = 0; r < len; ++r) s += std::abs(A[static_cast<size_t>(r) * len + c]);
        norm1 = std::max(norm1, s);
    }
    int squarings = 0;
    while (norm1 > 0.5) {
        norm1 *= 0.5;
        ++squarings;
    }
    const double scale = std::ldexp(1.0, -squarings);
    for (double& x : A) x *= scale;

    auto matmul = [len](const std::vector<double>& X, const std::vector<double>& Y) {
        std::vector<double> Z(static_cast<size_t>(len) * len, 0.0);
        for (int r = 0; r < len; ++r)
            for (int k = 0; k < len; ++k) {
                const double x = X[static_cast<size_t>(r) * len + k];
                if (x == 0.0) continue;
                const double* yrow = &Y[static_cast<size_t>(k) * len];
                double* zrow = &Z[static_cast<size_t>(r) * len];
                for (int c = 0; c < len; ++c) zrow[c] += x * yrow[c];
            }
        return Z;
    };

    // Truncated Taylor at ||A|| <= 0.5: terms decay below eps well before k=24.
    std::vector<double> E(static_cast<size_t>(len) * len, 0.0);
    for (int i = 0; i < len; ++i) E[static_cast<size_t>(i) * len + i] = 1.0;
    std::vector<double> term = E;
    for (int k = 1; k <= 24; ++k) {
        term = matmul(term, A);
        for (double& x : term) x /= k;
        double mx = 0.0;
        for (size_t i = 0; i < term.size(); ++i) {
            E[i] += term[i];
            mx = std::max(mx, std::abs(term[i]));
        }
        if (mx < 1e-18) break;
    }
    for (int s = 0; s < squarings; ++s) E = matmul(E, E);

    std::vector<cplx> out(static_cast<size_t>(len), cplx{0.0, 0.0});
    for (int r = 0; r < len; ++r) {
        cplx acc{0.0, 0.0};
        const double* row = &E[static_cast<size_t>(r) * len];
        for (int c = 0; c < len; ++c)
            if (row[c] != 0.0) acc += row[c] * v0[static_cast<size_t>(c)];
        out[static_cast<size_t>(r)] = acc;
    }
    return out;
}

DensityTensor evolve_oracle(const DensityTensor& rho0, double dtau, Direction dir,
                            OracleMethod method, double h) {
    if (dtau < 0.0) throw std::domain_error("evolve_oracle: dtau must be >= 0");
    DensityTensor out(rho0.cutoff_K(), rho0.nu_max(), rho0.mu_max(),
                      rho0.time() + dtau);
    for (const auto& [key, c] : rho0.chains()) {
        const ChainGenerator gen = ChainGenerator::make(key, c.m_lo, c.m_hi(), dir);
        Chain nc;
        nc.m_lo = c.m_lo;
        if (method == OracleMethod::expm) {
            nc.v = expm_chain(gen, c.v, dtau);
        } else {
            const double step = h > 0.0 ? h : default_step(gen);
            nc.v = integrate_chain(gen, c.v, dtau, step);
        }
        out.chains().emplace(key, std::move(nc));
    }
    return out;
}

} // namespace raman
