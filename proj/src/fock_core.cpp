#include "raman/fock_core.hpp"
#include "raman/errors.hpp"
#include "raman/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace raman {

// ---------------------------------------------------------------- ModeState

ModeState ModeState::number(int n0) {
    if (n0 < 0) throw std::domain_error("ModeState::number: n0 must be nonnegative");
    ModeState s;
    s.kind_ = Kind::number;
    s.n0_ = n0;
    return s;
}

ModeState ModeState::coherent(cplx amplitude) {
    ModeState s;
    s.kind_ = Kind::coherent;
    s.amp_ = amplitude;
    return s;
}

ModeState ModeState::chaotic(double mean) {
    if (mean < 0.0) throw std::domain_error("ModeState::chaotic: mean must be nonnegative");
    ModeState s;
    s.kind_ = Kind::chaotic;
    s.mean_ch_ = mean;
    return s;
}

ModeState ModeState::coherent_chaotic(cplx amplitude, double chaotic_mean) {
    if (chaotic_mean < 0.0)
        throw std::domain_error("ModeState::coherent_chaotic: chaotic mean must be nonnegative");
    ModeState s;
    s.kind_ = Kind::coherent_chaotic;
    s.amp_ = amplitude;
    s.mean_ch_ = chaotic_mean;
    return s;
}

ModeState ModeState::raw(std::vector<std::vector<cplx>> elements, int nu_offset) {
    ModeState s;
    s.kind_ = Kind::raw;
    s.raw_ = std::move(elements);
    s.raw_nu_offset_ = nu_offset;
    return s;
}

cplx ModeState::element(int n, int nu) const {
    if (n < 0 || n + nu < 0) return {0.0, 0.0};
    switch (kind_) {
    case Kind::number:
        return (n == n0_ && nu == 0) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
    case Kind::coherent: {
        const double a2 = std::norm(amp_);
        if (a2 == 0.0) return (n == 0 && nu == 0) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
        // e^{-|a|^2} a^n conj(a)^{n+nu} / sqrt(n!(n+nu)!)
        const double mag = std::exp(-a2 + 0.5 * (2 * n + nu) * std::log(a2)
                                    - half_log_factorial_ratio(n, n + nu, 0, 0));
        const double ph = std::arg(amp_);
        return std::polar(mag, -ph * nu);
    }
    case Kind::chaotic: {
        if (nu != 0) return {0.0, 0.0};
        if (mean_ch_ == 0.0) return (n == 0) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
        const double p = std::exp(n * std::log(mean_ch_ / (1.0 + mean_ch_))
                                  - std::log1p(mean_ch_));
        return {p, 0.0};
    }
    case Kind::coherent_chaotic: {
        if (mean_ch_ == 0.0) return ModeState::coherent(amp_).element(n, nu);
        if (std::norm(amp_) == 0.0) return ModeState::chaotic(mean_ch_).element(n, nu);
        // Displaced thermal state; nu >= 0 branch, conjugate symmetry otherwise.
        if (nu < 0) return std::conj(element(n + nu, -nu));
        const double N = mean_ch_;
        const double a2 = std::norm(amp_);
        const double lag = laguerre(n, nu, -a2 / (N * (1.0 + N)));
        double mag = std::exp(-a2 / (1.0 + N)
                              + half_log_factorial_ratio(n, 0, n + nu, 0)
                              + 0.5 * nu * std::log(a2)
                              - (nu + 1) * std::log1p(N)
                              + n * std::log(N / (1.0 + N)));
        const double ph = std::arg(amp_);
        return std::polar(mag * lag, -ph * nu);
    }
    case Kind::raw: {
        const int iv = nu + raw_nu_offset_;
        if (iv < 0 || iv >= static_cast<int>(raw_.size())) return {0.0, 0.0};
        const auto& col = raw_[iv];
        if (n >= static_cast<int>(col.size())) return {0.0, 0.0};
        return col[n];
    }
    }
    return {0.0, 0.0};
}

int ModeState::auto_cutoff(double tail_tol) const {
    switch (kind_) {
    case Kind::number:
        return n0_;
    case Kind::raw:
        return raw_.empty() ? 0 : static_cast<int>(raw_[raw_nu_offset_].size()) - 1;
    default: {
        double acc = 0.0;
        for (int n = 0; n <= 4096; ++n) {
            acc += occupation(n);
            if (acc >= 1.0 - tail_tol) return n;
        }
        throw truncation_error("ModeState::auto_cutoff: tail does not close by n=4096",
                               1.0 - acc);
    }
    }
}

double ModeState::mean_photons() const {
    switch (kind_) {
    case Kind::number: return n0_;
    case Kind::coherent: return std::norm(amp_);
    case Kind::chaotic: return mean_ch_;
    case Kind::coherent_chaotic: return std::norm(amp_) + mean_ch_;
    case Kind::raw: {
        double s = 0.0;
        for (int n = 0; n <= auto_cutoff(); ++n) s += n * occupation(n);
        return s;
    }
    }
    return 0.0;
}

// ------------------------------------------------------------ DensityTensor

bool DensityTensor::chain_bounds(const ChainKey& key, int& m_lo, int& m_hi) {
    m_lo = std::max(0, -key.mu);
    m_hi = std::min(key.K, key.K + key.nu);
    return m_lo <= m_hi;
}

bool DensityTensor::stores_chain(const ChainKey& key) const {
    if (key.K < 0 || key.K > cutoff_K_) return false;
    if (key.K + key.nu + key.mu < 0 || key.K + key.nu + key.mu > cutoff_K_) return false;
    if (std::abs(key.nu) > nu_max_ || std::abs(key.mu) > mu_max_) return false;
    int lo, hi;
    return chain_bounds(key, lo, hi);
}

Chain& DensityTensor::chain(const ChainKey& key) {
    auto it = chains_.find(key);
    if (it != chains_.end()) return it->second;
    int lo, hi;
    if (!chain_bounds(key, lo, hi))
        throw std::logic_error("DensityTensor::chain: empty chain requested");
    Chain c;
    c.m_lo = lo;
    c.v.assign(static_cast<size_t>(hi - lo + 1), cplx{0.0, 0.0});
    return chains_.emplace(key, std::move(c)).first->second;
}

const Chain* DensityTensor::find_chain(const ChainKey& key) const {
    auto it = chains_.find(key);
    return it == chains_.end() ? nullptr : &it->second;
}

cplx DensityTensor::at(int n, int m, int nu, int mu) const {
    if (n < 0 || m < 0 || n + nu < 0 || m + mu < 0) return {0.0, 0.0};
    const Chain* c = find_chain(ChainKey{n + m, nu, mu});
    if (!c) return {0.0, 0.0};
    const int i = m - c->m_lo;
    if (i < 0 || i >= static_cast<int>(c->v.size())) return {0.0, 0.0};
    return c->v[i];
}

void DensityTensor::set(int n, int m, int nu, int mu, cplx value) {
    if (n < 0 || m < 0 || n + nu < 0 || m + mu < 0)
        throw std::domain_error("DensityTensor::set: negative Fock index");
    Chain& c = chain(ChainKey{n + m, nu, mu});
    const int i = m - c.m_lo;
    if (i < 0 || i >= static_cast<int>(c.v.size()))
        throw std::logic_error("DensityTensor::set: index outside chain bounds");
    c.v[i] = value;
}

double DensityTensor::trace() const {
    double tr = 0.0;
    for (const auto& [key, c] : chains_) {
        if (key.nu != 0 || key.mu != 0) continue;
        for (const cplx& z : c.v) tr += z.real();
    }
    return tr;
}

double DensityTensor::hermiticity_defect() const {
    double worst = 0.0;
    for (const auto& [key, c] : chains_) {
        for (int i = 0; i < static_cast<int>(c.v.size()); ++i) {
            const int m = c.m_lo + i;
            const int n = key.K - m;
            const cplx partner = at(n + key.nu, m + key.mu, -key.nu, -key.mu);
            worst = std::max(worst, std::abs(std::conj(c.v[i]) - partner));
        }
    }
    return worst;
}

void DensityTensor::save(std::ostream& os) const {
    char buf[160];
    std::snprintf(buf, sizeof buf, "# cutoff_K=%d nu_max=%d mu_max=%d time=%.17g\n",
                  cutoff_K_, nu_max_, mu_max_, time_);
    os << buf << "# K n m nu mu re im\n";
    for (const auto& [key, c] : chains_) {
        for (int i = 0; i < static_cast<int>(c.v.size()); ++i) {
            const int m = c.m_lo + i;
            std::snprintf(buf, sizeof buf, "%d %d %d %d %d %.17g %.17g\n",
                          key.K, key.K - m, m, key.nu, key.mu,
                          c.v[i].real(), c.v[i].imag());
            os << buf;
        }
    }
}

DensityTensor DensityTensor::load(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw std::runtime_error("DensityTensor::load: empty stream");
    int K_cut = 0, nu_max = 0, mu_max = 0;
    double time = 0.0;
    if (std::sscanf(line.c_str(), "# cutoff_K=%d nu_max=%d mu_max=%d time=%lg",
                    &K_cut, &nu_max, &mu_max, &time) != 4)
        throw std::runtime_error("DensityTensor::load: bad header line");
    DensityTensor out(K_cut, nu_max, mu_max, time);
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        int K, n, m, nu, mu;
        double re, im;
        if (std::sscanf(line.c_str(), "%d %d %d %d %d %lg %lg",
                        &K, &n, &m, &nu, &mu, &re, &im) != 7)
            throw std::runtime_error("DensityTensor::load: bad row: " + line);
        out.set(n, m, nu, mu, cplx{re, im});
    }
    return out;
}

// ---------------------------------------------------------- free functions

Indices hermitian_partner(int n, int m, int nu, int mu) {
    if (n + nu < 0 || m + mu < 0)
        throw std::domain_error("hermitian_partner: partner index negative");
    return Indices{n + nu, m + mu, -nu, -mu};
}

DensityTensor build_product_state(const ModeState& laser, const ModeState& stokes,
                                  int cutoff_K, int nu_max, int mu_max,
                                  double tail_tol) {
    if (cutoff_K < 0) throw std::domain_error("build_product_state: cutoff_K < 0");
    DensityTensor rho(cutoff_K, nu_max, mu_max, 0.0);

    // Per-mode element caches over the index ranges we touch.
    const int N = cutoff_K;
    auto cacheL = std::vector<std::vector<cplx>>(static_cast<size_t>(2 * nu_max + 1));
    auto cacheS = std::vector<std::vector<cplx>>(static_cast<size_t>(2 * mu_max + 1));
    for (int nu = -nu_max; nu <= nu_max; ++nu) {
        auto& col = cacheL[nu + nu_max];
        col.resize(static_cast<size_t>(N) + 1);
        for (int n = 0; n <= N; ++n) col[n] = laser.element(n, nu);
    }
    for (int mu = -mu_max; mu <= mu_max; ++mu) {
        auto& col = cacheS[mu + mu_max];
        col.resize(static_cast<size_t>(N) + 1);
        for (int m = 0; m <= N; ++m) col[m] = stokes.element(m, mu);
    }

    for (int K = 0; K <= cutoff_K; ++K) {
        for (int nu = -nu_max; nu <= nu_max; ++nu) {
            for (int mu = -mu_max; mu <= mu_max; ++mu) {
                const ChainKey key{K, nu, mu};
                if (!rho.stores_chain(key)) continue;
                int lo, hi;
                DensityTensor::chain_bounds(key, lo, hi);
                bool any = false;
                std::vector<cplx> vals(static_cast<size_t>(hi - lo + 1));
                for (int m = lo; m <= hi; ++m) {
                    const cplx z = cacheL[nu + nu_max][K - m] * cacheS[mu + mu_max][m];
                    vals[m - lo] = z;
                    any = any || (z != cplx{0.0, 0.0});
                }
                if (!any) continue;
                rho.chain(key).v = std::move(vals);
            }
        }
    }

    const double tr = rho.trace();
    if (tr < 1.0 - tail_tol)
        throw truncation_error("build_product_state: cutoff_K leaves too much tail mass",
                               1.0 - tr);
    return rho;
}

std::vector<cplx> stokes_marginal(const DensityTensor& rho, int mu) {
    std::vector<cplx> out(static_cast<size_t>(rho.cutoff_K()) + 1, cplx{0.0, 0.0});
    for (const auto& [key, c] : rho.chains()) {
        if (key.nu != 0 || key.mu != mu) continue;
        for (int i = 0; i < static_cast<int>(c.v.size()); ++i)
            out[static_cast<size_t>(c.m_lo + i)] += c.v[i];
    }
    return out;
}

std::vector<cplx> laser_marginal(const DensityTensor& rho, int nu) {
    std::vector<cplx> out(static_cast<size_t>(rho.cutoff_K()) + 1, cplx{0.0, 0.0});
    for (const auto& [key, c] : rho.chains()) {
        if (key.mu != 0 || key.nu != nu) continue;
        for (int i = 0; i < static_cast<int>(c.v.size()); ++i) {
            const int n = key.K - (c.m_lo + i);
            out[static_cast<size_t>(n)] += c.v[i];
        }
    }
    return out;
}

MomentSet extract_moments(const DensityTensor& rho) {
    MomentSet ms;
    ms.time = rho.time();
    for (const auto& [key, c] : rho.chains()) {
        for (int i = 0; i < static_cast<int>(c.v.size()); ++i) {
            const int m = c.m_lo + i;
            const int n = key.K - m;
            const cplx z = c.v[i];
            if (key.nu == 0 && key.mu == 0) {
                const double p = z.real();
                ms.mean_n += n * p;
                ms.mean_n2 += double(n) * n * p;
                ms.mean_m += m * p;
                ms.mean_m2 += double(m) * m * p;
                ms.cross_nm += double(n) * m * p;
            } else if (key.nu == 1 && key.mu == 0) {
                ms.a_L += std::sqrt(n + 1.0) * z;
            } else if (key.nu == 2 && key.mu == 0) {
                ms.a_L2 += std::sqrt((n + 1.0) * (n + 2.0)) * z;
            } else if (key.nu == 0 && key.mu == 1) {
                ms.a_S += std::sqrt(m + 1.0) * z;
            } else if (key.nu == 0 && key.mu == 2) {
                ms.a_S2 += std::sqrt((m + 1.0) * (m + 2.0)) * z;
            } else if (key.nu == 1 && key.mu == 1) {
                ms.a_L_a_S += std::sqrt((n + 1.0) * (m + 1.0)) * z;
            } else if (key.nu == 1 && key.mu == -1) {
                ms.a_Ldag_a_S += std::sqrt((n + 1.0) * m) * z;
            }
        }
    }
    return ms;
}

} // namespace raman
