#include "raman/exact_solver.hpp"
#include "raman/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

namespace raman {

std::int64_t stokes_decay_x2(int n, int m, int nu, int mu, int x) {
    const std::int64_t nn = n + x, mm = m - x;
    return nn * (mm + 1) + (nn + nu) * (mm + mu + 1);
}

std::int64_t antistokes_decay_x2(int n, int m, int nu, int mu, int x) {
    const std::int64_t mm = m + x, nn = n - x;
    return mm * (nn + 1) + (mm + mu) * (nn + nu + 1);
}

int split_lambda(int n, int m, int nu, int mu) {
    // floor of (m-n+1)/2 + (mu-nu)/4 without float round-off
    const int num = 2 * (m - n + 1) + (mu - nu);
    return num >= 0 ? num / 4 : -((-num + 3) / 4);
}

ChainSpectrum target_spectrum(int n, int m, int nu, int mu, int l_max, Direction dir) {
    ChainSpectrum sp;
    sp.l_max = l_max;
    sp.pole_x2.reserve(static_cast<size_t>(l_max) + 1);
    for (int x = 0; x <= l_max; ++x)
        sp.pole_x2.push_back(dir == Direction::stokes
                                 ? stokes_decay_x2(n, m, nu, mu, x)
                                 : antistokes_decay_x2(n, m, nu, mu, x));
    std::vector<std::int64_t> sorted = sp.pole_x2;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size();) {
        size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        sp.multiplicity.push_back(static_cast<int>(j - i));
        i = j;
    }
    return sp;
}

// ------------------------------------------------------------- closed form

namespace {

struct RawGroup {
    std::int64_t x2;
    int mult;
};

// Group a pole window by exact integer value. Multiplicity above 2 cannot
// happen (the rate is a strictly concave parabola over integer offsets).
void group_window(const std::int64_t* x2, int count, std::vector<RawGroup>& out,
                  std::vector<std::int64_t>& scratch) {
    scratch.assign(x2, x2 + count);
    std::sort(scratch.begin(), scratch.end());
    out.clear();
    for (int i = 0; i < count;) {
        int j = i;
        while (j < count && scratch[j] == scratch[i]) ++j;
        if (j - i > 2)
            throw std::logic_error("chain kernel: pole multiplicity above 2");
        out.push_back(RawGroup{scratch[i], j - i});
        i = j;
    }
}

} // namespace

ChainClosedForm::ChainClosedForm(const ChainKey& key, const Chain& initial,
                                 Direction dir) {
    m_lo_ = initial.m_lo;
    flipped_ = (dir == Direction::antistokes);
    const int len = static_cast<int>(initial.v.size());
    per_target_.resize(static_cast<size_t>(len));
    if (len == 0) return;

    // Position i runs along the probability flow (source side at i = 0).
    // Stokes chains flow toward larger m, anti-Stokes toward smaller m.
    const int m_hi = initial.m_lo + len - 1;
    auto m_of = [&](int i) { return flipped_ ? m_hi - i : m_lo_ + i; };

    std::vector<std::int64_t> rate_x2(static_cast<size_t>(len));
    std::vector<double> cum_logw(static_cast<size_t>(len), 0.0);
    for (int i = 0; i < len; ++i) {
        const int m = m_of(i);
        const int n = key.K - m;
        rate_x2[i] = (dir == Direction::stokes)
                         ? stokes_decay_x2(n, m, key.nu, key.mu, 0)
                         : antistokes_decay_x2(n, m, key.nu, key.mu, 0);
        if (i > 0) {
            double w2;
            if (dir == Direction::stokes) {
                // feed (n+1, m-1) -> (n, m)
                w2 = double(n + 1) * (n + key.nu + 1) * m * (m + key.mu);
            } else {
                // feed (n-1, m+1) -> (n, m)
                w2 = double(n) * (n + key.nu) * (m + 1) * (m + key.mu + 1);
            }
            cum_logw[i] = cum_logw[i - 1] + 0.5 * std::log(w2);
        }
    }

    std::vector<RawGroup> groups;
    std::vector<std::int64_t> scratch;

    for (int j = 0; j < len; ++j) {
        // accumulate pole coefficients for target j keyed by exact rate
        std::map<std::int64_t, Pole> acc;
        for (int l = 0; l <= j; ++l) {
            const int src_m = m_of(j - l);
            const cplx src = initial.v[static_cast<size_t>(src_m - m_lo_)];
            if (src == cplx{0.0, 0.0}) continue;
            const double W = cum_logw[j] - cum_logw[j - l];
            group_window(&rate_x2[j - l], l + 1, groups, scratch);
            for (const RawGroup& g : groups) {
                double sum_log = 0.0;
                int sign = 1;
                double S = 0.0; // sum of m_r / (phi_r - phi_q), multiplicity-2 case
                for (const RawGroup& r : groups) {
                    if (r.x2 == g.x2) continue;
                    const double d = 0.5 * double(r.x2 - g.x2);
                    sum_log += r.mult * std::log(std::abs(d));
                    if (d < 0.0 && (r.mult & 1)) sign = -sign;
                    S += r.mult / d;
                }
                const double expo = W - sum_log;
                if (expo > 700.0)
                    throw precision_error("chain kernel: residue overflow; use the oracle");
                const double mag = std::exp(expo);
                Pole& p = acc[g.x2];
                p.phi = 0.5 * double(g.x2);
                if (g.mult == 1) {
                    const cplx contrib = (sign > 0 ? mag : -mag) * src;
                    p.a += contrib;
                    p.amax = std::max(p.amax, std::abs(contrib));
                } else {
                    const cplx bc = (sign > 0 ? mag : -mag) * src;
                    p.b += bc;
                    p.bmax = std::max(p.bmax, std::abs(bc));
                    const cplx ac = -S * bc;
                    p.a += ac;
                    p.amax = std::max(p.amax, std::abs(ac));
                }
            }
        }
        auto& tgt = per_target_[static_cast<size_t>(j)];
        tgt.reserve(acc.size());
        for (auto& [x2, p] : acc) tgt.push_back(p);
    }
}

std::vector<cplx> ChainClosedForm::eval(double dtau, double* max_cond) const {
    const int len = static_cast<int>(per_target_.size());
    std::vector<cplx> out(static_cast<size_t>(len), cplx{0.0, 0.0});
    const int m_hi = m_lo_ + len - 1;
    for (int j = 0; j < len; ++j) {
        cplx sum{0.0, 0.0};
        cplx comp{0.0, 0.0}; // Neumaier compensation
        double biggest = 0.0;
        for (const Pole& p : per_target_[static_cast<size_t>(j)]) {
            const double damp = std::exp(-p.phi * dtau);
            if (damp == 0.0) continue;
            const cplx term = (p.a + p.b * dtau) * damp;
            biggest = std::max(biggest, std::max(p.amax, p.bmax * dtau) * damp);
            const cplx t = sum + term;
            if (std::abs(sum.real()) >= std::abs(term.real()))
                comp += cplx{(sum.real() - t.real()) + term.real(), 0.0};
            else
                comp += cplx{(term.real() - t.real()) + sum.real(), 0.0};
            if (std::abs(sum.imag()) >= std::abs(term.imag()))
                comp += cplx{0.0, (sum.imag() - t.imag()) + term.imag()};
            else
                comp += cplx{0.0, (term.imag() - t.imag()) + sum.imag()};
            sum = t;
        }
        sum += comp;
        const int m = flipped_ ? m_hi - j : m_lo_ + j;
        out[static_cast<size_t>(m - m_lo_)] = sum;
        if (max_cond) {
            const double denom = std::max(std::abs(sum), 1e-300);
            if (biggest > 0.0) *max_cond = std::max(*max_cond, biggest / denom);
        }
    }
    return out;
}

std::vector<cplx> ChainClosedForm::steady() const {
    const int len = static_cast<int>(per_target_.size());
    std::vector<cplx> out(static_cast<size_t>(len), cplx{0.0, 0.0});
    const int m_hi = m_lo_ + len - 1;
    for (int j = 0; j < len; ++j) {
        cplx sum{0.0, 0.0};
        for (const Pole& p : per_target_[static_cast<size_t>(j)])
            if (p.phi == 0.0) sum += p.a;
        const int m = flipped_ ? m_hi - j : m_lo_ + j;
        out[static_cast<size_t>(m - m_lo_)] = sum;
    }
    return out;
}

// --------------------------------------------------------------- evolution

namespace {

template <typename PerChain>
void run_over_chains(const DensityTensor& rho0, int threads, PerChain&& fn) {
    std::vector<const std::pair<const ChainKey, Chain>*> items;
    items.reserve(rho0.chains().size());
    for (const auto& kv : rho0.chains()) items.push_back(&kv);
    const int nw = std::max(1, threads);
    if (nw == 1 || items.size() < 2) {
        for (size_t i = 0; i < items.size(); ++i) fn(i, *items[i]);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic_size_t next{0};
    for (int w = 0; w < nw; ++w)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1))
                fn(i, *items[i]);
        });
    for (auto& t : pool) t.join();
}

DensityTensor evolve_impl(const DensityTensor& rho0, double dtau, Direction dir,
                          int threads, EvolveReport* report) {
    if (dtau < 0.0) throw std::domain_error("evolve: dtau must be >= 0");
    DensityTensor out(rho0.cutoff_K(), rho0.nu_max(), rho0.mu_max(),
                      rho0.time() + dtau);
    // pre-create output chains so workers touch disjoint storage
    std::vector<Chain*> slots;
    slots.reserve(rho0.chains().size());
    for (const auto& [key, c] : rho0.chains()) {
        Chain nc;
        nc.m_lo = c.m_lo;
        nc.v.resize(c.v.size());
        slots.push_back(&out.chains().emplace(key, std::move(nc)).first->second);
    }
    std::vector<double> conds(rho0.chains().size(), 0.0);
    run_over_chains(rho0, threads, [&](size_t i, const auto& kv) {
        ChainClosedForm cf(kv.first, kv.second, dir);
        slots[i]->v = cf.eval(dtau, &conds[i]);
    });
    if (report) {
        size_t i = 0;
        for (const auto& [key, c] : rho0.chains()) {
            if (conds[i] > report->max_condition) {
                report->max_condition = conds[i];
                report->worst = Indices{key.K - c.m_lo, c.m_lo, key.nu, key.mu};
            }
            if (conds[i] > 1e12) ++report->flagged;
            ++i;
        }
    }
    return out;
}

} // namespace

DensityTensor evolve_stokes(const DensityTensor& rho0, double dtau, int threads,
                            EvolveReport* report) {
    return evolve_impl(rho0, dtau, Direction::stokes, threads, report);
}

DensityTensor evolve_antistokes(const DensityTensor& rho0, double dtau, int threads,
                                EvolveReport* report) {
    return evolve_impl(rho0, dtau, Direction::antistokes, threads, report);
}

std::vector<DensityTensor> evolve_grid(const DensityTensor& rho0,
                                       const std::vector<double>& dtaus,
                                       Direction dir, int threads,
                                       EvolveReport* report) {
    for (double d : dtaus)
        if (d < 0.0) throw std::domain_error("evolve_grid: dtau must be >= 0");
    std::vector<DensityTensor> out;
    out.reserve(dtaus.size());
    for (double d : dtaus)
        out.emplace_back(rho0.cutoff_K(), rho0.nu_max(), rho0.mu_max(),
                         rho0.time() + d);
    std::vector<std::vector<Chain*>> slots(dtaus.size());
    for (size_t t = 0; t < dtaus.size(); ++t) {
        slots[t].reserve(rho0.chains().size());
        for (const auto& [key, c] : rho0.chains()) {
            Chain nc;
            nc.m_lo = c.m_lo;
            nc.v.resize(c.v.size());
            slots[t].push_back(&out[t].chains().emplace(key, std::move(nc)).first->second);
        }
    }
    std::vector<double> conds(rho0.chains().size(), 0.0);
    run_over_chains(rho0, threads, [&](size_t i, const auto& kv) {
        ChainClosedForm cf(kv.first, kv.second, dir);
        for (size_t t = 0; t < dtaus.size(); ++t)
            slots[t][i]->v = cf.eval(dtaus[t], &conds[i]);
    });
    if (report)
        for (double c : conds) {
            report->max_condition = std::max(report->max_condition, c);
            if (c > 1e12) ++report->flagged;
        }
    return out;
}

DensityTensor steady_state(const DensityTensor& rho0) {
    DensityTensor out(rho0.cutoff_K(), rho0.nu_max(), rho0.mu_max(),
                      std::numeric_limits<double>::infinity());
    for (const auto& [key, c] : rho0.chains()) {
        ChainClosedForm cf(key, c, Direction::stokes);
        Chain nc;
        nc.m_lo = c.m_lo;
        nc.v = cf.steady();
        bool any = false;
        for (const cplx& z : nc.v) any = any || (z != cplx{0.0, 0.0});
        if (any) out.chains().emplace(key, std::move(nc));
    }
    return out;
}

std::vector<cplx> propagate_chain_simple_poles(const ChainKey& key,
                                               const Chain& initial,
                                               double dtau, Direction dir) {
    const int len = static_cast<int>(initial.v.size());
    std::vector<cplx> out(static_cast<size_t>(len), cplx{0.0, 0.0});
    if (len == 0) return out;
    const int m_hi = initial.m_lo + len - 1;
    const bool flipped = (dir == Direction::antistokes);
    auto m_of = [&](int i) { return flipped ? m_hi - i : initial.m_lo + i; };

    std::vector<double> rate(static_cast<size_t>(len));
    std::vector<std::int64_t> rate_x2(static_cast<size_t>(len));
    std::vector<double> cum_logw(static_cast<size_t>(len), 0.0);
    for (int i = 0; i < len; ++i) {
        const int m = m_of(i);
        const int n = key.K - m;
        rate_x2[i] = (dir == Direction::stokes)
                         ? stokes_decay_x2(n, m, key.nu, key.mu, 0)
                         : antistokes_decay_x2(n, m, key.nu, key.mu, 0);
        rate[i] = 0.5 * double(rate_x2[i]);
        if (i > 0) {
            const double w2 =
                (dir == Direction::stokes)
                    ? double(n + 1) * (n + key.nu + 1) * m * (m + key.mu)
                    : double(n) * (n + key.nu) * (m + 1) * (m + key.mu + 1);
            cum_logw[i] = cum_logw[i - 1] + 0.5 * std::log(w2);
        }
    }
    for (int j = 0; j < len; ++j) {
        cplx sum{0.0, 0.0};
        for (int l = 0; l <= j; ++l) {
            const int src_m = m_of(j - l);
            const cplx src = initial.v[static_cast<size_t>(src_m - initial.m_lo)];
            if (src == cplx{0.0, 0.0}) continue;
            // sum over q of e^{-f(q) t} / prod_{p != q} (f(p) - f(q))
            double kernel = 0.0;
            for (int q = j - l; q <= j; ++q) {
                double denom_log = 0.0;
                int sign = 1;
                for (int p = j - l; p <= j; ++p) {
                    if (p == q) continue;
                    if (rate_x2[p] == rate_x2[q])
                        throw std::logic_error(
                            "propagate_chain_simple_poles: repeated decay rate");
                    const double d = rate[p] - rate[q];
                    denom_log += std::log(std::abs(d));
                    if (d < 0.0) sign = -sign;
                }
                const double expo = cum_logw[j] - cum_logw[j - l] - denom_log
                                    - rate[q] * dtau;
                kernel += (sign > 0 ? 1.0 : -1.0) * std::exp(expo);
            }
            sum += kernel * src;
        }
        const int m = m_of(j);
        out[static_cast<size_t>(m - initial.m_lo)] = sum;
    }
    return out;
}

DensityTensor mixture_expand(const std::vector<double>& laser_weights,
                             const std::vector<double>& stokes_weights,
                             double dtau, Direction dir) {
    if (laser_weights.empty() || stokes_weights.empty())
        throw std::invalid_argument("mixture_expand: empty weight vector");
    const int nL = static_cast<int>(laser_weights.size()) - 1;
    const int nS = static_cast<int>(stokes_weights.size()) - 1;
    const int cutoff = nL + nS;
    DensityTensor out(cutoff, 0, 0, dtau);
    for (int n0 = 0; n0 <= nL; ++n0) {
        for (int m0 = 0; m0 <= nS; ++m0) {
            const double w = laser_weights[n0] * stokes_weights[m0];
            if (w == 0.0) continue;
            const ChainKey key{n0 + m0, 0, 0};
            Chain init;
            init.m_lo = 0;
            init.v.assign(static_cast<size_t>(key.K) + 1, cplx{0.0, 0.0});
            init.v[static_cast<size_t>(m0)] = cplx{1.0, 0.0};
            ChainClosedForm cf(key, init, dir);
            const std::vector<cplx> evolved = cf.eval(dtau);
            Chain& dst = out.chain(key);
            for (size_t i = 0; i < evolved.size(); ++i) dst.v[i] += w * evolved[i];
        }
    }
    return out;
}

} // namespace raman
