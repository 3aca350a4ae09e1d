#ifndef RAMAN_EXACT_SOLVER_HPP
#define RAMAN_EXACT_SOLVER_HPP

#include "raman/fock_core.hpp"
#include "raman/oracle.hpp"

#include <cstdint>

namespace raman {

/// Twice the Stokes decay rate at offset x from target (n, m):
/// 2 f(x) = (n+x)(m-x+1) + (n+x+nu)(m-x+mu+1). Exact integer.
std::int64_t stokes_decay_x2(int n, int m, int nu, int mu, int x);

/// Anti-Stokes mirror: 2 g(x) = (m+x)(n-x+1) + (m+x+mu)(n-x+nu+1).
std::int64_t antistokes_decay_x2(int n, int m, int nu, int mu, int x);

/// floor((m-n+1)/2 + (mu-nu)/4); kept for cross-checking the split-form
/// solution. The solver itself groups poles by exact integer equality.
int split_lambda(int n, int m, int nu, int mu);

/// Pole multiset of the inverse-Laplace kernel feeding target (n, m)
/// from sources up to distance l_max along its chain.
struct ChainSpectrum {
    int l_max = 0;
    std::vector<std::int64_t> pole_x2;   // 2 f(x), x = 0..l_max
    std::vector<int> multiplicity;       // per distinct value, 1 or 2
};
ChainSpectrum target_spectrum(int n, int m, int nu, int mu, int l_max,
                              Direction dir = Direction::stokes);

/// Closed-form propagator of a single chain: residues of the partial-fraction
/// expansion are digested against the initial vector once, after which any
/// elapsed time evaluates as a short exponential sum.
class ChainClosedForm {
public:
    ChainClosedForm(const ChainKey& key, const Chain& initial, Direction dir);

    /// State after dtau; per-target condition estimate (max |term| / |result|)
    /// maximised into *max_cond when given.
    std::vector<cplx> eval(double dtau, double* max_cond = nullptr) const;

    /// tau -> infinity limit (only zero poles survive).
    std::vector<cplx> steady() const;

    int m_lo() const { return m_lo_; }

private:
    struct Pole {
        double phi = 0.0;       // decay rate
        cplx a{0.0, 0.0};       // e^{-phi t} coefficient
        cplx b{0.0, 0.0};       // t e^{-phi t} coefficient (multiplicity 2)
        double amax = 0.0;      // largest single contribution to |a|
        double bmax = 0.0;
    };
    int m_lo_ = 0;
    bool flipped_ = false;      // anti-Stokes chains run m downward
    std::vector<std::vector<Pole>> per_target_;
};

struct EvolveReport {
    double max_condition = 0.0;
    int flagged = 0;            // elements with condition > 1e12
    Indices worst{0, 0, 0, 0};
};

DensityTensor evolve_stokes(const DensityTensor& rho0, double dtau,
                            int threads = 1, EvolveReport* report = nullptr);
DensityTensor evolve_antistokes(const DensityTensor& rho0, double dtau,
                                int threads = 1, EvolveReport* report = nullptr);

/// Same initial state evaluated at several elapsed times; the per-chain
/// residue digest is built once.
std::vector<DensityTensor> evolve_grid(const DensityTensor& rho0,
                                       const std::vector<double>& dtaus,
                                       Direction dir = Direction::stokes,
                                       int threads = 1,
                                       EvolveReport* report = nullptr);

/// tau -> infinity limit of the Stokes evolution.
DensityTensor steady_state(const DensityTensor& rho0);

/// Cross-check path assuming every kernel window has distinct decay rates
/// (simple poles only); throws std::logic_error when a repeated rate shows up.
std::vector<cplx> propagate_chain_simple_poles(const ChainKey& key,
                                               const Chain& initial,
                                               double dtau, Direction dir);

/// Weighted sum of number-state evolutions (diagonal sector):
/// sum_{n0,m0} w_L[n0] w_S[m0] evolve(|n0><n0| x |m0><m0|).
DensityTensor mixture_expand(const std::vector<double>& laser_weights,
                             const std::vector<double>& stokes_weights,
                             double dtau, Direction dir = Direction::stokes);

} // namespace raman

#endif
