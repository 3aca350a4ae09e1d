#ifndef RAMAN_FOCK_CORE_HPP
#define RAMAN_FOCK_CORE_HPP

#include <complex>
#include <compare>
#include <iosfwd>
#include <map>
#include <vector>

namespace raman {

using cplx = std::complex<double>;

constexpr double kDefaultTailTol = 1e-10;

/// Single-mode initial state. element(n, nu) returns <n|rho|n+nu>.
class ModeState {
public:
    enum class Kind { number, coherent, chaotic, coherent_chaotic, raw };

    static ModeState number(int n0);
    static ModeState coherent(cplx amplitude);
    static ModeState chaotic(double mean);
    static ModeState coherent_chaotic(cplx amplitude, double chaotic_mean);
    /// raw[nu_offset + nu] is the vector of <n|rho|n+nu> over n.
    static ModeState raw(std::vector<std::vector<cplx>> elements, int nu_offset);

    Kind kind() const { return kind_; }
    cplx element(int n, int nu) const;
    double occupation(int n) const { return element(n, 0).real(); }

    /// Smallest cutoff N with sum_{n<=N} rho_n(0) >= 1 - tail_tol.
    int auto_cutoff(double tail_tol = kDefaultTailTol) const;

    double mean_photons() const;

private:
    Kind kind_ = Kind::number;
    int n0_ = 0;
    cplx amp_{0.0, 0.0};
    double mean_ch_ = 0.0;
    std::vector<std::vector<cplx>> raw_;
    int raw_nu_offset_ = 0;
};

/// Fixed (total photon number K, pump off-diagonality nu, Stokes off-diagonality mu).
struct ChainKey {
    int K = 0;
    int nu = 0;
    int mu = 0;
    auto operator<=>(const ChainKey&) const = default;
};

/// One coupled block of Fock matrix elements: entries indexed by the Stokes
/// number m (pump number n = K - m), contiguous from m_lo.
struct Chain {
    int m_lo = 0;
    std::vector<cplx> v;

    int m_hi() const { return m_lo + static_cast<int>(v.size()) - 1; }
};

struct MomentSet {
    double mean_n = 0.0, mean_n2 = 0.0;
    double mean_m = 0.0, mean_m2 = 0.0;
    double cross_nm = 0.0;
    cplx a_L{0.0, 0.0}, a_L2{0.0, 0.0};   // <a_L^+>, <a_L^+2>
    cplx a_S{0.0, 0.0}, a_S2{0.0, 0.0};   // <a_S^+>, <a_S^+2>
    cplx a_L_a_S{0.0, 0.0};               // <a_L^+ a_S^+>
    cplx a_Ldag_a_S{0.0, 0.0};            // <a_L^+ a_S>
    double time = 0.0;
};

/// Two-mode density matrix in conserved-chain storage.
/// An element (n, m, nu, mu) lives in chain (K=n+m, nu, mu); both the row
/// (n, m) and the column (n+nu, m+mu) index pairs stay within the K-simplex,
/// i.e. chains satisfy K <= cutoff_K and K + nu + mu <= cutoff_K.
class DensityTensor {
public:
    DensityTensor() = default;
    DensityTensor(int cutoff_K, int nu_max, int mu_max, double time = 0.0)
        : cutoff_K_(cutoff_K), nu_max_(nu_max), mu_max_(mu_max), time_(time) {}

    int cutoff_K() const { return cutoff_K_; }
    int nu_max() const { return nu_max_; }
    int mu_max() const { return mu_max_; }
    double time() const { return time_; }
    void set_time(double t) { time_ = t; }

    static bool chain_bounds(const ChainKey& key, int& m_lo, int& m_hi);
    bool stores_chain(const ChainKey& key) const;

    Chain& chain(const ChainKey& key);               // creates if absent
    const Chain* find_chain(const ChainKey& key) const;
    const std::map<ChainKey, Chain>& chains() const { return chains_; }
    std::map<ChainKey, Chain>& chains() { return chains_; }

    cplx at(int n, int m, int nu, int mu) const;
    void set(int n, int m, int nu, int mu, cplx value);

    double trace() const;
    /// max |rho(n,m,nu,mu)^* - rho(n+nu,m+mu,-nu,-mu)| over stored elements.
    double hermiticity_defect() const;

    void save(std::ostream& os) const;
    static DensityTensor load(std::istream& is);

private:
    std::map<ChainKey, Chain> chains_;
    int cutoff_K_ = 0;
    int nu_max_ = 0;
    int mu_max_ = 0;
    double time_ = 0.0;
};

/// (n, m, nu, mu) -> (n+nu, m+mu, -nu, -mu); conjugate partner index.
struct Indices {
    int n, m, nu, mu;
    auto operator<=>(const Indices&) const = default;
};
Indices hermitian_partner(int n, int m, int nu, int mu);

/// rho(tau0) = rho^L x rho^S on the chain storage.
/// Throws truncation_error when the diagonal mass inside the K-simplex is
/// below 1 - tail_tol.
DensityTensor build_product_state(const ModeState& laser, const ModeState& stokes,
                                  int cutoff_K, int nu_max = 2, int mu_max = 2,
                                  double tail_tol = kDefaultTailTol);

/// Partial trace over the pump: rho_m^S(mu) = sum_n rho_{n,m}(0,mu).
std::vector<cplx> stokes_marginal(const DensityTensor& rho, int mu);
/// Partial trace over the Stokes mode: rho_n^L(nu) = sum_m rho_{n,m}(nu,0).
std::vector<cplx> laser_marginal(const DensityTensor& rho, int nu);

MomentSet extract_moments(const DensityTensor& rho);

} // namespace raman

#endif
