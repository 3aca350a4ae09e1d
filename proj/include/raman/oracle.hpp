#ifndef RAMAN_ORACLE_HPP
#define RAMAN_ORACLE_HPP

#include "raman/fock_core.hpp"

namespace raman {

enum class Direction { stokes, antistokes };

/// Linear generator of one chain: dv_j/dtau = -decay[j] v_j + feed[j] v_{j+-1}.
/// For stokes flow the feed comes from j-1 (lower m), for antistokes from j+1.
struct ChainGenerator {
    std::vector<double> decay; // f (or g) per position, >= 0
    std::vector<double> feed;  // coupling weight into position j; feed[boundary] = 0
    Direction direction = Direction::stokes;

    static ChainGenerator make(const ChainKey& key, int m_lo, int m_hi, Direction dir);
    double max_decay() const;
};

/// min(1e-3, 0.1 / max f): stability-capped default step.
double default_step(const ChainGenerator& gen);

/// Classical fixed-step 4th-order Runge-Kutta; throws stability_error when
/// h * max f > 0.5.
std::vector<cplx> integrate_chain(const ChainGenerator& gen,
                                  const std::vector<cplx>& v0,
                                  double dtau, double h);

/// exp(dtau * G) v0 via scaling-and-squaring of the dense triangular matrix.
/// Chain length capped at 200.
std::vector<cplx> expm_chain(const ChainGenerator& gen,
                             const std::vector<cplx>& v0, double dtau);

enum class OracleMethod { rk4, expm };

/// Whole-tensor evolution, chain by chain.
/// h <= 0 picks the default step (rk4 only).
DensityTensor evolve_oracle(const DensityTensor& rho0, double dtau,
                            Direction dir = Direction::stokes,
                            OracleMethod method = OracleMethod::expm,
                            double h = 0.0);

} // namespace raman

#endif
