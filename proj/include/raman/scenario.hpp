#ifndef RAMAN_SCENARIO_HPP
#define RAMAN_SCENARIO_HPP

#include "raman/fock_core.hpp"

#include <string>
#include <vector>

namespace raman {

/// Serializable single-mode state description.
struct ModeStateSpec {
    std::string kind = "number"; // number|coherent|chaotic|coherent_chaotic|vacuum
    int n0 = 0;
    cplx amplitude{0.0, 0.0};
    double mean = 0.0;

    ModeState build() const;
};

struct TauGrid {
    double start = 0.0;
    double stop = 1.0;
    int steps = 41;

    std::vector<double> points() const;
};

struct Cutoffs {
    int K = 25;
    int nu_max = 2;
    int mu_max = 2;
    double tail_tol = 1e-10;
};

struct ExistenceSet {
    std::string label;
    double kappa_S = 0.0, kappa_A = 0.0, delta_omega = 0.0, n_V = 0.0;
};

struct Scenario {
    std::string name;
    std::string description;
    std::string kind = "evolution"; // evolution | existence
    std::string mode = "stokes";    // stokes | antistokes
    ModeStateSpec laser;
    ModeStateSpec scattered;
    std::vector<std::string> methods;     // exact oracle short_time parametric no_depletion
    std::vector<std::string> observables; // see kObservables
    TauGrid tau_grid;
    Cutoffs cutoffs;
    // q_function_grid controls
    int qgrid_points = 11;
    double qgrid_halfwidth = 3.0;
    // existence sweep controls
    std::vector<ExistenceSet> existence_sets;
    double existence_kdt_max = 3.0;
    int existence_t_steps = 61;
    int existence_s_steps = 41;

    std::string to_json() const;
    static Scenario from_json_text(const std::string& text); // throws schema_error
};

extern const std::vector<std::string> kObservables;
extern const std::vector<std::string> kMethods;

/// Built-in scenario catalogue (figure reproductions + the existence sweep).
std::vector<Scenario> builtin_scenarios();
Scenario builtin_scenario(const std::string& name);

/// Throws schema_error on any invalid field; returns warnings (e.g. low K).
std::vector<std::string> validate_scenario(const Scenario& sc);

struct RunResult {
    std::vector<std::string> files;
    std::vector<std::string> warnings;
};

RunResult run_scenario(const Scenario& sc, const std::string& out_dir, int threads);

} // namespace raman

#endif
