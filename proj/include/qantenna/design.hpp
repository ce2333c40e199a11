#ifndef QANTENNA_DESIGN_HPP
#define QANTENNA_DESIGN_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qantenna/geometry.hpp"
#include "qantenna/state.hpp"

namespace qantenna {

/// Hermitian positive-semidefinite form over the pair-tuple basis
/// (dimension N(N-1)/2), plus a note on how it was built.
struct PairBasisForm {
    Eigen::MatrixXcd matrix;
    std::string description;

    int dim() const { return static_cast<int>(matrix.rows()); }
};

/// Flat index of the tuple (j, m), j > m, in the canonical pair ordering
/// (2,1), (3,1), (3,2), (4,1), ...
int pair_index(int j, int m);
int pair_basis_dim(int n);

/// Order-2 state as a coefficient vector over the canonical pair basis.
Eigen::VectorXcd state_to_pair_vector(const ExcitationState& s);

/// Unit-norm coefficient vector back to a state; the global phase is fixed
/// by making the largest-magnitude entry real positive.
ExcitationState pair_vector_to_state(const Eigen::VectorXcd& v, int n);

/// Measurement vector phi of the detector pair (theta1, theta2): the pair
/// amplitude is the inner product <phi, c> = phi^dag c, so the rank-1
/// measurement form is Pi = phi phi^dag.
Eigen::VectorXcd pi_vector(const AntennaGeometry& g, double theta1, double theta2);

/// Rank-1 measurement form of one detector arrangement.
PairBasisForm pi_form(const AntennaGeometry& g, double theta1, double theta2);

/// Visibility form C_V: the sum of Pi over all unordered grid pairs
/// (theta_i, theta_j), i <= j. Its expectation is the total coincidence
/// yield over the grid.
PairBasisForm visibility_matrix(const AntennaGeometry& g, const AngularGrid& grid);

/// Extreme eigenvalues of a form; every state's probability lies inside.
std::pair<double, double> probability_range(const PairBasisForm& form);

/// Boundary of the joint numerical range of two Hermitian forms, sampled
/// with `sweep` supporting directions: points (v^dag A v, v^dag B v) for the
/// top eigenvector v of cos(phi) A + sin(phi) B.
std::vector<std::array<double, 2>> feasibility_boundary(const PairBasisForm& a,
                                                        const PairBasisForm& b, int sweep);

struct Target {
    double theta1 = 0.0;
    double theta2 = 0.0;
    double p0 = 0.0;
    double weight = 1.0;
};

enum class DesignMode { co_directional, contra_directional, custom };

/// Weighted design instance: minimize
///   w_v <C_V> + sum_t w_t (<Pi_t> - p0_t)^2
/// over unit-norm pair states.
struct DesignProblem {
    AntennaGeometry geometry;
    AngularGrid grid;
    double visibility_weight = 1.0;
    std::vector<Target> targets;
    DesignMode mode = DesignMode::custom;
};

/// Diagonal targets (theta_i, theta_i) over the grid, one shared level p0
/// (default 2N, the level the mirrored-pair family holds along the whole
/// diagonal) and total target weight spread uniformly.
DesignProblem co_directional_problem(const AntennaGeometry& g, const AngularGrid& grid,
                                     double p0 = -1.0, double visibility_weight = 1.0,
                                     double total_target_weight = 10.0);

/// Same with mirrored targets (theta_i, pi - theta_i).
DesignProblem contra_directional_problem(const AntennaGeometry& g, const AngularGrid& grid,
                                         double p0 = -1.0, double visibility_weight = 1.0,
                                         double total_target_weight = 10.0);

struct OptimizeOptions {
    enum class Field { automatic, real, complex_valued };
    int restarts = 8;
    int max_iterations = 2000;
    double tolerance = 1e-8;
    Field field = Field::automatic;
    std::uint64_t seed = 1;
};

struct RestartReport {
    int restart = 0;
    int iterations = 0;
    double objective = 0.0;
    double gradient_norm = 0.0;
    bool converged = false;
};

struct OptimizeResult {
    ExcitationState state;
    double objective = 0.0;
    std::vector<RestartReport> restarts;
};

/// Projected gradient descent on the unit sphere with analytic gradient and
/// Armijo backtracking; restarts run independently and the best final value
/// wins (ties broken by restart index). Non-convergence is reported in the
/// restart table, never thrown.
OptimizeResult optimize(const DesignProblem& problem, const OptimizeOptions& options);

/// Exact solution of the unconstrained dark-state problem: the eigenvector
/// of C_V with the smallest eigenvalue.
ExcitationState dark_optimize(const AntennaGeometry& g, const AngularGrid& grid);

struct DirectivityResult {
    ExcitationState state;
    double ratio = 0.0;
};

/// Maximizes <Pi(theta1, theta2)> / <C_V> as the top generalized eigenvector
/// of the pencil (Pi, C_V); C_V gets a tiny ridge when singular.
DirectivityResult directivity_optimize(const AntennaGeometry& g, const AngularGrid& grid,
                                       double theta1, double theta2);

/// Diagnostics table "restart,iterations,objective,gradient_norm,converged".
void write_diagnostics(const std::vector<RestartReport>& reports, const std::string& path);

}  // namespace qantenna

#endif
