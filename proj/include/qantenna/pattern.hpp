#ifndef QANTENNA_PATTERN_HPP
#define QANTENNA_PATTERN_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qantenna/geometry.hpp"
#include "qantenna/state.hpp"

namespace qantenna {

/// Thrown when an exact-oracle request exceeds the combinatorial size guard.
struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Real non-negative correlation values over a detector grid; a matrix for
/// two detectors, a rank-3 tensor for three. Symmetric under detector
/// exchange by construction.
class PatternGrid {
public:
    PatternGrid(AngularGrid grid, int order, std::vector<double> values);

    int order() const { return order_; }
    const AngularGrid& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }

    double at(int i, int j) const { return values_[i * grid_.size() + j]; }
    double at(int i, int j, int k) const {
        return values_[(i * grid_.size() + j) * grid_.size() + k];
    }
    double max_value() const;

private:
    AngularGrid grid_;
    int order_ = 2;
    std::vector<double> values_;
};

/// Symmetrized coefficient matrix C of an order-2 state: C_jm = C_mj = c_jm
/// for stored tuples j > m, zero diagonal. The pair amplitude is then
/// u(theta1)^T C u(theta2) with u the steering vectors.
Eigen::MatrixXcd coefficient_matrix(const ExcitationState& s);

/// Two-detector emission amplitude; |amplitude|^2 is the correlation value.
Cplx amplitude2(const AntennaGeometry& g, const ExcitationState& s, double theta1,
                double theta2);
Cplx amplitude2_cos(const AntennaGeometry& g, const ExcitationState& s, double c1, double c2);

/// Three-detector emission amplitude, fully symmetrized over detectors.
Cplx amplitude3(const AntennaGeometry& g, const ExcitationState& s, double theta1,
                double theta2, double theta3);
Cplx amplitude3_cos(const AntennaGeometry& g, const ExcitationState& s, double c1, double c2,
                    double c3);

/// Correlation pattern of |amplitude|^2 over all grid cells, via the
/// steering-matrix fast path. Optionally rescaled to unit peak.
PatternGrid pattern(const AntennaGeometry& g, const ExcitationState& s, const AngularGrid& grid,
                    bool normalize = false);

/// Independent oracle: literal lowering-operator evaluation in the full
/// 2^N basis. Guarded to N <= 12.
PatternGrid brute_force_pattern(const AntennaGeometry& g, const ExcitationState& s,
                                const AngularGrid& grid, bool normalize = false);

/// Single oracle value for detector angles (one per excitation).
double brute_force_value(const AntennaGeometry& g, const ExcitationState& s,
                         const std::vector<double>& thetas);

/// Trapezoidal integral of the pair pattern over the substituted variables
/// x_i = k_delta cos(theta_i) on [-k_delta, k_delta]^2, with `resolution`
/// subintervals per axis. Requires an equispaced geometry.
double pattern_integral(const AntennaGeometry& g, const ExcitationState& s, int resolution);

/// Joint phase factor of one excitation pair spread over two perpendicular
/// arms, for photon directions k1_dir and k2_dir (unit vectors).
Cplx crossed_array_phase(const CrossedArrayGeometry& g, const Vec3& k1_dir, const Vec3& k2_dir);

/// Delimited table "theta1,theta2[,theta3],p", rows in lexicographic angle
/// order, every value in scientific notation with 12 significant digits.
void write_pattern(const PatternGrid& p, const std::string& path);

}  // namespace qantenna

#endif
