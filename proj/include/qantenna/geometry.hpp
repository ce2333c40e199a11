#ifndef QANTENNA_GEOMETRY_HPP
#define QANTENNA_GEOMETRY_HPP

#include <array>
#include <complex>
#include <vector>

namespace qantenna {

using Cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;

/// Linear chain of emitters described by dimensionless axial coordinates
/// x_j = k*R_j (radians of optical phase). Wavenumber and pitch never
/// appear separately; everything downstream depends on the products only.
class AntennaGeometry {
public:
    /// Positions must be strictly increasing, at least two emitters.
    explicit AntennaGeometry(std::vector<double> positions);

    /// Regular chain: positions k_delta * j, j = 1..n.
    static AntennaGeometry equispaced(int n, double k_delta);

    /// Two collinear regular sub-arrays sharing one axis. The first
    /// n_per_arm emitters form the large-pitch arm (pitch u * k_delta),
    /// the next n_per_arm the small-pitch arm (pitch k_delta), appended
    /// end to end. Requires u >= 1.
    static AntennaGeometry compound(int n_per_arm, double k_delta, double u);

    int size() const { return static_cast<int>(positions_.size()); }
    const std::vector<double>& positions() const { return positions_; }

    /// True when all consecutive gaps are equal within a relative tolerance.
    bool is_equispaced(double rel_tol = 1e-9) const;

    /// Common gap of an equispaced chain; throws std::invalid_argument otherwise.
    double pitch() const;

private:
    std::vector<double> positions_;
};

/// Detection angles in [0, pi] with cached cosines.
class AngularGrid {
public:
    explicit AngularGrid(std::vector<double> thetas);

    /// count uniformly spaced angles covering [0, pi] inclusive.
    static AngularGrid uniform(int count);

    int size() const { return static_cast<int>(thetas_.size()); }
    const std::vector<double>& thetas() const { return thetas_; }
    const std::vector<double>& cosines() const { return cosines_; }

private:
    std::vector<double> thetas_;
    std::vector<double> cosines_;
};

/// Two perpendicular linear arms, each a list of 3D emitter positions in
/// radians of optical phase.
class CrossedArrayGeometry {
public:
    CrossedArrayGeometry(std::vector<Vec3> arm_a, std::vector<Vec3> arm_b);

    const std::vector<Vec3>& arm_a() const { return arm_a_; }
    const std::vector<Vec3>& arm_b() const { return arm_b_; }

private:
    std::vector<Vec3> arm_a_;
    std::vector<Vec3> arm_b_;
};

/// Per-emitter detection phases u_j = exp(-i x_j cos(theta)), theta in [0, pi].
std::vector<Cplx> steering_vector(const AntennaGeometry& g, double theta);

/// Same with the direction given directly as cos(theta) in [-1, 1].
std::vector<Cplx> steering_vector_cos(const AntennaGeometry& g, double cos_theta);

}  // namespace qantenna

#endif
