#include "qantenna/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace qantenna {

AntennaGeometry::AntennaGeometry(std::vector<double> positions)
    : positions_(std::move(positions)) {
    if (positions_.size() < 2) {
        throw std::invalid_argument("AntennaGeometry: need at least 2 emitters");
    }
    for (std::size_t j = 1; j < positions_.size(); ++j) {
        if (!(positions_[j] > positions_[j - 1])) {
            throw std::invalid_argument("AntennaGeometry: positions must be strictly increasing");
        }
    }
}

AntennaGeometry AntennaGeometry::equispaced(int n, double k_delta) {
    if (n < 2) {
        throw std::invalid_argument("equispaced: n must be >= 2");
    }
    if (!(k_delta > 0.0)) {
        throw std::invalid_argument("equispaced: k_delta must be positive");
    }
    std::vector<double> pos(n);
    for (int j = 0; j < n; ++j) {
        pos[j] = k_delta * (j + 1);
    }
    return AntennaGeometry(std::move(pos));
}

AntennaGeometry AntennaGeometry::compound(int n_per_arm, double k_delta, double u) {
    if (n_per_arm < 1) {
        throw std::invalid_argument("compound: n_per_arm must be >= 1");
    }
    if (!(k_delta > 0.0)) {
        throw std::invalid_argument("compound: k_delta must be positive");
    }
    if (!(u >= 1.0)) {
        throw std::invalid_argument("compound: pitch ratio u must be >= 1");
    }
    std::vector<double> pos;
    pos.reserve(2 * n_per_arm);
    for (int j = 1; j <= n_per_arm; ++j) {
        pos.push_back(u * k_delta * j);
    }
    const double arm_end = u * k_delta * n_per_arm;
    for (int j = 1; j <= n_per_arm; ++j) {
        pos.push_back(arm_end + k_delta * j);
    }
    return AntennaGeometry(std::move(pos));
}

bool AntennaGeometry::is_equispaced(double rel_tol) const {
    const double gap = positions_[1] - positions_[0];
    for (std::size_t j = 2; j < positions_.size(); ++j) {
        if (std::abs((positions_[j] - positions_[j - 1]) - gap) > rel_tol * gap) {
            return false;
        }
    }
    return true;
}

double AntennaGeometry::pitch() const {
    if (!is_equispaced()) {
        throw std::invalid_argument("pitch: geometry is not equispaced");
    }
    return positions_[1] - positions_[0];
}

AngularGrid::AngularGrid(std::vector<double> thetas) : thetas_(std::move(thetas)) {
    if (thetas_.empty()) {
        throw std::invalid_argument("AngularGrid: empty grid");
    }
    const double pi = std::acos(-1.0);
    for (std::size_t i = 0; i < thetas_.size(); ++i) {
        if (thetas_[i] < 0.0 || thetas_[i] > pi) {
            throw std::invalid_argument("AngularGrid: angles must lie in [0, pi]");
        }
        if (i > 0 && !(thetas_[i] > thetas_[i - 1])) {
            throw std::invalid_argument("AngularGrid: angles must be strictly increasing");
        }
    }
    cosines_.resize(thetas_.size());
    for (std::size_t i = 0; i < thetas_.size(); ++i) {
        cosines_[i] = std::cos(thetas_[i]);
    }
}

AngularGrid AngularGrid::uniform(int count) {
    if (count < 2) {
        throw std::invalid_argument("AngularGrid::uniform: count must be >= 2");
    }
    const double pi = std::acos(-1.0);
    std::vector<double> thetas(count);
    for (int i = 0; i < count; ++i) {
        thetas[i] = pi * i / (count - 1);
    }
    return AngularGrid(std::move(thetas));
}

namespace {

// Unit direction of a collinear point set; undefined (zero) for one point.
Vec3 arm_axis(const std::vector<Vec3>& arm) {
    if (arm.size() < 2) {
        return {0.0, 0.0, 0.0};
    }
    Vec3 d{arm.back()[0] - arm.front()[0], arm.back()[1] - arm.front()[1],
           arm.back()[2] - arm.front()[2]};
    const double len = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
    if (len == 0.0) {
        throw std::invalid_argument("CrossedArrayGeometry: degenerate arm");
    }
    return {d[0] / len, d[1] / len, d[2] / len};
}

}  // namespace

CrossedArrayGeometry::CrossedArrayGeometry(std::vector<Vec3> arm_a, std::vector<Vec3> arm_b)
    : arm_a_(std::move(arm_a)), arm_b_(std::move(arm_b)) {
    if (arm_a_.empty() || arm_b_.empty()) {
        throw std::invalid_argument("CrossedArrayGeometry: arms must be non-empty");
    }
    const Vec3 ax_a = arm_axis(arm_a_);
    const Vec3 ax_b = arm_axis(arm_b_);
    if (arm_a_.size() > 1 && arm_b_.size() > 1) {
        const double dot = ax_a[0] * ax_b[0] + ax_a[1] * ax_b[1] + ax_a[2] * ax_b[2];
        if (std::abs(dot) >= 1e-12) {
            throw std::invalid_argument("CrossedArrayGeometry: arm axes must be orthogonal");
        }
    }
}

std::vector<Cplx> steering_vector(const AntennaGeometry& g, double theta) {
    const double pi = std::acos(-1.0);
    if (theta < 0.0 || theta > pi) {
        throw std::invalid_argument("steering_vector: theta must lie in [0, pi]");
    }
    return steering_vector_cos(g, std::cos(theta));
}

std::vector<Cplx> steering_vector_cos(const AntennaGeometry& g, double cos_theta) {
    std::vector<Cplx> u(g.size());
    for (int j = 0; j < g.size(); ++j) {
        u[j] = std::polar(1.0, -g.positions()[j] * cos_theta);
    }
    return u;
}

}  // namespace qantenna
