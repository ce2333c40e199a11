#include "qantenna/pattern.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>

namespace qantenna {

PatternGrid::PatternGrid(AngularGrid grid, int order, std::vector<double> values)
    : grid_(std::move(grid)), order_(order), values_(std::move(values)) {
    if (order_ != 2 && order_ != 3) {
        throw std::invalid_argument("PatternGrid: order must be 2 or 3");
    }
    std::size_t expected = static_cast<std::size_t>(grid_.size()) * grid_.size();
    if (order_ == 3) {
        expected *= grid_.size();
    }
    if (values_.size() != expected) {
        throw std::invalid_argument("PatternGrid: value count does not match grid");
    }
    for (double v : values_) {
        if (v < 0.0 || !std::isfinite(v)) {
            throw std::invalid_argument("PatternGrid: values must be finite and non-negative");
        }
    }
}

double PatternGrid::max_value() const {
    double m = 0.0;
    for (double v : values_) {
        m = std::max(m, v);
    }
    return m;
}

Eigen::MatrixXcd coefficient_matrix(const ExcitationState& s) {
    if (s.order() != 2) {
        throw std::invalid_argument("coefficient_matrix: order-2 state required");
    }
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(s.size(), s.size());
    for (const auto& [tuple, amp] : s.terms()) {
        c(tuple[0] - 1, tuple[1] - 1) = amp;
        c(tuple[1] - 1, tuple[0] - 1) = amp;
    }
    return c;
}

Cplx amplitude2_cos(const AntennaGeometry& g, const ExcitationState& s, double c1, double c2) {
    if (s.order() != 2) {
        throw std::invalid_argument("amplitude2: order-2 state required");
    }
    if (s.size() != g.size()) {
        throw std::invalid_argument("amplitude2: state and geometry sizes differ");
    }
    const std::vector<Cplx> u1 = steering_vector_cos(g, c1);
    const std::vector<Cplx> u2 = steering_vector_cos(g, c2);
    Cplx total(0.0, 0.0);
    for (const auto& [tuple, amp] : s.terms()) {
        const int j = tuple[0] - 1;
        const int m = tuple[1] - 1;
        total += amp * (u1[j] * u2[m] + u1[m] * u2[j]);
    }
    return total;
}

Cplx amplitude2(const AntennaGeometry& g, const ExcitationState& s, double theta1,
                double theta2) {
    const double pi = std::acos(-1.0);
    if (theta1 < 0.0 || theta1 > pi || theta2 < 0.0 || theta2 > pi) {
        throw std::invalid_argument("amplitude2: angles must lie in [0, pi]");
    }
    return amplitude2_cos(g, s, std::cos(theta1), std::cos(theta2));
}

Cplx amplitude3_cos(const AntennaGeometry& g, const ExcitationState& s, double c1, double c2,
                    double c3) {
    if (s.order() != 3) {
        throw std::invalid_argument("amplitude3: order-3 state required");
    }
    if (s.size() != g.size()) {
        throw std::invalid_argument("amplitude3: state and geometry sizes differ");
    }
    const std::vector<Cplx> u1 = steering_vector_cos(g, c1);
    const std::vector<Cplx> u2 = steering_vector_cos(g, c2);
    const std::vector<Cplx> u3 = steering_vector_cos(g, c3);
    Cplx total(0.0, 0.0);
    for (const auto& [tuple, amp] : s.terms()) {
        const int j = tuple[0] - 1;
        const int m = tuple[1] - 1;
        const int n = tuple[2] - 1;
        Cplx sym = u1[j] * u2[m] * u3[n] + u1[j] * u2[n] * u3[m] + u1[m] * u2[j] * u3[n] +
                   u1[m] * u2[n] * u3[j] + u1[n] * u2[j] * u3[m] + u1[n] * u2[m] * u3[j];
        total += amp * sym;
    }
    return total;
}

Cplx amplitude3(const AntennaGeometry& g, const ExcitationState& s, double theta1, double theta2,
                double theta3) {
    const double pi = std::acos(-1.0);
    for (double t : {theta1, theta2, theta3}) {
        if (t < 0.0 || t > pi) {
            throw std::invalid_argument("amplitude3: angles must lie in [0, pi]");
        }
    }
    return amplitude3_cos(g, s, std::cos(theta1), std::cos(theta2), std::cos(theta3));
}

namespace {

void normalize_in_place(std::vector<double>& values) {
    double peak = 0.0;
    for (double v : values) {
        peak = std::max(peak, v);
    }
    if (peak > 0.0) {
        for (double& v : values) {
            v /= peak;
        }
    }
}

Eigen::MatrixXcd steering_matrix(const AntennaGeometry& g, const std::vector<double>& cosines) {
    Eigen::MatrixXcd u(g.size(), cosines.size());
    for (std::size_t i = 0; i < cosines.size(); ++i) {
        const std::vector<Cplx> col = steering_vector_cos(g, cosines[i]);
        for (int j = 0; j < g.size(); ++j) {
            u(j, i) = col[j];
        }
    }
    return u;
}

std::vector<double> pattern2_values(const AntennaGeometry& g, const ExcitationState& s,
                                    const std::vector<double>& cosines) {
    const Eigen::MatrixXcd u = steering_matrix(g, cosines);
    const Eigen::MatrixXcd amp = u.transpose() * coefficient_matrix(s) * u;
    const int n = static_cast<int>(cosines.size());
    std::vector<double> values(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const double p = std::norm(amp(i, j));
            values[i * n + j] = p;
            values[j * n + i] = p;
        }
    }
    return values;
}

std::vector<double> pattern3_values(const AntennaGeometry& g, const ExcitationState& s,
                                    const std::vector<double>& cosines) {
    const int n = static_cast<int>(cosines.size());
    std::vector<double> values(static_cast<std::size_t>(n) * n * n);
    auto set = [&](int a, int b, int c, double p) {
        values[(static_cast<std::size_t>(a) * n + b) * n + c] = p;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            for (int k = j; k < n; ++k) {
                const double p =
                    std::norm(amplitude3_cos(g, s, cosines[i], cosines[j], cosines[k]));
                set(i, j, k, p);
                set(i, k, j, p);
                set(j, i, k, p);
                set(j, k, i, p);
                set(k, i, j, p);
                set(k, j, i, p);
            }
        }
    }
    return values;
}

}  // namespace

PatternGrid pattern(const AntennaGeometry& g, const ExcitationState& s, const AngularGrid& grid,
                    bool normalize) {
    if (s.size() != g.size()) {
        throw std::invalid_argument("pattern: state and geometry sizes differ");
    }
    std::vector<double> values = s.order() == 2 ? pattern2_values(g, s, grid.cosines())
                                                : pattern3_values(g, s, grid.cosines());
    if (normalize) {
        normalize_in_place(values);
    }
    return PatternGrid(grid, s.order(), std::move(values));
}

namespace {

// Dense 2^N representation used by the oracle, grouped by excitation count.
class LoweringOracle {
public:
    LoweringOracle(const AntennaGeometry& g, const ExcitationState& s) : geom_(g) {
        if (g.size() > 12) {
            throw SizeLimitError("brute force oracle limited to N <= 12 emitters");
        }
        if (s.size() != g.size()) {
            throw std::invalid_argument("oracle: state and geometry sizes differ");
        }
        const int n = g.size();
        for (int level = 0; level <= 3; ++level) {
            masks_by_level_.emplace_back();
        }
        level_index_.assign(std::size_t(1) << n, -1);
        for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
            const int bits = __builtin_popcount(mask);
            if (bits <= 3) {
                level_index_[mask] = static_cast<int>(masks_by_level_[bits].size());
                masks_by_level_[bits].push_back(mask);
            }
        }
        top_.assign(masks_by_level_[s.order()].size(), Cplx(0.0, 0.0));
        for (const auto& [tuple, amp] : s.terms()) {
            std::uint32_t mask = 0;
            for (int idx : tuple) {
                mask |= std::uint32_t(1) << (idx - 1);
            }
            top_[level_index_[mask]] = amp;
        }
        order_ = s.order();
    }

    // Apply the phased lowering sum for one detector to a level-k vector.
    std::vector<Cplx> lower(const std::vector<Cplx>& in, int level, double cos_theta) const {
        const std::vector<Cplx> u = steering_vector_cos(geom_, cos_theta);
        std::vector<Cplx> out(masks_by_level_[level - 1].size(), Cplx(0.0, 0.0));
        const auto& masks = masks_by_level_[level];
        for (std::size_t i = 0; i < masks.size(); ++i) {
            const Cplx a = in[i];
            if (a == Cplx(0.0, 0.0)) {
                continue;
            }
            std::uint32_t rest = masks[i];
            while (rest != 0) {
                const std::uint32_t bit = rest & (~rest + 1);
                const int j = __builtin_ctz(bit);
                out[level_index_[masks[i] ^ bit]] += u[j] * a;
                rest ^= bit;
            }
        }
        return out;
    }

    double value(const std::vector<double>& cosines) const {
        std::vector<Cplx> v = top_;
        int level = order_;
        for (double c : cosines) {
            v = lower(v, level, c);
            --level;
        }
        double total = 0.0;
        for (const Cplx& a : v) {
            total += std::norm(a);
        }
        return total;
    }

    int order() const { return order_; }
    const std::vector<Cplx>& top() const { return top_; }

private:
    const AntennaGeometry& geom_;
    int order_ = 2;
    std::vector<std::vector<std::uint32_t>> masks_by_level_;
    std::vector<int> level_index_;
    std::vector<Cplx> top_;
};

}  // namespace

double brute_force_value(const AntennaGeometry& g, const ExcitationState& s,
                         const std::vector<double>& thetas) {
    if (static_cast<int>(thetas.size()) != s.order()) {
        throw std::invalid_argument("brute_force_value: need one angle per excitation");
    }
    LoweringOracle oracle(g, s);
    std::vector<double> cosines;
    cosines.reserve(thetas.size());
    for (double t : thetas) {
        cosines.push_back(std::cos(t));
    }
    return oracle.value(cosines);
}

PatternGrid brute_force_pattern(const AntennaGeometry& g, const ExcitationState& s,
                                const AngularGrid& grid, bool normalize) {
    LoweringOracle oracle(g, s);
    const std::vector<double>& cosines = grid.cosines();
    const int n = static_cast<int>(cosines.size());
    std::vector<double> values;
    if (s.order() == 2) {
        values.assign(static_cast<std::size_t>(n) * n, 0.0);
        std::vector<std::vector<Cplx>> lowered_once(n);
        for (int i = 0; i < n; ++i) {
            lowered_once[i] = oracle.lower(oracle.top(), 2, cosines[i]);
        }
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                const std::vector<Cplx> v = oracle.lower(lowered_once[j], 1, cosines[i]);
                double p = 0.0;
                for (const Cplx& a : v) {
                    p += std::norm(a);
                }
                values[i * n + j] = p;
                values[j * n + i] = p;
            }
        }
    } else {
        values.assign(static_cast<std::size_t>(n) * n * n, 0.0);
        auto set = [&](int a, int b, int c, double p) {
            values[(static_cast<std::size_t>(a) * n + b) * n + c] = p;
        };
        std::vector<std::vector<Cplx>> lowered_once(n);
        for (int i = 0; i < n; ++i) {
            lowered_once[i] = oracle.lower(oracle.top(), 3, cosines[i]);
        }
        for (int k = 0; k < n; ++k) {
            for (int j = k; j < n; ++j) {
                const std::vector<Cplx> v2 = oracle.lower(lowered_once[k], 2, cosines[j]);
                for (int i = j; i < n; ++i) {
                    const std::vector<Cplx> v1 = oracle.lower(v2, 1, cosines[i]);
                    double p = 0.0;
                    for (const Cplx& a : v1) {
                        p += std::norm(a);
                    }
                    set(i, j, k, p);
                    set(i, k, j, p);
                    set(j, i, k, p);
                    set(j, k, i, p);
                    set(k, i, j, p);
                    set(k, j, i, p);
                }
            }
        }
    }
    if (normalize) {
        normalize_in_place(values);
    }
    return PatternGrid(grid, s.order(), std::move(values));
}

double pattern_integral(const AntennaGeometry& g, const ExcitationState& s, int resolution) {
    if (!g.is_equispaced()) {
        throw std::invalid_argument("pattern_integral: equispaced geometry required");
    }
    if (s.order() != 2) {
        throw std::invalid_argument("pattern_integral: order-2 state required");
    }
    if (resolution < 2) {
        throw std::invalid_argument("pattern_integral: resolution must be >= 2");
    }
    const double k_delta = g.pitch();
    const int points = resolution + 1;
    std::vector<double> cosines(points);
    for (int i = 0; i < points; ++i) {
        const double x = -k_delta + 2.0 * k_delta * i / resolution;
        cosines[i] = x / k_delta;
    }
    const std::vector<double> values = pattern2_values(g, s, cosines);
    const double h = 2.0 * k_delta / resolution;
    double total = 0.0;
    for (int i = 0; i < points; ++i) {
        const double wi = (i == 0 || i == points - 1) ? 0.5 : 1.0;
        for (int j = 0; j < points; ++j) {
            const double wj = (j == 0 || j == points - 1) ? 0.5 : 1.0;
            total += wi * wj * values[i * points + j];
        }
    }
    return total * h * h;
}

Cplx crossed_array_phase(const CrossedArrayGeometry& g, const Vec3& k1_dir, const Vec3& k2_dir) {
    for (const Vec3& k : {k1_dir, k2_dir}) {
        const double len = std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
        if (std::abs(len - 1.0) > 1e-9) {
            throw std::invalid_argument("crossed_array_phase: directions must be unit vectors");
        }
    }
    auto arm_sum = [](const std::vector<Vec3>& arm, const Vec3& k) {
        Cplx total(0.0, 0.0);
        for (const Vec3& x : arm) {
            total += std::polar(1.0, -(k[0] * x[0] + k[1] * x[1] + k[2] * x[2]));
        }
        return total;
    };
    // The double sum over one emitter per arm factorizes.
    return arm_sum(g.arm_a(), k1_dir) * arm_sum(g.arm_b(), k2_dir);
}

void write_pattern(const PatternGrid& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("write_pattern: cannot open " + path);
    }
    const std::vector<double>& thetas = p.grid().thetas();
    const int n = p.grid().size();
    char buf[64];
    auto fmt = [&buf](double v) {
        std::snprintf(buf, sizeof(buf), "%.11e", v);
        return std::string(buf);
    };
    if (p.order() == 2) {
        out << "theta1,theta2,p\n";
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                out << fmt(thetas[i]) << ',' << fmt(thetas[j]) << ',' << fmt(p.at(i, j)) << '\n';
            }
        }
    } else {
        out << "theta1,theta2,theta3,p\n";
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                for (int k = 0; k < n; ++k) {
                    out << fmt(thetas[i]) << ',' << fmt(thetas[j]) << ',' << fmt(thetas[k]) << ','
                        << fmt(p.at(i, j, k)) << '\n';
                }
            }
        }
    }
}

}  // namespace qantenna
