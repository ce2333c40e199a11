#include "qantenna/analytic_states.hpp"

#include <cmath>
#include <stdexcept>

namespace qantenna {

ExcitationState antidiagonal_state(int n) {
    if (n < 2) {
        throw std::invalid_argument("antidiagonal_state: need N >= 2");
    }
    ExcitationState::TermMap terms;
    for (int j = n; 2 * j > n + 1; --j) {
        terms[{j, n + 1 - j}] = Cplx(1.0, 0.0);
    }
    return ExcitationState::normalized(n, 2, std::move(terms));
}

ExcitationState subdiagonal_state(int n, const SubdiagonalSpec& spec) {
    if (n < 2) {
        throw std::invalid_argument("subdiagonal_state: need N >= 2");
    }
    if (spec.weights.empty()) {
        throw std::invalid_argument("subdiagonal_state: no sub-diagonal weights");
    }
    ExcitationState::TermMap terms;
    for (const auto& [l, c] : spec.weights) {
        if (l < 1 || l > n - 1) {
            throw std::invalid_argument("subdiagonal_state: offset out of range [1, N-1]");
        }
        for (int j = 1; j + l <= n; ++j) {
            terms[{j + l, j}] += Cplx(c, 0.0);
        }
    }
    return ExcitationState::normalized(n, 2, std::move(terms));
}

ExcitationState dicke_state(int n) {
    if (n < 2) {
        throw std::invalid_argument("dicke_state: need N >= 2");
    }
    ExcitationState::TermMap terms;
    for (int j = 2; j <= n; ++j) {
        for (int m = 1; m < j; ++m) {
            terms[{j, m}] = Cplx(1.0, 0.0);
        }
    }
    return ExcitationState::normalized(n, 2, std::move(terms));
}

ExcitationState dark_state(int n, const DarkSpec& spec) {
    if (n < 2) {
        throw std::invalid_argument("dark_state: need N >= 2");
    }
    if (!(spec.sigma > 0.0)) {
        throw std::invalid_argument("dark_state: sigma must be positive");
    }
    const double four_sigma_sq = 4.0 * spec.sigma * spec.sigma;
    ExcitationState::TermMap terms;
    for (int j = 2; j <= n; ++j) {
        for (int m = 1; m < j; ++m) {
            const int l = j - m;
            const int q = (j + m) - (n + 1);
            const double sign = (l % 2 == 0) ? 1.0 : -1.0;
            const double amp =
                sign * l * l * std::exp(-(static_cast<double>(l) * l + static_cast<double>(q) * q) / four_sigma_sq);
            terms[{j, m}] = Cplx(amp, 0.0);
        }
    }
    return ExcitationState::normalized(n, 2, std::move(terms));
}

ExcitationState nn_triples_state(int n) {
    if (n < 3) {
        throw std::invalid_argument("nn_triples_state: need N >= 3");
    }
    ExcitationState::TermMap terms;
    for (int j = 1; j + 2 <= n; ++j) {
        terms[{j + 2, j + 1, j}] = Cplx(1.0, 0.0);
    }
    return ExcitationState::normalized(n, 3, std::move(terms));
}

double dirichlet_kernel(int m, double s) {
    const double pi = std::acos(-1.0);
    const double t = s / 2.0;
    // Reduce to the principal interval; sin is well conditioned near 0, so
    // the ratio stays accurate arbitrarily close to the peaks.
    const double eps = std::remainder(t, pi);
    const double k = std::round((t - eps) / pi);
    const bool k_odd = std::fmod(std::abs(k), 2.0) >= 0.5;
    // sin(m(k pi + eps)) = cos(m k pi) sin(m eps) for integer m, k.
    double parity = 1.0;
    if (k_odd) {
        parity = (m % 2 == 0) ? 1.0 : -1.0;  // cos(m k pi)
        parity *= -1.0;                      // 1 / cos(k pi)
    }
    if (eps == 0.0) {
        return parity * m;
    }
    return parity * std::sin(m * eps) / std::sin(eps);
}

double envelope_antidiagonal(int n, double x_diff) {
    if (n < 2) {
        throw std::invalid_argument("envelope_antidiagonal: need N >= 2");
    }
    return std::abs(dirichlet_kernel(n, x_diff)) / std::sqrt(static_cast<double>(n));
}

double envelope_subdiagonal(int n, int l, double x1, double x2) {
    if (n < 2 || l < 1 || l > n - 1) {
        throw std::invalid_argument("envelope_subdiagonal: invalid N or offset");
    }
    const int m = n - l;
    return 2.0 * std::abs(std::cos(0.5 * l * (x1 - x2))) * std::abs(dirichlet_kernel(m, x1 + x2)) /
           std::sqrt(static_cast<double>(m));
}

double envelope_triples(int n, double x1, double x2, double x3) {
    if (n < 3) {
        throw std::invalid_argument("envelope_triples: need N >= 3");
    }
    const int m = n - 2;
    const double pair_sum =
        std::cos(x1 - x2) + std::cos(x1 - x3) + std::cos(x2 - x3);
    return 2.0 * std::abs(dirichlet_kernel(m, x1 + x2 + x3)) * std::abs(pair_sum) /
           std::sqrt(static_cast<double>(m));
}

}  // namespace qantenna
