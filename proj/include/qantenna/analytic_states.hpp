#ifndef QANTENNA_ANALYTIC_STATES_HPP
#define QANTENNA_ANALYTIC_STATES_HPP

#include <map>

#include "qantenna/state.hpp"

namespace qantenna {

/// Constant amplitude c_l on each populated sub-diagonal |j - m| = l.
struct SubdiagonalSpec {
    std::map<int, double> weights;  // offset l >= 1 -> relative amplitude
};

/// Width of the Gaussian envelope in the dark-state family.
struct DarkSpec {
    double sigma = 3.2;
};

/// Equal amplitudes on the mirrored pairs (j, N+1-j). For odd N the middle
/// emitter would have to pair with itself; that tuple is dropped and the
/// state renormalized.
ExcitationState antidiagonal_state(int n);

/// Amplitude proportional to c_l on every tuple (j+l, j).
ExcitationState subdiagonal_state(int n, const SubdiagonalSpec& spec);

/// Symmetric two-excitation state: all N(N-1)/2 tuples, equal amplitudes.
ExcitationState dicke_state(int n);

/// c_{jm} proportional to (-1)^l l^2 exp(-(l^2+q^2)/(4 sigma^2)) with
/// l = j-m and q = (j+m)-(N+1); suppresses far-field pair correlations
/// everywhere when the pitch is below half a wavelength.
ExcitationState dark_state(int n, const DarkSpec& spec = DarkSpec{});

/// Order-3 chain of nearest-neighbour triples (j+2, j+1, j), equal weights.
ExcitationState nn_triples_state(int n);

/// sin(m s / 2) / sin(s / 2), with the removable singularities at
/// s = 2 pi k evaluated by their exact limits (+-m).
double dirichlet_kernel(int m, double s);

/// Closed-form |amplitude| profiles of the analytic families, in the
/// substituted variables x_i = k_delta cos(theta_i). Peaks are evaluated by
/// analytic limit, so the values are exact there.
double envelope_antidiagonal(int n, double x_diff);
double envelope_subdiagonal(int n, int l, double x1, double x2);
double envelope_triples(int n, double x1, double x2, double x3);

}  // namespace qantenna

#endif
