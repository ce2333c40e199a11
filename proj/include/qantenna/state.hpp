#ifndef QANTENNA_STATE_HPP
#define QANTENNA_STATE_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qantenna {

using Cplx = std::complex<double>;

/// Sparse pure state of 2 or 3 excitations over N two-level emitters.
///
/// Basis states are index tuples stored strictly decreasing (j > m, or
/// j > m > n), one canonical representative per unordered set; the
/// detector-exchange symmetrization happens at pattern evaluation, not in
/// storage. The amplitudes always sum to unit probability.
class ExcitationState {
public:
    using Tuple = std::vector<int>;
    using TermMap = std::map<Tuple, Cplx>;

    /// Terms must already be normalized to 1 within 1e-12.
    ExcitationState(int n, int order, TermMap terms);

    /// Drops zero amplitudes and rescales to unit norm.
    static ExcitationState normalized(int n, int order, TermMap terms);

    int size() const { return n_; }
    int order() const { return order_; }
    const TermMap& terms() const { return terms_; }

    /// Amplitude of a tuple (indices in any order); zero when absent.
    Cplx amplitude(Tuple indices) const;

    double norm_sq() const;

    /// Sum of |c|^2 over anti-diagonal tuples (j, N+1-j); the structural
    /// measure used to recognize co-directional designs.
    double antidiagonal_mass() const;

    /// |<a|b>|^2 for states over the same basis.
    static double overlap_sq(const ExcitationState& a, const ExcitationState& b);

private:
    int n_ = 0;
    int order_ = 0;
    TermMap terms_;
};

/// Haar-like random state: independent standard Gaussian amplitudes on every
/// tuple (real pairs when complex_amplitudes is false), then normalized.
ExcitationState random_state(int n, int order, std::uint64_t seed,
                             bool complex_amplitudes = true);

/// Text document with top-level keys "N", "order" and "terms", each term a
/// record [j, m, (n,) re, im] with strictly decreasing indices.
void save_state(const ExcitationState& state, const std::string& path);

/// Rejects corrupt documents; norm deviations below 1e-6 are renormalized.
ExcitationState load_state(const std::string& path);

}  // namespace qantenna

#endif
