#include "qantenna/state.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace qantenna {

namespace {

void validate_tuple(const ExcitationState::Tuple& t, int n, int order) {
    if (static_cast<int>(t.size()) != order) {
        throw std::invalid_argument("ExcitationState: tuple size does not match order");
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 1 || t[i] > n) {
            throw std::invalid_argument("ExcitationState: index out of range [1, N]");
        }
        if (i > 0 && !(t[i - 1] > t[i])) {
            throw std::invalid_argument("ExcitationState: indices must be strictly decreasing");
        }
    }
}

}  // namespace

ExcitationState::ExcitationState(int n, int order, TermMap terms)
    : n_(n), order_(order), terms_(std::move(terms)) {
    if (order_ != 2 && order_ != 3) {
        throw std::invalid_argument("ExcitationState: order must be 2 or 3");
    }
    if (n_ < order_) {
        throw std::invalid_argument("ExcitationState: need N >= order");
    }
    if (terms_.empty()) {
        throw std::invalid_argument("ExcitationState: no terms");
    }
    for (const auto& [tuple, amp] : terms_) {
        (void)amp;
        validate_tuple(tuple, n_, order_);
    }
    if (std::abs(norm_sq() - 1.0) > 1e-12) {
        throw std::invalid_argument("ExcitationState: amplitudes are not unit-norm");
    }
}

ExcitationState ExcitationState::normalized(int n, int order, TermMap terms) {
    double total = 0.0;
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->second == Cplx(0.0, 0.0)) {
            it = terms.erase(it);
        } else {
            total += std::norm(it->second);
            ++it;
        }
    }
    if (total <= 0.0) {
        throw std::invalid_argument("ExcitationState: cannot normalize the zero state");
    }
    const double scale = 1.0 / std::sqrt(total);
    for (auto& [tuple, amp] : terms) {
        (void)tuple;
        amp *= scale;
    }
    return ExcitationState(n, order, std::move(terms));
}

Cplx ExcitationState::amplitude(Tuple indices) const {
    std::sort(indices.begin(), indices.end(), std::greater<int>());
    const auto it = terms_.find(indices);
    return it == terms_.end() ? Cplx(0.0, 0.0) : it->second;
}

double ExcitationState::norm_sq() const {
    double total = 0.0;
    for (const auto& [tuple, amp] : terms_) {
        (void)tuple;
        total += std::norm(amp);
    }
    return total;
}

double ExcitationState::antidiagonal_mass() const {
    if (order_ != 2) {
        throw std::invalid_argument("antidiagonal_mass: defined for order-2 states");
    }
    double mass = 0.0;
    for (const auto& [tuple, amp] : terms_) {
        if (tuple[0] + tuple[1] == n_ + 1) {
            mass += std::norm(amp);
        }
    }
    return mass;
}

double ExcitationState::overlap_sq(const ExcitationState& a, const ExcitationState& b) {
    if (a.n_ != b.n_ || a.order_ != b.order_) {
        throw std::invalid_argument("overlap_sq: states live on different bases");
    }
    Cplx dot(0.0, 0.0);
    for (const auto& [tuple, amp] : a.terms_) {
        const auto it = b.terms_.find(tuple);
        if (it != b.terms_.end()) {
            dot += std::conj(amp) * it->second;
        }
    }
    return std::norm(dot);
}

ExcitationState random_state(int n, int order, std::uint64_t seed, bool complex_amplitudes) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    ExcitationState::TermMap terms;
    if (order == 2) {
        for (int j = 2; j <= n; ++j) {
            for (int m = 1; m < j; ++m) {
                const double re = gauss(rng);
                const double im = complex_amplitudes ? gauss(rng) : 0.0;
                terms[{j, m}] = Cplx(re, im);
            }
        }
    } else if (order == 3) {
        for (int j = 3; j <= n; ++j) {
            for (int m = 2; m < j; ++m) {
                for (int k = 1; k < m; ++k) {
                    const double re = gauss(rng);
                    const double im = complex_amplitudes ? gauss(rng) : 0.0;
                    terms[{j, m, k}] = Cplx(re, im);
                }
            }
        }
    } else {
        throw std::invalid_argument("random_state: order must be 2 or 3");
    }
    return ExcitationState::normalized(n, order, std::move(terms));
}

void save_state(const ExcitationState& state, const std::string& path) {
    nlohmann::json doc;
    doc["N"] = state.size();
    doc["order"] = state.order();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [tuple, amp] : state.terms()) {
        nlohmann::json rec = nlohmann::json::array();
        for (int idx : tuple) {
            rec.push_back(idx);
        }
        rec.push_back(amp.real());
        rec.push_back(amp.imag());
        terms.push_back(std::move(rec));
    }
    doc["terms"] = std::move(terms);
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("save_state: cannot open " + path);
    }
    out << doc.dump(2) << "\n";
}

ExcitationState load_state(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("load_state: cannot open " + path);
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("load_state: " + path + " is not valid: " + e.what());
    }
    if (!doc.contains("N") || !doc.contains("order") || !doc.contains("terms")) {
        throw std::runtime_error("load_state: " + path + " lacks N/order/terms");
    }
    const int n = doc["N"].get<int>();
    const int order = doc["order"].get<int>();
    if (order != 2 && order != 3) {
        throw std::runtime_error("load_state: order must be 2 or 3");
    }
    ExcitationState::TermMap terms;
    for (const auto& rec : doc["terms"]) {
        if (!rec.is_array() || static_cast<int>(rec.size()) != order + 2) {
            throw std::runtime_error("load_state: malformed term record");
        }
        ExcitationState::Tuple tuple(order);
        for (int i = 0; i < order; ++i) {
            tuple[i] = rec[i].get<int>();
        }
        const double re = rec[order].get<double>();
        const double im = rec[order + 1].get<double>();
        if (terms.count(tuple)) {
            throw std::runtime_error("load_state: duplicate tuple in terms");
        }
        terms[tuple] = Cplx(re, im);
    }
    double total = 0.0;
    for (const auto& [tuple, amp] : terms) {
        (void)tuple;
        total += std::norm(amp);
    }
    if (std::abs(total - 1.0) >= 1e-6) {
        throw std::runtime_error("load_state: " + path + " norm deviates by more than 1e-6");
    }
    return ExcitationState::normalized(n, order, std::move(terms));
}

}  // namespace qantenna
