#pragma once

// Reference computations used only by tests. They take a different route
// from the library code so that agreement means something.

#include <cmath>
#include <vector>

#include "wsnacc/accuracy.hpp"
#include "wsnacc/deployment.hpp"

namespace oracle {

struct Layout {
    wsnacc::Position tracing;
    wsnacc::Position head;
    std::vector<wsnacc::Position> members;
};

inline double kernel(double d, double range, double smoothness) {
    return std::exp(-std::pow(d / range, smoothness));
}

/// Distortion of the linear estimator S_hat = sum_k w_k O_k computed as the
/// quadratic form var(S) - 2 w'c + w'Cw over the full observation covariance,
/// with the raw noise variances on the diagonal (no beta identities used).
inline double distortion(const Layout& l, const wsnacc::NoiseModel& n, const wsnacc::BetaFactors& b,
                         double range, double smoothness) {
    const std::size_t k = l.members.size();
    const double m = static_cast<double>(k + 1);
    std::vector<wsnacc::Position> obs = l.members;
    obs.push_back(l.head);
    std::vector<double> w(k + 1, b.beta / m);
    w[k] = b.beta_ch / m;

    auto dist = [](const wsnacc::Position& a, const wsnacc::Position& c) {
        return std::sqrt((a.x - c.x) * (a.x - c.x) + (a.y - c.y) * (a.y - c.y));
    };
    double d = n.signal;
    for (std::size_t i = 0; i <= k; ++i) {
        d -= 2.0 * w[i] * n.signal * kernel(dist(l.tracing, obs[i]), range, smoothness);
        for (std::size_t j = 0; j <= k; ++j) {
            double c = n.signal * kernel(dist(obs[i], obs[j]), range, smoothness);
            if (i == j) c += i < k ? n.observation + n.transmission : n.head_observation;
            d += w[i] * w[j] * c;
        }
    }
    return d;
}

inline double accuracy(const Layout& l, const wsnacc::NoiseModel& n, double range, double smoothness) {
    const wsnacc::BetaFactors b{n.signal / (n.signal + n.observation + n.transmission),
                                n.signal / (n.signal + n.head_observation)};
    return 1.0 - distortion(l, n, b, range, smoothness) / n.signal;
}

/// Nearest head by exhaustive scan, ties to the lowest index.
inline int nearest_head(const wsnacc::Position& p, const std::vector<wsnacc::Node>& heads) {
    int best = -1;
    double best_d2 = 0.0;
    for (const auto& h : heads) {
        const double dx = p.x - h.position.x;
        const double dy = p.y - h.position.y;
        const double d2 = dx * dx + dy * dy;
        if (best < 0 || d2 < best_d2 || (d2 == best_d2 && h.id.index < best)) {
            best = h.id.index;
            best_d2 = d2;
        }
    }
    return best;
}

}  // namespace oracle
