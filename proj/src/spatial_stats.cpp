#include "wsnacc/spatial_stats.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "wsnacc/error.hpp"

namespace wsnacc {

CorrelationParams::CorrelationParams(double range, double smoothness, double threshold)
    : range_(range), smoothness_(smoothness), threshold_(threshold) {
    if (!(range > 0.0) || !std::isfinite(range)) {
        throw Error(ErrorCode::InvalidArgument, "range must be positive, got " + std::to_string(range));
    }
    if (!(smoothness > 0.0 && smoothness <= 2.0)) {
        throw Error(ErrorCode::InvalidArgument,
                    "smoothness must lie in (0, 2], got " + std::to_string(smoothness));
    }
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw Error(ErrorCode::InvalidArgument,
                    "threshold must lie in (0, 1), got " + std::to_string(threshold));
    }
}

ReadingWindow::ReadingWindow(std::vector<double> samples) : samples_(std::move(samples)) {
    if (samples_.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "a reading window needs at least two samples");
    }
}

namespace {

double mean_of(std::span<const double> xs) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

}  // namespace

EmpiricalStats empirical_correlation(const ReadingWindow& a, const ReadingWindow& b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::LengthMismatch, "windows have " + std::to_string(a.size()) + " and " +
                                                   std::to_string(b.size()) + " samples");
    }
    const auto xs = a.samples();
    const auto ys = b.samples();
    const double n1 = static_cast<double>(xs.size() - 1);

    EmpiricalStats st;
    st.mean_a = mean_of(xs);
    st.mean_b = mean_of(ys);

    double sxx = 0.0;
    double syy = 0.0;
    double sxy = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const double dx = xs[k] - st.mean_a;
        const double dy = ys[k] - st.mean_b;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw Error(ErrorCode::DegenerateWindow, "correlation is undefined for a constant window");
    }
    st.variance_a = sxx / n1;
    st.variance_b = syy / n1;
    st.covariance = sxy / n1;
    // Computed from the raw sums so that swapping a and b is bit-identical.
    st.pearson = sxy / std::sqrt(sxx * syy);
    return st;
}

double kernel(double distance, const CorrelationParams& p) {
    const double u = distance / p.range();
    // Fast paths for the two common shapes.
    if (p.smoothness() == 1.0) return std::exp(-u);
    if (p.smoothness() == 2.0) return std::exp(-u * u);
    return std::exp(-std::pow(u, p.smoothness()));
}

bool is_strongly_correlated(double distance, const CorrelationParams& p) {
    return kernel(distance, p) >= p.threshold();
}

double max_cluster_radius(const CorrelationParams& p) {
    return p.range() * std::pow(std::log(1.0 / p.threshold()), 1.0 / p.smoothness());
}

std::uint64_t cluster_count_bound(double field_side, const CorrelationParams& p) {
    if (!(field_side > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "field side must be positive");
    }
    const double q = std::floor(field_side / (2.0 * max_cluster_radius(p)));
    // (q + 1)^2 + q^2 must fit in 64 bits.
    if (!(q < 2.0e9)) return std::numeric_limits<std::uint64_t>::max();
    const auto n = static_cast<std::uint64_t>(q);
    return n * n + (n + 1) * (n + 1);
}

}  // namespace wsnacc
