#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace wsnacc {

/// Power-exponential correlation parameters.
///
///   range       distance scale in meters, > 0
///   smoothness  decay shape, in (0, 2]
///   threshold   minimum correlation counted as "strong", in (0, 1)
class CorrelationParams {
public:
    CorrelationParams(double range, double smoothness, double threshold);

    double range() const noexcept { return range_; }
    double smoothness() const noexcept { return smoothness_; }
    double threshold() const noexcept { return threshold_; }

private:
    double range_;
    double smoothness_;
    double threshold_;
};

/// One node's readings over a time window. At least two samples.
class ReadingWindow {
public:
    explicit ReadingWindow(std::vector<double> samples);

    std::span<const double> samples() const noexcept { return samples_; }
    std::size_t size() const noexcept { return samples_.size(); }

private:
    std::vector<double> samples_;
};

struct EmpiricalStats {
    double mean_a = 0.0;
    double mean_b = 0.0;
    double variance_a = 0.0;  // unbiased, divides by n - 1
    double variance_b = 0.0;
    double covariance = 0.0;  // unbiased
    double pearson = 0.0;
};

/// Sample moments of two equal-length windows and their Pearson coefficient.
/// Throws LengthMismatch, or DegenerateWindow when either window is constant.
EmpiricalStats empirical_correlation(const ReadingWindow& a, const ReadingWindow& b);

/// exp(-(d / range)^smoothness). Equals 1 at d = 0 and decays to 0.
double kernel(double distance, const CorrelationParams& p);

/// kernel(d) >= threshold.
bool is_strongly_correlated(double distance, const CorrelationParams& p);

/// Largest distance whose kernel still reaches the threshold:
/// range * ln(1/threshold)^(1/smoothness). Natural log.
double max_cluster_radius(const CorrelationParams& p);

/// Square-packing count of clusters of radius max_cluster_radius(p) in a
/// side x side field: q^2 + (q + 1)^2 with q = floor(side / 2r).
/// Saturates at UINT64_MAX when the radius is vanishingly small.
std::uint64_t cluster_count_bound(double field_side, const CorrelationParams& p);

}  // namespace wsnacc
