#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "wsnacc/clustering.hpp"
#include "wsnacc/random.hpp"
#include "wsnacc/spatial_stats.hpp"

namespace wsnacc {

/// Signal and noise variances of the sensing chain.
///
///   signal            variance of the phenomenon at the tracing point and at
///                     every node (one common value)
///   observation       per-node sensing noise
///   transmission      AWGN on the node-to-head link
///   head_observation  sensing noise at the cluster head
///   power             encoding power constraint of the uncoded link
struct NoiseModel {
    double signal = 1.0;
    double observation = 0.0;
    double transmission = 0.0;
    double head_observation = 0.0;
    double power = 1.0;

    /// Throws InvalidArgument on a negative variance or nonpositive signal/power.
    void validate() const;

    /// Gain of the uncoded transmission: sqrt(P / (signal + observation + transmission)).
    double alpha() const;

    /// 0.06 on every noise term, unit signal and power.
    static NoiseModel default_profile();
    static NoiseModel noiseless();
};

/// MMSE shrinkage coefficients: one shared by the non-head members and one
/// for the head.
struct BetaFactors {
    double beta = 1.0;
    double beta_ch = 1.0;
};

BetaFactors beta_factors(const NoiseModel& noise);

/// One joint draw of the phenomenon, noises and derived observations.
/// Vectors are indexed by member (head excluded).
struct ReadingSample {
    double s = 0.0;
    std::vector<double> s_i;
    double s_ch = 0.0;
    std::vector<double> n_i;
    std::vector<double> n_ti;
    double n_ch = 0.0;
    std::vector<double> x_i;  // s_i + n_i
    std::vector<double> y_i;  // x_i + n_ti
    std::vector<double> z_i;  // alpha * y_i
    double x_ch = 0.0;        // s_ch + n_ch
};

struct EstimateSet {
    std::vector<double> s_hat_i;
    double s_hat_ch = 0.0;
    double s_hat = 0.0;  // cluster average over all m nodes
};

/// Lower-triangular Cholesky factor of a correlation matrix, row-major.
struct CovarianceFactor {
    std::size_t n = 0;
    std::vector<double> lower;
    bool jittered = false;
};

/// Factors an n x n symmetric correlation matrix (row-major). On failure a
/// diagonal jitter of 1e-10 is added once; a second failure throws
/// NotPositiveDefinite.
CovarianceFactor factor_correlation(const std::vector<double>& corr, std::size_t n);

/// Draws jointly Gaussian readings for one cluster geometry. Variables at
/// coincident positions are perfectly correlated and are sampled as one.
class JointSampler {
public:
    JointSampler(const ClusterGeometry& geometry, const NoiseModel& noise, const CorrelationParams& params);

    ReadingSample draw(Rng& rng) const;

    bool jittered() const noexcept { return factor_.jittered; }

private:
    std::size_t members_;
    NoiseModel noise_;
    double alpha_;
    // Variable k (0 = tracing point, 1..members = members, members+1 = head)
    // reads latent component group_[k].
    std::vector<std::size_t> group_;
    CovarianceFactor factor_;
};

ReadingSample simulate_reading(const ClusterGeometry& geometry, const NoiseModel& noise,
                               const CorrelationParams& params, Rng& rng);

/// MMSE estimates in signal units. The transmission gain cancels in the
/// MMSE ratio, so member estimates are beta * y_i.
EstimateSet estimate(const ReadingSample& sample, const BetaFactors& betas);

enum class AccuracyMethod { ClosedForm, MonteCarlo };

std::string_view to_string(AccuracyMethod method) noexcept;

struct AccuracyReport {
    int head_id = 0;
    int m = 1;
    double distortion = 0.0;  // E[(S - S_hat)^2]
    double d_a = 1.0;         // 1 - distortion / signal variance
    AccuracyMethod method = AccuracyMethod::ClosedForm;
    std::size_t mc_samples = 0;
    double mc_std_error = 0.0;  // of d_a (and, scaled by signal variance, of distortion)
    unsigned mc_workers = 0;
};

/// Normalized accuracy from the second moments of the joint Gaussian model:
///
///   D_A = (2/m) [beta sum_i K(d_Si) + beta_ch K(d_SCH)]
///       - (1/m^2) [beta^2 sum_{i != j} K(d_ij) + (m-1) beta
///                  + 2 beta beta_ch sum_i K(d_CHi) + beta_ch]
///
/// The (m-1) beta and beta_ch terms come from the diagonal of E[S_hat^2]
/// after using beta^2 (signal + noise) = beta signal. May be negative.
AccuracyReport closed_form_accuracy(const ClusterGeometry& geometry, const BetaFactors& betas,
                                    const CorrelationParams& params, double signal_variance = 1.0);

/// Sample mean of (S - S_hat)^2 over `samples` draws with its standard error.
/// Work is split across `workers` threads, worker w drawing from stream w of
/// `seed`; the result depends on (seed, workers) only.
AccuracyReport monte_carlo_accuracy(const ClusterGeometry& geometry, const BetaFactors& betas,
                                    const NoiseModel& noise, const CorrelationParams& params,
                                    std::size_t samples, std::uint64_t seed, unsigned workers = 1);

struct MonteCarloOptions {
    NoiseModel noise;
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

/// One report per cluster, ordered by head index. Tracing point k belongs to
/// head CHk. With Monte-Carlo options the estimator is sampled, cluster CHk
/// using derive_seed(seed, k). Throws MissingTracingPoint.
std::vector<AccuracyReport> accuracy_for_assignment(const ClusterAssignment& assignment,
                                                    const Deployment& deployment, const BetaFactors& betas,
                                                    const CorrelationParams& params,
                                                    const std::optional<MonteCarloOptions>& monte_carlo = {},
                                                    double signal_variance = 1.0);

/// Parameter echo written alongside reports.
struct RunEcho {
    CorrelationParams params{1.0, 1.0, 0.5};
    NoiseModel noise;
    std::uint64_t seed = 0;
};

/// head_id,m,method,d_a,distortion,std_err,samples
void write_reports_csv(std::ostream& out, const std::vector<AccuracyReport>& reports);
void write_reports_json(std::ostream& out, const std::vector<AccuracyReport>& reports, const RunEcho& echo);

}  // namespace wsnacc
