#include "wsnacc/accuracy.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <cmath>
#include <string>
#include <thread>

#include "wsnacc/error.hpp"

namespace wsnacc {

void NoiseModel::validate() const {
    if (!(signal > 0.0)) throw Error(ErrorCode::InvalidArgument, "signal variance must be positive");
    if (!(power > 0.0)) throw Error(ErrorCode::InvalidArgument, "power constraint must be positive");
    if (!(observation >= 0.0) || !(transmission >= 0.0) || !(head_observation >= 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "noise variances must be nonnegative");
    }
}

double NoiseModel::alpha() const {
    return std::sqrt(power / (signal + observation + transmission));
}

NoiseModel NoiseModel::default_profile() {
    return {1.0, 0.06, 0.06, 0.06, 1.0};
}

NoiseModel NoiseModel::noiseless() {
    return {1.0, 0.0, 0.0, 0.0, 1.0};
}

BetaFactors beta_factors(const NoiseModel& noise) {
    noise.validate();
    return {noise.signal / (noise.signal + noise.observation + noise.transmission),
            noise.signal / (noise.signal + noise.head_observation)};
}

CovarianceFactor factor_correlation(const std::vector<double>& corr, std::size_t n) {
    if (corr.size() != n * n) throw Error(ErrorCode::InvalidArgument, "correlation matrix size mismatch");
    Eigen::MatrixXd a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = corr[i * n + j];
    }
    CovarianceFactor out;
    out.n = n;
    Eigen::LLT<Eigen::MatrixXd> llt(a);
    if (llt.info() != Eigen::Success) {
        a.diagonal().array() += 1e-10;
        llt.compute(a);
        if (llt.info() != Eigen::Success) {
            throw Error(ErrorCode::NotPositiveDefinite, "kernel matrix is not positive definite even after jitter");
        }
        out.jittered = true;
    }
    const Eigen::MatrixXd l = llt.matrixL();
    out.lower.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) out.lower[i * n + j] = l(i, j);
    }
    return out;
}

namespace {

// Distance between sampled variables: 0 = tracing point, 1..k = members,
// k + 1 = head.
double variable_distance(const ClusterGeometry& g, std::size_t a, std::size_t b) {
    if (a == b) return 0.0;
    if (a > b) std::swap(a, b);
    const std::size_t head = g.member_count() + 1;
    if (a == 0) return b == head ? g.tracing_to_head() : g.tracing_to_member(b - 1);
    if (b == head) return g.head_to_member(a - 1);
    return g.member_to_member(a - 1, b - 1);
}

}  // namespace

JointSampler::JointSampler(const ClusterGeometry& geometry, const NoiseModel& noise, const CorrelationParams& params)
    : members_(geometry.member_count()), noise_(noise), alpha_(0.0) {
    noise_.validate();
    alpha_ = noise_.alpha();

    const std::size_t vars = members_ + 2;
    std::vector<std::size_t> representative;  // variable index of each latent group
    group_.resize(vars);
    for (std::size_t k = 0; k < vars; ++k) {
        std::size_t g = representative.size();
        for (std::size_t r = 0; r < representative.size(); ++r) {
            if (variable_distance(geometry, k, representative[r]) == 0.0) {
                g = r;
                break;
            }
        }
        if (g == representative.size()) representative.push_back(k);
        group_[k] = g;
    }

    const std::size_t n = representative.size();
    std::vector<double> corr(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            corr[i * n + j] = kernel(variable_distance(geometry, representative[i], representative[j]), params);
        }
    }
    factor_ = factor_correlation(corr, n);
}

ReadingSample JointSampler::draw(Rng& rng) const {
    const std::size_t n = factor_.n;
    std::vector<double> z(n);
    for (auto& v : z) v = rng.normal();
    std::vector<double> latent(n, 0.0);
    const double sd = std::sqrt(noise_.signal);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j <= i; ++j) acc += factor_.lower[i * n + j] * z[j];
        latent[i] = sd * acc;
    }

    ReadingSample s;
    s.s = latent[group_[0]];
    s.s_ch = latent[group_[members_ + 1]];
    s.s_i.resize(members_);
    s.n_i.resize(members_);
    s.n_ti.resize(members_);
    s.x_i.resize(members_);
    s.y_i.resize(members_);
    s.z_i.resize(members_);
    const double sd_obs = std::sqrt(noise_.observation);
    const double sd_tx = std::sqrt(noise_.transmission);
    for (std::size_t i = 0; i < members_; ++i) {
        s.s_i[i] = latent[group_[i + 1]];
        s.n_i[i] = sd_obs * rng.normal();
        s.n_ti[i] = sd_tx * rng.normal();
        s.x_i[i] = s.s_i[i] + s.n_i[i];
        s.y_i[i] = s.x_i[i] + s.n_ti[i];
        s.z_i[i] = alpha_ * s.y_i[i];
    }
    s.n_ch = std::sqrt(noise_.head_observation) * rng.normal();
    s.x_ch = s.s_ch + s.n_ch;
    return s;
}

ReadingSample simulate_reading(const ClusterGeometry& geometry, const NoiseModel& noise,
                               const CorrelationParams& params, Rng& rng) {
    return JointSampler(geometry, noise, params).draw(rng);
}

EstimateSet estimate(const ReadingSample& sample, const BetaFactors& betas) {
    EstimateSet e;
    e.s_hat_i.reserve(sample.y_i.size());
    double sum = 0.0;
    for (double y : sample.y_i) {
        e.s_hat_i.push_back(betas.beta * y);
        sum += e.s_hat_i.back();
    }
    e.s_hat_ch = betas.beta_ch * sample.x_ch;
    e.s_hat = (sum + e.s_hat_ch) / static_cast<double>(sample.y_i.size() + 1);
    return e;
}

std::string_view to_string(AccuracyMethod method) noexcept {
    return method == AccuracyMethod::ClosedForm ? "closed_form" : "monte_carlo";
}

AccuracyReport closed_form_accuracy(const ClusterGeometry& geometry, const BetaFactors& betas,
                                    const CorrelationParams& params, double signal_variance) {
    if (!(signal_variance > 0.0)) throw Error(ErrorCode::InvalidArgument, "signal variance must be positive");
    const std::size_t k = geometry.member_count();
    const double m = static_cast<double>(k + 1);
    const double b = betas.beta;
    const double bch = betas.beta_ch;

    double to_tracing = 0.0;
    double to_head = 0.0;
    double pairs = 0.0;  // ordered pairs i != j
    for (std::size_t i = 0; i < k; ++i) {
        to_tracing += kernel(geometry.tracing_to_member(i), params);
        to_head += kernel(geometry.head_to_member(i), params);
        for (std::size_t j = 0; j < i; ++j) pairs += 2.0 * kernel(geometry.member_to_member(i, j), params);
    }

    const double cross = (2.0 / m) * (b * to_tracing + bch * kernel(geometry.tracing_to_head(), params));
    const double second = (b * b * pairs + static_cast<double>(k) * b + 2.0 * b * bch * to_head + bch) / (m * m);

    AccuracyReport r;
    r.m = static_cast<int>(k + 1);
    r.method = AccuracyMethod::ClosedForm;
    r.distortion = signal_variance * (1.0 - (cross - second));
    r.d_a = 1.0 - r.distortion / signal_variance;
    return r;
}

namespace {

// Welford accumulator, merged with Chan's formula.
struct Moments {
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        count += 1.0;
        const double d = x - mean;
        mean += d / count;
        m2 += d * (x - mean);
    }

    void merge(const Moments& o) {
        if (o.count == 0.0) return;
        const double total = count + o.count;
        const double d = o.mean - mean;
        mean += d * o.count / total;
        m2 += o.m2 + d * d * count * o.count / total;
        count = total;
    }
};

}  // namespace

AccuracyReport monte_carlo_accuracy(const ClusterGeometry& geometry, const BetaFactors& betas,
                                    const NoiseModel& noise, const CorrelationParams& params,
                                    std::size_t samples, std::uint64_t seed, unsigned workers) {
    if (samples < 100) throw Error(ErrorCode::InvalidArgument, "monte carlo needs at least 100 samples");
    if (workers == 0) throw Error(ErrorCode::InvalidArgument, "worker count must be positive");
    const JointSampler sampler(geometry, noise, params);

    std::vector<Moments> parts(workers);
    auto run = [&](unsigned w) {
        const std::size_t quota = samples / workers + (w < samples % workers ? 1 : 0);
        Rng rng(seed, w);
        Moments& acc = parts[w];
        for (std::size_t i = 0; i < quota; ++i) {
            const ReadingSample s = sampler.draw(rng);
            const double err = s.s - estimate(s, betas).s_hat;
            acc.add(err * err);
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }

    Moments total;
    for (const auto& p : parts) total.merge(p);

    AccuracyReport r;
    r.m = geometry.m();
    r.method = AccuracyMethod::MonteCarlo;
    r.distortion = total.mean;
    r.d_a = 1.0 - r.distortion / noise.signal;
    r.mc_samples = samples;
    r.mc_workers = workers;
    r.mc_std_error = std::sqrt(total.m2 / (total.count - 1.0) / total.count) / noise.signal;
    return r;
}

std::vector<AccuracyReport> accuracy_for_assignment(const ClusterAssignment& assignment,
                                                    const Deployment& deployment, const BetaFactors& betas,
                                                    const CorrelationParams& params,
                                                    const std::optional<MonteCarloOptions>& monte_carlo,
                                                    double signal_variance) {
    std::vector<AccuracyReport> reports;
    reports.reserve(assignment.clusters.size());
    for (const auto& [head_id, cluster] : assignment.clusters) {
        const TracingPoint* tp = deployment.find_tracing_point(head_id);
        if (tp == nullptr) {
            throw Error(ErrorCode::MissingTracingPoint, "no tracing point for CH" + std::to_string(head_id));
        }
        const ClusterGeometry geometry = cluster_geometry(cluster, deployment, *tp);
        AccuracyReport r =
            monte_carlo ? monte_carlo_accuracy(geometry, betas, monte_carlo->noise, params, monte_carlo->samples,
                                               derive_seed(monte_carlo->seed, static_cast<std::uint64_t>(head_id)),
                                               monte_carlo->workers)
                        : closed_form_accuracy(geometry, betas, params, signal_variance);
        r.head_id = head_id;
        reports.push_back(r);
    }
    return reports;
}

}  // namespace wsnacc
