#pragma once

#include <iosfwd>
#include <map>
#include <vector>

#include "wsnacc/deployment.hpp"
#include "wsnacc/spatial_stats.hpp"

namespace wsnacc {

struct Cluster {
    int head = 0;              // cluster-head index (CH<head>)
    std::vector<int> members;  // normal-node indices, ascending

    /// Sensing nodes in the cluster, the head included.
    int m() const noexcept { return static_cast<int>(members.size()) + 1; }
};

/// Partition of the normal nodes among the heads. Every head is a key,
/// including heads that attracted no members.
struct ClusterAssignment {
    std::map<int, Cluster> clusters;

    friend bool operator==(const ClusterAssignment& a, const ClusterAssignment& b);
};

/// Nearest-head assignment of every normal node. Ties go to the lowest head
/// index. Throws NoHeads.
ClusterAssignment assign_clusters(const Deployment& deployment);

/// Distances consumed by the accuracy estimators. Member order follows
/// whatever order the geometry was built from.
class ClusterGeometry {
public:
    ClusterGeometry(Position tracing_point, Position head, const std::vector<Position>& members);

    /// Sensing nodes including the head.
    int m() const noexcept { return static_cast<int>(to_tracing_.size()) + 1; }
    std::size_t member_count() const noexcept { return to_tracing_.size(); }

    double tracing_to_head() const noexcept { return tracing_to_head_; }
    double tracing_to_member(std::size_t i) const { return to_tracing_.at(i); }
    double head_to_member(std::size_t i) const { return to_head_.at(i); }
    double member_to_member(std::size_t i, std::size_t j) const {
        return pairs_.at(i * to_tracing_.size() + j);
    }

private:
    double tracing_to_head_;
    std::vector<double> to_tracing_;
    std::vector<double> to_head_;
    std::vector<double> pairs_;  // row-major (member_count x member_count)
};

/// Throws UnknownNode when the head or a member is absent from the deployment.
ClusterGeometry cluster_geometry(const Cluster& cluster, const Deployment& deployment,
                                 const TracingPoint& tracing_point);

/// One row per normal node: its head, the distance to it and whether the
/// pair clears the correlation threshold. Nodes are assigned regardless.
struct MembershipDiagnostic {
    int node = 0;
    int head = 0;
    double distance = 0.0;
    double correlation = 0.0;
    bool strongly_correlated = false;
};

std::vector<MembershipDiagnostic> membership_diagnostics(const ClusterAssignment& assignment,
                                                         const Deployment& deployment,
                                                         const CorrelationParams& params);

/// CSV "head_id,member_ids" with members joined by ';'.
void write_assignment_csv(std::ostream& out, const ClusterAssignment& assignment);

}  // namespace wsnacc
