#include "wsnacc/clustering.hpp"

#include <algorithm>
#include <ostream>

#include "wsnacc/error.hpp"

namespace wsnacc {

bool operator==(const ClusterAssignment& a, const ClusterAssignment& b) {
    return std::equal(a.clusters.begin(), a.clusters.end(), b.clusters.begin(), b.clusters.end(),
                      [](const auto& x, const auto& y) {
                          return x.first == y.first && x.second.head == y.second.head &&
                                 x.second.members == y.second.members;
                      });
}

ClusterAssignment assign_clusters(const Deployment& deployment) {
    if (deployment.heads.empty()) {
        throw Error(ErrorCode::NoHeads, "deployment has no cluster heads");
    }
    ClusterAssignment out;
    for (const auto& h : deployment.heads) {
        out.clusters[h.id.index] = Cluster{h.id.index, {}};
    }
    for (const auto& v : deployment.normals) {
        const Node* best = nullptr;
        double best_d = 0.0;
        for (const auto& u : deployment.heads) {
            const double d = distance(v.position, u.position);
            if (best == nullptr || d < best_d || (d == best_d && u.id.index < best->id.index)) {
                best = &u;
                best_d = d;
            }
        }
        out.clusters[best->id.index].members.push_back(v.id.index);
    }
    for (auto& [_, c] : out.clusters) std::sort(c.members.begin(), c.members.end());
    return out;
}

ClusterGeometry::ClusterGeometry(Position tracing_point, Position head, const std::vector<Position>& members)
    : tracing_to_head_(distance(tracing_point, head)) {
    const std::size_t n = members.size();
    to_tracing_.reserve(n);
    to_head_.reserve(n);
    pairs_.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        to_tracing_.push_back(distance(tracing_point, members[i]));
        to_head_.push_back(distance(head, members[i]));
        for (std::size_t j = 0; j < i; ++j) {
            const double d = distance(members[i], members[j]);
            pairs_[i * n + j] = d;
            pairs_[j * n + i] = d;
        }
    }
}

ClusterGeometry cluster_geometry(const Cluster& cluster, const Deployment& deployment,
                                 const TracingPoint& tracing_point) {
    const Node* head = deployment.find({NodeKind::ClusterHead, cluster.head});
    if (head == nullptr) {
        throw Error(ErrorCode::UnknownNode, "head CH" + std::to_string(cluster.head) + " not in deployment");
    }
    std::vector<Position> members;
    members.reserve(cluster.members.size());
    for (int id : cluster.members) {
        const Node* n = deployment.find({NodeKind::Normal, id});
        if (n == nullptr) {
            throw Error(ErrorCode::UnknownNode, "node " + std::to_string(id) + " not in deployment");
        }
        members.push_back(n->position);
    }
    return ClusterGeometry(tracing_point.position, head->position, members);
}

std::vector<MembershipDiagnostic> membership_diagnostics(const ClusterAssignment& assignment,
                                                         const Deployment& deployment,
                                                         const CorrelationParams& params) {
    std::vector<MembershipDiagnostic> rows;
    for (const auto& [head_id, cluster] : assignment.clusters) {
        const Node* head = deployment.find({NodeKind::ClusterHead, head_id});
        if (head == nullptr) throw Error(ErrorCode::UnknownNode, "head CH" + std::to_string(head_id));
        for (int id : cluster.members) {
            const Node* n = deployment.find({NodeKind::Normal, id});
            if (n == nullptr) throw Error(ErrorCode::UnknownNode, "node " + std::to_string(id));
            const double d = distance(n->position, head->position);
            rows.push_back({id, head_id, d, kernel(d, params), is_strongly_correlated(d, params)});
        }
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.node < b.node; });
    return rows;
}

void write_assignment_csv(std::ostream& out, const ClusterAssignment& assignment) {
    out << "head_id,member_ids\n";
    for (const auto& [head_id, cluster] : assignment.clusters) {
        out << "CH" << head_id << ',';
        for (std::size_t i = 0; i < cluster.members.size(); ++i) {
            if (i > 0) out << ';';
            out << cluster.members[i];
        }
        out << '\n';
    }
}

}  // namespace wsnacc
