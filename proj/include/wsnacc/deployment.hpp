#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace wsnacc {

class FieldSpec {
public:
    FieldSpec(double width, double height);

    double width() const noexcept { return width_; }
    double height() const noexcept { return height_; }

private:
    double width_;
    double height_;
};

struct Position {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Position&, const Position&) = default;
};

double distance(const Position& a, const Position& b);
bool contains(const FieldSpec& field, const Position& p);

enum class NodeKind { ClusterHead, Normal };

/// Heads and normal nodes are numbered independently (CH1..CHk and 1..n),
/// so an id is only unique together with its kind.
struct NodeId {
    NodeKind kind = NodeKind::Normal;
    int index = 0;

    std::string label() const;  // "CH3" or "17"

    friend bool operator==(const NodeId&, const NodeId&) = default;
    friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

struct Node {
    NodeId id;
    Position position;
};

struct TracingPoint {
    int id = 0;  // matches the index of the cluster head that senses it
    Position position;
};

struct Deployment {
    FieldSpec field{1.0, 1.0};
    std::vector<Node> heads;
    std::vector<Node> normals;
    std::vector<TracingPoint> tracing_points;
    std::uint64_t seed = 0;

    const Node* find(const NodeId& id) const;
    const TracingPoint* find_tracing_point(int id) const;
};

/// rows x cols heads at cell centers, labelled CH1.. in row-major order.
std::vector<Node> deploy_grid_heads(const FieldSpec& field, int rows, int cols);

/// `count` normal nodes uniform over the field, labelled 1..count.
/// `stream` selects an independent substream of `seed`.
std::vector<Node> deploy_random_normals(const FieldSpec& field, int count, std::uint64_t seed,
                                        std::uint64_t stream = 0);

struct Placement {
    NodeKind kind = NodeKind::Normal;
    Position position;
};

struct PlacedNodes {
    std::vector<Node> heads;
    std::vector<Node> normals;
};

/// Hand-placed nodes; each kind is numbered from 1 in list order.
/// Throws OutOfField.
PlacedNodes place_nodes(const FieldSpec& field, const std::vector<Placement>& placements);

/// One tracing point per head, uniform inside that head's grid cell.
struct RandomPerCell {
    int rows = 1;
    int cols = 1;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

/// Caller-supplied tracing points, numbered from 1.
struct ExplicitPoints {
    std::vector<Position> positions;
};

using TracingMode = std::variant<RandomPerCell, ExplicitPoints>;

std::vector<TracingPoint> assign_tracing_points(const Deployment& deployment, const TracingMode& mode);

/// Line-oriented text form:
///
///   field,<width>,<height>
///   seed,<seed>
///   H,<id>,<x>,<y>     one per cluster head
///   N,<id>,<x>,<y>     one per normal node
///   T,<id>,<x>,<y>     one per tracing point
///
/// Lines starting with '#' are comments. Reals carry 6 decimals.
void write_deployment(std::ostream& out, const Deployment& deployment);
Deployment read_deployment(std::istream& in);

}  // namespace wsnacc
