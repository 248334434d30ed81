#include "wsnacc/deployment.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "wsnacc/error.hpp"
#include "wsnacc/format.hpp"
#include "wsnacc/random.hpp"

namespace wsnacc {

FieldSpec::FieldSpec(double width, double height) : width_(width), height_(height) {
    if (!(width > 0.0) || !(height > 0.0) || !std::isfinite(width) || !std::isfinite(height)) {
        throw Error(ErrorCode::InvalidArgument, "field dimensions must be positive");
    }
}

double distance(const Position& a, const Position& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

bool contains(const FieldSpec& field, const Position& p) {
    return p.x >= 0.0 && p.x <= field.width() && p.y >= 0.0 && p.y <= field.height();
}

std::string NodeId::label() const {
    return (kind == NodeKind::ClusterHead ? "CH" : "") + std::to_string(index);
}

const Node* Deployment::find(const NodeId& id) const {
    const auto& pool = id.kind == NodeKind::ClusterHead ? heads : normals;
    for (const auto& n : pool) {
        if (n.id == id) return &n;
    }
    return nullptr;
}

const TracingPoint* Deployment::find_tracing_point(int id) const {
    for (const auto& t : tracing_points) {
        if (t.id == id) return &t;
    }
    return nullptr;
}

std::vector<Node> deploy_grid_heads(const FieldSpec& field, int rows, int cols) {
    if (rows < 1 || cols < 1) {
        throw Error(ErrorCode::InvalidArgument, "head grid needs at least one row and one column");
    }
    const double cell_w = field.width() / cols;
    const double cell_h = field.height() / rows;
    std::vector<Node> heads;
    heads.reserve(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            heads.push_back({{NodeKind::ClusterHead, r * cols + c + 1}, {(c + 0.5) * cell_w, (r + 0.5) * cell_h}});
        }
    }
    return heads;
}

std::vector<Node> deploy_random_normals(const FieldSpec& field, int count, std::uint64_t seed,
                                        std::uint64_t stream) {
    if (count < 0) throw Error(ErrorCode::InvalidArgument, "normal node count must be nonnegative");
    Rng rng(seed, stream);
    std::vector<Node> normals;
    normals.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double x = rng.uniform(0.0, field.width());
        const double y = rng.uniform(0.0, field.height());
        normals.push_back({{NodeKind::Normal, i + 1}, {x, y}});
    }
    return normals;
}

PlacedNodes place_nodes(const FieldSpec& field, const std::vector<Placement>& placements) {
    PlacedNodes out;
    for (const auto& pl : placements) {
        if (!contains(field, pl.position)) {
            throw Error(ErrorCode::OutOfField,
                        "(" + fixed(pl.position.x) + ", " + fixed(pl.position.y) + ") is outside the field");
        }
        auto& pool = pl.kind == NodeKind::ClusterHead ? out.heads : out.normals;
        pool.push_back({{pl.kind, static_cast<int>(pool.size()) + 1}, pl.position});
    }
    return out;
}

namespace {

std::vector<TracingPoint> random_per_cell(const Deployment& d, const RandomPerCell& mode) {
    if (mode.rows < 1 || mode.cols < 1) {
        throw Error(ErrorCode::InvalidArgument, "tracing-point grid needs at least one cell");
    }
    if (static_cast<std::size_t>(mode.rows) * mode.cols != d.heads.size()) {
        throw Error(ErrorCode::InvalidArgument, "tracing-point grid does not match the number of heads");
    }
    const double cell_w = d.field.width() / mode.cols;
    const double cell_h = d.field.height() / mode.rows;
    Rng rng(mode.seed, mode.stream);
    std::vector<TracingPoint> points;
    for (int r = 0; r < mode.rows; ++r) {
        for (int c = 0; c < mode.cols; ++c) {
            const double x = rng.uniform(c * cell_w, (c + 1) * cell_w);
            const double y = rng.uniform(r * cell_h, (r + 1) * cell_h);
            points.push_back({r * mode.cols + c + 1, {x, y}});
        }
    }
    return points;
}

std::vector<TracingPoint> explicit_points(const Deployment& d, const ExplicitPoints& mode) {
    std::vector<TracingPoint> points;
    for (const auto& p : mode.positions) {
        if (!contains(d.field, p)) {
            throw Error(ErrorCode::OutOfField,
                        "tracing point (" + fixed(p.x) + ", " + fixed(p.y) + ") is outside the field");
        }
        points.push_back({static_cast<int>(points.size()) + 1, p});
    }
    return points;
}

}  // namespace

std::vector<TracingPoint> assign_tracing_points(const Deployment& deployment, const TracingMode& mode) {
    return std::visit(
        [&](const auto& m) -> std::vector<TracingPoint> {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, RandomPerCell>) {
                return random_per_cell(deployment, m);
            } else {
                return explicit_points(deployment, m);
            }
        },
        mode);
}

void write_deployment(std::ostream& out, const Deployment& d) {
    out << "# wsnacc deployment v1\n";
    out << "field," << fixed(d.field.width()) << ',' << fixed(d.field.height()) << '\n';
    out << "seed," << d.seed << '\n';
    for (const auto& n : d.heads) {
        out << "H," << n.id.index << ',' << fixed(n.position.x) << ',' << fixed(n.position.y) << '\n';
    }
    for (const auto& n : d.normals) {
        out << "N," << n.id.index << ',' << fixed(n.position.x) << ',' << fixed(n.position.y) << '\n';
    }
    for (const auto& t : d.tracing_points) {
        out << "T," << t.id << ',' << fixed(t.position.x) << ',' << fixed(t.position.y) << '\n';
    }
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> parts;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    return parts;
}

double parse_real(const std::string& s, int line_no) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad number '" + s + "'");
}

int parse_int(const std::string& s, int line_no) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad integer '" + s + "'");
}

}  // namespace

Deployment read_deployment(std::istream& in) {
    std::optional<FieldSpec> field;
    Deployment d;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto parts = split_csv(line);
        const std::string& tag = parts.front();
        if (tag == "field" && parts.size() == 3) {
            field.emplace(parse_real(parts[1], line_no), parse_real(parts[2], line_no));
        } else if (tag == "seed" && parts.size() == 2) {
            try {
                d.seed = std::stoull(parts[1]);
            } catch (const std::exception&) {
                throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad seed");
            }
        } else if ((tag == "H" || tag == "N" || tag == "T") && parts.size() == 4) {
            const int id = parse_int(parts[1], line_no);
            const Position pos{parse_real(parts[2], line_no), parse_real(parts[3], line_no)};
            if (tag == "T") {
                d.tracing_points.push_back({id, pos});
            } else if (tag == "H") {
                d.heads.push_back({{NodeKind::ClusterHead, id}, pos});
            } else {
                d.normals.push_back({{NodeKind::Normal, id}, pos});
            }
        } else {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": unrecognized record");
        }
    }
    if (!field) throw Error(ErrorCode::ParseError, "missing field record");
    d.field = *field;
    auto check = [&](const Position& p) {
        if (!contains(d.field, p)) {
            throw Error(ErrorCode::OutOfField, "(" + fixed(p.x) + ", " + fixed(p.y) + ") is outside the field");
        }
    };
    for (const auto& n : d.heads) check(n.position);
    for (const auto& n : d.normals) check(n.position);
    for (const auto& t : d.tracing_points) check(t.position);
    return d;
}

}  // namespace wsnacc
