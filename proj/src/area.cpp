#include "skisim/area.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>

#include <json.hpp>

#include "skisim/errors.hpp"

namespace skisim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using MinQueue = std::priority_queue<std::pair<double, int>,
                                     std::vector<std::pair<double, int>>,
                                     std::greater<>>;

} // namespace

SkiArea SkiArea::build(std::vector<NodeRec> nodes, std::vector<SlopeArc> slopes,
                       std::vector<LiftArc> lifts, std::vector<Connector> connectors,
                       double closing_time_s, double safety_margin_s) {
    SkiArea area;
    area.nodes_ = std::move(nodes);
    area.slopes_ = std::move(slopes);
    area.lifts_ = std::move(lifts);
    area.connectors_ = std::move(connectors);
    area.closing_time_s_ = closing_time_s;
    area.safety_margin_s_ = safety_margin_s;
    area.index_network();
    area.validate();
    return area;
}

int SkiArea::node_index(const std::string& id) const {
    auto it = node_by_id_.find(id);
    if (it == node_by_id_.end())
        throw ValidationError(ErrorCode::UnknownEntity, "unknown node id: " + id);
    return it->second;
}

std::optional<int> SkiArea::find_node(const std::string& id) const {
    auto it = node_by_id_.find(id);
    if (it == node_by_id_.end()) return std::nullopt;
    return it->second;
}

int SkiArea::arc_index(const std::string& id) const {
    auto it = arc_by_id_.find(id);
    if (it == arc_by_id_.end())
        throw ValidationError(ErrorCode::UnknownEntity, "unknown arc id: " + id);
    return it->second;
}

const std::string& SkiArea::arc_label(int arc_id) const { return arc_labels_[arc_id]; }

std::span<const int> SkiArea::outgoing(int node) const {
    const auto& v = out_arcs_[node];
    return {v.data(), v.size()};
}

std::vector<int> SkiArea::generator_nodes() const {
    std::vector<int> out;
    for (int i = 0; i < num_nodes(); ++i)
        if (nodes_[i].kind == NodeKind::Generator) out.push_back(i);
    return out;
}

std::vector<int> SkiArea::restaurant_nodes() const {
    std::vector<int> out;
    for (int i = 0; i < num_nodes(); ++i)
        if (nodes_[i].kind == NodeKind::Restaurant) out.push_back(i);
    return out;
}

double SkiArea::altitude_gain_m(const Arc& a) const {
    return nodes_[a.head].altitude - nodes_[a.tail].altitude;
}

double SkiArea::enjoyment(const Arc& a) const {
    switch (a.kind) {
        case ArcKind::Slope: return slopes_[a.index].enjoyment;
        case ArcKind::Lift: return lifts_[a.index].enjoyment;
        case ArcKind::Connector: return 0.0;
    }
    return 0.0;
}

double SkiArea::planning_time_s(const Arc& a, const SpeedTable& speeds) const {
    switch (a.kind) {
        case ArcKind::Slope: {
            const auto& s = slopes_[a.index];
            return s.length / speeds[static_cast<int>(s.color)];
        }
        case ArcKind::Lift: {
            const auto& l = lifts_[a.index];
            return l.ride_time_s + 0.5 * l.headway_s;
        }
        case ArcKind::Connector:
            return 0.0;
    }
    return 0.0;
}

double SkiArea::utility_time_s(const Arc& a, const SpeedTable& speeds) const {
    if (a.kind == ArcKind::Lift) return lifts_[a.index].ride_time_s;
    return planning_time_s(a, speeds);
}

void SkiArea::index_network() {
    node_by_id_.clear();
    for (int i = 0; i < num_nodes(); ++i) {
        auto [it, inserted] = node_by_id_.emplace(nodes_[i].id, i);
        if (!inserted)
            throw ValidationError(ErrorCode::DuplicateId, "duplicate node id: " + nodes_[i].id);
    }

    arcs_.clear();
    arc_labels_.clear();
    arc_by_id_.clear();
    auto resolve = [&](const std::string& arc_id, const std::string& node_id) {
        auto it = node_by_id_.find(node_id);
        if (it == node_by_id_.end())
            throw ValidationError(ErrorCode::DanglingEndpoint,
                                  "arc " + arc_id + " references unknown node " + node_id);
        return it->second;
    };
    auto add_arc = [&](ArcKind kind, int index, const std::string& id,
                       const std::string& tail, const std::string& head) {
        Arc a{kind, index, resolve(id, tail), resolve(id, head)};
        int arc_id = static_cast<int>(arcs_.size());
        auto [it, inserted] = arc_by_id_.emplace(id, arc_id);
        if (!inserted)
            throw ValidationError(ErrorCode::DuplicateId, "duplicate arc id: " + id);
        arcs_.push_back(a);
        arc_labels_.push_back(id);
    };
    for (int i = 0; i < static_cast<int>(slopes_.size()); ++i)
        add_arc(ArcKind::Slope, i, slopes_[i].id, slopes_[i].tail, slopes_[i].head);
    for (int i = 0; i < static_cast<int>(lifts_.size()); ++i)
        add_arc(ArcKind::Lift, i, lifts_[i].id, lifts_[i].tail, lifts_[i].head);
    for (int i = 0; i < static_cast<int>(connectors_.size()); ++i)
        add_arc(ArcKind::Connector, i, connectors_[i].id, connectors_[i].tail, connectors_[i].head);

    out_arcs_.assign(num_nodes(), {});
    for (int a = 0; a < num_arcs(); ++a) out_arcs_[arcs_[a].tail].push_back(a);
}

void SkiArea::validate() const {
    if (nodes_.empty())
        throw ValidationError(ErrorCode::EmptyCollection, "area has no nodes");
    if (slopes_.empty())
        throw ValidationError(ErrorCode::EmptyCollection, "area has no slopes");
    if (lifts_.empty())
        throw ValidationError(ErrorCode::EmptyCollection, "area has no lifts");
    if (closing_time_s_ <= 0.0)
        throw ValidationError(ErrorCode::InvalidParameter, "closing_time must be positive");
    if (safety_margin_s_ < 0.0 || safety_margin_s_ >= closing_time_s_)
        throw ValidationError(ErrorCode::InvalidParameter,
                              "safety_margin_s must lie within the operating day");

    for (const auto& s : slopes_) {
        double tail_alt = nodes_[node_by_id_.at(s.tail)].altitude;
        double head_alt = nodes_[node_by_id_.at(s.head)].altitude;
        if (!(tail_alt > head_alt))
            throw ValidationError(ErrorCode::NonDescendingSlope,
                                  "slope " + s.id + " does not descend (" + s.tail + " -> " + s.head + ")");
        if (!(s.length > 0.0))
            throw ValidationError(ErrorCode::InvalidParameter, "slope " + s.id + " length must be > 0");
        if (s.enjoyment < 0.0 || s.enjoyment > 1.0)
            throw ValidationError(ErrorCode::InvalidParameter,
                                  "slope " + s.id + " enjoyment outside [0,1]");
    }
    for (const auto& l : lifts_) {
        double tail_alt = nodes_[node_by_id_.at(l.tail)].altitude;
        double head_alt = nodes_[node_by_id_.at(l.head)].altitude;
        if (!(head_alt > tail_alt))
            throw ValidationError(ErrorCode::NonAscendingLift,
                                  "lift " + l.id + " does not ascend (" + l.tail + " -> " + l.head + ")");
        if (l.vehicle_capacity < 1)
            throw ValidationError(ErrorCode::InvalidParameter, "lift " + l.id + " capacity must be >= 1");
        if (!(l.headway_s > 0.0))
            throw ValidationError(ErrorCode::InvalidParameter, "lift " + l.id + " headway must be > 0");
        if (!(l.ride_time_s > 0.0))
            throw ValidationError(ErrorCode::InvalidParameter, "lift " + l.id + " ride_time must be > 0");
        if (l.enjoyment < 0.0 || l.enjoyment > 1.0)
            throw ValidationError(ErrorCode::InvalidParameter,
                                  "lift " + l.id + " enjoyment outside [0,1]");
    }

    // Strong connectivity: forward and backward reachability from node 0
    // cover all nodes iff every ordered pair is connected.
    auto reach = [&](bool forward) {
        std::vector<char> seen(num_nodes(), 0);
        std::vector<std::vector<int>> rev;
        if (!forward) {
            rev.assign(num_nodes(), {});
            for (const auto& a : arcs_) rev[a.head].push_back(a.tail);
        }
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int n = stack.back();
            stack.pop_back();
            if (forward) {
                for (int aid : out_arcs_[n]) {
                    int m = arcs_[aid].head;
                    if (!seen[m]) { seen[m] = 1; stack.push_back(m); }
                }
            } else {
                for (int m : rev[n])
                    if (!seen[m]) { seen[m] = 1; stack.push_back(m); }
            }
        }
        return seen;
    };
    auto fwd = reach(true);
    for (int i = 0; i < num_nodes(); ++i)
        if (!fwd[i])
            throw ValidationError(ErrorCode::NotStronglyConnected,
                                  "node " + nodes_[0].id + " cannot reach node " + nodes_[i].id);
    auto bwd = reach(false);
    for (int i = 0; i < num_nodes(); ++i)
        if (!bwd[i])
            throw ValidationError(ErrorCode::NotStronglyConnected,
                                  "node " + nodes_[i].id + " cannot reach node " + nodes_[0].id);
}

SkiArea SkiArea::load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError(ErrorCode::IoError, "cannot open network file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

SkiArea SkiArea::from_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(ErrorCode::ParseError, std::string("network file: ") + e.what());
    }
    try {
        std::vector<NodeRec> nodes;
        for (const auto& j : doc.at("nodes")) {
            NodeRec n;
            n.id = j.at("id").get<std::string>();
            n.altitude = j.at("altitude").get<double>();
            n.kind = parse_node_kind(j.at("kind").get<std::string>());
            if (j.contains("position")) {
                n.position[0] = j["position"][0].get<double>();
                n.position[1] = j["position"][1].get<double>();
            }
            nodes.push_back(std::move(n));
        }
        std::vector<SlopeArc> slopes;
        for (const auto& j : doc.at("slopes")) {
            SlopeArc s;
            s.id = j.at("id").get<std::string>();
            s.tail = j.at("tail").get<std::string>();
            s.head = j.at("head").get<std::string>();
            s.length = j.at("length").get<double>();
            s.color = parse_color(j.at("color").get<std::string>());
            s.enjoyment = j.at("enjoyment").get<double>();
            slopes.push_back(std::move(s));
        }
        std::vector<LiftArc> lifts;
        for (const auto& j : doc.at("lifts")) {
            LiftArc l;
            l.id = j.at("id").get<std::string>();
            l.tail = j.at("tail").get<std::string>();
            l.head = j.at("head").get<std::string>();
            l.vehicle_capacity = j.at("vehicle_capacity").get<int>();
            l.headway_s = j.at("headway").get<double>();
            l.ride_time_s = j.at("ride_time").get<double>();
            l.enjoyment = j.at("enjoyment").get<double>();
            lifts.push_back(std::move(l));
        }
        std::vector<Connector> connectors;
        if (doc.contains("connectors")) {
            for (const auto& j : doc["connectors"]) {
                Connector c;
                c.id = j.at("id").get<std::string>();
                c.tail = j.at("tail").get<std::string>();
                c.head = j.at("head").get<std::string>();
                connectors.push_back(std::move(c));
            }
        }
        double closing = doc.at("closing_time").get<double>();
        double margin = doc.value("safety_margin_s", 0.0);
        return build(std::move(nodes), std::move(slopes), std::move(lifts),
                     std::move(connectors), closing, margin);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(ErrorCode::ParseError, std::string("network file: ") + e.what());
    }
}

std::vector<double> shortest_times_from(const SkiArea& area, int source,
                                        const SpeedTable& speeds) {
    std::vector<double> dist(area.num_nodes(), kInf);
    dist[source] = 0.0;
    MinQueue pq;
    pq.push({0.0, source});
    while (!pq.empty()) {
        auto [d, n] = pq.top();
        pq.pop();
        if (d > dist[n]) continue;
        for (int aid : area.outgoing(n)) {
            const Arc& a = area.arc(aid);
            double nd = d + area.planning_time_s(a, speeds);
            if (nd < dist[a.head]) {
                dist[a.head] = nd;
                pq.push({nd, a.head});
            }
        }
    }
    return dist;
}

std::vector<double> shortest_times_to(const SkiArea& area, int target,
                                      const SpeedTable& speeds) {
    std::vector<std::vector<std::pair<int, double>>> rev(area.num_nodes());
    for (int aid = 0; aid < area.num_arcs(); ++aid) {
        const Arc& a = area.arc(aid);
        rev[a.head].push_back({a.tail, area.planning_time_s(a, speeds)});
    }
    std::vector<double> dist(area.num_nodes(), kInf);
    dist[target] = 0.0;
    MinQueue pq;
    pq.push({0.0, target});
    while (!pq.empty()) {
        auto [d, n] = pq.top();
        pq.pop();
        if (d > dist[n]) continue;
        for (auto [m, w] : rev[n]) {
            double nd = d + w;
            if (nd < dist[m]) {
                dist[m] = nd;
                pq.push({nd, m});
            }
        }
    }
    return dist;
}

std::vector<std::vector<double>> shortest_time_matrix(const SkiArea& area,
                                                      const SpeedTable& speeds) {
    for (double v : speeds)
        if (!(v > 0.0))
            throw ValidationError(ErrorCode::InvalidParameter, "speeds must be positive");
    std::vector<std::vector<double>> matrix;
    matrix.reserve(area.num_nodes());
    for (int n = 0; n < area.num_nodes(); ++n)
        matrix.push_back(shortest_times_from(area, n, speeds));
    return matrix;
}

AccessIndexTable access_index(const SkiArea& area,
                              const std::vector<std::vector<double>>& time_matrix) {
    AccessIndexTable table;
    table.per_node.resize(area.num_nodes());
    std::vector<double> total(area.num_nodes(), 0.0);
    for (int n = 0; n < area.num_nodes(); ++n)
        for (double d : time_matrix[n]) total[n] += d;
    double lo = *std::min_element(total.begin(), total.end());
    double hi = *std::max_element(total.begin(), total.end());
    if (hi == lo) {
        // Degenerate network: all nodes equally placed, no option disadvantaged.
        std::fill(table.per_node.begin(), table.per_node.end(), 1.0);
    } else {
        for (int n = 0; n < area.num_nodes(); ++n)
            table.per_node[n] = (hi - total[n]) / (hi - lo);
    }
    table.per_arc.resize(area.num_arcs());
    for (int a = 0; a < area.num_arcs(); ++a)
        table.per_arc[a] = table.per_node[area.arc(a).head];
    return table;
}

std::vector<double> lookahead_enjoyment(const SkiArea& area) {
    std::vector<double> out(area.num_arcs(), 0.0);
    for (int aid = 0; aid < area.num_arcs(); ++aid) {
        const Arc& a = area.arc(aid);
        if (a.kind == ArcKind::Lift) {
            double sum = 0.0;
            for (int oid : area.outgoing(a.head)) {
                const Arc& o = area.arc(oid);
                if (o.kind == ArcKind::Slope) sum += area.slope_of(o).enjoyment;
            }
            out[aid] = sum;
        } else if (a.kind == ArcKind::Slope) {
            // Tree of nodes reachable from the slope bottom without a lift.
            std::vector<char> seen(area.num_nodes(), 0);
            std::vector<int> stack{a.head};
            seen[a.head] = 1;
            double best = 0.0;
            while (!stack.empty()) {
                int n = stack.back();
                stack.pop_back();
                for (int oid : area.outgoing(n)) {
                    const Arc& o = area.arc(oid);
                    if (o.kind == ArcKind::Lift) {
                        best = std::max(best, area.lift_of(o).enjoyment);
                    } else if (!seen[o.head]) {
                        seen[o.head] = 1;
                        stack.push_back(o.head);
                    }
                }
            }
            out[aid] = best; // stays 0 on a terminal slope tree
        }
    }
    return out;
}

} // namespace skisim
