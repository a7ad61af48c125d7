#ifndef SKISIM_AREA_HPP
#define SKISIM_AREA_HPP

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skisim/types.hpp"

namespace skisim {

struct NodeRec {
    std::string id;
    double altitude = 0.0; // meters
    NodeKind kind = NodeKind::Junction;
    std::array<double, 2> position{0.0, 0.0}; // planar meters, display/matching only
};

struct SlopeArc {
    std::string id;
    std::string tail; // top node
    std::string head; // bottom node
    double length = 0.0; // meters
    SlopeColor color = SlopeColor::Blue;
    double enjoyment = 0.5; // [0,1], precombined static+dynamic features
};

struct LiftArc {
    std::string id;
    std::string tail; // bottom node
    std::string head; // top node
    int vehicle_capacity = 1;  // seats per element
    double headway_s = 0.0;    // seconds between elements
    double ride_time_s = 0.0;  // seconds
    double enjoyment = 0.5;    // [0,1], comfort/difficulty

    /// Skiers per hour. Always derived from capacity and headway.
    double throughput_per_h() const { return vehicle_capacity * 3600.0 / headway_s; }
};

/// Zero-time virtual arc tying a generator into the skiable network.
struct Connector {
    std::string id;
    std::string tail;
    std::string head;
};

enum class ArcKind { Slope = 0, Lift = 1, Connector = 2 };

/// Unified directed-arc view over slopes, lifts and connectors.
/// `index` points into the per-kind vector of the owning SkiArea.
struct Arc {
    ArcKind kind;
    int index;
    int tail; // node index
    int head; // node index
};

/// Validated ski-area network. Immutable after build; safe to share
/// read-only across concurrent replications.
class SkiArea {
public:
    /// Validates ids, endpoints, slope/lift monotonicity and strong
    /// connectivity, then freezes the network.
    /// Throws ValidationError (DuplicateId, DanglingEndpoint,
    /// NonDescendingSlope, NonAscendingLift, NotStronglyConnected,
    /// InvalidParameter, EmptyCollection).
    static SkiArea build(std::vector<NodeRec> nodes,
                         std::vector<SlopeArc> slopes,
                         std::vector<LiftArc> lifts,
                         std::vector<Connector> connectors,
                         double closing_time_s,
                         double safety_margin_s);

    static SkiArea load_json_file(const std::string& path);
    static SkiArea from_json_text(const std::string& text);

    const std::vector<NodeRec>& nodes() const { return nodes_; }
    const std::vector<SlopeArc>& slopes() const { return slopes_; }
    const std::vector<LiftArc>& lifts() const { return lifts_; }
    const std::vector<Connector>& connectors() const { return connectors_; }

    double closing_time_s() const { return closing_time_s_; }
    double safety_margin_s() const { return safety_margin_s_; }

    int num_nodes() const { return static_cast<int>(nodes_.size()); }
    int num_arcs() const { return static_cast<int>(arcs_.size()); }

    int node_index(const std::string& id) const; // throws UnknownEntity
    std::optional<int> find_node(const std::string& id) const;
    int arc_index(const std::string& id) const; // throws UnknownEntity

    const Arc& arc(int arc_id) const { return arcs_[arc_id]; }
    const std::string& arc_label(int arc_id) const;
    const SlopeArc& slope_of(const Arc& a) const { return slopes_[a.index]; }
    const LiftArc& lift_of(const Arc& a) const { return lifts_[a.index]; }

    /// Outgoing arc ids from a node, ordered slopes, lifts, connectors
    /// (file order within each kind) for deterministic iteration.
    std::span<const int> outgoing(int node) const;

    std::vector<int> generator_nodes() const;
    std::vector<int> restaurant_nodes() const;

    /// Altitude difference head - tail (positive for lifts, negative for slopes).
    double altitude_gain_m(const Arc& a) const;

    /// Enjoyment scalar of the arc (0 for connectors).
    double enjoyment(const Arc& a) const;

    /// Planning travel time: slope length/speed, lift ride + headway/2
    /// (expected boarding allowance, queue waits excluded), connector 0.
    double planning_time_s(const Arc& a, const SpeedTable& speeds) const;

    /// Lift travel time perceived in the utility (ride only; waiting is
    /// its own term).
    double utility_time_s(const Arc& a, const SpeedTable& speeds) const;

private:
    SkiArea() = default;
    void index_network();
    void validate() const;

    std::vector<NodeRec> nodes_;
    std::vector<SlopeArc> slopes_;
    std::vector<LiftArc> lifts_;
    std::vector<Connector> connectors_;
    double closing_time_s_ = 0.0;
    double safety_margin_s_ = 0.0;

    std::vector<Arc> arcs_; // slopes, then lifts, then connectors
    std::vector<std::string> arc_labels_;
    std::map<std::string, int> node_by_id_;
    std::map<std::string, int> arc_by_id_;
    std::vector<std::vector<int>> out_arcs_;
};

/// Minimal travel times from `source` to every node under `speeds`
/// (planning times: lift ride + headway/2, connectors free).
std::vector<double> shortest_times_from(const SkiArea& area, int source,
                                        const SpeedTable& speeds);

/// Minimal travel times from every node to `target`.
std::vector<double> shortest_times_to(const SkiArea& area, int target,
                                      const SpeedTable& speeds);

/// All-pairs minimal travel time matrix, entry [a][b] = time a -> b.
std::vector<std::vector<double>> shortest_time_matrix(const SkiArea& area,
                                                      const SpeedTable& speeds);

/// Normalized access-distance index per arc option.
/// The option's target node n carries D(n) = sum over nodes of the minimal
/// travel time from n; u = (max D - D(n)) / (max D - min D). A degenerate
/// network (max D == min D) yields u = 1 everywhere.
struct AccessIndexTable {
    std::vector<double> per_node; // u by node index
    std::vector<double> per_arc;  // u of the arc's head node, by arc id
};

AccessIndexTable access_index(const SkiArea& area,
                              const std::vector<std::vector<double>>& time_matrix);

/// Anticipated attractiveness of what an option leads to.
/// Slope: best enjoyment among lifts reachable from its bottom through
/// slopes/connectors only (0 when that tree reaches no lift).
/// Lift: sum of enjoyment of slopes leaving its top node.
std::vector<double> lookahead_enjoyment(const SkiArea& area);

} // namespace skisim

#endif
