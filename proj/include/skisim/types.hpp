#ifndef SKISIM_TYPES_HPP
#define SKISIM_TYPES_HPP

#include <array>
#include <cstdint>
#include <string>

namespace skisim {

enum class NodeKind { Junction = 0, Generator = 1, Restaurant = 2 };

enum class SlopeColor { Green = 0, Blue = 1, Red = 2, Black = 3 };

enum class Level { Beginner = 0, Medium = 1, Good = 2, Expert = 3 };

inline constexpr int kNumColors = 4;
inline constexpr int kNumLevels = 4;

/// 30-minute reporting window used for swipe counts and wait aggregates.
inline constexpr double kMetricsStepS = 1800.0;

NodeKind parse_node_kind(const std::string& s);
SlopeColor parse_color(const std::string& s);
Level parse_level(const std::string& s);

const char* to_string(NodeKind kind);
const char* to_string(SlopeColor color);
const char* to_string(Level level);

/// Skiing speed per slope color, meters/second.
using SpeedTable = std::array<double, kNumColors>;

inline int metrics_step(double time_s) {
    return time_s <= 0.0 ? 0 : static_cast<int>(time_s / kMetricsStepS);
}

} // namespace skisim

#endif
