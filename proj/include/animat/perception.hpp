#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "animat/world.hpp"

namespace animat {

// Position plus orientation. theta is kept normalized to [0, 2*pi) and is
// measured from the +z axis toward +x.
struct Pose {
    Vec2 position;
    double theta = 0.0;

    Vec2 heading() const { return headingVec(theta); }
};

struct PerceptionParams {
    double base_radius = 10.0;      // perception radius at lucidity 1
    double d_min = 0.5;             // distance clamp for magnitude/distance ratios
    double memory_decay = 0.9;      // per-tick reverberation factor, in (0,1)
    double forget_eps = 0.01;       // memory entries below this are forgotten
    double pairing_distance = 4.0;  // food+water closer than this form a compound source
    double at_range_margin = 0.5;   // slack added to body radii for the at-range test
};

// Stimulus kinds plus the compound food+water source and obstacles.
enum class PerceptKind : int {
    Water = 0,
    Food,
    Grass,
    Blob,
    RedSpot,
    YellowSpot,
    FoodAndWater,
    Obstacle,
};
constexpr int kPerceptKindCount = 8;

const char* perceptKindName(PerceptKind k);
inline PerceptKind toPerceptKind(StimulusKind k) { return static_cast<PerceptKind>(static_cast<int>(k)); }

struct Percept {
    PerceptKind kind = PerceptKind::Water;
    double value = 0.0;             // pondered value in [0,1)
    double nearest_distance = 0.0;  // center-to-center, to the nearest source
    double bearing = 0.0;           // relative to heading, wrapped to (-pi, pi]
    bool at_range = false;
    std::optional<int> target_id;   // nearest stimulus (water member for the compound)
    std::optional<int> partner_id;  // food member of the compound pair
    bool remembered = false;
    double nearest_magnitude = 0.0;  // magnitude of the nearest source (risk input for blobs)
};

// Short-term reverberation: per-kind record of the last perceived signal.
// last_bearing is the world-frame angle toward the remembered source, so the
// remembered direction stays put while the animat turns.
struct MemoryEntry {
    double value = 0.0;
    double last_bearing = 0.0;
    double last_distance = 0.0;
    double last_magnitude = 0.0;
    int ticks_since_seen = 0;
};

using PerceptMemory = std::map<PerceptKind, MemoryEntry>;

// r_p scales with lucidity; a fully dazed animat is blind.
double effectiveRadius(const PerceptionParams& params, double lucidity);

// Forward semicircle of radius r_p: inside the circle and strictly ahead of
// the line through the animat perpendicular to its heading.
bool inPerceptualRegion(const Pose& pose, double r_p, const Vec2& point);

// Pondered value of one stimulus kind: s = sum(m_i / max(d_i, d_min)),
// squashed to s / (1 + s) so ordering is preserved inside [0,1).
double ponder(const std::vector<std::pair<double, double>>& magnitudes_and_distances, double d_min);

// One decay step: every entry's value is multiplied by memory_decay and
// entries below forget_eps are dropped.
PerceptMemory decayMemory(const PerceptMemory& memory, const PerceptionParams& params);

struct SenseResult {
    std::vector<Percept> percepts;  // ordered by kind ordinal
    PerceptMemory memory;
};

// Full perceptual pass: region + occlusion filtering, per-kind pondered
// values, compound food+water detection, reverberation of lost kinds, and
// the obstacle-at-range percept. body_radius is the animat's own radius.
SenseResult sense(const World& world, const Pose& pose, double lucidity, double body_radius,
                  const PerceptMemory& memory, const PerceptionParams& params);

const Percept* findPercept(const std::vector<Percept>& percepts, PerceptKind kind);

}  // namespace animat
