#include "animat/perception.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace animat {

const char* perceptKindName(PerceptKind k) {
    switch (k) {
        case PerceptKind::Water: return "water";
        case PerceptKind::Food: return "food";
        case PerceptKind::Grass: return "grass";
        case PerceptKind::Blob: return "blob";
        case PerceptKind::RedSpot: return "red_spot";
        case PerceptKind::YellowSpot: return "yellow_spot";
        case PerceptKind::FoodAndWater: return "food_and_water";
        case PerceptKind::Obstacle: return "obstacle";
    }
    return "?";
}

double effectiveRadius(const PerceptionParams& params, double lucidity) {
    return params.base_radius * lucidity;
}

bool inPerceptualRegion(const Pose& pose, double r_p, const Vec2& point) {
    Vec2 rel = point - pose.position;
    if (dot(rel, rel) >= r_p * r_p) return false;
    return dot(rel, pose.heading()) > 0.0;
}

double ponder(const std::vector<std::pair<double, double>>& magnitudes_and_distances, double d_min) {
    double s = 0.0;
    for (const auto& [m, d] : magnitudes_and_distances) s += m / std::max(d, d_min);
    return s / (1.0 + s);
}

PerceptMemory decayMemory(const PerceptMemory& memory, const PerceptionParams& params) {
    PerceptMemory out;
    for (const auto& [kind, entry] : memory) {
        MemoryEntry e = entry;
        e.value *= params.memory_decay;
        e.ticks_since_seen += 1;
        if (e.value >= params.forget_eps) out[kind] = e;
    }
    return out;
}

const Percept* findPercept(const std::vector<Percept>& percepts, PerceptKind kind) {
    for (const auto& p : percepts)
        if (p.kind == kind) return &p;
    return nullptr;
}

namespace {

struct Seen {
    const Stimulus* stimulus;
    double dist;
};

double relativeBearing(const Pose& pose, const Vec2& target) {
    return wrapAngle(angleOf(target - pose.position) - pose.theta);
}

}  // namespace

SenseResult sense(const World& world, const Pose& pose, double lucidity, double body_radius,
                  const PerceptMemory& memory, const PerceptionParams& params) {
    const double r_p = effectiveRadius(params, lucidity);
    const double at_range_base = body_radius + params.at_range_margin;

    // Stimuli inside the semicircle and not hidden behind an obstacle.
    std::vector<Seen> seen[kStimulusKindCount];
    for (const auto& s : world.stimuli) {
        if (!inPerceptualRegion(pose, r_p, s.position)) continue;
        if (world.segmentBlocked(pose.position, s.position)) continue;
        seen[static_cast<int>(s.kind)].push_back({&s, distance(pose.position, s.position)});
    }

    SenseResult out;
    out.memory = memory;

    bool perceived[kPerceptKindCount] = {};

    for (int ki = 0; ki < kStimulusKindCount; ++ki) {
        auto& group = seen[ki];
        if (group.empty()) continue;

        std::vector<std::pair<double, double>> md;
        md.reserve(group.size());
        const Seen* nearest = &group.front();
        for (const auto& g : group) {
            md.emplace_back(g.stimulus->magnitude, g.dist);
            if (g.dist < nearest->dist) nearest = &g;
        }

        Percept p;
        p.kind = static_cast<PerceptKind>(ki);
        p.value = ponder(md, params.d_min);
        p.nearest_distance = nearest->dist;
        p.bearing = relativeBearing(pose, nearest->stimulus->position);
        p.at_range = nearest->dist < at_range_base + nearest->stimulus->body_radius;
        p.target_id = nearest->stimulus->id;
        p.nearest_magnitude = nearest->stimulus->magnitude;
        out.percepts.push_back(p);
        perceived[ki] = true;

        out.memory[p.kind] = MemoryEntry{p.value, wrapAngle(pose.theta + p.bearing),
                                         p.nearest_distance, p.nearest_magnitude, 0};
    }

    // A perceived food and water close to each other form a compound source;
    // it is pondered as one stimulus kind made of both members.
    {
        const auto& waters = seen[static_cast<int>(StimulusKind::Water)];
        const auto& foods = seen[static_cast<int>(StimulusKind::Food)];
        const Seen* bestWater = nullptr;
        const Seen* bestFood = nullptr;
        double bestValue = 0.0;
        for (const auto& w : waters) {
            for (const auto& f : foods) {
                if (distance(w.stimulus->position, f.stimulus->position) > params.pairing_distance)
                    continue;
                double v = ponder({{w.stimulus->magnitude, w.dist}, {f.stimulus->magnitude, f.dist}},
                                  params.d_min);
                if (v > bestValue) {
                    bestValue = v;
                    bestWater = &w;
                    bestFood = &f;
                }
            }
        }
        if (bestWater != nullptr) {
            Vec2 mid = (bestWater->stimulus->position + bestFood->stimulus->position) * 0.5;
            Percept p;
            p.kind = PerceptKind::FoodAndWater;
            p.value = bestValue;
            p.nearest_distance = distance(pose.position, mid);
            p.bearing = relativeBearing(pose, mid);
            p.at_range =
                bestWater->dist < at_range_base + bestWater->stimulus->body_radius &&
                bestFood->dist < at_range_base + bestFood->stimulus->body_radius;
            p.target_id = bestWater->stimulus->id;
            p.partner_id = bestFood->stimulus->id;
            p.nearest_magnitude =
                std::max(bestWater->stimulus->magnitude, bestFood->stimulus->magnitude);
            out.percepts.push_back(p);
            perceived[static_cast<int>(PerceptKind::FoodAndWater)] = true;

            out.memory[p.kind] = MemoryEntry{p.value, wrapAngle(pose.theta + p.bearing),
                                             p.nearest_distance, p.nearest_magnitude, 0};
        }
    }

    // Kinds no longer perceived reverberate until forgotten. Obstacles do not
    // reverberate; their percept only exists to trigger the avoidance reflex.
    PerceptMemory next;
    for (const auto& [kind, entry] : out.memory) {
        if (perceived[static_cast<int>(kind)]) {
            next[kind] = entry;
            continue;
        }
        MemoryEntry e = entry;
        e.value *= params.memory_decay;
        e.ticks_since_seen += 1;
        if (e.value < params.forget_eps) continue;
        next[kind] = e;

        Percept p;
        p.kind = kind;
        p.value = e.value;
        p.nearest_distance = e.last_distance;
        p.bearing = wrapAngle(e.last_bearing - pose.theta);
        p.at_range = false;  // consummation needs physical presence
        p.remembered = true;
        p.nearest_magnitude = e.last_magnitude;
        out.percepts.push_back(p);
    }
    out.memory = std::move(next);

    // Obstacle percept: emitted at range when an obstacle edge or a wall is
    // within the collision lookahead.
    {
        double clearance = world.obstacleClearance(pose.position);
        if (clearance < at_range_base) {
            Percept p;
            p.kind = PerceptKind::Obstacle;
            p.value = 1.0;
            p.nearest_distance = clearance;
            p.bearing = relativeBearing(pose, world.closestObstaclePoint(pose.position));
            p.at_range = true;
            out.percepts.push_back(p);
        }
    }

    std::sort(out.percepts.begin(), out.percepts.end(),
              [](const Percept& a, const Percept& b) {
                  return static_cast<int>(a.kind) < static_cast<int>(b.kind);
              });
    return out;
}

}  // namespace animat
