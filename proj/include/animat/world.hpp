#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace animat {

// Plane coordinates. The animat lives in the (z, x) plane; z plays the role
// of the first axis, x of the second. Headings are measured from +z toward +x.
struct Vec2 {
    double z = 0.0;
    double x = 0.0;

    Vec2 operator+(const Vec2& o) const { return {z + o.z, x + o.x}; }
    Vec2 operator-(const Vec2& o) const { return {z - o.z, x - o.x}; }
    Vec2 operator*(double s) const { return {z * s, x * s}; }
    bool operator==(const Vec2& o) const { return z == o.z && x == o.x; }
};

inline double dot(const Vec2& a, const Vec2& b) { return a.z * b.z + a.x * b.x; }
inline double norm(const Vec2& a) { return std::sqrt(dot(a, a)); }
inline double distance(const Vec2& a, const Vec2& b) { return norm(a - b); }

// Angle of a vector in [-pi, pi], measured from +z toward +x.
inline double angleOf(const Vec2& v) { return std::atan2(v.x, v.z); }

// Unit heading vector for an orientation theta.
inline Vec2 headingVec(double theta) { return {std::cos(theta), std::sin(theta)}; }

// Wrap an angle difference into (-pi, pi].
double wrapAngle(double a);

// Normalize an absolute orientation into [0, 2*pi).
double normalizeTheta(double theta);

enum class StimulusKind : int {
    Water = 0,
    Food,
    Grass,
    Blob,
    RedSpot,
    YellowSpot,
};
constexpr int kStimulusKindCount = 6;

const char* stimulusKindName(StimulusKind k);
std::optional<StimulusKind> stimulusKindFromName(const std::string& name);

struct Stimulus {
    int id = 0;
    StimulusKind kind = StimulusKind::Water;
    Vec2 position;
    double magnitude = 1.0;    // > 0 while present
    double body_radius = 0.0;  // used only for the at-range test
};

// Axis-aligned rectangle, min < max componentwise.
struct Rect {
    Vec2 min;
    Vec2 max;

    bool contains(const Vec2& p) const {
        return p.z >= min.z && p.z <= max.z && p.x >= min.x && p.x <= max.x;
    }
    bool strictlyContains(const Vec2& p) const {
        return p.z > min.z && p.z < max.z && p.x > min.x && p.x < max.x;
    }
    // Closest point of the (closed) rectangle to p.
    Vec2 closestPoint(const Vec2& p) const;
};

using Obstacle = Rect;

// A stimulus whose magnitude falls to this floor or below is removed.
constexpr double kDepletionFloor = 0.01;

struct NearestStimulus {
    Stimulus stimulus;
    double dist = 0.0;
};

// The bounded plane with its stimuli and fixed obstacles. The four bound
// edges act as obstacles for motion but do not occlude perception.
struct World {
    Rect bounds{{-20.0, -20.0}, {20.0, 20.0}};
    std::vector<Stimulus> stimuli;
    std::vector<Obstacle> obstacles;

    const Stimulus* findStimulus(int id) const;
    Stimulus* findStimulus(int id);

    // True iff the open segment (from, to) crosses any obstacle interior.
    // Bound edges are excluded here; they only constrain motion.
    bool segmentBlocked(const Vec2& from, const Vec2& to) const;

    // Reduce a stimulus magnitude; remove it at the depletion floor.
    // Returns false (and changes nothing) for an unknown id.
    bool depleteStimulus(int id, double amount);

    std::optional<NearestStimulus> nearestOfKind(StimulusKind kind, const Vec2& from) const;

    // Distance from p to the closest obstacle edge or bound edge.
    double obstacleClearance(const Vec2& p) const;
    // Closest point over all obstacles and bound edges.
    Vec2 closestObstaclePoint(const Vec2& p) const;

    bool insideAnyObstacle(const Vec2& p) const;
};

// True iff the open segment (a, b) intersects the interior of rect.
bool segmentCrossesRectInterior(const Vec2& a, const Vec2& b, const Rect& rect);

}  // namespace animat
