#include "animat/world.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace animat {

double wrapAngle(double a) {
    constexpr double kTwoPi = 2.0 * M_PI;
    a = std::fmod(a, kTwoPi);
    if (a > M_PI) a -= kTwoPi;
    if (a <= -M_PI) a += kTwoPi;
    return a;
}

double normalizeTheta(double theta) {
    constexpr double kTwoPi = 2.0 * M_PI;
    theta = std::fmod(theta, kTwoPi);
    if (theta < 0.0) theta += kTwoPi;
    if (theta >= kTwoPi) theta = 0.0;
    return theta;
}

const char* stimulusKindName(StimulusKind k) {
    switch (k) {
        case StimulusKind::Water: return "water";
        case StimulusKind::Food: return "food";
        case StimulusKind::Grass: return "grass";
        case StimulusKind::Blob: return "blob";
        case StimulusKind::RedSpot: return "red_spot";
        case StimulusKind::YellowSpot: return "yellow_spot";
    }
    return "?";
}

std::optional<StimulusKind> stimulusKindFromName(const std::string& name) {
    for (int i = 0; i < kStimulusKindCount; ++i) {
        auto k = static_cast<StimulusKind>(i);
        if (name == stimulusKindName(k)) return k;
    }
    return std::nullopt;
}

Vec2 Rect::closestPoint(const Vec2& p) const {
    return {std::clamp(p.z, min.z, max.z), std::clamp(p.x, min.x, max.x)};
}

const Stimulus* World::findStimulus(int id) const {
    for (const auto& s : stimuli)
        if (s.id == id) return &s;
    return nullptr;
}

Stimulus* World::findStimulus(int id) {
    for (auto& s : stimuli)
        if (s.id == id) return &s;
    return nullptr;
}

// Slab clipping with strict inequalities: the set of t in (0,1) where the
// segment point lies strictly inside the rectangle is an open interval;
// the segment crosses the interior iff that interval is nonempty. Touching
// an edge or sliding along it does not count.
bool segmentCrossesRectInterior(const Vec2& a, const Vec2& b, const Rect& rect) {
    double lo = 0.0;
    double hi = 1.0;
    const double d[2] = {b.z - a.z, b.x - a.x};
    const double p[2] = {a.z, a.x};
    const double mn[2] = {rect.min.z, rect.min.x};
    const double mx[2] = {rect.max.z, rect.max.x};

    for (int axis = 0; axis < 2; ++axis) {
        if (d[axis] == 0.0) {
            if (p[axis] <= mn[axis] || p[axis] >= mx[axis]) return false;
            continue;
        }
        double t0 = (mn[axis] - p[axis]) / d[axis];
        double t1 = (mx[axis] - p[axis]) / d[axis];
        if (t0 > t1) std::swap(t0, t1);
        lo = std::max(lo, t0);
        hi = std::min(hi, t1);
        if (lo >= hi) return false;
    }
    return lo < hi;
}

bool World::segmentBlocked(const Vec2& from, const Vec2& to) const {
    for (const auto& ob : obstacles)
        if (segmentCrossesRectInterior(from, to, ob)) return true;
    return false;
}

bool World::depleteStimulus(int id, double amount) {
    Stimulus* s = findStimulus(id);
    if (s == nullptr) return false;
    s->magnitude = std::max(0.0, s->magnitude - amount);
    if (s->magnitude <= kDepletionFloor) {
        stimuli.erase(std::remove_if(stimuli.begin(), stimuli.end(),
                                     [id](const Stimulus& t) { return t.id == id; }),
                      stimuli.end());
    }
    return true;
}

std::optional<NearestStimulus> World::nearestOfKind(StimulusKind kind, const Vec2& from) const {
    const Stimulus* best = nullptr;
    double bestDist = std::numeric_limits<double>::infinity();
    for (const auto& s : stimuli) {
        if (s.kind != kind) continue;
        double d = distance(s.position, from);
        if (d < bestDist) {
            bestDist = d;
            best = &s;
        }
    }
    if (best == nullptr) return std::nullopt;
    return NearestStimulus{*best, bestDist};
}

double World::obstacleClearance(const Vec2& p) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& ob : obstacles) best = std::min(best, distance(p, ob.closestPoint(p)));
    // Bound edges: distance to each of the four walls.
    best = std::min(best, p.z - bounds.min.z);
    best = std::min(best, bounds.max.z - p.z);
    best = std::min(best, p.x - bounds.min.x);
    best = std::min(best, bounds.max.x - p.x);
    return best;
}

Vec2 World::closestObstaclePoint(const Vec2& p) const {
    Vec2 bestPoint = p;
    double bestDist = std::numeric_limits<double>::infinity();
    for (const auto& ob : obstacles) {
        Vec2 q = ob.closestPoint(p);
        double d = distance(p, q);
        if (d < bestDist) {
            bestDist = d;
            bestPoint = q;
        }
    }
    const Vec2 walls[4] = {
        {bounds.min.z, p.x}, {bounds.max.z, p.x}, {p.z, bounds.min.x}, {p.z, bounds.max.x}};
    for (const auto& w : walls) {
        double d = distance(p, w);
        if (d < bestDist) {
            bestDist = d;
            bestPoint = w;
        }
    }
    return bestPoint;
}

bool World::insideAnyObstacle(const Vec2& p) const {
    for (const auto& ob : obstacles)
        if (ob.strictlyContains(p)) return true;
    return false;
}

}  // namespace animat
