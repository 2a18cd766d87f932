#pragma once

#include <optional>

#include "animat/perception.hpp"
#include "animat/physiology.hpp"
#include "animat/rng.hpp"
#include "animat/world.hpp"

namespace animat {

// Angular steps commanding the walk, both in [0,1] radians. Equal steps move
// the animat in a straight line; the difference turns it.
struct MotorStep {
    double alpha = 0.0;
    double beta = 0.0;
};

struct MotorParams {
    double body_radius = 0.5;
    double gain = 1.0;         // meters of displacement per radian of mean step
    double explore_step = 0.5; // the shared alpha/beta value while exploring
    double steer_gain = 1.0;   // proportional steering toward a bearing
    double avoid_turn = 0.5;   // fixed turn per tick away from an obstacle
};

// Translate the selected action into angular steps. Approach actions and
// Runaway need a bearing (relative to heading); for Runaway it is the bearing
// TO the blob and the step turns away from it. AvoidObstacle gets the bearing
// of the nearest obstacle point. Only Wander consumes randomness.
MotorStep stepForAction(ExternalAction action, std::optional<double> bearing_to_target, Rng& rng,
                        const MotorParams& params);

struct StepOutcome {
    Pose pose;
    double moved_distance = 0.0;
    bool collided = false;
};

// Differential-drive kinematics: the heading turns by alpha - beta, then the
// animat advances (alpha + beta)/2 * gain * strength along the new heading.
// Movement is clamped against obstacle rectangles and the world frame so the
// body never overlaps either.
StepOutcome applyStep(const Pose& pose, const MotorStep& step, double strength,
                      const MotorParams& params, const World& world);

// True iff a body of the given radius fits at p (inside bounds, outside
// every obstacle, with clearance).
bool poseValid(const World& world, const Vec2& p, double body_radius);

}  // namespace animat
