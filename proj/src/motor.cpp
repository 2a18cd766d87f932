#include "animat/motor.hpp"

#include <algorithm>
#include <cmath>

namespace animat {

namespace {

// Steering split around a base step: equal parts plus/minus half the turn.
MotorStep steerToward(double bearing_error, double steer_gain) {
    double turn = std::clamp(steer_gain * bearing_error, -1.0, 1.0);
    MotorStep step;
    step.alpha = std::clamp(0.5 + turn / 2.0, 0.0, 1.0);
    step.beta = std::clamp(0.5 - turn / 2.0, 0.0, 1.0);
    return step;
}

}  // namespace

MotorStep stepForAction(ExternalAction action, std::optional<double> bearing_to_target, Rng& rng,
                        const MotorParams& params) {
    switch (action) {
        case ExternalAction::Wander: {
            MotorStep step;
            step.alpha = rng.nextUnit();
            step.beta = rng.nextUnit();
            return step;
        }
        case ExternalAction::Explore:
            return {params.explore_step, params.explore_step};
        case ExternalAction::ApproachFood:
        case ExternalAction::ApproachWater:
        case ExternalAction::ApproachFoodAndWater:
        case ExternalAction::ApproachGrass:
            if (bearing_to_target) return steerToward(*bearing_to_target, params.steer_gain);
            return {params.explore_step, params.explore_step};
        case ExternalAction::Runaway:
            if (bearing_to_target)
                return steerToward(wrapAngle(*bearing_to_target + M_PI), params.steer_gain);
            return {params.explore_step, params.explore_step};  // flee straight ahead
        case ExternalAction::AvoidObstacle: {
            // Fixed turn away from the obstacle side; obstacle dead ahead turns left.
            double away = (bearing_to_target.value_or(0.0) >= 0.0) ? -params.avoid_turn
                                                                   : params.avoid_turn;
            MotorStep step;
            step.alpha = away > 0.0 ? away : 0.0;
            step.beta = away > 0.0 ? 0.0 : -away;
            return step;
        }
        case ExternalAction::Eat:
        case ExternalAction::Drink:
        case ExternalAction::Rest:
            return {0.0, 0.0};
    }
    return {0.0, 0.0};
}

bool poseValid(const World& world, const Vec2& p, double body_radius) {
    if (p.z < world.bounds.min.z + body_radius || p.z > world.bounds.max.z - body_radius ||
        p.x < world.bounds.min.x + body_radius || p.x > world.bounds.max.x - body_radius)
        return false;
    for (const auto& ob : world.obstacles) {
        if (distance(p, ob.closestPoint(p)) < body_radius) return false;
        if (ob.contains(p)) return false;
    }
    return true;
}

StepOutcome applyStep(const Pose& pose, const MotorStep& step, double strength,
                      const MotorParams& params, const World& world) {
    StepOutcome out;
    out.pose.theta = normalizeTheta(pose.theta + (step.alpha - step.beta));
    double forward = (step.alpha + step.beta) / 2.0 * params.gain * strength;
    Vec2 dir = headingVec(out.pose.theta);
    Vec2 proposed = pose.position + dir * forward;

    if (forward <= 0.0) {
        out.pose.position = pose.position;
        return out;
    }

    // Walk the motion in substeps no longer than half the body radius so a
    // thin obstacle cannot be stepped over, then binary search the contact.
    double sub = std::max(params.body_radius * 0.5, 1e-3);
    int n = std::min(4096, std::max(1, static_cast<int>(std::ceil(forward / sub))));
    double lastValid = 0.0;
    double firstInvalid = -1.0;
    for (int k = 1; k <= n; ++k) {
        double t = static_cast<double>(k) / n;
        if (poseValid(world, pose.position + dir * (forward * t), params.body_radius)) {
            lastValid = t;
        } else {
            firstInvalid = t;
            break;
        }
    }

    if (firstInvalid < 0.0) {
        out.pose.position = proposed;
        out.moved_distance = forward;
        return out;
    }

    out.collided = true;
    double lo = lastValid;
    double hi = firstInvalid;
    for (int i = 0; i < 48; ++i) {
        double mid = (lo + hi) / 2.0;
        if (poseValid(world, pose.position + dir * (forward * mid), params.body_radius))
            lo = mid;
        else
            hi = mid;
    }
    double t = std::max(0.0, lo - 1e-9);
    out.pose.position = pose.position + dir * (forward * t);
    out.moved_distance = forward * t;
    return out;
}

}  // namespace animat
