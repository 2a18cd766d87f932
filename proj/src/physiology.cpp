#include "animat/physiology.hpp"

#include <algorithm>

namespace animat {

namespace {
double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }
}  // namespace

const char* externalActionName(ExternalAction a) {
    switch (a) {
        case ExternalAction::AvoidObstacle: return "avoid_obstacle";
        case ExternalAction::Wander: return "wander";
        case ExternalAction::Explore: return "explore";
        case ExternalAction::ApproachFood: return "approach_food";
        case ExternalAction::Eat: return "eat";
        case ExternalAction::ApproachWater: return "approach_water";
        case ExternalAction::Drink: return "drink";
        case ExternalAction::ApproachFoodAndWater: return "approach_food_and_water";
        case ExternalAction::ApproachGrass: return "approach_grass";
        case ExternalAction::Rest: return "rest";
        case ExternalAction::Runaway: return "runaway";
    }
    return "?";
}

bool isConsummatory(ExternalAction a) {
    return a == ExternalAction::Eat || a == ExternalAction::Drink || a == ExternalAction::Rest;
}

InternalState tickNeeds(const InternalState& state, double moved_distance,
                        const PhysiologyParams& params) {
    InternalState s = state;
    s.thirst = clamp01(s.thirst + params.thirst_rate);
    s.hunger = clamp01(s.hunger + params.hunger_rate);
    s.fatigue = clamp01(s.fatigue + params.fatigue_per_meter * moved_distance);

    double worst = std::max({s.thirst, s.hunger, s.fatigue});
    if (worst > params.critical_threshold) {
        s.strength = clamp01(s.strength - params.drain_rate);
        s.lucidity = clamp01(s.lucidity - params.drain_rate);
    } else if (s.thirst <= params.satiation_threshold && s.hunger <= params.satiation_threshold &&
               s.fatigue <= params.satiation_threshold) {
        s.strength = clamp01(s.strength + params.restore_rate);
        s.lucidity = clamp01(s.lucidity + params.restore_rate);
    }
    return s;
}

InternalState applyConsummation(const InternalState& state, ExternalAction action,
                                const PhysiologyParams& params) {
    InternalState s = state;
    switch (action) {
        case ExternalAction::Drink: s.thirst = clamp01(s.thirst - params.drink_rate); break;
        case ExternalAction::Eat: s.hunger = clamp01(s.hunger - params.eat_rate); break;
        case ExternalAction::Rest: s.fatigue = clamp01(s.fatigue - params.rest_rate); break;
        default: break;  // appetitive behaviours do not reduce the need directly
    }
    return s;
}

bool isDead(const InternalState& state) { return state.strength <= 0.0; }

double needValue(const InternalState& state, NeedKind need) {
    switch (need) {
        case NeedKind::Thirst: return state.thirst;
        case NeedKind::Hunger: return state.hunger;
        case NeedKind::Fatigue: return state.fatigue;
    }
    return 0.0;
}

bool isSatiated(const InternalState& state, NeedKind need, const PhysiologyParams& params) {
    return needValue(state, need) <= params.satiation_threshold;
}

}  // namespace animat
