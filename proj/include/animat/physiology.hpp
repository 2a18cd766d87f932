#pragma once

#include <string>

namespace animat {

// The eleven rows of the behaviour repertory.
enum class ExternalAction : int {
    AvoidObstacle = 0,
    Wander,
    Explore,
    ApproachFood,
    Eat,
    ApproachWater,
    Drink,
    ApproachFoodAndWater,
    ApproachGrass,
    Rest,
    Runaway,
};
constexpr int kExternalActionCount = 11;

const char* externalActionName(ExternalAction a);
bool isConsummatory(ExternalAction a);

// The internal medium. thirst/hunger/fatigue grow with need (1 = desperate);
// strength/lucidity/security shrink with trouble (1 = best off).
struct InternalState {
    double strength = 1.0;
    double lucidity = 1.0;
    double security = 1.0;
    double fatigue = 0.0;
    double thirst = 0.0;
    double hunger = 0.0;
};

struct PhysiologyParams {
    double thirst_rate = 0.001;        // need growth per tick
    double hunger_rate = 0.001;
    double fatigue_per_meter = 0.002;  // need growth per meter moved
    double drink_rate = 0.02;          // consummatory reduction per tick
    double eat_rate = 0.02;
    double rest_rate = 0.01;
    double critical_threshold = 0.9;   // above this, strength/lucidity drain
    double satiation_threshold = 0.1;  // at or below this, the need is satisfied
    double drain_rate = 0.005;
    double restore_rate = 0.001;
};

enum class NeedKind : int { Thirst = 0, Hunger, Fatigue };

// One tick of the internal dynamics: needs grow (fatigue with distance
// moved), strength and lucidity drain while any need is past critical and
// restore slowly while all needs are satisfied.
InternalState tickNeeds(const InternalState& state, double moved_distance,
                        const PhysiologyParams& params);

// Consummatory reduction for Eat/Drink/Rest; any other action is a no-op.
InternalState applyConsummation(const InternalState& state, ExternalAction action,
                                const PhysiologyParams& params);

// The animat dies when strength hits zero.
bool isDead(const InternalState& state);

bool isSatiated(const InternalState& state, NeedKind need, const PhysiologyParams& params);

double needValue(const InternalState& state, NeedKind need);

}  // namespace animat
