#include "animat/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace animat {

namespace {

bool finite(double v) { return std::isfinite(v); }

void checkRange(std::vector<std::string>& errors, const std::string& field, double v, double lo,
                double hi) {
    if (!finite(v) || v < lo || v > hi) {
        errors.push_back(field + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                         "]");
    }
}

void checkPositive(std::vector<std::string>& errors, const std::string& field, double v) {
    if (!finite(v) || v <= 0.0) errors.push_back(field + " must be > 0");
}

void checkNonNegative(std::vector<std::string>& errors, const std::string& field, double v) {
    if (!finite(v) || v < 0.0) errors.push_back(field + " must be >= 0");
}

}  // namespace

std::vector<std::string> validateScenario(const Scenario& sc) {
    std::vector<std::string> errors;

    if (sc.max_ticks <= 0) errors.push_back("max_ticks must be > 0");

    const Rect& b = sc.world.bounds;
    if (!(finite(b.min.z) && finite(b.min.x) && finite(b.max.z) && finite(b.max.x)) ||
        b.min.z >= b.max.z || b.min.x >= b.max.x) {
        errors.push_back("world.bounds must have min < max componentwise");
        return errors;  // nothing else is checkable against broken bounds
    }

    std::vector<int> ids;
    for (std::size_t i = 0; i < sc.world.stimuli.size(); ++i) {
        const Stimulus& s = sc.world.stimuli[i];
        std::string path = "world.stimuli[" + std::to_string(i) + "]";
        checkPositive(errors, path + ".magnitude", s.magnitude);
        checkNonNegative(errors, path + ".body_radius", s.body_radius);
        if (!b.contains(s.position)) errors.push_back(path + ".position outside world.bounds");
        if (std::find(ids.begin(), ids.end(), s.id) != ids.end())
            errors.push_back(path + ".id duplicates another stimulus id");
        ids.push_back(s.id);
    }
    for (std::size_t i = 0; i < sc.world.obstacles.size(); ++i) {
        const Obstacle& o = sc.world.obstacles[i];
        std::string path = "world.obstacles[" + std::to_string(i) + "]";
        if (o.min.z >= o.max.z || o.min.x >= o.max.x)
            errors.push_back(path + " must have min < max componentwise");
        if (!b.contains(o.min) || !b.contains(o.max))
            errors.push_back(path + " outside world.bounds");
    }

    checkRange(errors, "animat.internal.strength", sc.initial_state.strength, 0.0, 1.0);
    checkRange(errors, "animat.internal.lucidity", sc.initial_state.lucidity, 0.0, 1.0);
    checkRange(errors, "animat.internal.security", sc.initial_state.security, 0.0, 1.0);
    checkRange(errors, "animat.internal.fatigue", sc.initial_state.fatigue, 0.0, 1.0);
    checkRange(errors, "animat.internal.thirst", sc.initial_state.thirst, 0.0, 1.0);
    checkRange(errors, "animat.internal.hunger", sc.initial_state.hunger, 0.0, 1.0);
    if (!finite(sc.initial_pose.theta)) errors.push_back("animat.theta must be finite");
    if (!b.contains(sc.initial_pose.position)) errors.push_back("animat.position outside world.bounds");
    if (!poseValid(sc.world, sc.initial_pose.position, sc.motor.body_radius))
        errors.push_back("animat.position collides with an obstacle or wall");

    checkPositive(errors, "perception.base_radius", sc.perception.base_radius);
    checkPositive(errors, "perception.d_min", sc.perception.d_min);
    if (!finite(sc.perception.memory_decay) || sc.perception.memory_decay <= 0.0 ||
        sc.perception.memory_decay >= 1.0)
        errors.push_back("perception.memory_decay must be in (0, 1)");
    checkPositive(errors, "perception.forget_eps", sc.perception.forget_eps);
    checkNonNegative(errors, "perception.pairing_distance", sc.perception.pairing_distance);
    checkNonNegative(errors, "perception.at_range_margin", sc.perception.at_range_margin);

    checkNonNegative(errors, "physiology.thirst_rate", sc.physiology.thirst_rate);
    checkNonNegative(errors, "physiology.hunger_rate", sc.physiology.hunger_rate);
    checkNonNegative(errors, "physiology.fatigue_per_meter", sc.physiology.fatigue_per_meter);
    checkNonNegative(errors, "physiology.drink_rate", sc.physiology.drink_rate);
    checkNonNegative(errors, "physiology.eat_rate", sc.physiology.eat_rate);
    checkNonNegative(errors, "physiology.rest_rate", sc.physiology.rest_rate);
    checkNonNegative(errors, "physiology.drain_rate", sc.physiology.drain_rate);
    checkNonNegative(errors, "physiology.restore_rate", sc.physiology.restore_rate);
    if (!(sc.physiology.satiation_threshold > 0.0 &&
          sc.physiology.satiation_threshold < sc.physiology.critical_threshold &&
          sc.physiology.critical_threshold < 1.0))
        errors.push_back("physiology must satisfy 0 < satiation_threshold < critical_threshold < 1");

    checkPositive(errors, "motor.body_radius", sc.motor.body_radius);
    checkPositive(errors, "motor.gain", sc.motor.gain);
    checkRange(errors, "motor.explore_step", sc.motor.explore_step, 0.0, 1.0);
    checkPositive(errors, "motor.steer_gain", sc.motor.steer_gain);
    checkRange(errors, "motor.avoid_turn", sc.motor.avoid_turn, 0.0, 1.0);

    if (!finite(sc.selection.persistence_bonus) || sc.selection.persistence_bonus < 0.0 ||
        sc.selection.persistence_bonus >= 1.0)
        errors.push_back("selection.persistence_bonus must be in [0, 1)");
    checkNonNegative(errors, "selection.risk_tolerance", sc.selection.risk_tolerance);
    if (sc.selection.safe_ticks_to_resume < 1)
        errors.push_back("selection.safe_ticks_to_resume must be >= 1");
    checkRange(errors, "selection.search_gain", sc.selection.search_gain, 0.0, 1.0);
    checkRange(errors, "selection.search_min_need", sc.selection.search_min_need, 0.0, 1.0);
    checkRange(errors, "selection.compound_switch_margin", sc.selection.compound_switch_margin,
               0.0, 1.0);

    for (std::size_t i = 0; i < sc.events.size(); ++i) {
        std::string path = "events[" + std::to_string(i) + "]";
        if (sc.events[i].tick < 0) errors.push_back(path + ".tick must be >= 0");
        if (i > 0 && sc.events[i].tick < sc.events[i - 1].tick)
            errors.push_back(path + ".tick out of order (events must be sorted by tick)");
        if (const auto* set = std::get_if<SetInternalEvent>(&sc.events[i].event)) {
            static const char* fields[] = {"strength", "lucidity", "security",
                                           "fatigue",  "thirst",   "hunger"};
            if (std::find_if(std::begin(fields), std::end(fields), [&](const char* f) {
                    return set->field == f;
                }) == std::end(fields))
                errors.push_back(path + ".set_internal.field unknown: " + set->field);
            checkRange(errors, path + ".set_internal.value", set->value, 0.0, 1.0);
        }
        if (const auto* add = std::get_if<AddStimulusEvent>(&sc.events[i].event)) {
            checkPositive(errors, path + ".add_stimulus.magnitude", add->stimulus.magnitude);
            if (!b.contains(add->stimulus.position))
                errors.push_back(path + ".add_stimulus.position outside world.bounds");
        }
        if (const auto* move = std::get_if<MoveStimulusEvent>(&sc.events[i].event)) {
            if (!b.contains(move->position))
                errors.push_back(path + ".move_stimulus.position outside world.bounds");
        }
    }

    return errors;
}

Simulation::Simulation(const Scenario& scenario)
    : scenario_(scenario),
      world_(scenario.world),
      pose_(scenario.initial_pose),
      internal_(scenario.initial_state),
      ibenet_(scenario.selection, scenario.physiology, scenario.perception.d_min),
      rng_(scenario.seed) {
    pose_.theta = normalizeTheta(pose_.theta);
    trace_.reserve(static_cast<std::size_t>(scenario.max_ticks));
}

void Simulation::applyEvents() {
    while (next_event_ < scenario_.events.size() && scenario_.events[next_event_].tick <= tick_) {
        const auto& ev = scenario_.events[next_event_].event;
        if (const auto* move = std::get_if<MoveStimulusEvent>(&ev)) {
            if (Stimulus* s = world_.findStimulus(move->id)) s->position = move->position;
        } else if (const auto* add = std::get_if<AddStimulusEvent>(&ev)) {
            if (world_.findStimulus(add->stimulus.id) == nullptr)
                world_.stimuli.push_back(add->stimulus);
        } else if (const auto* rem = std::get_if<RemoveStimulusEvent>(&ev)) {
            world_.stimuli.erase(std::remove_if(world_.stimuli.begin(), world_.stimuli.end(),
                                                [&](const Stimulus& s) { return s.id == rem->id; }),
                                 world_.stimuli.end());
        } else if (const auto* set = std::get_if<SetInternalEvent>(&ev)) {
            if (set->field == "strength") internal_.strength = set->value;
            else if (set->field == "lucidity") internal_.lucidity = set->value;
            else if (set->field == "security") internal_.security = set->value;
            else if (set->field == "fatigue") internal_.fatigue = set->value;
            else if (set->field == "thirst") internal_.thirst = set->value;
            else if (set->field == "hunger") internal_.hunger = set->value;
        }
        ++next_event_;
    }
}

void Simulation::tick() {
    if (terminated_) return;

    applyEvents();

    SenseResult sensed = sense(world_, pose_, internal_.lucidity, scenario_.motor.body_radius,
                               memory_, scenario_.perception);
    memory_ = sensed.memory;

    Decision decision = ibenet_.tick(sensed.percepts, internal_, tick_);

    MotorStep step = stepForAction(decision.action, decision.bearing, rng_, scenario_.motor);
    StepOutcome outcome = applyStep(pose_, step, internal_.strength, scenario_.motor, world_);
    pose_ = outcome.pose;

    if (isConsummatory(decision.action) && decision.consume_target) {
        internal_ = applyConsummation(internal_, decision.action, scenario_.physiology);
        double rate = decision.action == ExternalAction::Drink ? scenario_.physiology.drink_rate
                      : decision.action == ExternalAction::Eat ? scenario_.physiology.eat_rate
                                                               : scenario_.physiology.rest_rate;
        world_.depleteStimulus(*decision.consume_target, rate);
    }

    internal_ = tickNeeds(internal_, outcome.moved_distance, scenario_.physiology);

    TraceEvent ev;
    ev.tick = tick_;
    ev.pose = pose_;
    ev.action = decision.action;
    if (decision.drive) {
        ev.drive = decision.drive->kind;
        ev.drive_activation = decision.drive->intensity;
    }
    ev.internal = internal_;
    for (const auto& p : sensed.percepts)
        ev.percept_values[static_cast<int>(p.kind)] = p.value;
    ev.collision = outcome.collided;
    trace_.push_back(ev);

    ++tick_;
    if (isDead(internal_)) {
        terminated_ = true;
        termination_ = Termination::Death;
    } else if (tick_ >= scenario_.max_ticks) {
        terminated_ = true;
        termination_ = Termination::MaxTicks;
    }
}

RunResult Simulation::takeResult() {
    RunResult result;
    result.events = std::move(trace_);
    result.termination = termination_;
    result.final_state = internal_;
    result.final_pose = pose_;
    return result;
}

RunResult run(const Scenario& scenario) {
    auto errors = validateScenario(scenario);
    if (!errors.empty()) {
        std::string message = "invalid scenario:";
        for (const auto& e : errors) message += "\n  " + e;
        throw std::invalid_argument(message);
    }
    Simulation sim(scenario);
    while (!sim.terminated()) sim.tick();
    return sim.takeResult();
}

std::vector<ActionSegment> actionPattern(const RunResult& result) {
    std::vector<ActionSegment> pattern;
    for (const auto& ev : result.events) {
        if (!pattern.empty() && pattern.back().action == ev.action) {
            pattern.back().end_tick = ev.tick;
        } else {
            pattern.push_back({ev.action, ev.tick, ev.tick});
        }
    }
    return pattern;
}

}  // namespace animat
