#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "animat/ibenet.hpp"
#include "animat/motor.hpp"
#include "animat/perception.hpp"
#include "animat/physiology.hpp"
#include "animat/rng.hpp"
#include "animat/world.hpp"

namespace animat {

// Scripted scenario events, applied at the start of their tick.
struct MoveStimulusEvent {
    int id = 0;
    Vec2 position;
};
struct AddStimulusEvent {
    Stimulus stimulus;
};
struct RemoveStimulusEvent {
    int id = 0;
};
struct SetInternalEvent {
    std::string field;  // strength, lucidity, security, fatigue, thirst, hunger
    double value = 0.0;
};

struct ScenarioEvent {
    long tick = 0;
    std::variant<MoveStimulusEvent, AddStimulusEvent, RemoveStimulusEvent, SetInternalEvent> event;
};

struct Scenario {
    std::string name;
    World world;
    Pose initial_pose;
    InternalState initial_state;
    PerceptionParams perception;
    PhysiologyParams physiology;
    MotorParams motor;
    IbenetParams selection;
    std::uint64_t seed = 0;
    long max_ticks = 1000;
    std::vector<ScenarioEvent> events;  // sorted by tick
};

// Field-level validation; empty result means the scenario is runnable.
std::vector<std::string> validateScenario(const Scenario& scenario);

// Per-tick record: the unit of reproducibility.
struct TraceEvent {
    long tick = 0;
    Pose pose;
    ExternalAction action = ExternalAction::Wander;
    std::optional<DriveKind> drive;
    double drive_activation = 0.0;
    InternalState internal;
    std::array<double, kPerceptKindCount> percept_values{};
    bool collision = false;
};

enum class Termination { MaxTicks, Death };

struct RunResult {
    std::vector<TraceEvent> events;
    Termination termination = Termination::MaxTicks;
    InternalState final_state;
    Pose final_pose;
};

// One simulation: owns the world copy, the network, the seeded generator and
// the trace. Single-threaded; copies may run in parallel with other seeds.
class Simulation {
  public:
    explicit Simulation(const Scenario& scenario);

    bool terminated() const { return terminated_; }
    Termination termination() const { return termination_; }
    long currentTick() const { return tick_; }

    // One perception-selection-action cycle; appends exactly one TraceEvent.
    void tick();

    RunResult takeResult();

    const World& world() const { return world_; }
    const InternalState& internal() const { return internal_; }
    const Pose& pose() const { return pose_; }
    const Ibenet& network() const { return ibenet_; }

  private:
    void applyEvents();

    Scenario scenario_;
    World world_;
    Pose pose_;
    InternalState internal_;
    PerceptMemory memory_;
    Ibenet ibenet_;
    Rng rng_;
    long tick_ = 0;
    std::size_t next_event_ = 0;
    bool terminated_ = false;
    Termination termination_ = Termination::MaxTicks;
    std::vector<TraceEvent> trace_;
};

// Runs a validated scenario to completion (throws std::invalid_argument on a
// scenario that fails validation).
RunResult run(const Scenario& scenario);

struct ActionSegment {
    ExternalAction action = ExternalAction::Wander;
    long start_tick = 0;
    long end_tick = 0;  // inclusive
};

// Run-length encoding of the selected-action sequence (the behaviour pattern).
std::vector<ActionSegment> actionPattern(const RunResult& result);

}  // namespace animat
