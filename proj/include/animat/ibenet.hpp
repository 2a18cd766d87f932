#pragma once

#include <optional>
#include <vector>

#include "animat/blackboard.hpp"
#include "animat/perception.hpp"
#include "animat/physiology.hpp"

namespace animat {

struct IbenetParams {
    double persistence_bonus = 0.1;   // hysteresis added to the incumbent drive
    double risk_tolerance = 1.0;      // blob risk threshold scale against security
    int safe_ticks_to_resume = 10;    // blob-free ticks before a runaway completes
    double search_gain = 0.25;        // weight of need-only search congruents
    double search_min_need = 0.3;     // needs below this do not trigger a search
    double compound_switch_margin = 0.1;  // hysteresis between Drink and Eat at a compound source
    bool explore_enabled = true;      // false replaces Explore with Wander (batch comparison)
};

// The single motivational winner sent from the motivational node to the
// cognitive node.
struct DriveSignal {
    DriveKind kind = DriveKind::Thirst;
    double intensity = 0.0;               // in [0,1]
    std::optional<PerceptKind> percept;   // backing percept kind; empty for a search drive
    std::optional<int> target_id;
    std::optional<int> partner_id;        // food member of a compound target
};

// Combination of one internal and one external signal at the motivational
// node. Search congruents carry no percept; safety congruents carry the raw
// blob risk and whether it crossed the preemption threshold.
struct Congruent {
    DriveKind drive = DriveKind::Thirst;
    std::optional<PerceptKind> percept;
    double strength = 0.0;  // in [0,1]
    bool at_range = false;
    std::optional<int> target_id;
    std::optional<int> partner_id;
    double bearing = 0.0;
    bool remembered = false;
    double risk = 0.0;     // blob magnitude over distance (safety only)
    bool preempt = false;  // safety congruent past the risk threshold
};

struct SelectionState {
    std::optional<DriveSignal> current_drive;
    ExternalAction current_action = ExternalAction::Wander;
    std::optional<DriveKind> interrupted_drive;  // set while a runaway preempts a drive
    int safe_ticks = 0;                          // consecutive blob-free ticks during a runaway
    bool consummatory_lock = false;              // drive held fixed until satiation or target loss
    std::optional<ExternalAction> compound_phase;  // Drink or Eat at a compound source
};

// The drive bound to its matching percept, or flagged as a search when the
// drive has no percept to attach to.
struct BoundPreference {
    std::optional<Percept> percept;
    bool search = false;
};

// Test hook for conditioning work; no inhibition signals exist yet, so every
// reflex passes.
struct InhibitionSignals {
    std::vector<ExternalAction> suppress;
};

PerceptKind perceptKindForDrive(DriveKind kind);

// Internal-medium signals as motivational-board elements: one per need plus
// the safety exposure (1 - security).
std::vector<SolutionElement> proprioceive(const InternalState& state, long tick);

// The propio/extero/drive congruence behaviour. Emits need x percept
// products for the five drive/percept pairings, plus need-only search
// congruents for thirst and hunger when the matching percept is absent.
std::vector<Congruent> congruence(const InternalState& state, const std::vector<Percept>& percepts,
                                  const IbenetParams& params, double d_min);

double effectiveActivation(const Congruent& c, const SelectionState& state,
                           const IbenetParams& params);

// Winner-take-all over the congruents' effective activations, with the
// incumbent bonus, the safety preemption, the stickiness of an ongoing
// runaway, and the consummatory lock.
std::optional<DriveSignal> selectConsummatoryPreference(const std::vector<Congruent>& congruents,
                                                        const SelectionState& state,
                                                        const IbenetParams& params);

BoundPreference attentionToPreferences(const DriveSignal& drive,
                                       const std::vector<Percept>& percepts);

bool reflexAllowed(ExternalAction reflex, const InhibitionSignals& signals);

// Priority resolution to exactly one external action: obstacle reflex,
// runaway, the drive-backed behaviour, then wander.
ExternalAction externalBehaviourSelector(const std::optional<DriveSignal>& drive,
                                         const BoundPreference& bound,
                                         const Percept* obstacle_percept,
                                         const SelectionState& state, const IbenetParams& params,
                                         const InhibitionSignals& inhibition);

// One action-selection decision with everything the simulator and traces need.
struct Decision {
    ExternalAction action = ExternalAction::Wander;
    std::optional<DriveSignal> drive;
    std::optional<double> bearing;      // steering input handed to the motor
    std::optional<int> consume_target;  // stimulus depleted by a consummatory tick
    std::vector<Congruent> congruents;  // competition snapshot
    BoundPreference bound;
};

// The two-node network. Owns the cognitive and motivational boards and the
// selection state; tick() runs the full pipeline in fixed order.
class Ibenet {
  public:
    Ibenet(const IbenetParams& params, const PhysiologyParams& phys, double d_min)
        : params_(params), phys_(phys), d_min_(d_min),
          cognitive_(cognitiveLevels()), motivational_(motivationalLevels()) {}

    Decision tick(const std::vector<Percept>& percepts, const InternalState& internal, long tick);

    const Board& cognitiveBoard() const { return cognitive_; }
    const Board& motivationalBoard() const { return motivational_; }
    const SelectionState& state() const { return state_; }
    void setState(const SelectionState& s) { state_ = s; }
    const IbenetParams& params() const { return params_; }
    void setInhibition(const InhibitionSignals& signals) { inhibition_ = signals; }

  private:
    IbenetParams params_;
    PhysiologyParams phys_;
    double d_min_;
    Board cognitive_;
    Board motivational_;
    SelectionState state_;
    InhibitionSignals inhibition_;
};

}  // namespace animat
