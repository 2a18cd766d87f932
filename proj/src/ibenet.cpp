#include "animat/ibenet.hpp"

#include <algorithm>
#include <cmath>

namespace animat {

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

DriveSignal signalFromCongruent(const Congruent& c, double intensity) {
    DriveSignal s;
    s.kind = c.drive;
    s.intensity = clamp01(intensity);
    s.percept = c.percept;
    s.target_id = c.target_id;
    s.partner_id = c.partner_id;
    return s;
}

bool driveSatiated(const InternalState& state, DriveKind kind, const PhysiologyParams& phys) {
    switch (kind) {
        case DriveKind::Thirst: return isSatiated(state, NeedKind::Thirst, phys);
        case DriveKind::Hunger: return isSatiated(state, NeedKind::Hunger, phys);
        case DriveKind::Fatigue: return isSatiated(state, NeedKind::Fatigue, phys);
        case DriveKind::ThirstAndHunger:
            return isSatiated(state, NeedKind::Thirst, phys) &&
                   isSatiated(state, NeedKind::Hunger, phys);
        case DriveKind::Safety: return false;
    }
    return false;
}

bool searchableDrive(DriveKind kind) {
    return kind == DriveKind::Thirst || kind == DriveKind::Hunger ||
           kind == DriveKind::ThirstAndHunger;
}

ExternalAction driveBackedAction(const DriveSignal& drive, const BoundPreference& bound,
                                 const SelectionState& state, const IbenetParams& params) {
    if (bound.search || !bound.percept) {
        if (searchableDrive(drive.kind) && params.explore_enabled) return ExternalAction::Explore;
        return ExternalAction::Wander;
    }
    const Percept& p = *bound.percept;
    switch (drive.kind) {
        case DriveKind::Thirst:
            return p.at_range ? ExternalAction::Drink : ExternalAction::ApproachWater;
        case DriveKind::Hunger:
            return p.at_range ? ExternalAction::Eat : ExternalAction::ApproachFood;
        case DriveKind::Fatigue:
            return p.at_range ? ExternalAction::Rest : ExternalAction::ApproachGrass;
        case DriveKind::ThirstAndHunger:
            return p.at_range ? state.compound_phase.value_or(ExternalAction::Drink)
                              : ExternalAction::ApproachFoodAndWater;
        case DriveKind::Safety: return ExternalAction::Runaway;
    }
    return ExternalAction::Wander;
}

struct SelectorContext {
    const std::optional<DriveSignal>* drive;
    const BoundPreference* bound;
    const Percept* obstacle;
    const SelectionState* state;
    const IbenetParams* params;
    const InhibitionSignals* inhibition;
};

std::optional<Reac> candidateAvoid(const SelectorContext& ctx, LevelId level, bool check_inhibition) {
    if (ctx.obstacle == nullptr || !ctx.obstacle->at_range) return std::nullopt;
    if (check_inhibition && !reflexAllowed(ExternalAction::AvoidObstacle, *ctx.inhibition))
        return std::nullopt;
    return Reac{0, {level, Tag{ExternalAction::AvoidObstacle}, 1.0}, 1.0};
}

std::optional<Reac> candidateRunaway(const SelectorContext& ctx, LevelId level,
                                     bool check_inhibition) {
    if (!*ctx.drive || (*ctx.drive)->kind != DriveKind::Safety) return std::nullopt;
    if (check_inhibition && !reflexAllowed(ExternalAction::Runaway, *ctx.inhibition))
        return std::nullopt;
    return Reac{0, {level, Tag{ExternalAction::Runaway}, 0.9}, 0.9};
}

std::optional<Reac> candidateDriveBacked(const SelectorContext& ctx, LevelId level) {
    if (!*ctx.drive || (*ctx.drive)->kind == DriveKind::Safety) return std::nullopt;
    ExternalAction a = driveBackedAction(**ctx.drive, *ctx.bound, *ctx.state, *ctx.params);
    return Reac{0, {level, Tag{a}, 0.5}, 0.5};
}

std::optional<Reac> candidateWander(LevelId level) {
    return Reac{0, {level, Tag{ExternalAction::Wander}, 0.1}, 0.1};
}

// The cognitive selector as production rules: candidates are exposed at the
// potential-actions level, the winner-take-all pass writes the action level.
std::vector<ElementalBehaviour<SelectorContext>> selectorBehaviours() {
    std::vector<ElementalBehaviour<SelectorContext>> rules;
    auto multi = CompetitionMode::multiWinner(0.0);
    auto wta = CompetitionMode::winnerTakesAll();
    rules.push_back({0, "potential_action", multi,
                     [](const Board&, const SelectorContext& ctx) {
                         return candidateAvoid(ctx, LevelId::PotentialActions, false);
                     }});
    rules.push_back({1, "potential_action", multi,
                     [](const Board&, const SelectorContext& ctx) {
                         return candidateRunaway(ctx, LevelId::PotentialActions, false);
                     }});
    rules.push_back({2, "potential_action", multi,
                     [](const Board&, const SelectorContext& ctx) {
                         return candidateDriveBacked(ctx, LevelId::PotentialActions);
                     }});
    rules.push_back({3, "potential_action", multi,
                     [](const Board&, const SelectorContext&) {
                         return candidateWander(LevelId::PotentialActions);
                     }});
    rules.push_back({4, "external_action", wta,
                     [](const Board&, const SelectorContext& ctx) {
                         return candidateAvoid(ctx, LevelId::Actions, true);
                     }});
    rules.push_back({5, "external_action", wta,
                     [](const Board&, const SelectorContext& ctx) {
                         return candidateRunaway(ctx, LevelId::Actions, true);
                     }});
    rules.push_back({6, "external_action", wta,
                     [](const Board&, const SelectorContext& ctx) {
                         return candidateDriveBacked(ctx, LevelId::Actions);
                     }});
    rules.push_back({7, "external_action", wta,
                     [](const Board&, const SelectorContext&) {
                         return candidateWander(LevelId::Actions);
                     }});
    return rules;
}

ExternalAction runSelector(Board& board, const SelectorContext& ctx, long tick) {
    runNode(board, selectorBehaviours(), ctx, tick);
    auto actions = board.readLevel(LevelId::Actions);
    if (actions.empty()) return ExternalAction::Wander;
    return std::get<ExternalAction>(actions.front().tag);
}

void updateCompoundPhase(SelectionState& st, const InternalState& internal,
                         const PhysiologyParams& phys, const IbenetParams& params) {
    bool canDrink = internal.thirst > phys.satiation_threshold;
    bool canEat = internal.hunger > phys.satiation_threshold;
    if (!canDrink && !canEat) {
        st.compound_phase.reset();
        return;
    }
    if (!canDrink) {
        st.compound_phase = ExternalAction::Eat;
        return;
    }
    if (!canEat) {
        st.compound_phase = ExternalAction::Drink;
        return;
    }
    if (!st.compound_phase) {
        st.compound_phase =
            internal.thirst >= internal.hunger ? ExternalAction::Drink : ExternalAction::Eat;
        return;
    }
    if (*st.compound_phase == ExternalAction::Drink &&
        internal.hunger - internal.thirst > params.compound_switch_margin) {
        st.compound_phase = ExternalAction::Eat;
    } else if (*st.compound_phase == ExternalAction::Eat &&
               internal.thirst - internal.hunger > params.compound_switch_margin) {
        st.compound_phase = ExternalAction::Drink;
    }
}

}  // namespace

PerceptKind perceptKindForDrive(DriveKind kind) {
    switch (kind) {
        case DriveKind::Thirst: return PerceptKind::Water;
        case DriveKind::Hunger: return PerceptKind::Food;
        case DriveKind::ThirstAndHunger: return PerceptKind::FoodAndWater;
        case DriveKind::Fatigue: return PerceptKind::Grass;
        case DriveKind::Safety: return PerceptKind::Blob;
    }
    return PerceptKind::Water;
}

std::vector<SolutionElement> proprioceive(const InternalState& state, long tick) {
    std::vector<SolutionElement> out;
    auto add = [&](DriveKind kind, double certainty) {
        out.push_back({LevelId::MotInternalPerceptions, Tag{kind}, clamp01(certainty), tick});
    };
    add(DriveKind::Thirst, state.thirst);
    add(DriveKind::Hunger, state.hunger);
    add(DriveKind::Fatigue, state.fatigue);
    add(DriveKind::Safety, 1.0 - state.security);
    return out;
}

std::vector<Congruent> congruence(const InternalState& state, const std::vector<Percept>& percepts,
                                  const IbenetParams& params, double d_min) {
    std::vector<Congruent> out;

    auto pairUp = [&](DriveKind drive, PerceptKind kind, double need) {
        const Percept* p = findPercept(percepts, kind);
        if (p == nullptr || need <= 0.0 || p->value <= 0.0) return p;
        Congruent c;
        c.drive = drive;
        c.percept = kind;
        c.strength = clamp01(need * p->value);
        c.at_range = p->at_range;
        c.target_id = p->target_id;
        c.partner_id = p->partner_id;
        c.bearing = p->bearing;
        c.remembered = p->remembered;
        out.push_back(c);
        return p;
    };

    const Percept* water = pairUp(DriveKind::Thirst, PerceptKind::Water, state.thirst);
    const Percept* food = pairUp(DriveKind::Hunger, PerceptKind::Food, state.hunger);
    pairUp(DriveKind::ThirstAndHunger, PerceptKind::FoodAndWater,
           std::min(state.thirst, state.hunger));
    pairUp(DriveKind::Fatigue, PerceptKind::Grass, state.fatigue);

    // Safety: the congruent carries the raw magnitude/distance risk; it only
    // competes once the risk crosses the tolerance scaled by security.
    if (const Percept* blob = findPercept(percepts, PerceptKind::Blob)) {
        double exposure = 1.0 - state.security;
        double risk = 0.0;
        if (!blob->remembered)
            risk = blob->nearest_magnitude / std::max(blob->nearest_distance, d_min);
        bool preempt = risk > params.risk_tolerance * state.security;
        double strength = clamp01(exposure * blob->value);
        if (strength > 0.0 || preempt) {
            Congruent c;
            c.drive = DriveKind::Safety;
            c.percept = PerceptKind::Blob;
            c.strength = strength;
            c.at_range = blob->at_range;
            c.target_id = blob->target_id;
            c.bearing = blob->bearing;
            c.remembered = blob->remembered;
            c.risk = risk;
            c.preempt = preempt;
            out.push_back(c);
        }
    }

    // Need-only search congruents: an imperious thirst or hunger with no
    // matching signal still competes, backing the exploration behaviour.
    auto searchFor = [&](DriveKind drive, const Percept* matching, double need) {
        if (matching != nullptr || need < params.search_min_need) return;
        Congruent c;
        c.drive = drive;
        c.strength = clamp01(need * params.search_gain);
        out.push_back(c);
    };
    searchFor(DriveKind::Thirst, water, state.thirst);
    searchFor(DriveKind::Hunger, food, state.hunger);

    return out;
}

double effectiveActivation(const Congruent& c, const SelectionState& state,
                           const IbenetParams& params) {
    if (c.preempt) return 1.0;
    double a = c.strength;
    if (state.current_drive && state.current_drive->kind == c.drive &&
        c.drive != DriveKind::Safety)
        a += params.persistence_bonus;
    return a;
}

std::optional<DriveSignal> selectConsummatoryPreference(const std::vector<Congruent>& congruents,
                                                        const SelectionState& state,
                                                        const IbenetParams& params) {
    // Aversive preemption overrides everything, including consummatory locks.
    const Congruent* fired = nullptr;
    for (const auto& c : congruents) {
        if (c.preempt && (fired == nullptr || c.risk > fired->risk)) fired = &c;
    }
    if (fired != nullptr) return signalFromCongruent(*fired, 1.0);

    // An ongoing runaway stays in charge until enough blob-free ticks passed
    // (the caller clears current_drive when that happens).
    if (state.current_drive && state.current_drive->kind == DriveKind::Safety) {
        for (const auto& c : congruents)
            if (c.drive == DriveKind::Safety) return signalFromCongruent(c, 1.0);
        DriveSignal s = *state.current_drive;
        s.intensity = 1.0;
        return s;
    }

    // A consummatory action in progress holds its drive fixed.
    if (state.consummatory_lock && state.current_drive &&
        state.current_drive->kind != DriveKind::Safety) {
        for (const auto& c : congruents) {
            if (c.drive == state.current_drive->kind)
                return signalFromCongruent(c, effectiveActivation(c, state, params));
        }
    }

    // Open winner-take-all; unfired safety congruents do not compete.
    LReac lreac{"consummatory_preference", {}};
    for (const auto& c : congruents) {
        if (c.drive == DriveKind::Safety) continue;
        Reac r;
        r.behaviour_id = static_cast<int>(c.drive);
        r.action = {LevelId::Drive, Tag{c.drive}, 0.0};
        r.activation = effectiveActivation(c, state, params);
        lreac.registers.push_back(r);
    }
    auto winners = compete(lreac, CompetitionMode::winnerTakesAll());
    if (winners.empty()) return std::nullopt;
    for (const auto& c : congruents) {
        if (static_cast<int>(c.drive) == winners.front().behaviour_id)
            return signalFromCongruent(c, winners.front().activation);
    }
    return std::nullopt;
}

BoundPreference attentionToPreferences(const DriveSignal& drive,
                                       const std::vector<Percept>& percepts) {
    BoundPreference bound;
    PerceptKind kind = drive.percept.value_or(perceptKindForDrive(drive.kind));
    if (const Percept* p = findPercept(percepts, kind))
        bound.percept = *p;
    else
        bound.search = true;
    return bound;
}

bool reflexAllowed(ExternalAction reflex, const InhibitionSignals& signals) {
    return std::find(signals.suppress.begin(), signals.suppress.end(), reflex) ==
           signals.suppress.end();
}

ExternalAction externalBehaviourSelector(const std::optional<DriveSignal>& drive,
                                         const BoundPreference& bound,
                                         const Percept* obstacle_percept,
                                         const SelectionState& state, const IbenetParams& params,
                                         const InhibitionSignals& inhibition) {
    Board scratch(cognitiveLevels());
    SelectorContext ctx{&drive, &bound, obstacle_percept, &state, &params, &inhibition};
    return runSelector(scratch, ctx, 0);
}

Decision Ibenet::tick(const std::vector<Percept>& percepts, const InternalState& internal,
                      long tick) {
    cognitive_.expire(tick);
    motivational_.expire(tick);

    // Exteroception and perceptual persistence on the cognitive board, then
    // transmission of the external picture to the motivational node.
    for (const auto& p : percepts) {
        if (!p.remembered)
            cognitive_.post({LevelId::ExternalPerceptions, Tag{p.kind}, clamp01(p.value), tick});
        cognitive_.post({LevelId::PerceptualPersistents, Tag{p.kind}, clamp01(p.value), tick});
        if (p.kind != PerceptKind::Obstacle)
            motivational_.post({LevelId::MotExternalPerceptions, Tag{p.kind}, clamp01(p.value), tick});
    }
    for (const auto& el : proprioceive(internal, tick)) motivational_.post(el);

    Decision decision;
    decision.congruents = congruence(internal, percepts, params_, d_min_);
    for (const auto& c : decision.congruents) {
        motivational_.post({LevelId::PropioExteroDriveCongruents,
                            Tag{CongruentTag{c.drive, c.percept}}, clamp01(c.strength), tick});
    }

    SelectionState st = state_;

    // Runaway completion: once the blob has stayed out of sight for K full
    // ticks, the interrupted drive re-enters competition.
    if (st.current_drive && st.current_drive->kind == DriveKind::Safety) {
        if (st.safe_ticks >= params_.safe_ticks_to_resume) {
            st.current_drive.reset();
            st.interrupted_drive.reset();
            st.safe_ticks = 0;
        } else {
            const Percept* blob = findPercept(percepts, PerceptKind::Blob);
            bool fresh_blob = blob != nullptr && !blob->remembered;
            st.safe_ticks = fresh_blob ? 0 : st.safe_ticks + 1;
        }
    }

    // Consummatory lock maintenance: released on satiation (drive completed),
    // on target loss, or when the target falls out of range.
    if (st.consummatory_lock) {
        bool keep = false;
        if (st.current_drive && st.current_drive->kind != DriveKind::Safety) {
            DriveKind kind = st.current_drive->kind;
            if (driveSatiated(internal, kind, phys_)) {
                st.current_drive.reset();
            } else {
                const Percept* p = findPercept(percepts, perceptKindForDrive(kind));
                keep = p != nullptr && !p->remembered && p->at_range;
            }
        }
        st.consummatory_lock = keep;
    }

    decision.drive = selectConsummatoryPreference(decision.congruents, st, params_);

    // Safety preemption bookkeeping: remember what was interrupted.
    if (decision.drive && decision.drive->kind == DriveKind::Safety &&
        (!st.current_drive || st.current_drive->kind != DriveKind::Safety)) {
        if (st.current_drive) st.interrupted_drive = st.current_drive->kind;
        st.safe_ticks = 0;
        st.consummatory_lock = false;
        st.compound_phase.reset();
    }
    st.current_drive = decision.drive;

    if (decision.drive) {
        motivational_.post({LevelId::Drive, Tag{decision.drive->kind},
                            clamp01(decision.drive->intensity), tick});
        cognitive_.post({LevelId::ConsummatoryPreferents, Tag{decision.drive->kind},
                         clamp01(decision.drive->intensity), tick});
        decision.bound = attentionToPreferences(*decision.drive, percepts);
        std::optional<PerceptKind> boundKind;
        if (decision.bound.percept) boundKind = decision.bound.percept->kind;
        cognitive_.post({LevelId::DrivePerceptionCongruents,
                         Tag{CongruentTag{decision.drive->kind, boundKind}},
                         clamp01(decision.drive->intensity), tick});
    }

    // Compound sources alternate Drink and Eat with hysteresis while at range.
    if (decision.drive && decision.drive->kind == DriveKind::ThirstAndHunger &&
        decision.bound.percept && decision.bound.percept->at_range) {
        updateCompoundPhase(st, internal, phys_, params_);
    } else {
        st.compound_phase.reset();
    }

    const Percept* obstacle = findPercept(percepts, PerceptKind::Obstacle);
    SelectorContext ctx{&decision.drive, &decision.bound, obstacle, &st, &params_, &inhibition_};
    decision.action = runSelector(cognitive_, ctx, tick);

    // Steering input and consummation target for the motor/world stage.
    switch (decision.action) {
        case ExternalAction::AvoidObstacle:
            if (obstacle != nullptr) decision.bearing = obstacle->bearing;
            break;
        case ExternalAction::Runaway:
            // Bearing to the blob, seen or remembered; with no trace of it
            // left, the flight continues straight ahead.
            if (const Percept* blob = findPercept(percepts, PerceptKind::Blob))
                decision.bearing = blob->bearing;
            break;
        case ExternalAction::ApproachFood:
        case ExternalAction::ApproachWater:
        case ExternalAction::ApproachFoodAndWater:
        case ExternalAction::ApproachGrass:
            if (decision.bound.percept) decision.bearing = decision.bound.percept->bearing;
            break;
        case ExternalAction::Drink:
            if (decision.bound.percept) decision.consume_target = decision.bound.percept->target_id;
            break;
        case ExternalAction::Eat:
            if (decision.bound.percept) {
                decision.consume_target =
                    decision.drive && decision.drive->kind == DriveKind::ThirstAndHunger
                        ? decision.bound.percept->partner_id
                        : decision.bound.percept->target_id;
            }
            break;
        case ExternalAction::Rest:
            if (decision.bound.percept) decision.consume_target = decision.bound.percept->target_id;
            break;
        default: break;
    }

    st.consummatory_lock = isConsummatory(decision.action);
    st.current_action = decision.action;
    state_ = st;
    return decision;
}

}  // namespace animat
