#include <doctest.h>

#include <cmath>

#include "animat/ibenet.hpp"
#include "animat/rng.hpp"

using namespace animat;

namespace {

Percept makePercept(PerceptKind kind, double value, double dist, double bearing, bool at_range,
                    std::optional<int> target = std::nullopt, bool remembered = false,
                    double magnitude = 1.0) {
    Percept p;
    p.kind = kind;
    p.value = value;
    p.nearest_distance = dist;
    p.bearing = bearing;
    p.at_range = at_range;
    p.target_id = target;
    p.remembered = remembered;
    p.nearest_magnitude = magnitude;
    return p;
}

Congruent makeCongruent(DriveKind drive, double strength) {
    Congruent c;
    c.drive = drive;
    c.percept = perceptKindForDrive(drive);
    c.strength = strength;
    return c;
}

const Congruent* findCongruent(const std::vector<Congruent>& cs, DriveKind kind) {
    for (const auto& c : cs)
        if (c.drive == kind) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("proprioceive maps needs to certainties in drive order") {
    InternalState zero;
    zero.security = 1.0;
    auto elements = proprioceive(zero, 0);
    REQUIRE(elements.size() == 4);
    for (const auto& el : elements) CHECK(el.certainty == doctest::Approx(0.0));

    InternalState s;
    s.thirst = 0.8;
    s.hunger = 0.2;
    s.fatigue = 0.4;
    s.security = 0.7;
    elements = proprioceive(s, 0);
    REQUIRE(elements.size() == 4);
    CHECK(std::get<DriveKind>(elements[0].tag) == DriveKind::Thirst);
    CHECK(elements[0].certainty == doctest::Approx(0.8));
    CHECK(std::get<DriveKind>(elements[1].tag) == DriveKind::Hunger);
    CHECK(elements[1].certainty == doctest::Approx(0.2));
    CHECK(std::get<DriveKind>(elements[2].tag) == DriveKind::Fatigue);
    CHECK(elements[2].certainty == doctest::Approx(0.4));
    CHECK(std::get<DriveKind>(elements[3].tag) == DriveKind::Safety);
    CHECK(elements[3].certainty == doctest::Approx(0.3));

    // Ordering is deterministic by drive ordinal.
    for (std::size_t i = 1; i < elements.size(); ++i)
        CHECK(tagLess(elements[i - 1].tag, elements[i].tag));
}

TEST_CASE("congruence: product rule") {
    InternalState s;
    s.thirst = 0.8;
    std::vector<Percept> percepts{makePercept(PerceptKind::Water, 0.5, 4.0, 0.2, false, 1)};
    auto congruents = congruence(s, percepts, IbenetParams{}, 0.5);
    const Congruent* thirst = findCongruent(congruents, DriveKind::Thirst);
    REQUIRE(thirst != nullptr);
    CHECK(thirst->strength == doctest::Approx(0.40));
    CHECK(thirst->target_id == 1);
}

TEST_CASE("congruence: missing factor emits nothing") {
    InternalState s;
    s.thirst = 0.8;
    auto congruents = congruence(s, {}, IbenetParams{}, 0.5);
    // No water percept: only the need-only search congruent may exist.
    const Congruent* thirst = findCongruent(congruents, DriveKind::Thirst);
    REQUIRE(thirst != nullptr);
    CHECK_FALSE(thirst->percept.has_value());
    CHECK(thirst->strength == doctest::Approx(0.8 * IbenetParams{}.search_gain));

    s.thirst = 0.0;
    s.hunger = 0.5;
    std::vector<Percept> percepts{makePercept(PerceptKind::Water, 0.5, 4.0, 0.0, false, 1)};
    congruents = congruence(s, percepts, IbenetParams{}, 0.5);
    CHECK(findCongruent(congruents, DriveKind::Thirst) == nullptr);  // zero need, no product
}

TEST_CASE("congruence: search congruent needs an imperious need") {
    InternalState s;
    s.thirst = 0.2;  // below search_min_need 0.3
    auto congruents = congruence(s, {}, IbenetParams{}, 0.5);
    CHECK(findCongruent(congruents, DriveKind::Thirst) == nullptr);
}

TEST_CASE("congruence: compound congruent uses min of the needs") {
    InternalState s;
    s.thirst = 0.6;
    s.hunger = 0.6;
    std::vector<Percept> percepts{
        makePercept(PerceptKind::Water, 0.3, 6.0, 0.1, false, 1),
        makePercept(PerceptKind::Food, 0.3, 6.0, -0.1, false, 2),
        makePercept(PerceptKind::FoodAndWater, 0.5, 6.0, 0.0, false, 1),
    };
    percepts[2].partner_id = 2;
    auto congruents = congruence(s, percepts, IbenetParams{}, 0.5);
    const Congruent* compound = findCongruent(congruents, DriveKind::ThirstAndHunger);
    REQUIRE(compound != nullptr);
    CHECK(compound->strength == doctest::Approx(0.6 * 0.5));
    CHECK(compound->partner_id == 2);

    // With the compound value highest, it dominates the isolated congruents.
    const Congruent* thirst = findCongruent(congruents, DriveKind::Thirst);
    REQUIRE(thirst != nullptr);
    CHECK(compound->strength > thirst->strength);
    auto drive = selectConsummatoryPreference(congruents, SelectionState{}, IbenetParams{});
    REQUIRE(drive.has_value());
    CHECK(drive->kind == DriveKind::ThirstAndHunger);
}

TEST_CASE("congruence: safety risk and preemption flag") {
    InternalState s;
    s.security = 0.5;
    std::vector<Percept> percepts{
        makePercept(PerceptKind::Blob, 0.4, 2.0, 0.0, false, 7, false, 2.0)};
    IbenetParams params;  // risk_tolerance 1.0
    auto congruents = congruence(s, percepts, params, 0.5);
    const Congruent* safety = findCongruent(congruents, DriveKind::Safety);
    REQUIRE(safety != nullptr);
    CHECK(safety->risk == doctest::Approx(1.0));  // 2.0 / 2.0
    CHECK(safety->preempt);                       // 1.0 > 1.0 * 0.5

    // Same blob far away: a congruent, but no preemption.
    percepts[0].nearest_distance = 10.0;
    congruents = congruence(s, percepts, params, 0.5);
    safety = findCongruent(congruents, DriveKind::Safety);
    REQUIRE(safety != nullptr);
    CHECK_FALSE(safety->preempt);

    // Remembered blobs never preempt.
    percepts[0].nearest_distance = 2.0;
    percepts[0].remembered = true;
    congruents = congruence(s, percepts, params, 0.5);
    safety = findCongruent(congruents, DriveKind::Safety);
    REQUIRE(safety != nullptr);
    CHECK_FALSE(safety->preempt);
}

TEST_CASE("select_consummatory_preference: winner takes all") {
    std::vector<Congruent> congruents{makeCongruent(DriveKind::Thirst, 0.5),
                                      makeCongruent(DriveKind::Hunger, 0.3)};
    auto drive = selectConsummatoryPreference(congruents, SelectionState{}, IbenetParams{});
    REQUIRE(drive.has_value());
    CHECK(drive->kind == DriveKind::Thirst);
    CHECK(drive->intensity == doctest::Approx(0.5));

    CHECK_FALSE(selectConsummatoryPreference({}, SelectionState{}, IbenetParams{}).has_value());

    auto single = selectConsummatoryPreference({makeCongruent(DriveKind::Fatigue, 0.2)},
                                               SelectionState{}, IbenetParams{});
    REQUIRE(single.has_value());
    CHECK(single->kind == DriveKind::Fatigue);
}

TEST_CASE("select_consummatory_preference: persistence bonus") {
    std::vector<Congruent> congruents{makeCongruent(DriveKind::Thirst, 0.45),
                                      makeCongruent(DriveKind::Hunger, 0.5)};
    SelectionState state;
    state.current_drive = DriveSignal{DriveKind::Thirst, 0.5, PerceptKind::Water, 1, {}};
    auto drive = selectConsummatoryPreference(congruents, state, IbenetParams{});
    REQUIRE(drive.has_value());
    CHECK(drive->kind == DriveKind::Thirst);  // 0.45 + 0.1 > 0.5
}

TEST_CASE("select_consummatory_preference: safety preempts an active drink") {
    std::vector<Congruent> congruents{makeCongruent(DriveKind::Thirst, 0.9)};
    congruents[0].at_range = true;
    Congruent safety;
    safety.drive = DriveKind::Safety;
    safety.percept = PerceptKind::Blob;
    safety.strength = 0.3;
    safety.risk = 1.4;
    safety.preempt = true;
    congruents.push_back(safety);

    SelectionState state;
    state.current_drive = DriveSignal{DriveKind::Thirst, 0.9, PerceptKind::Water, 1, {}};
    state.consummatory_lock = true;  // mid-drink
    auto drive = selectConsummatoryPreference(congruents, state, IbenetParams{});
    REQUIRE(drive.has_value());
    CHECK(drive->kind == DriveKind::Safety);
    CHECK(drive->intensity == doctest::Approx(1.0));
}

TEST_CASE("select_consummatory_preference: unfired safety never competes") {
    Congruent safety;
    safety.drive = DriveKind::Safety;
    safety.percept = PerceptKind::Blob;
    safety.strength = 0.9;  // big lazy blob far away
    safety.preempt = false;
    std::vector<Congruent> congruents{safety, makeCongruent(DriveKind::Thirst, 0.2)};
    auto drive = selectConsummatoryPreference(congruents, SelectionState{}, IbenetParams{});
    REQUIRE(drive.has_value());
    CHECK(drive->kind == DriveKind::Thirst);
}

TEST_CASE("select_consummatory_preference: scaling all strengths preserves the winner") {
    Rng rng(101);
    for (int trial = 0; trial < 2000; ++trial) {
        int n = 1 + static_cast<int>(rng.nextUnit() * 4);
        std::vector<Congruent> congruents;
        for (int i = 0; i < n; ++i) {
            auto kind = static_cast<DriveKind>(i);
            if (kind == DriveKind::Safety) continue;
            congruents.push_back(makeCongruent(kind, rng.nextRange(0.01, 1.0)));
        }
        if (congruents.empty()) continue;
        double scale = rng.nextRange(0.1, 0.9);
        auto scaled = congruents;
        for (auto& c : scaled) c.strength *= scale;

        auto a = selectConsummatoryPreference(congruents, SelectionState{}, IbenetParams{});
        auto b = selectConsummatoryPreference(scaled, SelectionState{}, IbenetParams{});
        REQUIRE(a.has_value());
        REQUIRE(b.has_value());
        CHECK(a->kind == b->kind);
    }
}

TEST_CASE("attention_to_preferences binds the drive to its percept") {
    DriveSignal thirst{DriveKind::Thirst, 0.6, PerceptKind::Water, 1, {}};

    std::vector<Percept> atRange{makePercept(PerceptKind::Water, 0.5, 1.0, 0.0, true, 1)};
    auto bound = attentionToPreferences(thirst, atRange);
    REQUIRE(bound.percept.has_value());
    CHECK(bound.percept->at_range);
    CHECK_FALSE(bound.search);

    std::vector<Percept> far{makePercept(PerceptKind::Water, 0.5, 6.0, 0.4, false, 1)};
    bound = attentionToPreferences(thirst, far);
    REQUIRE(bound.percept.has_value());
    CHECK_FALSE(bound.percept->at_range);

    bound = attentionToPreferences(thirst, {});
    CHECK_FALSE(bound.percept.has_value());
    CHECK(bound.search);
}

TEST_CASE("reflex inhibition is a pass-through without signals") {
    CHECK(reflexAllowed(ExternalAction::AvoidObstacle, {}));
    CHECK(reflexAllowed(ExternalAction::Runaway, {}));
    InhibitionSignals suppress;
    suppress.suppress.push_back(ExternalAction::AvoidObstacle);
    CHECK_FALSE(reflexAllowed(ExternalAction::AvoidObstacle, suppress));
    CHECK(reflexAllowed(ExternalAction::Runaway, suppress));
}

TEST_CASE("external behaviour selector priorities") {
    IbenetParams params;
    SelectionState state;
    InhibitionSignals none;

    // No drive, no percepts: wander.
    CHECK(externalBehaviourSelector(std::nullopt, {}, nullptr, state, params, none) ==
          ExternalAction::Wander);

    // Obstacle reflex beats an active approach.
    DriveSignal thirst{DriveKind::Thirst, 0.6, PerceptKind::Water, 1, {}};
    BoundPreference bound;
    bound.percept = makePercept(PerceptKind::Water, 0.5, 6.0, 0.4, false, 1);
    Percept obstacle = makePercept(PerceptKind::Obstacle, 1.0, 0.6, 0.1, true);
    CHECK(externalBehaviourSelector(thirst, bound, &obstacle, state, params, none) ==
          ExternalAction::AvoidObstacle);
    CHECK(externalBehaviourSelector(thirst, bound, nullptr, state, params, none) ==
          ExternalAction::ApproachWater);

    // Drive backed consummation at range.
    bound.percept->at_range = true;
    CHECK(externalBehaviourSelector(thirst, bound, nullptr, state, params, none) ==
          ExternalAction::Drink);

    // Search-backed explore, and the wander-only variant.
    BoundPreference search;
    search.search = true;
    CHECK(externalBehaviourSelector(thirst, search, nullptr, state, params, none) ==
          ExternalAction::Explore);
    IbenetParams wanderOnly;
    wanderOnly.explore_enabled = false;
    CHECK(externalBehaviourSelector(thirst, search, nullptr, state, wanderOnly, none) ==
          ExternalAction::Wander);

    // Safety drive runs away, unless synthetically inhibited.
    DriveSignal safety{DriveKind::Safety, 1.0, PerceptKind::Blob, 7, {}};
    BoundPreference blobBound;
    blobBound.percept = makePercept(PerceptKind::Blob, 0.5, 2.0, 0.0, false, 7);
    CHECK(externalBehaviourSelector(safety, blobBound, nullptr, state, params, none) ==
          ExternalAction::Runaway);
    InhibitionSignals suppressRunaway;
    suppressRunaway.suppress.push_back(ExternalAction::Runaway);
    CHECK(externalBehaviourSelector(safety, blobBound, nullptr, state, params, suppressRunaway) ==
          ExternalAction::Wander);
}

TEST_CASE("asm tick: dead calm world wanders with no drive") {
    Ibenet net(IbenetParams{}, PhysiologyParams{}, 0.5);
    auto decision = net.tick({}, InternalState{}, 0);
    CHECK(decision.action == ExternalAction::Wander);
    CHECK_FALSE(decision.drive.has_value());
}

TEST_CASE("asm tick: thirst plus water approaches then drinks") {
    Ibenet net(IbenetParams{}, PhysiologyParams{}, 0.5);
    InternalState s;
    s.thirst = 0.9;

    std::vector<Percept> far{makePercept(PerceptKind::Water, 0.5, 6.0, 0.3, false, 1)};
    auto decision = net.tick(far, s, 0);
    REQUIRE(decision.drive.has_value());
    CHECK(decision.drive->kind == DriveKind::Thirst);
    CHECK(decision.action == ExternalAction::ApproachWater);
    REQUIRE(decision.bearing.has_value());
    CHECK(*decision.bearing == doctest::Approx(0.3));

    std::vector<Percept> atRange{makePercept(PerceptKind::Water, 0.6, 1.0, 0.0, true, 1)};
    decision = net.tick(atRange, s, 1);
    CHECK(decision.action == ExternalAction::Drink);
    REQUIRE(decision.consume_target.has_value());
    CHECK(*decision.consume_target == 1);
    CHECK(net.state().consummatory_lock);
}

TEST_CASE("asm tick: safety preempts a drink within one tick and records it") {
    Ibenet net(IbenetParams{}, PhysiologyParams{}, 0.5);
    InternalState s;
    s.thirst = 0.9;
    s.security = 0.5;

    std::vector<Percept> drinkSetup{makePercept(PerceptKind::Water, 0.6, 1.0, 0.0, true, 1)};
    auto decision = net.tick(drinkSetup, s, 0);
    CHECK(decision.action == ExternalAction::Drink);

    // Blob close enough that risk = 2.0/1.5 > 1.0 * 0.5.
    std::vector<Percept> withBlob{
        makePercept(PerceptKind::Water, 0.6, 1.0, 0.0, true, 1),
        makePercept(PerceptKind::Blob, 0.5, 1.5, 0.8, false, 7, false, 2.0)};
    decision = net.tick(withBlob, s, 1);
    REQUIRE(decision.drive.has_value());
    CHECK(decision.drive->kind == DriveKind::Safety);
    CHECK(decision.action == ExternalAction::Runaway);
    REQUIRE(net.state().interrupted_drive.has_value());
    CHECK(*net.state().interrupted_drive == DriveKind::Thirst);
    REQUIRE(decision.bearing.has_value());
    CHECK(*decision.bearing == doctest::Approx(0.8));  // bearing TO the blob
}

TEST_CASE("asm tick: runaway completes after enough blob-free ticks") {
    IbenetParams params;
    params.safe_ticks_to_resume = 3;
    Ibenet net(params, PhysiologyParams{}, 0.5);
    InternalState s;
    s.thirst = 0.9;
    s.security = 0.2;

    std::vector<Percept> blobClose{
        makePercept(PerceptKind::Blob, 0.5, 1.0, 0.0, false, 7, false, 2.0)};
    auto decision = net.tick(blobClose, s, 0);
    CHECK(decision.action == ExternalAction::Runaway);

    // Blob out of sight: the runaway persists for safe_ticks_to_resume ticks.
    for (int t = 1; t <= 3; ++t) {
        decision = net.tick({}, s, t);
        CHECK(decision.action == ExternalAction::Runaway);
    }
    // Then the interrupted need re-enters competition; with no water percept
    // it backs exploration.
    decision = net.tick({}, s, 4);
    REQUIRE(decision.drive.has_value());
    CHECK(decision.drive->kind == DriveKind::Thirst);
    CHECK(decision.action == ExternalAction::Explore);
    CHECK_FALSE(net.state().interrupted_drive.has_value());
}

TEST_CASE("asm tick: obstacle reflex preempts without clearing the drive") {
    Ibenet net(IbenetParams{}, PhysiologyParams{}, 0.5);
    InternalState s;
    s.thirst = 0.9;

    std::vector<Percept> approach{makePercept(PerceptKind::Water, 0.5, 6.0, 0.3, false, 1)};
    auto decision = net.tick(approach, s, 0);
    CHECK(decision.action == ExternalAction::ApproachWater);

    std::vector<Percept> withObstacle{
        makePercept(PerceptKind::Water, 0.5, 6.0, 0.3, false, 1),
        makePercept(PerceptKind::Obstacle, 1.0, 0.7, -0.2, true)};
    decision = net.tick(withObstacle, s, 1);
    CHECK(decision.action == ExternalAction::AvoidObstacle);
    REQUIRE(decision.drive.has_value());
    CHECK(decision.drive->kind == DriveKind::Thirst);  // drive not cleared

    decision = net.tick(approach, s, 2);
    CHECK(decision.action == ExternalAction::ApproachWater);
}

TEST_CASE("asm tick: internal-state dependence swaps the first approach") {
    std::vector<Percept> both{makePercept(PerceptKind::Water, 0.5, 6.0, 0.3, false, 1),
                              makePercept(PerceptKind::Food, 0.5, 6.0, -0.3, false, 2)};

    InternalState thirsty;
    thirsty.thirst = 0.9;
    thirsty.hunger = 0.1;
    Ibenet netA(IbenetParams{}, PhysiologyParams{}, 0.5);
    CHECK(netA.tick(both, thirsty, 0).action == ExternalAction::ApproachWater);

    InternalState hungry;
    hungry.thirst = 0.1;
    hungry.hunger = 0.9;
    Ibenet netB(IbenetParams{}, PhysiologyParams{}, 0.5);
    CHECK(netB.tick(both, hungry, 0).action == ExternalAction::ApproachFood);
}

TEST_CASE("asm tick: compound source drinks then eats without an approach between") {
    IbenetParams params;
    PhysiologyParams phys;
    Ibenet net(params, phys, 0.5);
    InternalState s;
    s.thirst = 0.8;
    s.hunger = 0.8;

    Percept compound = makePercept(PerceptKind::FoodAndWater, 0.7, 1.0, 0.0, true, 1);
    compound.partner_id = 2;
    std::vector<Percept> percepts{compound};

    std::vector<ExternalAction> actions;
    for (int t = 0; t < 80; ++t) {
        auto decision = net.tick(percepts, s, t);
        actions.push_back(decision.action);
        if (decision.action == ExternalAction::Drink) {
            REQUIRE(decision.consume_target == 1);
            s = applyConsummation(s, ExternalAction::Drink, phys);
        } else if (decision.action == ExternalAction::Eat) {
            REQUIRE(decision.consume_target == 2);
            s = applyConsummation(s, ExternalAction::Eat, phys);
        }
        s = tickNeeds(s, 0.0, phys);
        if (isSatiated(s, NeedKind::Thirst, phys) && isSatiated(s, NeedKind::Hunger, phys)) break;
    }
    // Thirst ties hunger at the start, so drinking comes first, and eating
    // follows with no approach action in between.
    REQUIRE(!actions.empty());
    CHECK(actions.front() == ExternalAction::Drink);
    bool sawEat = false;
    for (const auto a : actions) {
        if (a == ExternalAction::Eat) sawEat = true;
        CHECK(a != ExternalAction::ApproachFood);
        CHECK(a != ExternalAction::ApproachWater);
    }
    CHECK(sawEat);
}

TEST_CASE("asm tick: losing the pair mid-drink hands over to eating, no approach") {
    Ibenet net(IbenetParams{}, PhysiologyParams{}, 0.5);
    InternalState s;
    s.thirst = 0.8;
    s.hunger = 0.7;

    Percept compound = makePercept(PerceptKind::FoodAndWater, 0.9, 1.0, 0.0, true, 1);
    compound.partner_id = 2;
    Percept water = makePercept(PerceptKind::Water, 0.7, 1.0, 0.1, true, 1);
    Percept food = makePercept(PerceptKind::Food, 0.7, 1.0, -0.1, true, 2);

    auto first = net.tick({water, food, compound}, s, 0);
    REQUIRE(first.drive.has_value());
    CHECK(first.drive->kind == DriveKind::ThirstAndHunger);
    CHECK(first.action == ExternalAction::Drink);

    // The water member is gone: only the food remains, still at range. The
    // hunger congruent takes over and eating starts with no approach between.
    auto second = net.tick({food}, s, 1);
    REQUIRE(second.drive.has_value());
    CHECK(second.drive->kind == DriveKind::Hunger);
    CHECK(second.action == ExternalAction::Eat);
    CHECK(second.consume_target == 2);
}

TEST_CASE("asm tick: synthetic inhibition suppresses a reflex in the pipeline") {
    Ibenet net(IbenetParams{}, PhysiologyParams{}, 0.5);
    InternalState s;
    s.thirst = 0.9;

    std::vector<Percept> percepts{makePercept(PerceptKind::Water, 0.5, 6.0, 0.3, false, 1),
                                  makePercept(PerceptKind::Obstacle, 1.0, 0.7, -0.2, true)};
    CHECK(net.tick(percepts, s, 0).action == ExternalAction::AvoidObstacle);

    InhibitionSignals suppress;
    suppress.suppress.push_back(ExternalAction::AvoidObstacle);
    net.setInhibition(suppress);
    auto decision = net.tick(percepts, s, 1);
    CHECK(decision.action == ExternalAction::ApproachWater);
    // The proposed reflex still shows up at the potential-actions level.
    bool proposed = false;
    for (const auto& el : net.cognitiveBoard().readLevel(LevelId::PotentialActions))
        if (std::get<ExternalAction>(el.tag) == ExternalAction::AvoidObstacle) proposed = true;
    CHECK(proposed);
}

TEST_CASE("asm tick: non-indecision on randomized inputs") {
    Rng rng(113);
    for (int trial = 0; trial < 20000; ++trial) {
        Ibenet net(IbenetParams{}, PhysiologyParams{}, 0.5);

        SelectionState st;
        if (rng.nextUnit() < 0.5) {
            DriveSignal d;
            d.kind = static_cast<DriveKind>(static_cast<int>(rng.nextUnit() * kDriveKindCount));
            d.intensity = rng.nextUnit();
            if (rng.nextUnit() < 0.7) d.percept = perceptKindForDrive(d.kind);
            if (rng.nextUnit() < 0.7) d.target_id = 1;
            st.current_drive = d;
        }
        st.consummatory_lock = rng.nextUnit() < 0.3;
        st.safe_ticks = static_cast<int>(rng.nextUnit() * 12);
        if (rng.nextUnit() < 0.2) st.interrupted_drive = DriveKind::Thirst;
        if (rng.nextUnit() < 0.2)
            st.compound_phase = rng.nextUnit() < 0.5 ? ExternalAction::Drink : ExternalAction::Eat;
        net.setState(st);

        std::vector<Percept> percepts;
        for (int k = 0; k < kPerceptKindCount; ++k) {
            if (rng.nextUnit() < 0.4) continue;
            bool remembered = rng.nextUnit() < 0.3;
            percepts.push_back(makePercept(static_cast<PerceptKind>(k), rng.nextUnit(),
                                           rng.nextRange(0.0, 12.0), rng.nextRange(-3.1, 3.1),
                                           !remembered && rng.nextUnit() < 0.4,
                                           rng.nextUnit() < 0.8 ? std::optional<int>(k) : std::nullopt,
                                           remembered, rng.nextRange(0.1, 3.0)));
            if (static_cast<PerceptKind>(k) == PerceptKind::FoodAndWater)
                percepts.back().partner_id = 40 + k;
        }

        InternalState s;
        s.strength = rng.nextUnit();
        s.lucidity = rng.nextUnit();
        s.security = rng.nextUnit();
        s.fatigue = rng.nextUnit();
        s.thirst = rng.nextUnit();
        s.hunger = rng.nextUnit();

        auto decision = net.tick(percepts, s, trial % 7);
        int a = static_cast<int>(decision.action);
        REQUIRE(a >= 0);
        REQUIRE(a < kExternalActionCount);
    }
}

TEST_CASE("asm tick: boards hold the pipeline intermediates") {
    Ibenet net(IbenetParams{}, PhysiologyParams{}, 0.5);
    InternalState s;
    s.thirst = 0.9;
    std::vector<Percept> percepts{makePercept(PerceptKind::Water, 0.5, 6.0, 0.3, false, 1)};
    net.tick(percepts, s, 0);

    CHECK(net.cognitiveBoard().readLevel(LevelId::ExternalPerceptions).size() == 1);
    CHECK(net.motivationalBoard().readLevel(LevelId::MotInternalPerceptions).size() == 4);
    CHECK(net.motivationalBoard().readLevel(LevelId::PropioExteroDriveCongruents).size() >= 1);
    auto drive = net.motivationalBoard().readLevel(LevelId::Drive);
    REQUIRE(drive.size() == 1);
    CHECK(std::get<DriveKind>(drive.front().tag) == DriveKind::Thirst);
    auto actions = net.cognitiveBoard().readLevel(LevelId::Actions);
    REQUIRE(actions.size() == 1);
    CHECK(std::get<ExternalAction>(actions.front().tag) == ExternalAction::ApproachWater);
    CHECK(net.cognitiveBoard().readLevel(LevelId::PotentialActions).size() >= 1);
}
