#include "animat/blackboard.hpp"

#include <algorithm>

namespace animat {

const char* driveKindName(DriveKind k) {
    switch (k) {
        case DriveKind::Thirst: return "thirst";
        case DriveKind::Hunger: return "hunger";
        case DriveKind::ThirstAndHunger: return "thirst_and_hunger";
        case DriveKind::Fatigue: return "fatigue";
        case DriveKind::Safety: return "safety";
    }
    return "?";
}

const char* levelName(LevelId level) {
    switch (level) {
        case LevelId::ExternalPerceptions: return "external_perceptions";
        case LevelId::PerceptualPersistents: return "perceptual_persistents";
        case LevelId::ConsummatoryPreferents: return "consummatory_preferents";
        case LevelId::DrivePerceptionCongruents: return "drive_perception_congruents";
        case LevelId::PotentialActions: return "potential_actions";
        case LevelId::Actions: return "actions";
        case LevelId::MotInternalPerceptions: return "mot_internal_perceptions";
        case LevelId::MotExternalPerceptions: return "mot_external_perceptions";
        case LevelId::PropioExteroDriveCongruents: return "propio_extero_drive_congruents";
        case LevelId::Drive: return "drive";
    }
    return "?";
}

std::tuple<int, int, int> tagOrdinal(const Tag& tag) {
    int which = static_cast<int>(tag.index());
    int a = 0;
    int b = 0;
    switch (which) {
        case 0: a = static_cast<int>(std::get<PerceptKind>(tag)); break;
        case 1: a = static_cast<int>(std::get<DriveKind>(tag)); break;
        case 2: a = static_cast<int>(std::get<ExternalAction>(tag)); break;
        case 3: {
            const auto& c = std::get<CongruentTag>(tag);
            a = static_cast<int>(c.drive);
            b = c.percept ? static_cast<int>(*c.percept) : -1;
            break;
        }
    }
    return {which, a, b};
}

bool tagLess(const Tag& a, const Tag& b) { return tagOrdinal(a) < tagOrdinal(b); }
bool tagEqual(const Tag& a, const Tag& b) { return tagOrdinal(a) == tagOrdinal(b); }

std::string tagName(const Tag& tag) {
    switch (tag.index()) {
        case 0: return perceptKindName(std::get<PerceptKind>(tag));
        case 1: return driveKindName(std::get<DriveKind>(tag));
        case 2: return externalActionName(std::get<ExternalAction>(tag));
        case 3: {
            const auto& c = std::get<CongruentTag>(tag);
            std::string name = driveKindName(c.drive);
            name += "*";
            name += c.percept ? perceptKindName(*c.percept) : "none";
            return name;
        }
    }
    return "?";
}

std::vector<Reac> compete(const LReac& lreac, const CompetitionMode& mode) {
    std::vector<Reac> winners;
    if (lreac.registers.empty()) return winners;
    if (mode.type == CompetitionMode::Type::WinnerTakesAll) {
        const Reac* best = &lreac.registers.front();
        for (const auto& r : lreac.registers) {
            if (r.activation > best->activation ||
                (r.activation == best->activation && r.behaviour_id < best->behaviour_id)) {
                best = &r;
            }
        }
        winners.push_back(*best);
    } else {
        for (const auto& r : lreac.registers)
            if (r.activation >= mode.threshold) winners.push_back(r);
    }
    return winners;
}

bool Board::acceptsLevel(LevelId level) const {
    return std::find(levels_.begin(), levels_.end(), level) != levels_.end();
}

void Board::post(const SolutionElement& element) {
    if (!acceptsLevel(element.level)) {
        throw std::logic_error(std::string("level ") + levelName(element.level) +
                               " does not belong to this board");
    }
    Key key{static_cast<int>(element.level), tagOrdinal(element.tag)};
    elements_[key] = element;
}

std::vector<SolutionElement> Board::readLevel(LevelId level) const {
    std::vector<SolutionElement> out;
    for (const auto& [key, el] : elements_)
        if (key.level == static_cast<int>(level)) out.push_back(el);
    return out;
}

const SolutionElement* Board::find(LevelId level, const Tag& tag) const {
    Key key{static_cast<int>(level), tagOrdinal(tag)};
    auto it = elements_.find(key);
    return it == elements_.end() ? nullptr : &it->second;
}

void Board::expire(long tick, long ttl) {
    for (auto it = elements_.begin(); it != elements_.end();) {
        if (tick - it->second.tick_created >= ttl)
            it = elements_.erase(it);
        else
            ++it;
    }
}

std::vector<LevelId> cognitiveLevels() {
    return {LevelId::ExternalPerceptions,      LevelId::PerceptualPersistents,
            LevelId::ConsummatoryPreferents,   LevelId::DrivePerceptionCongruents,
            LevelId::PotentialActions,         LevelId::Actions};
}

std::vector<LevelId> motivationalLevels() {
    return {LevelId::MotInternalPerceptions, LevelId::MotExternalPerceptions,
            LevelId::PropioExteroDriveCongruents, LevelId::Drive};
}

}  // namespace animat
