#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "animat/perception.hpp"
#include "animat/physiology.hpp"

namespace animat {

// Declared here so blackboard tags can carry it; the selection machinery
// around it lives in ibenet.
enum class DriveKind : int {
    Thirst = 0,
    Hunger,
    ThirstAndHunger,
    Fatigue,
    Safety,
};
constexpr int kDriveKindCount = 5;
const char* driveKindName(DriveKind k);

// Blackboard abstraction levels. The cognitive node owns the first six, the
// motivational node the last four; a board only accepts its node's levels.
enum class LevelId : int {
    // cognitive
    ExternalPerceptions = 0,
    PerceptualPersistents,
    ConsummatoryPreferents,
    DrivePerceptionCongruents,
    PotentialActions,
    Actions,
    // motivational
    MotInternalPerceptions,
    MotExternalPerceptions,
    PropioExteroDriveCongruents,
    Drive,
};

const char* levelName(LevelId level);

struct CongruentTag {
    DriveKind drive = DriveKind::Thirst;
    std::optional<PerceptKind> percept;  // empty for a need-only search congruent
};

using Tag = std::variant<PerceptKind, DriveKind, ExternalAction, CongruentTag>;

// Total order over tags; read_level and competition tie-breaks rely on it.
std::tuple<int, int, int> tagOrdinal(const Tag& tag);
bool tagLess(const Tag& a, const Tag& b);
bool tagEqual(const Tag& a, const Tag& b);
std::string tagName(const Tag& tag);

struct SolutionElement {
    LevelId level = LevelId::ExternalPerceptions;
    Tag tag;
    double certainty = 0.0;  // in [0,1]
    long tick_created = 0;
};

// What a winning behaviour writes onto the board.
struct ActionDescriptor {
    LevelId level = LevelId::ExternalPerceptions;
    Tag tag;
    double certainty = 0.0;
};

// Activity state register: one activated elemental behaviour's pending action.
struct Reac {
    int behaviour_id = 0;
    ActionDescriptor action;
    double activation = 0.0;
};

// All REACs of the same kind; the unit over which competition runs.
struct LReac {
    std::string kind;
    std::vector<Reac> registers;
};

struct CompetitionMode {
    enum class Type { WinnerTakesAll, MultiWinner } type = Type::WinnerTakesAll;
    double threshold = 0.0;  // MultiWinner only

    static CompetitionMode winnerTakesAll() { return {Type::WinnerTakesAll, 0.0}; }
    static CompetitionMode multiWinner(double threshold) {
        return {Type::MultiWinner, threshold};
    }
};

// WinnerTakesAll: the single REAC with maximal activation, ties broken by
// lowest behaviour_id. MultiWinner(t): every REAC with activation >= t.
std::vector<Reac> compete(const LReac& lreac, const CompetitionMode& mode);

// The shared leveled data structure of one node. At most one element exists
// per (level, tag); re-posting overwrites certainty and refreshes the tick.
class Board {
  public:
    explicit Board(std::vector<LevelId> levels) : levels_(std::move(levels)) {}

    bool acceptsLevel(LevelId level) const;

    // Wrong-node levels are programming errors.
    void post(const SolutionElement& element);

    std::vector<SolutionElement> readLevel(LevelId level) const;
    const SolutionElement* find(LevelId level, const Tag& tag) const;

    // Drops elements not re-posted within ttl ticks of `tick`.
    void expire(long tick, long ttl = 1);

    std::size_t size() const { return elements_.size(); }
    void clear() { elements_.clear(); }

  private:
    struct Key {
        int level;
        std::tuple<int, int, int> ordinal;
        bool operator<(const Key& o) const { return std::tie(level, ordinal) < std::tie(o.level, o.ordinal); }
    };
    std::vector<LevelId> levels_;
    std::map<Key, SolutionElement> elements_;
};

std::vector<LevelId> cognitiveLevels();
std::vector<LevelId> motivationalLevels();

// One elemental behaviour: a production rule whose satisfied condition
// yields a REAC. Rules of the same kind compete under the declared mode.
template <class Ctx>
struct ElementalBehaviour {
    int id = 0;
    std::string kind;
    CompetitionMode mode;
    std::function<std::optional<Reac>(const Board&, const Ctx&)> condition;
};

// One full rule pass: evaluate every rule in declaration order, group the
// resulting REACs into L-REACs by kind, run each competition, and post the
// winners' action descriptors.
template <class Ctx>
void runNode(Board& board, const std::vector<ElementalBehaviour<Ctx>>& behaviours, const Ctx& ctx,
             long tick) {
    std::vector<LReac> lreacs;
    std::vector<const CompetitionMode*> modes;
    for (const auto& rule : behaviours) {
        auto reac = rule.condition(board, ctx);
        if (!reac) continue;
        reac->behaviour_id = rule.id;
        LReac* group = nullptr;
        for (std::size_t i = 0; i < lreacs.size(); ++i) {
            if (lreacs[i].kind == rule.kind) {
                group = &lreacs[i];
                break;
            }
        }
        if (group == nullptr) {
            lreacs.push_back(LReac{rule.kind, {}});
            modes.push_back(&rule.mode);
            group = &lreacs.back();
        }
        group->registers.push_back(*reac);
    }
    for (std::size_t i = 0; i < lreacs.size(); ++i) {
        for (const auto& winner : compete(lreacs[i], *modes[i])) {
            SolutionElement el;
            el.level = winner.action.level;
            el.tag = winner.action.tag;
            el.certainty = winner.action.certainty;
            el.tick_created = tick;
            board.post(el);
        }
    }
}

}  // namespace animat
