#include "animat/scenario.hpp"

#include <fstream>

namespace animat {

using nlohmann::json;

namespace {

// Collects errors with JSON-pointer-like field paths while walking the
// document, so a broken file reports every violation at once.
struct Reader {
    std::vector<std::string>& errors;

    void unknownKeys(const json& obj, const std::string& path,
                     std::initializer_list<const char*> allowed) {
        if (!obj.is_object()) return;
        for (const auto& [key, value] : obj.items()) {
            bool known = false;
            for (const char* a : allowed)
                if (key == a) known = true;
            if (!known) errors.push_back(path + ": unknown key '" + key + "'");
        }
    }

    bool has(const json& obj, const char* key) const { return obj.contains(key); }

    double number(const json& obj, const char* key, const std::string& path, double fallback) {
        if (!obj.contains(key)) return fallback;
        if (!obj[key].is_number()) {
            errors.push_back(path + "." + key + ": expected a number");
            return fallback;
        }
        return obj[key].get<double>();
    }

    long integer(const json& obj, const char* key, const std::string& path, long fallback) {
        if (!obj.contains(key)) return fallback;
        if (!obj[key].is_number_integer()) {
            errors.push_back(path + "." + key + ": expected an integer");
            return fallback;
        }
        return obj[key].get<long>();
    }

    std::string text(const json& obj, const char* key, const std::string& path,
                     const std::string& fallback) {
        if (!obj.contains(key)) return fallback;
        if (!obj[key].is_string()) {
            errors.push_back(path + "." + key + ": expected a string");
            return fallback;
        }
        return obj[key].get<std::string>();
    }

    bool boolean(const json& obj, const char* key, const std::string& path, bool fallback) {
        if (!obj.contains(key)) return fallback;
        if (!obj[key].is_boolean()) {
            errors.push_back(path + "." + key + ": expected a boolean");
            return fallback;
        }
        return obj[key].get<bool>();
    }

    Vec2 vec2(const json& value, const std::string& path) {
        Vec2 v;
        if (!value.is_array() || value.size() != 2 || !value[0].is_number() ||
            !value[1].is_number()) {
            errors.push_back(path + ": expected [z, x]");
            return v;
        }
        v.z = value[0].get<double>();
        v.x = value[1].get<double>();
        return v;
    }
};

json vec2ToJson(const Vec2& v) { return json::array({v.z, v.x}); }

}  // namespace

ScenarioLoadResult parseScenario(const json& doc) {
    ScenarioLoadResult result;
    Scenario sc;
    Reader r{result.errors};

    if (!doc.is_object()) {
        result.errors.push_back("top level: expected an object");
        return result;
    }
    r.unknownKeys(doc, "top level",
                  {"name", "max_ticks", "seed", "world", "animat", "perception", "physiology",
                   "motor", "selection", "events"});

    sc.name = r.text(doc, "name", "top", "scenario");
    sc.max_ticks = r.integer(doc, "max_ticks", "top", 1000);
    if (doc.contains("seed")) {
        if (doc["seed"].is_number_unsigned() ||
            (doc["seed"].is_number_integer() && doc["seed"].get<long long>() >= 0))
            sc.seed = doc["seed"].get<std::uint64_t>();
        else
            result.errors.push_back("seed: expected a non-negative integer");
    }

    if (doc.contains("world")) {
        const json& w = doc["world"];
        r.unknownKeys(w, "world", {"bounds", "stimuli", "obstacles"});
        if (w.contains("bounds")) {
            const json& b = w["bounds"];
            r.unknownKeys(b, "world.bounds", {"min", "max"});
            if (b.contains("min")) sc.world.bounds.min = r.vec2(b["min"], "world.bounds.min");
            if (b.contains("max")) sc.world.bounds.max = r.vec2(b["max"], "world.bounds.max");
        }
        if (w.contains("stimuli")) {
            if (!w["stimuli"].is_array()) {
                result.errors.push_back("world.stimuli: expected an array");
            } else {
                int index = 0;
                for (const json& s : w["stimuli"]) {
                    std::string path = "world.stimuli[" + std::to_string(index++) + "]";
                    r.unknownKeys(s, path, {"id", "kind", "position", "magnitude", "body_radius"});
                    Stimulus st;
                    st.id = static_cast<int>(r.integer(s, "id", path, index));
                    std::string kind = r.text(s, "kind", path, "water");
                    if (auto k = stimulusKindFromName(kind))
                        st.kind = *k;
                    else
                        result.errors.push_back(path + ".kind: unknown kind '" + kind + "'");
                    if (s.contains("position")) st.position = r.vec2(s["position"], path + ".position");
                    st.magnitude = r.number(s, "magnitude", path, 1.0);
                    st.body_radius = r.number(s, "body_radius", path, 0.5);
                    sc.world.stimuli.push_back(st);
                }
            }
        }
        if (w.contains("obstacles")) {
            if (!w["obstacles"].is_array()) {
                result.errors.push_back("world.obstacles: expected an array");
            } else {
                int index = 0;
                for (const json& o : w["obstacles"]) {
                    std::string path = "world.obstacles[" + std::to_string(index++) + "]";
                    r.unknownKeys(o, path, {"min", "max"});
                    Obstacle ob;
                    if (o.contains("min")) ob.min = r.vec2(o["min"], path + ".min");
                    if (o.contains("max")) ob.max = r.vec2(o["max"], path + ".max");
                    sc.world.obstacles.push_back(ob);
                }
            }
        }
    }

    if (doc.contains("animat")) {
        const json& a = doc["animat"];
        r.unknownKeys(a, "animat", {"position", "theta", "internal"});
        if (a.contains("position")) sc.initial_pose.position = r.vec2(a["position"], "animat.position");
        sc.initial_pose.theta = r.number(a, "theta", "animat", 0.0);
        if (a.contains("internal")) {
            const json& in = a["internal"];
            r.unknownKeys(in, "animat.internal",
                          {"strength", "lucidity", "security", "fatigue", "thirst", "hunger"});
            sc.initial_state.strength = r.number(in, "strength", "animat.internal", 1.0);
            sc.initial_state.lucidity = r.number(in, "lucidity", "animat.internal", 1.0);
            sc.initial_state.security = r.number(in, "security", "animat.internal", 1.0);
            sc.initial_state.fatigue = r.number(in, "fatigue", "animat.internal", 0.0);
            sc.initial_state.thirst = r.number(in, "thirst", "animat.internal", 0.0);
            sc.initial_state.hunger = r.number(in, "hunger", "animat.internal", 0.0);
        }
    }

    if (doc.contains("perception")) {
        const json& p = doc["perception"];
        r.unknownKeys(p, "perception",
                      {"base_radius", "d_min", "memory_decay", "forget_eps", "pairing_distance",
                       "at_range_margin"});
        sc.perception.base_radius = r.number(p, "base_radius", "perception", sc.perception.base_radius);
        sc.perception.d_min = r.number(p, "d_min", "perception", sc.perception.d_min);
        sc.perception.memory_decay = r.number(p, "memory_decay", "perception", sc.perception.memory_decay);
        sc.perception.forget_eps = r.number(p, "forget_eps", "perception", sc.perception.forget_eps);
        sc.perception.pairing_distance =
            r.number(p, "pairing_distance", "perception", sc.perception.pairing_distance);
        sc.perception.at_range_margin =
            r.number(p, "at_range_margin", "perception", sc.perception.at_range_margin);
    }

    if (doc.contains("physiology")) {
        const json& p = doc["physiology"];
        r.unknownKeys(p, "physiology",
                      {"thirst_rate", "hunger_rate", "fatigue_per_meter", "drink_rate", "eat_rate",
                       "rest_rate", "critical_threshold", "satiation_threshold", "drain_rate",
                       "restore_rate"});
        PhysiologyParams& ph = sc.physiology;
        ph.thirst_rate = r.number(p, "thirst_rate", "physiology", ph.thirst_rate);
        ph.hunger_rate = r.number(p, "hunger_rate", "physiology", ph.hunger_rate);
        ph.fatigue_per_meter = r.number(p, "fatigue_per_meter", "physiology", ph.fatigue_per_meter);
        ph.drink_rate = r.number(p, "drink_rate", "physiology", ph.drink_rate);
        ph.eat_rate = r.number(p, "eat_rate", "physiology", ph.eat_rate);
        ph.rest_rate = r.number(p, "rest_rate", "physiology", ph.rest_rate);
        ph.critical_threshold = r.number(p, "critical_threshold", "physiology", ph.critical_threshold);
        ph.satiation_threshold =
            r.number(p, "satiation_threshold", "physiology", ph.satiation_threshold);
        ph.drain_rate = r.number(p, "drain_rate", "physiology", ph.drain_rate);
        ph.restore_rate = r.number(p, "restore_rate", "physiology", ph.restore_rate);
    }

    if (doc.contains("motor")) {
        const json& m = doc["motor"];
        r.unknownKeys(m, "motor",
                      {"body_radius", "gain", "explore_step", "steer_gain", "avoid_turn"});
        sc.motor.body_radius = r.number(m, "body_radius", "motor", sc.motor.body_radius);
        sc.motor.gain = r.number(m, "gain", "motor", sc.motor.gain);
        sc.motor.explore_step = r.number(m, "explore_step", "motor", sc.motor.explore_step);
        sc.motor.steer_gain = r.number(m, "steer_gain", "motor", sc.motor.steer_gain);
        sc.motor.avoid_turn = r.number(m, "avoid_turn", "motor", sc.motor.avoid_turn);
    }

    if (doc.contains("selection")) {
        const json& s = doc["selection"];
        r.unknownKeys(s, "selection",
                      {"persistence_bonus", "risk_tolerance", "safe_ticks_to_resume", "search_gain",
                       "search_min_need", "compound_switch_margin", "explore_enabled"});
        IbenetParams& ib = sc.selection;
        ib.persistence_bonus = r.number(s, "persistence_bonus", "selection", ib.persistence_bonus);
        ib.risk_tolerance = r.number(s, "risk_tolerance", "selection", ib.risk_tolerance);
        ib.safe_ticks_to_resume = static_cast<int>(
            r.integer(s, "safe_ticks_to_resume", "selection", ib.safe_ticks_to_resume));
        ib.search_gain = r.number(s, "search_gain", "selection", ib.search_gain);
        ib.search_min_need = r.number(s, "search_min_need", "selection", ib.search_min_need);
        ib.compound_switch_margin =
            r.number(s, "compound_switch_margin", "selection", ib.compound_switch_margin);
        ib.explore_enabled = r.boolean(s, "explore_enabled", "selection", ib.explore_enabled);
    }

    if (doc.contains("events")) {
        if (!doc["events"].is_array()) {
            result.errors.push_back("events: expected an array");
        } else {
            int index = 0;
            for (const json& e : doc["events"]) {
                std::string path = "events[" + std::to_string(index++) + "]";
                r.unknownKeys(e, path,
                              {"tick", "move_stimulus", "add_stimulus", "remove_stimulus",
                               "set_internal"});
                ScenarioEvent ev;
                ev.tick = r.integer(e, "tick", path, 0);
                int kinds = 0;
                if (e.contains("move_stimulus")) {
                    ++kinds;
                    const json& m = e["move_stimulus"];
                    r.unknownKeys(m, path + ".move_stimulus", {"id", "position"});
                    MoveStimulusEvent mv;
                    mv.id = static_cast<int>(r.integer(m, "id", path + ".move_stimulus", 0));
                    if (m.contains("position"))
                        mv.position = r.vec2(m["position"], path + ".move_stimulus.position");
                    ev.event = mv;
                }
                if (e.contains("add_stimulus")) {
                    ++kinds;
                    const json& a = e["add_stimulus"];
                    r.unknownKeys(a, path + ".add_stimulus",
                                  {"id", "kind", "position", "magnitude", "body_radius"});
                    AddStimulusEvent ad;
                    ad.stimulus.id = static_cast<int>(r.integer(a, "id", path + ".add_stimulus", 0));
                    std::string kind = r.text(a, "kind", path + ".add_stimulus", "water");
                    if (auto k = stimulusKindFromName(kind))
                        ad.stimulus.kind = *k;
                    else
                        result.errors.push_back(path + ".add_stimulus.kind: unknown kind '" + kind +
                                                "'");
                    if (a.contains("position"))
                        ad.stimulus.position = r.vec2(a["position"], path + ".add_stimulus.position");
                    ad.stimulus.magnitude = r.number(a, "magnitude", path + ".add_stimulus", 1.0);
                    ad.stimulus.body_radius = r.number(a, "body_radius", path + ".add_stimulus", 0.5);
                    ev.event = ad;
                }
                if (e.contains("remove_stimulus")) {
                    ++kinds;
                    const json& rm = e["remove_stimulus"];
                    r.unknownKeys(rm, path + ".remove_stimulus", {"id"});
                    RemoveStimulusEvent rv;
                    rv.id = static_cast<int>(r.integer(rm, "id", path + ".remove_stimulus", 0));
                    ev.event = rv;
                }
                if (e.contains("set_internal")) {
                    ++kinds;
                    const json& si = e["set_internal"];
                    r.unknownKeys(si, path + ".set_internal", {"field", "value"});
                    SetInternalEvent sv;
                    sv.field = r.text(si, "field", path + ".set_internal", "");
                    sv.value = r.number(si, "value", path + ".set_internal", 0.0);
                    ev.event = sv;
                }
                if (kinds != 1)
                    result.errors.push_back(path + ": expected exactly one event key");
                sc.events.push_back(ev);
            }
        }
    }

    for (const auto& err : validateScenario(sc)) result.errors.push_back(err);
    if (result.errors.empty()) result.scenario = std::move(sc);
    return result;
}

ScenarioLoadResult loadScenarioFile(const std::string& path) {
    ScenarioLoadResult result;
    std::ifstream in(path);
    if (!in) {
        result.errors.push_back("cannot open scenario file: " + path);
        return result;
    }
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded()) {
        result.errors.push_back("malformed JSON in scenario file: " + path);
        return result;
    }
    return parseScenario(doc);
}

json scenarioToJson(const Scenario& sc) {
    json doc;
    doc["name"] = sc.name;
    doc["max_ticks"] = sc.max_ticks;
    doc["seed"] = sc.seed;

    json stimuli = json::array();
    for (const auto& s : sc.world.stimuli) {
        stimuli.push_back({{"id", s.id},
                           {"kind", stimulusKindName(s.kind)},
                           {"position", vec2ToJson(s.position)},
                           {"magnitude", s.magnitude},
                           {"body_radius", s.body_radius}});
    }
    json obstacles = json::array();
    for (const auto& o : sc.world.obstacles)
        obstacles.push_back({{"min", vec2ToJson(o.min)}, {"max", vec2ToJson(o.max)}});
    doc["world"] = {{"bounds",
                     {{"min", vec2ToJson(sc.world.bounds.min)},
                      {"max", vec2ToJson(sc.world.bounds.max)}}},
                    {"stimuli", stimuli},
                    {"obstacles", obstacles}};

    doc["animat"] = {{"position", vec2ToJson(sc.initial_pose.position)},
                     {"theta", sc.initial_pose.theta},
                     {"internal",
                      {{"strength", sc.initial_state.strength},
                       {"lucidity", sc.initial_state.lucidity},
                       {"security", sc.initial_state.security},
                       {"fatigue", sc.initial_state.fatigue},
                       {"thirst", sc.initial_state.thirst},
                       {"hunger", sc.initial_state.hunger}}}};

    doc["perception"] = {{"base_radius", sc.perception.base_radius},
                         {"d_min", sc.perception.d_min},
                         {"memory_decay", sc.perception.memory_decay},
                         {"forget_eps", sc.perception.forget_eps},
                         {"pairing_distance", sc.perception.pairing_distance},
                         {"at_range_margin", sc.perception.at_range_margin}};

    doc["physiology"] = {{"thirst_rate", sc.physiology.thirst_rate},
                         {"hunger_rate", sc.physiology.hunger_rate},
                         {"fatigue_per_meter", sc.physiology.fatigue_per_meter},
                         {"drink_rate", sc.physiology.drink_rate},
                         {"eat_rate", sc.physiology.eat_rate},
                         {"rest_rate", sc.physiology.rest_rate},
                         {"critical_threshold", sc.physiology.critical_threshold},
                         {"satiation_threshold", sc.physiology.satiation_threshold},
                         {"drain_rate", sc.physiology.drain_rate},
                         {"restore_rate", sc.physiology.restore_rate}};

    doc["motor"] = {{"body_radius", sc.motor.body_radius},
                    {"gain", sc.motor.gain},
                    {"explore_step", sc.motor.explore_step},
                    {"steer_gain", sc.motor.steer_gain},
                    {"avoid_turn", sc.motor.avoid_turn}};

    doc["selection"] = {{"persistence_bonus", sc.selection.persistence_bonus},
                        {"risk_tolerance", sc.selection.risk_tolerance},
                        {"safe_ticks_to_resume", sc.selection.safe_ticks_to_resume},
                        {"search_gain", sc.selection.search_gain},
                        {"search_min_need", sc.selection.search_min_need},
                        {"compound_switch_margin", sc.selection.compound_switch_margin},
                        {"explore_enabled", sc.selection.explore_enabled}};

    json events = json::array();
    for (const auto& ev : sc.events) {
        json e;
        e["tick"] = ev.tick;
        if (const auto* mv = std::get_if<MoveStimulusEvent>(&ev.event)) {
            e["move_stimulus"] = {{"id", mv->id}, {"position", vec2ToJson(mv->position)}};
        } else if (const auto* ad = std::get_if<AddStimulusEvent>(&ev.event)) {
            e["add_stimulus"] = {{"id", ad->stimulus.id},
                                 {"kind", stimulusKindName(ad->stimulus.kind)},
                                 {"position", vec2ToJson(ad->stimulus.position)},
                                 {"magnitude", ad->stimulus.magnitude},
                                 {"body_radius", ad->stimulus.body_radius}};
        } else if (const auto* rm = std::get_if<RemoveStimulusEvent>(&ev.event)) {
            e["remove_stimulus"] = {{"id", rm->id}};
        } else if (const auto* si = std::get_if<SetInternalEvent>(&ev.event)) {
            e["set_internal"] = {{"field", si->field}, {"value", si->value}};
        }
        events.push_back(e);
    }
    doc["events"] = events;
    return doc;
}

}  // namespace animat
