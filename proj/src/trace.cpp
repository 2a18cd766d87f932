#include "animat/trace.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace animat {

namespace {

// Stable decimal formatting; the same doubles always print the same bytes.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

const char* kTraceHeader =
    "tick,z,x,theta,action,drive,drive_activation,strength,lucidity,security,fatigue,thirst,"
    "hunger,p_water,p_food,p_grass,p_blob,p_red_spot,p_yellow_spot,p_food_and_water,p_obstacle,"
    "collision";

}  // namespace

void writeTrace(std::ostream& out, const RunResult& result) {
    out << kTraceHeader << "\n";
    for (const auto& ev : result.events) {
        out << ev.tick << ',' << fmt(ev.pose.position.z) << ',' << fmt(ev.pose.position.x) << ','
            << fmt(ev.pose.theta) << ',' << externalActionName(ev.action) << ','
            << (ev.drive ? driveKindName(*ev.drive) : "none") << ',' << fmt(ev.drive_activation)
            << ',' << fmt(ev.internal.strength) << ',' << fmt(ev.internal.lucidity) << ','
            << fmt(ev.internal.security) << ',' << fmt(ev.internal.fatigue) << ','
            << fmt(ev.internal.thirst) << ',' << fmt(ev.internal.hunger);
        for (double v : ev.percept_values) out << ',' << fmt(v);
        out << ',' << (ev.collision ? 1 : 0) << "\n";
    }
}

std::string traceToString(const RunResult& result) {
    std::ostringstream out;
    writeTrace(out, result);
    return out.str();
}

void writePattern(std::ostream& out, const RunResult& result) {
    out << "action,start_tick,end_tick\n";
    for (const auto& seg : actionPattern(result))
        out << externalActionName(seg.action) << ',' << seg.start_tick << ',' << seg.end_tick
            << "\n";
    out << "# termination="
        << (result.termination == Termination::Death ? "death" : "max_ticks") << " ticks="
        << result.events.size() << "\n";
}

std::optional<long> firstDrinkTick(const RunResult& result) {
    for (const auto& ev : result.events)
        if (ev.action == ExternalAction::Drink) return ev.tick;
    return std::nullopt;
}

namespace {

const char* actionColor(ExternalAction a) {
    switch (a) {
        case ExternalAction::AvoidObstacle: return "#8d6e63";
        case ExternalAction::Wander: return "#b0bec5";
        case ExternalAction::Explore: return "#ffd54f";
        case ExternalAction::ApproachFood: return "#81c784";
        case ExternalAction::Eat: return "#2e7d32";
        case ExternalAction::ApproachWater: return "#64b5f6";
        case ExternalAction::Drink: return "#1565c0";
        case ExternalAction::ApproachFoodAndWater: return "#4db6ac";
        case ExternalAction::ApproachGrass: return "#aed581";
        case ExternalAction::Rest: return "#9575cd";
        case ExternalAction::Runaway: return "#e53935";
    }
    return "#999999";
}

}  // namespace

void writeTimelineSvg(std::ostream& out, const RunResult& result) {
    const int width = 960;
    const int curveHeight = 220;
    const int bandTop = curveHeight + 30;
    const int bandHeight = 26;
    const int labelHeight = 150;
    const int height = bandTop + bandHeight + labelHeight;
    const long ticks = std::max<long>(1, static_cast<long>(result.events.size()));
    const double sx = static_cast<double>(width - 80) / static_cast<double>(ticks);

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Internal state curves.
    struct Curve {
        const char* name;
        const char* color;
    };
    const Curve curves[] = {{"thirst", "#1565c0"},  {"hunger", "#2e7d32"},
                            {"fatigue", "#9575cd"}, {"strength", "#e53935"},
                            {"lucidity", "#fb8c00"}, {"security", "#546e7a"}};
    for (int c = 0; c < 6; ++c) {
        out << "<polyline fill=\"none\" stroke=\"" << curves[c].color
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < result.events.size(); ++i) {
            const InternalState& s = result.events[i].internal;
            double v = 0.0;
            switch (c) {
                case 0: v = s.thirst; break;
                case 1: v = s.hunger; break;
                case 2: v = s.fatigue; break;
                case 3: v = s.strength; break;
                case 4: v = s.lucidity; break;
                case 5: v = s.security; break;
            }
            double px = 40.0 + static_cast<double>(i) * sx;
            double py = 10.0 + (1.0 - v) * (curveHeight - 20);
            out << fmt(px) << ',' << fmt(py) << ' ';
        }
        out << "\"/>\n";
        out << "<text x=\"" << 48 + c * 150 << "\" y=\"" << curveHeight + 14
            << "\" font-size=\"12\" fill=\"" << curves[c].color << "\">" << curves[c].name
            << "</text>\n";
    }

    // Action bands.
    auto pattern = actionPattern(result);
    for (const auto& seg : pattern) {
        double px = 40.0 + static_cast<double>(seg.start_tick) * sx;
        double pw = std::max(1.0, static_cast<double>(seg.end_tick - seg.start_tick + 1) * sx);
        out << "<rect x=\"" << fmt(px) << "\" y=\"" << bandTop << "\" width=\"" << fmt(pw)
            << "\" height=\"" << bandHeight << "\" fill=\"" << actionColor(seg.action)
            << "\"><title>" << externalActionName(seg.action) << " [" << seg.start_tick << ", "
            << seg.end_tick << "]</title></rect>\n";
    }

    // Legend for the actions that actually appear.
    bool used[kExternalActionCount] = {};
    for (const auto& seg : pattern) used[static_cast<int>(seg.action)] = true;
    int row = 0;
    for (int a = 0; a < kExternalActionCount; ++a) {
        if (!used[a]) continue;
        int ly = bandTop + bandHeight + 20 + row * 16;
        out << "<rect x=\"40\" y=\"" << ly - 10 << "\" width=\"12\" height=\"12\" fill=\""
            << actionColor(static_cast<ExternalAction>(a)) << "\"/>\n";
        out << "<text x=\"58\" y=\"" << ly << "\" font-size=\"12\">"
            << externalActionName(static_cast<ExternalAction>(a)) << "</text>\n";
        ++row;
    }

    out << "</svg>\n";
}

BatchSummary runBatch(const Scenario& scenario, int n_runs, std::uint64_t seed_base, bool explore) {
    BatchSummary summary;
    Scenario sc = scenario;
    sc.selection.explore_enabled = explore;
    for (int i = 0; i < n_runs; ++i) {
        sc.seed = seed_base + static_cast<std::uint64_t>(i);
        RunResult result = run(sc);
        BatchRow row;
        row.seed = sc.seed;
        row.first_drink = firstDrinkTick(result);
        if (!row.first_drink) ++summary.censored;
        summary.rows.push_back(row);
    }

    std::vector<double> ticks;
    for (const auto& row : summary.rows)
        if (row.first_drink) ticks.push_back(static_cast<double>(*row.first_drink));
    if (!ticks.empty()) {
        double sum = 0.0;
        for (double t : ticks) sum += t;
        summary.mean = sum / static_cast<double>(ticks.size());
        std::sort(ticks.begin(), ticks.end());
        std::size_t n = ticks.size();
        summary.median = n % 2 == 1 ? ticks[n / 2] : (ticks[n / 2 - 1] + ticks[n / 2]) / 2.0;
    }
    return summary;
}

void writeBatchTable(std::ostream& out, const BatchSummary& summary, const std::string& variant) {
    out << "seed,first_drink_tick,censored\n";
    for (const auto& row : summary.rows) {
        out << row.seed << ',';
        if (row.first_drink)
            out << *row.first_drink << ",0\n";
        else
            out << "," << "1\n";
    }
    out << "# variant=" << variant << " runs=" << summary.rows.size() << " censored="
        << summary.censored << " mean=" << fmt(summary.mean) << " median=" << fmt(summary.median)
        << "\n";
}

}  // namespace animat
