#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "animat/sim.hpp"

namespace animat {

// Trace files are CSV with a fixed, self-describing header. Field order:
// tick,z,x,theta,action,drive,drive_activation,strength,lucidity,security,
// fatigue,thirst,hunger,p_water,p_food,p_grass,p_blob,p_red_spot,
// p_yellow_spot,p_food_and_water,p_obstacle,collision
void writeTrace(std::ostream& out, const RunResult& result);
std::string traceToString(const RunResult& result);

// Behaviour pattern as CSV (action,start_tick,end_tick) with the termination
// noted in a trailing comment line.
void writePattern(std::ostream& out, const RunResult& result);

// Timeline plot: one band per action segment over time, with the internal
// state curves drawn above the bands.
void writeTimelineSvg(std::ostream& out, const RunResult& result);

// Tick of the first Drink action; empty when the run never drinks.
std::optional<long> firstDrinkTick(const RunResult& result);

struct BatchRow {
    std::uint64_t seed = 0;
    std::optional<long> first_drink;  // empty = censored at max_ticks
};

struct BatchSummary {
    std::vector<BatchRow> rows;
    int censored = 0;
    double mean = 0.0;    // over uncensored rows
    double median = 0.0;  // over uncensored rows
};

// Runs n seeded copies of the scenario; explore=false swaps Explore for
// Wander in the selector so search performance can be compared.
BatchSummary runBatch(const Scenario& scenario, int n_runs, std::uint64_t seed_base, bool explore);

void writeBatchTable(std::ostream& out, const BatchSummary& summary, const std::string& variant);

}  // namespace animat
