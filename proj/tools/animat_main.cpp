#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "animat/scenario.hpp"
#include "animat/sim.hpp"
#include "animat/trace.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;

void printErrors(const std::vector<std::string>& errors) {
    for (const auto& e : errors) std::cerr << "error: " << e << "\n";
}

bool writeFile(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write output file: " << path << "\n";
        return false;
    }
    writer(out);
    return out.good();
}

int cmdRun(const std::string& path, std::optional<std::uint64_t> seed, std::optional<long> ticks,
           const std::string& tracePath, const std::string& patternPath,
           const std::string& svgPath) {
    auto loaded = animat::loadScenarioFile(path);
    if (!loaded.ok()) {
        printErrors(loaded.errors);
        return kExitUsage;
    }
    animat::Scenario scenario = *loaded.scenario;
    if (seed) scenario.seed = *seed;
    if (ticks) scenario.max_ticks = *ticks;
    auto errors = animat::validateScenario(scenario);
    if (!errors.empty()) {
        printErrors(errors);
        return kExitUsage;
    }

    animat::RunResult result = animat::run(scenario);

    if (!tracePath.empty() &&
        !writeFile(tracePath, [&](std::ostream& out) { animat::writeTrace(out, result); }))
        return kExitUsage;
    if (!patternPath.empty() &&
        !writeFile(patternPath, [&](std::ostream& out) { animat::writePattern(out, result); }))
        return kExitUsage;
    if (!svgPath.empty() &&
        !writeFile(svgPath, [&](std::ostream& out) { animat::writeTimelineSvg(out, result); }))
        return kExitUsage;

    auto pattern = animat::actionPattern(result);
    std::cout << "scenario: " << scenario.name << "\n";
    std::cout << "ticks: " << result.events.size() << "\n";
    std::cout << "termination: "
              << (result.termination == animat::Termination::Death ? "death" : "max_ticks")
              << "\n";
    for (const auto& ev : result.events) {
        if (ev.drive) {
            std::cout << "first_drive: " << animat::driveKindName(*ev.drive) << " (tick "
                      << ev.tick << ")\n";
            break;
        }
    }
    std::cout << "segments: " << pattern.size() << "\n";
    std::cout << "final: thirst=" << result.final_state.thirst
              << " hunger=" << result.final_state.hunger
              << " fatigue=" << result.final_state.fatigue
              << " strength=" << result.final_state.strength << "\n";
    return kExitOk;
}

int cmdBatch(const std::string& path, int runs, std::uint64_t seedBase, const std::string& variant,
             const std::string& outPath) {
    auto loaded = animat::loadScenarioFile(path);
    if (!loaded.ok()) {
        printErrors(loaded.errors);
        return kExitUsage;
    }
    bool explore = variant == "explore";
    animat::BatchSummary summary = animat::runBatch(*loaded.scenario, runs, seedBase, explore);
    if (!outPath.empty()) {
        if (!writeFile(outPath,
                       [&](std::ostream& out) { animat::writeBatchTable(out, summary, variant); }))
            return kExitUsage;
    }
    animat::writeBatchTable(std::cout, summary, variant);
    return kExitOk;
}

int cmdValidate(const std::string& path) {
    auto loaded = animat::loadScenarioFile(path);
    if (!loaded.ok()) {
        printErrors(loaded.errors);
        return kExitUsage;
    }
    std::cout << animat::scenarioToJson(*loaded.scenario).dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"IBeNet animat simulator"};
    app.require_subcommand(1);

    std::string scenarioPath;
    std::optional<std::uint64_t> seed;
    std::optional<long> ticks;
    std::string tracePath;
    std::string patternPath;
    std::string svgPath;

    CLI::App* runCmd = app.add_subcommand("run", "Run a scenario and write its trace");
    runCmd->add_option("scenario", scenarioPath, "Scenario file (JSON)")->required();
    runCmd->add_option("--seed", seed, "Override the scenario seed");
    runCmd->add_option("--ticks", ticks, "Override max_ticks");
    runCmd->add_option("--trace", tracePath, "Write the per-tick trace CSV here");
    runCmd->add_option("--pattern", patternPath, "Write the behaviour pattern CSV here");
    runCmd->add_option("--svg", svgPath, "Write a timeline plot here");

    std::string batchPath;
    int runs = 1;
    std::uint64_t seedBase = 0;
    std::string variant = "explore";
    std::string batchOut;

    CLI::App* batchCmd = app.add_subcommand("batch", "Run many seeds and summarize search times");
    batchCmd->add_option("scenario", batchPath, "Scenario file (JSON)")->required();
    batchCmd->add_option("--runs", runs, "Number of seeded runs")->required()
        ->check(CLI::PositiveNumber);
    batchCmd->add_option("--seed-base", seedBase, "First seed; run i uses seed-base + i");
    batchCmd->add_option("--variant", variant, "explore (default selector) or wander")
        ->check(CLI::IsMember({"explore", "wander"}));
    batchCmd->add_option("--out", batchOut, "Write the batch table here");

    std::string validatePath;
    CLI::App* validateCmd =
        app.add_subcommand("validate", "Check a scenario file and echo the effective config");
    validateCmd->add_option("scenario", validatePath, "Scenario file (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (runCmd->parsed())
            return cmdRun(scenarioPath, seed, ticks, tracePath, patternPath, svgPath);
        if (batchCmd->parsed()) return cmdBatch(batchPath, runs, seedBase, variant, batchOut);
        if (validateCmd->parsed()) return cmdValidate(validatePath);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
