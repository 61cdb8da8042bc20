#pragma once

#include <filesystem>
#include <string>

#include "msdiff/simulation.hpp"

namespace msdiff {

/// nodes.csv: t,x,species,n,P,p_total
std::string nodes_csv(const RunReport& report);
/// fluxes.csv: t,x_half,species,J
std::string fluxes_csv(const RunReport& report);
/// Run summary with the diagnostic trace and completion status.
std::string summary_json(const RunReport& report);

/// Writes nodes.csv, fluxes.csv and summary.json into dir.
void write_run(const RunReport& report, const std::filesystem::path& dir);

/// ms/ and homs/ run outputs plus compare.csv and comparison.json.
void write_compare(const CompareReport& report, const std::filesystem::path& dir);

/// Baseline and per-gamma runs plus sweep.csv and sweep.json.
void write_sweep(const SweepReport& report, const std::filesystem::path& dir);

/// Values are printed with 17 significant digits.
std::string format_value(double v);

}  // namespace msdiff
