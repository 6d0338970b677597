#pragma once

// Experiment drivers and report serialization behind the syscat-lab tool.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "syscat/error.hpp"

namespace syscat::lab {

struct ExperimentConfig {
  std::string experiment;  // pu, loewner, lattice-sweep, massey-demo, bounds-suite
  std::uint64_t seed = 7;
  int levels = 2;
  int iterations = 500;
  double step = 0.02;
  std::filesystem::path output_dir;  // empty: nothing is written by run_experiment
  int threads = 1;
  int samples = 10000;        // lattice-sweep, per rank
  int perturbations = 1000;   // loewner
  int massey_trials = 100;    // massey-demo
  std::filesystem::path input;  // bounds-suite descriptor file; empty means the built-in suite
  bool conjectures = false;
};

/// One headline number with its target and the source of that target.
struct Verdict {
  std::string name;
  std::string measured;
  std::string target;
  std::string provenance;
  bool pass = false;
};

struct Table {
  std::string file;     // e.g. "pu.csv"
  std::string comment;  // written as the first line, after "# "
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct RunReport {
  std::string experiment;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<Verdict> verdicts;
  std::vector<std::string> notes;
  std::vector<std::string> citations;
  std::vector<Table> tables;

  bool passed() const;
};

/// Validates the config (ConfigError) and runs the named driver.
RunReport run_experiment(const ExperimentConfig& cfg);
std::vector<std::string> experiment_names();

enum class Format { text, csv };
Format parse_format(const std::string& name);

std::string render_text(const RunReport& report);
std::string render_csv(const Table& table);

/// Writes `<experiment>_report.txt` (text) or every table plus
/// `<experiment>_verdicts.csv` (csv) into dir. Returns the paths written.
std::vector<std::filesystem::path> emit_report(const RunReport& report, Format format,
                                               const std::filesystem::path& dir);

/// min(requested, SYSCAT_LAB_THREADS) when the variable holds a positive integer.
int thread_cap(int requested);

/// Fixed-precision rendering used in every report, so output bytes are stable.
std::string fmt(double v, int digits = 12);

}  // namespace syscat::lab
