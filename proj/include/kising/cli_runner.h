// Copyright 2026 The kicked-ising Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KISING_CLI_RUNNER_H
#define KISING_CLI_RUNNER_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "kising/eigenstate_entropy.h"
#include "kising/spectral_stats.h"

namespace kising {

enum class Command { entropy_series, period, spectrum, spacings, ratios, rbar, eigenstate_ee, qkt_map, oracle_check };

enum class OutputFormat { csv, json };

enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitResource = 3, kExitNumeric = 4 };

const char *command_name(Command command);

struct RunConfig {
    Command command = Command::spectrum;
    /// One size for every command except eigenstate-ee, which accepts a list.
    std::vector<int> n_qubits;
    std::string coupling;
    std::int64_t tau_m = 1;
    double theta0 = 0.0;
    double phi0 = 0.0;
    std::int64_t kicks = 0;
    int order_k = 1;
    int bins = 50;
    PerturbParam perturb_param = PerturbParam::tau;
    double perturb_delta = 1e-10;
    SectorChoice sector = SectorChoice::plus;
    UnfoldMethod unfold = UnfoldMethod::rank();
    std::string out_path;
    OutputFormat format = OutputFormat::csv;
};

/// Parses command-line flags. Throws ArgumentError (or ParseError) on invalid
/// input; returns false when help was printed.
bool parse_run_config(int argc, const char *const *argv, RunConfig &config, std::ostream &help);

/// Checks the fields the command needs before any computation.
void validate(const RunConfig &config);

/// Runs the pipeline, writes the artifact to out_path (if set) and prints a
/// single-line JSON summary to `out`. Returns kExitNumeric when an
/// oracle comparison fails; other errors propagate as exceptions.
int run(const RunConfig &config, std::ostream &out, std::ostream &warn);

/// Full front end: parse, run, and map exceptions to exit codes with a
/// one-line JSON error on `err`.
int run_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// Writes `contents` to a temporary file next to `path` and renames it into place.
void write_atomically(const std::string &path, const std::string &contents);

}  // namespace kising

#endif
