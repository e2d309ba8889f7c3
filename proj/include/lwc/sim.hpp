#pragma once

// Monte Carlo writing/rewriting simulator. Each trial samples a defect
// state, performs an initial write of a random message, then a sequence of
// updates; costs, per-cell flip counts and bound checks are accumulated.
// Trials use disjoint RNG streams (seed + trial index) and results are
// merged in trial order, so output is deterministic under OpenMP.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lwc/additive.hpp"
#include "lwc/codespec.hpp"

#include <json.hpp>

namespace lwc {

struct SimConfig {
    CodeSpec code;
    double beta = 0.0;          // defect probability per cell
    int inject_t = -1;          // >= 0: exactly t defects instead of beta sampling
    int trials = 1;
    int updates_per_trial = 0;
    // "hamming-ball" flips 1..radius random bits per update; "iid-uniform"
    // draws a fresh uniform message.
    std::string update_model = "hamming-ball";
    int radius = 1;
    uint64_t seed = 0;
    bool fresh_state_per_trial = true;  // false: one state shared by all trials

    static SimConfig from_json(const nlohmann::json& j);
    static SimConfig from_file(const std::string& path);
};

struct WriteRecord {
    int trial = 0;
    int step = 0;  // 0 = initial write, 1.. = updates
    bool ok = true;
    bool minimal = true;
    int cost = 0;              // write cost at step 0, rewrite cost after
    std::optional<int> bound;  // single-defect cost bound when known
    std::vector<int> cells_touched;
};

struct SimResult {
    std::vector<WriteRecord> records;      // trial order, then step order
    std::vector<std::string> trial_states; // defect state text, one per trial
    int trials = 0;
    int masking_failures = 0;           // trials aborted by a failure
    double masking_failure_rate = 0.0;
    double mean_write_cost = 0.0;       // over successful initial writes
    int max_write_cost = 0;
    double mean_rewrite_cost = 0.0;     // over successful updates
    int max_rewrite_cost = 0;
    int bound_violations = 0;           // must stay 0 on single-defect trials
    std::vector<int64_t> cell_writes;   // per-cell flip counts (endurance proxy)

    nlohmann::json summary_json() const;
};

SimResult run(const SimConfig& config, Exec exec = Exec::Parallel);

// One row per write operation:
// trial,step,defect_state,cost,bound,minimal,cells_touched
// cells_touched is ';'-joined, bound empty when not applicable.
void write_csv(std::ostream& os, const SimResult& result);

}  // namespace lwc
