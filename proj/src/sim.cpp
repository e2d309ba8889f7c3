#include "lwc/sim.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lwc {

using nlohmann::json;

SimConfig SimConfig::from_json(const json& j) {
    SimConfig c;
    c.code = CodeSpec::from_json(j.at("code"));
    c.beta = j.value("beta", 0.0);
    c.inject_t = j.value("inject_t", -1);
    c.trials = j.at("trials").get<int>();
    c.updates_per_trial = j.value("updates_per_trial", 0);
    if (j.contains("update_model")) {
        const auto& um = j.at("update_model");
        c.update_model = um.at("type").get<std::string>();
        c.radius = um.value("radius", 1);
    }
    c.seed = j.value("seed", uint64_t{0});
    c.fresh_state_per_trial = j.value("fresh_state_per_trial", true);

    if (c.trials < 1) throw std::invalid_argument("SimConfig: trials must be >= 1");
    if (c.beta < 0.0 || c.beta > 1.0)
        throw std::invalid_argument("SimConfig: beta must lie in [0,1]");
    if (c.updates_per_trial < 0)
        throw std::invalid_argument("SimConfig: updates_per_trial must be >= 0");
    if (c.update_model != "hamming-ball" && c.update_model != "iid-uniform")
        throw std::invalid_argument("SimConfig: unknown update model " + c.update_model);
    if (c.update_model == "hamming-ball" && c.radius < 1)
        throw std::invalid_argument("SimConfig: radius must be >= 1");
    return c;
}

SimConfig SimConfig::from_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("SimConfig: cannot open " + path);
    json j;
    f >> j;
    return from_json(j);
}

namespace {

BitVector random_message(SplitMix64& rng, int k) {
    BitVector m(k);
    for (int i = 0; i < k; ++i) m.set(i, rng.next_bit());
    return m;
}

BitVector next_message(SplitMix64& rng, const SimConfig& cfg, const BitVector& cur) {
    if (cfg.update_model == "iid-uniform") return random_message(rng, cur.size());
    // hamming-ball: flip w distinct coordinates, w uniform in 1..radius.
    BitVector m = cur;
    int w = 1 + static_cast<int>(rng.next_below(static_cast<uint64_t>(cfg.radius)));
    std::vector<int> idx(cur.size());
    for (int i = 0; i < cur.size(); ++i) idx[i] = i;
    for (int j = 0; j < w; ++j) {
        int pick = j + static_cast<int>(rng.next_below(cur.size() - j));
        std::swap(idx[j], idx[pick]);
        m.flip(idx[j]);
    }
    return m;
}

ChannelState trial_state(const SimConfig& cfg, const AdditiveCode& code, uint64_t trial) {
    uint64_t seed = cfg.fresh_state_per_trial ? cfg.seed + trial : cfg.seed;
    if (cfg.inject_t >= 0) {
        SplitMix64 rng(seed);
        return sample_exact(rng, code.n(), cfg.inject_t);
    }
    return sample(DefectModel{cfg.beta, seed}, code.n());
}

struct TrialOutput {
    std::vector<WriteRecord> records;
    std::string state_text;
    bool failed = false;
    int bound_violations = 0;
    std::vector<int> cell_writes;
};

TrialOutput run_trial(const SimConfig& cfg, const AdditiveCode& code, int trial) {
    TrialOutput out;
    out.records.reserve(cfg.updates_per_trial + 1);
    out.cell_writes.assign(code.n(), 0);
    // Offset keeps message draws out of phase with the state sampler.
    SplitMix64 rng(cfg.seed + static_cast<uint64_t>(trial) + 0x517cc1b727220a95ULL);
    ChannelState s = trial_state(cfg, code, static_cast<uint64_t>(trial));
    out.state_text = s.to_string();

    auto record = [&](int step, const EncodeResult& r, int cost) {
        WriteRecord rec;
        rec.trial = trial;
        rec.step = step;
        rec.ok = r.ok;
        rec.cost = cost;
        rec.bound = r.report.bound;
        rec.minimal = r.report.minimal;
        rec.cells_touched = r.report.cells_touched;
        if (r.ok) {
            for (int i : r.report.cells_touched) ++out.cell_writes[i];
            // The cost bound is only claimed for minimal-mode encodes.
            if (r.report.bound && r.report.minimal && cost > *r.report.bound)
                ++out.bound_violations;
        }
        out.records.push_back(std::move(rec));
    };

    BitVector m = random_message(rng, code.k());
    EncodeResult first = encode_initial(code, m, s);
    record(0, first, first.ok ? *first.report.write_cost : 0);
    if (!first.ok) {
        out.failed = true;  // no post-failure policy; the trial stops here
        return out;
    }

    BitVector word = first.word;
    for (int step = 1; step <= cfg.updates_per_trial; ++step) {
        BitVector m_next = next_message(rng, cfg, m);
        EncodeResult r = encode_update(code, word, m_next, s);
        record(step, r, r.ok ? *r.report.rewrite_cost : 0);
        if (!r.ok) {
            out.failed = true;
            return out;
        }
        word = r.word;
        m = m_next;
    }
    return out;
}

}  // namespace

SimResult run(const SimConfig& config, Exec exec) {
    AdditiveCode code = make_additive(config.code);
    if (config.inject_t > code.n())
        throw std::invalid_argument("run: inject_t exceeds the block length");
    if (config.update_model == "hamming-ball" && config.radius > code.k())
        throw std::invalid_argument("run: update radius exceeds k");

    std::vector<TrialOutput> outputs(config.trials);

#ifdef _OPENMP
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (int t = 0; t < config.trials; ++t) outputs[t] = run_trial(config, code, t);
    } else
#else
    (void)exec;
#endif
    {
        for (int t = 0; t < config.trials; ++t) outputs[t] = run_trial(config, code, t);
    }

    SimResult res;
    res.trials = config.trials;
    res.trial_states.reserve(config.trials);
    res.cell_writes.assign(code.n(), 0);
    int64_t write_sum = 0, rewrite_sum = 0;
    int64_t writes = 0, rewrites = 0;
    for (auto& out : outputs) {
        res.trial_states.push_back(std::move(out.state_text));
        res.masking_failures += out.failed;
        res.bound_violations += out.bound_violations;
        for (int i = 0; i < code.n(); ++i) res.cell_writes[i] += out.cell_writes[i];
        for (auto& rec : out.records) {
            if (rec.ok) {
                if (rec.step == 0) {
                    write_sum += rec.cost;
                    ++writes;
                    res.max_write_cost = std::max(res.max_write_cost, rec.cost);
                } else {
                    rewrite_sum += rec.cost;
                    ++rewrites;
                    res.max_rewrite_cost = std::max(res.max_rewrite_cost, rec.cost);
                }
            }
            res.records.push_back(std::move(rec));
        }
    }
    res.masking_failure_rate =
        static_cast<double>(res.masking_failures) / static_cast<double>(config.trials);
    if (writes) res.mean_write_cost = static_cast<double>(write_sum) / writes;
    if (rewrites) res.mean_rewrite_cost = static_cast<double>(rewrite_sum) / rewrites;
    return res;
}

json SimResult::summary_json() const {
    return json{{"trials", trials},
                {"masking_failures", masking_failures},
                {"masking_failure_rate", masking_failure_rate},
                {"mean_write_cost", mean_write_cost},
                {"max_write_cost", max_write_cost},
                {"mean_rewrite_cost", mean_rewrite_cost},
                {"max_rewrite_cost", max_rewrite_cost},
                {"bound_violations", bound_violations},
                {"cell_writes", cell_writes}};
}

void write_csv(std::ostream& os, const SimResult& result) {
    os << "trial,step,defect_state,cost,bound,minimal,cells_touched\n";
    for (const auto& rec : result.records) {
        os << rec.trial << ',' << rec.step << ','
           << result.trial_states[rec.trial] << ',';
        if (rec.ok)
            os << rec.cost;
        else
            os << "FAIL";
        os << ',';
        if (rec.bound) os << *rec.bound;
        os << ',' << (rec.minimal ? 1 : 0) << ',';
        for (size_t i = 0; i < rec.cells_touched.size(); ++i) {
            if (i) os << ';';
            os << rec.cells_touched[i];
        }
        os << '\n';
    }
}

}  // namespace lwc
