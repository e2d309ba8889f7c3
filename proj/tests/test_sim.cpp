#include <doctest.h>

#include <sstream>

#include "lwc/sim.hpp"

using namespace lwc;
using nlohmann::json;

namespace {

SimConfig config_from(const char* text) { return SimConfig::from_json(json::parse(text)); }

const char* kFlip8Config = R"({
  "code": {"n": 8, "k": 7, "construction": {"type": "flip"}},
  "beta": 0.05,
  "trials": 2000,
  "updates_per_trial": 4,
  "update_model": {"type": "hamming-ball", "radius": 1},
  "seed": 424242
})";

}  // namespace

TEST_CASE("defect-free simulation: no failures, rewrite costs equal the delta") {
    SimConfig cfg = config_from(R"({
      "code": {"n": 7, "k": 4, "construction": {"type": "from-lrc",
               "lrc": {"n": 7, "k": 4, "construction": {"type": "cyclic", "genpoly": [1,1,0,1]}}}},
      "beta": 0.0,
      "trials": 300,
      "updates_per_trial": 5,
      "update_model": {"type": "hamming-ball", "radius": 2},
      "seed": 7
    })");
    SimResult res = run(cfg);
    CHECK(res.masking_failures == 0);
    CHECK(res.bound_violations == 0);
    for (const auto& rec : res.records) {
        if (rec.step == 0) continue;
        // With no defects the minimal rewrite flips exactly the changed
        // message bits: cost is 1 or 2 under radius 2.
        CHECK(rec.cost >= 1);
        CHECK(rec.cost <= 2);
        CHECK(rec.cost == static_cast<int>(rec.cells_touched.size()));
    }
}

TEST_CASE("single-defect trials never violate the rewrite bound") {
    SimConfig cfg = config_from(kFlip8Config);
    SimResult res = run(cfg);
    CHECK(res.bound_violations == 0);
    int singles = 0;
    for (const auto& rec : res.records) {
        int defects = 0;
        for (char c : res.trial_states[rec.trial]) defects += c != '*';
        if (defects == 1 && rec.step > 0 && rec.ok) {
            ++singles;
            REQUIRE(rec.bound.has_value());
            CHECK(rec.cost <= *rec.bound);
        }
    }
    CHECK(singles > 100);  // the sweep actually exercised single-defect updates
}

TEST_CASE("stuck cells are never physically written") {
    SimConfig cfg = config_from(kFlip8Config);
    SimResult res = run(cfg);
    for (const auto& rec : res.records)
        for (int cell : rec.cells_touched)
            CHECK(res.trial_states[rec.trial][cell] == '*');
}

TEST_CASE("per-cell flips add up to the cost sum, per trial and overall") {
    SimConfig cfg = config_from(kFlip8Config);
    SimResult res = run(cfg);
    std::vector<int64_t> flips(8, 0);
    std::vector<int64_t> trial_flips(cfg.trials, 0), trial_costs(cfg.trials, 0);
    for (const auto& rec : res.records) {
        if (!rec.ok) continue;
        trial_costs[rec.trial] += rec.cost;
        trial_flips[rec.trial] += static_cast<int64_t>(rec.cells_touched.size());
        for (int cell : rec.cells_touched) ++flips[cell];
    }
    for (int t = 0; t < cfg.trials; ++t) CHECK(trial_flips[t] == trial_costs[t]);
    int64_t cost_sum = 0, cw_sum = 0;
    for (int t = 0; t < cfg.trials; ++t) cost_sum += trial_costs[t];
    for (int i = 0; i < 8; ++i) {
        CHECK(flips[i] == res.cell_writes[i]);
        cw_sum += res.cell_writes[i];
    }
    CHECK(cw_sum == cost_sum);
}

TEST_CASE("identical seeds reproduce byte-identical CSV, parallel or serial") {
    SimConfig cfg = config_from(kFlip8Config);
    std::ostringstream a, b, c;
    write_csv(a, run(cfg, Exec::Parallel));
    write_csv(b, run(cfg, Exec::Parallel));
    write_csv(c, run(cfg, Exec::Serial));
    CHECK(a.str() == b.str());
    CHECK(a.str() == c.str());
    CHECK(a.str().substr(0, a.str().find('\n')) ==
          "trial,step,defect_state,cost,bound,minimal,cells_touched");
}

TEST_CASE("different seeds give different traces") {
    SimConfig cfg1 = config_from(kFlip8Config);
    SimConfig cfg2 = cfg1;
    cfg2.seed += 1;
    std::ostringstream a, b;
    write_csv(a, run(cfg1));
    write_csv(b, run(cfg2));
    CHECK(a.str() != b.str());
}

TEST_CASE("forced defect injection hits the exact failure fraction") {
    // Oracle: exhaust all three-defect states x all messages of the Hamming
    // LWC and count masking failures.
    AdditiveCode code = make_additive(resolve_spec("hamming7-lwc"));
    StateEnumerator states(7, 3);
    int64_t fail = 0, total = 0;
    for (auto s : states) {
        for (uint64_t mb = 0; mb < 16; ++mb) {
            BitVector m(4);
            for (int i = 0; i < 4; ++i) m.set(i, (mb >> i) & 1);
            ++total;
            fail += !encode_initial(code, m, s).ok;
        }
    }
    REQUIRE(total == 280 * 16);
    double exact = static_cast<double>(fail) / static_cast<double>(total);
    CHECK(exact > 0.0);

    SimConfig cfg = config_from(R"({
      "code": {"n": 7, "k": 4, "construction": {"type": "from-lrc",
               "lrc": {"n": 7, "k": 4, "construction": {"type": "cyclic", "genpoly": [1,1,0,1]}}}},
      "inject_t": 3,
      "trials": 20000,
      "updates_per_trial": 0,
      "seed": 99
    })");
    SimResult res = run(cfg);
    double margin = 2.576 * std::sqrt(exact * (1 - exact) / cfg.trials);
    CHECK(std::abs(res.masking_failure_rate - exact) < margin);
}

TEST_CASE("fixed-state mode shares one channel state across trials") {
    SimConfig cfg = config_from(R"({
      "code": {"n": 8, "k": 7, "construction": {"type": "flip"}},
      "beta": 0.3,
      "trials": 50,
      "updates_per_trial": 1,
      "seed": 5,
      "fresh_state_per_trial": false
    })");
    SimResult res = run(cfg);
    for (const auto& state : res.trial_states)
        CHECK(state == res.trial_states.front());
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(config_from(R"({"code": {"n": 4, "k": 3,
        "construction": {"type": "flip"}}, "trials": 0})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(config_from(R"({"code": {"n": 4, "k": 3,
        "construction": {"type": "flip"}}, "trials": 1, "beta": 2.0})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(config_from(R"({"code": {"n": 4, "k": 3,
        "construction": {"type": "flip"}}, "trials": 1,
        "update_model": {"type": "bogus"}})"),
                    std::invalid_argument);
    // Radius above k is rejected at run time, when k is known.
    SimConfig cfg = config_from(R"({"code": {"n": 4, "k": 3,
        "construction": {"type": "flip"}}, "trials": 1,
        "update_model": {"type": "hamming-ball", "radius": 5}})");
    CHECK_THROWS_AS(run(cfg), std::invalid_argument);
}
