// lwc: locally rewritable codes for the stuck-at defect channel.
//
// Subcommands: analyze, encode, update, decode, duality, bounds, simulate.
// Exit codes: 0 success (a masking failure is data, not an error),
// 1 domain error, 2 usage error. All bit strings and indices are 0-based,
// read left to right; channel states use '*' for a normal cell.

#include <fstream>
#include <iostream>
#include <string>

#include "lwc/additive.hpp"
#include "lwc/codespec.hpp"
#include "lwc/duality.hpp"
#include "lwc/sim.hpp"

#include <CLI11.hpp>
#include <json.hpp>

using nlohmann::json;

namespace {

json report_json(const lwc::CostReport& r) {
    json j;
    j["write_cost"] = r.write_cost ? json(*r.write_cost) : json(nullptr);
    j["rewrite_cost"] = r.rewrite_cost ? json(*r.rewrite_cost) : json(nullptr);
    j["bound"] = r.bound ? json(*r.bound) : json(nullptr);
    j["cells_touched"] = r.cells_touched;
    j["minimal"] = r.minimal;
    return j;
}

json encode_json(const lwc::EncodeResult& r) {
    json j;
    j["ok"] = r.ok;
    if (r.ok) {
        j["word"] = r.word.to_string();
        j["report"] = report_json(r.report);
    } else {
        j["masking_failure"] = {{"unsatisfiable", r.failure.unsatisfiable}};
    }
    return j;
}

json analysis_json(const lwc::AdditiveCode& code, const lwc::LwcAnalysis& a) {
    return json{{"n", code.n()},       {"k", code.k()},
                {"d_star", a.d_star},  {"r_star", a.r_star},
                {"locality", a.locality}, {"optimal", a.optimal}};
}

json duality_json(const lwc::DualityReport& r) {
    return json{{"lrc",
                 {{"n", r.lrc.n},
                  {"k", r.lrc.k},
                  {"d", r.lrc.d},
                  {"r", r.lrc.r},
                  {"repair_locality", r.lrc.repair_locality},
                  {"optimal", r.lrc.optimal}}},
                {"lwc",
                 {{"d_star", r.lwc_d_star},
                  {"r_star", r.lwc_r_star},
                  {"optimal", r.lwc_optimal}}},
                {"d_dual", r.d_dual},
                {"cyclic", r.cyclic},
                {"identities_hold", r.identities_hold}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Locally rewritable codes for the stuck-at defect channel"};
    app.require_subcommand(1);

    std::string code_arg, lrc_arg, msg_arg, state_arg, prev_arg, word_arg;
    std::string config_path, out_path;
    int bn = 0, bk = 0, br = 0, bt = 0;
    bool kuznetsov = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "d*, r* and per-coordinate locality");
    analyze_cmd->add_option("--code", code_arg, "code name or spec file")->required();

    auto* encode_cmd = app.add_subcommand("encode", "initial write into all-zero memory");
    encode_cmd->add_option("--code", code_arg)->required();
    encode_cmd->add_option("--msg", msg_arg, "message bits, e.g. 101")->required();
    encode_cmd->add_option("--state", state_arg, "channel state over {0,1,*}")->required();

    auto* update_cmd = app.add_subcommand("update", "rewrite to a new message");
    update_cmd->add_option("--code", code_arg)->required();
    update_cmd->add_option("--prev", prev_arg, "currently stored word")->required();
    update_cmd->add_option("--msg", msg_arg, "new message bits")->required();
    update_cmd->add_option("--state", state_arg)->required();

    auto* decode_cmd = app.add_subcommand("decode", "recover the message from a word");
    decode_cmd->add_option("--code", code_arg)->required();
    decode_cmd->add_option("--word", word_arg)->required();

    auto* duality_cmd = app.add_subcommand("duality", "LRC/LWC duality report");
    duality_cmd->add_option("--lrc", lrc_arg, "linear code name or spec file")->required();

    auto* bounds_cmd = app.add_subcommand("bounds", "locality Singleton / Kuznetsov bounds");
    bounds_cmd->add_option("--n", bn)->required();
    bounds_cmd->add_option("--k", bk);
    bounds_cmd->add_option("--r", br);
    bounds_cmd->add_option("--t", bt);
    bounds_cmd->add_flag("--kuznetsov", kuznetsov, "defect-count bounds instead of locality");

    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo cost simulation");
    sim_cmd->add_option("--config", config_path, "SimConfig JSON file")->required();
    sim_cmd->add_option("--out", out_path, "per-write CSV output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze_cmd) {
            auto code = lwc::make_additive(lwc::resolve_spec(code_arg));
            std::cout << analysis_json(code, lwc::analyze(code)).dump(2) << "\n";
        } else if (*encode_cmd) {
            auto code = lwc::make_additive(lwc::resolve_spec(code_arg));
            auto res = lwc::encode_initial(code, lwc::BitVector::from_string(msg_arg),
                                           lwc::ChannelState::from_string(state_arg));
            std::cout << encode_json(res).dump(2) << "\n";
        } else if (*update_cmd) {
            auto code = lwc::make_additive(lwc::resolve_spec(code_arg));
            auto res = lwc::encode_update(code, lwc::BitVector::from_string(prev_arg),
                                          lwc::BitVector::from_string(msg_arg),
                                          lwc::ChannelState::from_string(state_arg));
            std::cout << encode_json(res).dump(2) << "\n";
        } else if (*decode_cmd) {
            auto code = lwc::make_additive(lwc::resolve_spec(code_arg));
            auto m = lwc::decode(code, lwc::BitVector::from_string(word_arg));
            std::cout << json{{"message", m.to_string()}}.dump(2) << "\n";
        } else if (*duality_cmd) {
            auto lrc = lwc::make_linear(lwc::resolve_spec(lrc_arg));
            std::cout << duality_json(lwc::verify_duality(lrc)).dump(2) << "\n";
        } else if (*bounds_cmd) {
            if (kuznetsov) {
                auto b = lwc::kuznetsov_bounds(bn, bt);
                std::cout << json{{"lower", b.lower}, {"upper", b.upper}}.dump(2) << "\n";
            } else {
                std::cout << json{{"d_max", lwc::singleton_bound(bn, bk, br)}}.dump(2)
                          << "\n";
            }
        } else if (*sim_cmd) {
            auto cfg = lwc::SimConfig::from_file(config_path);
            auto result = lwc::run(cfg);
            if (!out_path.empty()) {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw std::invalid_argument("cannot open " + out_path);
                lwc::write_csv(out, result);
            }
            std::cout << result.summary_json().dump(2) << "\n";
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
