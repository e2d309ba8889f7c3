#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "lwc/codespec.hpp"
#include "lwc/duality.hpp"

using namespace lwc;
using nlohmann::json;

TEST_CASE("stock names resolve") {
    CHECK(make_additive(resolve_spec("flip4")).n() == 4);
    CHECK(make_additive(resolve_spec("flip4")).k() == 3);
    CHECK(make_additive(resolve_spec("groupflip6-2")).k() == 4);
    CHECK(make_linear(resolve_spec("hamming7")).k() == 4);
    CHECK(make_linear(resolve_spec("simplex7")).k() == 3);
    CHECK(make_linear(resolve_spec("repetition5")).k() == 1);
    CHECK(make_linear(resolve_spec("spc6")).k() == 5);
    CHECK_THROWS_AS(resolve_spec("nosuchcode"), std::invalid_argument);
}

TEST_CASE("NAME-lwc builds from the named code's parity check") {
    AdditiveCode code = make_additive(resolve_spec("hamming7-lwc"));
    CHECK(code.n() == 7);
    CHECK(code.k() == 4);
    LwcAnalysis a = analyze(code);
    CHECK(a.d_star == 3);
    CHECK(a.r_star == 3);

    AdditiveCode f = make_additive(resolve_spec("spc5-lwc"));
    CHECK(f.g0() == flip_matrix(5));
}

TEST_CASE("explicit-G0 spec round-trips through JSON") {
    json j = {{"n", 4},
              {"k", 3},
              {"construction",
               {{"type", "explicit-G0"}, {"rows", {{1}, {1}, {1}, {1}}}}}};
    AdditiveCode code = make_additive(CodeSpec::from_json(j));
    CHECK(code.g0() == flip_matrix(4));
}

TEST_CASE("declared n,k must match the construction") {
    json j = {{"n", 4},
              {"k", 2},  // wrong: flip has k = n-1
              {"construction", {{"type", "flip"}}}};
    CHECK_THROWS_AS(make_additive(CodeSpec::from_json(j)), ConstructionError);
}

TEST_CASE("cyclic spec builds C0 for the LWC and the code itself for the LRC") {
    json j = {{"n", 7},
              {"k", 4},
              {"construction", {{"type", "cyclic"}, {"genpoly", {1, 1, 0, 1}}}}};
    // As an LRC: the (7,4) Hamming code itself.
    LinearCode lrc = make_linear(CodeSpec::from_json(j));
    CHECK(lrc.k() == 4);
    CHECK(lrc.is_cyclic());

    // As an LWC: C0 is the cyclic code, so k = n - dim(C0) = 3.
    json j2 = j;
    j2["k"] = 3;
    AdditiveCode lwc = make_additive(CodeSpec::from_json(j2));
    CHECK(lwc.k() == 3);
}

TEST_CASE("spec files load from disk") {
    const char* path = "test_spec_tmp.json";
    {
        std::ofstream f(path);
        f << R"({"n": 6, "k": 4, "construction": {"type": "groupflip", "groups": 2}})";
    }
    AdditiveCode code = make_additive(resolve_spec(path));
    CHECK(code.g0() == groupflip_matrix(6, 2));
    std::remove(path);
}

TEST_CASE("explicit-H defines the LRC of the two-group example") {
    json j = {{"n", 6},
              {"k", 4},
              {"construction",
               {{"type", "explicit-H"},
                {"rows", {{1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}, {0, 1}}}}}};
    LinearCode c = make_linear(CodeSpec::from_json(j));
    CHECK(repair_locality(c).r == 2);
}
