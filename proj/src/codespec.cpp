#include "lwc/codespec.hpp"

#include <fstream>
#include <optional>

namespace lwc {

using nlohmann::json;

CodeSpec CodeSpec::from_json(const json& j) {
    CodeSpec s;
    s.n = j.at("n").get<int>();
    s.k = j.at("k").get<int>();
    s.construction = j.at("construction");
    if (!s.construction.contains("type"))
        throw std::invalid_argument("CodeSpec: construction needs a \"type\"");
    return s;
}

json CodeSpec::to_json() const {
    return json{{"n", n}, {"k", k}, {"construction", construction}};
}

namespace {

BitMatrix matrix_from(const json& rows) {
    std::vector<std::vector<int>> m;
    for (const auto& row : rows) m.push_back(row.get<std::vector<int>>());
    return BitMatrix::from_rows(m);
}

void check_nk(const CodeSpec& spec, int n, int k, const std::string& what) {
    if (spec.n != n || spec.k != k)
        throw ConstructionError("CodeSpec: declared (n=" + std::to_string(spec.n) +
                                ", k=" + std::to_string(spec.k) + ") does not match " +
                                what + " (n=" + std::to_string(n) +
                                ", k=" + std::to_string(k) + ")");
}

// flipN / groupflipN-G / repetitionN / spcN; returns nullopt on no match.
std::optional<int> parse_trailing_int(const std::string& s, const std::string& prefix) {
    if (s.size() <= prefix.size() || s.compare(0, prefix.size(), prefix) != 0)
        return std::nullopt;
    std::string rest = s.substr(prefix.size());
    if (rest.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    return std::stoi(rest);
}

std::optional<CodeSpec> stock_spec(const std::string& name) {
    CodeSpec s;
    if (name == "hamming7") {
        s.n = 7, s.k = 4;
        s.construction = {{"type", "cyclic"}, {"genpoly", {1, 1, 0, 1}}};
        return s;
    }
    if (name == "simplex7") {
        s.n = 7, s.k = 3;
        s.construction = {{"type", "cyclic"}, {"genpoly", {1, 1, 1, 0, 1}}};
        return s;
    }
    if (auto n = parse_trailing_int(name, "flip")) {
        s.n = *n, s.k = *n - 1;
        s.construction = {{"type", "flip"}};
        return s;
    }
    if (auto n = parse_trailing_int(name, "repetition")) {
        s.n = *n, s.k = 1;
        std::vector<int> g(*n, 1);
        s.construction = {{"type", "cyclic"}, {"genpoly", g}};
        return s;
    }
    if (auto n = parse_trailing_int(name, "spc")) {
        s.n = *n, s.k = *n - 1;
        s.construction = {{"type", "cyclic"}, {"genpoly", {1, 1}}};
        return s;
    }
    // groupflipN-G
    if (name.rfind("groupflip", 0) == 0) {
        auto dash = name.find('-');
        if (dash != std::string::npos) {
            auto n = parse_trailing_int(name.substr(0, dash), "groupflip");
            std::string gs = name.substr(dash + 1);
            if (n && !gs.empty() && gs.find_first_not_of("0123456789") == std::string::npos) {
                int g = std::stoi(gs);
                s.n = *n, s.k = *n - g;
                s.construction = {{"type", "groupflip"}, {"groups", g}};
                return s;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

CodeSpec resolve_spec(const std::string& name_or_path) {
    // NAME-lwc wraps the named code in a from-lrc construction.
    constexpr std::string_view kLwcSuffix = "-lwc";
    if (name_or_path.size() > kLwcSuffix.size() &&
        name_or_path.compare(name_or_path.size() - kLwcSuffix.size(),
                             kLwcSuffix.size(), kLwcSuffix) == 0) {
        auto base = stock_spec(name_or_path.substr(0, name_or_path.size() - kLwcSuffix.size()));
        if (base) {
            CodeSpec s;
            s.n = base->n;
            s.k = base->k;  // G0 = H is n x (n-k), so the LWC keeps (n, k)
            s.construction = {{"type", "from-lrc"}, {"lrc", base->to_json()}};
            return s;
        }
    }
    if (auto s = stock_spec(name_or_path)) return *s;

    std::ifstream f(name_or_path);
    if (!f)
        throw std::invalid_argument("unknown code name and no such file: " + name_or_path);
    json j;
    f >> j;
    return CodeSpec::from_json(j);
}

AdditiveCode make_additive(const CodeSpec& spec, int cap_log2) {
    const std::string type = spec.construction.at("type").get<std::string>();
    if (type == "explicit-G0") {
        BitMatrix g0 = matrix_from(spec.construction.at("rows"));
        check_nk(spec, g0.rows(), g0.rows() - g0.cols(), "explicit-G0");
        return AdditiveCode::build(g0, false, cap_log2);
    }
    if (type == "flip") {
        check_nk(spec, spec.n, spec.n - 1, "flip");
        return AdditiveCode::build(flip_matrix(spec.n), true, cap_log2);
    }
    if (type == "groupflip") {
        int g = spec.construction.at("groups").get<int>();
        check_nk(spec, spec.n, spec.n - g, "groupflip");
        return AdditiveCode::build(groupflip_matrix(spec.n, g), g == 1, cap_log2);
    }
    if (type == "cyclic") {
        // C0 is the cyclic code; its generator matrix is G0, so the LWC
        // message length is n - dim(C0).
        LinearCode c0 = cyclic_code(
            spec.n, BinPoly::from_coeffs(spec.construction.at("genpoly").get<std::vector<int>>()));
        check_nk(spec, c0.n(), c0.n() - c0.k(), "cyclic C0");
        return AdditiveCode::build(c0.gen(), true, cap_log2);
    }
    if (type == "from-lrc") {
        CodeSpec inner = CodeSpec::from_json(spec.construction.at("lrc"));
        LinearCode lrc = make_linear(inner);
        check_nk(spec, lrc.n(), lrc.k(), "from-lrc");
        return AdditiveCode::build(lrc.pcheck(), lrc.is_cyclic(), cap_log2);
    }
    throw std::invalid_argument("CodeSpec: construction \"" + type +
                                "\" cannot build an LWC here");
}

LinearCode make_linear(const CodeSpec& spec) {
    const std::string type = spec.construction.at("type").get<std::string>();
    if (type == "cyclic") {
        LinearCode c = cyclic_code(
            spec.n, BinPoly::from_coeffs(spec.construction.at("genpoly").get<std::vector<int>>()));
        check_nk(spec, c.n(), c.k(), "cyclic");
        return c;
    }
    if (type == "explicit-G") {
        LinearCode c = LinearCode::from_generator(matrix_from(spec.construction.at("rows")));
        check_nk(spec, c.n(), c.k(), "explicit-G");
        return c;
    }
    if (type == "explicit-H") {
        LinearCode c = LinearCode::from_parity_check(matrix_from(spec.construction.at("rows")));
        check_nk(spec, c.n(), c.k(), "explicit-H");
        return c;
    }
    throw std::invalid_argument("CodeSpec: construction \"" + type +
                                "\" does not define a linear code");
}

}  // namespace lwc
