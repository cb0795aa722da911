#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twocolor/check.hpp"
#include "twocolor/constructions.hpp"
#include "twocolor/distribution.hpp"
#include "twocolor/search.hpp"

namespace {

using nlohmann::json;
using namespace twocolor;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;      // a FAIL verdict, not an error
constexpr int kExitBadInput = 2;  // malformed input or usage

Alphabet parse_alphabet(const std::string& csv) {
    std::vector<int> symbols;
    std::istringstream ss(csv);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t pos = 0;
        int v = std::stoi(part, &pos);
        if (pos != part.size()) throw std::invalid_argument(part);
        symbols.push_back(v);
    }
    return Alphabet(std::move(symbols));
}

JointDistribution read_input(const std::string& path) {
    if (path == "-") return read_distribution(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_distribution(in);
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
}

json report_json(const std::string& mode, const VerificationReport& r) {
    json j;
    j["mode"] = mode;
    j["verdict"] = r.verdict ? "PASS" : "FAIL";
    if (r.witness) {
        json w;
        w["first"] = format_outcome(r.witness->first);
        w["first_mass"] = r.witness->first_mass.str();
        w["second"] = format_outcome(r.witness->second);
        w["second_mass"] = r.witness->second_mass.str();
        if (r.witness->coloring) w["coloring"] = r.witness->coloring->str();
        j["witness"] = w;
    }
    return j;
}

int run_verify(const std::string& path, const std::string& mode,
               bool as_json) {
    JointDistribution d = read_input(path);
    std::vector<std::pair<std::string, VerificationReport>> reports;
    if (mode == "exchangeable" || mode == "both")
        reports.emplace_back("exchangeable", is_exchangeable(d));
    if (mode == "two-color" || mode == "both")
        reports.emplace_back("two-color", is_two_color_exchangeable(d));
    if (as_json) {
        json out = json::array();
        for (const auto& [name, r] : reports)
            out.push_back(report_json(name, r));
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& [name, r] : reports)
            std::cout << "mode: " << name << "\n" << r.str() << "\n";
    }
    for (const auto& [name, r] : reports)
        if (!r.verdict) return kExitFail;
    return kExitPass;
}

JointDistribution build_construction(const std::string& name) {
    if (name == "pair") return pair_counterexample();
    if (name.rfind("general:", 0) == 0) {
        std::size_t pos = 0;
        const std::string arg = name.substr(8);
        long n = std::stol(arg, &pos);
        if (pos != arg.size() || n < 3)
            throw std::invalid_argument("invalid n in " + name);
        return general_counterexample(static_cast<std::size_t>(n));
    }
    throw std::invalid_argument("unknown construction " + name);
}

SupportSpec build_support(const Alphabet& alphabet, std::size_t n,
                          const std::string& kind) {
    if (kind == "full") return full_support(alphabet, n);
    if (kind == "omega") {
        if (alphabet != Alphabet::ternary())
            throw std::invalid_argument(
                "omega support requires alphabet -1,0,1");
        return SupportSpec(alphabet, n, omega_family(n));
    }
    throw std::invalid_argument("unknown support kind " + kind);
}

std::string dims_line(const GapDimensions& g) {
    return "dims: two_color=" + std::to_string(g.dim_two_color) +
           " exchangeable=" + std::to_string(g.dim_exchangeable);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exchangeability and two-color exchangeability toolkit"};
    app.require_subcommand(1);

    std::string verify_path, verify_mode = "both";
    bool verify_json = false;
    auto* verify = app.add_subcommand(
        "verify", "check a distribution file (use - for stdin)");
    verify->add_option("file", verify_path)->required();
    verify->add_option("--mode", verify_mode)
        ->check(CLI::IsMember({"exchangeable", "two-color", "both"}));
    verify->add_flag("--json", verify_json, "machine-readable report");

    std::string construct_name, construct_out = "-";
    auto* construct = app.add_subcommand(
        "construct", "emit a built-in distribution (pair or general:<n>)");
    construct->add_option("name", construct_name)->required();
    construct->add_option("-o,--output", construct_out);

    std::string search_alphabet = "-1,0,1", search_kind = "full",
                search_out = "-";
    std::size_t search_n = 2;
    auto* search = app.add_subcommand(
        "search", "find a two-color-but-not-exchangeable distribution");
    search->add_option("--alphabet", search_alphabet);
    search->add_option("--n", search_n)->required();
    search->add_option("--support", search_kind)
        ->check(CLI::IsMember({"full", "omega"}));
    search->add_option("-o,--output", search_out);

    std::string dims_alphabet = "-1,0,1", dims_kind = "full";
    std::size_t dims_n = 2;
    auto* dims = app.add_subcommand(
        "dims", "solution-space dimensions of the two constraint systems");
    dims->add_option("--alphabet", dims_alphabet);
    dims->add_option("--n", dims_n)->required();
    dims->add_option("--support", dims_kind)
        ->check(CLI::IsMember({"full", "omega"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (verify->parsed())
            return run_verify(verify_path, verify_mode, verify_json);
        if (construct->parsed()) {
            write_output(construct_out,
                         write_distribution(build_construction(construct_name)));
            return kExitPass;
        }
        if (search->parsed()) {
            SupportSpec spec = build_support(parse_alphabet(search_alphabet),
                                             search_n, search_kind);
            std::cout << dims_line(gap_dimensions(spec)) << "\n";
            if (auto witness = find_gap_witness(spec))
                write_output(search_out, write_distribution(*witness));
            else
                std::cout << "no gap\n";
            return kExitPass;
        }
        if (dims->parsed()) {
            SupportSpec spec = build_support(parse_alphabet(dims_alphabet),
                                             dims_n, dims_kind);
            std::cout << dims_line(gap_dimensions(spec)) << "\n";
            return kExitPass;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
