// End-to-end acceptance suite. Each criterion prints a single PASS/FAIL
// line; the process exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "random_distributions.hpp"
#include "twocolor/check.hpp"
#include "twocolor/constructions.hpp"
#include "twocolor/search.hpp"

using namespace twocolor;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label,
               const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::cout << "criterion " << number << " (" << label
              << "): " << (ok ? "PASS" : "FAIL") << note << "\n";
    if (!ok) ++g_failures;
}

bool check(bool cond, const char* what) {
    if (!cond) std::cout << "  failed: " << what << "\n";
    return cond;
}

double elapsed_ms(const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    body();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

bool pair_counterexample_verdicts() {
    bool ok = true;
    double ms = elapsed_ms([&] {
        VerificationReport exch = is_exchangeable(pair_counterexample());
        VerificationReport tc =
            is_two_color_exchangeable(pair_counterexample());
        ok &= check(!exch.verdict, "pair distribution must fail exchangeable");
        ok &= check(exch.witness && exch.witness->first == Outcome{-1, 0} &&
                        exch.witness->second == Outcome{0, -1} &&
                        exch.witness->first_mass == rational(1, 9) &&
                        exch.witness->second_mass == rational(2, 9),
                    "witness must be (-1,0) 1/9 vs (0,-1) 2/9");
        ok &= check(tc.verdict, "pair distribution must pass two-color");
    });
    ok &= check(ms < 1.0, "runtime under 1 ms");
    return ok;
}

bool pair_coloring_table() {
    JointDistribution pair = pair_counterexample();
    bool ok = true;

    // representative complement of delta_{-1}
    JointDistribution rep = pushforward(pair, Coloring(pair.alphabet(), {0, 1}));
    ok &= check(rep.mass({0, 0}) == Rational(0), "rep mass at (0,0)");
    ok &= check(rep.mass({0, 1}) == rational(1, 3), "rep mass at (0,1)");
    ok &= check(rep.mass({1, 0}) == rational(1, 3), "rep mass at (1,0)");
    ok &= check(rep.mass({1, 1}) == rational(1, 3), "rep mass at (1,1)");

    // the same table on the delta side after relabeling 0 <-> 1
    JointDistribution nu = pushforward(pair, Coloring(pair.alphabet(), {-1}));
    ok &= check(nu.mass({1, 1}) == Rational(0), "delta mass at (1,1)");
    ok &= check(nu.mass({1, 0}) == rational(1, 3), "delta mass at (1,0)");
    ok &= check(nu.mass({0, 1}) == rational(1, 3), "delta mass at (0,1)");
    ok &= check(nu.mass({0, 0}) == rational(1, 3), "delta mass at (0,0)");
    return ok;
}

bool general_family_verdicts() {
    bool ok = true;
    double ms = elapsed_ms([&] {
        for (std::size_t n = 3; n <= 8; ++n) {
            JointDistribution d = general_counterexample(n);
            ok &= check(!is_exchangeable(d).verdict,
                        "general family must fail exchangeable");
            ok &= check(is_two_color_exchangeable(d).verdict,
                        "general family must pass two-color");
            Rational expected = rational(1, 3 * static_cast<long>(n));
            for (const Coloring& c : nontrivial_colorings(d.alphabet())) {
                JointDistribution nu = pushforward(d, c);
                for (const auto& [o, m] : nu.masses()) {
                    auto weight = static_cast<std::size_t>(
                        std::count(o.begin(), o.end(), 1));
                    if (weight == 1 || weight == n - 1)
                        ok &= check(m == expected,
                                    "pushforward mass must be 1/(3n)");
                }
            }
        }
    });
    ok &= check(ms < 1000.0, "runtime under 1 s");
    return ok;
}

bool general_family_normalized() {
    bool ok = true;
    for (std::size_t n = 3; n <= 10; ++n) {
        Rational total;
        JointDistribution d = general_counterexample(n);
        for (const auto& [o, m] : d.masses())
            total += m;
        ok &= check(total == Rational(1), "masses must sum to 1");
    }
    return ok;
}

bool oracle_equivalence() {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<std::size_t> len(1, 6);
    std::vector<Alphabet> alphabets = {Alphabet::binary(), Alphabet::ternary(),
                                       Alphabet({-1, 0, 1, 2})};
    for (int trial = 0; trial < 1000; ++trial) {
        const Alphabet& a = alphabets[trial % alphabets.size()];
        JointDistribution d = testing::random_distribution(rng, a, len(rng));
        if (is_exchangeable(d).verdict != is_exchangeable_oracle(d)) {
            check(false, "checker must agree with the brute-force oracle");
            return false;
        }
    }
    return true;
}

bool symmetrized_always_two_color() {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<std::size_t> len(1, 5);
    for (int trial = 0; trial < 1000; ++trial) {
        JointDistribution d = testing::random_distribution(
            rng, Alphabet::ternary(), len(rng));
        if (!is_two_color_exchangeable(symmetrize(d)).verdict) {
            check(false, "symmetrized laws must pass two-color");
            return false;
        }
    }
    return true;
}

bool binary_collapse() {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<std::size_t> len(1, 5);
    for (int trial = 0; trial < 500; ++trial) {
        JointDistribution d = testing::random_distribution(
            rng, Alphabet::binary(), len(rng));
        if (is_two_color_exchangeable(d).verdict !=
            is_exchangeable(d).verdict) {
            check(false, "binary verdicts must coincide");
            return false;
        }
    }
    bool ok = true;
    for (std::size_t n = 2; n <= 4; ++n)
        ok &= check(!find_gap_witness(full_support(Alphabet::binary(), n)),
                    "binary supports must have no gap");
    return ok;
}

bool pair_constraint_systems() {
    SupportSpec spec = full_support(Alphabet::ternary(), 2);
    bool ok = true;
    ok &= check(rank(exchangeability_constraints(spec).matrix) == 3,
                "exchangeability rank must be 3");
    ok &= check(rank(two_color_constraints(spec).matrix) == 2,
                "two-color rank must be 2");
    GapDimensions dims = gap_dimensions(spec);
    ok &= check(dims.dim_two_color == 7, "two-color dimension must be 7");
    ok &= check(dims.dim_exchangeable == 6,
                "exchangeable dimension must be 6");
    auto witness = find_gap_witness(spec);
    ok &= check(bool(witness), "a gap witness must exist");
    if (witness) {
        ok &= check(is_two_color_exchangeable(*witness).verdict,
                    "witness must pass two-color");
        ok &= check(!is_exchangeable(*witness).verdict,
                    "witness must fail exchangeable");
    }
    return ok;
}

std::string run_cli(const std::string& args, int* exit_code = nullptr) {
    std::string cmd = std::string(TWOCOLOR_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    if (exit_code) *exit_code = WEXITSTATUS(status);
    return out;
}

bool cli_determinism() {
    std::string dir = ::getenv("TMPDIR") ? ::getenv("TMPDIR") : "/tmp";
    std::string pair_file = dir + "/twocolor_acceptance_pair.dist";
    {
        std::ofstream f(pair_file);
        write_distribution(f, pair_counterexample());
    }
    std::vector<std::string> commands = {
        "construct pair",
        "construct general:4",
        "verify " + pair_file + " --mode both",
        "verify " + pair_file + " --mode both --json",
        "dims --alphabet -1,0,1 --n 2",
        "dims --alphabet -1,0,1 --n 4 --support omega",
        "search --alphabet -1,0,1 --n 2",
        "search --alphabet 0,1 --n 3",
    };
    bool ok = true;
    for (const std::string& cmd : commands) {
        int code1 = 0, code2 = 0;
        std::string out1 = run_cli(cmd, &code1);
        std::string out2 = run_cli(cmd, &code2);
        if (out1 != out2 || code1 != code2) {
            std::cout << "  nondeterministic: " << cmd << "\n";
            ok = false;
        }
    }

    // exit-code spot checks while we are here
    int code = 0;
    run_cli("verify " + pair_file + " --mode both", &code);
    ok &= check(code == 1, "verify on the pair distribution must exit 1");
    run_cli("verify " + pair_file + " --mode two-color", &code);
    ok &= check(code == 0, "two-color verify must exit 0");
    std::string bad_file = dir + "/twocolor_acceptance_bad.dist";
    {
        std::ofstream f(bad_file);
        f << "alphabet: 0 1\nn: 2\n(0,0) 8/9\n";
    }
    std::string out = run_cli("verify " + bad_file, &code);
    ok &= check(code == 2, "malformed input must exit 2");
    ok &= check(out.find("not normalized") != std::string::npos,
                "parse error must mention normalization");
    std::remove(pair_file.c_str());
    std::remove(bad_file.c_str());
    return ok;
}

}  // namespace

int main() {
    criterion(1, "pair counterexample verdicts and witness",
              pair_counterexample_verdicts);
    criterion(2, "pair coloring table", pair_coloring_table);
    criterion(3, "general family verdicts, n = 3..8",
              general_family_verdicts);
    criterion(4, "general family normalization, n = 3..10",
              general_family_normalized);
    criterion(5, "oracle equivalence on 1000 random laws",
              oracle_equivalence);
    criterion(6, "symmetrized laws pass two-color, 1000 random laws",
              symmetrized_always_two_color);
    criterion(7, "binary collapse, 500 random laws", binary_collapse);
    criterion(8, "length-2 constraint systems and gap witness",
              pair_constraint_systems);
    criterion(9, "CLI determinism and exit codes", cli_determinism);
    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
