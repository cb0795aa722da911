#ifndef TWOCOLOR_CHECK_HPP
#define TWOCOLOR_CHECK_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twocolor/distribution.hpp"
#include "twocolor/rational.hpp"

namespace twocolor {

// Canonical orbit representative: coordinates sorted ascending by
// alphabet order. Two outcomes are coordinate permutations of each
// other iff their keys coincide.
inline Outcome orbit_key(const Alphabet& a, Outcome o) {
    std::sort(o.begin(), o.end(), [&a](int x, int y) {
        return a.index(x) < a.index(y);
    });
    return o;
}

struct Witness {
    Outcome first;
    Rational first_mass;
    Outcome second;
    Rational second_mass;
    std::optional<Coloring> coloring;  // set for two-color failures

    std::string str() const {
        std::string s = "witness: " + format_outcome(first) + " mass " +
                        first_mass.str() + " != " + format_outcome(second) +
                        " mass " + second_mass.str();
        if (coloring) s += "\ncoloring: " + coloring->str();
        return s;
    }
};

struct VerificationReport {
    bool verdict = true;
    std::optional<Witness> witness;

    bool passed() const { return verdict; }

    std::string str() const {
        std::string s = verdict ? "verdict: PASS" : "verdict: FAIL";
        if (witness) s += "\n" + witness->str();
        return s;
    }
};

namespace detail {

// Number of distinct coordinate permutations of a sorted outcome.
inline mpz_class orbit_size(const Outcome& key) {
    mpz_class size;
    mpz_fac_ui(size.get_mpz_t(), static_cast<unsigned long>(key.size()));
    std::size_t i = 0;
    while (i < key.size()) {
        std::size_t j = i;
        while (j < key.size() && key[j] == key[i]) ++j;
        mpz_class run_fac;
        mpz_fac_ui(run_fac.get_mpz_t(), static_cast<unsigned long>(j - i));
        size /= run_fac;
        i = j;
    }
    return size;
}

// Lexicographically smallest permutation of `key` absent from `present`.
// `present` is sorted and has fewer members than the full orbit, so the
// scan stops within |present| + 1 steps.
inline Outcome first_missing_permutation(const Alphabet& a, Outcome key,
                                         const std::vector<Outcome>& present) {
    auto less = [&a](int x, int y) { return a.index(x) < a.index(y); };
    std::size_t at = 0;
    do {
        if (at >= present.size() || present[at] != key) return key;
        ++at;
    } while (std::next_permutation(key.begin(), key.end(), less));
    throw std::logic_error("orbit complete");  // unreachable by contract
}

}  // namespace detail

// Orbit criterion: the law is exchangeable iff mass is constant on every
// permutation orbit meeting the support (outcomes off the support have
// mass 0). A false verdict carries the lexicographically smallest
// violating same-orbit pair.
inline VerificationReport is_exchangeable(const JointDistribution& d) {
    const Alphabet& a = d.alphabet();
    std::map<Outcome, std::vector<Outcome>, OutcomeLess> orbits{
        OutcomeLess{a}};
    for (const auto& [outcome, mass] : d.masses())
        orbits[orbit_key(a, outcome)].push_back(outcome);

    std::optional<Witness> best;
    auto consider = [&](Witness w) {
        if (a.outcome_less(w.second, w.first)) {
            std::swap(w.first, w.second);
            std::swap(w.first_mass, w.second_mass);
        }
        if (!best || a.outcome_less(w.first, best->first) ||
            (w.first == best->first &&
             a.outcome_less(w.second, best->second)))
            best = std::move(w);
    };

    for (const auto& [key, members] : orbits) {
        // members arrive in map order, already lexicographically sorted
        bool unequal = false;
        for (std::size_t i = 0; i + 1 < members.size() && !unequal; ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                if (d.mass(members[i]) != d.mass(members[j])) {
                    consider({members[i], d.mass(members[i]), members[j],
                              d.mass(members[j]), std::nullopt});
                    unequal = true;
                    break;
                }
            }
        }
        if (unequal) continue;
        if (detail::orbit_size(key) != mpz_class(members.size())) {
            Outcome missing =
                detail::first_missing_permutation(a, key, members);
            consider({members.front(), d.mass(members.front()), missing,
                      Rational(), std::nullopt});
        }
    }

    if (best) return {false, std::move(best)};
    return {true, std::nullopt};
}

// Direct definition: checks the mass map against all n! coordinate
// permutations. Ground-truth oracle for is_exchangeable; guarded.
inline bool is_exchangeable_oracle(const JointDistribution& d) {
    const std::size_t n = d.length();
    if (n > 8) throw std::invalid_argument("oracle guard exceeded");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t(0));
    do {
        for (const auto& [outcome, mass] : d.masses()) {
            Outcome permuted(n);
            for (std::size_t i = 0; i < n; ++i)
                permuted[i] = outcome[perm[i]];
            if (d.mass(permuted) != mass) return false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

// True iff every representative non-constant coloring pushes the law
// forward to an exchangeable binary law. The first failing coloring in
// enumeration order is reported together with its witness pair.
inline VerificationReport is_two_color_exchangeable(
    const JointDistribution& d) {
    for (const Coloring& c : nontrivial_colorings(d.alphabet())) {
        VerificationReport r = is_exchangeable(pushforward(d, c));
        if (!r.verdict) {
            r.witness->coloring = c;
            return r;
        }
    }
    return {true, std::nullopt};
}

}  // namespace twocolor

#endif
