#ifndef TWOCOLOR_CONSTRUCTIONS_HPP
#define TWOCOLOR_CONSTRUCTIONS_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "twocolor/distribution.hpp"

namespace twocolor {

// The length-2 law on {-1,0,1} with zero diagonal, one cyclic triple of
// off-diagonal outcomes at mass 1/9 and the reversed triple at 2/9.
// Not exchangeable, but two-color exchangeable.
inline JointDistribution pair_counterexample() {
    Alphabet a = Alphabet::ternary();
    std::vector<std::pair<Outcome, Rational>> entries = {
        {{-1, 0}, rational(1, 9)}, {{0, 1}, rational(1, 9)},
        {{1, -1}, rational(1, 9)}, {{0, -1}, rational(2, 9)},
        {{1, 0}, rational(2, 9)},  {{-1, 1}, rational(2, 9)},
    };
    return make_distribution(a, 2, entries);
}

enum class OmegaSlot { First, Second };

// Index of an element of the Omega support: singleton symbol alpha at
// position i (1-based), with the two candidates for the repeated symbol
// ordered lexicographically (First = smaller).
struct OmegaIndex {
    int alpha;
    std::size_t position;  // 1..n
    OmegaSlot which;
};

// The outcome with `alpha` at the indexed position and one of the two
// other symbols everywhere else.
inline Outcome decode_omega(const OmegaIndex& idx, std::size_t n) {
    if (n < 3) throw std::invalid_argument("n must be at least 3");
    if (idx.position < 1 || idx.position > n)
        throw std::invalid_argument("position out of range");
    Alphabet a = Alphabet::ternary();
    if (!a.contains(idx.alpha))
        throw std::invalid_argument("alpha not in {-1,0,1}");
    std::vector<Outcome> candidates;
    for (int beta : a.symbols()) {
        if (beta == idx.alpha) continue;
        Outcome o(n, beta);
        o[idx.position - 1] = idx.alpha;
        candidates.push_back(std::move(o));
    }
    if (a.outcome_less(candidates[1], candidates[0]))
        std::swap(candidates[0], candidates[1]);
    return candidates[idx.which == OmegaSlot::First ? 0 : 1];
}

inline std::vector<OmegaIndex> omega_indices(std::size_t n) {
    if (n < 3) throw std::invalid_argument("n must be at least 3");
    std::vector<OmegaIndex> out;
    const Alphabet ternary = Alphabet::ternary();
    for (int alpha : ternary.symbols())
        for (std::size_t i = 1; i <= n; ++i)
            for (OmegaSlot which : {OmegaSlot::First, OmegaSlot::Second})
                out.push_back({alpha, i, which});
    return out;
}

// The 6n outcomes in {-1,0,1}^n with exactly two distinct symbols, one
// of multiplicity 1 and the other of multiplicity n-1, in
// (alpha, position, first/second) order.
inline std::vector<Outcome> omega_family(std::size_t n) {
    std::vector<Outcome> out;
    for (const OmegaIndex& idx : omega_indices(n))
        out.push_back(decode_omega(idx, n));
    return out;
}

// The general-n law on the Omega support: mass (n-i+1)/(3n(n+1)) on
// f(-1,i), f(1,i), s(0,i) and i/(3n(n+1)) on s(-1,i), s(1,i), f(0,i).
// Not exchangeable, but two-color exchangeable.
inline JointDistribution general_counterexample(std::size_t n) {
    if (n < 3) throw std::invalid_argument("n must be at least 3");
    const long ln = static_cast<long>(n);
    std::vector<std::pair<Outcome, Rational>> entries;
    for (const OmegaIndex& idx : omega_indices(n)) {
        const long i = static_cast<long>(idx.position);
        bool decreasing = (idx.which == OmegaSlot::First) != (idx.alpha == 0);
        Rational mass = decreasing
                            ? rational(ln - i + 1, 3 * ln * (ln + 1))
                            : rational(i, 3 * ln * (ln + 1));
        entries.emplace_back(decode_omega(idx, n), std::move(mass));
    }
    return make_distribution(Alphabet::ternary(), n, entries);
}

}  // namespace twocolor

#endif
