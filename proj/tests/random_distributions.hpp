#ifndef TWOCOLOR_TESTS_RANDOM_DISTRIBUTIONS_HPP
#define TWOCOLOR_TESTS_RANDOM_DISTRIBUTIONS_HPP

#include <random>
#include <utility>
#include <vector>

#include "twocolor/distribution.hpp"

namespace twocolor::testing {

// Random sparse distribution with exact rational masses: integer
// weights over a random support subset, normalized by their total.
inline JointDistribution random_distribution(std::mt19937_64& rng,
                                             const Alphabet& alphabet,
                                             std::size_t n) {
    std::size_t cube = 1;
    for (std::size_t i = 0; i < n; ++i) cube *= alphabet.size();
    std::uniform_int_distribution<std::size_t> support_size(1, cube);
    std::uniform_int_distribution<std::size_t> pick(0, cube - 1);
    std::uniform_int_distribution<long> weight(1, 20);

    std::vector<bool> chosen(cube, false);
    std::size_t want = support_size(rng);
    for (std::size_t tries = 0; tries < 4 * want; ++tries)
        chosen[pick(rng)] = true;
    chosen[pick(rng)] = true;  // at least one support point

    std::vector<std::pair<Outcome, long>> weighted;
    long total = 0;
    for (std::size_t code = 0; code < cube; ++code) {
        if (!chosen[code]) continue;
        Outcome o(n);
        std::size_t rest = code;
        for (std::size_t i = 0; i < n; ++i) {
            o[i] = alphabet.symbol(rest % alphabet.size());
            rest /= alphabet.size();
        }
        long w = weight(rng);
        total += w;
        weighted.emplace_back(std::move(o), w);
    }

    std::vector<std::pair<Outcome, Rational>> entries;
    for (auto& [o, w] : weighted)
        entries.emplace_back(std::move(o), rational(w, total));
    return make_distribution(alphabet, n, entries);
}

}  // namespace twocolor::testing

#endif
