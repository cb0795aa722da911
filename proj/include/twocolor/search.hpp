#ifndef TWOCOLOR_SEARCH_HPP
#define TWOCOLOR_SEARCH_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "twocolor/check.hpp"
#include "twocolor/distribution.hpp"
#include "twocolor/matrix.hpp"

namespace twocolor {

// Ordered support whose outcomes are the coordinates of the probability
// vector the constraint systems act on. Must be permutation-closed so
// orbit-equality constraints stay expressible inside the coordinates.
class SupportSpec {
public:
    SupportSpec(Alphabet alphabet, std::size_t n, std::vector<Outcome> support)
        : alphabet_(std::move(alphabet)),
          n_(n),
          support_(std::move(support)),
          column_{OutcomeLess{alphabet_}} {
        for (std::size_t j = 0; j < support_.size(); ++j) {
            const Outcome& o = support_[j];
            if (o.size() != n_)
                throw std::invalid_argument("outcome length mismatch");
            for (int sym : o)
                if (!alphabet_.contains(sym))
                    throw std::invalid_argument("symbol not in alphabet");
            if (!column_.emplace(o, j).second)
                throw std::invalid_argument("duplicate outcome " +
                                            format_outcome(o));
        }
        for (const Outcome& o : support_)
            for (const Outcome& p : detail::orbit_of(alphabet_, o))
                if (!column_.count(p))
                    throw std::invalid_argument(
                        "support not permutation-closed: missing " +
                        format_outcome(p));
    }

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t length() const { return n_; }
    const std::vector<Outcome>& support() const { return support_; }
    std::size_t size() const { return support_.size(); }

    std::size_t column(const Outcome& o) const { return column_.at(o); }

private:
    Alphabet alphabet_;
    std::size_t n_;
    std::vector<Outcome> support_;
    std::map<Outcome, std::size_t, OutcomeLess> column_;
};

struct ConstraintSystem {
    SupportSpec spec;
    RationalMatrix matrix;  // each row r encodes the equality r . p = 0
};

inline SupportSpec full_support(const Alphabet& alphabet, std::size_t n) {
    double size = 1;
    for (std::size_t i = 0; i < n; ++i) size *= double(alphabet.size());
    if (size > 59049) throw std::invalid_argument("support too large");
    std::vector<Outcome> support;
    Outcome current(n, alphabet.symbol(0));
    std::vector<std::size_t> digits(n, 0);
    for (;;) {
        for (std::size_t i = 0; i < n; ++i)
            current[i] = alphabet.symbol(digits[i]);
        support.push_back(current);
        std::size_t pos = n;
        while (pos > 0 && digits[pos - 1] + 1 == alphabet.size())
            digits[--pos] = 0;
        if (pos == 0) break;
        ++digits[pos - 1];
    }
    return SupportSpec(alphabet, n, std::move(support));
}

namespace detail {

// Groups the support's columns by a key and emits one difference row
// per adjacent pair of groups-of-columns sums within each key class.
template <typename Groups>
inline RationalMatrix chained_difference_rows(std::size_t cols,
                                              const Groups& groups) {
    RationalMatrix m(0, cols);
    for (const auto& [key, classes] : groups) {
        for (std::size_t i = 0; i + 1 < classes.size(); ++i) {
            RationalVector row(cols);
            for (std::size_t c : classes[i]) row[c] += Rational(1);
            for (std::size_t c : classes[i + 1]) row[c] -= Rational(1);
            m.append_row(row);
        }
    }
    return m;
}

}  // namespace detail

// One row p_a - p_b = 0 per adjacent pair within each orbit (members in
// lexicographic order). Solutions are exactly the exchangeable vectors.
inline ConstraintSystem exchangeability_constraints(const SupportSpec& spec) {
    const Alphabet& a = spec.alphabet();
    std::map<Outcome, std::vector<std::vector<std::size_t>>, OutcomeLess>
        orbits{OutcomeLess{a}};
    for (const Outcome& o : spec.support()) {
        // support is permutation-closed, so materializing each orbit once
        // (at its key) covers every member
        Outcome key = orbit_key(a, o);
        if (o != key) continue;
        auto& classes = orbits[key];
        for (const Outcome& member : detail::orbit_of(a, key))
            classes.push_back({spec.column(member)});
    }
    return {spec, detail::chained_difference_rows(spec.size(), orbits)};
}

// For each representative coloring and each weight class of reachable
// binary outcomes, equates the pushforward masses of adjacent class
// members. Solutions are exactly the two-color exchangeable vectors.
inline ConstraintSystem two_color_constraints(const SupportSpec& spec) {
    Alphabet binary = Alphabet::binary();
    RationalMatrix m(0, spec.size());
    for (const Coloring& c : nontrivial_colorings(spec.alphabet())) {
        // binary image -> columns mapping to it, keyed lexicographically
        std::map<Outcome, std::vector<std::size_t>, OutcomeLess> fibers{
            OutcomeLess{binary}};
        for (std::size_t j = 0; j < spec.size(); ++j)
            fibers[c.apply(spec.support()[j])].push_back(j);
        // weight class -> fibers of its reachable members, in lex order
        std::map<std::size_t, std::vector<std::vector<std::size_t>>> classes;
        for (auto& [image, cols] : fibers) {
            std::size_t weight = static_cast<std::size_t>(
                std::count(image.begin(), image.end(), 1));
            classes[weight].push_back(cols);
        }
        RationalMatrix rows =
            detail::chained_difference_rows(spec.size(), classes);
        m = m.stacked(rows);
    }
    return {spec, m};
}

struct GapDimensions {
    std::size_t dim_two_color;
    std::size_t dim_exchangeable;

    bool has_gap() const { return dim_two_color > dim_exchangeable; }
};

// Solution-space dimensions of the two homogeneous systems. Exchangeable
// vectors satisfy the two-color system too, so the exchangeable side
// uses the stacked system.
inline GapDimensions gap_dimensions(const SupportSpec& spec) {
    RationalMatrix two_color = two_color_constraints(spec).matrix;
    RationalMatrix stacked =
        two_color.stacked(exchangeability_constraints(spec).matrix);
    return {spec.size() - rank(two_color), spec.size() - rank(stacked)};
}

// Perturbs the uniform law along a two-color nullspace direction that
// violates exchangeability. The direction is re-centered to coordinate
// sum zero (the all-ones vector lies in the two-color nullspace) and the
// step halved until every coordinate stays at or above 1/(2|support|).
inline std::optional<JointDistribution> find_gap_witness(
    const SupportSpec& spec) {
    RationalMatrix two_color = two_color_constraints(spec).matrix;
    RationalMatrix exch = exchangeability_constraints(spec).matrix;

    std::optional<RationalVector> direction;
    for (RationalVector& v : nullspace_basis(two_color)) {
        if (exch.annihilates(v)) continue;
        Rational sum;
        for (const Rational& x : v) sum += x;
        Rational shift = sum / Rational(static_cast<long>(spec.size()));
        for (Rational& x : v) x -= shift;
        direction = std::move(v);
        break;
    }
    if (!direction) return std::nullopt;

    const long size = static_cast<long>(spec.size());
    const Rational uniform = rational(1, size);
    const Rational floor = rational(1, 2 * size);
    Rational step(1);
    auto feasible = [&](const Rational& t) {
        for (const Rational& x : *direction)
            if (uniform + t * x < floor) return false;
        return true;
    };
    while (!feasible(step)) step = step * rational(1, 2);

    std::vector<std::pair<Outcome, Rational>> entries;
    for (std::size_t j = 0; j < spec.size(); ++j)
        entries.emplace_back(spec.support()[j],
                             uniform + step * (*direction)[j]);
    JointDistribution witness =
        make_distribution(spec.alphabet(), spec.length(), entries);
    if (!is_two_color_exchangeable(witness).verdict ||
        is_exchangeable(witness).verdict)
        throw std::logic_error("witness construction failed");
    return witness;
}

}  // namespace twocolor

#endif
