#ifndef TWOCOLOR_DISTRIBUTION_HPP
#define TWOCOLOR_DISTRIBUTION_HPP

#include <algorithm>
#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twocolor/rational.hpp"

namespace twocolor {

using Outcome = std::vector<int>;

// Ordered list of distinct symbol labels. The list order defines the
// lexicographic order of outcomes used everywhere (orbit keys, file
// output, constraint indexing).
class Alphabet {
public:
    Alphabet() = default;

    explicit Alphabet(std::vector<int> symbols) : symbols_(std::move(symbols)) {
        if (symbols_.empty())
            throw std::invalid_argument("alphabet must be nonempty");
        for (std::size_t i = 0; i < symbols_.size(); ++i)
            for (std::size_t j = i + 1; j < symbols_.size(); ++j)
                if (symbols_[i] == symbols_[j])
                    throw std::invalid_argument("duplicate alphabet symbol");
    }

    static Alphabet ternary() { return Alphabet({-1, 0, 1}); }
    static Alphabet binary() { return Alphabet({0, 1}); }

    std::size_t size() const { return symbols_.size(); }
    const std::vector<int>& symbols() const { return symbols_; }
    int symbol(std::size_t i) const { return symbols_.at(i); }

    bool contains(int sym) const {
        return std::find(symbols_.begin(), symbols_.end(), sym) !=
               symbols_.end();
    }

    std::size_t index(int sym) const {
        auto it = std::find(symbols_.begin(), symbols_.end(), sym);
        if (it == symbols_.end())
            throw std::invalid_argument("symbol not in alphabet: " +
                                        std::to_string(sym));
        return static_cast<std::size_t>(it - symbols_.begin());
    }

    // lexicographic comparison of outcomes under alphabet order
    bool outcome_less(const Outcome& a, const Outcome& b) const {
        const std::size_t m = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t ia = index(a[i]), ib = index(b[i]);
            if (ia != ib) return ia < ib;
        }
        return a.size() < b.size();
    }

    bool operator==(const Alphabet& other) const {
        return symbols_ == other.symbols_;
    }
    bool operator!=(const Alphabet& other) const {
        return symbols_ != other.symbols_;
    }

private:
    std::vector<int> symbols_;
};

struct OutcomeLess {
    Alphabet alphabet;
    bool operator()(const Outcome& a, const Outcome& b) const {
        return alphabet.outcome_less(a, b);
    }
};

using MassMap = std::map<Outcome, Rational, OutcomeLess>;

inline std::string format_outcome(const Outcome& o) {
    std::string s = "(";
    for (std::size_t i = 0; i < o.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(o[i]);
    }
    s += ")";
    return s;
}

// Binary function on the alphabet, represented by the set of symbols
// mapped to 1.
class Coloring {
public:
    Coloring(Alphabet alphabet, std::vector<int> ones)
        : alphabet_(std::move(alphabet)), ones_(std::move(ones)) {
        for (int sym : ones_)
            if (!alphabet_.contains(sym))
                throw std::invalid_argument("coloring symbol not in alphabet");
        std::sort(ones_.begin(), ones_.end(), [this](int a, int b) {
            return alphabet_.index(a) < alphabet_.index(b);
        });
    }

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<int>& ones() const { return ones_; }

    int apply(int sym) const {
        return std::find(ones_.begin(), ones_.end(), sym) != ones_.end() ? 1
                                                                         : 0;
    }

    Outcome apply(const Outcome& o) const {
        Outcome out(o.size());
        for (std::size_t i = 0; i < o.size(); ++i) out[i] = apply(o[i]);
        return out;
    }

    Coloring complement() const {
        std::vector<int> rest;
        for (int sym : alphabet_.symbols())
            if (apply(sym) == 0) rest.push_back(sym);
        return Coloring(alphabet_, std::move(rest));
    }

    std::string str() const {
        std::string s = "ones={";
        for (std::size_t i = 0; i < ones_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(ones_[i]);
        }
        s += "}";
        return s;
    }

private:
    Alphabet alphabet_;
    std::vector<int> ones_;
};

// Sparse joint law of a length-n vector over a finite alphabet.
// Stored masses are strictly positive and sum to exactly 1.
class JointDistribution {
public:
    JointDistribution(Alphabet alphabet, std::size_t n, MassMap masses)
        : alphabet_(std::move(alphabet)), n_(n), masses_(std::move(masses)) {}

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t length() const { return n_; }
    const MassMap& masses() const { return masses_; }

    Rational mass(const Outcome& o) const {
        auto it = masses_.find(o);
        return it == masses_.end() ? Rational() : it->second;
    }

    bool operator==(const JointDistribution& other) const {
        return alphabet_ == other.alphabet_ && n_ == other.n_ &&
               masses_ == other.masses_;
    }

private:
    Alphabet alphabet_;
    std::size_t n_;
    MassMap masses_;
};

inline JointDistribution make_distribution(
    const Alphabet& alphabet, std::size_t n,
    const std::vector<std::pair<Outcome, Rational>>& entries) {
    if (n == 0) throw std::invalid_argument("n must be at least 1");
    MassMap masses{OutcomeLess{alphabet}};
    Rational total;
    for (const auto& [outcome, mass] : entries) {
        if (outcome.size() != n)
            throw std::invalid_argument("outcome length mismatch at " +
                                        format_outcome(outcome));
        for (int sym : outcome)
            if (!alphabet.contains(sym))
                throw std::invalid_argument("symbol not in alphabet at " +
                                            format_outcome(outcome));
        if (mass.is_negative())
            throw std::invalid_argument("negative mass at outcome " +
                                        format_outcome(outcome));
        if (!masses.emplace(outcome, mass).second)
            throw std::invalid_argument("duplicate outcome " +
                                        format_outcome(outcome));
        total += mass;
    }
    if (total != Rational(1))
        throw std::invalid_argument("not normalized (sum = " + total.str() +
                                    ")");
    std::erase_if(masses, [](const auto& kv) { return kv.second.is_zero(); });
    return JointDistribution(alphabet, n, std::move(masses));
}

// Law of the coordinatewise image under a coloring; a distribution on
// {0,1}^n. Total mass is preserved exactly.
inline JointDistribution pushforward(const JointDistribution& d,
                                     const Coloring& c) {
    if (c.alphabet() != d.alphabet())
        throw std::invalid_argument("alphabet mismatch");
    Alphabet binary = Alphabet::binary();
    MassMap masses{OutcomeLess{binary}};
    for (const auto& [outcome, mass] : d.masses()) {
        Outcome image = c.apply(outcome);
        auto [it, inserted] = masses.emplace(std::move(image), mass);
        if (!inserted) it->second += mass;
    }
    return JointDistribution(std::move(binary), d.length(), std::move(masses));
}

// One representative per complement pair of non-constant colorings,
// ordered by subset bitmask. The symbol at alphabet index 0 always maps
// to 0, so exactly 2^(k-1) - 1 colorings are produced.
inline std::vector<Coloring> nontrivial_colorings(const Alphabet& a) {
    std::vector<Coloring> out;
    const std::size_t k = a.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
        if (mask & 1) continue;  // representative maps symbol 0 to 0
        std::vector<int> ones;
        for (std::size_t i = 1; i < k; ++i)
            if (mask & (std::size_t(1) << i)) ones.push_back(a.symbol(i));
        out.emplace_back(a, std::move(ones));
    }
    return out;
}

namespace detail {

// All distinct coordinate permutations of `o`, in lexicographic order.
inline std::vector<Outcome> orbit_of(const Alphabet& a, Outcome o) {
    std::sort(o.begin(), o.end(), [&a](int x, int y) {
        return a.index(x) < a.index(y);
    });
    std::vector<Outcome> orbit;
    auto less = [&a](int x, int y) { return a.index(x) < a.index(y); };
    do {
        orbit.push_back(o);
    } while (std::next_permutation(o.begin(), o.end(), less));
    return orbit;
}

}  // namespace detail

// Averages each orbit's mass uniformly over the orbit. The result is
// exchangeable by construction.
inline JointDistribution symmetrize(const JointDistribution& d) {
    const Alphabet& a = d.alphabet();
    MassMap orbit_total{OutcomeLess{a}};
    for (const auto& [outcome, mass] : d.masses()) {
        Outcome key = outcome;
        std::sort(key.begin(), key.end(), [&a](int x, int y) {
            return a.index(x) < a.index(y);
        });
        auto [it, inserted] = orbit_total.emplace(std::move(key), mass);
        if (!inserted) it->second += mass;
    }
    MassMap masses{OutcomeLess{a}};
    for (const auto& [key, total] : orbit_total) {
        std::vector<Outcome> orbit = detail::orbit_of(a, key);
        Rational each = total / Rational(static_cast<long>(orbit.size()));
        for (Outcome& member : orbit) masses.emplace(std::move(member), each);
    }
    return JointDistribution(a, d.length(), std::move(masses));
}

// ---- text format ----
//   alphabet: -1 0 1
//   n: 2
//   (-1,0) 1/9
// Blank lines and '#' comments are ignored on input; output lists the
// support in lexicographic order.

inline void write_distribution(std::ostream& os, const JointDistribution& d) {
    os << "alphabet:";
    for (int sym : d.alphabet().symbols()) os << " " << sym;
    os << "\n";
    os << "n: " << d.length() << "\n";
    for (const auto& [outcome, mass] : d.masses())
        os << format_outcome(outcome) << " " << mass.str() << "\n";
}

inline std::string write_distribution(const JointDistribution& d) {
    std::ostringstream os;
    write_distribution(os, d);
    return os.str();
}

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

inline Outcome parse_outcome(std::string_view text, std::size_t lineno) {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw ParseError(lineno, "malformed outcome: " + std::string(text));
    Outcome o;
    std::string body(text.substr(1, text.size() - 2));
    std::istringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(part, &pos);
            if (pos != part.size()) throw std::invalid_argument(part);
            o.push_back(v);
        } catch (const std::exception&) {
            throw ParseError(lineno, "malformed coordinate: " + part);
        }
    }
    if (o.empty()) throw ParseError(lineno, "empty outcome");
    return o;
}

inline JointDistribution read_distribution(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;
    bool have_alphabet = false, have_n = false;
    std::vector<int> symbols;
    std::size_t n = 0;
    std::vector<std::pair<Outcome, Rational>> entries;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string head;
        if (!(ss >> head)) continue;
        if (head == "alphabet:") {
            if (have_alphabet) throw ParseError(lineno, "duplicate alphabet line");
            int sym;
            while (ss >> sym) symbols.push_back(sym);
            if (!ss.eof()) throw ParseError(lineno, "malformed alphabet line");
            have_alphabet = true;
        } else if (head == "n:") {
            if (have_n) throw ParseError(lineno, "duplicate n line");
            long val = 0;
            if (!(ss >> val) || val < 1)
                throw ParseError(lineno, "malformed n line");
            n = static_cast<std::size_t>(val);
            have_n = true;
        } else {
            if (!have_alphabet || !have_n)
                throw ParseError(lineno, "mass entry before header");
            Outcome o = parse_outcome(head, lineno);
            std::string mass_text;
            if (!(ss >> mass_text))
                throw ParseError(lineno, "missing mass");
            std::string extra;
            if (ss >> extra) throw ParseError(lineno, "trailing tokens");
            Rational mass;
            try {
                mass = Rational::parse(mass_text);
            } catch (const std::exception& e) {
                throw ParseError(lineno, e.what());
            }
            entries.emplace_back(std::move(o), std::move(mass));
        }
    }
    if (!have_alphabet) throw ParseError(lineno, "missing alphabet line");
    if (!have_n) throw ParseError(lineno, "missing n line");
    try {
        return make_distribution(Alphabet(std::move(symbols)), n, entries);
    } catch (const std::exception& e) {
        throw ParseError(lineno, e.what());
    }
}

}  // namespace twocolor

#endif
