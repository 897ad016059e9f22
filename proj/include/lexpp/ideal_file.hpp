#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lexpp/ideal.hpp"
#include "lexpp/special_ideals.hpp"
#include "lexpp/theorem.hpp"

namespace lexpp {

/// Parsed form of the line-oriented ideal file format:
///   ring <n>
///   powers <e1> ... <er>          (optional)
///   plex <i> <a1> ... <ai>        (zero or more, generators of L_(i))
///   gen <a1> ... <an>             (zero or more, generators of I)
/// '#' starts a comment; blank lines are ignored.  Parsing and
/// rendering both canonicalize: generators sorted lex-descending,
/// plex lines sorted by component then lex-descending.
struct IdealFile {
    RingContext ring;
    std::optional<PurePowers> powers;
    PiecewiseLexSpec plex;
    std::vector<Monomial> gens;

    PurePowers powers_or_none() const { return powers ? *powers : PurePowers::none(); }

    MonomialIdeal to_ideal() const { return MonomialIdeal(ring, gens); }

    Instance to_instance(std::uint64_t seed = 0) const {
        return Instance{ring, powers_or_none(), plex, to_ideal(), seed};
    }

    static IdealFile from_instance(const Instance& inst) {
        return IdealFile{inst.ring,
                         inst.P.count() > 0 ? std::optional<PurePowers>(inst.P) : std::nullopt,
                         inst.Ltilde, inst.I.min_gens()};
    }

    friend bool operator==(const IdealFile&, const IdealFile&) = default;
};

namespace detail {

inline std::vector<long long> parse_numbers(const std::vector<std::string>& tokens,
                                            std::size_t from, int line_no) {
    std::vector<long long> out;
    for (std::size_t i = from; i < tokens.size(); ++i) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(tokens[i], &used);
            if (used != tokens[i].size()) throw std::invalid_argument("trailing junk");
            if (v > 1000000 || v < -1000000) throw std::out_of_range("huge");
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                             tokens[i] + "'");
        }
    }
    return out;
}

inline std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (is >> tok) {
        if (tok.front() == '#') break;
        tokens.push_back(tok);
    }
    return tokens;
}

}  // namespace detail

inline IdealFile parse_ideal_file(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int line_no = 0;

    std::optional<RingContext> ring;
    std::optional<PurePowers> powers;
    std::vector<std::vector<Monomial>> components;
    std::vector<Monomial> gens;
    bool saw_powers = false;

    while (std::getline(is, line)) {
        ++line_no;
        const std::vector<std::string> tokens = detail::tokenize(line);
        if (tokens.empty()) continue;
        const std::string& directive = tokens[0];
        const std::vector<long long> nums = detail::parse_numbers(tokens, 1, line_no);

        if (directive == "ring") {
            if (ring)
                throw ParseError("line " + std::to_string(line_no) + ": duplicate ring line");
            if (nums.size() != 1 || nums[0] < 1)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": ring needs one positive variable count");
            ring.emplace(static_cast<int>(nums[0]));
            components.resize(static_cast<std::size_t>(ring->var_count()));
            continue;
        }
        if (!ring)
            throw ParseError("line " + std::to_string(line_no) +
                             ": the first directive must be 'ring <n>'");

        if (directive == "powers") {
            if (saw_powers)
                throw ParseError("line " + std::to_string(line_no) + ": duplicate powers line");
            saw_powers = true;
            if (nums.size() > static_cast<std::size_t>(ring->var_count()))
                throw ParseError("line " + std::to_string(line_no) +
                                 ": more pure powers than variables");
            try {
                powers.emplace(std::vector<int>(nums.begin(), nums.end()));
            } catch (const PreconditionError& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
            }
        } else if (directive == "plex") {
            if (nums.empty())
                throw ParseError("line " + std::to_string(line_no) +
                                 ": plex needs a component index");
            const long long i = nums[0];
            if (i < 1 || i > ring->var_count())
                throw ParseError("line " + std::to_string(line_no) + ": plex component " +
                                 std::to_string(i) + " out of range");
            if (nums.size() != static_cast<std::size_t>(i) + 1)
                throw ParseError("line " + std::to_string(line_no) + ": plex component " +
                                 std::to_string(i) + " needs exactly " + std::to_string(i) +
                                 " exponents, got " + std::to_string(nums.size() - 1));
            std::vector<int> e(nums.begin() + 1, nums.end());
            e.resize(static_cast<std::size_t>(ring->var_count()), 0);
            try {
                components[static_cast<std::size_t>(i - 1)].emplace_back(std::move(e));
            } catch (const PreconditionError& err) {
                throw ParseError("line " + std::to_string(line_no) + ": " + err.what());
            }
        } else if (directive == "gen") {
            if (nums.size() != static_cast<std::size_t>(ring->var_count()))
                throw ParseError("line " + std::to_string(line_no) + ": gen needs exactly " +
                                 std::to_string(ring->var_count()) + " exponents, got " +
                                 std::to_string(nums.size()));
            try {
                gens.emplace_back(std::vector<int>(nums.begin(), nums.end()));
            } catch (const PreconditionError& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
            }
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown directive '" +
                             directive + "'");
        }
    }
    if (!ring) throw ParseError("missing 'ring <n>' line");

    std::optional<PiecewiseLexSpec> plex;
    try {
        plex.emplace(*ring, std::move(components));
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("piecewise lex validation failed: ") + e.what());
    }
    std::sort(gens.begin(), gens.end(), LexGreater{});
    return IdealFile{*ring, powers, std::move(*plex), std::move(gens)};
}

inline std::string render_ideal_file(const IdealFile& file) {
    std::ostringstream os;
    os << "ring " << file.ring.var_count() << "\n";
    if (file.powers && file.powers->count() > 0) {
        os << "powers";
        for (int e : file.powers->exponents()) os << ' ' << e;
        os << "\n";
    }
    for (int i = 1; i <= file.ring.var_count(); ++i) {
        for (const Monomial& g : file.plex.component(i - 1)) {
            os << "plex " << i;
            for (int v = 0; v < i; ++v) os << ' ' << g.exponent(v);
            os << "\n";
        }
    }
    std::vector<Monomial> gens = file.gens;
    std::sort(gens.begin(), gens.end(), LexGreater{});
    for (const Monomial& g : gens) {
        os << "gen";
        for (int v = 0; v < file.ring.var_count(); ++v) os << ' ' << g.exponent(v);
        os << "\n";
    }
    return os.str();
}

}  // namespace lexpp
