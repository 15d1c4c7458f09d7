// word_equations.hpp -- solvers for the handful of word equations used by the class deciders
//
// Commutation xy = yx, transfer xy = yz, palindrome/antipalindrome splitting, Fine-Wilf
// common roots, splits into two (anti)palindromes and the periodic normal form (cE(c))^k.

#pragma once

#include "morph/error.hpp"
#include "morph/word.hpp"

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace morph {

struct CommutationSolution
{
    Word u;
    std::size_t i = 0;
    std::size_t j = 0;
};

struct TransferSolution
{
    Word u;
    Word v;
    std::size_t i = 0;
};

struct PalAntipalSolution
{
    Word u;
    std::size_t i = 0;
    std::size_t j = 0;
};

struct PeriodicNormalForm
{
    Word c;
    std::size_t k = 0;
    /// w rotated left by this many letters equals (c·E(c))^k.
    std::size_t rotation = 0;
};

using WordPair = std::pair<Word, Word>;

/// xy = yx  =>  x = u^i, y = u^j with u primitive. When both words are empty u is ε.
inline Result<CommutationSolution> solve_commutation(const Word& x, const Word& y)
{
    if (x + y != y + x)
        return fail(ErrorCode::NotCommuting, x.str() + " and " + y.str() + " do not commute");
    if (x.empty() && y.empty())
        return CommutationSolution{Word(), 0, 0};
    auto root = primitive_root(x.empty() ? y : x).root;
    return CommutationSolution{root, x.size() / root.size(), y.size() / root.size()};
}

/// xy = yz with x != ε  =>  x = uv, y = (uv)^i u, z = vu. The split is forced by |y| mod |x|.
inline Result<TransferSolution> solve_transfer(const Word& x, const Word& y, const Word& z)
{
    if (x.empty())
        return fail(ErrorCode::EmptyX, "x must be nonempty");
    if (x + y != y + z)
        return fail(ErrorCode::EquationFails, "xy != yz");
    std::size_t cut = y.size() % x.size();
    return TransferSolution{x.prefix(cut), x.substr(cut), y.size() / x.size()};
}

/// x, y nonempty palindromes with xy an antipalindrome  =>  x = (uE(u))^i u, y = (E(u)u)^j E(u)
/// for a palindrome u. Returns the shortest such u.
inline Result<PalAntipalSolution> solve_pal_antipal(const Word& x, const Word& y)
{
    if (x.empty() || y.empty() || !is_palindrome(x) || !is_palindrome(y))
        return fail(ErrorCode::PreconditionViolated, "x and y must be nonempty palindromes");
    if (!is_antipalindrome(x + y))
        return fail(ErrorCode::NotAntipalindrome, "xy is not an antipalindrome");
    std::size_t g = std::gcd(x.size(), y.size());
    for (std::size_t len = 1; len <= g; ++len) {
        if (g % len || (x.size() / len) % 2 == 0 || (y.size() / len) % 2 == 0)
            continue;
        Word u = x.prefix(len);
        if (!is_palindrome(u))
            continue;
        Word eu = exchange(u);
        std::size_t i = x.size() / len / 2;
        std::size_t j = y.size() / len / 2;
        if ((u + eu).pow(i) + u == x && (eu + u).pow(j) + eu == y)
            return PalAntipalSolution{u, i, j};
    }
    // Unreachable for valid input: the decomposition always exists.
    return fail(ErrorCode::NotAntipalindrome, "no palindromic root found");
}

namespace detail {

inline bool is_prefix_of_power(const Word& w, const Word& x)
{
    if (x.empty())
        return w.empty();
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w.str()[i] != x.str()[i % x.size()])
            return false;
    return true;
}

} // namespace detail

/// Fine-Wilf: a common prefix w of x^r and y^r with |w| >= |x|+|y|-gcd(|x|,|y|) forces a
/// common root z. Returns the primitive common root.
inline Result<Word> fine_wilf_root(const Word& x, const Word& y, const Word& w)
{
    if (x.empty() || y.empty())
        return fail(ErrorCode::HypothesisNotMet, "x and y must be nonempty");
    std::size_t bound = x.size() + y.size() - std::gcd(x.size(), y.size());
    if (w.size() < bound)
        return fail(ErrorCode::HypothesisNotMet,
                    "|w| = " + std::to_string(w.size()) + " < " + std::to_string(bound));
    if (!detail::is_prefix_of_power(w, x) || !detail::is_prefix_of_power(w, y))
        return fail(ErrorCode::HypothesisNotMet, "w is not a common prefix of powers of x and y");
    auto rx = primitive_root(x).root;
    if (rx != primitive_root(y).root)
        return fail(ErrorCode::NoCommonRoot, "x and y have different primitive roots");
    return rx;
}

/// All splits w = p·q with p and q palindromes (ε allowed), ordered by |p|.
inline std::vector<WordPair> decompose_two_palindromes(const Word& w)
{
    if (w.empty())
        throw Error(ErrorCode::EmptyWord, "decompose_two_palindromes of the empty word");
    std::vector<WordPair> out;
    for (std::size_t cut = 0; cut <= w.size(); ++cut) {
        auto v = w.view();
        if (is_palindrome(v.substr(0, cut)) && is_palindrome(v.substr(cut)))
            out.emplace_back(w.prefix(cut), w.substr(cut));
    }
    return out;
}

/// All splits w = w1·w2 with w1 and w2 antipalindromes (ε allowed), ordered by |w1|.
inline std::vector<WordPair> decompose_two_antipalindromes(const Word& w)
{
    if (w.empty())
        throw Error(ErrorCode::EmptyWord, "decompose_two_antipalindromes of the empty word");
    std::vector<WordPair> out;
    for (std::size_t cut = 0; cut <= w.size(); cut += 2) {
        auto v = w.view();
        if (is_antipalindrome(v.substr(0, cut)) && is_antipalindrome(v.substr(cut)))
            out.emplace_back(w.prefix(cut), w.substr(cut));
    }
    return out;
}

/// Finds a palindrome c and k with some rotation of w equal to (c·E(c))^k, i.e. the period of a
/// purely periodic word with infinitely many palindromes and antipalindromes. Only the
/// periodic tail is handled; a preperiod is not searched for.
/// Preference: shortest c first, then the smallest rotation.
inline Result<PeriodicNormalForm> antipal_periodic_normal_form(const Word& w)
{
    if (w.empty())
        return fail(ErrorCode::EmptyWord, "normal form of the empty word");
    if (w.size() % 2)
        return fail(ErrorCode::NoNormalForm, "odd length");
    std::size_t half = w.size() / 2;
    for (std::size_t len = 1; len <= half; ++len) {
        if (half % len)
            continue;
        for (std::size_t r = 0; r < w.size(); ++r) {
            Word rot = rotate(w, r);
            Word c = rot.prefix(len);
            if (!is_palindrome(c))
                continue;
            std::size_t k = half / len;
            if ((c + exchange(c)).pow(k) == rot)
                return PeriodicNormalForm{c, k, r};
        }
    }
    return fail(ErrorCode::NoNormalForm, "no rotation of " + w.str() + " has the form (cE(c))^k");
}

} // namespace morph
