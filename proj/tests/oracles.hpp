// Brute-force reference implementations and random generators shared by the tests.
// Deliberately naive: plain std::string, no use of the library algorithms under test.

#pragma once

#include "morph/classes.hpp"
#include "morph/morphism.hpp"
#include "morph/word.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

inline std::string rev(std::string s)
{
    std::reverse(s.begin(), s.end());
    return s;
}

inline std::string comp(std::string s)
{
    for (char& c : s)
        c = c == '0' ? '1' : '0';
    return s;
}

inline std::string ex(const std::string& s) { return rev(comp(s)); }
inline bool pal(const std::string& s) { return s == rev(s); }
inline bool antipal(const std::string& s) { return s == ex(s); }

inline std::string theta(const std::string& s)
{
    std::string out;
    for (char c : s)
        out += c == '0' ? "01" : "10";
    return out;
}

inline std::string power(const std::string& s, std::size_t n)
{
    std::string out;
    for (std::size_t i = 0; i < n; ++i)
        out += s;
    return out;
}

/// No proper divisor d of |s| with s = (s[0..d))^(|s|/d).
inline bool primitive(const std::string& s)
{
    if (s.empty())
        return false;
    for (std::size_t d = 1; d < s.size(); ++d)
        if (s.size() % d == 0 && power(s.substr(0, d), s.size() / d) == s)
            return false;
    return true;
}

/// Smallest p >= 1 with s[i] == s[i+p] for all valid i.
inline std::size_t period(const std::string& s)
{
    for (std::size_t p = 1; p < s.size(); ++p) {
        bool ok = true;
        for (std::size_t i = 0; i + p < s.size() && ok; ++i)
            ok = s[i] == s[i + p];
        if (ok)
            return p;
    }
    return s.size();
}

inline std::vector<std::string> words_of_length(std::size_t n)
{
    std::vector<std::string> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
        std::string s(n, '0');
        for (std::size_t i = 0; i < n; ++i)
            if ((code >> (n - 1 - i)) & 1u)
                s[i] = '1';
        out.push_back(s);
    }
    return out;
}

inline std::vector<std::string> words_up_to(std::size_t n, std::size_t from = 0)
{
    std::vector<std::string> out;
    for (std::size_t len = from; len <= n; ++len)
        for (auto& w : words_of_length(len))
            out.push_back(w);
    return out;
}

/// Palindromes of length n, built from their first half.
inline std::vector<std::string> palindromes_of_length(std::size_t n)
{
    std::vector<std::string> out;
    for (auto& half : words_of_length((n + 1) / 2)) {
        std::string tail = rev(half.substr(0, n / 2));
        out.push_back(half + tail);
    }
    return out;
}

inline std::string substitute(const std::string& x, const std::string& y, const std::string& w)
{
    std::string out;
    for (char c : w)
        out += c == '0' ? x : y;
    return out;
}

inline std::string substitute(const morph::Morphism& m, const std::string& w)
{
    return substitute(m.image0().str(), m.image1().str(), w);
}

/// Fixed point prefix by repeated full application from a single letter.
inline std::string fixed_point(const morph::Morphism& m, char a, std::size_t n)
{
    std::string w(1, a);
    while (w.size() < n) {
        std::string next = substitute(m, w);
        if (next.size() <= w.size())
            return next.substr(0, std::min(next.size(), n));
        w = next;
    }
    return w.substr(0, n);
}

/// Longest antipalindromic factor by trying every even-length centre outward.
inline std::size_t longest_antipal(const std::string& s)
{
    std::size_t best = 0;
    for (std::size_t c = 0; c <= s.size(); ++c) {
        std::size_t k = 0;
        while (k < c && c + k < s.size() && s[c - 1 - k] != s[c + k])
            ++k;
        best = std::max(best, 2 * k);
    }
    return best;
}

inline std::size_t longest_pal(const std::string& s)
{
    std::size_t best = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = s.size(); j > i + best; --j)
            if (pal(s.substr(i, j - i))) {
                best = j - i;
                break;
            }
    return best;
}

// -------------------------------------------------------------------------------------------
// Random generation

using Rng = std::mt19937_64;

inline std::string random_word(Rng& rng, std::size_t n)
{
    std::string s(n, '0');
    std::bernoulli_distribution bit(0.5);
    for (char& c : s)
        c = bit(rng) ? '1' : '0';
    return s;
}

inline std::string random_word_up_to(Rng& rng, std::size_t lo, std::size_t hi)
{
    return random_word(rng, std::uniform_int_distribution<std::size_t>(lo, hi)(rng));
}

/// Random antipalindrome of length exactly n (n even).
inline std::string random_antipal(Rng& rng, std::size_t n)
{
    std::string half = random_word(rng, n / 2);
    return half + ex(half);
}

inline std::string random_pal(Rng& rng, std::size_t n)
{
    std::string half = random_word(rng, (n + 1) / 2);
    return half + rev(half.substr(0, n / 2));
}

inline morph::A1Witness random_a1(Rng& rng, std::size_t max_image)
{
    std::size_t total = std::uniform_int_distribution<std::size_t>(1, max_image)(rng);
    std::size_t s_len = 2 * std::uniform_int_distribution<std::size_t>(0, (total - 1) / 2)(rng);
    return {morph::Word(random_word(rng, total - s_len)), morph::Word(random_antipal(rng, s_len))};
}

/// Random A2 witness with |Θ-image| <= max_image for both letters.
inline morph::A2Witness random_a2(Rng& rng, std::size_t max_image)
{
    const std::size_t half = max_image / 2;
    std::size_t w_len = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, half))(rng);
    std::size_t max_q = half / w_len; // 2k+1 <= max_q
    std::size_t max_k = max_q >= 1 ? (max_q - 1) / 2 : 0;
    std::uniform_int_distribution<std::size_t> kd(0, max_k);
    return {morph::Word(random_word(rng, w_len)), kd(rng), kd(rng)};
}

/// A morphism usable for fixed-point experiments: primitive, not cyclic, and m or m^2 has a
/// prolongable letter.
inline bool usable(const morph::Morphism& m)
{
    return morph::is_primitive(m) && !morph::is_cyclic(m) &&
           (!morph::prolongable_letters(m).empty() ||
            !morph::prolongable_letters(*morph::checked_square(m)).empty());
}

} // namespace oracle
