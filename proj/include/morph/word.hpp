// word.hpp -- finite binary words and the basic (anti)morphic operations on them
//
// A Word is an immutable value over the alphabet {0,1}. Letters are stored one per byte as the
// ASCII characters '0' and '1', so the textual form is the storage and views into a word are
// cheap. Fixed-point prefixes of 10^7 letters take 10 MB.

#pragma once

#include "morph/error.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace morph {

/// A letter of the binary alphabet: 0 or 1.
using Letter = std::uint8_t;

inline constexpr char letter_char(Letter a) noexcept { return a ? '1' : '0'; }
inline constexpr Letter other(Letter a) noexcept { return a ^ 1u; }

class Word
{
public:
    Word() = default;

    /// Takes ownership of a {0,1}-string. Throws ParseError on any other character.
    explicit Word(std::string bits) : bits_(std::move(bits))
    {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] != '0' && bits_[i] != '1')
                throw Error(ErrorCode::ParseError, "letters must be 0 or 1", i);
    }

    Word(const char* bits) : Word(std::string(bits)) {}

    /// Parses the textual word format: a {0,1}-string, with ε written as "", `""` or `eps`.
    static Word parse(std::string_view text)
    {
        auto first = text.find_first_not_of(" \t\r\n");
        if (first == std::string_view::npos)
            return Word();
        auto last = text.find_last_not_of(" \t\r\n");
        text = text.substr(first, last - first + 1);
        if (text == "eps" || text == "\"\"" || text == "ε")
            return Word();
        for (std::size_t i = 0; i < text.size(); ++i)
            if (text[i] != '0' && text[i] != '1')
                throw Error(ErrorCode::ParseError, "expected a word over {0,1}", first + i);
        return unchecked(std::string(text));
    }

    static Word letter(Letter a) { return unchecked(std::string(1, letter_char(a))); }

    /// Builds a word from a string already known to be over {'0','1'}.
    static Word unchecked(std::string bits)
    {
        Word w;
        w.bits_ = std::move(bits);
        return w;
    }

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }

    Letter operator[](std::size_t i) const noexcept { return static_cast<Letter>(bits_[i] - '0'); }
    Letter front() const noexcept { return (*this)[0]; }
    Letter back() const noexcept { return (*this)[size() - 1]; }

    std::string_view view() const noexcept { return bits_; }
    const std::string& str() const noexcept { return bits_; }

    Word substr(std::size_t pos, std::size_t len = std::string::npos) const
    {
        return unchecked(bits_.substr(pos, len));
    }
    Word prefix(std::size_t n) const { return substr(0, n); }
    Word suffix(std::size_t n) const { return substr(size() - std::min(n, size())); }

    bool starts_with(const Word& w) const noexcept
    {
        return w.size() <= size() && view().substr(0, w.size()) == w.view();
    }
    bool ends_with(const Word& w) const noexcept
    {
        return w.size() <= size() && view().substr(size() - w.size()) == w.view();
    }

    std::size_t count(Letter a) const noexcept
    {
        return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), letter_char(a)));
    }

    Word pow(std::size_t n) const
    {
        std::string out;
        out.reserve(size() * n);
        for (std::size_t i = 0; i < n; ++i)
            out += bits_;
        return unchecked(std::move(out));
    }

    friend Word operator+(const Word& u, const Word& v) { return unchecked(u.bits_ + v.bits_); }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& u, const Word& v)
    {
        return u.bits_ <=> v.bits_;
    }

    /// Text rendering; ε is the empty string.
    const std::string& to_string() const noexcept { return bits_; }

private:
    std::string bits_;
};

// ---------------------------------------------------------------------------------------------
// R, E and Θ

inline Word reverse(const Word& w)
{
    return Word::unchecked(std::string(w.str().rbegin(), w.str().rend()));
}

/// Letter-wise complement 0<->1 (a morphism, not the exchange antimorphism).
inline Word complement(const Word& w)
{
    std::string out(w.str());
    for (char& c : out)
        c = c == '0' ? '1' : '0';
    return Word::unchecked(std::move(out));
}

/// The exchange antimorphism E: reverse, then complement every letter.
inline Word exchange(const Word& w)
{
    std::string out(w.str().rbegin(), w.str().rend());
    for (char& c : out)
        c = c == '0' ? '1' : '0';
    return Word::unchecked(std::move(out));
}

inline bool is_palindrome(std::string_view w) noexcept
{
    for (std::size_t i = 0, j = w.size(); i + 1 < j; ++i, --j)
        if (w[i] != w[j - 1])
            return false;
    return true;
}

inline bool is_antipalindrome(std::string_view w) noexcept
{
    if (w.size() % 2)
        return false;
    for (std::size_t i = 0, j = w.size(); i < j; ++i, --j)
        if (w[i] == w[j - 1])
            return false;
    return true;
}

inline bool is_palindrome(const Word& w) noexcept { return is_palindrome(w.view()); }
inline bool is_antipalindrome(const Word& w) noexcept { return is_antipalindrome(w.view()); }

/// The Thue-Morse morphism Θ: 0 -> 01, 1 -> 10.
inline Word theta_apply(const Word& w)
{
    std::string out;
    out.reserve(2 * w.size());
    for (char c : w.str()) {
        out += c;
        out += c == '0' ? '1' : '0';
    }
    return Word::unchecked(std::move(out));
}

/// Inverse of Θ on its image: reads non-overlapping pairs 01 -> 0, 10 -> 1.
inline Result<Word> theta_decode(const Word& w)
{
    if (w.size() % 2)
        return fail(ErrorCode::NotInThetaImage, "odd length");
    std::string out;
    out.reserve(w.size() / 2);
    for (std::size_t i = 0; i < w.size(); i += 2) {
        if (w.str()[i] == w.str()[i + 1])
            return fail(ErrorCode::NotInThetaImage,
                        "pair " + w.str().substr(i, 2) + " at " + std::to_string(i));
        out += w.str()[i];
    }
    return Word::unchecked(std::move(out));
}

/// v = x·Θ(z)·y with |x|, |y| <= 1.
struct ThetaFactorization
{
    Word x;
    Word z;
    Word y;

    Word assemble() const { return x + theta_apply(z) + y; }
    friend bool operator==(const ThetaFactorization&, const ThetaFactorization&) = default;
};

/// All factorizations v = x·Θ(z)·y with |x|,|y| <= 1, ordered by (|x|, |y|).
/// If v contains 00 or 11 the pair boundaries are forced, so at most one exists.
inline std::vector<ThetaFactorization> theta_factorize(const Word& v)
{
    std::vector<ThetaFactorization> out;
    for (std::size_t lx = 0; lx <= 1; ++lx) {
        for (std::size_t ly = 0; ly <= 1; ++ly) {
            if (lx + ly > v.size() || (v.size() - lx - ly) % 2)
                continue;
            auto z = theta_decode(v.substr(lx, v.size() - lx - ly));
            if (z)
                out.push_back({v.prefix(lx), *z, v.suffix(ly)});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------------------------
// Periods and roots

/// Border lengths: border[i] is the longest proper border of w[0, i).
inline std::vector<std::size_t> failure_function(std::string_view w)
{
    std::vector<std::size_t> border(w.size() + 1, 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        while (k > 0 && w[i] != w[k])
            k = border[k];
        if (w[i] == w[k])
            ++k;
        border[i + 1] = k;
    }
    return border;
}

inline std::size_t smallest_period(std::string_view w)
{
    if (w.empty())
        throw Error(ErrorCode::EmptyWord, "smallest_period of the empty word");
    return w.size() - failure_function(w).back();
}

inline std::size_t smallest_period(const Word& w) { return smallest_period(w.view()); }

struct PrimitiveRoot
{
    Word root;
    std::size_t exponent;
};

inline PrimitiveRoot primitive_root(const Word& w)
{
    if (w.empty())
        throw Error(ErrorCode::EmptyWord, "primitive_root of the empty word");
    std::size_t p = smallest_period(w);
    if (w.size() % p)
        return {w, 1};
    return {w.prefix(p), w.size() / p};
}

inline bool is_primitive_word(const Word& w) { return !w.empty() && primitive_root(w).exponent == 1; }

/// Adjacent-sum map: the i-th letter is w_i + w_{i+1} (mod 2).
inline Word s_map(const Word& w)
{
    if (w.empty())
        throw Error(ErrorCode::EmptyWord, "s_map needs at least one letter");
    std::string out(w.size() - 1, '0');
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        out[i] = w.str()[i] == w.str()[i + 1] ? '0' : '1';
    return Word::unchecked(std::move(out));
}

/// The rotation moving the first k letters to the end.
inline Word rotate(const Word& w, std::size_t k)
{
    if (w.empty())
        return w;
    k %= w.size();
    return Word::unchecked(w.str().substr(k) + w.str().substr(0, k));
}

} // namespace morph

template <>
struct std::hash<morph::Word>
{
    std::size_t operator()(const morph::Word& w) const noexcept
    {
        return std::hash<std::string>{}(w.str());
    }
};
