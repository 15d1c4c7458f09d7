// language.hpp -- the factor language of a fixed-point prefix
//
// A FactorIndex stores, for every length n <= n_max, the set of length-n factors of a prefix of
// length N. The set for length n is trusted ("certified") only if the first half of the prefix
// already contains all of it; stable_up_to is the largest n such that every length up to n is
// certified. Special factors, the bispecial map Φ, (anti)palindrome censuses, E-closure and the
// constructions around antipalindromic centres all work on certified lengths.

#pragma once

#include "morph/centers.hpp"
#include "morph/error.hpp"
#include "morph/morphism.hpp"
#include "morph/word.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace morph {

class FactorIndex
{
public:
    static constexpr std::size_t max_length = 64;

    /// Index over an explicit prefix. Requires n_max <= min(64, |prefix|/4).
    static FactorIndex from_prefix(Word prefix, std::size_t n_max)
    {
        if (n_max > max_length || 4 * n_max > prefix.size())
            throw Error(ErrorCode::BadBounds, "n_max = " + std::to_string(n_max) +
                                                  " needs n_max <= 64 and 4*n_max <= N = " +
                                                  std::to_string(prefix.size()));
        FactorIndex idx;
        idx.prefix_ = std::move(prefix);
        idx.n_max_ = n_max;
        idx.build();
        return idx;
    }

    /// Index over the length-N prefix of the fixed point of m starting with a.
    static FactorIndex build(const Morphism& m, Letter a, std::size_t N, std::size_t n_max)
    {
        if (!is_prolongable(m, a))
            throw Error(ErrorCode::NotProlongable,
                        std::string("letter ") + letter_char(a) + " is not prolongable");
        auto idx = from_prefix(fixed_point_prefix(m, a, N), n_max);
        idx.morphism_ = m;
        idx.letter_ = a;
        return idx;
    }

    const Word& prefix() const noexcept { return prefix_; }
    std::size_t prefix_length() const noexcept { return prefix_.size(); }
    std::size_t n_max() const noexcept { return n_max_; }
    std::size_t stable_up_to() const noexcept { return stable_up_to_; }
    const std::optional<Morphism>& morphism() const noexcept { return morphism_; }
    Letter letter() const noexcept { return letter_; }

    bool certified(std::size_t n) const noexcept { return n <= stable_up_to_; }

    bool contains(std::string_view w) const
    {
        if (w.size() > n_max_)
            throw Error(ErrorCode::UnstableLength, "factor longer than n_max");
        return by_length_[w.size()].count(encode(w)) > 0;
    }
    bool contains(const Word& w) const { return contains(w.view()); }

    std::size_t count(std::size_t n) const { return by_length_.at(n).size(); }

    /// Factors of length n in lexicographic order.
    std::vector<Word> factors(std::size_t n) const
    {
        std::vector<Word> out;
        for (auto code : by_length_.at(n))
            out.push_back(decode(code, n));
        std::sort(out.begin(), out.end());
        return out;
    }

    static std::uint64_t encode(std::string_view w) noexcept
    {
        std::uint64_t code = 0;
        for (char c : w)
            code = (code << 1) | static_cast<std::uint64_t>(c == '1');
        return code;
    }

    static Word decode(std::uint64_t code, std::size_t n)
    {
        std::string s(n, '0');
        for (std::size_t i = 0; i < n; ++i)
            if ((code >> (n - 1 - i)) & 1u)
                s[i] = '1';
        return Word::unchecked(std::move(s));
    }

private:
    void build()
    {
        const std::string_view w = prefix_.view();
        const std::size_t N = w.size();
        const std::size_t half = N / 2;
        by_length_.assign(n_max_ + 1, {});
        by_length_[0].insert(0);
        stable_up_to_ = 0;
        bool stable = true;
        for (std::size_t n = 1; n <= n_max_; ++n) {
            const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
            auto& set = by_length_[n];
            std::uint64_t code = encode(w.substr(0, n - 1));
            std::size_t half_count = 0;
            for (std::size_t end = n - 1; end < N; ++end) {
                code = ((code << 1) | static_cast<std::uint64_t>(w[end] == '1')) & mask;
                set.insert(code);
                if (end + 1 == half)
                    half_count = set.size();
            }
            if (half < n)
                half_count = 0;
            stable = stable && half_count == set.size();
            if (stable)
                stable_up_to_ = n;
        }
    }

    Word prefix_;
    std::size_t n_max_ = 0;
    std::size_t stable_up_to_ = 0;
    std::vector<std::unordered_set<std::uint64_t>> by_length_;
    std::optional<Morphism> morphism_;
    Letter letter_ = 0;
};

// ---------------------------------------------------------------------------------------------
// Special factors

namespace detail {

inline void require_certified(const FactorIndex& idx, std::size_t n)
{
    if (!idx.certified(n))
        throw Error(ErrorCode::UnstableLength, "length " + std::to_string(n) +
                                                   " exceeds certification (stable up to " +
                                                   std::to_string(idx.stable_up_to()) + ")");
}

} // namespace detail

inline bool is_right_special(const FactorIndex& idx, const Word& w)
{
    detail::require_certified(idx, w.size() + 1);
    return idx.contains(w.str() + '0') && idx.contains(w.str() + '1');
}

inline bool is_left_special(const FactorIndex& idx, const Word& w)
{
    detail::require_certified(idx, w.size() + 1);
    return idx.contains('0' + w.str()) && idx.contains('1' + w.str());
}

inline bool is_bispecial(const FactorIndex& idx, const Word& w)
{
    return idx.contains(w) && is_right_special(idx, w) && is_left_special(idx, w);
}

inline std::vector<Word> right_special(const FactorIndex& idx, std::size_t n)
{
    detail::require_certified(idx, n + 1);
    std::vector<Word> out;
    for (auto& w : idx.factors(n))
        if (is_right_special(idx, w))
            out.push_back(w);
    return out;
}

inline std::vector<Word> left_special(const FactorIndex& idx, std::size_t n)
{
    detail::require_certified(idx, n + 1);
    std::vector<Word> out;
    for (auto& w : idx.factors(n))
        if (is_left_special(idx, w))
            out.push_back(w);
    return out;
}

/// All bispecial factors w with |w| + 1 certified, ordered by length then lexicographically.
inline std::vector<Word> bispecial(const FactorIndex& idx)
{
    std::vector<Word> out;
    for (std::size_t n = 0; n + 1 <= idx.stable_up_to(); ++n)
        for (auto& w : idx.factors(n))
            if (is_right_special(idx, w) && is_left_special(idx, w))
                out.push_back(w);
    return out;
}

/// Φ(w) = m_R(w)·q, with m_R the rightmost conjugate and q the leftmost-to-rightmost
/// conjugacy word.
inline Word bispecial_successor(const Morphism& m, const Word& w)
{
    if (!is_primitive(m))
        throw Error(ErrorCode::NotPrimitive, m.to_string() + " is not primitive");
    auto chain = conjugacy_chain(m);
    if (chain.cyclic)
        throw Error(ErrorCode::CyclicMorphism, m.to_string() + " is cyclic");
    return apply(chain.rightmost(), w) + chain.q_full;
}

struct BispecialOrbit
{
    Word seed;
    std::vector<Word> steps;
    /// For each step: nullopt if the length is beyond certification, else whether it is bispecial.
    std::vector<std::optional<bool>> bispecial;
};

inline BispecialOrbit bispecial_orbit(const Morphism& m, const FactorIndex& idx, const Word& seed,
                                      std::size_t iterations)
{
    BispecialOrbit orbit{seed, {}, {}};
    Word cur = seed;
    for (std::size_t i = 0; i < iterations; ++i) {
        cur = bispecial_successor(m, cur);
        orbit.steps.push_back(cur);
        if (cur.size() + 1 <= idx.stable_up_to())
            orbit.bispecial.push_back(is_bispecial(idx, cur));
        else
            orbit.bispecial.push_back(std::nullopt);
    }
    return orbit;
}

// ---------------------------------------------------------------------------------------------
// Census and E-closure

struct CensusRow
{
    std::size_t length = 0;
    std::size_t factor_count = 0;
    std::size_t palindrome_count = 0;
    std::size_t antipalindrome_count = 0;
    bool certified = false;
};

/// One row per length 1..n_max; rows beyond stable_up_to are flagged uncertified.
inline std::vector<CensusRow> census(const FactorIndex& idx)
{
    std::vector<CensusRow> rows;
    for (std::size_t n = 1; n <= idx.n_max(); ++n) {
        CensusRow row{n, idx.count(n), 0, 0, idx.certified(n)};
        for (auto& w : idx.factors(n)) {
            row.palindrome_count += is_palindrome(w);
            row.antipalindrome_count += is_antipalindrome(w);
        }
        rows.push_back(row);
    }
    return rows;
}

inline std::string census_csv(const std::vector<CensusRow>& rows)
{
    std::string out = "length,factor_count,palindrome_count,antipalindrome_count,certified\n";
    for (auto& r : rows)
        out += std::to_string(r.length) + ',' + std::to_string(r.factor_count) + ',' +
               std::to_string(r.palindrome_count) + ',' + std::to_string(r.antipalindrome_count) +
               ',' + (r.certified ? "true" : "false") + '\n';
    return out;
}

/// True iff every certified factor has its E-image in the index.
inline bool e_closure_check(const FactorIndex& idx)
{
    for (std::size_t n = 1; n <= idx.stable_up_to(); ++n)
        for (auto& w : idx.factors(n))
            if (!idx.contains(exchange(w)))
                return false;
    return true;
}

/// Longest w with |w| <= L such that E(w)·w is a certified factor; the first one found by a
/// depth-first search trying 0 before 1.
inline Word antipal_center(const FactorIndex& idx, std::size_t L)
{
    const std::size_t limit = std::min(L, idx.stable_up_to() / 2);
    Word best;
    std::string cur;
    // E(wa)·wa = E(a)·E(w)·w·a, so a candidate extends its parent's centre by one letter each side.
    auto dfs = [&](auto&& self) -> void {
        if (cur.size() > best.size())
            best = Word::unchecked(cur);
        if (cur.size() == limit)
            return;
        for (char a : {'0', '1'}) {
            cur.push_back(a);
            Word w = Word::unchecked(cur);
            if (idx.contains(exchange(w).str() + cur))
                self(self);
            cur.pop_back();
        }
    };
    dfs(dfs);
    return best;
}

/// Extends f rightward by forced letters until it is right special, then leftward until it is
/// left special. Forced left extensions keep right specialness, so the result is bispecial.
inline Result<Word> extend_to_bispecial(const FactorIndex& idx, const Word& f)
{
    if (!idx.certified(f.size()) || !idx.contains(f))
        return fail(ErrorCode::PreconditionViolated, f.str() + " is not a certified factor");
    std::string cur = f.str();
    auto exceeded = [&] {
        return fail(ErrorCode::CertificationExceeded,
                    "extension of " + f.str() + " reached the certification bound " +
                        std::to_string(idx.stable_up_to()));
    };
    while (true) {
        if (cur.size() + 1 > idx.stable_up_to())
            return exceeded();
        bool e0 = idx.contains(cur + '0');
        bool e1 = idx.contains(cur + '1');
        if (e0 && e1)
            break;
        if (!e0 && !e1)
            return fail(ErrorCode::PreconditionViolated, cur + " has no right extension");
        cur.push_back(e0 ? '0' : '1');
    }
    while (true) {
        if (cur.size() + 1 > idx.stable_up_to())
            return exceeded();
        bool e0 = idx.contains('0' + cur);
        bool e1 = idx.contains('1' + cur);
        if (e0 && e1)
            break;
        if (!e0 && !e1)
            return fail(ErrorCode::PreconditionViolated, cur + " has no left extension");
        cur.insert(cur.begin(), e0 ? '0' : '1');
    }
    return Word::unchecked(std::move(cur));
}

/// Growing antipalindrome evidence on the index prefix: A(N) > A(N/4).
inline bool antipalindromes_growing(const FactorIndex& idx)
{
    auto w = idx.prefix().view();
    return max_antipalindrome_length(w) > max_antipalindrome_length(w.substr(0, w.size() / 4));
}

/// The conjugacy word between the leftmost and rightmost conjugates must be an antipalindrome
/// whenever the fixed point is aperiodic and antipalindromic. Returns nullopt (check skipped)
/// when the index shows no growing antipalindrome evidence.
inline std::optional<bool> q_antipalindrome_check(const Morphism& m, const FactorIndex& idx)
{
    auto chain = conjugacy_chain(m);
    if (chain.cyclic)
        throw Error(ErrorCode::CyclicMorphism, m.to_string() + " is cyclic");
    if (!is_primitive(m))
        throw Error(ErrorCode::NotPrimitive, m.to_string() + " is not primitive");
    if (!antipalindromes_growing(idx))
        return std::nullopt;
    return is_antipalindrome(chain.q_full);
}

} // namespace morph
