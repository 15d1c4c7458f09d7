// classes.hpp -- membership deciders and witnesses for the classes P, E-P, A1 and A2
//
//   P    m(a) = p·q_a          p, q_0, q_1 palindromes
//   E-P  m(a) = p·p_a          p, p_0, p_1 antipalindromes
//   A1   m(0) = 𝔭·𝔰, m(1) = E(𝔭)·𝔰                    𝔭 nonempty, 𝔰 an antipalindrome
//   A2   m(0) = Θ(𝔴(R(𝔴)𝔴)^k), m(1) = Θ((R(𝔴)𝔴)^h R(𝔴))   𝔴 nonempty
//
// "Up to conjugacy" is decided by running the direct decider over every element of the finite
// conjugacy chain of m and of m^2.

#pragma once

#include "morph/error.hpp"
#include "morph/morphism.hpp"
#include "morph/word.hpp"
#include "morph/word_equations.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace morph {

struct PWitness
{
    Word p, q0, q1;
    friend bool operator==(const PWitness&, const PWitness&) = default;
};

struct EPWitness
{
    Word p, p0, p1;
    friend bool operator==(const EPWitness&, const EPWitness&) = default;
};

struct A1Witness
{
    Word frak_p;
    Word frak_s;
    friend bool operator==(const A1Witness&, const A1Witness&) = default;
};

struct A2Witness
{
    Word frak_w;
    std::size_t k = 0;
    std::size_t h = 0;
    friend bool operator==(const A2Witness&, const A2Witness&) = default;
};

// ---------------------------------------------------------------------------------------------
// Reconstruction (used for witness validation)

inline Morphism p_morphism(const PWitness& w) { return Morphism(w.p + w.q0, w.p + w.q1); }
inline Morphism ep_morphism(const EPWitness& w) { return Morphism(w.p + w.p0, w.p + w.p1); }

inline Morphism a1_morphism(const A1Witness& w)
{
    return Morphism(w.frak_p + w.frak_s, exchange(w.frak_p) + w.frak_s);
}

inline Morphism a2_morphism(const A2Witness& w)
{
    Word rw = reverse(w.frak_w);
    return Morphism(theta_apply(w.frak_w + (rw + w.frak_w).pow(w.k)),
                    theta_apply((rw + w.frak_w).pow(w.h) + rw));
}

inline bool valid_witness(const PWitness& w, const Morphism& m)
{
    return is_palindrome(w.p) && is_palindrome(w.q0) && is_palindrome(w.q1) && p_morphism(w) == m;
}

inline bool valid_witness(const EPWitness& w, const Morphism& m)
{
    return is_antipalindrome(w.p) && is_antipalindrome(w.p0) && is_antipalindrome(w.p1) &&
           ep_morphism(w) == m;
}

inline bool valid_witness(const A1Witness& w, const Morphism& m)
{
    return !w.frak_p.empty() && is_antipalindrome(w.frak_s) && a1_morphism(w) == m;
}

inline bool valid_witness(const A2Witness& w, const Morphism& m)
{
    return !w.frak_w.empty() && a2_morphism(w) == m;
}

// ---------------------------------------------------------------------------------------------
// Direct deciders

namespace detail {

inline std::size_t common_prefix_length(const Word& x, const Word& y)
{
    std::size_t n = 0;
    while (n < x.size() && n < y.size() && x.str()[n] == y.str()[n])
        ++n;
    return n;
}

} // namespace detail

/// Every P-decomposition, longest p first.
inline std::vector<PWitness> p_witnesses(const Morphism& m)
{
    std::vector<PWitness> out;
    const auto& x = m.image0();
    const auto& y = m.image1();
    for (std::size_t len = detail::common_prefix_length(x, y) + 1; len-- > 0;) {
        auto p = x.view().substr(0, len);
        if (is_palindrome(p) && is_palindrome(x.view().substr(len)) &&
            is_palindrome(y.view().substr(len)))
            out.push_back({x.prefix(len), x.substr(len), y.substr(len)});
    }
    return out;
}

inline std::optional<PWitness> in_class_P(const Morphism& m)
{
    auto all = p_witnesses(m);
    if (all.empty())
        return std::nullopt;
    return all.front();
}

/// Every E-P decomposition, longest p first.
inline std::vector<EPWitness> ep_witnesses(const Morphism& m)
{
    std::vector<EPWitness> out;
    const auto& x = m.image0();
    const auto& y = m.image1();
    for (std::size_t len = detail::common_prefix_length(x, y) + 1; len-- > 0;) {
        if (is_antipalindrome(x.view().substr(0, len)) &&
            is_antipalindrome(x.view().substr(len)) && is_antipalindrome(y.view().substr(len)))
            out.push_back({x.prefix(len), x.substr(len), y.substr(len)});
    }
    return out;
}

inline std::optional<EPWitness> in_class_EP(const Morphism& m)
{
    auto all = ep_witnesses(m);
    if (all.empty())
        return std::nullopt;
    return all.front();
}

/// Every A1 decomposition, longest 𝔰 first. Empty unless m is uniform.
inline std::vector<A1Witness> a1_witnesses(const Morphism& m)
{
    std::vector<A1Witness> out;
    if (!is_uniform(m))
        return out;
    const auto& x = m.image0();
    // 𝔭 nonempty, so |𝔰| < |x|; antipalindromes have even length
    for (auto s = static_cast<std::ptrdiff_t>(x.size() - 1) / 2 * 2; s >= 0; s -= 2) {
        Word frak_s = x.suffix(static_cast<std::size_t>(s));
        if (!is_antipalindrome(frak_s))
            continue;
        Word frak_p = x.prefix(x.size() - static_cast<std::size_t>(s));
        if (exchange(frak_p) + frak_s == m.image1())
            out.push_back({frak_p, frak_s});
    }
    return out;
}

inline std::optional<A1Witness> in_class_A1(const Morphism& m)
{
    auto all = a1_witnesses(m);
    if (all.empty())
        return std::nullopt;
    return all.front();
}

/// Every A2 decomposition, longest 𝔴 first.
inline std::vector<A2Witness> in_class_A2(const Morphism& m)
{
    std::vector<A2Witness> out;
    auto u0 = theta_decode(m.image0());
    auto u1 = theta_decode(m.image1());
    if (!u0 || !u1 || u0->empty() || u1->empty())
        return out;
    for (std::size_t len = std::min(u0->size(), u1->size()); len >= 1; --len) {
        if (u0->size() % len || u1->size() % len)
            continue;
        std::size_t q0 = u0->size() / len;
        std::size_t q1 = u1->size() / len;
        if (q0 % 2 == 0 || q1 % 2 == 0)
            continue;
        A2Witness w{u0->prefix(len), q0 / 2, q1 / 2};
        if (a2_morphism(w) == m)
            out.push_back(w);
    }
    return out;
}

inline bool a1_palindromicity(const A1Witness& w)
{
    return w.frak_s.empty() && is_palindrome(w.frak_p);
}

inline bool a2_palindromicity(const A2Witness& w) { return is_antipalindrome(w.frak_w); }

/// (𝔴, k, h) -> (𝔴, 0, k+h); both morphisms have the same fixed points.
inline A2Witness a2_rebalance(const A2Witness& w)
{
    if (w.k + w.h < 1)
        throw Error(ErrorCode::PreconditionViolated, "rebalancing needs k + h >= 1");
    return {w.frak_w, 0, w.k + w.h};
}

/// R(m_R(a)) = m_L(a) for both letters: m is conjugate to a morphism in class P.
inline bool conjugate_to_P(const Morphism& m)
{
    auto chain = conjugacy_chain(m);
    if (chain.cyclic)
        throw Error(ErrorCode::CyclicMorphism, m.to_string() + " is cyclic");
    const auto& l = chain.leftmost();
    const auto& r = chain.rightmost();
    return reverse(r.image0()) == l.image0() && reverse(r.image1()) == l.image1();
}

// ---------------------------------------------------------------------------------------------
// Search over conjugates and the square

template <typename W>
struct ChainHit
{
    bool squared = false;   ///< found in the chain of m^2 rather than m
    std::size_t position = 0; ///< index in the chain (0 = leftmost)
    Morphism morphism;
    Word q;                 ///< q·leftmost(w) = morphism(w)·q
    W witness;
};

template <typename W>
struct Membership
{
    bool direct = false;           ///< m itself
    bool conjugate = false;        ///< some element of the chain of m
    bool square = false;           ///< m^2 itself
    bool square_conjugate = false; ///< some element of the chain of m^2
    std::optional<ChainHit<W>> first;

    bool any() const noexcept { return conjugate || square_conjugate; }
};

/// Runs `decide` (Morphism -> optional<W>) over the chains of m and m^2.
template <typename W, typename Decide>
Membership<W> search_conjugates(const Morphism& m, Decide decide)
{
    Membership<W> res;
    const auto sq = checked_square(m);
    for (bool squared : {false, true}) {
        if (squared && !sq)
            break;
        const Morphism& base = squared ? *sq : m;
        auto chain = conjugacy_chain(base);
        for (std::size_t i = 0; i < chain.links.size(); ++i) {
            const auto& link = chain.links[i];
            std::optional<W> w = decide(link.morphism);
            if (!w)
                continue;
            bool itself = link.morphism == base;
            if (squared) {
                res.square_conjugate = true;
                res.square = res.square || itself;
            } else {
                res.conjugate = true;
                res.direct = res.direct || itself;
            }
            if (!res.first)
                res.first = ChainHit<W>{squared, i, link.morphism, link.q, *w};
        }
    }
    return res;
}

/// First A1 hit over the chains of m and m^2 (m's chain first, leftmost first).
inline std::optional<ChainHit<A1Witness>> conjugate_to_A1(const Morphism& m)
{
    return search_conjugates<A1Witness>(m, [](const Morphism& c) { return in_class_A1(c); }).first;
}

inline std::optional<A2Witness> first_a2(const Morphism& m)
{
    auto all = in_class_A2(m);
    if (all.empty())
        return std::nullopt;
    return all.front();
}

} // namespace morph
