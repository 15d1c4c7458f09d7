// morphism.hpp -- binary morphisms: application, composition, primitivity, fixed points,
// conjugacy chains and letter frequencies

#pragma once

#include "morph/error.hpp"
#include "morph/word.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace morph {

class Morphism
{
public:
    Morphism(Word image0, Word image1) : images_{std::move(image0), std::move(image1)}
    {
        if (images_[0].empty() && images_[1].empty())
            throw Error(ErrorCode::InvalidMorphism, "both images are empty");
    }

    const Word& image(Letter a) const noexcept { return images_[a]; }
    const Word& image0() const noexcept { return images_[0]; }
    const Word& image1() const noexcept { return images_[1]; }

    /// Text format `0->IMAGE0,1->IMAGE1`.
    std::string to_string() const { return "0->" + images_[0].str() + ",1->" + images_[1].str(); }

    /// Parses `0->IMAGE0,1->IMAGE1`; whitespace around tokens is ignored. An empty image may be
    /// written as nothing or `eps`.
    static Morphism parse(std::string_view text)
    {
        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
                ++pos;
        };
        auto expect = [&](std::string_view token) {
            skip_ws();
            if (text.substr(pos, token.size()) != token)
                throw Error(ErrorCode::ParseError, "expected '" + std::string(token) + "'", pos);
            pos += token.size();
        };
        auto image = [&] {
            skip_ws();
            std::size_t start = pos;
            if (text.substr(pos, 3) == "eps") {
                pos += 3;
                return Word();
            }
            while (pos < text.size() && (text[pos] == '0' || text[pos] == '1'))
                ++pos;
            return Word::unchecked(std::string(text.substr(start, pos - start)));
        };
        expect("0");
        expect("->");
        Word w0 = image();
        expect(",");
        expect("1");
        expect("->");
        Word w1 = image();
        skip_ws();
        if (pos != text.size())
            throw Error(ErrorCode::ParseError, "unexpected trailing input", pos);
        if (w0.empty() && w1.empty())
            throw Error(ErrorCode::ParseError, "both images are empty", 0);
        return Morphism(std::move(w0), std::move(w1));
    }

    friend bool operator==(const Morphism&, const Morphism&) = default;

private:
    std::array<Word, 2> images_;
};

inline Word apply(const Morphism& m, const Word& w)
{
    std::size_t len = w.count(0) * m.image0().size() + w.count(1) * m.image1().size();
    std::string out;
    out.reserve(len);
    for (char c : w.str())
        out += m.image(c == '1').str();
    return Word::unchecked(std::move(out));
}

/// compose(m1, m2)(a) = m1(m2(a)).
inline Morphism compose(const Morphism& m1, const Morphism& m2)
{
    return Morphism(apply(m1, m2.image0()), apply(m1, m2.image1()));
}

inline Morphism square(const Morphism& m) { return compose(m, m); }

/// m^2, or nullopt when it erases both letters (m = (1^k, ε) or (ε, 0^k)).
inline std::optional<Morphism> checked_square(const Morphism& m)
{
    Word x = apply(m, m.image0()), y = apply(m, m.image1());
    if (x.empty() && y.empty())
        return std::nullopt;
    return Morphism(std::move(x), std::move(y));
}

inline const Morphism& theta_morphism()
{
    static const Morphism theta(Word("01"), Word("10"));
    return theta;
}

/// Conjugation by the letter swap 0<->1: the morphism generating the complemented fixed point.
inline Morphism swap_letters(const Morphism& m)
{
    return Morphism(complement(m.image1()), complement(m.image0()));
}

// ---------------------------------------------------------------------------------------------
// Incidence matrix, primitivity, uniformity

/// m[a][b] = number of occurrences of letter a in the image of letter b.
struct IncidenceMatrix
{
    std::array<std::array<std::uint64_t, 2>, 2> m{};

    IncidenceMatrix operator*(const IncidenceMatrix& o) const
    {
        IncidenceMatrix r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
        return r;
    }

    bool positive() const
    {
        return m[0][0] > 0 && m[0][1] > 0 && m[1][0] > 0 && m[1][1] > 0;
    }

    friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;
};

inline IncidenceMatrix incidence(const Morphism& m)
{
    IncidenceMatrix r;
    for (Letter b = 0; b < 2; ++b) {
        r.m[0][b] = m.image(b).count(0);
        r.m[1][b] = m.image(b).count(1);
    }
    return r;
}

/// For 2x2 non-negative matrices the Wielandt exponent is 2: primitive iff M^2 > 0.
inline bool is_primitive(const Morphism& m)
{
    auto mat = incidence(m);
    return (mat * mat).positive();
}

inline bool is_uniform(const Morphism& m) { return m.image0().size() == m.image1().size(); }

/// Letters a with m(a) = a·w, w nonempty, and |m^n(a)| unbounded. A binary letter is mortal
/// iff it is erased within two steps, so growth is decided by |m^3(a)| > |m^2(a)|.
inline std::vector<Letter> prolongable_letters(const Morphism& m)
{
    auto mat = incidence(m);
    std::vector<Letter> out;
    for (Letter a = 0; a < 2; ++a) {
        const Word& img = m.image(a);
        if (img.size() < 2 || img.front() != a)
            continue;
        std::array<std::uint64_t, 2> v{a == 0 ? 1u : 0u, a == 1 ? 1u : 0u};
        std::uint64_t prev = 0;
        std::uint64_t len = 1;
        for (int step = 0; step < 3; ++step) {
            v = {mat.m[0][0] * v[0] + mat.m[0][1] * v[1], mat.m[1][0] * v[0] + mat.m[1][1] * v[1]};
            prev = len;
            len = v[0] + v[1];
        }
        if (len > prev)
            out.push_back(a);
    }
    return out;
}

inline bool is_prolongable(const Morphism& m, Letter a)
{
    for (Letter b : prolongable_letters(m))
        if (b == a)
            return true;
    return false;
}

/// Length-n prefix of the fixed point starting with a, generated by a single left-to-right
/// pass that expands letters of the buffer while it is being written.
inline Word fixed_point_prefix(const Morphism& m, Letter a, std::size_t n)
{
    if (!is_prolongable(m, a))
        throw Error(ErrorCode::NotProlongable,
                    std::string("letter ") + letter_char(a) + " is not prolongable for " +
                        m.to_string());
    std::string buf;
    buf.reserve(n + std::max(m.image0().size(), m.image1().size()));
    buf += m.image(a).str();
    for (std::size_t pos = 1; buf.size() < n; ++pos)
        buf += m.image(buf[pos] == '1').str();
    buf.resize(n);
    return Word::unchecked(std::move(buf));
}

// ---------------------------------------------------------------------------------------------
// Conjugacy

struct ChainLink
{
    Morphism morphism;
    /// Conjugacy word q with q·leftmost(w) = morphism(w)·q. For a cyclic chain it is relative to
    /// the first element.
    Word q;
};

/// The finite chain of conjugates from the leftmost to the rightmost one.
struct ConjugacyChain
{
    std::vector<ChainLink> links;
    /// q_full·leftmost(w) = rightmost(w)·q_full; for a cyclic chain, the word accumulated over
    /// one full rotation back to the start.
    Word q_full;
    bool cyclic = false;

    const Morphism& leftmost() const
    {
        if (cyclic)
            throw Error(ErrorCode::CyclicMorphism, "cyclic morphisms have no leftmost conjugate");
        return links.front().morphism;
    }
    const Morphism& rightmost() const
    {
        if (cyclic)
            throw Error(ErrorCode::CyclicMorphism, "cyclic morphisms have no rightmost conjugate");
        return links.back().morphism;
    }
};

namespace detail {

inline std::optional<Letter> shared_first(const Morphism& m)
{
    const Word& x = m.image0();
    const Word& y = m.image1();
    if (x.empty())
        return y.front();
    if (y.empty())
        return x.front();
    if (x.front() == y.front())
        return x.front();
    return std::nullopt;
}

inline std::optional<Letter> shared_last(const Morphism& m)
{
    const Word& x = m.image0();
    const Word& y = m.image1();
    if (x.empty())
        return y.back();
    if (y.empty())
        return x.back();
    if (x.back() == y.back())
        return x.back();
    return std::nullopt;
}

/// Moves the first letter of every nonempty image to its end.
inline Morphism rotate_left(const Morphism& m)
{
    return Morphism(rotate(m.image0(), 1), rotate(m.image1(), 1));
}

/// Moves the last letter of every nonempty image to its front.
inline Morphism rotate_right(const Morphism& m)
{
    auto rr = [](const Word& w) { return w.empty() ? w : rotate(w, w.size() - 1); };
    return Morphism(rr(m.image0()), rr(m.image1()));
}

} // namespace detail

/// A binary morphism is cyclic (self-conjugate through a nonempty word) iff its images commute.
inline bool is_cyclic(const Morphism& m) { return m.image0() + m.image1() == m.image1() + m.image0(); }

inline ConjugacyChain conjugacy_chain(const Morphism& m)
{
    ConjugacyChain chain;
    if (is_cyclic(m)) {
        // Both images are powers of one primitive root; rotating by its length closes the loop.
        chain.cyclic = true;
        const Word& nonempty = m.image0().empty() ? m.image1() : m.image0();
        std::size_t loop = primitive_root(nonempty).root.size();
        Morphism cur = m;
        std::string q;
        for (std::size_t step = 0; step < loop; ++step) {
            chain.links.push_back({cur, Word::unchecked(q)});
            Letter c = *detail::shared_last(cur);
            q.insert(q.begin(), letter_char(c));
            cur = detail::rotate_right(cur);
        }
        chain.q_full = Word::unchecked(q);
        return chain;
    }
    Morphism left = m;
    while (detail::shared_first(left))
        left = detail::rotate_left(left);
    Morphism cur = left;
    std::string q;
    chain.links.push_back({cur, Word()});
    while (auto c = detail::shared_last(cur)) {
        q.insert(q.begin(), letter_char(*c));
        cur = detail::rotate_right(cur);
        chain.links.push_back({cur, Word::unchecked(q)});
    }
    chain.q_full = Word::unchecked(std::move(q));
    return chain;
}

/// The left conjugate ψ of m through q: q·ψ(a) = m(a)·q for both letters.
inline Result<Morphism> conjugate_by(const Morphism& m, const Word& q)
{
    std::array<Word, 2> images;
    for (Letter a = 0; a < 2; ++a) {
        Word lhs = m.image(a) + q;
        if (!lhs.starts_with(q))
            return fail(ErrorCode::NotAConjugacyWord,
                        q.str() + " is not a prefix of m(" + letter_char(a) + ")q");
        images[a] = lhs.substr(q.size());
    }
    return Morphism(images[0], images[1]);
}

// ---------------------------------------------------------------------------------------------
// Frequencies

struct FrequencyVector
{
    double rho0 = 0;
    double rho1 = 0;
    /// Exact value of rho0 = num/den when the Perron eigenvalue is rational.
    std::optional<std::pair<std::int64_t, std::int64_t>> exact_rho0;
};

/// Normalized Perron eigenvector of the incidence matrix. Eigenvalue and eigenvector are in
/// closed form; for M = [[a,b],[c,d]] it is (b, λ-a) with λ = (a+d+s)/2, s = sqrt(disc).
inline FrequencyVector letter_frequencies(const Morphism& m)
{
    if (!is_primitive(m))
        throw Error(ErrorCode::NotPrimitive, m.to_string() + " is not primitive");
    auto mat = incidence(m);
    auto a = static_cast<std::int64_t>(mat.m[0][0]);
    auto b = static_cast<std::int64_t>(mat.m[0][1]);
    auto c = static_cast<std::int64_t>(mat.m[1][0]);
    auto d = static_cast<std::int64_t>(mat.m[1][1]);
    std::int64_t disc = (a - d) * (a - d) + 4 * b * c;
    // rho0 = b / (b + λ - a) = 2b / (2b + d - a + s)
    FrequencyVector f;
    auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(disc))));
    while (s * s > disc)
        --s;
    while ((s + 1) * (s + 1) <= disc)
        ++s;
    if (s * s == disc) {
        std::int64_t num = 2 * b;
        std::int64_t den = 2 * b + d - a + s;
        std::int64_t g = std::gcd(num, den);
        f.exact_rho0 = std::make_pair(num / g, den / g);
        f.rho0 = static_cast<double>(num) / static_cast<double>(den);
    } else {
        double sd = std::sqrt(static_cast<double>(disc));
        f.rho0 = 2.0 * static_cast<double>(b) / (2.0 * static_cast<double>(b) +
                                                 static_cast<double>(d - a) + sd);
    }
    f.rho1 = 1.0 - f.rho0;
    return f;
}

} // namespace morph
