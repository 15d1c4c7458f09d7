#include "oracles.hpp"

#include "morph/morphism.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace morph;

namespace {

const Morphism fib(Word("01"), Word("0"));
const Morphism theta(Word("01"), Word("10"));

/// Every morphism with image lengths in [0, L], both images not empty.
std::vector<Morphism> small_morphisms(std::size_t L)
{
    std::vector<Morphism> out;
    for (auto& x : oracle::words_up_to(L))
        for (auto& y : oracle::words_up_to(L))
            if (!x.empty() || !y.empty())
                out.emplace_back(Word(x), Word(y));
    return out;
}

} // namespace

TEST(Morphism, ParseAndPrint)
{
    EXPECT_EQ(Morphism::parse("0->01,1->0"), fib);
    EXPECT_EQ(Morphism::parse(" 0 -> 01 , 1 -> 0 "), fib);
    EXPECT_EQ(Morphism::parse("0->01,1->eps"), Morphism(Word("01"), Word()));
    EXPECT_EQ(Morphism::parse("0->01,1->"), Morphism(Word("01"), Word()));
    EXPECT_EQ(fib.to_string(), "0->01,1->0");
    for (auto& m : small_morphisms(3))
        ASSERT_EQ(Morphism::parse(m.to_string()), m);
    try {
        Morphism::parse("0->01;1->0");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ParseError);
        EXPECT_EQ(e.position(), 5u);
    }
    EXPECT_THROW(Morphism::parse("0->,1->"), Error);
    EXPECT_THROW(Morphism::parse("0->01,1->02"), Error);
    EXPECT_THROW(Morphism(Word(), Word()), Error);
}

TEST(Morphism, CheckedSquare)
{
    EXPECT_FALSE(checked_square(Morphism::parse("0->11,1->")));
    EXPECT_EQ(*checked_square(fib), square(fib));
}

TEST(Morphism, ApplyAndCompose)
{
    EXPECT_EQ(apply(fib, Word("0")), Word("01"));
    EXPECT_EQ(apply(theta, Word("01")), Word("0110"));
    EXPECT_EQ(apply(theta, Word()), Word());
    EXPECT_EQ(square(theta), Morphism(Word("0110"), Word("1001")));
    EXPECT_EQ(square(fib), Morphism(Word("010"), Word("01")));
    const Morphism id(Word("0"), Word("1"));
    EXPECT_EQ(compose(id, fib), fib);
    EXPECT_EQ(compose(fib, id), fib);
    oracle::Rng rng(5);
    for (int n = 0; n < 500; ++n) {
        Morphism a(Word(oracle::random_word_up_to(rng, 1, 4)), Word(oracle::random_word_up_to(rng, 0, 4)));
        Morphism b(Word(oracle::random_word_up_to(rng, 1, 4)), Word(oracle::random_word_up_to(rng, 0, 4)));
        std::string w = oracle::random_word_up_to(rng, 0, 12);
        if (oracle::substitute(a, b.image0().str() + b.image1().str()).empty()) {
            EXPECT_THROW(compose(a, b), Error);
            continue;
        }
        ASSERT_EQ(apply(compose(a, b), Word(w)).str(), oracle::substitute(a, oracle::substitute(b, w)));
    }
}

TEST(Morphism, IncidenceAndPrimitivity)
{
    auto m = incidence(theta);
    EXPECT_EQ(m.m[0][0], 1u);
    EXPECT_EQ(m.m[0][1], 1u);
    EXPECT_EQ(m.m[1][0], 1u);
    EXPECT_EQ(m.m[1][1], 1u);
    EXPECT_TRUE(is_primitive(theta));
    auto f = incidence(fib);
    EXPECT_EQ(f.m[0][0], 1u);
    EXPECT_EQ(f.m[0][1], 1u);
    EXPECT_EQ(f.m[1][0], 1u);
    EXPECT_EQ(f.m[1][1], 0u);
    EXPECT_TRUE(is_primitive(fib));
    EXPECT_FALSE(is_primitive(Morphism(Word("0"), Word("1"))));
    EXPECT_FALSE(is_primitive(Morphism(Word("01"), Word("1"))));
    // brute force: some power up to 2 has every letter in every image
    for (auto& mm : small_morphisms(3)) {
        bool brute = false;
        auto sq = checked_square(mm);
        if (!sq) {
            ASSERT_FALSE(is_primitive(mm));
            continue;
        }
        for (const Morphism& p : {mm, *sq})
            brute = brute || (p.image0().count(0) && p.image0().count(1) && p.image1().count(0) &&
                              p.image1().count(1));
        ASSERT_EQ(is_primitive(mm), brute) << mm.to_string();
    }
}

TEST(Morphism, Uniform)
{
    EXPECT_TRUE(is_uniform(theta));
    EXPECT_FALSE(is_uniform(fib));
    EXPECT_TRUE(is_uniform(Morphism::parse("0->0101,1->1100")));
}

TEST(Morphism, Prolongable)
{
    EXPECT_EQ(prolongable_letters(fib), (std::vector<Letter>{0}));
    EXPECT_EQ(prolongable_letters(theta), (std::vector<Letter>{0, 1}));
    EXPECT_TRUE(prolongable_letters(Morphism::parse("0->10,1->01")).empty());
    // 0 -> 01 with 1 erased never grows
    EXPECT_TRUE(prolongable_letters(Morphism::parse("0->01,1->")).empty());
    EXPECT_EQ(prolongable_letters(Morphism::parse("0->0,1->10")), (std::vector<Letter>{1}));
    EXPECT_TRUE(prolongable_letters(Morphism::parse("0->0,1->1")).empty());
    for (auto& m : small_morphisms(3))
        for (Letter a : {0, 1}) {
            std::string w(1, letter_char(a));
            std::vector<std::size_t> lens;
            for (int i = 0; i < 8; ++i) {
                w = oracle::substitute(m, w);
                lens.push_back(w.size());
                if (w.size() > 200)
                    break;
            }
            bool grows = lens.back() > lens[lens.size() - 2];
            bool brute = m.image(a).size() >= 2 && m.image(a).front() == a && grows;
            ASSERT_EQ(is_prolongable(m, a), brute) << m.to_string() << " letter " << int(a);
        }
}

TEST(Morphism, FixedPointPrefix)
{
    EXPECT_EQ(fixed_point_prefix(fib, 0, 18), Word("010010100100101001"));
    EXPECT_EQ(fixed_point_prefix(theta, 0, 16), Word("0110100110010110"));
    EXPECT_EQ(fixed_point_prefix(theta, 1, 1), Word("1"));
    EXPECT_THROW(fixed_point_prefix(fib, 1, 5), Error);
    for (auto& m : small_morphisms(3))
        for (Letter a : prolongable_letters(m))
            ASSERT_EQ(fixed_point_prefix(m, a, 300).str(), oracle::fixed_point(m, letter_char(a), 300))
                << m.to_string();
}

TEST(Conjugacy, ChainOf01001)
{
    auto chain = conjugacy_chain(Morphism::parse("0->01001,1->01"));
    ASSERT_FALSE(chain.cyclic);
    EXPECT_EQ(chain.leftmost(), Morphism::parse("0->01010,1->10"));
    EXPECT_EQ(chain.rightmost(), Morphism::parse("0->01010,1->01"));
    EXPECT_EQ(chain.q_full, Word("01010"));
}

TEST(Conjugacy, Fibonacci)
{
    auto chain = conjugacy_chain(fib);
    EXPECT_EQ(chain.leftmost(), Morphism::parse("0->10,1->0"));
    EXPECT_EQ(chain.rightmost(), fib);
    EXPECT_EQ(chain.q_full, Word("0"));
    EXPECT_EQ(chain.links.size(), 2u);
}

TEST(Conjugacy, ThetaAndCyclic)
{
    auto t = conjugacy_chain(theta);
    EXPECT_EQ(t.leftmost(), theta);
    EXPECT_EQ(t.rightmost(), theta);
    EXPECT_TRUE(t.q_full.empty());
    auto c = conjugacy_chain(Morphism::parse("0->01,1->01"));
    EXPECT_TRUE(c.cyclic);
    EXPECT_EQ(c.links.size(), 2u);
    EXPECT_THROW(c.leftmost(), Error);
    EXPECT_TRUE(is_cyclic(Morphism::parse("0->0101,1->")));
}

TEST(Conjugacy, ChainInvariants)
{
    for (auto& m : small_morphisms(4)) {
        auto chain = conjugacy_chain(m);
        const auto& first = chain.links.front().morphism;
        bool found_m = false;
        for (std::size_t i = 0; i < chain.links.size(); ++i) {
            const auto& [mi, q] = chain.links[i];
            found_m = found_m || mi == m;
            for (Letter a : {0, 1})
                ASSERT_EQ(q + first.image(a), mi.image(a) + q) << m.to_string() << " link " << i;
            if (i > 0) {
                const auto& prev = chain.links[i - 1].morphism;
                for (Letter a : {0, 1})
                    ASSERT_EQ(rotate(mi.image(a), mi.image(a).size() ? 1 : 0), prev.image(a))
                        << m.to_string();
            }
        }
        ASSERT_TRUE(found_m) << m.to_string();
        if (!chain.cyclic) {
            for (Letter a : {0, 1})
                ASSERT_EQ(chain.q_full + chain.leftmost().image(a),
                          chain.rightmost().image(a) + chain.q_full);
            // leftmost images start with distinct letters, rightmost images end with distinct ones
            auto l = chain.leftmost(), r = chain.rightmost();
            bool l_marked = l.image0().empty() || l.image1().empty() ||
                            l.image0().front() != l.image1().front();
            bool r_marked = r.image0().empty() || r.image1().empty() ||
                            r.image0().back() != r.image1().back();
            ASSERT_TRUE(l_marked && r_marked) << m.to_string();
        }
        ASSERT_EQ(chain.cyclic, oracle::substitute(m, "01") == oracle::substitute(m, "10"));
    }
}

TEST(Conjugacy, ConjugateBy)
{
    EXPECT_EQ(*conjugate_by(fib, Word("0")), Morphism::parse("0->10,1->0"));
    EXPECT_EQ(*conjugate_by(theta, Word()), theta);
    EXPECT_EQ(conjugate_by(theta, Word("0")).code(), ErrorCode::NotAConjugacyWord);
    auto chain = conjugacy_chain(Morphism::parse("0->01001,1->01"));
    EXPECT_EQ(*conjugate_by(chain.rightmost(), chain.q_full), chain.leftmost());
}

TEST(Frequencies, Values)
{
    auto t = letter_frequencies(theta);
    EXPECT_DOUBLE_EQ(t.rho0, 0.5);
    ASSERT_TRUE(t.exact_rho0);
    EXPECT_EQ(*t.exact_rho0, std::make_pair(std::int64_t{1}, std::int64_t{2}));
    auto f = letter_frequencies(fib);
    const double tau = (1 + std::sqrt(5.0)) / 2;
    EXPECT_NEAR(f.rho0, 1 / tau, 1e-12);
    EXPECT_FALSE(f.exact_rho0);
    Word prefix = fixed_point_prefix(fib, 0, 100'000);
    EXPECT_NEAR(static_cast<double>(prefix.count(0)) / 1e5, f.rho0, 1e-3);
    EXPECT_THROW(letter_frequencies(Morphism::parse("0->00,1->11")), Error);
}

TEST(Frequencies, MatchLongPrefixes)
{
    for (auto& m : small_morphisms(3)) {
        if (!is_primitive(m) || prolongable_letters(m).empty())
            continue;
        Word w = fixed_point_prefix(m, prolongable_letters(m).front(), 200'000);
        ASSERT_NEAR(static_cast<double>(w.count(0)) / 2e5, letter_frequencies(m).rho0, 0.01)
            << m.to_string();
    }
}
