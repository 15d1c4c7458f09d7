#include "oracles.hpp"

#include "morph/classify.hpp"
#include "morph/report.hpp"
#include "morph/scan.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

using namespace morph;

namespace {

const Morphism fib(Word("01"), Word("0"));
const Morphism theta(Word("01"), Word("10"));
const Morphism ep_example(Word("0101"), Word("1100"));

ClassifyConfig quick()
{
    ClassifyConfig cfg;
    cfg.prefix_len = 4000;
    return cfg;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path temp_file(const std::string& name)
{
    auto p = std::filesystem::temp_directory_path() / ("morph_test_" + name);
    std::filesystem::remove(p);
    return p;
}

} // namespace

TEST(Classify, ThueMorse)
{
    auto r = classify(theta);
    EXPECT_TRUE(r.consistent());
    EXPECT_TRUE(r.primitive && r.uniform && !r.cyclic);
    EXPECT_EQ(r.antipalindromic.verdict, Verdict::Proven);
    EXPECT_EQ(r.palindromic.verdict, Verdict::Proven);
    EXPECT_TRUE(r.class_a1.square && !r.class_a1.direct);
    EXPECT_TRUE(r.class_ep.direct);
    EXPECT_EQ(r.periodicity, Periodicity::AperiodicLikely);
    EXPECT_FALSE(r.counterexample_candidate());
    EXPECT_EQ(r.evidence->freq0, 0.5);
}

TEST(Classify, EPExample)
{
    auto r = classify(ep_example);
    EXPECT_TRUE(r.consistent());
    EXPECT_TRUE(r.class_ep.direct);
    EXPECT_FALSE(r.class_a1.any());
    EXPECT_EQ(r.antipalindromic.verdict, Verdict::FinitelyMany);
    EXPECT_NE(r.palindromic.verdict, Verdict::Proven);
    EXPECT_EQ(r.evidence->antipal_small, r.evidence->antipal_large);
}

TEST(Classify, Fibonacci)
{
    auto r = classify(fib);
    EXPECT_TRUE(r.consistent());
    EXPECT_EQ(r.conjugate_to_p, std::optional<bool>(true));
    EXPECT_FALSE(r.class_a2.any());
    EXPECT_EQ(r.palindromic.verdict, Verdict::Proven);
    EXPECT_EQ(r.antipalindromic.verdict, Verdict::FinitelyMany);
    EXPECT_LE(r.evidence->antipal_large, 4u);
}

TEST(Classify, PeriodicAndDegenerate)
{
    auto c = classify(Morphism::parse("0->01,1->0101"));
    EXPECT_TRUE(c.cyclic);
    EXPECT_EQ(c.periodicity, Periodicity::Proven);
    EXPECT_EQ(c.periodic_root, Word("01"));
    EXPECT_EQ(c.antipalindromic.verdict, Verdict::Proven);
    EXPECT_TRUE(c.consistent());

    auto none = classify(Morphism::parse("0->1,1->0"));
    EXPECT_EQ(none.antipalindromic.verdict, Verdict::NoFixedPoint);
    EXPECT_FALSE(none.evidence);

    // m^2 erases everything: no fixed point, and no square to search
    auto erased = classify(Morphism::parse("0->11,1->"));
    EXPECT_EQ(erased.antipalindromic.verdict, Verdict::NoFixedPoint);
    EXPECT_FALSE(erased.class_a1.square_conjugate);

    auto seeded = classify(theta, ClassifyConfig{4000, 4, Letter{1}});
    EXPECT_EQ(seeded.seed, std::optional<Letter>(1));
}

TEST(Classify, ConsistentOverSmallMorphisms)
{
    for (auto& m : raw_morphisms(3)) {
        auto r = classify(m, quick());
        ASSERT_TRUE(r.consistent()) << m.to_string() << ": " << r.consistency_failures.front();
        ASSERT_FALSE(r.counterexample_candidate()) << m.to_string();
        if (r.antipalindromic.verdict == Verdict::Proven && r.evidence && r.primitive &&
            r.periodicity != Periodicity::Proven) {
            ASSERT_LT(r.evidence->antipal_small, r.evidence->antipal_large) << m.to_string();
        }
        if (r.antipalindromic.verdict == Verdict::FinitelyMany) {
            ASSERT_EQ(r.evidence->antipal_small, r.evidence->antipal_large) << m.to_string();
        }
    }
}

TEST(Classify, LetterSwapSymmetry)
{
    // σmσ generates the complemented fixed point, which has the same antipalindromes up to
    // complement; proven verdicts must never contradict each other
    for (auto& m : raw_morphisms(3)) {
        auto a = classify(m, quick());
        if (!a.seed)
            continue;
        ClassifyConfig cfg = quick();
        cfg.seed_letter = Letter(1 - *a.seed);
        auto b = classify(swap_letters(m), cfg);
        ASSERT_TRUE(b.seed && *b.seed == 1 - *a.seed) << m.to_string();
        ASSERT_EQ(a.evidence->antipal_small, b.evidence->antipal_small) << m.to_string();
        ASSERT_EQ(a.evidence->antipal_large, b.evidence->antipal_large) << m.to_string();
        ASSERT_EQ(a.evidence->pal_large, b.evidence->pal_large) << m.to_string();
        auto contradict = [](Verdict x, Verdict y) {
            return (x == Verdict::Proven && y == Verdict::FinitelyMany) ||
                   (x == Verdict::FinitelyMany && y == Verdict::Proven);
        };
        ASSERT_FALSE(contradict(a.antipalindromic.verdict, b.antipalindromic.verdict)) << m.to_string();
        ASSERT_FALSE(contradict(a.palindromic.verdict, b.palindromic.verdict)) << m.to_string();
    }
}

TEST(Report, JsonShape)
{
    auto j = report_json(classify(theta, quick()));
    for (const char* k : {"class_p", "class_ep", "class_a1", "class_a2"}) {
        ASSERT_TRUE(j.contains(k)) << k;
        for (const char* f : {"direct", "conjugate", "square", "square_conjugate", "witness"})
            EXPECT_TRUE(j[k].contains(f)) << k << "." << f;
    }
    EXPECT_EQ(j["antipalindromic"]["verdict"], "antipalindromic: proven");
    EXPECT_TRUE(j["antipalindromic"].contains("basis"));
    EXPECT_TRUE(j["antipalindromic"]["evidence"].contains("a_n_large"));
    EXPECT_EQ(j["class_a1"]["witness"]["values"]["frak_p"], "0110");
    EXPECT_TRUE(j["class_a1"]["witness"]["squared"].get<bool>());
    // Θ is not in P, Θ² is
    EXPECT_FALSE(j["class_p"]["direct"].get<bool>());
    EXPECT_TRUE(j["class_p"]["witness"]["squared"].get<bool>());
    EXPECT_TRUE(report_json(classify(ep_example, quick()))["class_a1"]["witness"].is_null());
}

TEST(Scan, Enumeration)
{
    EXPECT_EQ(raw_morphisms(2).size(), 36u);
    EXPECT_THROW(scan_morphisms(0), Error);
    auto ms = scan_morphisms(2);
    std::set<std::string> seen;
    for (auto& m : ms) {
        std::string a = m.to_string(), b = swap_letters(m).to_string();
        EXPECT_LE(a, b);
        EXPECT_TRUE(seen.insert(a).second);
    }
    // every raw morphism is represented by itself or its letter swap
    for (auto& m : raw_morphisms(2))
        EXPECT_TRUE(seen.count(m.to_string()) || seen.count(swap_letters(m).to_string())) << m.to_string();
    EXPECT_TRUE(std::is_sorted(ms.begin(), ms.end(), [](auto& x, auto& y) { return x.to_string() < y.to_string(); }));
}

TEST(Scan, RecordsValidateAndTamperingIsCaught)
{
    for (auto& m : scan_morphisms(2)) {
        Json j = scan_record(classify(m, quick()));
        ASSERT_EQ(validate_record(j), std::nullopt) << j.dump();
    }
    Json j = scan_record(classify(theta, quick()));
    Json bad = j;
    bad["class_a1"]["witness"]["values"]["frak_p"] = "0111";
    EXPECT_TRUE(validate_record(bad));
    bad = j;
    bad["class_a1"]["witness"]["position"] = 7;
    EXPECT_TRUE(validate_record(bad));
    bad = j;
    bad["counterexample_candidate"] = true;
    EXPECT_TRUE(validate_record(bad));
    bad = j;
    bad.erase("class_p");
    EXPECT_TRUE(validate_record(bad));
}

TEST(Scan, DeterministicAndResumable)
{
    ScanOptions opt;
    opt.max_image_len = 3;
    opt.classify = quick();
    auto one = temp_file("p1.jsonl"), many = temp_file("p4.jsonl");
    auto s1 = run_scan(one, opt);
    opt.parallelism = 4;
    auto s4 = run_scan(many, opt);
    const std::string full = slurp(one);
    EXPECT_EQ(full, slurp(many));
    EXPECT_EQ(s1.total, scan_morphisms(3).size());
    EXPECT_EQ(s1.counterexample_candidates, 0u);
    EXPECT_EQ(s1.consistency_failures, 0u);
    EXPECT_EQ(s1.to_json(), s4.to_json());

    // cut mid-line: the partial record is dropped and recomputed
    std::size_t cut = full.find('\n', full.size() / 2) + 10;
    {
        std::ofstream os(one, std::ios::binary | std::ios::trunc);
        os << full.substr(0, cut);
    }
    opt.parallelism = 2;
    auto resumed = run_scan(one, opt);
    EXPECT_EQ(slurp(one), full);
    EXPECT_GT(resumed.resumed, 0u);
    EXPECT_LT(resumed.resumed, resumed.total);
    EXPECT_EQ(resumed.total, s1.total);

    // a complete scan resumes to itself
    auto again = run_scan(one, opt);
    EXPECT_EQ(again.resumed, again.total);
    EXPECT_EQ(slurp(one), full);

    // a tampered witness in the existing file is refused
    std::string tampered = full;
    auto pos = tampered.find("\"frak_p\":\"");
    ASSERT_NE(pos, std::string::npos);
    pos += 10;
    tampered[pos] = tampered[pos] == '0' ? '1' : '0';
    {
        std::ofstream os(one, std::ios::binary | std::ios::trunc);
        os << tampered;
    }
    EXPECT_THROW(run_scan(one, opt), Error);
    std::filesystem::remove(one);
    std::filesystem::remove(many);
}
