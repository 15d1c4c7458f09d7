// scan.hpp -- exhaustive classification of small morphisms into a line-delimited JSON corpus
//
// The enumeration covers every pair of images with lengths in [1, L], in lexicographic order of
// the morphism text, keeping one representative of each {m, σmσ} pair, σ being the letter swap;
// σmσ = (complement(m(1)), complement(m(0))). Class membership and both verdicts are invariant
// under it.
//
// Work is split into contiguous index ranges, one per thread, and merged in order, so the corpus
// does not depend on the thread count. An existing corpus is resumed after its last complete
// line; the records already there are re-validated first.

#pragma once

#include "morph/classify.hpp"
#include "morph/error.hpp"
#include "morph/report.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace morph {

/// All words over {0,1} with lengths in [lo, hi].
inline std::vector<Word> all_words(std::size_t lo, std::size_t hi)
{
    std::vector<Word> out;
    for (std::size_t n = lo; n <= hi; ++n)
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code)
            out.push_back(FactorIndex::decode(code, n));
    return out;
}

/// Every pair with 1 <= |image| <= L, before symmetry reduction, in generation order.
inline std::vector<Morphism> raw_morphisms(std::size_t L)
{
    auto words = all_words(1, L);
    std::vector<Morphism> out;
    out.reserve(words.size() * words.size());
    for (auto& x : words)
        for (auto& y : words)
            out.emplace_back(x, y);
    return out;
}

/// Symmetry-reduced enumeration sorted by morphism text.
inline std::vector<Morphism> scan_morphisms(std::size_t L)
{
    if (L < 1)
        throw Error(ErrorCode::BadBounds, "max_image_len must be >= 1");
    std::vector<std::pair<std::string, Morphism>> keep;
    for (auto& m : raw_morphisms(L)) {
        auto text = m.to_string();
        if (text <= swap_letters(m).to_string())
            keep.emplace_back(std::move(text), m);
    }
    std::sort(keep.begin(), keep.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Morphism> out;
    out.reserve(keep.size());
    for (auto& k : keep)
        out.push_back(k.second);
    return out;
}

inline Json scan_record(const ClassificationReport& r)
{
    Json j;
    j["morphism"] = r.morphism.to_string();
    j["primitive"] = r.primitive;
    j["uniform"] = r.uniform;
    j["cyclic"] = r.cyclic;
    j["periodicity"] = to_string(r.periodicity);
    j["class_p"] = membership_json(r.class_p);
    j["class_ep"] = membership_json(r.class_ep);
    j["class_a1"] = membership_json(r.class_a1);
    j["class_a2"] = membership_json(r.class_a2);
    j["a_n"] = r.evidence ? Json(r.evidence->antipal_small) : Json(nullptr);
    j["a_n_large"] = r.evidence ? Json(r.evidence->antipal_large) : Json(nullptr);
    j["palindromic"] = verdict_string(r.palindromic.verdict, false);
    j["verdict"] = verdict_string(r.antipalindromic.verdict, true);
    j["counterexample_candidate"] = r.counterexample_candidate();
    j["consistency_failures"] = r.consistency_failures;
    return j;
}

namespace detail {

inline PWitness witness_from_json(const Json& v, PWitness*)
{
    return {Word(v.at("p").get<std::string>()), Word(v.at("q0").get<std::string>()),
            Word(v.at("q1").get<std::string>())};
}
inline EPWitness witness_from_json(const Json& v, EPWitness*)
{
    return {Word(v.at("p").get<std::string>()), Word(v.at("p0").get<std::string>()),
            Word(v.at("p1").get<std::string>())};
}
inline A1Witness witness_from_json(const Json& v, A1Witness*)
{
    return {Word(v.at("frak_p").get<std::string>()), Word(v.at("frak_s").get<std::string>())};
}
inline A2Witness witness_from_json(const Json& v, A2Witness*)
{
    return {Word(v.at("frak_w").get<std::string>()), v.at("k").get<std::size_t>(),
            v.at("h").get<std::size_t>()};
}

template <typename W>
std::optional<std::string> validate_membership(const Json& j, const Morphism& m, const char* name)
{
    const Json& w = j.at("witness");
    bool any = j.at("conjugate").get<bool>() || j.at("square_conjugate").get<bool>();
    if (w.is_null())
        return any ? std::optional<std::string>(std::string(name) + ": hit without witness")
                   : std::nullopt;
    Morphism hit = Morphism::parse(w.at("morphism").get<std::string>());
    W witness = witness_from_json(w.at("values"), static_cast<W*>(nullptr));
    if (!valid_witness(witness, hit))
        return std::string(name) + ": witness does not reconstruct " + hit.to_string();
    const Morphism base = w.at("squared").get<bool>() ? square(m) : m;
    auto chain = conjugacy_chain(base);
    auto pos = w.at("position").get<std::size_t>();
    if (pos >= chain.links.size() || !(chain.links[pos].morphism == hit) ||
        chain.links[pos].q.str() != w.at("q").get<std::string>())
        return std::string(name) + ": " + hit.to_string() + " is not the stated conjugate";
    return std::nullopt;
}

} // namespace detail

/// Re-checks a corpus line: every witness rebuilds its morphism, which sits at the stated place in
/// the conjugacy chain, and the candidate flag agrees with verdict and class hits.
inline std::optional<std::string> validate_record(const Json& j)
{
    try {
        Morphism m = Morphism::parse(j.at("morphism").get<std::string>());
        if (auto e = detail::validate_membership<PWitness>(j.at("class_p"), m, "P"))
            return e;
        if (auto e = detail::validate_membership<EPWitness>(j.at("class_ep"), m, "E-P"))
            return e;
        if (auto e = detail::validate_membership<A1Witness>(j.at("class_a1"), m, "A1"))
            return e;
        if (auto e = detail::validate_membership<A2Witness>(j.at("class_a2"), m, "A2"))
            return e;
        auto hit = [&](const char* k) {
            return j.at(k).at("conjugate").get<bool>() || j.at(k).at("square_conjugate").get<bool>();
        };
        bool expected = j.at("verdict").get<std::string>() ==
                            verdict_string(Verdict::EmpiricalGrowing, true) &&
                        !hit("class_a1") && !hit("class_a2");
        if (j.at("counterexample_candidate").get<bool>() != expected)
            return "counterexample_candidate disagrees with verdict and class hits";
    } catch (const std::exception& e) {
        return std::string("malformed record: ") + e.what();
    }
    return std::nullopt;
}

struct ScanOptions
{
    std::size_t max_image_len = 4;
    std::size_t parallelism = 1;
    ClassifyConfig classify;
};

struct ScanSummary
{
    std::size_t total = 0;
    std::size_t resumed = 0; ///< records already present in the file
    std::size_t counterexample_candidates = 0;
    std::size_t consistency_failures = 0; ///< records with a failed theorem-consistency check
    std::map<std::string, std::size_t> by_verdict;

    Json to_json() const
    {
        Json v = Json::object();
        for (auto& [k, n] : by_verdict)
            v[k] = n;
        return {{"total", total},
                {"resumed", resumed},
                {"counterexample_candidates", counterexample_candidates},
                {"consistency_failures", consistency_failures},
                {"by_verdict", v}};
    }
};

/// Corpus lines for morphisms[lo, hi), computed on `parallelism` threads over contiguous ranges.
inline std::vector<std::string> scan_lines(const std::vector<Morphism>& morphisms, std::size_t lo,
                                           std::size_t hi, const ScanOptions& opt)
{
    const std::size_t n = hi > lo ? hi - lo : 0;
    const std::size_t workers = std::max<std::size_t>(1, std::min(opt.parallelism, n));
    std::vector<std::string> lines(n);
    auto run = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            lines[i - lo] = scan_record(classify(morphisms[i], opt.classify)).dump();
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t begin = lo + n * w / workers;
        std::size_t end = lo + n * (w + 1) / workers;
        if (w + 1 == workers)
            run(begin, end);
        else
            pool.emplace_back(run, begin, end);
    }
    for (auto& t : pool)
        t.join();
    return lines;
}

/// Writes (or resumes) the corpus at `out` and returns the summary over all of its records.
inline ScanSummary run_scan(const std::filesystem::path& out, const ScanOptions& opt)
{
    const auto morphisms = scan_morphisms(opt.max_image_len);
    ScanSummary summary;
    auto tally = [&](const Json& j) {
        ++summary.total;
        ++summary.by_verdict[j.at("verdict").get<std::string>()];
        summary.counterexample_candidates += j.at("counterexample_candidate").get<bool>();
        summary.consistency_failures += !j.at("consistency_failures").empty();
    };

    // Resume: keep complete lines that match the enumeration, drop a partial tail.
    std::size_t done = 0;
    std::string kept;
    if (std::filesystem::exists(out)) {
        std::ifstream in(out, std::ios::binary);
        if (!in)
            throw Error(ErrorCode::IOError, "cannot read " + out.string());
        std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        std::size_t start = 0;
        for (std::size_t nl; (nl = content.find('\n', start)) != std::string::npos; start = nl + 1) {
            std::string line = content.substr(start, nl - start);
            Json j = Json::parse(line, nullptr, false);
            if (j.is_discarded())
                throw Error(ErrorCode::ParseError,
                            out.string() + ": line " + std::to_string(done + 1) + " is not JSON");
            if (done >= morphisms.size() ||
                j.value("morphism", std::string()) != morphisms[done].to_string())
                throw Error(ErrorCode::IOError, out.string() + ": line " + std::to_string(done + 1) +
                                                    " does not match the enumeration");
            if (auto err = validate_record(j))
                throw Error(ErrorCode::IOError, out.string() + ": line " +
                                                    std::to_string(done + 1) + ": " + *err);
            tally(j);
            kept += line;
            kept += '\n';
            ++done;
        }
    }
    summary.resumed = done;

    std::ofstream os(out, std::ios::binary | std::ios::trunc);
    if (!os)
        throw Error(ErrorCode::IOError, "cannot write " + out.string());
    os << kept;
    // classify in blocks so progress reaches the file and an interrupted scan can resume
    const std::size_t block = std::max<std::size_t>(64, 16 * opt.parallelism);
    for (std::size_t lo = done; lo < morphisms.size(); lo += block) {
        std::size_t hi = std::min(morphisms.size(), lo + block);
        for (auto& line : scan_lines(morphisms, lo, hi, opt)) {
            os << line << '\n';
            tally(Json::parse(line));
        }
        os.flush();
        if (!os)
            throw Error(ErrorCode::IOError, "write to " + out.string() + " failed");
    }
    return summary;
}

} // namespace morph
