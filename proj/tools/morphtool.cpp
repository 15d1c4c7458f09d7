// morphtool -- command-line front end for the morph library
//
// Exit codes: 0 success, 1 parse or usage error, 2 a theorem-consistency check failed.

#include "morph/classify.hpp"
#include "morph/language.hpp"
#include "morph/report.hpp"
#include "morph/scan.hpp"
#include "morph/word_equations.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace morph;

namespace {

enum class Format { Text, Json, Csv };

struct Globals
{
    Format format = Format::Text;
    std::string seed_letter;
    std::size_t prefix_len = 25'000;
    std::size_t evidence_factor = 4;

    std::optional<Letter> seed() const
    {
        if (seed_letter.empty())
            return std::nullopt;
        if (seed_letter != "0" && seed_letter != "1")
            throw Error(ErrorCode::ParseError, "--seed-letter must be 0 or 1");
        return static_cast<Letter>(seed_letter == "1");
    }

    ClassifyConfig config() const
    {
        if (prefix_len == 0 || evidence_factor == 0)
            throw Error(ErrorCode::BadBounds, "--prefix-len and --evidence-factor must be positive");
        return {prefix_len, evidence_factor, seed()};
    }
};

Letter pick_seed(const Morphism& m, std::optional<Letter> requested)
{
    if (requested)
        return *requested;
    auto letters = prolongable_letters(m);
    if (letters.empty())
        throw Error(ErrorCode::NotProlongable, m.to_string() + " has no prolongable letter");
    return letters.front();
}

void print(const Globals& g, const Json& j, const std::string& text)
{
    if (g.format == Format::Json)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

int report_exit(const ClassificationReport& r)
{
    if (r.consistent())
        return 0;
    std::cerr << "morphtool: THEOREM-CONSISTENCY CHECK FAILED for " << r.morphism.to_string()
              << '\n';
    for (auto& f : r.consistency_failures)
        std::cerr << "  " << f << '\n';
    return 2;
}

int cmd_classify(const Globals& g, const std::string& text, bool full)
{
    Morphism m = Morphism::parse(text);
    auto rep = classify(m, g.config());
    if (g.format == Format::Csv) {
        std::cout << report_csv_header() << report_csv_row(rep);
        return report_exit(rep);
    }
    Json j = report_json(rep);
    std::string out = report_text(rep);
    if (full) {
        auto chain = conjugacy_chain(m);
        j["chain"] = chain_json(chain);
        out += "chain           " + std::string(chain.cyclic ? "cyclic" : "acyclic") +
               ", q_full=" + chain.q_full.to_string() + '\n';
        for (auto& l : chain.links)
            out += "                " + l.morphism.to_string() + "  q=" + l.q.to_string() + '\n';
        if (rep.primitive) {
            auto f = letter_frequencies(m);
            j["frequencies"] = {{"rho0", f.rho0}, {"rho1", f.rho1}};
            if (f.exact_rho0)
                j["frequencies"]["exact_rho0"] = std::to_string(f.exact_rho0->first) + "/" +
                                                 std::to_string(f.exact_rho0->second);
            out += "frequencies     rho0=" + std::to_string(f.rho0) +
                   " rho1=" + std::to_string(f.rho1) + '\n';
        }
        if (rep.seed) {
            const Morphism gen = rep.squared_generator ? square(m) : m;
            std::size_t n_max = std::min<std::size_t>(16, g.prefix_len / 4);
            auto idx = FactorIndex::build(gen, *rep.seed, g.prefix_len, n_max);
            auto rows = census(idx);
            j["census"] = census_json(rows);
            out += "census          (length factors palindromes antipalindromes certified)\n";
            for (auto& r : rows)
                out += "                " + std::to_string(r.length) + ' ' +
                       std::to_string(r.factor_count) + ' ' + std::to_string(r.palindrome_count) +
                       ' ' + std::to_string(r.antipalindrome_count) + ' ' +
                       (r.certified ? "yes" : "no") + '\n';
        }
    }
    print(g, j, out);
    return report_exit(rep);
}

int cmd_fixedpoint(const Globals& g, const std::string& text, const std::string& letter,
                   std::size_t length)
{
    Morphism m = Morphism::parse(text);
    std::optional<Letter> a = g.seed();
    if (!letter.empty()) {
        if (letter != "0" && letter != "1")
            throw Error(ErrorCode::ParseError, "--letter must be 0 or 1");
        a = static_cast<Letter>(letter == "1");
    }
    Letter seed = pick_seed(m, a);
    Word w = fixed_point_prefix(m, seed, length);
    print(g, Json{{"morphism", m.to_string()}, {"letter", std::string(1, letter_char(seed))},
                  {"prefix", w.str()}},
          w.str() + '\n');
    return 0;
}

int cmd_factors(const Globals& g, const std::string& text, std::size_t max_len)
{
    Morphism m = Morphism::parse(text);
    auto idx = FactorIndex::build(m, pick_seed(m, g.seed()), g.prefix_len, max_len);
    auto rows = census(idx);
    if (g.format == Format::Csv) {
        std::cout << census_csv(rows);
        return 0;
    }
    Json j{{"morphism", m.to_string()},
           {"prefix_length", idx.prefix_length()},
           {"stable_up_to", idx.stable_up_to()},
           {"census", census_json(rows)}};
    Json lists = Json::object();
    std::string out;
    for (std::size_t n = 1; n <= max_len; ++n) {
        auto fs = idx.factors(n);
        Json arr = Json::array();
        out += std::to_string(n) + " (" + std::to_string(fs.size()) +
               (idx.certified(n) ? "" : ", uncertified") + "):";
        for (auto& f : fs) {
            arr.push_back(f.str());
            out += ' ' + f.str();
        }
        out += '\n';
        lists[std::to_string(n)] = arr;
    }
    j["factors"] = lists;
    print(g, j, out);
    return 0;
}

int cmd_bispecials(const Globals& g, const std::string& text, std::size_t max_len,
                   std::size_t iterations)
{
    Morphism m = Morphism::parse(text);
    auto idx = FactorIndex::build(m, pick_seed(m, g.seed()), g.prefix_len, max_len);
    Json j{{"morphism", m.to_string()}, {"stable_up_to", idx.stable_up_to()}};
    std::string out = "stable up to " + std::to_string(idx.stable_up_to()) + '\n';
    Json list = Json::array();
    const bool orbits = is_primitive(m) && !is_cyclic(m);
    for (auto& b : bispecial(idx)) {
        Json entry{{"word", b.str()}, {"antipalindrome", is_antipalindrome(b)},
                   {"palindrome", is_palindrome(b)}};
        out += b.empty() ? "eps" : b.str();
        if (orbits) {
            auto orbit = bispecial_orbit(m, idx, b, iterations);
            Json steps = Json::array();
            out += "  ->";
            for (std::size_t i = 0; i < orbit.steps.size(); ++i) {
                const auto& flag = orbit.bispecial[i];
                steps.push_back({{"word", orbit.steps[i].str()},
                                 {"bispecial", flag ? Json(*flag) : Json(nullptr)}});
                out += ' ' + orbit.steps[i].to_string() +
                       (flag ? (*flag ? "" : "(not bispecial)") : "(uncertified)");
            }
            entry["orbit"] = steps;
        }
        out += '\n';
        list.push_back(entry);
    }
    j["bispecials"] = list;
    print(g, j, out);
    return 0;
}

template <typename T>
const T& require(const Result<T>& r)
{
    if (!r)
        throw Error(r.code(), r.failure().message);
    return *r;
}

int cmd_equation(const Globals& g, const std::string& kind, const std::vector<std::string>& args)
{
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw Error(ErrorCode::ParseError,
                        "equation " + kind + " takes " + std::to_string(n) + " words");
    };
    std::vector<Word> w;
    for (auto& a : args)
        w.push_back(Word::parse(a));
    Json j{{"equation", kind}};
    std::string out;
    auto field = [&](const std::string& k, const Word& v) {
        j[k] = v.str();
        out += k + '=' + v.to_string() + '\n';
    };
    auto number = [&](const std::string& k, std::size_t v) {
        j[k] = v;
        out += k + '=' + std::to_string(v) + '\n';
    };
    auto pairs = [&](const std::vector<WordPair>& ps) {
        Json arr = Json::array();
        for (auto& [a, b] : ps) {
            arr.push_back(Json::array({a.str(), b.str()}));
            out += a.to_string() + " | " + b.to_string() + '\n';
        }
        j["splits"] = arr;
    };
    if (kind == "commutation") {
        need(2);
        auto& s = require(solve_commutation(w[0], w[1]));
        field("u", s.u), number("i", s.i), number("j", s.j);
    } else if (kind == "transfer") {
        need(3);
        auto& s = require(solve_transfer(w[0], w[1], w[2]));
        field("u", s.u), field("v", s.v), number("i", s.i);
    } else if (kind == "pal-antipal") {
        need(2);
        auto& s = require(solve_pal_antipal(w[0], w[1]));
        field("u", s.u), number("i", s.i), number("j", s.j);
    } else if (kind == "fine-wilf") {
        need(3);
        field("z", require(fine_wilf_root(w[0], w[1], w[2])));
    } else if (kind == "two-palindromes") {
        need(1);
        pairs(decompose_two_palindromes(w[0]));
    } else if (kind == "two-antipalindromes") {
        need(1);
        pairs(decompose_two_antipalindromes(w[0]));
    } else if (kind == "normal-form") {
        need(1);
        auto& s = require(antipal_periodic_normal_form(w[0]));
        field("c", s.c), number("k", s.k), number("rotation", s.rotation);
    } else {
        throw Error(ErrorCode::ParseError, "unknown equation kind " + kind);
    }
    print(g, j, out);
    return 0;
}

int cmd_scan(const Globals& g, std::size_t max_len, const std::string& out, std::size_t parallelism)
{
    ScanOptions opt{max_len, std::max<std::size_t>(1, parallelism), g.config()};
    auto summary = run_scan(out, opt);
    Json j = summary.to_json();
    std::string text = "records " + std::to_string(summary.total) + " (resumed " +
                       std::to_string(summary.resumed) + ")\ncounterexample candidates " +
                       std::to_string(summary.counterexample_candidates) +
                       "\nconsistency failures " + std::to_string(summary.consistency_failures) +
                       '\n';
    for (auto& [k, n] : summary.by_verdict)
        text += "  " + k + ": " + std::to_string(n) + '\n';
    print(g, j, text);
    if (summary.consistency_failures) {
        std::cerr << "morphtool: THEOREM-CONSISTENCY CHECK FAILED in "
                  << summary.consistency_failures << " records of " << out << '\n';
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Binary morphisms, their fixed points, and (anti)palindromes"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
    app.add_option("--format", g.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description("text|json|csv"));
    app.add_option("--seed-letter", g.seed_letter, "Letter the fixed point starts with");
    app.add_option("--prefix-len", g.prefix_len, "Prefix length N")->capture_default_str();
    app.add_option("--evidence-factor", g.evidence_factor, "Evidence is compared at N and factor*N")
        ->capture_default_str();

    std::string morphism_text;
    auto* analyze = app.add_subcommand("analyze", "Classification plus chain, frequencies, census");
    analyze->add_option("morphism", morphism_text, "e.g. 0->01,1->10")->required();
    auto* classify_cmd = app.add_subcommand("classify", "Class membership and verdicts");
    classify_cmd->add_option("morphism", morphism_text)->required();

    std::string letter;
    std::size_t length = 100;
    auto* fixedpoint = app.add_subcommand("fixedpoint", "Prefix of a fixed point");
    fixedpoint->add_option("morphism", morphism_text)->required();
    fixedpoint->add_option("--letter", letter, "Starting letter");
    fixedpoint->add_option("--length", length, "Prefix length")->capture_default_str();

    std::size_t max_len = 8;
    auto* factors = app.add_subcommand("factors", "Factors of the fixed-point prefix by length");
    factors->add_option("morphism", morphism_text)->required();
    factors->add_option("--max-len", max_len, "Largest factor length")->capture_default_str();

    std::size_t iterations = 3;
    auto* bispecials = app.add_subcommand("bispecials", "Bispecial factors and their orbits");
    bispecials->add_option("morphism", morphism_text)->required();
    bispecials->add_option("--max-len", max_len, "Largest factor length")->capture_default_str();
    bispecials->add_option("--iterations", iterations, "Orbit steps")->capture_default_str();

    std::string kind;
    std::vector<std::string> words;
    auto* equation = app.add_subcommand("equation", "Word-equation solvers");
    equation->add_option("kind", kind,
                         "commutation | transfer | pal-antipal | fine-wilf | two-palindromes | "
                         "two-antipalindromes | normal-form")
        ->required();
    equation->add_option("words", words, "Words (use \"\" or eps for the empty word)")->required();

    std::size_t max_image_len = 4;
    std::string out = "corpus.jsonl";
    std::size_t parallelism = 1;
    auto* scan = app.add_subcommand("scan", "Classify every small morphism into a JSONL corpus");
    scan->add_option("--max-image-len", max_image_len)->capture_default_str();
    scan->add_option("--out", out)->capture_default_str();
    scan->add_option("--parallelism", parallelism)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*analyze)
            return cmd_classify(g, morphism_text, true);
        if (*classify_cmd)
            return cmd_classify(g, morphism_text, false);
        if (*fixedpoint)
            return cmd_fixedpoint(g, morphism_text, letter, length);
        if (*factors)
            return cmd_factors(g, morphism_text, max_len);
        if (*bispecials)
            return cmd_bispecials(g, morphism_text, max_len, iterations);
        if (*equation)
            return cmd_equation(g, kind, words);
        if (*scan)
            return cmd_scan(g, max_image_len, out, parallelism);
    } catch (const Error& e) {
        std::cerr << "morphtool: " << to_string(e.code()) << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "morphtool: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
