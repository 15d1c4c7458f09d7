// classify.hpp -- assembles the class deciders into a ClassificationReport with
// palindromicity and antipalindromicity verdicts
//
// Verdict logic for the antipalindromic side, in order:
//   no fixed point       neither m nor m^2 has a prolongable letter
//   periodic (exact)     the fixed point is certified to be v^∞; antipalindromic iff some
//                        rotation of v splits into two antipalindromes
//   proven               m primitive and m or m^2 is conjugate to a member of A1 or A2
//   finitely many        m primitive, aperiodic as far as the prefix shows, and
//                          uniform with no A1 conjugate of m or m^2, or
//                          non-uniform, palindromic, and neither m nor m^2 is in A2 with an
//                          antipalindromic 𝔴
//   empirical            otherwise: growing iff A(factor*N) > A(N), A(n) being the longest
//                        antipalindromic factor of the length-n prefix
//
// Each report also carries theorem-consistency checks; a failed one is either a bug or a
// counterexample and is reported loudly by the CLI.

#pragma once

#include "morph/centers.hpp"
#include "morph/classes.hpp"
#include "morph/morphism.hpp"
#include "morph/word.hpp"
#include "morph/word_equations.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace morph {

struct ClassifyConfig
{
    std::size_t prefix_len = 25'000;
    std::size_t evidence_factor = 4;
    std::optional<Letter> seed_letter;
};

enum class Periodicity { Proven, Likely, AperiodicLikely, Unknown };

inline constexpr const char* to_string(Periodicity p)
{
    switch (p) {
    case Periodicity::Proven: return "periodic-proven";
    case Periodicity::Likely: return "periodic-likely";
    case Periodicity::AperiodicLikely: return "aperiodic-likely";
    case Periodicity::Unknown: return "unknown";
    }
    return "unknown";
}

enum class Verdict { Proven, FinitelyMany, EmpiricalGrowing, EmpiricalBounded, NoFixedPoint };

inline const char* verdict_string(Verdict v, bool antipalindromic)
{
    switch (v) {
    case Verdict::Proven: return antipalindromic ? "antipalindromic: proven" : "palindromic: proven";
    case Verdict::FinitelyMany: return "finitely many: proven";
    case Verdict::EmpiricalGrowing: return "empirical: growing";
    case Verdict::EmpiricalBounded: return "empirical: bounded";
    case Verdict::NoFixedPoint: return "no fixed point";
    }
    return "unknown";
}

struct Evidence
{
    std::size_t n_small = 0;
    std::size_t n_large = 0;
    std::size_t antipal_small = 0; ///< A(N)
    std::size_t antipal_large = 0; ///< A(factor*N)
    std::size_t pal_small = 0;
    std::size_t pal_large = 0;
    double freq0 = 0; ///< letter-0 frequency of the large prefix
};

struct VerdictReport
{
    Verdict verdict = Verdict::NoFixedPoint;
    std::string basis;
};

struct ClassificationReport
{
    explicit ClassificationReport(Morphism m) : morphism(std::move(m)) {}

    Morphism morphism;
    bool primitive = false;
    bool uniform = false;
    bool cyclic = false;
    bool squared_generator = false; ///< the fixed point is generated by m^2
    std::optional<Letter> seed;
    Periodicity periodicity = Periodicity::Unknown;
    std::optional<Word> periodic_root;

    Membership<PWitness> class_p;
    Membership<EPWitness> class_ep;
    Membership<A1Witness> class_a1;
    Membership<A2Witness> class_a2;

    std::optional<bool> conjugate_to_p;        ///< of m; nullopt when cyclic
    std::optional<bool> square_conjugate_to_p; ///< of m^2; nullopt when cyclic

    std::optional<Evidence> evidence;
    VerdictReport palindromic;
    VerdictReport antipalindromic;

    std::vector<std::string> consistency_failures;

    bool consistent() const noexcept { return consistency_failures.empty(); }
    bool antipalindromic_by_class() const noexcept { return class_a1.any() || class_a2.any(); }
    /// Counterexample to the conjecture: growing evidence with no A1/A2 conjugate of m or m^2.
    bool counterexample_candidate() const noexcept
    {
        return antipalindromic.verdict == Verdict::EmpiricalGrowing && !antipalindromic_by_class();
    }
};

namespace detail {

inline bool some_rotation_splits(const Word& v, bool antipal)
{
    for (std::size_t r = 0; r < v.size(); ++r) {
        Word rot = rotate(v, r);
        if (!(antipal ? decompose_two_antipalindromes(rot) : decompose_two_palindromes(rot)).empty())
            return true;
    }
    return false;
}

struct PeriodicityResult
{
    Periodicity kind = Periodicity::AperiodicLikely;
    std::optional<Word> root;
};

/// Exact when the prefix has a period p which the morphism maps onto a power of itself.
inline PeriodicityResult detect_periodicity(const Morphism& gen, const Word& prefix)
{
    const auto tail = prefix.view().substr(prefix.size() / 2);
    if (tail.empty())
        return {Periodicity::Unknown, std::nullopt};
    std::size_t p = smallest_period(tail);
    if (4 * p > tail.size())
        return {Periodicity::AperiodicLikely, std::nullopt};
    if (smallest_period(prefix) != p)
        return {Periodicity::Likely, std::nullopt};
    Word v = prefix.prefix(p);
    auto image = apply(gen, v);
    // gen(v) = v^j with j >= 2 and v a prefix of the fixed point forces it to be v^∞
    if (image.size() > v.size() && primitive_root(image).root == v)
        return {Periodicity::Proven, v};
    return {Periodicity::Likely, std::nullopt};
}

} // namespace detail

inline ClassificationReport classify(const Morphism& m, const ClassifyConfig& cfg = {})
{
    ClassificationReport rep{m};
    rep.primitive = is_primitive(m);
    rep.uniform = is_uniform(m);
    rep.cyclic = is_cyclic(m);

    rep.class_p = search_conjugates<PWitness>(m, [](const Morphism& c) { return in_class_P(c); });
    rep.class_ep = search_conjugates<EPWitness>(m, [](const Morphism& c) { return in_class_EP(c); });
    rep.class_a1 = search_conjugates<A1Witness>(m, [](const Morphism& c) { return in_class_A1(c); });
    rep.class_a2 = search_conjugates<A2Witness>(m, [](const Morphism& c) { return first_a2(c); });

    const auto sq = checked_square(m);
    if (!rep.cyclic) {
        rep.conjugate_to_p = conjugate_to_P(m);
        rep.square_conjugate_to_p = sq && conjugate_to_P(*sq);
    }

    auto check = [&](bool ok, const std::string& what) {
        if (!ok)
            rep.consistency_failures.push_back(what);
    };

    // Witness soundness.
    auto revalidate = [&](const auto& membership, const char* name) {
        if (membership.first)
            check(valid_witness(membership.first->witness, membership.first->morphism),
                  std::string(name) + " witness does not reconstruct its morphism");
    };
    revalidate(rep.class_p, "P");
    revalidate(rep.class_ep, "E-P");
    revalidate(rep.class_a1, "A1");
    revalidate(rep.class_a2, "A2");

    // Fixed point generator: m if some letter is prolongable, else m^2.
    std::optional<Morphism> gen;
    for (bool squared : {false, true}) {
        if (squared && !sq)
            break;
        const Morphism& g = squared ? *sq : m;
        auto letters = prolongable_letters(g);
        if (letters.empty())
            continue;
        gen = g;
        rep.squared_generator = squared;
        rep.seed = letters.front();
        if (cfg.seed_letter && is_prolongable(g, *cfg.seed_letter))
            rep.seed = cfg.seed_letter;
        break;
    }
    if (!gen) {
        rep.palindromic = {Verdict::NoFixedPoint, "neither m nor m^2 has a prolongable letter"};
        rep.antipalindromic = rep.palindromic;
        return rep;
    }

    const std::size_t n_small = cfg.prefix_len;
    const std::size_t n_large = cfg.prefix_len * cfg.evidence_factor;
    Word prefix = fixed_point_prefix(*gen, *rep.seed, n_large);
    Evidence ev;
    ev.n_small = n_small;
    ev.n_large = n_large;
    ev.antipal_small = max_antipalindrome_length(prefix.view().substr(0, n_small));
    ev.antipal_large = max_antipalindrome_length(prefix.view());
    ev.pal_small = max_palindrome_length(prefix.view().substr(0, n_small));
    ev.pal_large = max_palindrome_length(prefix.view());
    ev.freq0 = prefix.empty() ? 0.0
                              : static_cast<double>(prefix.count(0)) /
                                    static_cast<double>(prefix.size());
    rep.evidence = ev;

    if (rep.cyclic) {
        rep.periodicity = Periodicity::Proven;
        // both images are powers of one primitive word v, so the fixed point is v^∞
        const Word& img = m.image0().empty() ? m.image1() : m.image0();
        rep.periodic_root = primitive_root(img).root;
    } else {
        auto per = detail::detect_periodicity(*gen, prefix);
        rep.periodicity = per.kind;
        rep.periodic_root = per.root;
    }

    auto empirical = [&](std::size_t small, std::size_t large, const char* what) {
        return VerdictReport{large > small ? Verdict::EmpiricalGrowing : Verdict::EmpiricalBounded,
                             std::string("longest ") + what + " factor " + std::to_string(small) +
                                 " at N=" + std::to_string(n_small) + ", " +
                                 std::to_string(large) + " at N=" + std::to_string(n_large)};
    };

    // Palindromic side.
    if (rep.periodicity == Periodicity::Proven) {
        bool pal = detail::some_rotation_splits(*rep.periodic_root, false);
        rep.palindromic = {pal ? Verdict::Proven : Verdict::FinitelyMany,
                           pal ? "periodic: a rotation of the root splits into two palindromes"
                               : "periodic: no rotation of the root splits into two palindromes"};
    } else if (rep.primitive) {
        bool pal = *rep.conjugate_to_p || *rep.square_conjugate_to_p;
        rep.palindromic = {pal ? Verdict::Proven : Verdict::FinitelyMany,
                           pal ? "m or m^2 is conjugate to a morphism in P"
                               : "neither m nor m^2 is conjugate to a morphism in P"};
    } else {
        rep.palindromic = empirical(ev.pal_small, ev.pal_large, "palindromic");
    }
    const bool palindromic = rep.palindromic.verdict == Verdict::Proven;

    // Antipalindromic side.
    const bool aperiodic = rep.periodicity == Periodicity::AperiodicLikely;
    if (rep.periodicity == Periodicity::Proven) {
        const Word& root = *rep.periodic_root;
        bool anti = detail::some_rotation_splits(root, true);
        rep.antipalindromic = {
            anti ? Verdict::Proven : Verdict::FinitelyMany,
            anti ? "periodic: a rotation of the root splits into two antipalindromes"
                 : "periodic: no rotation of the root splits into two antipalindromes"};
        if (anti && palindromic)
            check(antipal_periodic_normal_form(root).ok(),
                  "periodic root with palindromes and antipalindromes has no (cE(c))^k form");
    } else if (rep.primitive && rep.antipalindromic_by_class()) {
        bool a1 = rep.class_a1.any();
        const auto& hit_sq = a1 ? rep.class_a1.first->squared : rep.class_a2.first->squared;
        rep.antipalindromic = {Verdict::Proven, std::string(hit_sq ? "m^2" : "m") +
                                                    " is conjugate to a morphism in " +
                                                    (a1 ? "A1" : "A2")};
    } else if (rep.primitive && aperiodic && rep.uniform) {
        rep.antipalindromic = {Verdict::FinitelyMany,
                               "uniform: no conjugate of m or m^2 is in A1"};
    } else if (rep.primitive && aperiodic && palindromic) {
        // an A2 member would have been caught above; none exists among m, m^2 and conjugates
        rep.antipalindromic = {Verdict::FinitelyMany,
                               "non-uniform palindromic: neither m nor m^2 is in A2"};
    } else {
        rep.antipalindromic = empirical(ev.antipal_small, ev.antipal_large, "antipalindromic");
    }

    // Theorem-consistency checks on primitive aperiodic fixed points.
    if (rep.primitive && aperiodic) {
        if (rep.class_a1.first) {
            for (auto& w : a1_witnesses(rep.class_a1.first->morphism))
                check(a1_palindromicity(w) == palindromic,
                      "A1 palindromicity criterion disagrees with the P-conjugacy test");
        }
        if (rep.class_a2.first) {
            for (auto& w : in_class_A2(rep.class_a2.first->morphism))
                check(a2_palindromicity(w) == palindromic,
                      "A2 palindromicity criterion disagrees with the P-conjugacy test");
        }
        if (rep.antipalindromic.verdict == Verdict::Proven) {
            check(is_antipalindrome(conjugacy_chain(m).q_full),
                  "conjugacy word of an antipalindromic fixed point is not an antipalindrome");
            auto f = letter_frequencies(m);
            check(f.exact_rho0 && f.exact_rho0->first * 2 == f.exact_rho0->second,
                  "antipalindromic fixed point with letter frequency != 1/2");
        }
    }
    return rep;
}

} // namespace morph
