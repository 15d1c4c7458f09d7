// report.hpp -- JSON and text rendering of classification reports
//
// Needs nlohmann/json on the include path.

#pragma once

#include "morph/classify.hpp"
#include "morph/language.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace morph {

using Json = nlohmann::ordered_json;

inline Json witness_json(const PWitness& w) { return {{"p", w.p.str()}, {"q0", w.q0.str()}, {"q1", w.q1.str()}}; }
inline Json witness_json(const EPWitness& w) { return {{"p", w.p.str()}, {"p0", w.p0.str()}, {"p1", w.p1.str()}}; }
inline Json witness_json(const A1Witness& w) { return {{"frak_p", w.frak_p.str()}, {"frak_s", w.frak_s.str()}}; }
inline Json witness_json(const A2Witness& w) { return {{"frak_w", w.frak_w.str()}, {"k", w.k}, {"h", w.h}}; }

template <typename W>
Json membership_json(const Membership<W>& m)
{
    Json j{{"direct", m.direct},
           {"conjugate", m.conjugate},
           {"square", m.square},
           {"square_conjugate", m.square_conjugate},
           {"witness", nullptr}};
    if (m.first) {
        j["witness"] = {{"squared", m.first->squared},
                        {"position", m.first->position},
                        {"morphism", m.first->morphism.to_string()},
                        {"q", m.first->q.str()},
                        {"values", witness_json(m.first->witness)}};
    }
    return j;
}

inline Json verdict_json(const VerdictReport& v, bool antipalindromic)
{
    return {{"verdict", verdict_string(v.verdict, antipalindromic)}, {"basis", v.basis}};
}

inline Json report_json(const ClassificationReport& r)
{
    Json j;
    j["morphism"] = r.morphism.to_string();
    j["primitive"] = r.primitive;
    j["uniform"] = r.uniform;
    j["cyclic"] = r.cyclic;
    j["periodicity"] = to_string(r.periodicity);
    j["periodic_root"] = r.periodic_root ? Json(r.periodic_root->str()) : Json(nullptr);
    j["generator"] = r.seed ? Json{{"squared", r.squared_generator},
                                   {"seed_letter", std::string(1, letter_char(*r.seed))}}
                            : Json(nullptr);
    j["class_p"] = membership_json(r.class_p);
    j["class_ep"] = membership_json(r.class_ep);
    j["class_a1"] = membership_json(r.class_a1);
    j["class_a2"] = membership_json(r.class_a2);
    j["palindromic"] = verdict_json(r.palindromic, false);
    Json anti = verdict_json(r.antipalindromic, true);
    if (r.evidence) {
        const auto& e = *r.evidence;
        anti["evidence"] = {{"n", e.n_small},
                            {"n_large", e.n_large},
                            {"a_n", e.antipal_small},
                            {"a_n_large", e.antipal_large},
                            {"p_n", e.pal_small},
                            {"p_n_large", e.pal_large},
                            {"freq0", e.freq0}};
    } else {
        anti["evidence"] = nullptr;
    }
    j["antipalindromic"] = anti;
    j["counterexample_candidate"] = r.counterexample_candidate();
    j["consistency_failures"] = r.consistency_failures;
    return j;
}

inline Json chain_json(const ConjugacyChain& c)
{
    Json links = Json::array();
    for (auto& l : c.links)
        links.push_back({{"morphism", l.morphism.to_string()}, {"q", l.q.str()}});
    return {{"cyclic", c.cyclic}, {"q_full", c.q_full.str()}, {"links", links}};
}

inline Json census_json(const std::vector<CensusRow>& rows)
{
    Json out = Json::array();
    for (auto& r : rows)
        out.push_back({{"length", r.length},
                       {"factor_count", r.factor_count},
                       {"palindrome_count", r.palindrome_count},
                       {"antipalindrome_count", r.antipalindrome_count},
                       {"certified", r.certified}});
    return out;
}

template <typename W>
std::string membership_text(const Membership<W>& m)
{
    if (!m.any())
        return "no";
    std::string where = m.direct ? "direct" : m.conjugate ? "conjugate" : m.square ? "square" : "square conjugate";
    std::string s = "yes (" + where + ")";
    if (m.first)
        s += "  via " + m.first->morphism.to_string() + ", q=" + m.first->q.to_string();
    return s;
}

inline std::string report_text(const ClassificationReport& r)
{
    std::ostringstream os;
    os << "morphism        " << r.morphism.to_string() << '\n'
       << "primitive       " << (r.primitive ? "yes" : "no") << '\n'
       << "uniform         " << (r.uniform ? "yes" : "no") << '\n'
       << "cyclic          " << (r.cyclic ? "yes" : "no") << '\n'
       << "periodicity     " << to_string(r.periodicity);
    if (r.periodic_root)
        os << " (root " << r.periodic_root->str() << ')';
    os << '\n'
       << "class P         " << membership_text(r.class_p) << '\n'
       << "class E-P       " << membership_text(r.class_ep) << '\n'
       << "class A1        " << membership_text(r.class_a1) << '\n'
       << "class A2        " << membership_text(r.class_a2) << '\n'
       << "palindromic     " << verdict_string(r.palindromic.verdict, false) << "  ["
       << r.palindromic.basis << "]\n"
       << "antipalindromic " << verdict_string(r.antipalindromic.verdict, true) << "  ["
       << r.antipalindromic.basis << "]\n";
    if (r.evidence) {
        const auto& e = *r.evidence;
        os << "evidence        A(" << e.n_small << ")=" << e.antipal_small << " A(" << e.n_large
           << ")=" << e.antipal_large << " P(" << e.n_small << ")=" << e.pal_small << " P("
           << e.n_large << ")=" << e.pal_large << " freq0=" << e.freq0 << '\n';
    }
    for (auto& f : r.consistency_failures)
        os << "CONSISTENCY FAILURE: " << f << '\n';
    return os.str();
}

inline std::string report_csv_header()
{
    return "morphism,primitive,uniform,cyclic,periodicity,class_p,class_ep,class_a1,class_a2,"
           "palindromic,antipalindromic,a_n,a_n_large,counterexample_candidate\n";
}

inline std::string report_csv_row(const ClassificationReport& r)
{
    auto b = [](bool v) { return v ? "true" : "false"; };
    std::ostringstream os;
    os << '"' << r.morphism.to_string() << "\"," << b(r.primitive) << ',' << b(r.uniform) << ','
       << b(r.cyclic) << ',' << to_string(r.periodicity) << ',' << b(r.class_p.any()) << ','
       << b(r.class_ep.any()) << ',' << b(r.class_a1.any()) << ',' << b(r.class_a2.any()) << ','
       << verdict_string(r.palindromic.verdict, false) << ','
       << verdict_string(r.antipalindromic.verdict, true) << ',';
    if (r.evidence)
        os << r.evidence->antipal_small << ',' << r.evidence->antipal_large;
    else
        os << ',';
    os << ',' << b(r.counterexample_candidate()) << '\n';
    return os.str();
}

} // namespace morph
