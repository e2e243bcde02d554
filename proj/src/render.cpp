#include "render.hpp"

#include <json.hpp>

#include <cstdio>

namespace svcalc {

using nlohmann::json;

namespace {

std::string pass_word(bool b) { return b ? "pass" : "FAIL"; }

std::string label_of(const SignSystem& s, std::size_t coordinate) {
    return s.ground()->label(coordinate);
}

std::string joined(const std::vector<SignVector>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ", ";
        out += vs[i].str();
    }
    return out;
}

std::string format_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", s);
    return buf;
}

void append_verdict_text(std::string& out, const SignSystem& sys, const AxiomVerdict& v) {
    out += "  ";
    out += axiom_name(v.axiom);
    for (std::size_t n = std::string(axiom_name(v.axiom)).size(); n < 4; ++n) out += ' ';
    out += pass_word(v.passed);
    out += "   tuples: " + std::to_string(v.tuples_checked) + "\n";
    if (!v.violation) return;
    const Violation& viol = *v.violation;
    static const char* const names[] = {"X", "Y", "Z"};
    for (std::size_t i = 0; i < viol.witnesses.size(); ++i) {
        out += "       witness ";
        out += i < 3 ? names[i] : "W";
        out += " = " + viol.witnesses[i].str() + "\n";
    }
    if (viol.coordinate)
        out += "       coordinate: " + label_of(sys, *viol.coordinate) + "\n";
    if (!viol.note.empty())
        out += "       note: " + viol.note + "\n";
    out += "       replay: ";
    out += replay(sys, viol) ? "reproduces" : "does not reproduce";
    out += "\n";
}

json verdict_json(const SignSystem& sys, const AxiomVerdict& v) {
    json j;
    j["axiom"] = std::string(axiom_name(v.axiom));
    j["passed"] = v.passed;
    j["tuples_checked"] = v.tuples_checked;
    if (v.violation) {
        const Violation& viol = *v.violation;
        json w = json::array();
        for (const auto& x : viol.witnesses) w.push_back(x.str());
        json jv;
        jv["witnesses"] = std::move(w);
        jv["coordinate"] = viol.coordinate ? json(label_of(sys, *viol.coordinate)) : json(nullptr);
        jv["note"] = viol.note;
        jv["replayed"] = replay(sys, viol);
        j["violation"] = std::move(jv);
    } else {
        j["violation"] = nullptr;
    }
    return j;
}

} // namespace

CheckOutcome outcome_om(const SignSystem& s) {
    OmResult r = check_om(s);
    CheckOutcome c;
    c.mode = "om";
    c.passed = r.is_om;
    c.sections.push_back({"covector axioms", s, std::move(r.report)});
    return c;
}

CheckOutcome outcome_aom(const SignSystem& w, AomStrategy strategy) {
    AomResult r = check_aom(w, strategy);
    CheckOutcome c;
    c.mode = "aom";
    switch (strategy) {
        case AomStrategy::axioms: c.strategy = "axioms"; break;
        case AomStrategy::dagger: c.strategy = "dagger"; break;
        case AomStrategy::both: c.strategy = "both"; break;
    }
    c.passed = r.is_aom;
    if (r.affine_report)
        c.sections.push_back({"affine axioms", w, std::move(*r.affine_report)});
    if (r.lifted_report)
        c.sections.push_back({"lifted covector axioms", std::move(*r.lifted_system),
                              std::move(*r.lifted_report)});
    return c;
}

CheckOutcome outcome_com(const SignSystem& w) {
    ComResult r = check_com(w);
    CheckOutcome c;
    c.mode = "com";
    c.passed = r.is_com;
    c.sections.push_back({"relaxed axioms", w, std::move(r.report)});
    return c;
}

std::string render_text(const CheckOutcome& c) {
    std::string out = "check: " + c.mode;
    if (!c.strategy.empty()) out += " (strategy: " + c.strategy + ")";
    out += "\nresult: " + pass_word(c.passed) + "\n";
    for (const auto& sec : c.sections) {
        out += "\n" + sec.name + " over " + std::to_string(sec.system.size()) + " vector(s)\n";
        for (const auto& v : sec.report.verdicts) append_verdict_text(out, sec.system, v);
    }
    return out;
}

std::string render_json(const CheckOutcome& c) {
    json j;
    j["command"] = "check";
    j["mode"] = c.mode;
    if (!c.strategy.empty()) j["strategy"] = c.strategy;
    j["passed"] = c.passed;
    json sections = json::array();
    for (const auto& sec : c.sections) {
        json s;
        s["name"] = sec.name;
        s["vectors"] = sec.system.size();
        json axioms = json::array();
        for (const auto& v : sec.report.verdicts) axioms.push_back(verdict_json(sec.system, v));
        s["axioms"] = std::move(axioms);
        sections.push_back(std::move(s));
    }
    j["sections"] = std::move(sections);
    return j.dump(2) + "\n";
}

std::string render_text(const SuiteOutcome& s) {
    std::size_t oms = 0, aoms = 0;
    for (const auto& i : s.result.instances) {
        oms += i.om;
        aoms += i.aom;
    }
    std::string out = "verify: " + std::to_string(s.result.instances.size()) + " instance(s) (" +
                      std::to_string(oms) + " om, " + std::to_string(aoms) + " aom), " +
                      std::to_string(s.result.theorems.size()) + " check(s), " +
                      format_seconds(s.elapsed_seconds) + " s\n";
    out += "result: " + pass_word(s.result.all_passed) + "\n\n";
    std::size_t width = 0;
    for (const auto& t : s.result.theorems) width = std::max(width, t.name.size());
    for (const auto& t : s.result.theorems) {
        out += pass_word(t.passed) + "  " + t.name;
        out.append(width - t.name.size(), ' ');
        out += "  [" + std::to_string(t.applicable) + "]  " + t.claim + "\n";
        if (!t.certificate.empty()) out += "      certificate: " + t.certificate + "\n";
    }
    return out;
}

std::string render_json(const SuiteOutcome& s) {
    json j;
    j["command"] = "verify";
    j["passed"] = s.result.all_passed;
    j["elapsed_seconds"] = s.elapsed_seconds;
    json instances = json::array();
    for (const auto& i : s.result.instances) {
        json ji;
        ji["name"] = i.name;
        ji["origin"] = i.origin;
        ji["elements"] = i.elements;
        ji["vectors"] = i.vectors;
        ji["om"] = i.om;
        ji["aom"] = i.aom;
        instances.push_back(std::move(ji));
    }
    j["instances"] = std::move(instances);
    json theorems = json::array();
    for (const auto& t : s.result.theorems) {
        json jt;
        jt["name"] = t.name;
        jt["claim"] = t.claim;
        jt["passed"] = t.passed;
        jt["applicable"] = t.applicable;
        jt["certificate"] = t.certificate.empty() ? json(nullptr) : json(t.certificate);
        theorems.push_back(std::move(jt));
    }
    j["theorems"] = std::move(theorems);
    return j.dump(2) + "\n";
}

std::string render_text(const FlawDemoResult& f) {
    if (!f.data) return "flaw-demo: skipped\nreason: " + f.skip_reason + "\n";
    const FlawDemoData& d = *f.data;
    const std::string minus_v = (-d.v).str();
    const std::string sum = d.sum.str();
    std::string out = "flaw-demo\n";
    out += "pair: N1 = " + d.n1.str() + ", N2 = " + d.n2.str() + "\n";
    out += "decomposition: N1 = U + (-U') with U = " + d.u.str() + ", U' = " + d.uprime.str() +
           "\n";
    out += "composition: V = (-N2) o U = " + d.v.str() + ", a member of the system\n";
    out += "candidate: (U, -V) = (" + d.u.str() + ", " + minus_v + ") proposed for U + (-V) = " +
           sum + "\n";
    out += "blocked: I(U, -V) meets the system at " + joined(d.witnesses) + "\n";
    out += "conclusion: the pair (" + d.u.str() + ", " + minus_v + ") cannot certify " + sum +
           " as a parallel vector\n";
    out += "note: " + sum + " is " + (d.sum_in_parallel ? "" : "not ") +
           "a parallel vector of the system" +
           (d.sum_in_parallel ? " through other pairs" : "") + "\n";
    return out;
}

std::string render_json(const FlawDemoResult& f) {
    json j;
    j["command"] = "flaw-demo";
    j["passed"] = true;
    if (!f.data) {
        j["skipped"] = true;
        j["reason"] = f.skip_reason;
        return j.dump(2) + "\n";
    }
    const FlawDemoData& d = *f.data;
    j["skipped"] = false;
    j["n1"] = d.n1.str();
    j["n2"] = d.n2.str();
    j["u"] = d.u.str();
    j["u_prime"] = d.uprime.str();
    j["v"] = d.v.str();
    j["minus_v"] = (-d.v).str();
    j["sum"] = d.sum.str();
    json w = json::array();
    for (const auto& x : d.witnesses) w.push_back(x.str());
    j["witnesses"] = std::move(w);
    j["sum_in_parallel"] = d.sum_in_parallel;
    return j.dump(2) + "\n";
}

std::string system_json(const SignSystem& s) {
    json j;
    j["elements"] = s.ground()->labels();
    json vectors = json::array();
    for (const auto& v : s.members()) vectors.push_back(v.str());
    j["vectors"] = std::move(vectors);
    return j.dump(2) + "\n";
}

} // namespace svcalc
