#pragma once

#include "axioms.hpp"
#include "flaw_demo.hpp"
#include "verify.hpp"

#include <string>
#include <vector>

namespace svcalc {

// One axiom report together with the system it ran against, so violations
// can be replayed at render time.
struct CheckSection {
    std::string name;
    SignSystem system;
    AxiomReport report;
};

struct CheckOutcome {
    std::string mode;     // om | aom | com
    std::string strategy; // set for aom only
    bool passed = false;
    std::vector<CheckSection> sections;
};

CheckOutcome outcome_om(const SignSystem& s);
CheckOutcome outcome_aom(const SignSystem& w, AomStrategy strategy);
CheckOutcome outcome_com(const SignSystem& w);

struct SuiteOutcome {
    SuiteResult result;
    double elapsed_seconds = 0;
};

// Text and JSON carry the same verdicts; only the layout differs.
std::string render_text(const CheckOutcome& c);
std::string render_json(const CheckOutcome& c);
std::string render_text(const SuiteOutcome& s);
std::string render_json(const SuiteOutcome& s);
std::string render_text(const FlawDemoResult& f);
std::string render_json(const FlawDemoResult& f);

// {"elements": [...], "vectors": [...]}; the text form is the .svs document.
std::string system_json(const SignSystem& s);

} // namespace svcalc
