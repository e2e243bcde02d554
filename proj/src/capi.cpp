#include "svcalc.h"

#include "axioms.hpp"
#include "errors.hpp"
#include "flaw_demo.hpp"
#include "formats.hpp"
#include "render.hpp"
#include "sign_system.hpp"
#include "verify.hpp"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

struct svc_system {
    svcalc::SignSystem sys;
};

struct svc_arrangement {
    svcalc::Arrangement arr;
};

struct svc_report {
    bool passed;
    std::string text;
    std::string json;
};

namespace {

thread_local std::string t_last_error;

svc_status fail(svc_status code, const char* msg) {
    t_last_error = msg;
    return code;
}

template <class F>
svc_status guarded(F&& f) {
    try {
        f();
        return SVC_OK;
    } catch (const svcalc::input_error& e) {
        t_last_error = e.what();
        return SVC_ERROR_INPUT;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return SVC_ERROR_INTERNAL;
    }
}

svc_status string_result(const std::string& s, char** out) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) return fail(SVC_ERROR_INTERNAL, "out of memory");
    std::memcpy(p, s.c_str(), s.size() + 1);
    *out = p;
    return SVC_OK;
}

svc_report* make_report(bool passed, std::string text, std::string json) {
    return new svc_report{passed, std::move(text), std::move(json)};
}

} // namespace

extern "C" {

const char* svc_version(void) { return "0.1.0"; }

const char* svc_last_error(void) { return t_last_error.c_str(); }

void svc_string_free(char* s) { std::free(s); }

svc_status svc_system_parse(const char* text, svc_system** out) {
    if (!text || !out) return fail(SVC_ERROR_INPUT, "null argument");
    return guarded([&] { *out = new svc_system{svcalc::parse_sign_system(text)}; });
}

svc_status svc_system_format(const svc_system* s, char** out) {
    if (!s || !out) return fail(SVC_ERROR_INPUT, "null argument");
    return string_result(svcalc::format_sign_system(s->sys), out);
}

svc_status svc_system_json(const svc_system* s, char** out) {
    if (!s || !out) return fail(SVC_ERROR_INPUT, "null argument");
    return string_result(svcalc::system_json(s->sys), out);
}

size_t svc_system_size(const svc_system* s) { return s ? s->sys.size() : 0; }

size_t svc_system_elements(const svc_system* s) { return s ? s->sys.ground()->size() : 0; }

void svc_system_free(svc_system* s) { delete s; }

svc_status svc_arrangement_parse(const char* text, svc_arrangement** out) {
    if (!text || !out) return fail(SVC_ERROR_INPUT, "null argument");
    return guarded([&] { *out = new svc_arrangement{svcalc::parse_arrangement(text)}; });
}

void svc_arrangement_free(svc_arrangement* a) { delete a; }

svc_status svc_enumerate(const svc_arrangement* a, svc_system** out) {
    if (!a || !out) return fail(SVC_ERROR_INPUT, "null argument");
    return guarded([&] { *out = new svc_system{svcalc::enumerate_covectors(a->arr)}; });
}

svc_status svc_lift(const svc_system* s, const char* label, svc_system** out) {
    if (!s || !out) return fail(SVC_ERROR_INPUT, "null argument");
    return guarded([&] {
        std::string name = label ? label : svcalc::fresh_label(*s->sys.ground());
        *out = new svc_system{svcalc::central_extension(s->sys, name).system};
    });
}

svc_status svc_restrict(const svc_system* s, const char* label, svc_system** out) {
    if (!s || !label || !out) return fail(SVC_ERROR_INPUT, "null argument");
    return guarded([&] { *out = new svc_system{svcalc::restrict_positive(s->sys, label)}; });
}

svc_status svc_derive(const svc_system* s, const char* which, svc_system** out) {
    if (!s || !which || !out) return fail(SVC_ERROR_INPUT, "null argument");
    return guarded([&] {
        const std::string w = which;
        svcalc::SignSystem derived(s->sys.ground());
        if (w == "sym")
            derived = svcalc::sym(s->sys);
        else if (w == "asym")
            derived = svcalc::asym(s->sys);
        else if (w == "topes")
            derived = svcalc::topes(s->sys);
        else if (w == "P")
            derived = svcalc::parallel_vectors(s->sys);
        else if (w == "N")
            derived = svcalc::stabilizer(s->sys);
        else if (w == "Q")
            derived = svcalc::extended_parallel_vectors(s->sys);
        else if (w == "dagger")
            derived = svcalc::central_extension(s->sys, svcalc::fresh_label(*s->sys.ground()))
                          .system;
        else
            throw svcalc::input_error("unknown derivation '" + w +
                                      "', expected sym|asym|topes|P|N|Q|dagger");
        *out = new svc_system{std::move(derived)};
    });
}

svc_status svc_elimination(const svc_system* s, const char* which, const char* x, const char* y,
                           const char* e, svc_system** out) {
    if (!s || !which || !x || !y || !out) return fail(SVC_ERROR_INPUT, "null argument");
    return guarded([&] {
        auto ground = s->sys.ground();
        auto xv = svcalc::SignVector::parse(ground, x);
        auto yv = svcalc::SignVector::parse(ground, y);
        const std::string w = which;
        svcalc::SignSystem set(ground);
        if (w == "I1") {
            if (!e) throw svcalc::input_error("I1 needs the eliminated coordinate");
            auto idx = ground->index_of(e);
            if (!idx) throw svcalc::input_error(std::string("no element named '") + e + "'");
            set = svcalc::elimination_set(xv, yv, *idx);
        } else if (w == "I") {
            if (e) throw svcalc::input_error("a coordinate applies to I1 only");
            set = svcalc::elimination_set(xv, yv);
        } else if (w == "B") {
            if (e) throw svcalc::input_error("a coordinate applies to I1 only");
            set = svcalc::equal_support_set(xv, yv);
        } else {
            throw svcalc::input_error("unknown elimination set '" + w + "', expected I1|I|B");
        }
        *out = new svc_system{std::move(set)};
    });
}

svc_status svc_check(const svc_system* s, const char* mode, const char* strategy,
                     svc_report** out) {
    if (!s || !mode || !out) return fail(SVC_ERROR_INPUT, "null argument");
    return guarded([&] {
        const std::string m = mode;
        svcalc::CheckOutcome outcome;
        if (m == "om") {
            if (strategy) throw svcalc::input_error("a strategy applies to mode aom only");
            outcome = svcalc::outcome_om(s->sys);
        } else if (m == "aom") {
            const std::string st = strategy ? strategy : "both";
            svcalc::AomStrategy chosen;
            if (st == "axioms")
                chosen = svcalc::AomStrategy::axioms;
            else if (st == "dagger")
                chosen = svcalc::AomStrategy::dagger;
            else if (st == "both")
                chosen = svcalc::AomStrategy::both;
            else
                throw svcalc::input_error("unknown strategy '" + st +
                                          "', expected axioms|dagger|both");
            outcome = svcalc::outcome_aom(s->sys, chosen);
        } else if (m == "com") {
            if (strategy) throw svcalc::input_error("a strategy applies to mode aom only");
            outcome = svcalc::outcome_com(s->sys);
        } else {
            throw svcalc::input_error("unknown mode '" + m + "', expected om|aom|com");
        }
        *out = make_report(outcome.passed, svcalc::render_text(outcome),
                           svcalc::render_json(outcome));
    });
}

void svc_verify_options_default(svc_verify_options* opt) {
    if (!opt) return;
    svcalc::CorpusSpec spec;
    opt->base_seed = spec.base_seed;
    opt->seed_count = spec.seed_count;
    opt->max_n = spec.max_n;
    opt->max_dim = spec.max_dim;
    opt->include_fixtures = spec.include_fixtures ? 1 : 0;
}

svc_status svc_verify(const svc_verify_options* opt, const svc_system* const* extras,
                      const char* const* extra_names, size_t extra_count, svc_report** out) {
    if (!out) return fail(SVC_ERROR_INPUT, "null argument");
    if (extra_count > 0 && !extras) return fail(SVC_ERROR_INPUT, "null argument");
    return guarded([&] {
        svcalc::CorpusSpec spec;
        if (opt) {
            spec.base_seed = opt->base_seed;
            spec.seed_count = opt->seed_count;
            spec.max_n = opt->max_n;
            spec.max_dim = opt->max_dim;
            spec.include_fixtures = opt->include_fixtures != 0;
        }
        for (size_t i = 0; i < extra_count; ++i) {
            if (!extras[i]) throw svcalc::input_error("null extra system");
            std::string name = (extra_names && extra_names[i])
                                   ? extra_names[i]
                                   : "extra-" + std::to_string(i + 1);
            spec.extras.push_back(
                {std::move(name), "file", extras[i]->sys, std::nullopt, std::nullopt, ""});
        }
        const auto start = std::chrono::steady_clock::now();
        svcalc::SuiteOutcome so;
        so.result = svcalc::run_suite(spec);
        so.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                           start)
                                 .count();
        *out = make_report(so.result.all_passed, svcalc::render_text(so),
                           svcalc::render_json(so));
    });
}

svc_status svc_flaw_demo(const svc_system* s, const char* n1, const char* n2,
                         svc_report** out) {
    if (!s || !out) return fail(SVC_ERROR_INPUT, "null argument");
    if (!n1 != !n2) return fail(SVC_ERROR_INPUT, "pass both n1 and n2 or neither");
    return guarded([&] {
        svcalc::FlawDemoResult result;
        if (n1) {
            auto ground = s->sys.ground();
            result = svcalc::run_flaw_demo(s->sys, svcalc::SignVector::parse(ground, n1),
                                           svcalc::SignVector::parse(ground, n2));
        } else {
            result = svcalc::run_flaw_demo(s->sys);
        }
        *out = make_report(true, svcalc::render_text(result), svcalc::render_json(result));
    });
}

int svc_report_passed(const svc_report* r) { return r && r->passed ? 1 : 0; }

svc_status svc_report_text(const svc_report* r, char** out) {
    if (!r || !out) return fail(SVC_ERROR_INPUT, "null argument");
    return string_result(r->text, out);
}

svc_status svc_report_json(const svc_report* r, char** out) {
    if (!r || !out) return fail(SVC_ERROR_INPUT, "null argument");
    return string_result(r->json, out);
}

void svc_report_free(svc_report* r) { delete r; }

} // extern "C"
