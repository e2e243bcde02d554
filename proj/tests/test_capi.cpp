#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <svcalc.h>

#include <string>

namespace {

// The standing three-line fixture: one vertical, two parallel horizontals.
const char* kParallelDemo =
    "elements: a b c\n"
    "+++\n++-\n++0\n+--\n+0-\n"
    "-++\n-+-\n-+0\n---\n-0-\n"
    "0++\n0+-\n0+0\n0--\n00-\n";

std::string take(char* p) {
    std::string s = p ? p : "";
    svc_string_free(p);
    return s;
}

struct System {
    svc_system* h = nullptr;
    ~System() { svc_system_free(h); }
};

struct Report {
    svc_report* h = nullptr;
    ~Report() { svc_report_free(h); }
};

std::string format(const svc_system* s) {
    char* out = nullptr;
    REQUIRE(svc_system_format(s, &out) == SVC_OK);
    return take(out);
}

} // namespace

TEST_CASE("systems round trip through the interface") {
    System s;
    REQUIRE(svc_system_parse(kParallelDemo, &s.h) == SVC_OK);
    CHECK(svc_system_size(s.h) == 15);
    CHECK(svc_system_elements(s.h) == 3);
    CHECK(format(s.h) == kParallelDemo);

    char* json = nullptr;
    REQUIRE(svc_system_json(s.h, &json) == SVC_OK);
    const std::string j = take(json);
    CHECK(j.find("\"elements\"") != std::string::npos);
    CHECK(j.find("\"+++\"") != std::string::npos);
}

TEST_CASE("failures report through status and message") {
    svc_system* out = nullptr;
    CHECK(svc_system_parse("elements: a b\n+-0\n", &out) == SVC_ERROR_INPUT);
    CHECK(std::string(svc_last_error()).find("line 2") != std::string::npos);
    CHECK(svc_system_parse(nullptr, &out) == SVC_ERROR_INPUT);
    CHECK(svc_system_parse("elements: a b\n++\n", nullptr) == SVC_ERROR_INPUT);
    CHECK(svc_system_size(nullptr) == 0);
    CHECK(svc_report_passed(nullptr) == 0);
}

TEST_CASE("derivations mirror the library") {
    System s;
    REQUIRE(svc_system_parse(kParallelDemo, &s.h) == SVC_OK);

    System p;
    REQUIRE(svc_derive(s.h, "P", &p.h) == SVC_OK);
    CHECK(format(p.h) == "elements: a b c\n+00\n-00\n000\n");

    System n;
    REQUIRE(svc_derive(s.h, "N", &n.h) == SVC_OK);
    CHECK(svc_system_size(n.h) == 9);

    System dagger;
    REQUIRE(svc_derive(s.h, "dagger", &dagger.h) == SVC_OK);
    CHECK(svc_system_elements(dagger.h) == 4);
    CHECK(svc_system_size(dagger.h) == 15 + 15 + 9);

    svc_system* out = nullptr;
    CHECK(svc_derive(s.h, "PQ", &out) == SVC_ERROR_INPUT);
    CHECK(std::string(svc_last_error()).find("PQ") != std::string::npos);
}

TEST_CASE("elimination sets print the frozen values") {
    System s;
    REQUIRE(svc_system_parse("elements: 1 2 3 4\n+-+0\n-++0\n", &s.h) == SVC_OK);

    System i1;
    REQUIRE(svc_elimination(s.h, "I1", "+-+0", "-++0", "1", &i1.h) == SVC_OK);
    CHECK(format(i1.h) == "elements: 1 2 3 4\n0++0\n0-+0\n00+0\n");

    System i;
    REQUIRE(svc_elimination(s.h, "I", "+-+0", "-++0", nullptr, &i.h) == SVC_OK);
    CHECK(format(i.h) == "elements: 1 2 3 4\n+0+0\n-0+0\n0++0\n0-+0\n00+0\n");

    System b;
    REQUIRE(svc_elimination(s.h, "B", "+-+0", "-++0", nullptr, &b.h) == SVC_OK);
    CHECK(format(b.h) == "elements: 1 2 3 4\n+++0\n--+0\n");

    svc_system* out = nullptr;
    CHECK(svc_elimination(s.h, "I1", "+-+0", "-++0", nullptr, &out) == SVC_ERROR_INPUT);
    CHECK(svc_elimination(s.h, "I1", "+-+0", "-++0", "9", &out) == SVC_ERROR_INPUT);
    CHECK(svc_elimination(s.h, "I1", "+-+0", "-++0", "3", &out) == SVC_ERROR_INPUT);
    CHECK(svc_elimination(s.h, "I", "+-+0", "-++0", "1", &out) == SVC_ERROR_INPUT);
    CHECK(svc_elimination(s.h, "S", "+-+0", "-++0", nullptr, &out) == SVC_ERROR_INPUT);
    CHECK(svc_elimination(s.h, "I", "++", "-++0", nullptr, &out) == SVC_ERROR_INPUT);
}

TEST_CASE("checks render the same verdict twice") {
    System s;
    REQUIRE(svc_system_parse(kParallelDemo, &s.h) == SVC_OK);

    Report good;
    REQUIRE(svc_check(s.h, "aom", "both", &good.h) == SVC_OK);
    CHECK(svc_report_passed(good.h) == 1);
    char* out = nullptr;
    REQUIRE(svc_report_text(good.h, &out) == SVC_OK);
    CHECK(take(out).find("result: pass") != std::string::npos);
    REQUIRE(svc_report_json(good.h, &out) == SVC_OK);
    CHECK(take(out).find("\"passed\": true") != std::string::npos);

    System broken;
    std::string rows = kParallelDemo;
    rows.replace(rows.find("0+0\n"), 4, ""); // drop the vertical edge cell
    REQUIRE(svc_system_parse(rows.c_str(), &broken.h) == SVC_OK);
    Report bad;
    REQUIRE(svc_check(broken.h, "aom", nullptr, &bad.h) == SVC_OK);
    CHECK(svc_report_passed(bad.h) == 0);
    REQUIRE(svc_report_text(bad.h, &out) == SVC_OK);
    const std::string text = take(out);
    CHECK(text.find("A2") != std::string::npos);
    CHECK(text.find("replay: reproduces") != std::string::npos);
    REQUIRE(svc_report_json(bad.h, &out) == SVC_OK);
    CHECK(take(out).find("\"passed\": false") != std::string::npos);

    svc_report* r = nullptr;
    CHECK(svc_check(s.h, "om", "both", &r) == SVC_ERROR_INPUT);
    CHECK(svc_check(s.h, "aom", "guess", &r) == SVC_ERROR_INPUT);
    CHECK(svc_check(s.h, "tope", nullptr, &r) == SVC_ERROR_INPUT);
}

TEST_CASE("arrangements enumerate through the interface") {
    svc_arrangement* raw = nullptr;
    REQUIRE(svc_arrangement_parse("dim: 2\nkind: central\nh1 : 1 0 : 0\nh2 : 0 1 : 0\n",
                                  &raw) == SVC_OK);
    System cells;
    CHECK(svc_enumerate(raw, &cells.h) == SVC_OK);
    CHECK(svc_system_size(cells.h) == 9);
    svc_arrangement_free(raw);

    CHECK(svc_arrangement_parse("dim: 2\nkind: neither\n", &raw) == SVC_ERROR_INPUT);
}

TEST_CASE("lift and restrict undo each other") {
    System s;
    REQUIRE(svc_system_parse(kParallelDemo, &s.h) == SVC_OK);
    System lifted;
    REQUIRE(svc_lift(s.h, "g", &lifted.h) == SVC_OK);
    CHECK(svc_system_elements(lifted.h) == 4);
    System back;
    REQUIRE(svc_restrict(lifted.h, "g", &back.h) == SVC_OK);
    CHECK(format(back.h) == kParallelDemo);

    System fresh;
    REQUIRE(svc_lift(s.h, nullptr, &fresh.h) == SVC_OK);
    CHECK(svc_system_elements(fresh.h) == 4);

    svc_system* out = nullptr;
    CHECK(svc_restrict(s.h, "zz", &out) == SVC_ERROR_INPUT);
    CHECK(svc_lift(s.h, "a", &out) == SVC_ERROR_INPUT); // label already taken
}

TEST_CASE("the suite runs over a small corpus with extras") {
    System extra;
    REQUIRE(svc_system_parse(kParallelDemo, &extra.h) == SVC_OK);
    const svc_system* extras[] = {extra.h};
    const char* names[] = {"probe"};

    svc_verify_options opt;
    svc_verify_options_default(&opt);
    CHECK(opt.seed_count == 20);
    CHECK(opt.max_n == 5);
    opt.seed_count = 1;

    Report rep;
    REQUIRE(svc_verify(&opt, extras, names, 1, &rep.h) == SVC_OK);
    CHECK(svc_report_passed(rep.h) == 1);
    char* out = nullptr;
    REQUIRE(svc_report_json(rep.h, &out) == SVC_OK);
    const std::string j = take(out);
    CHECK(j.find("\"probe\"") != std::string::npos);
    CHECK(j.find("\"origin\": \"file\"") != std::string::npos);
    REQUIRE(svc_report_text(rep.h, &out) == SVC_OK);
    CHECK(take(out).find("result: pass") != std::string::npos);
}

TEST_CASE("the demonstration runs through the interface") {
    System s;
    REQUIRE(svc_system_parse(kParallelDemo, &s.h) == SVC_OK);

    Report rep;
    REQUIRE(svc_flaw_demo(s.h, "+00", "-00", &rep.h) == SVC_OK);
    CHECK(svc_report_passed(rep.h) == 1);
    char* out = nullptr;
    REQUIRE(svc_report_text(rep.h, &out) == SVC_OK);
    const std::string text = take(out);
    CHECK(text.find("U = ++0") != std::string::npos);
    CHECK(text.find("0+0") != std::string::npos);

    Report searched;
    REQUIRE(svc_flaw_demo(s.h, nullptr, nullptr, &searched.h) == SVC_OK);
    REQUIRE(svc_report_text(searched.h, &out) == SVC_OK);
    CHECK(take(out) == text);

    svc_report* r = nullptr;
    CHECK(svc_flaw_demo(s.h, "+00", nullptr, &r) == SVC_ERROR_INPUT);
    CHECK(std::string(svc_last_error()).find("both") != std::string::npos);
}
