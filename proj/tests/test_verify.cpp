#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "verify.hpp"

#include <algorithm>
#include <string>
#include <vector>

using namespace svcalc;

namespace {

CorpusSpec small_spec() {
    CorpusSpec spec;
    spec.seed_count = 6; // keep the unit run quick; the CLI run uses the default
    return spec;
}

const TheoremResult& theorem(const SuiteResult& r, const std::string& name) {
    const auto it = std::find_if(r.theorems.begin(), r.theorems.end(),
                                 [&](const TheoremResult& t) { return t.name == name; });
    REQUIRE(it != r.theorems.end());
    return *it;
}

const InstanceVerdict& verdict(const SuiteResult& r, const std::string& name) {
    const auto it = std::find_if(r.instances.begin(), r.instances.end(),
                                 [&](const InstanceVerdict& v) { return v.name == name; });
    REQUIRE(it != r.instances.end());
    return *it;
}

SignSystem pair_system(const std::vector<std::string>& labels,
                       const std::vector<std::string>& rows) {
    auto ground = GroundSet::make(labels);
    std::vector<SignVector> members;
    for (const auto& r : rows)
        members.push_back(SignVector::parse(ground, r));
    return SignSystem::of(ground, std::move(members));
}

} // namespace

TEST_CASE("default corpus is broad enough") {
    const auto corpus = build_corpus(CorpusSpec{});
    CHECK(corpus.size() >= 40);

    std::vector<std::string> names;
    for (const auto& inst : corpus)
        names.push_back(inst.name);
    auto sorted = names;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());

    for (const char* expected :
         {"central-cells-s1", "affine-cells-s1", "restriction-s1", "three-line-cells",
          "five-line-cells", "crossing-cells", "lifted-three-line-cells", "zero-only",
          "no-vectors", "opposite-pair", "elimination-pair", "three-line-missing-vector",
          "three-line-plus-origin", "crossing-missing-origin"})
        CHECK(std::count(names.begin(), names.end(), expected) == 1);
}

TEST_CASE("corpus restrictions remember their source") {
    const auto corpus = build_corpus(small_spec());
    std::size_t with_source = 0;
    for (const auto& inst : corpus) {
        if (inst.source_covectors.has_value()) {
            ++with_source;
            CHECK_FALSE(inst.source_label.empty());
            CHECK(inst.source_covectors->ground()->index_of(inst.source_label).has_value());
            CHECK_FALSE(inst.system.ground()->index_of(inst.source_label).has_value());
        }
    }
    // 5 restrictions, 6 affine enumerations, and the two line fixtures
    CHECK(with_source == 13);
}

TEST_CASE("suite passes over the generated corpus") {
    const auto r = run_suite(small_spec());
    for (const auto& t : r.theorems) {
        INFO(t.name, ": ", t.certificate);
        CHECK(t.passed);
        CHECK(t.certificate.empty());
    }
    CHECK(r.all_passed);
    CHECK(r.theorems.size() == 13);

    CHECK(r.instances.size() == build_corpus(small_spec()).size());
    CHECK(theorem(r, "axioms-vs-lift-agreement").applicable == r.instances.size());
    CHECK(theorem(r, "parallel-subset-extended").applicable == r.instances.size());
    CHECK(theorem(r, "relaxed-axioms-agreement").applicable == r.instances.size());
    CHECK(theorem(r, "tope-common-support").applicable > 0);
    CHECK(theorem(r, "tope-reconstruction").applicable > 0);
    CHECK(theorem(r, "o4-variants-equivalence").applicable > 0);
    CHECK(theorem(r, "stabilizer-matches-zero-covectors").applicable == 13);
    CHECK(theorem(r, "boundary-set-exclusion").applicable > 0);
    CHECK(theorem(r, "stabilizer-decomposition").applicable > 0);
    CHECK(theorem(r, "parallel-conformity").applicable > 0);
    CHECK(theorem(r, "strong-elimination-equivalence").applicable > 0);
    CHECK(theorem(r, "extended-equals-stabilizer").applicable > 0);
    // the two line fixtures guarantee planar instances even if no seed lands in dim 2
    CHECK(theorem(r, "region-count-agreement").applicable >= 2);
}

TEST_CASE("suite records instance verdicts") {
    const auto r = run_suite(small_spec());

    const auto& crossing = verdict(r, "crossing-cells");
    CHECK(crossing.om);
    CHECK(crossing.aom);
    CHECK(crossing.vectors == 9);

    const auto& demo = verdict(r, "three-line-cells");
    CHECK_FALSE(demo.om); // no zero vector
    CHECK(demo.aom);
    CHECK(demo.elements == 3);
    CHECK(demo.vectors == 15);

    CHECK_FALSE(verdict(r, "three-line-plus-origin").aom);
    CHECK_FALSE(verdict(r, "three-line-missing-vector").aom);
    CHECK_FALSE(verdict(r, "crossing-missing-origin").om);
    CHECK_FALSE(verdict(r, "opposite-pair").om);
    CHECK(verdict(r, "zero-only").om);
    CHECK(verdict(r, "zero-only").aom);
    CHECK_FALSE(verdict(r, "no-vectors").om);
    CHECK(verdict(r, "no-vectors").aom);
    CHECK(verdict(r, "lifted-three-line-cells").om);
}

TEST_CASE("empty corpus passes vacuously") {
    CorpusSpec spec;
    spec.seed_count = 0;
    spec.include_fixtures = false;
    const auto r = run_suite(spec);
    CHECK(r.all_passed);
    CHECK(r.instances.empty());
    CHECK(r.theorems.size() == 13);
    for (const auto& t : r.theorems) {
        CHECK(t.passed);
        CHECK(t.applicable == 0);
    }
}

TEST_CASE("broken extras stay results, not errors") {
    CorpusSpec spec;
    spec.seed_count = 1;
    spec.include_fixtures = false;
    spec.extras.push_back({"handed-in", "file", pair_system({"e"}, {"+", "-"}), std::nullopt,
                           std::nullopt, ""});
    const auto r = run_suite(spec);

    const auto& v = verdict(r, "handed-in");
    CHECK_FALSE(v.om);
    CHECK_FALSE(v.aom);
    // metatheorems still hold on a system that is neither an OM nor an AOM
    CHECK(theorem(r, "axioms-vs-lift-agreement").passed);
    CHECK(theorem(r, "relaxed-axioms-agreement").passed);
    CHECK(theorem(r, "parallel-subset-extended").passed);
    CHECK(r.all_passed);
}

TEST_CASE("suite results are deterministic") {
    CorpusSpec spec;
    spec.seed_count = 2;
    const auto a = run_suite(spec);
    const auto b = run_suite(spec);
    REQUIRE(a.instances.size() == b.instances.size());
    for (std::size_t i = 0; i < a.instances.size(); ++i) {
        CHECK(a.instances[i].name == b.instances[i].name);
        CHECK(a.instances[i].vectors == b.instances[i].vectors);
        CHECK(a.instances[i].om == b.instances[i].om);
        CHECK(a.instances[i].aom == b.instances[i].aom);
    }
    REQUIRE(a.theorems.size() == b.theorems.size());
    for (std::size_t i = 0; i < a.theorems.size(); ++i) {
        CHECK(a.theorems[i].name == b.theorems[i].name);
        CHECK(a.theorems[i].passed == b.theorems[i].passed);
        CHECK(a.theorems[i].applicable == b.theorems[i].applicable);
    }
}
