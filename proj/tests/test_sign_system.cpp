#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sign_system.hpp"

#include <set>
#include <string>
#include <vector>

using namespace svcalc;

namespace {

GroundSetPtr ground(std::initializer_list<const char*> labels) {
    std::vector<std::string> v(labels.begin(), labels.end());
    return GroundSet::make(std::move(v));
}

SignSystem system_of(const GroundSetPtr& g, std::initializer_list<const char*> rows) {
    std::vector<SignVector> members;
    for (const char* r : rows)
        members.push_back(SignVector::parse(g, r));
    return SignSystem::of(g, std::move(members));
}

std::set<std::string> strings(const SignSystem& s) {
    std::set<std::string> out;
    for (const auto& v : s.members())
        out.insert(v.str());
    return out;
}

std::vector<SignVector> all_vectors(const GroundSetPtr& g) {
    std::vector<SignVector> out;
    for_each_sign_pattern(*g, [&](std::uint32_t p, std::uint32_t m) { out.emplace_back(g, p, m); });
    return out;
}

// Three affine lines, the last two parallel; fifteen cells in total.
SignSystem parallel_demo() {
    auto g = ground({"a", "b", "c"});
    return system_of(g, {"0--", "+--", "+++", "0++", "-++", "---",
                         "00-", "0+0", "0+-", "+0-", "-0-", "++0", "-+0", "++-", "-+-"});
}

// Definitional filter: supp V inside supp X minus e, V = X off the separation set.
bool oracle_in_elimination(const SignVector& x, const SignVector& y, std::size_t e,
                           const SignVector& v) {
    const std::uint32_t sep = separation_mask(x, y);
    const std::uint32_t ebit = std::uint32_t(1) << e;
    if ((v.support_mask() & ~(x.support_mask() & ~ebit)) != 0)
        return false;
    for (std::size_t f = 0; f < x.size(); ++f)
        if (((sep >> f) & 1u) == 0 && v.at(f) != x.at(f))
            return false;
    return true;
}

} // namespace

TEST_CASE("membership, deduplication, canonical order") {
    auto g = ground({"a", "b"});
    auto s = system_of(g, {"00", "+-", "00", "-0"});
    CHECK(s.size() == 3);
    CHECK(s.contains(SignVector::parse(g, "+-")));
    CHECK(!s.contains(SignVector::parse(g, "++")));
    std::vector<std::string> order;
    for (const auto& v : s.members())
        order.push_back(v.str());
    CHECK(order == std::vector<std::string>{"+-", "-0", "00"});

    auto g2 = ground({"x", "y"});
    CHECK_THROWS_AS(SignSystem::of(g, {SignVector::parse(g2, "+-")}), input_error);
}

TEST_CASE("sym and asym split") {
    auto w = parallel_demo();
    CHECK(strings(sym(w)) ==
          std::set<std::string>{"0--", "+--", "+++", "0++", "-++", "---"});
    CHECK(strings(asym(w)) ==
          std::set<std::string>{"00-", "0+0", "0+-", "+0-", "-0-", "++0", "-+0", "++-", "-+-"});
    CHECK(sym(w).size() + asym(w).size() == w.size());
}

TEST_CASE("topes are the maximal-support members") {
    auto w = parallel_demo();
    CHECK(strings(topes(w)) ==
          std::set<std::string>{"+--", "+++", "---", "-++", "++-", "-+-"});

    auto g = ground({"a", "b"});
    auto s = system_of(g, {"00", "+0", "0-"});
    CHECK(strings(topes(s)) == std::set<std::string>{"+0", "0-"});
    CHECK(topes(SignSystem(g)).empty());
}

TEST_CASE("elimination sets of a four-element pair") {
    auto g = ground({"1", "2", "3", "4"});
    auto x = SignVector::parse(g, "+-+0");
    auto y = SignVector::parse(g, "-++0");
    CHECK(separation_mask(x, y) == 0b0011);

    CHECK(strings(elimination_set(x, y, 0)) ==
          std::set<std::string>{"0-+0", "00+0", "0++0"});
    CHECK(strings(elimination_set(x, y)) ==
          std::set<std::string>{"0-+0", "00+0", "0++0", "-0+0", "+0+0"});
    CHECK(strings(equal_support_set(x, y)) == std::set<std::string>{"+++0", "--+0"});

    CHECK_THROWS_AS(elimination_set(x, y, 2), input_error); // not separating
    CHECK_THROWS_AS(elimination_set(x, x), input_error);
    auto z = SignVector::parse(g, "+-00");
    CHECK_THROWS_AS(elimination_set(x, z), input_error); // unequal support
}

TEST_CASE("elimination builders agree with the definitional filter") {
    auto g = ground({"a", "b", "c"});
    auto all = all_vectors(g);
    for (const auto& x : all) {
        for (const auto& y : all) {
            if (x.support_mask() != y.support_mask() || x == y)
                continue;
            for (std::size_t e : positions(separation_mask(x, y))) {
                auto built = elimination_set(x, y, e);
                for (const auto& v : all) {
                    CHECK(built.contains(v) == oracle_in_elimination(x, y, e, v));
                    CHECK(in_elimination_set(x, y, e, v) == oracle_in_elimination(x, y, e, v));
                }
            }
        }
    }
}

TEST_CASE("one-element elimination") {
    auto g = ground({"e"});
    auto x = SignVector::parse(g, "+");
    auto y = SignVector::parse(g, "-");
    CHECK(strings(elimination_set(x, y, 0)) == std::set<std::string>{"0"});
    CHECK(equal_support_set(x, y).empty());
}

TEST_CASE("agreeing vectors partition into the pair, companions, and eliminations") {
    auto g = ground({"a", "b", "c"});
    auto all = all_vectors(g);
    for (const auto& x : all) {
        for (const auto& y : all) {
            if (x.support_mask() != y.support_mask() || x == y)
                continue;
            const std::uint32_t sep = separation_mask(x, y);
            auto b = equal_support_set(x, y);
            auto i = elimination_set(x, y);
            std::size_t agreeing = 0;
            for (const auto& v : all) {
                bool agrees = true;
                for (std::size_t f = 0; f < 3; ++f)
                    if (((sep >> f) & 1u) == 0 && v.at(f) != x.at(f))
                        agrees = false;
                if (!agrees)
                    continue;
                ++agreeing;
                const int buckets = int(v == x || v == y) + int(b.contains(v)) + int(i.contains(v));
                CHECK(buckets == 1);
            }
            std::size_t expected = 1;
            for (std::size_t k = 0; k < positions(sep).size(); ++k)
                expected *= 3;
            CHECK(agreeing == expected);
            CHECK(2 + b.size() + i.size() == agreeing);
        }
    }
}

TEST_CASE("extended elimination handles unequal supports") {
    auto g = ground({"1", "2"});
    auto x = SignVector::parse(g, "+0");
    auto y = SignVector::parse(g, "-+");
    CHECK(strings(extended_elimination_set(x, y, 0)) == std::set<std::string>{"0+"});
    CHECK(strings(extended_elimination_set(x, y)) == std::set<std::string>{"0+"});

    // Empty separation set: empty result, no error.
    CHECK(extended_elimination_set(x, x).empty());
    auto t = SignVector::parse(g, "++");
    CHECK(extended_elimination_set(x, t).empty());
}

TEST_CASE("extended elimination equals plain elimination on equal supports") {
    auto g = ground({"a", "b", "c"});
    auto all = all_vectors(g);
    for (const auto& x : all) {
        for (const auto& y : all) {
            if (x.support_mask() != y.support_mask() || x == y)
                continue;
            CHECK(extended_elimination_set(x, y) == elimination_set(x, y));
            for (std::size_t e : positions(separation_mask(x, y)))
                CHECK(extended_elimination_set(x, y, e) == elimination_set(x, y, e));
        }
    }
}

TEST_CASE("parallel vectors of the parallel demo") {
    auto w = parallel_demo();
    auto p = parallel_vectors(w);
    CHECK(strings(p) == std::set<std::string>{"000", "+00", "-00"});

    // Symmetric and disjoint from the system.
    for (const auto& v : p.members()) {
        CHECK(p.contains(-v));
        CHECK(!w.contains(v));
    }
}

TEST_CASE("stabilizer of the parallel demo splits into sym and parallel parts") {
    auto w = parallel_demo();
    auto n = stabilizer(w);
    CHECK(strings(n) == std::set<std::string>{"+++", "---", "0--", "0++", "+--", "-++",
                                              "000", "+00", "-00"});

    auto s = sym(w);
    auto p = parallel_vectors(w);
    CHECK(n.size() == s.size() + p.size());
    for (const auto& v : s.members())
        CHECK(n.contains(v));
    for (const auto& v : p.members()) {
        CHECK(n.contains(v));
        CHECK(!s.contains(v));
    }
}

TEST_CASE("extended parallel vectors coincide with the stabilizer here") {
    auto w = parallel_demo();
    CHECK(extended_parallel_vectors(w) == stabilizer(w));
}

TEST_CASE("extended parallel vectors of a singleton") {
    auto g = ground({"1", "2"});
    auto w = system_of(g, {"+0"});
    CHECK(strings(extended_parallel_vectors(w)) == std::set<std::string>{"00"});
}

TEST_CASE("stabilizer edge cases") {
    auto g = ground({"a", "b"});
    CHECK(stabilizer(SignSystem(g)).size() == 9);
    auto zero_only = system_of(g, {"00"});
    CHECK(strings(stabilizer(zero_only)) == std::set<std::string>{"00"});
}

TEST_CASE("tope closure") {
    auto g = ground({"e"});
    auto t = system_of(g, {"+", "-"});
    CHECK(strings(tope_closure(t)) == std::set<std::string>{"0", "+", "-"});
    CHECK(tope_closure(SignSystem(g)).size() == 3);
}

TEST_CASE("central extension stacks the three layers") {
    auto w = parallel_demo();
    auto ext = central_extension(w, "g");
    CHECK(ext.system.size() == 2 * 15 + 9);
    CHECK(!ext.parts_overlap);
    CHECK(ext.system.ground()->size() == 4);

    // Members positive at g restrict back to w.
    CHECK(restrict_positive(ext.system, "g") == w);

    CHECK_THROWS_AS(central_extension(w, "a"), input_error);
}

TEST_CASE("central extension of the empty system") {
    auto g = ground({"a"});
    auto ext = central_extension(SignSystem(g), "g");
    CHECK(strings(ext.system) == std::set<std::string>{"00", "+0", "-0"});
}

TEST_CASE("positive restriction down to the empty ground set") {
    auto g = ground({"g"});
    auto s = system_of(g, {"0", "+", "-"});
    auto r = restrict_positive(s, "g");
    CHECK(r.ground()->size() == 0);
    CHECK(r.size() == 1);
    CHECK(r.members()[0].is_zero());
    CHECK_THROWS_AS(restrict_positive(s, "h"), input_error);
}

TEST_CASE("fresh labels avoid collisions") {
    auto g = ground({"g", "g2"});
    CHECK(fresh_label(*g) == "g3");
    CHECK(fresh_label(*ground({"a"})) == "g");
}

TEST_CASE("sum is the least member of the elimination set") {
    auto g = ground({"a", "b", "c"});
    auto all = all_vectors(g);
    for (const auto& x : all) {
        for (const auto& y : all) {
            if (x.support_mask() != y.support_mask() || x == y)
                continue;
            auto i = elimination_set(x, y);
            auto s = x + y;
            CHECK(i.contains(s));
            for (const auto& v : i.members())
                CHECK(conforms(s, v));
        }
    }
}
