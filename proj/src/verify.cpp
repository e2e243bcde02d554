#include "verify.hpp"

#include "axioms.hpp"
#include "fixtures.hpp"

#include <array>
#include <utility>

namespace svcalc {

namespace {

SignSystem over(const std::vector<std::string>& labels, const std::vector<std::string>& rows) {
    auto ground = GroundSet::make(labels);
    std::vector<SignVector> members;
    for (const auto& r : rows)
        members.push_back(SignVector::parse(ground, r));
    return SignSystem::of(ground, std::move(members));
}

SignSystem with_vector(const SignSystem& w, const SignVector& v) {
    std::vector<SignVector> members(w.members().begin(), w.members().end());
    members.push_back(v);
    return SignSystem::of(w.ground(), std::move(members));
}

// Everything the checks ask about one instance, computed once.
struct Analysis {
    const Instance* inst = nullptr;
    bool o3 = false, o4 = false, o4p = false, se = false;
    bool om = false;
    bool aom_axioms = false, aom_dagger = false;
    bool a1p = false, a2p = false, a3p = false;
    SignSystem symw, asymw, p, n, q;
};

Analysis analyze(const Instance& inst) {
    const auto& w = inst.system;
    static constexpr std::array o_axioms{Axiom::O1, Axiom::O2, Axiom::O3,
                                         Axiom::O4, Axiom::O4Prime, Axiom::SE};
    const auto o = check_covector_axioms(w, o_axioms);
    static constexpr std::array a_axioms{Axiom::A1Prime, Axiom::A2Prime, Axiom::A3Prime};
    const auto a = check_affine_axioms(w, a_axioms);
    Analysis out{&inst,
                 o.find(Axiom::O3)->passed,
                 o.find(Axiom::O4)->passed,
                 o.find(Axiom::O4Prime)->passed,
                 o.find(Axiom::SE)->passed,
                 o.find(Axiom::O1)->passed && o.find(Axiom::O2)->passed &&
                     o.find(Axiom::O3)->passed && o.find(Axiom::O4)->passed,
                 check_aom(w, AomStrategy::axioms).is_aom,
                 check_aom(w, AomStrategy::dagger).is_aom,
                 a.find(Axiom::A1Prime)->passed,
                 a.find(Axiom::A2Prime)->passed,
                 a.find(Axiom::A3Prime)->passed,
                 sym(w),
                 asym(w),
                 parallel_vectors(w),
                 stabilizer(w),
                 extended_parallel_vectors(w)};
    return out;
}

void fail(TheoremResult& t, const std::string& instance, const std::string& what) {
    t.passed = false;
    if (t.certificate.empty())
        t.certificate = instance + ": " + what;
}

// First vector in a but not in b, if any.
const SignVector* missing_from(const SignSystem& a, const SignSystem& b) {
    for (const auto& v : a.members())
        if (!b.contains(v))
            return &v;
    return nullptr;
}

void expect_equal(TheoremResult& t, const std::string& instance, const SignSystem& got,
                  const SignSystem& want, const std::string& got_name,
                  const std::string& want_name) {
    if (got == want)
        return;
    if (const auto* v = missing_from(got, want)) {
        fail(t, instance, got_name + " holds " + v->str() + " outside " + want_name);
        return;
    }
    if (const auto* v = missing_from(want, got)) {
        fail(t, instance, want_name + " holds " + v->str() + " outside " + got_name);
        return;
    }
    fail(t, instance, got_name + " and " + want_name + " differ");
}

} // namespace

std::vector<Instance> build_corpus(const CorpusSpec& spec) {
    std::vector<Instance> out;
    for (std::size_t i = 0; i < spec.seed_count; ++i) {
        const auto seed = spec.base_seed + i;
        const auto tag = std::to_string(seed);
        {
            auto arr = random_arrangement(seed, spec.max_n, spec.max_dim,
                                          ArrangementKind::central);
            auto cells = enumerate_covectors(arr);
            if (i < 5) {
                const auto label = arr.ground()->label(0);
                out.push_back({"restriction-s" + tag, "restriction",
                               restrict_positive(cells, label), std::nullopt, cells, label});
            }
            out.push_back({"central-cells-s" + tag, "central-cells", std::move(cells),
                           std::move(arr), std::nullopt, ""});
        }
        {
            auto arr = random_arrangement(seed, spec.max_n, spec.max_dim,
                                          ArrangementKind::affine);
            auto central = embed_affine(arr);
            auto lifted = enumerate_covectors(central);
            out.push_back({"affine-cells-s" + tag, "affine-cells", enumerate_covectors(arr),
                           std::move(arr), std::move(lifted),
                           central.ground()->labels().back()});
        }
    }
    if (spec.include_fixtures) {
        auto demo = fixtures::parallel_demo();
        {
            auto arr = fixtures::parallel_lines();
            auto central = embed_affine(arr);
            out.push_back({"three-line-cells", "fixture", demo, std::move(arr),
                           enumerate_covectors(central), central.ground()->labels().back()});
        }
        {
            auto arr = fixtures::five_lines();
            auto central = embed_affine(arr);
            out.push_back({"five-line-cells", "fixture", enumerate_covectors(arr),
                           std::move(arr), enumerate_covectors(central),
                           central.ground()->labels().back()});
        }
        out.push_back({"crossing-cells", "fixture", fixtures::crossing_pair(),
                       fixtures::crossing_lines(), std::nullopt, ""});
        out.push_back({"lifted-three-line-cells", "fixture",
                       central_extension(demo, fresh_label(*demo.ground())).system,
                       std::nullopt, std::nullopt, ""});
        out.push_back({"zero-only", "fixture", over({"e"}, {"0"}), std::nullopt,
                       std::nullopt, ""});
        out.push_back({"no-vectors", "fixture", over({"e"}, {}), std::nullopt,
                       std::nullopt, ""});
        out.push_back({"opposite-pair", "fixture", over({"e"}, {"+", "-"}), std::nullopt,
                       std::nullopt, ""});
        out.push_back({"elimination-pair", "fixture",
                       over({"e1", "e2", "e3", "e4"}, {"+-+0", "-++0"}), std::nullopt,
                       std::nullopt, ""});
        out.push_back({"three-line-missing-vector", "mutant",
                       demo.without(SignVector::parse(demo.ground(), "0+0")), std::nullopt,
                       std::nullopt, ""});
        out.push_back({"three-line-plus-origin", "mutant",
                       with_vector(demo, SignVector::zero(demo.ground())), std::nullopt,
                       std::nullopt, ""});
        auto crossing = fixtures::crossing_pair();
        out.push_back({"crossing-missing-origin", "mutant",
                       crossing.without(SignVector::zero(crossing.ground())), std::nullopt,
                       std::nullopt, ""});
    }
    for (const auto& extra : spec.extras)
        out.push_back(extra);
    return out;
}

SuiteResult run_suite(const CorpusSpec& spec) {
    const auto corpus = build_corpus(spec);
    std::vector<Analysis> xs;
    xs.reserve(corpus.size());
    for (const auto& inst : corpus)
        xs.push_back(analyze(inst));

    SuiteResult r;
    for (const auto& a : xs)
        r.instances.push_back({a.inst->name, a.inst->origin, a.inst->system.ground()->size(),
                               a.inst->system.size(), a.om, a.aom_axioms});

    r.theorems.reserve(13); // references below must survive the emplacements
    const auto add = [&r](std::string name, std::string claim) -> TheoremResult& {
        auto& t = r.theorems.emplace_back();
        t.name = std::move(name);
        t.claim = std::move(claim);
        return t;
    };
    auto& topes_support = add("tope-common-support",
                              "every tope of a covector system carries the same support");
    auto& topes_rebuild = add(
        "tope-reconstruction",
        "a covector system is recovered from its topes by composition closure");
    auto& o4_variants = add(
        "o4-variants-equivalence",
        "under composition closure, per-coordinate and union elimination agree");
    auto& stab_zero = add(
        "stabilizer-matches-zero-covectors",
        "the stabilizer equals the source covectors vanishing at the fixed coordinate");
    auto& boundary = add(
        "boundary-set-exclusion",
        "a pair whose elimination set misses the system has no equal-support companions in it");
    auto& stab_split = add(
        "stabilizer-decomposition",
        "the stabilizer splits into the symmetric part and the parallel vectors");
    auto& conformity = add(
        "parallel-conformity",
        "members supported inside a parallel summand copy its signs off the parallel support");
    auto& agreement = add("axioms-vs-lift-agreement",
                          "the affine axioms and the lifted covector test give the same verdict");
    auto& se_equiv = add(
        "strong-elimination-equivalence",
        "under composition closure, strong elimination and pairwise elimination agree");
    auto& p_in_q = add("parallel-subset-extended",
                       "every parallel vector is an extended parallel vector");
    auto& q_is_n = add("extended-equals-stabilizer",
                       "for affine systems the extended parallel vectors are exactly the stabilizer");
    auto& relaxed = add("relaxed-axioms-agreement",
                        "the relaxed axiom set accepts exactly the affine systems");
    auto& regions = add("region-count-agreement",
                        "the planar region formula matches the count of full-support cells");

    for (const auto& a : xs) {
        const auto& w = a.inst->system;
        const auto& name = a.inst->name;

        if (a.om) {
            ++topes_support.applicable;
            const auto ts = topes(w);
            std::uint32_t everything = 0;
            for (const auto& v : w.members())
                everything |= v.support_mask();
            for (const auto& t : ts.members())
                if (t.support_mask() != everything)
                    fail(topes_support, name,
                         "tope " + t.str() + " misses part of the joint support");

            ++topes_rebuild.applicable;
            expect_equal(topes_rebuild, name, tope_closure(ts), w, "the tope closure",
                         "the system");
        }

        if (a.o3) {
            ++o4_variants.applicable;
            if (a.o4 != a.o4p)
                fail(o4_variants, name, "per-coordinate and union elimination disagree");
            ++se_equiv.applicable;
            if (a.o4 != a.se)
                fail(se_equiv, name, "strong and pairwise elimination disagree");
        }

        if (a.inst->source_covectors) {
            ++stab_zero.applicable;
            const auto& src = *a.inst->source_covectors;
            const auto gpos = src.ground()->index_of(a.inst->source_label);
            std::vector<SignVector> zeros;
            for (const auto& z : src.members())
                if (gpos && z.at(*gpos) == Sign::zero)
                    zeros.push_back(drop(z, a.inst->source_label));
            expect_equal(stab_zero, name, SignSystem::of(w.ground(), std::move(zeros)), a.n,
                         "the zero slice", "the stabilizer");
        }

        if (a.aom_axioms) {
            ++boundary.applicable;
            for (const auto& x : w.members()) {
                for (const auto& y : w.members()) {
                    if (x.support_mask() != y.support_mask())
                        continue;
                    if (x.plus_mask() == y.minus_mask() && x.minus_mask() == y.plus_mask())
                        continue; // x is -y: not an elimination pair
                    const auto oy = -y;
                    if (elimination_meets(w, x, oy))
                        continue;
                    for (const auto& z : w.members())
                        if (in_equal_support_set(x, oy, z))
                            fail(boundary, name,
                                 "companion " + z.str() + " of (" + x.str() + ", " +
                                     oy.str() + ") lies in the system");
                }
            }

            // The empty system stabilizes everything while sym and the parallel
            // vectors stay empty, so the decompositions need at least one member.
            if (!w.empty()) {
                ++stab_split.applicable;
                for (const auto& v : a.p.members())
                    if (a.symw.contains(v))
                        fail(stab_split, name,
                             "parallel vector " + v.str() + " is also symmetric");
                std::vector<SignVector> both(a.symw.members().begin(), a.symw.members().end());
                both.insert(both.end(), a.p.members().begin(), a.p.members().end());
                expect_equal(stab_split, name, SignSystem::of(w.ground(), std::move(both)),
                             a.n, "sym plus parallel", "the stabilizer");
            }

            ++conformity.applicable;
            for (const auto& u : a.asymw.members()) {
                for (const auto& uprime : a.asymw.members()) {
                    if (u.support_mask() != uprime.support_mask())
                        continue;
                    if (elimination_meets(w, u, -uprime) || elimination_meets(w, -u, uprime))
                        continue;
                    const auto pvec = u + (-uprime);
                    const std::uint32_t off = u.support_mask() & ~pvec.support_mask();
                    for (const auto& z : w.members()) {
                        if ((z.support_mask() & ~u.support_mask()) != 0)
                            continue;
                        if ((z.plus_mask() & off) != (u.plus_mask() & off) ||
                            (z.minus_mask() & off) != (u.minus_mask() & off))
                            fail(conformity, name,
                                 z.str() + " deviates from summand " + u.str() +
                                     " off the parallel vector " + pvec.str());
                        if (w.contains_masks(z.minus_mask(), z.plus_mask()))
                            fail(conformity, name,
                                 z.str() + " under summand " + u.str() +
                                     " is symmetric in the system");
                    }
                }
            }

            if (!w.empty()) {
                ++q_is_n.applicable;
                expect_equal(q_is_n, name, a.q, a.n, "the extended parallel vectors",
                             "the stabilizer");
            }
        }

        ++agreement.applicable;
        if (a.aom_axioms != a.aom_dagger)
            fail(agreement, name,
                 std::string("axiom check says ") + (a.aom_axioms ? "yes" : "no") +
                     ", lifted check says " + (a.aom_dagger ? "yes" : "no"));

        ++p_in_q.applicable;
        for (const auto& v : a.p.members())
            if (!a.q.contains(v))
                fail(p_in_q, name, v.str() + " is parallel but not extended parallel");

        ++relaxed.applicable;
        if ((a.a1p && a.a2p && a.a3p) != a.aom_axioms)
            fail(relaxed, name,
                 std::string("relaxed axioms say ") +
                     (a.a1p && a.a2p && a.a3p ? "yes" : "no") + ", the affine axioms say " +
                     (a.aom_axioms ? "yes" : "no"));

        if (a.inst->arrangement && a.inst->arrangement->kind() == ArrangementKind::affine &&
            a.inst->arrangement->dim() == 2) {
            try {
                const auto count = planar_region_count(*a.inst->arrangement);
                ++regions.applicable;
                std::size_t full = 0;
                for (const auto& v : w.members())
                    if (v.support_mask() == w.ground()->full_mask())
                        ++full;
                if (count != full)
                    fail(regions, name,
                         "formula says " + std::to_string(count) + " regions, cells say " +
                             std::to_string(full));
            } catch (const input_error&) {
                // coincident lines: the formula does not apply here
            }
        }
    }

    for (const auto& t : r.theorems)
        r.all_passed = r.all_passed && t.passed;
    return r;
}

} // namespace svcalc
