#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "kawt/equivalence.hpp"

using namespace kawt;

namespace {

// ski signature indices, resolved once
struct Ski {
    Signature sig = ski_signature();
    int sub1 = sig.lookup("sub1")->second;
    int endp = sig.lookup("end")->second;
    int neq0 = sig.lookup("neq0")->second;
    int one = sig.lookup("one")->second;
    int skis = sig.lookup("skis")->second;
};

const Ski& ski() {
    static Ski s;
    return s;
}

constexpr Atom POS = 1, NEG = 0; // {neq0}, {!neq0}

GuardedString gs(std::vector<Atom> atoms, std::vector<int> progs) {
    GuardedString s;
    s.atoms = std::move(atoms);
    s.progs = std::move(progs);
    return s;
}

// sub1^n {neq0}, right-nested the way a while-loop hypothesis reads
ProgPtr sub1_pow_then_neq0(int n) {
    ProgPtr p = prog_test(bool_var(ski().neq0));
    for (int i = 0; i < n; ++i) p = prog_seq(prog_atomic(ski().sub1), std::move(p));
    return p;
}

ProgPtr end_then_neq0() {
    return prog_seq(prog_atomic(ski().endp), prog_test(bool_var(ski().neq0)));
}

std::string thrown_message(const std::function<void()>& f) {
    try {
        f();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("zero hypotheses reject weightings") {
    CHECK(thrown_message([] { make_zero_hypothesis(nullptr); }).find("no left side") !=
          std::string::npos);

    // a weighting anywhere in the term disqualifies it
    CHECK_THROWS_AS(make_zero_hypothesis(prog_weight(weight_var(ski().one))), SortError);
    CHECK_THROWS_AS(make_zero_hypothesis(prog_seq(
                        prog_atomic(ski().sub1),
                        prog_star(prog_weight(weight_one())))),
                    SortError);
    CHECK(thrown_message([] {
              make_zero_hypothesis(prog_plus(prog_test(bool_one()),
                                             prog_weight(weight_zero())));
          }).find("weighting-free") != std::string::npos);

    Hypothesis h = make_zero_hypothesis(sub1_pow_then_neq0(2));
    REQUIRE(h.lhs != nullptr);
    CHECK(count_program_symbols(h.lhs) == 2);
}

TEST_CASE("verdict text") {
    EquivVerdict v;
    v.method = "bounded-language";
    v.bound = 6;
    CHECK(v.text() == "method: bounded-language (bound 6)\nverdict: EQUAL\n");

    v.equal = false;
    v.detail = "differing trace: x";
    CHECK(v.text() ==
          "method: bounded-language (bound 6)\nverdict: NOT EQUAL\ndiffering trace: x\n");
}

TEST_CASE("denesting the loop preserves the bounded language") {
    SkiPrograms progs = build_ski_programs(2);
    CanonicalValuation v = canonical_valuation(ski().sig, {1, 5});

    for (int bound : {2, 3, 5, 8, 12}) {
        EquivVerdict verdict = bounded_equiv(*progs.loop, *progs.denested, v, bound);
        CHECK(verdict.equal);
        CHECK(verdict.bound == bound);
        CHECK(!verdict.witness.has_value());
    }
    CHECK(bounded_equiv(*progs.loop, *progs.denested, v, 8).text() ==
          "method: bounded-language (bound 8)\nverdict: EQUAL\n");

    // reflexivity on a starred program
    CHECK(bounded_equiv(*progs.loop, *progs.loop, v, 9).equal);
}

TEST_CASE("the finite unrolling differs from the loop on free traces") {
    SkiPrograms progs = build_ski_programs(2);
    CanonicalValuation v = canonical_valuation(ski().sig, {1, 7});

    EquivVerdict verdict = bounded_equiv(*progs.denested, *progs.unrolled, v, 8);
    REQUIRE(!verdict.equal);
    REQUIRE(verdict.witness.has_value());
    CHECK(verdict.detail.find("differing trace: ") == 0);
    CHECK(verdict.detail.find("left weight:") != std::string::npos);
    CHECK(verdict.detail.find("right weight:") != std::string::npos);

    // the witness really distinguishes the two bounded languages
    GuardedLanguage a = gt_interpret(*progs.denested, v, 8);
    GuardedLanguage b = gt_interpret(*progs.unrolled, v, 8);
    auto ia = a.find(*verdict.witness);
    auto ib = b.find(*verdict.witness);
    bool differ = (ia == a.end()) != (ib == b.end()) ||
                  (ia != a.end() && ib != b.end() && ia->second != ib->second);
    CHECK(differ);
    CHECK(verdict.left_weight.has_value() == (ia != a.end()));
    CHECK(verdict.right_weight.has_value() == (ib != b.end()));

    // three straight rent days exceed the depth-2 unrolling
    GuardedString rent3 = gs({POS, POS, POS, NEG}, {ski().sub1, ski().sub1, ski().sub1});
    REQUIRE(a.count(rent3) == 1);
    CHECK(a.at(rent3) == 3);
    CHECK(b.count(rent3) == 0);

    // once distinguished, larger bounds cannot reconcile them
    for (int bound : {9, 10})
        CHECK(!bounded_equiv(*progs.denested, *progs.unrolled, v, bound).equal);

    // and the verdict is direction-independent
    CHECK(!bounded_equiv(*progs.unrolled, *progs.denested, v, 8).equal);
}

TEST_CASE("hypothesis factors") {
    CanonicalValuation v = canonical_valuation(ski().sig, {1, 5});
    std::vector<Hypothesis> hyps;
    hyps.push_back(make_zero_hypothesis(sub1_pow_then_neq0(2)));
    hyps.push_back(make_zero_hypothesis(end_then_neq0()));

    std::set<GuardedString> factors = hypothesis_factors(hyps, v, 6);
    // A sub1 B sub1 {neq0} over free A, B plus A end {neq0}
    CHECK(factors.size() == 6);
    CHECK(factors.count(gs({NEG, NEG, POS}, {ski().sub1, ski().sub1})) == 1);
    CHECK(factors.count(gs({POS, POS, POS}, {ski().sub1, ski().sub1})) == 1);
    CHECK(factors.count(gs({NEG, POS}, {ski().endp})) == 1);
    CHECK(factors.count(gs({POS, POS}, {ski().endp})) == 1);

    // a weighting smuggled past the validator is caught by crispness
    Hypothesis smuggled{prog_weight(weight_var(ski().one))};
    CHECK(thrown_message([&] { hypothesis_factors({smuggled}, v, 4); })
              .find("not crisp") != std::string::npos);
}

TEST_CASE("factor deletion") {
    SkiPrograms progs = build_ski_programs(1);
    CanonicalValuation v = canonical_valuation(ski().sig, {1, 5});
    GuardedLanguage x = gt_interpret(*progs.unrolled, v, 6);
    REQUIRE(x.size() > 1);

    // the empty factor set deletes nothing
    CHECK(filter_by_factors(x, {}) == x);

    // a bare atom factor erases every trace that visits it
    std::set<GuardedString> pos_anywhere{atom_string(POS)};
    GuardedLanguage filtered = filter_by_factors(x, pos_anywhere);
    CHECK(filtered == GuardedLanguage{{atom_string(NEG), 0}});

    // deletion is idempotent
    std::set<GuardedString> factors{gs({POS, POS}, {ski().sub1})};
    GuardedLanguage once = filter_by_factors(x, factors);
    CHECK(filter_by_factors(once, factors) == once);
    CHECK(once.size() < x.size());

    // interior occurrences count too
    GuardedLanguage y{{gs({NEG, POS, POS, NEG}, {ski().endp, ski().sub1, ski().sub1}), 4}};
    CHECK(filter_by_factors(y, factors).empty());
    CHECK(filter_by_factors(y, {gs({POS, NEG}, {ski().endp})}) == y);
}

TEST_CASE("counter hypotheses make the unrolling exact") {
    for (int n = 0; n <= 4; ++n) {
        CAPTURE(n);
        SkiPrograms progs = build_ski_programs(n);
        CanonicalValuation v = canonical_valuation(ski().sig, {1, 5});
        int bound = 2 * n + 4;

        std::vector<Hypothesis> hyps;
        hyps.push_back(make_zero_hypothesis(sub1_pow_then_neq0(n)));
        hyps.push_back(make_zero_hypothesis(end_then_neq0()));

        EquivVerdict with = equiv_under_zero_hypotheses(*progs.denested, *progs.unrolled,
                                                        hyps, v, bound);
        CHECK(with.equal);
        CHECK(with.method == "bounded-language under 2 hypotheses");

        EquivVerdict without = equiv_under_zero_hypotheses(*progs.denested,
                                                           *progs.unrolled, {}, v, bound);
        CHECK(without.method == "bounded-language under 0 hypotheses");
        if (n >= 1) {
            CHECK(!without.equal);
            CHECK(without.witness.has_value());
        }
    }

    // the while form needs no denesting first
    SkiPrograms progs = build_ski_programs(2);
    CanonicalValuation v = canonical_valuation(ski().sig, {1, 5});
    std::vector<Hypothesis> hyps;
    hyps.push_back(make_zero_hypothesis(sub1_pow_then_neq0(2)));
    hyps.push_back(make_zero_hypothesis(end_then_neq0()));
    CHECK(equiv_under_zero_hypotheses(*progs.loop, *progs.unrolled, hyps, v, 8).equal);
}

TEST_CASE("model families") {
    SkiPrograms progs = build_ski_programs(3);
    std::vector<TransitionSystem> models;
    models.push_back(build_ski_chain(1, 1));
    models.push_back(build_ski_chain(2, 5));
    models.push_back(build_ski_chain(4, 2));

    EquivVerdict v = model_equiv(*progs.loop, *progs.denested, {}, models);
    CHECK(v.equal);
    CHECK(v.method == "model-family");

    // an honest difference names the model and entry
    ProgPtr p = prog_test(bool_var(ski().neq0));
    ProgPtr q = prog_test(bool_not(bool_var(ski().neq0)));
    std::vector<TransitionSystem> one_model;
    one_model.push_back(build_ski_chain(2, 5));
    EquivVerdict diff = model_equiv(*p, *q, {}, one_model);
    REQUIRE(!diff.equal);
    CHECK(diff.detail == "model 0, entry (s0, s0): left inf, right 0");

    // hypotheses are checked on every model before comparing
    std::vector<Hypothesis> bad;
    bad.push_back(make_zero_hypothesis(prog_test(bool_var(ski().neq0))));
    CHECK(thrown_message([&] { model_equiv(*p, *p, bad, one_model); }) ==
          "model 0 violates hypothesis {neq0} = 0");

    // a hypothesis the chain really satisfies passes through
    std::vector<Hypothesis> good;
    good.push_back(make_zero_hypothesis(sub1_pow_then_neq0(2)));
    good.push_back(make_zero_hypothesis(end_then_neq0()));
    CHECK(model_equiv(*progs.loop, *progs.denested, good, one_model).equal);

    // no models, no disagreement
    CHECK(model_equiv(*p, *q, {}, {}).equal);
}

TEST_CASE("chain model wiring") {
    TransitionSystem chain = build_ski_chain(3, 5);
    REQUIRE(chain.states() == 4);
    CHECK(chain.state_names() == std::vector<std::string>{"s0", "s1", "s2", "s3"});
    const Semiring& ring = chain.ring();

    WeightedRelation sub1 = interpret(*prog_atomic(ski().sub1), chain);
    for (int i = 1; i <= 3; ++i) CHECK(sub1.at(i, i - 1) == ring.one());
    CHECK(sub1.at(0, 0) == ring.zero());
    CHECK(sub1.at(1, 2) == ring.zero());

    WeightedRelation endp = interpret(*prog_atomic(ski().endp), chain);
    for (int i = 0; i <= 3; ++i) CHECK(endp.at(i, 0) == ring.one());
    CHECK(endp.at(1, 1) == ring.zero());

    WeightedRelation neq0 = interpret(*prog_test(bool_var(ski().neq0)), chain);
    CHECK(neq0.at(0, 0) == ring.zero());
    for (int i = 1; i <= 3; ++i) CHECK(neq0.at(i, i) == ring.one());

    CHECK(interpret(*prog_weight(weight_var(ski().one)), chain).at(2, 2).as_extnat() ==
          ExtNat::finite(1));
    CHECK(interpret(*prog_weight(weight_var(ski().skis)), chain).at(0, 0).as_extnat() ==
          ExtNat::finite(5));
}

TEST_CASE("counter-consistent restriction") {
    const Signature& sig = ski().sig;
    auto keep = [&](const GuardedString& s, int n) {
        GuardedLanguage x{{s, 1}};
        return ski_consistent_restriction(x, sig, n).size() == 1;
    };

    // a halted start is consistent for every n, an active one needs n > 0
    CHECK(keep(atom_string(NEG), 0));
    CHECK(keep(atom_string(NEG), 3));
    CHECK(!keep(atom_string(POS), 0));

    // rent-down traces must hit zero exactly when the guard flips
    GuardedString rent1 = gs({POS, NEG}, {ski().sub1});
    CHECK(keep(rent1, 1));
    CHECK(!keep(rent1, 2)); // one step from 2 leaves the counter positive
    CHECK(!keep(gs({POS, POS}, {ski().sub1}), 1));

    // sub1 needs a positive counter
    CHECK(!keep(gs({POS, NEG, NEG}, {ski().sub1, ski().sub1}), 1));

    // end zeroes the counter no matter where it stood
    GuardedString buy = gs({POS, POS, NEG}, {ski().sub1, ski().endp});
    CHECK(keep(buy, 2));
    CHECK(!keep(gs({POS, POS, POS}, {ski().sub1, ski().endp}), 2));
    CHECK(!keep(gs({POS, NEG, NEG}, {ski().sub1, ski().endp}), 2));

    // weights ride along unchanged
    GuardedLanguage x{{rent1, 9}, {gs({POS, POS}, {ski().sub1}), 4}};
    GuardedLanguage r = ski_consistent_restriction(x, sig, 1);
    CHECK(r == GuardedLanguage{{rent1, 9}});

    Signature other({"p"}, {"a"}, {"f"});
    CHECK_THROWS_AS(ski_consistent_restriction({}, other, 1), SortError);
}

TEST_CASE("ski case study grid") {
    for (int n = 0; n <= 5; ++n) {
        for (std::uint64_t y : {0, 1, 2, 3, 5, 8}) {
            CAPTURE(n);
            CAPTURE(y);
            SkiReport rep = ski_case_study(n, std::uint64_t(y));
            std::uint64_t expect = std::min<std::uint64_t>(std::uint64_t(n), y);
            CHECK(rep.theta_scenario == ExtNat::finite(expect));
            CHECK(rep.relational_entry == ExtNat::finite(expect));
            CHECK(rep.theta_from_not_neq0 == ExtNat::finite(0));
            CHECK(rep.hypotheses_hold);
            CHECK(rep.bound == 2 * n + 4);
            CHECK(rep.start_is_neq0 == (n > 0));
        }
    }

    // the unrestricted language can exit after a single free day, so its
    // optimum ignores n; the restriction is what recovers min(n, y)
    CHECK(ski_case_study(3, 5).raw_theta_from_neq0 == ExtNat::finite(1));
    CHECK(ski_case_study(3, 0).raw_theta_from_neq0 == ExtNat::finite(0));
    CHECK(ski_case_study(0, 4).raw_theta_from_neq0 == ExtNat::finite(4));
    CHECK(ski_case_study(3, 5).raw_theta_from_not_neq0 == ExtNat::finite(0));
}

TEST_CASE("ski report text") {
    CHECK(ski_case_study(3, 5).text() ==
          "ski rental: n=3, y=5, length bound 10\n"
          "start atom: {neq0}\n"
          "optimal weight from start (consistent traces): 3\n"
          "optimal weight from {!neq0}: 0\n"
          "raw optimal from {neq0} (unrestricted language): 1\n"
          "raw optimal from {!neq0} (unrestricted language): 0\n"
          "chain entry (s3 -> s0) of the loop program: 3\n"
          "hypotheses hold in the chain model: yes\n");

    CHECK(ski_case_study(0, 2).text().find("start atom: {!neq0}") != std::string::npos);
}
