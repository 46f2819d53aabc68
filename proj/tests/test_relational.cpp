#include "doctest.h"

#include <random>

#include "kawt/parser.hpp"
#include "kawt/relational.hpp"
#include "support/oracles.hpp"

using namespace kawt;

namespace {

WeightedRelation trop_mat(std::initializer_list<std::initializer_list<long long>> rows) {
    const Semiring& s = tropical_semiring();
    int n = int(rows.size());
    WeightedRelation m(s, n);
    int i = 0;
    for (auto& row : rows) {
        int j = 0;
        for (long long w : row) {
            m.set(i, j, Value(s, w < 0 ? ExtNat::infinity() : ExtNat::finite(std::uint64_t(w))));
            ++j;
        }
        ++i;
    }
    return m;
}

WeightedRelation random_tropical(std::mt19937_64& rng, int n) {
    const Semiring& s = tropical_semiring();
    WeightedRelation m(s, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::uint64_t k = rng() % 12;
            m.set(i, j, Value(s, k >= 10 ? ExtNat::infinity() : ExtNat::finite(k)));
        }
    return m;
}

WeightedRelation random_boolean(std::mt19937_64& rng, int n) {
    const Semiring& s = boolean_semiring();
    WeightedRelation m(s, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.set(i, j, Value(s, (rng() & 1u) == 1u));
    return m;
}

} // namespace

TEST_CASE("matrix operations, frozen examples") {
    // -1 encodes infinity
    WeightedRelation a = trop_mat({{-1, 3}, {-1, -1}});
    WeightedRelation b = trop_mat({{-1, -1}, {-1, 4}});
    CHECK(rel_mul(a, b) == trop_mat({{-1, 7}, {-1, -1}}));
    CHECK(rel_add(a, b) == trop_mat({{-1, 3}, {-1, 4}}));
    CHECK(rel_star(a) == trop_mat({{0, 3}, {-1, 0}}));

    WeightedRelation one = rel_one(tropical_semiring(), 2);
    CHECK(one == trop_mat({{0, -1}, {-1, 0}}));
    CHECK(rel_mul(a, one) == a);
    CHECK(rel_zero(tropical_semiring(), 2) == trop_mat({{-1, -1}, {-1, -1}}));

    CHECK(rel_le(a, rel_star(a)));
    CHECK(!rel_le(rel_star(a), a));
}

TEST_CASE("tests and weights as matrices") {
    const Semiring& s = tropical_semiring();
    WeightedRelation t(s, 2);
    t.set(0, 0, s.one()); // diag(0, inf): the test "state 0"
    CHECK(is_test(t));
    CHECK(is_test(rel_one(s, 2)));
    CHECK(is_test(rel_zero(s, 2)));
    CHECK(!is_test(trop_mat({{0, -1}, {-1, 5}}))); // 5 is not two-valued
    CHECK(!is_test(trop_mat({{0, 1}, {-1, 0}})));  // off-diagonal entry

    CHECK(rel_neg(t) == trop_mat({{-1, -1}, {-1, 0}}));
    CHECK(rel_neg(rel_neg(t)) == t);
    CHECK_THROWS_AS(rel_neg(trop_mat({{0, 3}, {-1, 0}})), SortError);

    CHECK(is_weight(trop_mat({{7, -1}, {-1, 7}})));
    CHECK(!is_weight(trop_mat({{7, -1}, {-1, 3}}))); // not constant
    CHECK(!is_weight(trop_mat({{7, 1}, {-1, 7}})));  // off-diagonal entry
}

TEST_CASE("star hits its cap only when told to") {
    // a three-step chain needs three improvements before the fixpoint
    WeightedRelation a = trop_mat({{-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}});
    CHECK_THROWS_AS(rel_star(a, 1), StarDivergence);
    CHECK(rel_star(a, 3) == rel_star(a));
    CHECK(rel_star(a).at(0, 2) == Value(tropical_semiring(), ExtNat::finite(2)));
}

TEST_CASE("format_relation aligns columns") {
    CHECK(format_relation(trop_mat({{-1, 3}, {-1, -1}})) == "inf    3\ninf  inf\n");
    CHECK(format_relation(rel_one(boolean_semiring(), 2)) == "1  0\n0  1\n");
}

TEST_CASE("star agrees with the closure oracles") {
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 60; ++i) {
        WeightedRelation t = random_tropical(rng, 4);
        CHECK(rel_star(t) == oracle::minplus_closure(t));
        WeightedRelation b = random_boolean(rng, 4);
        CHECK(rel_star(b) == oracle::warshall_closure(b));
    }
}

TEST_CASE("interpretation over the ski chain") {
    Signature sig = ski_signature();
    TransitionSystem m(sig, tropical_semiring(), {"s0", "s1", "s2", "s3"});
    for (int i = 1; i <= 3; ++i) m.add_edge(0, i, i - 1); // sub1
    for (int i = 0; i <= 3; ++i) m.add_edge(1, i, 0);     // end
    for (int i = 1; i <= 3; ++i) m.set_bool(0, i, true);  // neq0
    m.set_weight(0, Value(tropical_semiring(), ExtNat::finite(1)));
    m.set_weight(1, Value(tropical_semiring(), ExtNat::finite(5)));

    SkiPrograms ski = build_ski_programs(3);
    WeightedRelation r = interpret(*ski.loop, m);
    CHECK(r.at(3, 0) == Value(tropical_semiring(), ExtNat::finite(3)));
    CHECK(r.at(1, 0) == Value(tropical_semiring(), ExtNat::finite(1)));
    CHECK(r.at(0, 0) == tropical_semiring().one());
    // a state with the guard still true is not a stopping state
    CHECK(r.at(3, 1) == tropical_semiring().zero());

    // denesting holds relationally as well
    CHECK(interpret(*ski.denested, m) == r);

    CHECK(interpret(*parse_program("1", sig), m) == rel_one(tropical_semiring(), 4));
    CHECK(interpret(*parse_program("0", sig), m) == rel_zero(tropical_semiring(), 4));
    CHECK(interpret(*parse_program("@(one skis)", sig), m) ==
          rel_mul(interpret(*parse_program("@one", sig), m),
                  interpret(*parse_program("@skis", sig), m)));
}

TEST_CASE("boolean and weight evaluation in a model") {
    Signature sig({"p"}, {"a", "b"}, {"f"});
    TransitionSystem m(sig, tropical_semiring(), {"x", "y"});
    m.set_bool(0, 0, true);  // a = {x}
    m.set_bool(1, 1, true);  // b = {y}
    m.set_weight(0, Value(tropical_semiring(), ExtNat::finite(2)));

    auto holds = eval_bool_states(*bool_or(bool_var(0), bool_var(1)), m);
    CHECK(holds == std::vector<char>{1, 1});
    holds = eval_bool_states(*bool_and(bool_var(0), bool_not(bool_var(0))), m);
    CHECK(holds == std::vector<char>{0, 0});

    CHECK(eval_weight_value(*weight_mul(weight_var(0), weight_var(0)), m) ==
          Value(tropical_semiring(), ExtNat::finite(4)));
    CHECK(eval_weight_value(*weight_add(weight_var(0), weight_one()), m) ==
          tropical_semiring().one());
}

TEST_CASE("interpretation matches the classical interpreter on crisp programs") {
    // all 64 two-state Boolean systems over one program and one Boolean variable
    Signature sig({"p"}, {"a"}, {});
    std::vector<ProgPtr> progs = oracle::enumerate_programs(sig, 4);
    const Semiring& s = boolean_semiring();
    for (int edges = 0; edges < 16; ++edges)
        for (int aset = 0; aset < 4; ++aset) {
            TransitionSystem m(sig, s, {"x", "y"});
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    if ((edges >> (2 * i + j)) & 1) m.add_edge(0, i, j);
            for (int i = 0; i < 2; ++i)
                if ((aset >> i) & 1) m.set_bool(0, i, true);

            for (const ProgPtr& p : progs) {
                WeightedRelation r = interpret(*p, m);
                std::vector<char> c = oracle::classical_interpret(*p, m);
                bool same = true;
                for (int i = 0; i < 2 && same; ++i)
                    for (int j = 0; j < 2; ++j)
                        if (r.at(i, j).as_bool() != bool(c[std::size_t(i) * 2 + j])) {
                            same = false;
                            break;
                        }
                if (!same) {
                    CAPTURE(pretty_print(p, sig));
                    CHECK(same);
                }
            }
        }
}

TEST_CASE("lifted law suite") {
    for (int n : {1, 2, 3}) {
        for (const Semiring* s :
             {&boolean_semiring(), &tropical_semiring(), &lukasiewicz_semiring()}) {
            AxiomReport r = check_lifted_laws(*s, n, 500, 7);
            INFO(r.text());
            CHECK(r.pass());
        }
    }
}

TEST_CASE("lifted suite flags the defective semiring") {
    AxiomReport r = check_lifted_laws(broken_tropical_semiring(), 2, 500, 7);
    CHECK(!r.pass());
    INFO(r.violations.front());
    CHECK(r.violations.size() >= 1);
}
