#include "doctest.h"

#include <random>

#include "kawt/parser.hpp"
#include "support/gen.hpp"

using namespace kawt;

static const Signature& sig() {
    static Signature s = ski_signature();
    return s;
}

TEST_CASE("primary forms") {
    CHECK(*parse_program("sub1", sig()) == *prog_atomic(0));
    CHECK(*parse_program("{neq0}", sig()) == *prog_test(bool_var(0)));
    CHECK(*parse_program("@skis", sig()) == *prog_weight(weight_var(1)));
    CHECK(*parse_program("0", sig()) == *prog_abort());
    CHECK(*parse_program("1", sig()) == *prog_skip());
    CHECK(*parse_program("@(one + skis)", sig()) ==
          *prog_weight(weight_add(weight_var(0), weight_var(1))));
}

TEST_CASE("precedence and grouping") {
    // star > juxtaposition > plus
    CHECK(*parse_program("sub1 end* + end", sig()) ==
          *prog_plus(prog_seq(prog_atomic(0), prog_star(prog_atomic(1))), prog_atomic(1)));
    CHECK(*parse_program("(sub1 end)*", sig()) ==
          *prog_star(prog_seq(prog_atomic(0), prog_atomic(1))));
    // sequencing is left-associative, ';' is the same operator
    CHECK(*parse_program("sub1 end sub1", sig()) ==
          *prog_seq(prog_seq(prog_atomic(0), prog_atomic(1)), prog_atomic(0)));
    CHECK(*parse_program("sub1; end; sub1", sig()) == *parse_program("sub1 end sub1", sig()));
    // double star parses
    CHECK(*parse_program("sub1**", sig()) == *prog_star(prog_star(prog_atomic(0))));
}

TEST_CASE("boolean grammar inside braces") {
    CHECK(*parse_program("{!neq0}", sig()) == *prog_test(bool_not(bool_var(0))));
    CHECK(*parse_program("{neq0 | 1 & !neq0}", sig()) ==
          *prog_test(bool_or(bool_var(0), bool_and(bool_one(), bool_not(bool_var(0))))));
    CHECK(*parse_program("{!(neq0 | 0)}", sig()) ==
          *prog_test(bool_not(bool_or(bool_var(0), bool_zero()))));
}

TEST_CASE("structural parse of the loop program") {
    ProgPtr loop = build_ski_programs(0).loop;
    CHECK(*parse_program("({neq0} (sub1 (@one + @skis end)))* {!neq0}", sig()) == *loop);
    // comments and newlines are whitespace
    CHECK(*parse_program("# ski loop\n({neq0} (sub1 (@one + @skis end)))*\n  {!neq0} # done\n",
                         sig()) == *loop);
}

TEST_CASE("diagnostics carry positions and sorts") {
    auto expect_fail = [&](std::string_view src, std::string_view needle) {
        try {
            parse_program(src, sig());
            FAIL_CHECK("no error for: " << src);
        } catch (const ParseError& e) {
            INFO(e.what());
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
            CHECK(e.line >= 1);
            CHECK(e.col >= 1);
        }
    };
    expect_fail("", "expected a program term");
    expect_fail("sub1 +", "expected");
    expect_fail("(sub1", ")");
    expect_fail("mystery", "undeclared");
    expect_fail("neq0", "braces");          // test used in program position
    expect_fail("one", "@");                // weighting used in program position
    expect_fail("!@one", "sort clash");     // negation outside braces
    expect_fail("{sub1}", "sort");          // program inside braces
    expect_fail("@neq0", "sort");           // test after the weighting sigil
    expect_fail("{neq0", "}");
    expect_fail("2", "numeric literal");
    expect_fail("sub1 ) end", "trailing");
}

TEST_CASE("atom specs") {
    CHECK(parse_atom_spec("{neq0}", sig()) == 1u);
    CHECK(parse_atom_spec("{!neq0}", sig()) == 0u);
    Signature two({"p"}, {"a", "b"}, {});
    CHECK(parse_atom_spec("{a b}", two) == 3u);
    CHECK(parse_atom_spec("{!a b}", two) == 2u);
    CHECK(parse_atom_spec("{b !a}", two) == 2u); // order free
    CHECK_THROWS_AS(parse_atom_spec("{a}", two), ParseError);      // b missing
    CHECK_THROWS_AS(parse_atom_spec("{a a b}", two), ParseError);  // repeat
    CHECK_THROWS_AS(parse_atom_spec("{a !a b}", two), ParseError); // contradiction
    CHECK_THROWS_AS(parse_atom_spec("a b", two), ParseError);      // braces required
}

TEST_CASE("round trip: parse after pretty_print is the identity") {
    std::mt19937_64 rng(20240817);
    Signature two({"p", "q"}, {"a", "b"}, {"f", "g"});
    for (int i = 0; i < 500; ++i) {
        ProgPtr p = testgen::random_prog(rng, two, 4);
        std::string text = pretty_print(p, two);
        INFO(text);
        CHECK(*parse_program(text, two) == *p);
    }
}
