#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <functional>
#include <string>

#include "kawt/equivalence.hpp"
#include "kawt/io.hpp"
#include "kawt/parser.hpp"

using namespace kawt;

namespace {

std::string data(const std::string& name) {
    return std::string(KAWT_TEST_DATA_DIR "/") + name;
}

// scratch files for the error cases
std::string scratch(const std::string& name, const std::string& text) {
    auto dir = std::filesystem::temp_directory_path() / "kawt-io-tests";
    std::filesystem::create_directories(dir);
    auto path = dir / name;
    std::ofstream out(path);
    out << text;
    return path.string();
}

std::string thrown(const std::function<void()>& f) {
    try {
        f();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

const char* chain_text =
    "semiring tropical\n"
    "states s0 s1\n"
    "prog sub1 : s1 s0\n"
    "prog end : s0 s0 , s1 s0\n"
    "bool neq0 : s1\n"
    "weight one = 1\n"
    "weight skis = 5\n";

std::string chain_without(const std::string& needle) {
    std::string text = chain_text;
    std::size_t at = text.find(needle);
    REQUIRE(at != std::string::npos);
    text.erase(at, text.find('\n', at) - at + 1);
    return text;
}

} // namespace

TEST_CASE("program files") {
    ProgramFile pf = load_program_file(data("ski.prog"));
    CHECK(pf.sig == ski_signature());
    CHECK(pf.sig.programs() == std::vector<std::string>{"sub1", "end"});
    CHECK(pf.sig.booleans() == std::vector<std::string>{"neq0"});
    CHECK(pf.sig.weightings() == std::vector<std::string>{"one", "skis"});

    SkiPrograms progs = build_ski_programs(2);
    REQUIRE(pf.prog != nullptr);
    CHECK(*pf.prog == *progs.loop);

    CHECK(*load_program_file(data("ski_denested.prog")).prog == *progs.denested);
    CHECK(*load_program_file(data("ski_unrolled_n2.prog")).prog == *progs.unrolled);

    // loading the printed form gets the same tree back
    std::string printed = pretty_print(pf.prog, pf.sig);
    CHECK(*parse_program(printed, pf.sig) == *pf.prog);
}

TEST_CASE("hypothesis files") {
    ProgramFile h3 = load_program_file(data("hyp3_n2.prog"));
    ProgramFile h4 = load_program_file(data("hyp4.prog"));
    CHECK(h3.sig == ski_signature());

    int sub1 = h3.sig.lookup("sub1")->second;
    int endp = h3.sig.lookup("end")->second;
    int neq0 = h3.sig.lookup("neq0")->second;

    CHECK(*h4.prog == *prog_seq(prog_atomic(endp), prog_test(bool_var(neq0))));

    // the file spells the factors left-nested; the factor set only sees the
    // language, so the right-nested spelling extracts the same set
    ProgPtr nested = prog_seq(prog_atomic(sub1),
                              prog_seq(prog_atomic(sub1), prog_test(bool_var(neq0))));
    CanonicalValuation v = canonical_valuation(h3.sig, {1, 5});
    CHECK(hypothesis_factors({make_zero_hypothesis(h3.prog)}, v, 6) ==
          hypothesis_factors({make_zero_hypothesis(nested)}, v, 6));
}

TEST_CASE("program file errors") {
    CHECK(thrown([] { load_program_file("no-such-dir/nope.prog"); })
              .find("cannot open") != std::string::npos);

    CHECK(thrown([] {
              load_program_file(scratch("nosep.prog", "program p\nbool b\nweight f\n"));
          }).find("missing '---' separator") != std::string::npos);

    std::string msg = thrown([] {
        load_program_file(scratch("baddir.prog", "signature p\n---\n{1}\n"));
    });
    CHECK(msg.find("expected 'program', 'bool', 'weight' or '---'") != std::string::npos);
    CHECK(msg.find(":1:") != std::string::npos);

    // body problems surface as parse errors, not file errors
    CHECK_THROWS_AS(load_program_file(data("bad_sort.prog")), ParseError);
    CHECK(thrown([] { load_program_file(data("bad_sort.prog")); })
              .find("sort clash") != std::string::npos);
}

TEST_CASE("model files") {
    Signature sig = ski_signature();
    TransitionSystem ts = load_model_file(data("chain_n3_y5.model"), sig);
    CHECK(ts.states() == 4);
    CHECK(ts.state_names() == std::vector<std::string>{"s0", "s1", "s2", "s3"});

    // agrees with the built-in chain on every ski program we care about
    TransitionSystem built = build_ski_chain(3, 5);
    SkiPrograms progs = build_ski_programs(3);
    for (const ProgPtr& p :
         {progs.loop, progs.denested, progs.unrolled, prog_atomic(0), prog_atomic(1),
          prog_test(bool_var(0)), prog_weight(weight_var(0)), prog_weight(weight_var(1))})
        CHECK(interpret(*p, ts) == interpret(*p, built));
    CHECK(interpret(*progs.loop, ts).at(3, 0).as_extnat() == ExtNat::finite(3));
}

TEST_CASE("model files over other semirings and empty labelings") {
    Signature sig({"p"}, {"b"}, {"f"});
    std::string path = scratch("luk.model",
                               "semiring lukasiewicz\n"
                               "states a\n"
                               "prog p :\n"
                               "bool b :\n"
                               "weight f = 3/4\n");
    TransitionSystem ts = load_model_file(path, sig);
    CHECK(ts.states() == 1);
    CHECK(ts.ring().format(interpret(*prog_weight(weight_var(0)), ts).at(0, 0)) == "3/4");
    // empty labelings really are empty
    CHECK(interpret(*prog_atomic(0), ts) == rel_zero(ts.ring(), 1));
    CHECK(interpret(*prog_test(bool_var(0)), ts) == rel_zero(ts.ring(), 1));
}

TEST_CASE("model file errors") {
    Signature sig = ski_signature();
    auto fails_with = [&](const std::string& name, const std::string& text,
                          const std::string& needle) {
        std::string msg = thrown([&] { load_model_file(scratch(name, text), sig); });
        CAPTURE(msg);
        CAPTURE(needle);
        CHECK(msg.find(needle) != std::string::npos);
    };

    fails_with("m1.model", "flow x : a\n", "unknown directive 'flow'");
    fails_with("m2.model", "semiring tropical\nstates s0 s0\n", "duplicate state 's0'");
    fails_with("m3.model", "weight one = 1\n" + std::string(chain_text),
               "'semiring' must come before weight labelings");
    fails_with("m4.model", "semiring tropical\nprog sub1 : \nstates s0\n",
               "'states' must come before labelings");
    fails_with("m5.model", "semiring fuzzy\n", "unknown semiring 'fuzzy'");
    fails_with("m6.model", "semiring tropical boolean\n", "expected: semiring <name>");
    fails_with("m7.model", chain_without("prog sub1") + "prog sub1 : s9 s0\n",
               "unknown state 's9'");
    fails_with("m8.model", chain_without("prog sub1") + "prog sub1 : s1\n",
               "an edge needs exactly two states");
    fails_with("m9.model", std::string(chain_text) + "prog nope : s0 s0\n",
               "'nope' is not a declared program variable");
    fails_with("m10.model", std::string(chain_text) + "bool sub1 : s0\n",
               "'sub1' is not a declared Boolean variable");
    fails_with("m11.model", std::string(chain_text) + "weight nope = 3\n",
               "'nope' is not a declared weighting variable");
    fails_with("m12.model", std::string(chain_text) + "bool neq0 : s0\n",
               "'neq0' labeled twice");
    fails_with("m13.model", chain_without("weight one") + "weight one = x\n",
               "bad weight literal");
    fails_with("m14.model", "states s0\nprog sub1 :\nprog end :\nbool neq0 :\n",
               "missing 'semiring' line");
    fails_with("m15.model", "semiring tropical\n", "missing 'states' line");
    fails_with("m16.model", chain_without("prog end"),
               "program variable 'end' is not labeled");
    fails_with("m17.model", chain_without("bool neq0"),
               "Boolean variable 'neq0' is not labeled");
    fails_with("m18.model", chain_without("weight skis"),
               "weighting variable 'skis' is not labeled");

    // positions point at the offending line
    std::string msg = thrown(
        [&] { load_model_file(scratch("m19.model", "semiring tropical\nstates s0 s0\n"), sig); });
    CHECK(msg.find(":2:") != std::string::npos);
}

TEST_CASE("read_file") {
    std::string text = read_file(data("chain_n3_y5.model"));
    CHECK(text.find("semiring tropical") != std::string::npos);
    CHECK(thrown([] { read_file("nope.nothing"); }).find("cannot open") !=
          std::string::npos);
}
