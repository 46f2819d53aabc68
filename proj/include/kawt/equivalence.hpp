#ifndef KAWT_EQUIVALENCE_HPP
#define KAWT_EQUIVALENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "kawt/ast.hpp"
#include "kawt/guarded.hpp"
#include "kawt/relational.hpp"

namespace kawt {

// An equation e = 0 with a weighting-free left side. This restricted shape
// is the one whose elimination by factor deletion is sound over guarded
// strings.
struct Hypothesis {
    ProgPtr lhs;
};

// Validates the shape (no weightings) and wraps the program.
Hypothesis make_zero_hypothesis(ProgPtr lhs);

struct EquivVerdict {
    bool equal = true;
    std::string method; // "bounded-language" or "model-family"
    int bound = 0;
    // Populated for language verdicts; weights absent mean "not a trace".
    std::optional<GuardedString> witness;
    std::optional<std::uint64_t> left_weight;
    std::optional<std::uint64_t> right_weight;
    std::string detail; // printable description, empty when equal

    std::string text() const;
};

// Compares the bounded canonical languages exactly; the first differing
// trace in map order becomes the counterexample.
EquivVerdict bounded_equiv(const Program& p, const Program& q,
                           const CanonicalValuation& v, int length_bound);

// The crisp factors named by a set of hypotheses, at the given bound.
std::set<GuardedString> hypothesis_factors(const std::vector<Hypothesis>& hyps,
                                           const CanonicalValuation& v,
                                           int length_bound);

// Deletes every string whose base contains a contiguous factor (any
// sub-guarded-string, single atoms included) from the factor set.
GuardedLanguage filter_by_factors(const GuardedLanguage& x,
                                  const std::set<GuardedString>& factors);

// Bounded equivalence modulo hypotheses of the form e = 0: both languages
// are filtered by hypothesis factors before comparison. Requires the
// weight 1 to be the top of the natural order, which holds tropically and
// is re-checked by sampling.
EquivVerdict equiv_under_zero_hypotheses(const Program& p, const Program& q,
                                         const std::vector<Hypothesis>& hyps,
                                         const CanonicalValuation& v,
                                         int length_bound);

// Entrywise equality of interpretations over each supplied model. Every
// model must first satisfy the hypotheses (each lhs interprets to the zero
// relation); a violation is a SortError naming the model and hypothesis.
EquivVerdict model_equiv(const Program& p, const Program& q,
                         const std::vector<Hypothesis>& hyps,
                         const std::vector<TransitionSystem>& models,
                         int star_cap = 0);

// The chain system over states 0..n: sub1 steps down, end jumps to 0, neq0
// holds above 0, and the two weightings cost 1 per day and y for buying.
TransitionSystem build_ski_chain(int n, std::uint64_t y);

// Restriction of a canonical ski language to the traces realizable when the
// counter starts at n: a counter walk must match every atom's sign of neq0,
// sub1 needs a positive counter and decrements it, end zeroes it.
GuardedLanguage ski_consistent_restriction(const GuardedLanguage& x,
                                           const Signature& sig, int n);

struct SkiReport {
    int n = 0;
    std::uint64_t y = 0;
    int bound = 0;
    bool start_is_neq0 = false;     // the start atom of the n-scenario
    ExtNat theta_scenario;          // optimal weight from the start atom
    ExtNat theta_from_not_neq0;     // optimal weight from the halted atom
    ExtNat raw_theta_from_neq0;     // over the unrestricted language
    ExtNat raw_theta_from_not_neq0;
    ExtNat relational_entry;        // loop program, chain entry (n, 0)
    bool hypotheses_hold = false;

    std::string text() const;
};

// Builds the bounded-unrolling program for n, runs theta over its canonical
// language restricted to counter-consistent traces, and cross-checks the
// chain model entry of the loop program.
SkiReport ski_case_study(int n, std::uint64_t y);

} // namespace kawt

#endif
