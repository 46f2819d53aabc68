#ifndef KAWT_RELATIONAL_HPP
#define KAWT_RELATIONAL_HPP

#include <string>
#include <vector>

#include "kawt/ast.hpp"
#include "kawt/report.hpp"
#include "kawt/semiring.hpp"

namespace kawt {

// Dense square matrix of semiring values over a fixed ordered state set.
// Immutable by convention once built: the interpreter and the algebra
// operations below always return fresh relations.
class WeightedRelation {
public:
    WeightedRelation(const Semiring& ring, int n)
        : ring_(&ring), n_(n), a_(std::size_t(n) * n, ring.zero()) {}

    const Semiring& ring() const { return *ring_; }
    int size() const { return n_; }

    const Value& at(int i, int j) const { return a_[std::size_t(i) * n_ + j]; }
    void set(int i, int j, Value v) { a_[std::size_t(i) * n_ + j] = std::move(v); }

    friend bool operator==(const WeightedRelation& a, const WeightedRelation& b) {
        return a.ring_ == b.ring_ && a.n_ == b.n_ && a.a_ == b.a_;
    }

private:
    const Semiring* ring_;
    int n_;
    std::vector<Value> a_;
};

WeightedRelation rel_one(const Semiring& ring, int n);
WeightedRelation rel_zero(const Semiring& ring, int n);
WeightedRelation rel_add(const WeightedRelation& a, const WeightedRelation& b);
WeightedRelation rel_mul(const WeightedRelation& a, const WeightedRelation& b);

// A test: sub-identity and two-valued (off-diagonal 0, diagonal in {0, 1}).
bool is_test(const WeightedRelation& t);
// A weight: diagonal-constant with 0 off the diagonal.
bool is_weight(const WeightedRelation& a);

// Diagonal complement. Only tests have complements; anything else is a
// sort error.
WeightedRelation rel_neg(const WeightedRelation& t);

// Partial sums 1 + a + a^2 + ... iterated to exact stabilization. cap <= 0
// means the default |X| + 1. Throws StarDivergence when the cap is hit
// without reaching the fixpoint.
WeightedRelation rel_star(const WeightedRelation& a, int cap = 0);

// Entrywise natural order: a is below b iff rel_add(a, b) == b.
bool rel_le(const WeightedRelation& a, const WeightedRelation& b);

std::string format_relation(const WeightedRelation& a);

// A finite semiring-valued transition system: every program variable is a
// crisp edge relation, every Boolean variable a set of states, every
// weighting variable a single semiring value.
class TransitionSystem {
public:
    TransitionSystem(Signature sig, const Semiring& ring,
                     std::vector<std::string> state_names);

    const Signature& sig() const { return sig_; }
    const Semiring& ring() const { return *ring_; }
    int states() const { return int(state_names_.size()); }
    const std::vector<std::string>& state_names() const { return state_names_; }
    int state_index(std::string_view name) const; // -1 when unknown

    void add_edge(int prog, int from, int to);
    void set_bool(int boolean, int state, bool holds);
    void set_weight(int weighting, Value v);

    const WeightedRelation& prog_rel(int prog) const { return progs_[prog]; }
    bool bool_holds(int boolean, int state) const { return bools_[boolean][state]; }
    const Value& weight_value(int weighting) const { return weights_[weighting]; }

private:
    Signature sig_;
    const Semiring* ring_;
    std::vector<std::string> state_names_;
    std::vector<WeightedRelation> progs_;
    std::vector<std::vector<char>> bools_;
    std::vector<Value> weights_;
};

// The set of states where a Boolean expression holds, evaluated
// set-theoretically.
std::vector<char> eval_bool_states(const BoolExpr& b, const TransitionSystem& m);

// A weighting expression folded in the model's semiring.
Value eval_weight_value(const WeightExpr& w, const TransitionSystem& m);

// Homomorphic interpretation of a program as a weighted relation. star_cap
// is passed through to rel_star (<= 0 for the default).
WeightedRelation interpret(const Program& p, const TransitionSystem& m, int star_cap = 0);

// Law suite for the lifted algebra on n-state matrices: semiring laws, the
// Kleene-star unfoldings and both star implications, Boolean-algebra laws on
// tests, sampled *-continuity, and closure of the diagonal-constant
// subalgebra with entry extraction as a homomorphism.
AxiomReport check_lifted_laws(const Semiring& ring, int n, int samples, std::uint64_t seed);

} // namespace kawt

#endif
