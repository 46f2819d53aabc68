#include "kawt/relational.hpp"

#include <algorithm>
#include <sstream>

namespace kawt {

namespace {

void require_compatible(const WeightedRelation& a, const WeightedRelation& b) {
    if (&a.ring() != &b.ring())
        throw SortError("relation operands live over different semirings");
    if (a.size() != b.size())
        throw SortError("relation dimension mismatch: " + std::to_string(a.size()) +
                        " vs " + std::to_string(b.size()));
}

} // namespace

WeightedRelation rel_one(const Semiring& ring, int n) {
    WeightedRelation r(ring, n);
    for (int i = 0; i < n; ++i) r.set(i, i, ring.one());
    return r;
}

WeightedRelation rel_zero(const Semiring& ring, int n) {
    return WeightedRelation(ring, n);
}

WeightedRelation rel_add(const WeightedRelation& a, const WeightedRelation& b) {
    require_compatible(a, b);
    const Semiring& ring = a.ring();
    WeightedRelation r(ring, a.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            r.set(i, j, ring.add(a.at(i, j), b.at(i, j)));
    return r;
}

WeightedRelation rel_mul(const WeightedRelation& a, const WeightedRelation& b) {
    require_compatible(a, b);
    const Semiring& ring = a.ring();
    int n = a.size();
    WeightedRelation r(ring, n);
    std::vector<Value> terms;
    terms.reserve(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            terms.clear();
            for (int u = 0; u < n; ++u)
                terms.push_back(ring.mul(a.at(i, u), b.at(u, j)));
            r.set(i, j, big_sum(ring, terms));
        }
    return r;
}

bool is_test(const WeightedRelation& t) {
    const Semiring& ring = t.ring();
    Value z = ring.zero(), o = ring.one();
    for (int i = 0; i < t.size(); ++i)
        for (int j = 0; j < t.size(); ++j) {
            const Value& v = t.at(i, j);
            if (i != j ? !(v == z) : !(v == z || v == o)) return false;
        }
    return true;
}

bool is_weight(const WeightedRelation& a) {
    const Semiring& ring = a.ring();
    Value z = ring.zero();
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) {
            if (i != j && !(a.at(i, j) == z)) return false;
            if (i != j) continue;
            if (!(a.at(i, i) == a.at(0, 0))) return false;
        }
    return true;
}

WeightedRelation rel_neg(const WeightedRelation& t) {
    if (!is_test(t))
        throw SortError("complement applies to tests only");
    const Semiring& ring = t.ring();
    WeightedRelation r(ring, t.size());
    for (int i = 0; i < t.size(); ++i)
        r.set(i, i, t.at(i, i) == ring.zero() ? ring.one() : ring.zero());
    return r;
}

namespace {

// Partial sums S_{k+1} = 1 + a * S_k, stopping at the first repeat. The
// iteration is deterministic, so a single repeat is already the fixpoint.
WeightedRelation star_with_count(const WeightedRelation& a, int cap, int* iterations) {
    if (cap <= 0) cap = a.size() + 1;
    WeightedRelation s = rel_one(a.ring(), a.size());
    for (int k = 0; k <= cap; ++k) {
        WeightedRelation next = rel_add(rel_one(a.ring(), a.size()), rel_mul(a, s));
        if (next == s) {
            if (iterations) *iterations = k;
            return s;
        }
        s = std::move(next);
    }
    throw StarDivergence("star did not stabilize within " + std::to_string(cap) +
                         " iterations over semiring " + std::string(a.ring().name()));
}

} // namespace

WeightedRelation rel_star(const WeightedRelation& a, int cap) {
    return star_with_count(a, cap, nullptr);
}

bool rel_le(const WeightedRelation& a, const WeightedRelation& b) {
    return rel_add(a, b) == b;
}

std::string format_relation(const WeightedRelation& a) {
    int n = a.size();
    std::vector<std::string> cells(std::size_t(n) * n);
    std::vector<std::size_t> width(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cells[std::size_t(i) * n + j] = a.ring().format(a.at(i, j));
            width[j] = std::max(width[j], cells[std::size_t(i) * n + j].size());
        }
    std::string out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::string& c = cells[std::size_t(i) * n + j];
            if (j) out += "  ";
            out.append(width[j] - c.size(), ' ');
            out += c;
        }
        out += '\n';
    }
    return out;
}

TransitionSystem::TransitionSystem(Signature sig, const Semiring& ring,
                                   std::vector<std::string> state_names)
    : sig_(std::move(sig)), ring_(&ring), state_names_(std::move(state_names)) {
    if (state_names_.empty())
        throw SortError("a transition system needs at least one state");
    int n = int(state_names_.size());
    progs_.assign(sig_.programs().size(), WeightedRelation(ring, n));
    bools_.assign(sig_.booleans().size(), std::vector<char>(n, 0));
    weights_.assign(sig_.weightings().size(), ring.zero());
}

int TransitionSystem::state_index(std::string_view name) const {
    for (std::size_t i = 0; i < state_names_.size(); ++i)
        if (state_names_[i] == name) return int(i);
    return -1;
}

void TransitionSystem::add_edge(int prog, int from, int to) {
    progs_[prog].set(from, to, ring_->one());
}

void TransitionSystem::set_bool(int boolean, int state, bool holds) {
    bools_[boolean][state] = holds ? 1 : 0;
}

void TransitionSystem::set_weight(int weighting, Value v) {
    weights_[weighting] = std::move(v);
}

std::vector<char> eval_bool_states(const BoolExpr& b, const TransitionSystem& m) {
    int n = m.states();
    std::vector<char> out(n, 0);
    switch (b.kind) {
        case BoolExpr::Kind::zero:
            return out;
        case BoolExpr::Kind::one:
            std::fill(out.begin(), out.end(), 1);
            return out;
        case BoolExpr::Kind::var:
            for (int s = 0; s < n; ++s) out[s] = m.bool_holds(b.var, s);
            return out;
        case BoolExpr::Kind::neg: {
            std::vector<char> l = eval_bool_states(*b.lhs, m);
            for (int s = 0; s < n; ++s) out[s] = !l[s];
            return out;
        }
        case BoolExpr::Kind::conj: {
            std::vector<char> l = eval_bool_states(*b.lhs, m);
            std::vector<char> r = eval_bool_states(*b.rhs, m);
            for (int s = 0; s < n; ++s) out[s] = l[s] && r[s];
            return out;
        }
        case BoolExpr::Kind::disj: {
            std::vector<char> l = eval_bool_states(*b.lhs, m);
            std::vector<char> r = eval_bool_states(*b.rhs, m);
            for (int s = 0; s < n; ++s) out[s] = l[s] || r[s];
            return out;
        }
    }
    throw SortError("unreachable Boolean kind");
}

Value eval_weight_value(const WeightExpr& w, const TransitionSystem& m) {
    const Semiring& ring = m.ring();
    switch (w.kind) {
        case WeightExpr::Kind::zero: return ring.zero();
        case WeightExpr::Kind::one: return ring.one();
        case WeightExpr::Kind::var: return m.weight_value(w.var);
        case WeightExpr::Kind::add:
            return ring.add(eval_weight_value(*w.lhs, m), eval_weight_value(*w.rhs, m));
        case WeightExpr::Kind::mul:
            return ring.mul(eval_weight_value(*w.lhs, m), eval_weight_value(*w.rhs, m));
    }
    throw SortError("unreachable weighting kind");
}

WeightedRelation interpret(const Program& p, const TransitionSystem& m, int star_cap) {
    const Semiring& ring = m.ring();
    int n = m.states();
    switch (p.kind) {
        case Program::Kind::atomic:
            return m.prog_rel(p.var);
        case Program::Kind::test: {
            std::vector<char> holds = eval_bool_states(*p.test, m);
            WeightedRelation r(ring, n);
            for (int s = 0; s < n; ++s)
                if (holds[s]) r.set(s, s, ring.one());
            return r;
        }
        case Program::Kind::weight: {
            Value lambda = eval_weight_value(*p.weight, m);
            WeightedRelation r(ring, n);
            for (int s = 0; s < n; ++s) r.set(s, s, lambda);
            return r;
        }
        case Program::Kind::plus:
            return rel_add(interpret(*p.lhs, m, star_cap), interpret(*p.rhs, m, star_cap));
        case Program::Kind::seq:
            return rel_mul(interpret(*p.lhs, m, star_cap), interpret(*p.rhs, m, star_cap));
        case Program::Kind::star:
            return rel_star(interpret(*p.lhs, m, star_cap), star_cap);
    }
    throw SortError("unreachable program kind");
}

namespace {

std::string inline_matrix(const WeightedRelation& a) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < a.size(); ++i) {
        if (i) os << "; ";
        for (int j = 0; j < a.size(); ++j) {
            if (j) os << ',';
            os << a.ring().format(a.at(i, j));
        }
    }
    os << ']';
    return os.str();
}

struct LiftedChecker {
    const Semiring& ring;
    int n;
    AxiomReport& rep;

    void eq(const char* law, const WeightedRelation& got, const WeightedRelation& want,
            const std::string& witness) {
        rep.checks_run++;
        if (!(got == want))
            rep.violation(law, witness + ": got " + inline_matrix(got) +
                                   " want " + inline_matrix(want));
    }
    void le(const char* law, const WeightedRelation& lo, const WeightedRelation& hi,
            const std::string& witness) {
        rep.checks_run++;
        if (!rel_le(lo, hi))
            rep.violation(law, witness + ": " + inline_matrix(lo) +
                                   " not below " + inline_matrix(hi));
    }
    void truth(const char* law, bool ok, const std::string& witness) {
        rep.checks_run++;
        if (!ok) rep.violation(law, witness);
    }

    WeightedRelation random_matrix(std::mt19937_64& rng) {
        WeightedRelation r(ring, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r.set(i, j, ring.sample(rng));
        return r;
    }
    WeightedRelation random_test(std::mt19937_64& rng) {
        WeightedRelation r(ring, n);
        for (int i = 0; i < n; ++i)
            if (rng() % 2) r.set(i, i, ring.one());
        return r;
    }
    WeightedRelation diag(const Value& v) {
        WeightedRelation r(ring, n);
        for (int i = 0; i < n; ++i) r.set(i, i, v);
        return r;
    }
};

} // namespace

AxiomReport check_lifted_laws(const Semiring& ring, int n, int samples, std::uint64_t seed) {
    AxiomReport rep;
    rep.suite = "lifted(" + std::string(ring.name()) + ", " + std::to_string(n) + " states)";
    rep.seed = seed;
    rep.samples = samples;

    std::mt19937_64 rng(seed);
    LiftedChecker c{ring, n, rep};
    const WeightedRelation one = rel_one(ring, n);
    const WeightedRelation zero = rel_zero(ring, n);

    for (int it = 0; it < samples; ++it) {
        WeightedRelation x = c.random_matrix(rng);
        WeightedRelation y = c.random_matrix(rng);
        WeightedRelation z = c.random_matrix(rng);
        std::string w = "x=" + inline_matrix(x) + " y=" + inline_matrix(y) +
                        " z=" + inline_matrix(z);

        c.eq("add-commutativity", rel_add(x, y), rel_add(y, x), w);
        c.eq("add-associativity", rel_add(rel_add(x, y), z), rel_add(x, rel_add(y, z)), w);
        c.eq("add-idempotency", rel_add(x, x), x, w);
        c.eq("add-zero-neutral", rel_add(x, zero), x, w);
        c.eq("mul-associativity", rel_mul(rel_mul(x, y), z), rel_mul(x, rel_mul(y, z)), w);
        c.eq("mul-one-left", rel_mul(one, x), x, w);
        c.eq("mul-one-right", rel_mul(x, one), x, w);
        c.eq("left-distributivity", rel_mul(x, rel_add(y, z)),
             rel_add(rel_mul(x, y), rel_mul(x, z)), w);
        c.eq("right-distributivity", rel_mul(rel_add(x, y), z),
             rel_add(rel_mul(x, z), rel_mul(y, z)), w);
        c.eq("zero-annihilation-left", rel_mul(zero, x), zero, w);
        c.eq("zero-annihilation-right", rel_mul(x, zero), zero, w);

        try {
            int stab = 0;
            WeightedRelation xs = star_with_count(x, 0, &stab);

            c.eq("star-fixpoint", xs, rel_add(one, rel_mul(x, xs)), w);
            c.le("star-unfold-left", rel_add(one, rel_mul(x, xs)), xs, w);
            c.le("star-unfold-right", rel_add(one, rel_mul(xs, x)), xs, w);

            // Left induction with a premise that holds by construction:
            // z0 = x*(y + u) satisfies y + x z0 <= z0, so x* y <= z0 must follow.
            WeightedRelation u = c.random_matrix(rng);
            WeightedRelation z0 = rel_mul(xs, rel_add(y, u));
            c.truth("star-left-induction-premise",
                    rel_le(rel_add(y, rel_mul(x, z0)), z0), w + " u=" + inline_matrix(u));
            c.le("star-left-induction", rel_mul(xs, y), z0, w + " u=" + inline_matrix(u));

            WeightedRelation z1 = rel_mul(rel_add(y, u), xs);
            c.truth("star-right-induction-premise",
                    rel_le(rel_add(y, rel_mul(z1, x)), z1), w + " u=" + inline_matrix(u));
            c.le("star-right-induction", rel_mul(y, xs), z1, w + " u=" + inline_matrix(u));

            // Same implications on an unconstrained z whenever the premise
            // happens to hold.
            if (rel_le(rel_add(y, rel_mul(x, z)), z))
                c.le("star-left-induction-random", rel_mul(xs, y), z, w);
            if (rel_le(rel_add(y, rel_mul(z, x)), z))
                c.le("star-right-induction-random", rel_mul(y, xs), z, w);

            // *-continuity at the stabilization point: x y* z as a finite sum.
            int ystab = 0;
            WeightedRelation ys = star_with_count(y, 0, &ystab);
            WeightedRelation sum = rel_mul(x, z);
            WeightedRelation pow = rel_one(ring, n);
            for (int k = 1; k <= ystab; ++k) {
                pow = rel_mul(pow, y);
                sum = rel_add(sum, rel_mul(rel_mul(x, pow), z));
            }
            c.eq("star-continuity", rel_mul(rel_mul(x, ys), z), sum,
                 w + " (K=" + std::to_string(ystab) + ")");
        } catch (const StarDivergence& e) {
            rep.checks_run++;
            rep.violation("star-stabilization", w + ": " + e.what());
        }

        // Boolean algebra on tests.
        WeightedRelation s = c.random_test(rng);
        WeightedRelation t = c.random_test(rng);
        WeightedRelation v = c.random_test(rng);
        std::string wt = "s=" + inline_matrix(s) + " t=" + inline_matrix(t) +
                         " v=" + inline_matrix(v);
        c.truth("tests-closed-under-add", is_test(rel_add(s, t)), wt);
        c.truth("tests-closed-under-mul", is_test(rel_mul(s, t)), wt);
        c.truth("tests-closed-under-neg", is_test(rel_neg(s)), wt);
        c.eq("test-meet-idempotent", rel_mul(s, s), s, wt);
        c.eq("test-meet-commutative", rel_mul(s, t), rel_mul(t, s), wt);
        c.eq("test-excluded-middle", rel_add(s, rel_neg(s)), one, wt);
        c.eq("test-contradiction", rel_mul(s, rel_neg(s)), zero, wt);
        c.eq("test-double-negation", rel_neg(rel_neg(s)), s, wt);
        c.eq("test-de-morgan", rel_neg(rel_add(s, t)),
             rel_mul(rel_neg(s), rel_neg(t)), wt);
        c.eq("test-join-over-meet", rel_add(s, rel_mul(t, v)),
             rel_mul(rel_add(s, t), rel_add(s, v)), wt);
        c.le("test-below-one", s, one, wt);

        // Diagonal-constant relations: closed under the operations, and
        // extraction at a fixed diagonal entry is a homomorphism onto S.
        Value a = ring.sample(rng);
        Value b = ring.sample(rng);
        WeightedRelation da = c.diag(a), db = c.diag(b);
        std::string ww = "a=" + ring.format(a) + " b=" + ring.format(b);
        c.truth("weights-closed-under-add", is_weight(rel_add(da, db)), ww);
        c.truth("weights-closed-under-mul", is_weight(rel_mul(da, db)), ww);
        c.eq("weight-add-extraction", rel_add(da, db), c.diag(ring.add(a, b)), ww);
        c.eq("weight-mul-extraction", rel_mul(da, db), c.diag(ring.mul(a, b)), ww);
        c.truth("weight-one-is-rel-one", c.diag(ring.one()) == one, ww);
        c.truth("weight-zero-is-rel-zero", c.diag(ring.zero()) == zero, ww);
        try {
            WeightedRelation scalar(ring, 1);
            scalar.set(0, 0, a);
            WeightedRelation sstar = rel_star(scalar, n + 1);
            c.eq("weight-star-extraction", rel_star(da), c.diag(sstar.at(0, 0)), ww);
        } catch (const StarDivergence& e) {
            rep.checks_run++;
            rep.violation("weight-star-stabilization", ww + ": " + e.what());
        }
        c.eq("weight-central", rel_mul(da, x), rel_mul(x, da),
             ww + " x=" + inline_matrix(x));
    }
    return rep;
}

} // namespace kawt
