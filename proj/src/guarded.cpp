#include "kawt/guarded.hpp"

#include <algorithm>

namespace kawt {

std::string render_atom(Atom a, const Signature& sig) {
    std::string out = "{";
    for (std::size_t b = 0; b < sig.booleans().size(); ++b) {
        if (b) out += ' ';
        if (!(a >> b & 1)) out += '!';
        out += sig.booleans()[b];
    }
    out += '}';
    return out;
}

bool atom_satisfies(Atom a, const BoolExpr& b) {
    switch (b.kind) {
        case BoolExpr::Kind::zero: return false;
        case BoolExpr::Kind::one: return true;
        case BoolExpr::Kind::var: return a >> b.var & 1;
        case BoolExpr::Kind::neg: return !atom_satisfies(a, *b.lhs);
        case BoolExpr::Kind::conj:
            return atom_satisfies(a, *b.lhs) && atom_satisfies(a, *b.rhs);
        case BoolExpr::Kind::disj:
            return atom_satisfies(a, *b.lhs) || atom_satisfies(a, *b.rhs);
    }
    throw SortError("unreachable Boolean kind");
}

std::vector<char> eval_bool_atoms(const BoolExpr& b, const Signature& sig) {
    std::vector<char> out(sig.atom_count());
    for (std::uint32_t a = 0; a < sig.atom_count(); ++a)
        out[a] = atom_satisfies(a, b);
    return out;
}

GuardedString atom_string(Atom a) {
    return GuardedString{{a}, {}};
}

bool is_crisp(const GuardedLanguage& x) {
    for (const auto& [s, w] : x)
        if (w != 0) return false;
    return true;
}

bool is_uniform(const GuardedLanguage& x) {
    for (const auto& [s, w] : x)
        if (w != x.begin()->second) return false;
    return true;
}

bool is_universal_on_atoms(const GuardedLanguage& x, const Signature& sig) {
    for (std::uint32_t a = 0; a < sig.atom_count(); ++a)
        if (!x.count(atom_string(a))) return false;
    return true;
}

bool is_atom_test(const GuardedLanguage& x) {
    for (const auto& [s, w] : x)
        if (s.length() != 0 || w != 0) return false;
    return true;
}

std::optional<WeightedGuardedString> coalesce(const WeightedGuardedString& x,
                                              const WeightedGuardedString& y) {
    if (x.base.last() != y.base.first()) return std::nullopt;
    WeightedGuardedString r;
    r.base.atoms = x.base.atoms;
    r.base.atoms.insert(r.base.atoms.end(), y.base.atoms.begin() + 1, y.base.atoms.end());
    r.base.progs = x.base.progs;
    r.base.progs.insert(r.base.progs.end(), y.base.progs.begin(), y.base.progs.end());
    r.weight = x.weight + y.weight;
    return r;
}

namespace {

void add_min(GuardedLanguage& x, GuardedString s, std::uint64_t w) {
    auto [it, fresh] = x.try_emplace(std::move(s), w);
    if (!fresh && w < it->second) it->second = w;
}

} // namespace

GuardedLanguage unamb_union(const GuardedLanguage& x, const GuardedLanguage& y) {
    GuardedLanguage r = x;
    for (const auto& [s, w] : y) add_min(r, s, w);
    return r;
}

GuardedLanguage gt_product(const GuardedLanguage& x, const GuardedLanguage& y,
                           int length_bound) {
    GuardedLanguage r;
    for (const auto& [sx, wx] : x)
        for (const auto& [sy, wy] : y) {
            if (sx.last() != sy.first()) continue;
            if (length_bound >= 0 && sx.length() + sy.length() > length_bound) continue;
            auto joined = coalesce({sx, wx}, {sy, wy});
            add_min(r, std::move(joined->base), joined->weight);
        }
    return r;
}

GuardedLanguage unit_language(const Signature& sig) {
    GuardedLanguage r;
    for (std::uint32_t a = 0; a < sig.atom_count(); ++a) r.emplace(atom_string(a), 0);
    return r;
}

GuardedLanguage gt_star(const GuardedLanguage& x, int length_bound,
                        const Signature& sig) {
    // Partial sums R <- 1 U R.X, a deterministic iteration, so the first
    // repeat is the least fixpoint. Each step either leaves R alone or grows
    // the domain / lowers a weight inside a finite bounded universe, and
    // weights are naturals, so stabilization is guaranteed.
    GuardedLanguage one = unit_language(sig);
    GuardedLanguage r = one;
    while (true) {
        GuardedLanguage next = unamb_union(one, gt_product(r, x, length_bound));
        if (next == r) return r;
        r = std::move(next);
    }
}

GuardedLanguage atom_complement(const GuardedLanguage& t, const Signature& sig) {
    if (!is_atom_test(t))
        throw SortError("complement applies to crisp atom languages only");
    GuardedLanguage r;
    for (std::uint32_t a = 0; a < sig.atom_count(); ++a)
        if (!t.count(atom_string(a))) r.emplace(atom_string(a), 0);
    return r;
}

GuardedLanguage CanonicalValuation::prog_lang(int prog) const {
    GuardedLanguage r;
    for (std::uint32_t a = 0; a < sig.atom_count(); ++a)
        for (std::uint32_t b = 0; b < sig.atom_count(); ++b)
            r.emplace(GuardedString{{a, b}, {prog}}, 0);
    return r;
}

GuardedLanguage CanonicalValuation::bool_lang(const BoolExpr& b) const {
    GuardedLanguage r;
    std::vector<char> holds = eval_bool_atoms(b, sig);
    for (std::uint32_t a = 0; a < sig.atom_count(); ++a)
        if (holds[a]) r.emplace(atom_string(a), 0);
    return r;
}

GuardedLanguage CanonicalValuation::weight_lang(const WeightExpr& w) const {
    ExtNat v = eval_weight_nat(w, *this);
    GuardedLanguage r;
    if (v.is_inf()) return r;
    for (std::uint32_t a = 0; a < sig.atom_count(); ++a)
        r.emplace(atom_string(a), v.value());
    return r;
}

CanonicalValuation canonical_valuation(Signature sig, std::vector<std::uint64_t> weights) {
    if (weights.size() != sig.weightings().size())
        throw SortError("canonical valuation needs one weight per weighting variable");
    return CanonicalValuation{std::move(sig), std::move(weights)};
}

ExtNat eval_weight_nat(const WeightExpr& w, const CanonicalValuation& v) {
    switch (w.kind) {
        case WeightExpr::Kind::zero: return ExtNat::infinity();
        case WeightExpr::Kind::one: return ExtNat::finite(0);
        case WeightExpr::Kind::var: return ExtNat::finite(v.weights[w.var]);
        case WeightExpr::Kind::add:
            return min_nat(eval_weight_nat(*w.lhs, v), eval_weight_nat(*w.rhs, v));
        case WeightExpr::Kind::mul:
            return add_nat(eval_weight_nat(*w.lhs, v), eval_weight_nat(*w.rhs, v));
    }
    throw SortError("unreachable weighting kind");
}

GuardedLanguage gt_interpret(const Program& p, const CanonicalValuation& v,
                             int length_bound) {
    switch (p.kind) {
        case Program::Kind::atomic:
            return v.prog_lang(p.var);
        case Program::Kind::test:
            return v.bool_lang(*p.test);
        case Program::Kind::weight:
            return v.weight_lang(*p.weight);
        case Program::Kind::plus:
            return unamb_union(gt_interpret(*p.lhs, v, length_bound),
                               gt_interpret(*p.rhs, v, length_bound));
        case Program::Kind::seq:
            return gt_product(gt_interpret(*p.lhs, v, length_bound),
                              gt_interpret(*p.rhs, v, length_bound), length_bound);
        case Program::Kind::star:
            return gt_star(gt_interpret(*p.lhs, v, length_bound), length_bound, v.sig);
    }
    throw SortError("unreachable program kind");
}

GuardedLanguage theta(const GuardedLanguage& g, const std::set<Atom>& from) {
    GuardedLanguage r;
    for (const auto& [s, w] : g)
        if (from.count(s.first())) add_min(r, atom_string(s.last()), w);
    return r;
}

std::string render_guarded_string(const GuardedString& s, std::uint64_t weight,
                                  const Signature& sig) {
    std::string out = render_atom(s.atoms[0], sig);
    for (std::size_t i = 0; i < s.progs.size(); ++i) {
        out += ' ';
        out += sig.programs()[s.progs[i]];
        out += ' ';
        out += render_atom(s.atoms[i + 1], sig);
    }
    out += " (" + std::to_string(weight) + ")";
    return out;
}

std::string render_language(const GuardedLanguage& x, const Signature& sig) {
    std::string out;
    for (const auto& [s, w] : x) {
        out += render_guarded_string(s, w, sig);
        out += '\n';
    }
    return out;
}

} // namespace kawt
