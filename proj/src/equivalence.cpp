#include "kawt/equivalence.hpp"

namespace kawt {

namespace {

bool mentions_weighting(const Program& p) {
    switch (p.kind) {
        case Program::Kind::weight: return true;
        case Program::Kind::atomic:
        case Program::Kind::test: return false;
        case Program::Kind::plus:
        case Program::Kind::seq:
            return mentions_weighting(*p.lhs) || mentions_weighting(*p.rhs);
        case Program::Kind::star:
            return mentions_weighting(*p.lhs);
    }
    return false;
}

std::string fmt_weight(const std::optional<std::uint64_t>& w) {
    return w ? std::to_string(*w) : "not a trace";
}

std::string fmt_nat(ExtNat v) {
    return v.is_inf() ? "inf" : std::to_string(v.value());
}

} // namespace

Hypothesis make_zero_hypothesis(ProgPtr lhs) {
    if (!lhs) throw SortError("hypothesis has no left side");
    if (mentions_weighting(*lhs))
        throw SortError("hypothesis left side must be weighting-free");
    return Hypothesis{std::move(lhs)};
}

std::string EquivVerdict::text() const {
    std::string out = "method: " + method + " (bound " + std::to_string(bound) + ")\n";
    out += equal ? "verdict: EQUAL\n" : "verdict: NOT EQUAL\n";
    if (!detail.empty()) out += detail + "\n";
    return out;
}

namespace {

EquivVerdict compare_languages(const GuardedLanguage& a, const GuardedLanguage& b,
                               const Signature& sig, int bound, std::string method) {
    EquivVerdict v;
    v.method = std::move(method);
    v.bound = bound;
    if (a == b) return v;
    v.equal = false;
    // First difference in map order.
    auto ia = a.begin(), ib = b.begin();
    while (true) {
        if (ia == a.end()) { v.witness = ib->first; break; }
        if (ib == b.end()) { v.witness = ia->first; break; }
        if (ia->first != ib->first) {
            v.witness = std::min(ia->first, ib->first);
            break;
        }
        if (ia->second != ib->second) { v.witness = ia->first; break; }
        ++ia, ++ib;
    }
    if (auto it = a.find(*v.witness); it != a.end()) v.left_weight = it->second;
    if (auto it = b.find(*v.witness); it != b.end()) v.right_weight = it->second;
    std::string base = render_guarded_string(*v.witness, 0, sig);
    base.erase(base.rfind(" (0)")); // the weights differ, so print them apart
    v.detail = "differing trace: " + base + "\n  left weight:  " + fmt_weight(v.left_weight) +
               "\n  right weight: " + fmt_weight(v.right_weight);
    return v;
}

} // namespace

EquivVerdict bounded_equiv(const Program& p, const Program& q,
                           const CanonicalValuation& v, int length_bound) {
    return compare_languages(gt_interpret(p, v, length_bound),
                             gt_interpret(q, v, length_bound),
                             v.sig, length_bound, "bounded-language");
}

std::set<GuardedString> hypothesis_factors(const std::vector<Hypothesis>& hyps,
                                           const CanonicalValuation& v,
                                           int length_bound) {
    std::set<GuardedString> factors;
    for (const Hypothesis& h : hyps) {
        GuardedLanguage lang = gt_interpret(*h.lhs, v, length_bound);
        if (!is_crisp(lang))
            throw SortError("hypothesis language is not crisp");
        for (const auto& [s, w] : lang) factors.insert(s);
    }
    return factors;
}

namespace {

bool has_factor(const GuardedString& s, const GuardedString& f) {
    int lf = f.length(), ls = s.length();
    for (int i = 0; i + lf <= ls; ++i) {
        bool match = true;
        for (int k = 0; k <= lf && match; ++k)
            if (s.atoms[i + k] != f.atoms[k]) match = false;
        for (int k = 0; k < lf && match; ++k)
            if (s.progs[i + k] != f.progs[k]) match = false;
        if (match) return true;
    }
    return false;
}

} // namespace

GuardedLanguage filter_by_factors(const GuardedLanguage& x,
                                  const std::set<GuardedString>& factors) {
    GuardedLanguage r;
    for (const auto& [s, w] : x) {
        bool hit = false;
        for (const GuardedString& f : factors)
            if (has_factor(s, f)) { hit = true; break; }
        if (!hit) r.emplace(s, w);
    }
    return r;
}

EquivVerdict equiv_under_zero_hypotheses(const Program& p, const Program& q,
                                         const std::vector<Hypothesis>& hyps,
                                         const CanonicalValuation& v,
                                         int length_bound) {
    // Side condition of the elimination: the weight 1 must be the top of
    // the natural order. Tropically 1 is the number 0 and the order favors
    // smaller numbers, so this holds; sample it rather than assume it.
    for (std::uint64_t k = 0; k <= 64; ++k)
        if (!(min_nat(ExtNat::finite(k), ExtNat::finite(0)) == ExtNat::finite(0)))
            throw SortError("weight 1 is not the top element");
    if (!(min_nat(ExtNat::infinity(), ExtNat::finite(0)) == ExtNat::finite(0)))
        throw SortError("weight 1 is not the top element");

    std::set<GuardedString> factors = hypothesis_factors(hyps, v, length_bound);
    GuardedLanguage a = filter_by_factors(gt_interpret(p, v, length_bound), factors);
    GuardedLanguage b = filter_by_factors(gt_interpret(q, v, length_bound), factors);
    return compare_languages(a, b, v.sig, length_bound,
                             "bounded-language under " + std::to_string(hyps.size()) +
                                 " hypotheses");
}

EquivVerdict model_equiv(const Program& p, const Program& q,
                         const std::vector<Hypothesis>& hyps,
                         const std::vector<TransitionSystem>& models,
                         int star_cap) {
    EquivVerdict v;
    v.method = "model-family";
    v.bound = star_cap;
    for (std::size_t m = 0; m < models.size(); ++m) {
        const TransitionSystem& ts = models[m];
        for (const Hypothesis& h : hyps) {
            WeightedRelation r = interpret(*h.lhs, ts, star_cap);
            if (!(r == rel_zero(ts.ring(), ts.states())))
                throw SortError("model " + std::to_string(m) + " violates hypothesis " +
                                pretty_print(h.lhs, ts.sig()) + " = 0");
        }
        WeightedRelation a = interpret(p, ts, star_cap);
        WeightedRelation b = interpret(q, ts, star_cap);
        if (a == b) continue;
        v.equal = false;
        for (int i = 0; i < ts.states() && v.detail.empty(); ++i)
            for (int j = 0; j < ts.states(); ++j)
                if (!(a.at(i, j) == b.at(i, j))) {
                    v.detail = "model " + std::to_string(m) + ", entry (" +
                               ts.state_names()[i] + ", " + ts.state_names()[j] +
                               "): left " + ts.ring().format(a.at(i, j)) + ", right " +
                               ts.ring().format(b.at(i, j));
                    break;
                }
        return v;
    }
    return v;
}

TransitionSystem build_ski_chain(int n, std::uint64_t y) {
    Signature sig = ski_signature();
    const Semiring& trop = tropical_semiring();
    std::vector<std::string> names;
    for (int i = 0; i <= n; ++i) names.push_back("s" + std::to_string(i));
    TransitionSystem ts(sig, trop, std::move(names));
    auto sub1 = sig.lookup("sub1"), endp = sig.lookup("end");
    auto neq0 = sig.lookup("neq0");
    auto one = sig.lookup("one"), skis = sig.lookup("skis");
    for (int i = 1; i <= n; ++i) ts.add_edge(sub1->second, i, i - 1);
    for (int i = 0; i <= n; ++i) ts.add_edge(endp->second, i, 0);
    for (int i = 1; i <= n; ++i) ts.set_bool(neq0->second, i, true);
    ts.set_weight(one->second, Value(trop, ExtNat::finite(1)));
    ts.set_weight(skis->second, Value(trop, ExtNat::finite(y)));
    return ts;
}

GuardedLanguage ski_consistent_restriction(const GuardedLanguage& x,
                                           const Signature& sig, int n) {
    auto sub1 = sig.lookup("sub1");
    auto endp = sig.lookup("end");
    auto neq0 = sig.lookup("neq0");
    if (!sub1 || !endp || !neq0)
        throw SortError("not the ski signature");
    auto holds = [&](Atom a) { return bool(a >> neq0->second & 1); };

    GuardedLanguage r;
    for (const auto& [s, w] : x) {
        long long c = holds(s.atoms[0]) ? n : 0;
        bool ok = holds(s.atoms[0]) == (c > 0);
        for (int i = 0; ok && i < s.length(); ++i) {
            if (s.progs[i] == sub1->second) {
                if (c == 0) { ok = false; break; }
                --c;
            } else if (s.progs[i] == endp->second) {
                c = 0;
            }
            ok = holds(s.atoms[i + 1]) == (c > 0);
        }
        if (ok) r.emplace(s, w);
    }
    return r;
}

namespace {

ExtNat min_over(const GuardedLanguage& atoms) {
    ExtNat best = ExtNat::infinity();
    for (const auto& [s, w] : atoms) best = min_nat(best, ExtNat::finite(w));
    return best;
}

} // namespace

std::string SkiReport::text() const {
    std::string out;
    out += "ski rental: n=" + std::to_string(n) + ", y=" + std::to_string(y) +
           ", length bound " + std::to_string(bound) + "\n";
    out += "start atom: ";
    out += start_is_neq0 ? "{neq0}" : "{!neq0}";
    out += "\n";
    out += "optimal weight from start (consistent traces): " + fmt_nat(theta_scenario) + "\n";
    out += "optimal weight from {!neq0}: " + fmt_nat(theta_from_not_neq0) + "\n";
    out += "raw optimal from {neq0} (unrestricted language): " +
           fmt_nat(raw_theta_from_neq0) + "\n";
    out += "raw optimal from {!neq0} (unrestricted language): " +
           fmt_nat(raw_theta_from_not_neq0) + "\n";
    out += "chain entry (s" + std::to_string(n) + " -> s0) of the loop program: " +
           fmt_nat(relational_entry) + "\n";
    out += "hypotheses hold in the chain model: ";
    out += hypotheses_hold ? "yes" : "no";
    out += "\n";
    return out;
}

SkiReport ski_case_study(int n, std::uint64_t y) {
    SkiReport rep;
    rep.n = n;
    rep.y = y;
    rep.bound = 2 * n + 4;
    rep.start_is_neq0 = n > 0;

    Signature sig = ski_signature();
    SkiPrograms progs = build_ski_programs(n);
    CanonicalValuation v = canonical_valuation(sig, {1, y});

    GuardedLanguage lang = gt_interpret(*progs.unrolled, v, rep.bound);
    GuardedLanguage consistent = ski_consistent_restriction(lang, sig, n);

    Atom pos = 1, negat = 0;
    rep.theta_scenario = min_over(theta(consistent, {rep.start_is_neq0 ? pos : negat}));
    rep.theta_from_not_neq0 = min_over(theta(consistent, {negat}));
    rep.raw_theta_from_neq0 = min_over(theta(lang, {pos}));
    rep.raw_theta_from_not_neq0 = min_over(theta(lang, {negat}));

    TransitionSystem chain = build_ski_chain(n, y);
    // Hypotheses: n sub1 steps cannot land on a neq0 state, and end cannot
    // either.
    ProgPtr lhs3 = prog_test(bool_var(sig.lookup("neq0")->second));
    for (int i = 0; i < n; ++i)
        lhs3 = prog_seq(prog_atomic(sig.lookup("sub1")->second), std::move(lhs3));
    ProgPtr lhs4 = prog_seq(prog_atomic(sig.lookup("end")->second),
                            prog_test(bool_var(sig.lookup("neq0")->second)));
    WeightedRelation z = rel_zero(chain.ring(), chain.states());
    rep.hypotheses_hold = interpret(*lhs3, chain) == z && interpret(*lhs4, chain) == z;

    WeightedRelation loop = interpret(*progs.loop, chain);
    rep.relational_entry = loop.at(n, 0).as_extnat();
    return rep;
}

} // namespace kawt
