#include "kawt/tg.hpp"

#include <algorithm>
#include <random>

namespace kawt {

StringUniverse::StringUniverse(const Signature& sig, int bound)
    : sig_(&sig), bound_(bound) {
    // Grow strings breadth-first by length, then normalize to map order.
    std::vector<GuardedString> frontier;
    for (std::uint32_t a = 0; a < sig.atom_count(); ++a)
        frontier.push_back(atom_string(a));
    strings_ = frontier;
    for (int len = 1; len <= bound; ++len) {
        std::vector<GuardedString> next;
        for (const GuardedString& s : frontier)
            for (std::size_t p = 0; p < sig.programs().size(); ++p)
                for (std::uint32_t a = 0; a < sig.atom_count(); ++a) {
                    GuardedString t = s;
                    t.progs.push_back(int(p));
                    t.atoms.push_back(a);
                    next.push_back(std::move(t));
                }
        strings_.insert(strings_.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::sort(strings_.begin(), strings_.end());
    for (int i = 0; i < int(strings_.size()); ++i) index_.emplace(strings_[i], i);
}

int StringUniverse::index(const GuardedString& s) const {
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
}

TgFun tg_zero(const StringUniverse& u) {
    return TgFun(u.size(), ExtNat::infinity());
}

TgFun tg_one(const StringUniverse& u) {
    TgFun f(u.size(), ExtNat::infinity());
    for (int i = 0; i < u.size(); ++i)
        if (u.is_atom(i)) f[i] = ExtNat::finite(0);
    return f;
}

TgFun tg_add(const TgFun& a, const TgFun& b) {
    if (a.size() != b.size()) throw SortError("weight maps over different universes");
    TgFun f(a.size(), ExtNat::infinity());
    for (std::size_t i = 0; i < a.size(); ++i) f[i] = min_nat(a[i], b[i]);
    return f;
}

TgFun tg_mul(const StringUniverse& u, const TgFun& a, const TgFun& b) {
    if (int(a.size()) != u.size() || int(b.size()) != u.size())
        throw SortError("weight map does not match the universe");
    TgFun f(u.size(), ExtNat::infinity());
    for (int i = 0; i < u.size(); ++i) {
        const GuardedString& s = u.at(i);
        ExtNat best = ExtNat::infinity();
        for (int cut = 0; cut <= s.length(); ++cut) {
            GuardedString t{{s.atoms.begin(), s.atoms.begin() + cut + 1},
                            {s.progs.begin(), s.progs.begin() + cut}};
            GuardedString v{{s.atoms.begin() + cut, s.atoms.end()},
                            {s.progs.begin() + cut, s.progs.end()}};
            ExtNat lhs = a[u.index(t)];
            ExtNat rhs = b[u.index(v)];
            if (lhs.is_inf() || rhs.is_inf()) continue;
            best = min_nat(best, add_nat(lhs, rhs));
        }
        f[i] = best;
    }
    return f;
}

TgFun tg_star(const StringUniverse& u, const TgFun& a, int cap) {
    if (cap <= 0) cap = u.size() + 1;
    TgFun s = tg_one(u);
    for (int k = 0; k <= cap; ++k) {
        TgFun next = tg_add(tg_one(u), tg_mul(u, a, s));
        if (next == s) return s;
        s = std::move(next);
    }
    throw StarDivergence("weight-map star did not stabilize within " +
                         std::to_string(cap) + " iterations");
}

TgFun tg_neg(const StringUniverse& u, const TgFun& t) {
    if (!tg_is_test(u, t))
        throw SortError("complement applies to tests only");
    TgFun f(u.size(), ExtNat::infinity());
    for (int i = 0; i < u.size(); ++i)
        if (u.is_atom(i) && t[i].is_inf()) f[i] = ExtNat::finite(0);
    return f;
}

bool tg_is_test(const StringUniverse& u, const TgFun& a) {
    for (int i = 0; i < u.size(); ++i) {
        if (a[i].is_inf()) continue;
        if (a[i].value() != 0 || !u.is_atom(i)) return false;
    }
    return true;
}

bool tg_is_weight(const StringUniverse& u, const TgFun& a) {
    ExtNat on_identity = ExtNat::infinity();
    bool first = true;
    for (int i = 0; i < u.size(); ++i) {
        if (!u.is_atom(i)) {
            if (!a[i].is_inf()) return false;
            continue;
        }
        if (first) { on_identity = a[i]; first = false; }
        else if (!(a[i] == on_identity)) return false;
    }
    return true;
}

GuardedLanguage tau(const StringUniverse& u, const TgFun& a) {
    GuardedLanguage x;
    for (int i = 0; i < u.size(); ++i)
        if (!a[i].is_inf()) x.emplace(u.at(i), a[i].value());
    return x;
}

namespace {

TgFun random_fun(const StringUniverse& u, std::mt19937_64& rng) {
    TgFun f(u.size(), ExtNat::infinity());
    for (int i = 0; i < u.size(); ++i)
        if (rng() % 2) f[i] = ExtNat::finite(rng() % 6);
    return f;
}

TgFun random_test_fun(const StringUniverse& u, std::mt19937_64& rng) {
    TgFun f(u.size(), ExtNat::infinity());
    for (int i = 0; i < u.size(); ++i)
        if (u.is_atom(i) && rng() % 2) f[i] = ExtNat::finite(0);
    return f;
}

std::string show(const StringUniverse& u, const TgFun& a) {
    return "{" + [&] {
        std::string body;
        for (int i = 0; i < u.size(); ++i) {
            if (a[i].is_inf()) continue;
            if (!body.empty()) body += ", ";
            body += render_guarded_string(u.at(i), a[i].value(), u.sig());
        }
        return body;
    }() + "}";
}

} // namespace

AxiomReport check_tau_iso(int bound, const Signature& sig, int samples,
                          std::uint64_t seed) {
    AxiomReport rep;
    rep.suite = "tau(bound " + std::to_string(bound) + ")";
    rep.seed = seed;
    rep.samples = samples;

    StringUniverse u(sig, bound);
    std::mt19937_64 rng(seed);

    auto lang_eq = [&](const char* law, const GuardedLanguage& got,
                       const GuardedLanguage& want, const std::string& witness) {
        rep.checks_run++;
        if (got != want) rep.violation(law, witness);
    };
    auto truth = [&](const char* law, bool ok, const std::string& witness) {
        rep.checks_run++;
        if (!ok) rep.violation(law, witness);
    };

    lang_eq("tau-of-one", tau(u, tg_one(u)), unit_language(sig), "constant");
    lang_eq("tau-of-zero", tau(u, tg_zero(u)), GuardedLanguage{}, "constant");

    for (int it = 0; it < samples; ++it) {
        TgFun a = random_fun(u, rng);
        TgFun b = random_fun(u, rng);
        std::string w = "a=" + show(u, a) + " b=" + show(u, b);

        lang_eq("tau-add", tau(u, tg_add(a, b)),
                unamb_union(tau(u, a), tau(u, b)), w);
        lang_eq("tau-mul", tau(u, tg_mul(u, a, b)),
                gt_product(tau(u, a), tau(u, b), bound), w);
        lang_eq("tau-star", tau(u, tg_star(u, a)),
                gt_star(tau(u, a), bound, sig), w);

        TgFun t = random_test_fun(u, rng);
        std::string wt = "t=" + show(u, t);
        truth("test-membership-forward", tg_is_test(u, t) && is_atom_test(tau(u, t)), wt);
        lang_eq("tau-neg", tau(u, tg_neg(u, t)), atom_complement(tau(u, t), sig), wt);

        // Membership must transfer in both directions for arbitrary maps.
        truth("test-membership", tg_is_test(u, a) == is_atom_test(tau(u, a)), w);
        GuardedLanguage ga = tau(u, a);
        bool atoms_only = true;
        for (const auto& [s, wgt] : ga)
            if (s.length() != 0) atoms_only = false;
        bool gt_weight = ga.empty() ||
                         (is_uniform(ga) && atoms_only && is_universal_on_atoms(ga, sig));
        truth("weight-membership", tg_is_weight(u, a) == gt_weight, w);

        // Weight subalgebra sample: a constant function on the identity set.
        std::uint64_t c = rng() % 6;
        TgFun wf(u.size(), ExtNat::infinity());
        for (int i = 0; i < u.size(); ++i)
            if (u.is_atom(i)) wf[i] = ExtNat::finite(c);
        truth("weight-membership-constant", tg_is_weight(u, wf),
              "c=" + std::to_string(c));
        truth("weight-closed-under-mul",
              tg_is_weight(u, tg_mul(u, wf, wf)), "c=" + std::to_string(c));
    }
    return rep;
}

} // namespace kawt
