#include "kawt/psg.hpp"

#include <algorithm>
#include <random>

#include "kawt/tg.hpp"

namespace kawt {

namespace {

PartialSemigroup blank(std::string name, std::vector<std::string> labels) {
    PartialSemigroup p;
    p.name = std::move(name);
    p.labels = std::move(labels);
    std::size_t n = p.labels.size();
    p.identity.assign(n, 0);
    p.defined.assign(n * n, 0);
    p.product.assign(n * n, -1);
    return p;
}

} // namespace

PartialSemigroup make_cart(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    PartialSemigroup p = blank("cart(" + std::to_string(n) + ")", std::move(labels));
    for (int i = 0; i < n; ++i) p.identity[std::size_t(i) * n + i] = 1;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                p.set_product(a * n + b, b * n + c, a * n + c);
    return p;
}

PartialSemigroup make_guarded_psg(const Signature& sig, int bound) {
    StringUniverse u(sig, bound);
    std::vector<std::string> labels;
    for (int i = 0; i < u.size(); ++i) {
        const GuardedString& s = u.at(i);
        std::string l = render_atom(s.atoms[0], sig);
        for (std::size_t k = 0; k < s.progs.size(); ++k)
            l += " " + sig.programs()[s.progs[k]] + " " + render_atom(s.atoms[k + 1], sig);
        labels.push_back(std::move(l));
    }
    PartialSemigroup p = blank("gu(bound " + std::to_string(bound) + ")", std::move(labels));
    for (int i = 0; i < u.size(); ++i) p.identity[i] = u.is_atom(i);
    for (int x = 0; x < u.size(); ++x)
        for (int y = 0; y < u.size(); ++y) {
            const GuardedString& sx = u.at(x);
            const GuardedString& sy = u.at(y);
            if (sx.last() != sy.first()) continue;
            if (sx.length() + sy.length() > bound) continue;
            auto joined = coalesce({sx, 0}, {sy, 0});
            p.set_product(x, y, u.index(joined->base));
        }
    return p;
}

PartialSemigroup make_string_psg(int alphabet, int bound, bool restrict_defined) {
    std::vector<std::string> strings{""};
    std::vector<std::string> frontier{""};
    for (int len = 1; len <= bound; ++len) {
        std::vector<std::string> next;
        for (const std::string& s : frontier)
            for (int c = 0; c < alphabet; ++c)
                next.push_back(s + char('a' + c));
        strings.insert(strings.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::sort(strings.begin(), strings.end());
    std::vector<std::string> labels;
    for (const std::string& s : strings) labels.push_back(s.empty() ? "eps" : s);
    PartialSemigroup p =
        blank("str(" + std::to_string(alphabet) + ", bound " + std::to_string(bound) +
                  (restrict_defined ? ")" : ", unrestricted)"),
              std::move(labels));
    auto index_of = [&](const std::string& s) -> int {
        auto it = std::lower_bound(strings.begin(), strings.end(), s);
        return it != strings.end() && *it == s ? int(it - strings.begin()) : -1;
    };
    p.identity[index_of("")] = 1;
    int n = int(strings.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            bool fits = int(strings[x].size() + strings[y].size()) <= bound;
            if (!fits && !restrict_defined) {
                // D claims the pair, but the fragment has no product for it.
                p.defined[std::size_t(x) * n + y] = 1;
                continue;
            }
            if (fits) p.set_product(x, y, index_of(strings[x] + strings[y]));
        }
    return p;
}

PartialSemigroup make_broken_cart(int n) {
    if (n < 3) throw SortError("broken cart needs at least three points");
    PartialSemigroup p = make_cart(n);
    p.name = "broken-" + p.name;
    // (0,1) . (1,2) now lands on (0,0) instead of (0,2).
    p.product[std::size_t(0 * n + 1) * p.size() + (1 * n + 2)] = 0;
    return p;
}

PartialSemigroup make_weak_assoc_psg() {
    PartialSemigroup p = blank("weak-assoc", {"e", "p", "q", "r", "s", "t"});
    p.identity[0] = 1;
    for (int x = 0; x < p.size(); ++x) {
        p.set_product(0, x, x);
        p.set_product(x, 0, x);
    }
    p.set_product(1, 2, 4); // p q = s
    p.set_product(4, 3, 5); // s r = t
    return p;
}

AxiomReport check_psg_axioms(const PartialSemigroup& p) {
    AxiomReport rep;
    rep.suite = "psg(" + p.name + ")";
    rep.seed = 0;
    rep.samples = p.size();
    int n = p.size();

    auto lbl = [&](int x) { return p.labels[x]; };
    // A defined pair whose product is absent can't be reasoned about; report
    // it once and treat the pair as unusable below.
    auto usable = [&](int x, int y) { return p.is_defined(x, y) && p.prod(x, y) >= 0; };

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            rep.checks_run++;
            if (p.is_defined(x, y) && p.prod(x, y) < 0)
                rep.violation("product-total-on-D",
                              lbl(x) + " . " + lbl(y) + " is declared defined but has no product in the carrier");
        }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if ((p.is_defined(x, y) && !usable(x, y)) ||
                    (p.is_defined(y, z) && !usable(y, z)))
                    continue; // already reported above
                bool lhs = usable(x, y) && p.is_defined(p.prod(x, y), z);
                bool rhs = usable(y, z) && p.is_defined(x, p.prod(y, z));
                rep.checks_run++;
                if (lhs != rhs) {
                    rep.violation("interchange",
                                  "D(" + lbl(x) + "," + lbl(y) + ") & D(" +
                                      (usable(x, y) ? lbl(p.prod(x, y)) : "?") + "," + lbl(z) +
                                      ") does not match D(" + lbl(y) + "," + lbl(z) + ") & D(" +
                                      lbl(x) + "," + (usable(y, z) ? lbl(p.prod(y, z)) : "?") + ")");
                    continue;
                }
                if (!lhs) continue;
                if (!usable(p.prod(x, y), z) || !usable(x, p.prod(y, z))) continue;
                rep.checks_run++;
                int a = p.prod(p.prod(x, y), z);
                int b = p.prod(x, p.prod(y, z));
                if (a != b)
                    rep.violation("associativity",
                                  "(" + lbl(x) + " " + lbl(y) + ") " + lbl(z) + " = " + lbl(a) +
                                      " but " + lbl(x) + " (" + lbl(y) + " " + lbl(z) + ") = " + lbl(b));
            }

    for (int x = 0; x < n; ++x) {
        bool right = false, left = false;
        for (int y = 0; y < n; ++y) {
            if (p.identity[y] && p.is_defined(x, y)) right = true;
            if (p.identity[y] && p.is_defined(y, x)) left = true;
        }
        rep.checks_run += 2;
        if (!right) rep.violation("right-identity-exists", lbl(x) + " has no identity on the right");
        if (!left) rep.violation("left-identity-exists", lbl(x) + " has no identity on the left");
    }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (p.identity[y] && usable(x, y)) {
                rep.checks_run++;
                if (p.prod(x, y) != x)
                    rep.violation("right-identity-neutral",
                                  lbl(x) + " " + lbl(y) + " = " + lbl(p.prod(x, y)));
            }
            if (p.identity[y] && usable(y, x)) {
                rep.checks_run++;
                if (p.prod(y, x) != x)
                    rep.violation("left-identity-neutral",
                                  lbl(y) + " " + lbl(x) + " = " + lbl(p.prod(y, x)));
            }
        }

    // Derived laws: identities are their own squares, and identities are
    // closed under defined products.
    for (int x = 0; x < n; ++x) {
        if (!p.identity[x]) continue;
        rep.checks_run++;
        if (!usable(x, x) || p.prod(x, x) != x)
            rep.violation("identity-idempotent", lbl(x) + " is not a defined fixed square");
        for (int y = 0; y < n; ++y) {
            if (!p.identity[y] || !usable(x, y)) continue;
            rep.checks_run++;
            if (!p.identity[p.prod(x, y)])
                rep.violation("identity-closed", lbl(x) + " " + lbl(y) + " = " +
                                                     lbl(p.prod(x, y)) + " is not an identity");
        }
    }
    return rep;
}

SpAlgebra::SpAlgebra(const PartialSemigroup& p, const Semiring& s)
    : p_(&p), s_(&s), fixed_identity_(-1) {
    for (int i = 0; i < p.size() && fixed_identity_ < 0; ++i)
        if (p.identity[i]) fixed_identity_ = i;
    if (fixed_identity_ < 0)
        throw SortError("partial semigroup has no identity element");
}

SpAlgebra::Fun SpAlgebra::zero() const {
    return Fun(p_->size(), s_->zero());
}

SpAlgebra::Fun SpAlgebra::one() const {
    Fun f(p_->size(), s_->zero());
    for (int i = 0; i < p_->size(); ++i)
        if (p_->identity[i]) f[i] = s_->one();
    return f;
}

SpAlgebra::Fun SpAlgebra::add(const Fun& a, const Fun& b) const {
    Fun f(p_->size(), s_->zero());
    for (int i = 0; i < p_->size(); ++i) f[i] = s_->add(a[i], b[i]);
    return f;
}

SpAlgebra::Fun SpAlgebra::mul(const Fun& a, const Fun& b) const {
    std::vector<std::vector<Value>> buckets(p_->size());
    for (int y = 0; y < p_->size(); ++y)
        for (int z = 0; z < p_->size(); ++z) {
            if (!p_->is_defined(y, z)) continue;
            int x = p_->prod(y, z);
            if (x < 0)
                throw SortError("product missing on a defined pair of " + p_->name);
            buckets[x].push_back(s_->mul(a[y], b[z]));
        }
    Fun f(p_->size(), s_->zero());
    for (int x = 0; x < p_->size(); ++x) f[x] = big_sum(*s_, buckets[x]);
    return f;
}

SpAlgebra::Fun SpAlgebra::star(const Fun& a, int cap, int* iterations) const {
    if (cap <= 0) cap = p_->size() + 1;
    Fun s = one();
    for (int k = 0; k <= cap; ++k) {
        Fun next = add(one(), mul(a, s));
        if (next == s) {
            if (iterations) *iterations = k;
            return s;
        }
        s = std::move(next);
    }
    throw StarDivergence("function-algebra star did not stabilize within " +
                         std::to_string(cap) + " iterations over " + p_->name);
}

SpAlgebra::Fun SpAlgebra::neg(const Fun& t) const {
    if (!in_tests(t)) throw SortError("complement applies to tests only");
    Fun f(p_->size(), s_->zero());
    for (int i = 0; i < p_->size(); ++i)
        if (p_->identity[i] && t[i] == s_->zero()) f[i] = s_->one();
    return f;
}

bool SpAlgebra::in_tests(const Fun& a) const {
    for (int i = 0; i < p_->size(); ++i) {
        if (!(a[i] == s_->zero() || a[i] == s_->one())) return false;
        if (a[i] == s_->one() && !p_->identity[i]) return false;
    }
    return true;
}

bool SpAlgebra::in_weights(const Fun& a) const {
    for (int i = 0; i < p_->size(); ++i) {
        if (p_->identity[i]) {
            if (!(a[i] == a[fixed_identity_])) return false;
        } else if (!(a[i] == s_->zero())) {
            return false;
        }
    }
    return true;
}

bool SpAlgebra::le(const Fun& a, const Fun& b) const {
    return add(a, b) == b;
}

Value SpAlgebra::phi(const Fun& w) const {
    return w[fixed_identity_];
}

SpAlgebra::Fun SpAlgebra::constant_weight(const Value& v) const {
    Fun f(p_->size(), s_->zero());
    for (int i = 0; i < p_->size(); ++i)
        if (p_->identity[i]) f[i] = v;
    return f;
}

std::string SpAlgebra::show(const Fun& a) const {
    std::string out = "{";
    bool any = false;
    for (int i = 0; i < p_->size(); ++i) {
        if (a[i] == s_->zero()) continue;
        if (any) out += ", ";
        out += p_->labels[i] + ":" + s_->format(a[i]);
        any = true;
    }
    return out + "}";
}

AxiomReport check_theorem1(const PartialSemigroup& p, const Semiring& s,
                           int samples, std::uint64_t seed) {
    AxiomReport rep;
    rep.suite = "thm1(" + p.name + ", " + std::string(s.name()) + ")";
    rep.seed = seed;
    rep.samples = samples;

    SpAlgebra alg(p, s);
    std::mt19937_64 rng(seed);
    using Fun = SpAlgebra::Fun;

    auto eq = [&](const char* law, const Fun& got, const Fun& want, const std::string& w) {
        rep.checks_run++;
        if (!(got == want))
            rep.violation(law, w + ": got " + alg.show(got) + " want " + alg.show(want));
    };
    auto below = [&](const char* law, const Fun& lo, const Fun& hi, const std::string& w) {
        rep.checks_run++;
        if (!alg.le(lo, hi))
            rep.violation(law, w + ": " + alg.show(lo) + " not below " + alg.show(hi));
    };
    auto truth = [&](const char* law, bool ok, const std::string& w) {
        rep.checks_run++;
        if (!ok) rep.violation(law, w);
    };

    auto random_fun = [&] {
        Fun f(p.size(), s.zero());
        for (int i = 0; i < p.size(); ++i) f[i] = s.sample(rng);
        return f;
    };
    auto random_test = [&] {
        Fun f(p.size(), s.zero());
        for (int i = 0; i < p.size(); ++i)
            if (p.identity[i] && rng() % 2) f[i] = s.one();
        return f;
    };

    const Fun one = alg.one();
    const Fun zero = alg.zero();

    for (int it = 0; it < samples; ++it) {
        Fun x = random_fun(), y = random_fun(), z = random_fun();
        std::string w = "x=" + alg.show(x) + " y=" + alg.show(y) + " z=" + alg.show(z);

        eq("add-commutativity", alg.add(x, y), alg.add(y, x), w);
        eq("add-associativity", alg.add(alg.add(x, y), z), alg.add(x, alg.add(y, z)), w);
        eq("add-idempotency", alg.add(x, x), x, w);
        eq("add-zero-neutral", alg.add(x, zero), x, w);
        eq("mul-associativity", alg.mul(alg.mul(x, y), z), alg.mul(x, alg.mul(y, z)), w);
        eq("mul-one-left", alg.mul(one, x), x, w);
        eq("mul-one-right", alg.mul(x, one), x, w);
        eq("left-distributivity", alg.mul(x, alg.add(y, z)),
           alg.add(alg.mul(x, y), alg.mul(x, z)), w);
        eq("right-distributivity", alg.mul(alg.add(x, y), z),
           alg.add(alg.mul(x, z), alg.mul(y, z)), w);
        eq("zero-annihilation-left", alg.mul(zero, x), zero, w);
        eq("zero-annihilation-right", alg.mul(x, zero), zero, w);

        try {
            int stab = 0;
            Fun xs = alg.star(x, 0, &stab);
            eq("star-fixpoint", xs, alg.add(one, alg.mul(x, xs)), w);
            below("star-unfold-left", alg.add(one, alg.mul(x, xs)), xs, w);
            below("star-unfold-right", alg.add(one, alg.mul(xs, x)), xs, w);

            Fun u = random_fun();
            Fun z0 = alg.mul(xs, alg.add(y, u));
            truth("star-left-induction-premise",
                  alg.le(alg.add(y, alg.mul(x, z0)), z0), w + " u=" + alg.show(u));
            below("star-left-induction", alg.mul(xs, y), z0, w + " u=" + alg.show(u));
            Fun z1 = alg.mul(alg.add(y, u), xs);
            truth("star-right-induction-premise",
                  alg.le(alg.add(y, alg.mul(z1, x)), z1), w + " u=" + alg.show(u));
            below("star-right-induction", alg.mul(y, xs), z1, w + " u=" + alg.show(u));
            if (alg.le(alg.add(y, alg.mul(x, z)), z))
                below("star-left-induction-random", alg.mul(xs, y), z, w);
            if (alg.le(alg.add(y, alg.mul(z, x)), z))
                below("star-right-induction-random", alg.mul(y, xs), z, w);

            // delta x* theta as a finite sum at the stabilization point.
            Fun sum = alg.mul(y, z);
            Fun pow = one;
            for (int k = 1; k <= stab; ++k) {
                pow = alg.mul(pow, x);
                sum = alg.add(sum, alg.mul(alg.mul(y, pow), z));
            }
            eq("star-continuity", alg.mul(alg.mul(y, xs), z), sum,
               w + " (K=" + std::to_string(stab) + ")");
        } catch (const StarDivergence& e) {
            rep.checks_run++;
            rep.violation("star-stabilization", w + ": " + e.what());
        }

        Fun t0 = random_test(), t1 = random_test(), t2 = random_test();
        std::string wt = "s=" + alg.show(t0) + " t=" + alg.show(t1) + " v=" + alg.show(t2);
        truth("tests-closed-under-add", alg.in_tests(alg.add(t0, t1)), wt);
        truth("tests-closed-under-mul", alg.in_tests(alg.mul(t0, t1)), wt);
        truth("tests-closed-under-neg", alg.in_tests(alg.neg(t0)), wt);
        eq("test-meet-idempotent", alg.mul(t0, t0), t0, wt);
        eq("test-meet-commutative", alg.mul(t0, t1), alg.mul(t1, t0), wt);
        eq("test-excluded-middle", alg.add(t0, alg.neg(t0)), one, wt);
        eq("test-contradiction", alg.mul(t0, alg.neg(t0)), zero, wt);
        eq("test-double-negation", alg.neg(alg.neg(t0)), t0, wt);
        eq("test-de-morgan", alg.neg(alg.add(t0, t1)),
           alg.mul(alg.neg(t0), alg.neg(t1)), wt);
        eq("test-join-over-meet", alg.add(t0, alg.mul(t1, t2)),
           alg.mul(alg.add(t0, t1), alg.add(t0, t2)), wt);
        below("test-below-one", t0, one, wt);

        Value a = s.sample(rng), b = s.sample(rng);
        Fun wa = alg.constant_weight(a), wb = alg.constant_weight(b);
        std::string ww = "a=" + s.format(a) + " b=" + s.format(b);
        truth("weights-closed-under-add", alg.in_weights(alg.add(wa, wb)), ww);
        truth("weights-closed-under-mul", alg.in_weights(alg.mul(wa, wb)), ww);
        // The product of weights is pointwise on identities and vanishes
        // elsewhere.
        Fun prod = alg.mul(wa, wb);
        bool pointwise = true;
        for (int i = 0; i < p.size(); ++i) {
            if (p.identity[i] ? !(prod[i] == s.mul(a, b)) : !(prod[i] == s.zero()))
                pointwise = false;
        }
        truth("weight-product-pointwise", pointwise, ww + " got " + alg.show(prod));
        truth("phi-preserves-add", alg.phi(alg.add(wa, wb)) == s.add(a, b), ww);
        truth("phi-preserves-mul", alg.phi(prod) == s.mul(a, b), ww);
        truth("phi-preserves-one", alg.phi(one) == s.one(), ww);
        truth("phi-preserves-zero", alg.phi(zero) == s.zero(), ww);
        truth("phi-injective", (alg.phi(wa) == alg.phi(wb)) == (wa == wb), ww);
        truth("phi-surjective", alg.in_weights(wa) && alg.phi(wa) == a, ww);
    }
    return rep;
}

} // namespace kawt
