#include "kawt/semiring.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <vector>

namespace kawt {

ExtNat min_nat(ExtNat a, ExtNat b) {
    if (a.is_inf()) return b;
    if (b.is_inf()) return a;
    return ExtNat::finite(std::min(a.value(), b.value()));
}

ExtNat add_nat(ExtNat a, ExtNat b) {
    if (a.is_inf() || b.is_inf()) return ExtNat::infinity();
    std::uint64_t s = a.value() + b.value();
    if (s < a.value()) throw std::overflow_error("extended natural addition overflow");
    return ExtNat::finite(s);
}

bool le_nat(ExtNat a, ExtNat b) {
    if (b.is_inf()) return true;
    if (a.is_inf()) return false;
    return a.value() <= b.value();
}

Rational::Rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::operator+(const Rational& o) const {
    __int128 n = (__int128)num_ * o.den_ + (__int128)o.num_ * den_;
    __int128 d = (__int128)den_ * o.den_;
    // operands stay desk-scale, so the reduced result fits in long long
    return Rational((long long)n, (long long)d);
}

Rational Rational::operator-(const Rational& o) const {
    __int128 n = (__int128)num_ * o.den_ - (__int128)o.num_ * den_;
    __int128 d = (__int128)den_ * o.den_;
    return Rational((long long)n, (long long)d);
}

bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
}

bool operator<=(const Rational& a, const Rational& b) {
    return (__int128)a.num_ * b.den_ <= (__int128)b.num_ * a.den_;
}

bool Value::as_bool() const {
    if (const bool* b = std::get_if<bool>(&v_)) return *b;
    throw SortError("value is not a Boolean carrier element");
}

ExtNat Value::as_extnat() const {
    if (const ExtNat* n = std::get_if<ExtNat>(&v_)) return *n;
    throw SortError("value is not an extended-natural carrier element");
}

const Rational& Value::as_rational() const {
    if (const Rational* r = std::get_if<Rational>(&v_)) return *r;
    throw SortError("value is not a rational carrier element");
}

void Semiring::require_mine(const Value& v) const {
    if (&v.ring() != this)
        throw SortError(std::string("semiring '") + std::string(name()) +
                        "' got a value from instance '" + std::string(v.ring().name()) + "'");
}

namespace {

// ---------------------------------------------------------------- boolean

class BooleanSemiring final : public Semiring {
public:
    std::string_view name() const override { return "bool"; }
    Value zero() const override { return Value(*this, false); }
    Value one() const override { return Value(*this, true); }

    Value add(const Value& x, const Value& y) const override {
        require_mine(x); require_mine(y);
        return Value(*this, x.as_bool() || y.as_bool());
    }
    Value mul(const Value& x, const Value& y) const override {
        require_mine(x); require_mine(y);
        return Value(*this, x.as_bool() && y.as_bool());
    }
    Value sample(std::mt19937_64& rng) const override {
        return Value(*this, (rng() & 1u) == 1u);
    }
    Value parse_literal(std::string_view text) const override {
        if (text == "0") return zero();
        if (text == "1") return one();
        throw SortError("boolean literal must be 0 or 1, got '" + std::string(text) + "'");
    }
    std::string format(const Value& v) const override {
        require_mine(v);
        return v.as_bool() ? "1" : "0";
    }
};

// ---------------------------------------------------------------- tropical

ExtNat parse_extnat(std::string_view text) {
    if (text == "inf") return ExtNat::infinity();
    std::uint64_t n = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (ec != std::errc() || p != text.data() + text.size())
        throw SortError("tropical literal must be a natural number or 'inf', got '" +
                        std::string(text) + "'");
    return ExtNat::finite(n);
}

std::string format_extnat(ExtNat n) {
    return n.is_inf() ? "inf" : std::to_string(n.value());
}

class TropicalSemiring final : public Semiring {
public:
    std::string_view name() const override { return "tropical"; }
    Value zero() const override { return Value(*this, ExtNat::infinity()); }
    Value one() const override { return Value(*this, ExtNat::finite(0)); }

    Value add(const Value& x, const Value& y) const override {
        require_mine(x); require_mine(y);
        return Value(*this, min_nat(x.as_extnat(), y.as_extnat()));
    }
    Value mul(const Value& x, const Value& y) const override {
        require_mine(x); require_mine(y);
        return Value(*this, add_nat(x.as_extnat(), y.as_extnat()));
    }
    Value sample(std::mt19937_64& rng) const override {
        // grid: naturals 0..100 plus infinity
        std::uint64_t k = rng() % 102;
        return Value(*this, k == 101 ? ExtNat::infinity() : ExtNat::finite(k));
    }
    Value parse_literal(std::string_view text) const override {
        return Value(*this, parse_extnat(text));
    }
    std::string format(const Value& v) const override {
        require_mine(v);
        return format_extnat(v.as_extnat());
    }
};

// Same carrier and addition as the tropical instance, but mul is saturating
// subtraction. Distributivity and mul-associativity break, and the law suite
// must notice.
class BrokenTropicalSemiring final : public Semiring {
public:
    std::string_view name() const override { return "broken-tropical"; }
    Value zero() const override { return Value(*this, ExtNat::infinity()); }
    Value one() const override { return Value(*this, ExtNat::finite(0)); }

    Value add(const Value& x, const Value& y) const override {
        require_mine(x); require_mine(y);
        return Value(*this, min_nat(x.as_extnat(), y.as_extnat()));
    }
    Value mul(const Value& x, const Value& y) const override {
        require_mine(x); require_mine(y);
        ExtNat a = x.as_extnat(), b = y.as_extnat();
        if (a.is_inf()) return Value(*this, ExtNat::infinity());
        if (b.is_inf()) return Value(*this, ExtNat::finite(0));
        return Value(*this, ExtNat::finite(a.value() > b.value() ? a.value() - b.value() : 0));
    }
    Value sample(std::mt19937_64& rng) const override {
        std::uint64_t k = rng() % 102;
        return Value(*this, k == 101 ? ExtNat::infinity() : ExtNat::finite(k));
    }
    Value parse_literal(std::string_view text) const override {
        return Value(*this, parse_extnat(text));
    }
    std::string format(const Value& v) const override {
        require_mine(v);
        return format_extnat(v.as_extnat());
    }
};

// ------------------------------------------------------------ lukasiewicz

class LukasiewiczSemiring final : public Semiring {
public:
    std::string_view name() const override { return "lukasiewicz"; }
    Value zero() const override { return Value(*this, Rational(0, 1)); }
    Value one() const override { return Value(*this, Rational(1, 1)); }

    Value add(const Value& x, const Value& y) const override {
        require_mine(x); require_mine(y);
        const Rational &a = x.as_rational(), &b = y.as_rational();
        return Value(*this, a < b ? b : a);
    }
    Value mul(const Value& x, const Value& y) const override {
        require_mine(x); require_mine(y);
        Rational t = x.as_rational() + y.as_rational() - Rational(1, 1);
        if (t < Rational(0, 1)) t = Rational(0, 1);
        return Value(*this, t);
    }
    Value sample(std::mt19937_64& rng) const override {
        // grid: k/32 for k = 0..32
        return Value(*this, Rational((long long)(rng() % 33), 32));
    }
    Value parse_literal(std::string_view text) const override {
        auto bad = [&] {
            return SortError("lukasiewicz literal must be p/q or an integer in [0,1], got '" +
                             std::string(text) + "'");
        };
        long long num = 0, den = 1;
        auto slash = text.find('/');
        std::string_view num_part = text.substr(0, slash);
        auto [p, ec] = std::from_chars(num_part.data(), num_part.data() + num_part.size(), num);
        if (ec != std::errc() || p != num_part.data() + num_part.size()) throw bad();
        if (slash != std::string_view::npos) {
            std::string_view den_part = text.substr(slash + 1);
            auto [q, ec2] = std::from_chars(den_part.data(), den_part.data() + den_part.size(), den);
            if (ec2 != std::errc() || q != den_part.data() + den_part.size() || den <= 0) throw bad();
        }
        Rational r(num, den);
        if (r < Rational(0, 1) || Rational(1, 1) < r)
            throw SortError("lukasiewicz value out of [0,1]: '" + std::string(text) + "'");
        return Value(*this, r);
    }
    std::string format(const Value& v) const override {
        require_mine(v);
        const Rational& r = v.as_rational();
        if (r.den() == 1) return std::to_string(r.num());
        return std::to_string(r.num()) + "/" + std::to_string(r.den());
    }
};

} // namespace

const Semiring& boolean_semiring() {
    static const BooleanSemiring s;
    return s;
}

const Semiring& tropical_semiring() {
    static const TropicalSemiring s;
    return s;
}

const Semiring& lukasiewicz_semiring() {
    static const LukasiewiczSemiring s;
    return s;
}

const Semiring& broken_tropical_semiring() {
    static const BrokenTropicalSemiring s;
    return s;
}

const Semiring* find_semiring(std::string_view name) {
    if (name == "bool" || name == "boolean") return &boolean_semiring();
    if (name == "tropical") return &tropical_semiring();
    if (name == "lukasiewicz") return &lukasiewicz_semiring();
    if (name == "broken-tropical") return &broken_tropical_semiring();
    return nullptr;
}

bool natural_le(const Value& x, const Value& y) {
    if (&x.ring() != &y.ring())
        throw SortError("natural_le on values from different instances");
    if (!x.ring().idempotent())
        throw SortError("natural_le requires an idempotent instance");
    return x.ring().add(x, y) == y;
}

Value big_sum(const Semiring& ring, std::span<const Value> xs) {
    Value acc = ring.zero();
    for (const Value& x : xs) acc = ring.add(acc, x);
    return acc;
}

namespace {

std::string w2(const Semiring& s, const char* n1, const Value& v1) {
    return std::string(n1) + "=" + s.format(v1);
}

} // namespace

AxiomReport check_semiring_axioms(const Semiring& ring, int samples, std::uint64_t seed) {
    AxiomReport rep;
    rep.suite = "semiring(" + std::string(ring.name()) + ")";
    rep.seed = seed;
    rep.samples = samples;
    std::mt19937_64 rng(seed);

    const Value zero = ring.zero(), one = ring.one();
    auto fmt = [&](const Value& v) { return ring.format(v); };

    for (int i = 0; i < samples; ++i) {
        Value x = ring.sample(rng), y = ring.sample(rng), z = ring.sample(rng);
        std::string xyz = w2(ring, "x", x) + " " + w2(ring, "y", y) + " " + w2(ring, "z", z);

        rep.checks_run++;
        if (!(ring.add(x, y) == ring.add(y, x)))
            rep.violation("add-commutativity", xyz);
        rep.checks_run++;
        if (!(ring.add(ring.add(x, y), z) == ring.add(x, ring.add(y, z))))
            rep.violation("add-associativity", xyz);
        rep.checks_run++;
        if (!(ring.add(x, zero) == x))
            rep.violation("add-zero-neutral", w2(ring, "x", x));
        rep.checks_run++;
        if (!(ring.mul(ring.mul(x, y), z) == ring.mul(x, ring.mul(y, z))))
            rep.violation("mul-associativity",
                          xyz + ": (x y) z=" + fmt(ring.mul(ring.mul(x, y), z)) +
                          " x (y z)=" + fmt(ring.mul(x, ring.mul(y, z))));
        rep.checks_run++;
        if (!(ring.mul(one, x) == x && ring.mul(x, one) == x))
            rep.violation("mul-one-neutral", w2(ring, "x", x));
        rep.checks_run++;
        if (!(ring.mul(x, ring.add(y, z)) == ring.add(ring.mul(x, y), ring.mul(x, z))))
            rep.violation("left-distributivity",
                          xyz + ": x (y+z)=" + fmt(ring.mul(x, ring.add(y, z))) +
                          " x y + x z=" + fmt(ring.add(ring.mul(x, y), ring.mul(x, z))));
        rep.checks_run++;
        if (!(ring.mul(ring.add(x, y), z) == ring.add(ring.mul(x, z), ring.mul(y, z))))
            rep.violation("right-distributivity", xyz);
        rep.checks_run++;
        if (!(ring.mul(zero, x) == zero && ring.mul(x, zero) == zero))
            rep.violation("zero-annihilation", w2(ring, "x", x));

        if (ring.idempotent()) {
            rep.checks_run++;
            if (!(ring.add(x, x) == x))
                rep.violation("add-idempotency", w2(ring, "x", x));
            // natural order: reflexive, antisymmetric on witnessed pairs,
            // transitive, with add as least upper bound
            rep.checks_run++;
            if (!natural_le(x, ring.add(x, y)) || !natural_le(y, ring.add(x, y)))
                rep.violation("natural-order-join-upper", xyz);
            rep.checks_run++;
            if (natural_le(x, y) && natural_le(y, x) && !(x == y))
                rep.violation("natural-order-antisymmetry", xyz);
            rep.checks_run++;
            if (natural_le(x, y) && natural_le(y, z) && !natural_le(x, z))
                rep.violation("natural-order-transitivity", xyz);
            rep.checks_run++;
            if (natural_le(x, z) && natural_le(y, z) && !natural_le(ring.add(x, y), z))
                rep.violation("natural-order-join-least", xyz);
        }

        // distributivity over finite families (the desk-scale face of the
        // complete-distributivity laws)
        std::size_t family = rng() % 6;
        std::vector<Value> xs;
        xs.reserve(family);
        for (std::size_t k = 0; k < family; ++k) xs.push_back(ring.sample(rng));
        Value total = big_sum(ring, xs);
        std::vector<Value> lmul, rmul;
        for (const Value& v : xs) {
            lmul.push_back(ring.mul(x, v));
            rmul.push_back(ring.mul(v, x));
        }
        rep.checks_run++;
        if (!(ring.mul(x, total) == big_sum(ring, lmul)))
            rep.violation("sum-left-distributivity",
                          w2(ring, "x", x) + " over family of " + std::to_string(family));
        rep.checks_run++;
        if (!(ring.mul(total, x) == big_sum(ring, rmul)))
            rep.violation("sum-right-distributivity",
                          w2(ring, "x", x) + " over family of " + std::to_string(family));
    }
    return rep;
}

} // namespace kawt
