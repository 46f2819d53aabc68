#ifndef KAWT_SEMIRING_HPP
#define KAWT_SEMIRING_HPP

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "kawt/report.hpp"

namespace kawt {

// Thrown when operands of different semiring instances are mixed, or when a
// value of the wrong carrier reaches an instance.
struct SortError : std::runtime_error {
    explicit SortError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a Kleene-star partial-sum iteration fails to reach a fixpoint
// within its cap. Never a silent truncation.
struct StarDivergence : std::runtime_error {
    explicit StarDivergence(const std::string& msg) : std::runtime_error(msg) {}
};

// Natural number extended with a distinguished infinity. Infinity is a flag,
// not a sentinel numeral, so arithmetic overflow can never alias it.
class ExtNat {
public:
    constexpr ExtNat() : n_(0), inf_(false) {}
    static constexpr ExtNat finite(std::uint64_t n) { return ExtNat(n, false); }
    static constexpr ExtNat infinity() { return ExtNat(0, true); }

    constexpr bool is_inf() const { return inf_; }
    constexpr std::uint64_t value() const { return n_; } // only meaningful when finite

    friend constexpr bool operator==(ExtNat a, ExtNat b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.n_ == b.n_);
    }

private:
    constexpr ExtNat(std::uint64_t n, bool inf) : n_(inf ? 0 : n), inf_(inf) {}
    std::uint64_t n_;
    bool inf_;
};

ExtNat min_nat(ExtNat a, ExtNat b);
ExtNat add_nat(ExtNat a, ExtNat b); // throws std::overflow_error on wraparound
bool le_nat(ExtNat a, ExtNat b);    // numeric order, infinity greatest

// Exact rational, normalized (den > 0, gcd(num, den) = 1).
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(long long num, long long den);
    static Rational of_int(long long n) { return Rational(n, 1); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator<=(const Rational& a, const Rational& b);

private:
    long long num_;
    long long den_;
};

class Semiring;

// A value tagged with the instance it came from. Instances refuse to operate
// on foreign values, which turns cross-instance mixups into sort errors
// instead of silent garbage.
class Value {
public:
    using Payload = std::variant<bool, ExtNat, Rational>;

    Value(const Semiring& ring, Payload v) : ring_(&ring), v_(std::move(v)) {}

    const Semiring& ring() const { return *ring_; }
    bool as_bool() const;
    ExtNat as_extnat() const;
    const Rational& as_rational() const;

    friend bool operator==(const Value& a, const Value& b) {
        return a.ring_ == b.ring_ && a.v_ == b.v_;
    }

private:
    const Semiring* ring_;
    Payload v_;
};

// A complete idempotent semiring instance (a quantale at desk scale: sums we
// form are finite, and Kleene stars elsewhere rely on stabilizing partial
// sums rather than a literal infinite supremum).
class Semiring {
public:
    virtual ~Semiring() = default;

    virtual std::string_view name() const = 0;
    virtual bool idempotent() const { return true; }
    virtual bool complete() const { return true; }

    virtual Value zero() const = 0;
    virtual Value one() const = 0;
    virtual Value add(const Value& x, const Value& y) const = 0;
    virtual Value mul(const Value& x, const Value& y) const = 0;

    // Deterministic sample from the instance's test-value grid.
    virtual Value sample(std::mt19937_64& rng) const = 0;

    virtual Value parse_literal(std::string_view text) const = 0;
    virtual std::string format(const Value& v) const = 0;

protected:
    void require_mine(const Value& v) const;
};

const Semiring& boolean_semiring();
const Semiring& tropical_semiring();
const Semiring& lukasiewicz_semiring();

// Deliberately defective tropical variant (mul is saturating subtraction).
// Exists so the axiom suites can demonstrate that they catch real failures.
const Semiring& broken_tropical_semiring();

// Lookup by name ("bool"/"boolean", "tropical", "lukasiewicz",
// "broken-tropical"); nullptr when unknown.
const Semiring* find_semiring(std::string_view name);

// x is below y in the natural order iff x + y = y. Meaningful for idempotent
// instances, where this order is a join-semilattice with join = add.
bool natural_le(const Value& x, const Value& y);

// Finite sum; the empty sum is zero.
Value big_sum(const Semiring& ring, std::span<const Value> xs);

// Randomized law suite: semiring axioms, idempotency, annihilation, the
// natural order being a partial order with add as join, and distributivity
// of mul over finite sums of sampled families.
AxiomReport check_semiring_axioms(const Semiring& ring, int samples, std::uint64_t seed);

} // namespace kawt

#endif
