#ifndef KAWT_PSG_HPP
#define KAWT_PSG_HPP

#include <string>
#include <vector>

#include "kawt/ast.hpp"
#include "kawt/report.hpp"
#include "kawt/semiring.hpp"

namespace kawt {

// A finite partial semigroup with identity: a carrier with a definedness
// relation, a product on the defined pairs, and a set of identity elements.
// Infinite carriers are represented by length-bounded fragments whose
// definedness relation excludes products that would leave the fragment.
struct PartialSemigroup {
    std::string name;
    std::vector<std::string> labels;
    std::vector<char> identity;  // I membership per element
    std::vector<char> defined;   // row-major |G| x |G|
    std::vector<int> product;    // row-major; -1 where undefined or missing

    int size() const { return int(labels.size()); }
    bool is_defined(int x, int y) const {
        return defined[std::size_t(x) * labels.size() + y];
    }
    int prod(int x, int y) const {
        return product[std::size_t(x) * labels.size() + y];
    }
    void set_product(int x, int y, int z) {
        defined[std::size_t(x) * labels.size() + y] = 1;
        product[std::size_t(x) * labels.size() + y] = z;
    }
};

// Pairs composing when the middle components agree; identities are the
// diagonal pairs.
PartialSemigroup make_cart(int n);

// Guarded strings up to a length bound under coalesced product, with
// definedness restricted to stay within the bound; identities are the atoms.
PartialSemigroup make_guarded_psg(const Signature& sig, int bound);

// Plain strings over an alphabet up to a length bound under concatenation;
// the identity is the empty string. restrict_defined keeps the fragment
// honest; passing false leaves D universal, which the axiom checker must
// reject because products then fall outside the fragment.
PartialSemigroup make_string_psg(int alphabet, int bound, bool restrict_defined = true);

// Cart with one product redirected to a wrong value. The axiom suite and the
// function-algebra suite must both detect it.
PartialSemigroup make_broken_cart(int n);

// A six-element instance satisfying only the weaker classical notion of
// partial semigroup: products p q = s and s r = t exist, but q r is
// undefined. The strengthened interchange condition fails on (p, q, r), and
// the function algebra over it has a genuine associativity failure.
PartialSemigroup make_weak_assoc_psg();

// Exhaustively verifies the six defining conditions, that the product is
// present on every defined pair, and the derived identity laws.
AxiomReport check_psg_axioms(const PartialSemigroup& p);

// The algebra of S-valued functions on a partial semigroup: the generic
// construction whose instances include weighted relations and weighted
// guarded languages.
class SpAlgebra {
public:
    using Fun = std::vector<Value>;

    SpAlgebra(const PartialSemigroup& p, const Semiring& s);

    const PartialSemigroup& psg() const { return *p_; }
    const Semiring& ring() const { return *s_; }

    Fun zero() const;
    Fun one() const;
    Fun add(const Fun& a, const Fun& b) const;
    Fun mul(const Fun& a, const Fun& b) const;
    // Partial sums to stabilization; cap <= 0 means |G| + 1. iterations, when
    // given, receives the index of the first repeated partial sum.
    Fun star(const Fun& a, int cap = 0, int* iterations = nullptr) const;
    Fun neg(const Fun& t) const;

    bool in_tests(const Fun& a) const;   // B membership
    bool in_weights(const Fun& a) const; // W membership
    bool le(const Fun& a, const Fun& b) const;

    // The isomorphism W -> S: evaluation at a fixed identity element (the
    // least one in carrier order).
    Value phi(const Fun& w) const;
    Fun constant_weight(const Value& v) const;

    std::string show(const Fun& a) const;

private:
    const PartialSemigroup* p_;
    const Semiring* s_;
    int fixed_identity_;
};

// Randomized structure suite over S^P: idempotent-semiring laws, star laws
// with both induction rules, sampled *-continuity, Boolean-algebra laws on
// B, W-closure with the pointwise product identity on I, and phi being a
// bijective homomorphism onto S. Backs the thm1 suite of the CLI.
AxiomReport check_theorem1(const PartialSemigroup& p, const Semiring& s,
                           int samples, std::uint64_t seed);

} // namespace kawt

#endif
