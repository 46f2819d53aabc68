#ifndef KAWT_TG_HPP
#define KAWT_TG_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "kawt/guarded.hpp"
#include "kawt/report.hpp"

namespace kawt {

// Every guarded string over the signature with at most `bound` program
// symbols, in map order, with an index for splitting lookups. Length-0
// strings (the bare atoms) form the identity set.
class StringUniverse {
public:
    StringUniverse(const Signature& sig, int bound);

    const Signature& sig() const { return *sig_; }
    int bound() const { return bound_; }
    int size() const { return int(strings_.size()); }
    const GuardedString& at(int i) const { return strings_[i]; }
    int index(const GuardedString& s) const; // -1 when outside the universe
    bool is_atom(int i) const { return strings_[i].length() == 0; }

private:
    const Signature* sig_;
    int bound_;
    std::vector<GuardedString> strings_;
    std::map<GuardedString, int> index_;
};

// A total weight map on the universe: the tropical instance of the generic
// function algebra, with infinity meaning "not a trace".
using TgFun = std::vector<ExtNat>;

TgFun tg_zero(const StringUniverse& u);
TgFun tg_one(const StringUniverse& u);
TgFun tg_add(const TgFun& a, const TgFun& b);
// (a . b)(s) = min over splittings s = t ^ u of a(t) + b(u).
TgFun tg_mul(const StringUniverse& u, const TgFun& a, const TgFun& b);
// Partial sums to stabilization; cap <= 0 means |universe| + 1.
TgFun tg_star(const StringUniverse& u, const TgFun& a, int cap = 0);
TgFun tg_neg(const StringUniverse& u, const TgFun& t);

bool tg_is_test(const StringUniverse& u, const TgFun& a);
bool tg_is_weight(const StringUniverse& u, const TgFun& a);

// The correspondence with guarded languages: keep exactly the finite
// weights. With languages stored as weight maps this is nearly an identity,
// so the real content is that it commutes with every operation.
GuardedLanguage tau(const StringUniverse& u, const TgFun& a);

// Random-pair suite: tau commutes with mul, add, star, neg, one, zero, and
// preserves membership in the test and weight subalgebras in both
// directions.
AxiomReport check_tau_iso(int bound, const Signature& sig, int samples,
                          std::uint64_t seed);

} // namespace kawt

#endif
