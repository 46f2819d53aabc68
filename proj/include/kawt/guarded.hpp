#ifndef KAWT_GUARDED_HPP
#define KAWT_GUARDED_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kawt/ast.hpp"
#include "kawt/semiring.hpp"

namespace kawt {

// An atom is a total sign assignment to the declared Boolean variables,
// packed as a bitmask in declaration order (bit set = positive).
using Atom = std::uint32_t;

std::string render_atom(Atom a, const Signature& sig);
bool atom_satisfies(Atom a, const BoolExpr& b);
// All atoms where the expression holds, indexed by mask.
std::vector<char> eval_bool_atoms(const BoolExpr& b, const Signature& sig);

// Alternating sequence A0 p1 A1 ... pk Ak. atoms has exactly one more entry
// than progs; k = progs.size() is the string's length.
struct GuardedString {
    std::vector<Atom> atoms;
    std::vector<int> progs;

    int length() const { return int(progs.size()); }
    Atom first() const { return atoms.front(); }
    Atom last() const { return atoms.back(); }

    friend auto operator<=>(const GuardedString&, const GuardedString&) = default;
};

GuardedString atom_string(Atom a);

struct WeightedGuardedString {
    GuardedString base;
    std::uint64_t weight = 0;

    friend bool operator==(const WeightedGuardedString&,
                           const WeightedGuardedString&) = default;
};

// An unambiguous set of weighted guarded strings: a finite map from base
// strings to natural weights. A base that is absent has weight infinity,
// meaning the trace is impossible.
using GuardedLanguage = std::map<GuardedString, std::uint64_t>;

bool is_crisp(const GuardedLanguage& x);             // all weights 0
bool is_uniform(const GuardedLanguage& x);           // all weights equal
bool is_universal_on_atoms(const GuardedLanguage& x, const Signature& sig);
// Domain is a set of atoms and every weight is 0.
bool is_atom_test(const GuardedLanguage& x);

// Fusion at a shared boundary atom; weights add. Empty optional when the
// boundary atoms differ.
std::optional<WeightedGuardedString> coalesce(const WeightedGuardedString& x,
                                              const WeightedGuardedString& y);

// Pointwise minimum of the weight maps.
GuardedLanguage unamb_union(const GuardedLanguage& x, const GuardedLanguage& y);

// All defined pairwise coalescings, minimum kept per base string. Strings
// longer than length_bound (program-symbol count) are discarded at creation;
// a negative bound means unbounded.
GuardedLanguage gt_product(const GuardedLanguage& x, const GuardedLanguage& y,
                           int length_bound = -1);

// The crisp language of all bare atoms: the unit of gt_product.
GuardedLanguage unit_language(const Signature& sig);

// Iterated powers accumulated with unamb_union until stabilization; the
// length bound keeps the universe finite, and weights are naturals bounded
// below, so only finitely many improvements can occur. The signature fixes
// the atom set of the unit.
GuardedLanguage gt_star(const GuardedLanguage& x, int length_bound,
                        const Signature& sig);

// Complement inside the atom tests: defined only for crisp atom languages.
GuardedLanguage atom_complement(const GuardedLanguage& t, const Signature& sig);

// The canonical valuation: atomic programs denote every one-step string
// crisply, Boolean variables their satisfying atoms, and each weighting
// variable a uniform universal atom set at its assigned natural weight.
struct CanonicalValuation {
    Signature sig;
    std::vector<std::uint64_t> weights; // one natural per weighting variable

    GuardedLanguage prog_lang(int prog) const;
    GuardedLanguage bool_lang(const BoolExpr& b) const;
    GuardedLanguage weight_lang(const WeightExpr& w) const;
};

CanonicalValuation canonical_valuation(Signature sig, std::vector<std::uint64_t> weights);

// Weighting expressions fold in the tropical semiring of naturals: variables
// read the assignment, 1 is weight 0, 0 is infinity, juxtaposition adds,
// + takes the minimum.
ExtNat eval_weight_nat(const WeightExpr& w, const CanonicalValuation& v);

// Homomorphic bounded interpretation. Exact for every string within the
// length bound: longer strings can only arise from factors that are
// themselves longer than the bound.
GuardedLanguage gt_interpret(const Program& p, const CanonicalValuation& v,
                             int length_bound);

// Optimal-run extraction: for each atom A, the least total weight of a
// string in G that starts in Y and ends with A, returned as a language of
// bare atoms.
GuardedLanguage theta(const GuardedLanguage& g, const std::set<Atom>& from);

std::string render_guarded_string(const GuardedString& s, std::uint64_t weight,
                                  const Signature& sig);
std::string render_language(const GuardedLanguage& x, const Signature& sig);

} // namespace kawt

#endif
