#ifndef KAWT_AST_HPP
#define KAWT_AST_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kawt {

// Three-sorted signature of a weighted regular program: program variables,
// Boolean test variables, weighting variables. Names are pairwise disjoint;
// the order of the Boolean list fixes the atom encoding everywhere else.
class Signature {
public:
    enum class Sort { program, boolean, weighting };

    Signature(std::vector<std::string> programs,
              std::vector<std::string> booleans,
              std::vector<std::string> weightings);

    const std::vector<std::string>& programs() const { return programs_; }
    const std::vector<std::string>& booleans() const { return booleans_; }
    const std::vector<std::string>& weightings() const { return weightings_; }

    std::optional<std::pair<Sort, int>> lookup(std::string_view name) const;
    std::size_t atom_count() const { return std::size_t(1) << booleans_.size(); }

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    std::vector<std::string> programs_, booleans_, weightings_;
};

// ------------------------------------------------------------------ terms
//
// Immutable trees, shared freely. Variables are stored as indices into the
// signature they were built against.

struct BoolExpr;
struct WeightExpr;
struct Program;
using BoolPtr = std::shared_ptr<const BoolExpr>;
using WeightPtr = std::shared_ptr<const WeightExpr>;
using ProgPtr = std::shared_ptr<const Program>;

struct BoolExpr {
    enum class Kind { var, zero, one, conj, disj, neg };
    Kind kind;
    int var = -1;
    BoolPtr lhs, rhs; // conj/disj use both, neg uses lhs

    bool operator==(const BoolExpr& o) const;
};

struct WeightExpr {
    enum class Kind { var, zero, one, mul, add };
    Kind kind;
    int var = -1;
    WeightPtr lhs, rhs;

    bool operator==(const WeightExpr& o) const;
};

struct Program {
    enum class Kind { atomic, test, weight, plus, seq, star };
    Kind kind;
    int var = -1;      // atomic
    BoolPtr test;      // test
    WeightPtr weight;  // weight
    ProgPtr lhs, rhs;  // plus/seq use both, star uses lhs

    bool operator==(const Program& o) const;
};

BoolPtr bool_var(int index);
BoolPtr bool_zero();
BoolPtr bool_one();
BoolPtr bool_and(BoolPtr a, BoolPtr b);
BoolPtr bool_or(BoolPtr a, BoolPtr b);
BoolPtr bool_not(BoolPtr a);

WeightPtr weight_var(int index);
WeightPtr weight_zero();
WeightPtr weight_one();
WeightPtr weight_mul(WeightPtr a, WeightPtr b);
WeightPtr weight_add(WeightPtr a, WeightPtr b);

ProgPtr prog_atomic(int index);
ProgPtr prog_test(BoolPtr b);
ProgPtr prog_weight(WeightPtr w);
ProgPtr prog_plus(ProgPtr a, ProgPtr b);
ProgPtr prog_seq(ProgPtr a, ProgPtr b);
ProgPtr prog_star(ProgPtr a);

// -------------------------------------------------------------- utilities

// Concrete-syntax rendering; parse(pretty_print(p)) == p structurally.
std::string pretty_print(const ProgPtr& p, const Signature& sig);
std::string pretty_print(const BoolPtr& b, const Signature& sig);
std::string pretty_print(const WeightPtr& w, const Signature& sig);

int count_stars(const ProgPtr& p);
int count_program_symbols(const ProgPtr& p); // occurrences of atomic leaves

// Structured-programming sugar.
ProgPtr prog_skip();                                    // test 1
ProgPtr prog_abort();                                   // test 0
ProgPtr desugar_if(BoolPtr b, ProgPtr then_p, ProgPtr else_p);
ProgPtr desugar_while(BoolPtr b, ProgPtr body);

// 1 + p + p^2 + ... + p^n as a star-free sum (left-nested, n+1 summands).
ProgPtr bounded_plus(const ProgPtr& p, int n);

// ------------------------------------------------------------- ski rental
//
// The running example: a counter decremented under a guard, paying either a
// per-step rent or a one-off purchase that ends the loop.

Signature ski_signature(); // programs {sub1, end}, booleans {neq0}, weightings {one, skis}

struct SkiPrograms {
    ProgPtr loop;     // while-loop form
    ProgPtr denested; // star-of-star normal form
    ProgPtr unrolled; // star-free unrolling to depth n
};
SkiPrograms build_ski_programs(int n);

} // namespace kawt

#endif
