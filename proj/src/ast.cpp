#include "kawt/ast.hpp"

#include <set>
#include <stdexcept>

namespace kawt {

Signature::Signature(std::vector<std::string> programs,
                     std::vector<std::string> booleans,
                     std::vector<std::string> weightings)
    : programs_(std::move(programs)),
      booleans_(std::move(booleans)),
      weightings_(std::move(weightings)) {
    if (booleans_.size() > 16)
        throw std::invalid_argument("too many Boolean variables (limit 16)");
    std::set<std::string> seen;
    auto admit = [&](const std::string& n) {
        if (n.empty()) throw std::invalid_argument("empty identifier in signature");
        if (!seen.insert(n).second)
            throw std::invalid_argument("identifier '" + n + "' declared twice in signature");
    };
    for (const auto& n : programs_) admit(n);
    for (const auto& n : booleans_) admit(n);
    for (const auto& n : weightings_) admit(n);
}

std::optional<std::pair<Signature::Sort, int>> Signature::lookup(std::string_view name) const {
    for (std::size_t i = 0; i < programs_.size(); ++i)
        if (programs_[i] == name) return {{Sort::program, (int)i}};
    for (std::size_t i = 0; i < booleans_.size(); ++i)
        if (booleans_[i] == name) return {{Sort::boolean, (int)i}};
    for (std::size_t i = 0; i < weightings_.size(); ++i)
        if (weightings_[i] == name) return {{Sort::weighting, (int)i}};
    return std::nullopt;
}

namespace {

template <typename P>
bool child_eq(const P& a, const P& b) {
    if (!a && !b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

} // namespace

bool BoolExpr::operator==(const BoolExpr& o) const {
    return kind == o.kind && var == o.var && child_eq(lhs, o.lhs) && child_eq(rhs, o.rhs);
}

bool WeightExpr::operator==(const WeightExpr& o) const {
    return kind == o.kind && var == o.var && child_eq(lhs, o.lhs) && child_eq(rhs, o.rhs);
}

bool Program::operator==(const Program& o) const {
    return kind == o.kind && var == o.var && child_eq(test, o.test) &&
           child_eq(weight, o.weight) && child_eq(lhs, o.lhs) && child_eq(rhs, o.rhs);
}

BoolPtr bool_var(int index) {
    return std::make_shared<const BoolExpr>(BoolExpr{BoolExpr::Kind::var, index, nullptr, nullptr});
}
BoolPtr bool_zero() {
    return std::make_shared<const BoolExpr>(BoolExpr{BoolExpr::Kind::zero, -1, nullptr, nullptr});
}
BoolPtr bool_one() {
    return std::make_shared<const BoolExpr>(BoolExpr{BoolExpr::Kind::one, -1, nullptr, nullptr});
}
BoolPtr bool_and(BoolPtr a, BoolPtr b) {
    return std::make_shared<const BoolExpr>(
        BoolExpr{BoolExpr::Kind::conj, -1, std::move(a), std::move(b)});
}
BoolPtr bool_or(BoolPtr a, BoolPtr b) {
    return std::make_shared<const BoolExpr>(
        BoolExpr{BoolExpr::Kind::disj, -1, std::move(a), std::move(b)});
}
BoolPtr bool_not(BoolPtr a) {
    return std::make_shared<const BoolExpr>(
        BoolExpr{BoolExpr::Kind::neg, -1, std::move(a), nullptr});
}

WeightPtr weight_var(int index) {
    return std::make_shared<const WeightExpr>(
        WeightExpr{WeightExpr::Kind::var, index, nullptr, nullptr});
}
WeightPtr weight_zero() {
    return std::make_shared<const WeightExpr>(
        WeightExpr{WeightExpr::Kind::zero, -1, nullptr, nullptr});
}
WeightPtr weight_one() {
    return std::make_shared<const WeightExpr>(
        WeightExpr{WeightExpr::Kind::one, -1, nullptr, nullptr});
}
WeightPtr weight_mul(WeightPtr a, WeightPtr b) {
    return std::make_shared<const WeightExpr>(
        WeightExpr{WeightExpr::Kind::mul, -1, std::move(a), std::move(b)});
}
WeightPtr weight_add(WeightPtr a, WeightPtr b) {
    return std::make_shared<const WeightExpr>(
        WeightExpr{WeightExpr::Kind::add, -1, std::move(a), std::move(b)});
}

ProgPtr prog_atomic(int index) {
    return std::make_shared<const Program>(
        Program{Program::Kind::atomic, index, nullptr, nullptr, nullptr, nullptr});
}
ProgPtr prog_test(BoolPtr b) {
    return std::make_shared<const Program>(
        Program{Program::Kind::test, -1, std::move(b), nullptr, nullptr, nullptr});
}
ProgPtr prog_weight(WeightPtr w) {
    return std::make_shared<const Program>(
        Program{Program::Kind::weight, -1, nullptr, std::move(w), nullptr, nullptr});
}
ProgPtr prog_plus(ProgPtr a, ProgPtr b) {
    return std::make_shared<const Program>(
        Program{Program::Kind::plus, -1, nullptr, nullptr, std::move(a), std::move(b)});
}
ProgPtr prog_seq(ProgPtr a, ProgPtr b) {
    return std::make_shared<const Program>(
        Program{Program::Kind::seq, -1, nullptr, nullptr, std::move(a), std::move(b)});
}
ProgPtr prog_star(ProgPtr a) {
    return std::make_shared<const Program>(
        Program{Program::Kind::star, -1, nullptr, nullptr, std::move(a), nullptr});
}

// ---------------------------------------------------------------- printing
//
// Precedence (program sort): star > juxtaposition > plus.
// Precedence (Boolean sort, inside braces): ! > & > |.

namespace {

void print_bool(std::string& out, const BoolExpr& b, const Signature& sig, int min_prec) {
    auto prec = [](BoolExpr::Kind k) {
        switch (k) {
            case BoolExpr::Kind::disj: return 0;
            case BoolExpr::Kind::conj: return 1;
            case BoolExpr::Kind::neg: return 2;
            default: return 3;
        }
    };
    int p = prec(b.kind);
    bool parens = p < min_prec;
    if (parens) out += '(';
    switch (b.kind) {
        case BoolExpr::Kind::var: out += sig.booleans().at(b.var); break;
        case BoolExpr::Kind::zero: out += '0'; break;
        case BoolExpr::Kind::one: out += '1'; break;
        case BoolExpr::Kind::neg:
            out += '!';
            print_bool(out, *b.lhs, sig, 2);
            break;
        case BoolExpr::Kind::conj:
            print_bool(out, *b.lhs, sig, 1);
            out += " & ";
            print_bool(out, *b.rhs, sig, 2);
            break;
        case BoolExpr::Kind::disj:
            print_bool(out, *b.lhs, sig, 0);
            out += " | ";
            print_bool(out, *b.rhs, sig, 1);
            break;
    }
    if (parens) out += ')';
}

void print_weight(std::string& out, const WeightExpr& w, const Signature& sig, int min_prec) {
    auto prec = [](WeightExpr::Kind k) {
        switch (k) {
            case WeightExpr::Kind::add: return 0;
            case WeightExpr::Kind::mul: return 1;
            default: return 2;
        }
    };
    int p = prec(w.kind);
    bool parens = p < min_prec;
    if (parens) out += '(';
    switch (w.kind) {
        case WeightExpr::Kind::var: out += sig.weightings().at(w.var); break;
        case WeightExpr::Kind::zero: out += '0'; break;
        case WeightExpr::Kind::one: out += '1'; break;
        case WeightExpr::Kind::mul:
            print_weight(out, *w.lhs, sig, 1);
            out += ' ';
            print_weight(out, *w.rhs, sig, 2);
            break;
        case WeightExpr::Kind::add:
            print_weight(out, *w.lhs, sig, 0);
            out += " + ";
            print_weight(out, *w.rhs, sig, 1);
            break;
    }
    if (parens) out += ')';
}

void print_prog(std::string& out, const Program& p, const Signature& sig, int min_prec) {
    auto prec = [](Program::Kind k) {
        switch (k) {
            case Program::Kind::plus: return 0;
            case Program::Kind::seq: return 1;
            case Program::Kind::star: return 2;
            default: return 3;
        }
    };
    int pr = prec(p.kind);
    bool parens = pr < min_prec;
    if (parens) out += '(';
    switch (p.kind) {
        case Program::Kind::atomic: out += sig.programs().at(p.var); break;
        case Program::Kind::test:
            out += '{';
            print_bool(out, *p.test, sig, 0);
            out += '}';
            break;
        case Program::Kind::weight:
            out += '@';
            if (p.weight->kind == WeightExpr::Kind::var) {
                out += sig.weightings().at(p.weight->var);
            } else {
                out += '(';
                print_weight(out, *p.weight, sig, 0);
                out += ')';
            }
            break;
        case Program::Kind::plus:
            print_prog(out, *p.lhs, sig, 0);
            out += " + ";
            print_prog(out, *p.rhs, sig, 1);
            break;
        case Program::Kind::seq:
            print_prog(out, *p.lhs, sig, 1);
            out += ' ';
            print_prog(out, *p.rhs, sig, 2);
            break;
        case Program::Kind::star:
            print_prog(out, *p.lhs, sig, 2);
            out += '*';
            break;
    }
    if (parens) out += ')';
}

} // namespace

std::string pretty_print(const ProgPtr& p, const Signature& sig) {
    std::string out;
    print_prog(out, *p, sig, 0);
    return out;
}

std::string pretty_print(const BoolPtr& b, const Signature& sig) {
    std::string out;
    print_bool(out, *b, sig, 0);
    return out;
}

std::string pretty_print(const WeightPtr& w, const Signature& sig) {
    std::string out;
    print_weight(out, *w, sig, 0);
    return out;
}

int count_stars(const ProgPtr& p) {
    if (!p) return 0;
    int n = p->kind == Program::Kind::star ? 1 : 0;
    return n + count_stars(p->lhs) + count_stars(p->rhs);
}

int count_program_symbols(const ProgPtr& p) {
    if (!p) return 0;
    int n = p->kind == Program::Kind::atomic ? 1 : 0;
    return n + count_program_symbols(p->lhs) + count_program_symbols(p->rhs);
}

ProgPtr prog_skip() { return prog_test(bool_one()); }
ProgPtr prog_abort() { return prog_test(bool_zero()); }

ProgPtr desugar_if(BoolPtr b, ProgPtr then_p, ProgPtr else_p) {
    ProgPtr neg = prog_test(bool_not(b));
    return prog_plus(prog_seq(prog_test(std::move(b)), std::move(then_p)),
                     prog_seq(std::move(neg), std::move(else_p)));
}

ProgPtr desugar_while(BoolPtr b, ProgPtr body) {
    ProgPtr neg = prog_test(bool_not(b));
    return prog_seq(prog_star(prog_seq(prog_test(std::move(b)), std::move(body))),
                    std::move(neg));
}

ProgPtr bounded_plus(const ProgPtr& p, int n) {
    if (n < 0) throw std::invalid_argument("bounded_plus with negative exponent");
    ProgPtr sum = prog_skip();
    ProgPtr power;
    for (int k = 1; k <= n; ++k) {
        power = power ? prog_seq(power, p) : p;
        sum = prog_plus(sum, power);
    }
    return sum;
}

Signature ski_signature() {
    return Signature({"sub1", "end"}, {"neq0"}, {"one", "skis"});
}

SkiPrograms build_ski_programs(int n) {
    // indices in ski_signature(): sub1=0, end=1; neq0=0; one=0, skis=1
    ProgPtr sub1 = prog_atomic(0), endp = prog_atomic(1);
    ProgPtr guard = prog_test(bool_var(0));
    ProgPtr halt = prog_test(bool_not(bool_var(0)));
    ProgPtr pay_rent = prog_weight(weight_var(0));
    ProgPtr pay_buy = prog_weight(weight_var(1));

    // step: decrement, then either pay a day's rent or buy and finish
    ProgPtr step = prog_seq(sub1, prog_plus(pay_rent, prog_seq(pay_buy, endp)));
    ProgPtr loop = desugar_while(bool_var(0), step);

    // rent = one guarded, paid decrement; buy = guarded decrement, purchase, finish
    ProgPtr rent = prog_seq(prog_seq(guard, sub1), pay_rent);
    ProgPtr buy = prog_seq(prog_seq(prog_seq(guard, sub1), pay_buy), endp);

    ProgPtr denested =
        prog_seq(prog_seq(prog_star(rent), prog_star(prog_seq(buy, prog_star(rent)))), halt);

    ProgPtr unrolled =
        prog_seq(prog_seq(bounded_plus(rent, n), prog_plus(prog_skip(), buy)), halt);

    return SkiPrograms{loop, denested, unrolled};
}

} // namespace kawt
