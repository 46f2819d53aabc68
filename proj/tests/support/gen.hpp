#ifndef KAWT_TESTS_GEN_HPP
#define KAWT_TESTS_GEN_HPP

#include <random>

#include "kawt/ast.hpp"

// Random term generators for round-trip and law tests. Depth-limited; the
// distributions lean toward leaves so sizes stay small.

namespace kawt::testgen {

inline BoolPtr random_bool(std::mt19937_64& rng, const Signature& sig, int depth) {
    bool leaf = depth <= 0 || rng() % 3 == 0 || sig.booleans().empty();
    if (leaf) {
        switch (rng() % 4) {
            case 0: return bool_zero();
            case 1: return bool_one();
            default:
                if (sig.booleans().empty()) return bool_one();
                return bool_var(int(rng() % sig.booleans().size()));
        }
    }
    switch (rng() % 3) {
        case 0: return bool_and(random_bool(rng, sig, depth - 1), random_bool(rng, sig, depth - 1));
        case 1: return bool_or(random_bool(rng, sig, depth - 1), random_bool(rng, sig, depth - 1));
        default: return bool_not(random_bool(rng, sig, depth - 1));
    }
}

inline WeightPtr random_weight(std::mt19937_64& rng, const Signature& sig, int depth) {
    bool leaf = depth <= 0 || rng() % 3 == 0 || sig.weightings().empty();
    if (leaf) {
        switch (rng() % 4) {
            case 0: return weight_zero();
            case 1: return weight_one();
            default:
                if (sig.weightings().empty()) return weight_one();
                return weight_var(int(rng() % sig.weightings().size()));
        }
    }
    if (rng() % 2 == 0)
        return weight_add(random_weight(rng, sig, depth - 1), random_weight(rng, sig, depth - 1));
    return weight_mul(random_weight(rng, sig, depth - 1), random_weight(rng, sig, depth - 1));
}

inline ProgPtr random_prog(std::mt19937_64& rng, const Signature& sig, int depth) {
    bool leaf = depth <= 0 || rng() % 4 == 0;
    if (leaf) {
        switch (rng() % 3) {
            case 0: return prog_test(random_bool(rng, sig, 1));
            case 1: return prog_weight(random_weight(rng, sig, 1));
            default:
                if (sig.programs().empty()) return prog_skip();
                return prog_atomic(int(rng() % sig.programs().size()));
        }
    }
    switch (rng() % 5) {
        case 0: return prog_star(random_prog(rng, sig, depth - 1));
        case 1:
        case 2: return prog_plus(random_prog(rng, sig, depth - 1), random_prog(rng, sig, depth - 1));
        default: return prog_seq(random_prog(rng, sig, depth - 1), random_prog(rng, sig, depth - 1));
    }
}

// Weighting-free variant for the classical fragment.
inline ProgPtr random_crisp_prog(std::mt19937_64& rng, const Signature& sig, int depth) {
    bool leaf = depth <= 0 || rng() % 4 == 0;
    if (leaf) {
        if (rng() % 2 == 0 || sig.programs().empty()) return prog_test(random_bool(rng, sig, 1));
        return prog_atomic(int(rng() % sig.programs().size()));
    }
    switch (rng() % 5) {
        case 0: return prog_star(random_crisp_prog(rng, sig, 0)); // leaf under star
        case 1:
        case 2:
            return prog_plus(random_crisp_prog(rng, sig, depth - 1),
                             random_crisp_prog(rng, sig, depth - 1));
        default:
            return prog_seq(random_crisp_prog(rng, sig, depth - 1),
                            random_crisp_prog(rng, sig, depth - 1));
    }
}

} // namespace kawt::testgen

#endif
