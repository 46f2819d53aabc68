#ifndef KAWT_REPORT_HPP
#define KAWT_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace kawt {

// Outcome of a randomized or exhaustive law suite. A suite passes iff it
// recorded no violations; each violation string carries a concrete witness.
struct AxiomReport {
    std::string suite;
    std::uint64_t seed = 0;
    int samples = 0;
    long checks_run = 0;
    std::vector<std::string> violations;

    bool pass() const { return violations.empty(); }
    void violation(const std::string& law, const std::string& witness);
    void merge(const AxiomReport& other);

    // Multi-line human-readable rendering, stable across runs.
    std::string text() const;
};

} // namespace kawt

#endif
