#include "kawt/report.hpp"

#include <sstream>

namespace kawt {

void AxiomReport::violation(const std::string& law, const std::string& witness) {
    violations.push_back(law + ": " + witness);
}

void AxiomReport::merge(const AxiomReport& other) {
    checks_run += other.checks_run;
    for (const auto& v : other.violations)
        violations.push_back(other.suite + ": " + v);
}

std::string AxiomReport::text() const {
    std::ostringstream out;
    out << "suite: " << suite << "\n";
    out << "seed: " << seed << "  samples: " << samples << "\n";
    out << "checks run: " << checks_run << "\n";
    if (violations.empty()) {
        out << "result: PASS\n";
    } else {
        out << "result: FAIL (" << violations.size() << " violation"
            << (violations.size() == 1 ? "" : "s") << ")\n";
        for (const auto& v : violations) out << "  violation: " << v << "\n";
    }
    return out.str();
}

} // namespace kawt
