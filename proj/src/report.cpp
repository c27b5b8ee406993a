#include "ryser/report.hpp"

#include <sstream>

namespace ryser {

std::string CertificateReport::to_text() const {
    std::ostringstream out;
    out << "subject: " << subject << '\n';
    for (const auto& c : claims) {
        out << (c.precondition ? "precondition " : "") << c.description << ": " << c.lhs << ' '
            << c.rel << ' ' << c.rhs << " -> " << (c.pass ? "PASS" : "FAIL") << '\n';
    }
    for (const auto& w : witnesses) out << "witness: " << w << '\n';
    out << "OVERALL: " << (overall() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

}  // namespace ryser
