#ifndef RYSER_REPORT_HPP
#define RYSER_REPORT_HPP

#include <string>
#include <vector>

namespace ryser {

struct Claim {
    std::string description;
    std::string lhs;
    std::string rel;
    std::string rhs;
    bool pass = false;
    // Precondition claims gate the conclusions; when one fails the report
    // carries no conclusion claims.
    bool precondition = false;
};

struct CertificateReport {
    // Operation name plus the fingerprint of the subject hypergraph.
    std::string subject;
    std::vector<Claim> claims;
    // Optional serialized covers / matchings / weightings backing the claims.
    std::vector<std::string> witnesses;

    void claim(const std::string& desc, const std::string& lhs, const std::string& rel,
               const std::string& rhs, bool pass, bool precondition = false) {
        claims.push_back({desc, lhs, rel, rhs, pass, precondition});
    }

    bool preconditions_ok() const {
        for (const auto& c : claims)
            if (c.precondition && !c.pass) return false;
        return true;
    }

    bool overall() const {
        for (const auto& c : claims)
            if (!c.pass) return false;
        return !claims.empty();
    }

    std::string to_text() const;
};

}  // namespace ryser

#endif
