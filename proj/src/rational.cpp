#include "ryser/rational.hpp"

#include <cctype>
#include <ostream>

#include "ryser/errors.hpp"

namespace ryser {

namespace {

bool valid_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational Rational::from_string(const std::string& text) {
    size_t slash = text.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer_literal(text))
            throw ParseError("bad rational literal: '" + text + "'");
        return Rational(mpq_class(mpz_class(text)));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!valid_integer_literal(num) || !valid_integer_literal(den))
        throw ParseError("bad rational literal: '" + text + "'");
    mpz_class d(den);
    if (d == 0) throw ParseError("zero denominator in rational literal: '" + text + "'");
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return Rational(q);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace ryser
