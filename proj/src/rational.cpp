#include "regraph/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace regraph {

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw std::invalid_argument("malformed rational: '" + text + "'");
    Integer p(num), q(den);
    if (q == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Integer common_denominator(const std::vector<Rational>& values) {
    Integer l = 1;
    for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

Integer integer_gcd(const std::vector<Rational>& values) {
    Integer g = 0;
    for (const auto& v : values) {
        if (!is_integral(v)) throw std::invalid_argument("integer_gcd on non-integral value");
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
    }
    return g;
}

}  // namespace regraph
