#include "jackd/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace jackd {

Int factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Int odd_double_factorial(int m) {
    if (m < 0) throw std::domain_error("odd_double_factorial: negative argument");
    Int r = 1;
    for (int t = 3; t <= 2 * m - 1; t += 2) r *= t;
    return r;
}

Int pow_int(const Int& base, int exp) {
    if (exp < 0) throw std::domain_error("pow_int: negative exponent");
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

namespace {
bool valid_decimal(const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}
}  // namespace

Rat parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!valid_decimal(text, true))
            throw std::invalid_argument("not a rational: '" + text + "'");
        return Rat(Int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!valid_decimal(num, true) || !valid_decimal(den, false))
        throw std::invalid_argument("not a rational: '" + text + "'");
    Int d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    Rat q(Int(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }
std::string to_string(const Int& z) { return z.get_str(); }

bool is_integer(const Rat& q) { return q.get_den() == 1; }

}  // namespace jackd
