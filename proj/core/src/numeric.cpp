#include "classforge/numeric.hpp"

#include <cctype>

namespace classforge {

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Integer floor_mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer pow_i(const Integer& a, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

Integer isqrt(const Integer& a) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

bool is_perfect_square(const Integer& a) {
    return sign(a) >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

Integer divexact(const Integer& a, const Integer& b) {
    if (sign(b) == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw identity_violation("divexact: " + to_string(b) + " does not divide " + to_string(a));
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

size_t bit_length(const Integer& a) {
    return mpz_sizeinbase(a.get_mpz_t(), 2);
}

Integer parse_decimal(std::string_view s) {
    if (s.empty()) throw malformed_certificate("empty integer field");
    size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw malformed_certificate("bare sign in integer field");
    for (size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw malformed_certificate("non-decimal integer field: " + std::string(s));
    return Integer(std::string(s), 10);
}

std::string to_string(const Integer& a) { return a.get_str(10); }
std::string to_string(const Rational& a) { return a.get_str(10); }

Rational make_rational(const Integer& num, const Integer& den) {
    if (sign(den) == 0) throw error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer floor_q(const Rational& q) {
    return floor_div(numerator(q), denominator(q));
}

Integer ceil_q(const Rational& q) {
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), numerator(q).get_mpz_t(), denominator(q).get_mpz_t());
    return c;
}

} // namespace classforge
