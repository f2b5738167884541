#include "classforge/poly.hpp"

#include <sstream>

#include "classforge/modular.hpp"

namespace classforge {

namespace {

template <typename T>
std::string poly_str(const std::vector<T>& cs) {
    if (cs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i) {
        using classforge::sign;
        if (sign(cs[i]) == 0) continue;
        if (!first) os << (sign(cs[i]) > 0 ? " + " : " - ");
        else if (sign(cs[i]) < 0) os << "-";
        first = false;
        auto a = abs(cs[i]);
        if (i == 0) { os << a; continue; }
        if (a != 1) os << a << "*";
        os << "X";
        if (i > 1) os << "^" << i;
    }
    if (first) return "0";
    return os.str();
}

} // namespace

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { normalize(); }

void RatPoly::normalize() {
    while (!coeffs_.empty() && sign(coeffs_.back()) == 0) coeffs_.pop_back();
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }

RatPoly RatPoly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::from_int(const IntPoly& f) {
    std::vector<Rational> v;
    v.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) v.emplace_back(c);
    return RatPoly(std::move(v));
}

const Rational& RatPoly::lc() const {
    if (is_zero()) throw error("lc of zero polynomial");
    return coeffs_.back();
}

Rational RatPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[i];
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator-() const {
    std::vector<Rational> v = coeffs_;
    for (auto& c : v) c = -c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const Rational& c) const {
    std::vector<Rational> v = coeffs_;
    for (auto& x : v) x *= c;
    return RatPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& divisor) const {
    if (divisor.is_zero()) throw error("polynomial division by zero");
    std::vector<Rational> rem = coeffs_;
    int dd = divisor.degree();
    if (degree() < dd) return {RatPoly(), *this};
    std::vector<Rational> quo(degree() - dd + 1, Rational(0));
    for (int i = degree(); i >= dd; --i) {
        if (sign(rem[i]) == 0) continue;
        Rational q = rem[i] / divisor.lc();
        quo[i - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.coeff(j);
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::derivative() const {
    if (degree() < 1) return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return RatPoly(std::move(v));
}

Rational RatPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
    return acc;
}

RatPoly RatPoly::compose_power(unsigned r) const {
    if (r == 0) throw error("compose_power: r must be >= 1");
    if (is_zero()) return {};
    std::vector<Rational> v(static_cast<size_t>(degree()) * r + 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i * r] = coeffs_[i];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return {};
    return *this * (Rational(1) / lc());
}

std::pair<Integer, IntPoly> RatPoly::clear_denominators() const {
    Integer d = 1;
    for (const auto& c : coeffs_) d = lcm(d, denominator(c));
    std::vector<Integer> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(numerator(c) * divexact(d, denominator(c)));
    return {d, IntPoly(std::move(v))};
}

std::string RatPoly::str() const { return poly_str(coeffs_); }

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        RatPoly r = x % y;
        x = y;
        y = r.is_zero() ? r : r.monic(); // keep coefficients small
    }
    return x.is_zero() ? x : x.monic();
}

std::tuple<RatPoly, RatPoly, RatPoly> poly_xgcd(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b;
    RatPoly s0 = RatPoly::constant(1), s1;
    RatPoly t0, t1 = RatPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = r1; r1 = r;
        RatPoly s = s0 - q * s1; s0 = s1; s1 = s;
        RatPoly t = t0 - q * t1; t0 = t1; t1 = t;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational inv = Rational(1) / r0.lc();
    return {r0 * inv, s0 * inv, t0 * inv};
}

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { normalize(); }

void IntPoly::normalize() {
    while (!coeffs_.empty() && sign(coeffs_.back()) == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly({c}); }

IntPoly IntPoly::monomial(const Integer& c, int degree) {
    std::vector<Integer> v(degree + 1, Integer(0));
    v[degree] = c;
    return IntPoly(std::move(v));
}

const Integer& IntPoly::lc() const {
    if (is_zero()) throw error("lc of zero polynomial");
    return coeffs_.back();
}

Integer IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Integer(0);
    return coeffs_[i];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Integer> v(std::max(coeffs_.size(), o.coeffs_.size()), Integer(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
    std::vector<Integer> v = coeffs_;
    for (auto& c : v) c = -c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Integer> v(coeffs_.size() + o.coeffs_.size() - 1, Integer(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const Integer& c) const {
    std::vector<Integer> v = coeffs_;
    for (auto& x : v) x *= c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
    if (degree() < 1) return {};
    std::vector<Integer> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Integer(static_cast<long>(i));
    return IntPoly(std::move(v));
}

Integer IntPoly::eval(const Integer& x) const {
    Integer acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
    return acc;
}

IntPoly IntPoly::compose_power(unsigned r) const {
    if (r == 0) throw error("compose_power: r must be >= 1");
    if (is_zero()) return {};
    std::vector<Integer> v(static_cast<size_t>(degree()) * r + 1, Integer(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i * r] = coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::shift(const Integer& c) const {
    // Horner: f(X+c) built from the top coefficient down.
    IntPoly acc;
    IntPoly xc({c, Integer(1)});
    for (int i = degree(); i >= 0; --i)
        acc = acc * xc + IntPoly::constant(coeffs_[i]);
    return acc;
}

Integer IntPoly::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) g = gcd(g, c);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    Integer c = content();
    if (sign(lc()) < 0) c = -c;
    return divexact_scalar(c);
}

IntPoly IntPoly::pseudo_rem(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw error("pseudo_rem by zero");
    int dd = divisor.degree();
    if (degree() < dd) return *this; // caller guards deg f >= deg d
    std::vector<Integer> rem = coeffs_;
    const Integer& d = divisor.lc();
    for (int i = degree(); i >= dd; --i) {
        // rem <- d*rem - rem[i]*X^(i-dd)*divisor; leading terms cancel
        Integer top = rem[i];
        for (auto& c : rem) c *= d;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= top * divisor.coeff(j);
    }
    return IntPoly(std::move(rem));
}

IntPoly IntPoly::divexact_scalar(const Integer& c) const {
    std::vector<Integer> v;
    v.reserve(coeffs_.size());
    for (const auto& x : coeffs_) v.push_back(divexact(x, c));
    return IntPoly(std::move(v));
}

std::string IntPoly::str() const { return poly_str(coeffs_); }

// ---------------------------------------------------------------- ModPoly

ModPoly::ModPoly(std::vector<Integer> ascending, Integer modulus)
    : coeffs_(std::move(ascending)), mod_(std::move(modulus)) {
    for (auto& c : coeffs_) c = floor_mod(c, mod_);
    normalize();
}

void ModPoly::normalize() {
    while (!coeffs_.empty() && sign(coeffs_.back()) == 0) coeffs_.pop_back();
}

ModPoly ModPoly::from_int(const IntPoly& f, const Integer& modulus) {
    return ModPoly(f.coeffs(), modulus);
}

ModPoly ModPoly::constant(const Integer& c, const Integer& modulus) {
    return ModPoly({c}, modulus);
}

ModPoly ModPoly::monomial_x(unsigned k, const Integer& modulus) {
    std::vector<Integer> v(k + 1, Integer(0));
    v[k] = 1;
    return ModPoly(std::move(v), modulus);
}

const Integer& ModPoly::lc() const {
    if (is_zero()) throw error("lc of zero polynomial");
    return coeffs_.back();
}

Integer ModPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Integer(0);
    return coeffs_[i];
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
    std::vector<Integer> v(std::max(coeffs_.size(), o.coeffs_.size()), Integer(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return ModPoly(std::move(v), mod_ != 0 ? mod_ : o.mod_);
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
    std::vector<Integer> v(std::max(coeffs_.size(), o.coeffs_.size()), Integer(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
    return ModPoly(std::move(v), mod_ != 0 ? mod_ : o.mod_);
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
    if (is_zero() || o.is_zero()) return ModPoly({}, mod_ != 0 ? mod_ : o.mod_);
    std::vector<Integer> v(coeffs_.size() + o.coeffs_.size() - 1, Integer(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    return ModPoly(std::move(v), mod_);
}

ModPoly ModPoly::operator*(const Integer& c) const {
    std::vector<Integer> v = coeffs_;
    for (auto& x : v) x *= c;
    return ModPoly(std::move(v), mod_);
}

std::pair<ModPoly, ModPoly> ModPoly::divmod(const ModPoly& divisor) const {
    if (divisor.is_zero()) throw error("polynomial division by zero");
    int dd = divisor.degree();
    if (degree() < dd) return {ModPoly({}, mod_), *this};
    Integer inv = inv_mod(divisor.lc(), mod_).value;
    std::vector<Integer> rem = coeffs_;
    std::vector<Integer> quo(degree() - dd + 1, Integer(0));
    for (int i = degree(); i >= dd; --i) {
        if (sign(rem[i]) == 0) continue;
        Integer q = floor_mod(rem[i] * inv, mod_);
        quo[i - dd] = q;
        for (int j = 0; j <= dd; ++j)
            rem[i - dd + j] = floor_mod(rem[i - dd + j] - q * divisor.coeff(j), mod_);
    }
    return {ModPoly(std::move(quo), mod_), ModPoly(std::move(rem), mod_)};
}

ModPoly ModPoly::monic() const {
    if (is_zero()) return *this;
    return *this * inv_mod(lc(), mod_).value;
}

ModPoly ModPoly::derivative() const {
    if (degree() < 1) return ModPoly({}, mod_);
    std::vector<Integer> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Integer(static_cast<long>(i));
    return ModPoly(std::move(v), mod_);
}

Integer ModPoly::eval(const Integer& x) const {
    Integer acc(0);
    for (int i = degree(); i >= 0; --i) acc = floor_mod(acc * x + coeff(i), mod_);
    return acc;
}

ModPoly ModPoly::pow_mod(const Integer& e, const ModPoly& m) const {
    if (sign(e) < 0) throw error("pow_mod: negative exponent");
    ModPoly base = *this % m;
    ModPoly acc = ModPoly::constant(1, mod_);
    Integer k = e;
    while (sign(k) > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = (acc * base) % m;
        base = (base * base) % m;
        k >>= 1;
    }
    return acc;
}

std::string ModPoly::str() const { return poly_str(coeffs_) + " (mod " + to_string(mod_) + ")"; }

ModPoly mod_gcd(const ModPoly& a, const ModPoly& b) {
    ModPoly x = a, y = b;
    while (!y.is_zero()) {
        ModPoly r = x % y;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

} // namespace classforge
