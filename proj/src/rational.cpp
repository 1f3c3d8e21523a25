#include "parhiggs/rational.hpp"

#include "parhiggs/error.hpp"

#include <cctype>
#include <limits>
#include <ostream>

namespace parhiggs {

namespace {

bool valid_integer(std::string_view s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    std::string_view n = s.substr(0, slash);
    std::string_view d = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!valid_integer(n) || !valid_integer(d) || d[0] == '-' || d[0] == '+')
        throw InputError("malformed rational '" + std::string(s) + "'");
    mpz_class den = parse_integer(d);
    if (den == 0) throw InputError("rational with zero denominator '" + std::string(s) + "'");
    mpq_class q(parse_integer(n), den);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

mpz_class Rational::floor() const {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return f;
}

long Rational::floor_long() const {
    mpz_class f = floor();
    if (!f.fits_slong_p()) throw InputError("integer overflow in floor");
    return f.get_si();
}

long Rational::to_long() const {
    if (!is_integer() || !q_.get_num().fits_slong_p())
        throw InputError("value " + str() + " is not a machine integer");
    return q_.get_num().get_si();
}

Rational Rational::frac() const {
    return *this - Rational(mpq_class(floor()));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.q_ == 0) throw InputError("division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace parhiggs
