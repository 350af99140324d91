#include "bookcoh/rational.hpp"

namespace bookcoh {

void Rational::normalize() {
    if (mpz_sgn(mpq_denref(v_.get_mpq_t())) == 0)
        throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    mpq_class v;
    // mpq_set_str skips embedded white space; reject it up front
    if (s.empty() || s.find_first_of(" \t\r\n") != std::string::npos ||
        mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0 ||
        mpz_sgn(mpq_denref(v.get_mpq_t())) == 0)
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    return Rational(std::move(v));
}

Rational Rational::pow(int e) const {
    if (e == 0)
        return 1;
    if (e < 0)
        return reciprocal().pow(-e);
    // num and den stay coprime under powers, so the result is canonical
    mpq_class r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(v_.get_mpq_t()),
               static_cast<unsigned long>(e));
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(v_.get_mpq_t()),
               static_cast<unsigned long>(e));
    return Rational(std::move(r));
}

Rational Rational::reciprocal() const {
    if (is_zero())
        throw std::domain_error("Rational: reciprocal of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(r));
}

std::string Rational::str() const {
    std::string s = v_.get_num().get_str();
    if (!is_integer()) {
        s += '/';
        s += v_.get_den().get_str();
    }
    return s;
}

}  // namespace bookcoh
