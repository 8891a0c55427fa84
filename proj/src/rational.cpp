#include "hurwitz/rational.hpp"

#include "hurwitz/errors.hpp"

namespace hurwitz {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw Error("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

bool Rational::is_odd_integer() const {
    return is_integer() && mpz_odd_p(value_.get_num_mpz_t()) != 0;
}

std::string Rational::str() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return fraction_str();
}

std::string Rational::fraction_str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw Error("division by zero rational");
    }
    value_ /= o.value_;
    return *this;
}

BigInt factorial(long n) {
    BigInt out = 1;
    for (long i = 2; i <= n; ++i) {
        out *= i;
    }
    return out;
}

bool same_parity(const BigInt& a, const BigInt& b) {
    return (mpz_odd_p(a.get_mpz_t()) != 0) == (mpz_odd_p(b.get_mpz_t()) != 0);
}

}  // namespace hurwitz
