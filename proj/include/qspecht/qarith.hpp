#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace qs {

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);  // constant
    static LaurentPoly monomial(int exponent, const mpz_class& c = 1);

    const std::map<int, mpz_class>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    mpz_class coeff(int e) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }

    std::string str() const;

private:
    void add_term(int e, const mpz_class& v);
    std::map<int, mpz_class> c_;
};

enum class QMode { GenericQ, MinusOne };

LaurentPoly q_int(int m);                 // [m] = 1 + q + ... + q^{m-1}
LaurentPoly q_factorial(int m);           // [m]!
LaurentPoly gauss_binom(int m, int j);    // 0 outside 0 <= j <= m; memoized

mpz_class eval_minus_one(const LaurentPoly& p);
mpq_class eval_at(const LaurentPoly& p, const mpq_class& q);
mpq_class q_power(const mpq_class& q, int k);

// Gaussian binomial evaluated at a rational q, by the q-Pascal recurrence; memoized per q
mpq_class gauss_at(int m, int j, const mpq_class& q);
mpz_class gauss_minus_one(int m, int j);

}  // namespace qs
