#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace matvar {

/// Dense arbitrary-precision integer polynomial in one variable t,
/// coefficients stored in ascending degree.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    IntPolynomial(const mpz_class& c) : c_{c} { normalize(); }
    IntPolynomial(long c) : c_{mpz_class(c)} { normalize(); }
    explicit IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static IntPolynomial t_power(int k);  // t^k

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : mpz_class(0);
    }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& o) { return *this = *this + o; }
    IntPolynomial& operator-=(const IntPolynomial& o) { return *this = *this - o; }
    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

    mpz_class eval(const mpz_class& x) const;
    IntPolynomial derivative() const;

    /// True when the polynomial is a constant (degree <= 0).
    bool is_constant() const { return c_.size() <= 1; }
    mpz_class constant() const { return coeff(0); }

    std::string str() const;  // human-readable, variable t

  private:
    void normalize();
    std::vector<mpz_class> c_;
};

}  // namespace matvar
