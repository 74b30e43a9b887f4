#pragma once

#include <gmpxx.h>

#include <string>

#include "matvar/errors.hpp"

namespace matvar {

/// Field tag: the rationals or a prime field GF(p).
struct Field {
    bool rational = true;
    unsigned long p = 0;  // modulus when !rational

    static Field Q() { return Field{true, 0}; }
    static Field GF(unsigned long prime);

    /// Accepts "Q", "GF(p)" and "GF:p".
    static Field parse(const std::string& s);

    bool operator==(const Field&) const = default;
    std::string name() const;
};

/// Exact scalar in Q or GF(p). All arithmetic is exact; mixing fields throws.
class Scalar {
  public:
    Scalar() = default;
    explicit Scalar(Field f) : field_(f) {}
    Scalar(Field f, long v);
    Scalar(Field f, const mpq_class& v);

    static Scalar parse(Field f, const std::string& text);  // "a/b" or integer

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on division by zero
    Scalar operator-() const;
    bool operator==(const Scalar& o) const;

    /// Rational value; only valid over Q.
    const mpq_class& rational() const { return q_; }
    /// Residue in [0,p); only valid over GF(p).
    unsigned long residue() const { return r_; }

    std::string str() const;

  private:
    void check_same(const Scalar& o) const;

    Field field_ = Field::Q();
    mpq_class q_ = 0;
    unsigned long r_ = 0;
};

}  // namespace matvar
