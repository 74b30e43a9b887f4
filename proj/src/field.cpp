#include "matvar/field.hpp"

namespace matvar {

namespace {

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

unsigned long mod_pow(unsigned long b, unsigned long e, unsigned long p) {
    unsigned long acc = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return acc;
}

}  // namespace

Field Field::GF(unsigned long prime) {
    if (!is_prime(prime) || prime >= (1ul << 31))
        throw input_error("GF(p) requires a prime p < 2^31, got " + std::to_string(prime));
    return Field{false, prime};
}

Field Field::parse(const std::string& s) {
    if (s == "Q") return Q();
    if (s.rfind("GF(", 0) == 0 && s.back() == ')')
        return GF(std::stoul(s.substr(3, s.size() - 4)));
    if (s.rfind("GF:", 0) == 0) return GF(std::stoul(s.substr(3)));
    throw input_error("unrecognized field tag: " + s);
}

std::string Field::name() const {
    return rational ? std::string("Q") : "GF(" + std::to_string(p) + ")";
}

Scalar::Scalar(Field f, long v) : field_(f) {
    if (f.rational) {
        q_ = v;
    } else {
        long m = v % static_cast<long>(f.p);
        if (m < 0) m += static_cast<long>(f.p);
        r_ = static_cast<unsigned long>(m);
    }
}

Scalar::Scalar(Field f, const mpq_class& v) : field_(f) {
    if (f.rational) {
        q_ = v;
        q_.canonicalize();
    } else {
        mpz_class num = v.get_num() % f.p;
        mpz_class den = v.get_den() % f.p;
        if (num < 0) num += f.p;
        if (den == 0) throw input_error("denominator divisible by " + std::to_string(f.p));
        unsigned long inv = mod_pow(den.get_ui(), f.p - 2, f.p);
        r_ = num.get_ui() * inv % f.p;
    }
}

Scalar Scalar::parse(Field f, const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw input_error("bad scalar: " + text);
    q.canonicalize();
    return Scalar(f, q);
}

bool Scalar::is_zero() const { return field_.rational ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return field_.rational ? q_ == 1 : r_ == 1 % field_.p; }

void Scalar::check_same(const Scalar& o) const {
    if (!(field_ == o.field_)) throw input_error("mixed-field arithmetic");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s(field_);
    if (field_.rational)
        s.q_ = q_ + o.q_;
    else
        s.r_ = (r_ + o.r_) % field_.p;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar s(field_);
    if (field_.rational)
        s.q_ = q_ - o.q_;
    else
        s.r_ = (r_ + field_.p - o.r_) % field_.p;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s(field_);
    if (field_.rational)
        s.q_ = q_ * o.q_;
    else
        s.r_ = r_ * o.r_ % field_.p;
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same(o);
    if (o.is_zero()) throw input_error("division by zero");
    Scalar s(field_);
    if (field_.rational)
        s.q_ = q_ / o.q_;
    else
        s.r_ = r_ * mod_pow(o.r_, field_.p - 2, field_.p) % field_.p;
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.rational)
        s.q_ = -q_;
    else
        s.r_ = (field_.p - r_) % field_.p;
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    return field_ == o.field_ && (field_.rational ? q_ == o.q_ : r_ == o.r_);
}

std::string Scalar::str() const {
    return field_.rational ? q_.get_str() : std::to_string(r_);
}

}  // namespace matvar
