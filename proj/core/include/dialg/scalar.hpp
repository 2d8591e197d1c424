#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dialg {

/// Base field descriptor: the rationals or a prime field GF(p).
///
/// Prime fields are limited to p < 2^31 so products fit comfortably in 64 bits.
class Field {
public:
    static Field rationals() { return Field{0}; }
    /// Throws BadScalar unless p is a prime below 2^31.
    static Field gf(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }

    /// "rationals" or "gf <p>", the model-file spelling.
    std::string name() const;

    friend bool operator==(Field a, Field b) { return a.p_ == b.p_; }
    friend bool operator!=(Field a, Field b) { return a.p_ != b.p_; }

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;
};

/// Exact element of a Field.
///
/// Rationals are kept in lowest terms with positive denominator (GMP does
/// this for us); GF(p) elements are canonical representatives in [0, p-1].
/// Mixing fields in one operation throws MixedFields.
class Scalar {
public:
    Scalar() : Scalar(Field::rationals()) {}
    explicit Scalar(Field f) : field_(f) {}
    Scalar(Field f, long value);
    Scalar(Field f, const mpq_class& value);

    static Scalar zero(Field f) { return Scalar(f); }
    static Scalar one(Field f) { return Scalar(f, 1L); }

    /// Parses "n", "-n" or "p/q"; throws BadScalar on malformed text or a
    /// denominator that vanishes in the field.
    static Scalar parse(Field f, std::string_view text);

    Field field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Rational value; for GF(p) the representative in [0, p-1].
    mpq_class to_rational() const;
    std::string to_string() const;

    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    /// this += a * b without a temporary.
    void add_product(const Scalar& a, const Scalar& b);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    void require_same(const Scalar& o) const;

    Field field_;
    mpq_class q_;          // used when field_ is the rationals
    std::uint64_t r_ = 0;  // used when field_ is GF(p)
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace dialg
