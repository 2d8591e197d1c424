#include "dialg/scalar.hpp"

#include "dialg/error.hpp"

#include <ostream>

namespace dialg {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::OrderTooLow: return "OrderTooLow";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::InvalidDeformation: return "InvalidDeformation";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::NonIdentityConstantTerm: return "NonIdentityConstantTerm";
    case ErrorKind::NotACoboundary: return "NotACoboundary";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownReference: return "UnknownReference";
    case ErrorKind::BadScalar: return "BadScalar";
    }
    return "Unknown";
}

namespace {

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::uint64_t reduce_mod(const mpz_class& z, std::uint64_t p)
{
    mpz_class r = z % static_cast<unsigned long>(p);
    if (r < 0)
        r += static_cast<unsigned long>(p);
    return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

} // namespace

Field Field::gf(std::uint64_t p)
{
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
        throw Error(ErrorKind::BadScalar, "field characteristic " + std::to_string(p) +
                                              " is not a prime below 2^31");
    return Field{p};
}

std::string Field::name() const
{
    return is_rational() ? std::string("rationals") : "gf " + std::to_string(p_);
}

Scalar::Scalar(Field f, long value) : field_(f)
{
    if (f.is_rational())
        q_ = value;
    else
        r_ = reduce_mod(mpz_class(value), f.characteristic());
}

Scalar::Scalar(Field f, const mpq_class& value) : field_(f)
{
    if (f.is_rational()) {
        q_ = value;
        q_.canonicalize();
        return;
    }
    const auto p = f.characteristic();
    const auto den = reduce_mod(value.get_den(), p);
    if (den == 0)
        throw Error(ErrorKind::BadScalar, "denominator divisible by the characteristic");
    r_ = reduce_mod(value.get_num(), p) * pow_mod(den, p - 2, p) % p;
}

Scalar Scalar::parse(Field f, std::string_view text)
{
    auto digits_ok = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw Error(ErrorKind::BadScalar, "malformed scalar '" + std::string(text) + "'");
    std::string num_s(num);
    if (num_s[0] == '+')
        num_s.erase(0, 1);
    mpz_class n(num_s, 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw Error(ErrorKind::BadScalar, "zero denominator in '" + std::string(text) + "'");
    return Scalar(f, mpq_class(n, d));
}

bool Scalar::is_zero() const
{
    return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const
{
    return field_.is_rational() ? q_ == 1 : r_ == 1;
}

mpq_class Scalar::to_rational() const
{
    if (field_.is_rational())
        return q_;
    return mpq_class(static_cast<unsigned long>(r_));
}

std::string Scalar::to_string() const
{
    if (field_.is_rational())
        return q_.get_str();
    return std::to_string(r_);
}

void Scalar::require_same(const Scalar& o) const
{
    if (field_ != o.field_)
        throw Error(ErrorKind::MixedFields, field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator-() const
{
    Scalar r(*this);
    if (field_.is_rational())
        r.q_ = -q_;
    else if (r_ != 0)
        r.r_ = field_.characteristic() - r_;
    return r;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    Scalar r(field_);
    if (field_.is_rational())
        r.q_ = 1 / q_;
    else
        r.r_ = pow_mod(r_, field_.characteristic() - 2, field_.characteristic());
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    require_same(o);
    if (field_.is_rational())
        q_ += o.q_;
    else
        r_ = (r_ + o.r_) % field_.characteristic();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    require_same(o);
    if (field_.is_rational())
        q_ -= o.q_;
    else
        r_ = (r_ + field_.characteristic() - o.r_) % field_.characteristic();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    require_same(o);
    if (field_.is_rational())
        q_ *= o.q_;
    else
        r_ = r_ * o.r_ % field_.characteristic();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    return *this *= o.inverse();
}

void Scalar::add_product(const Scalar& a, const Scalar& b)
{
    require_same(a);
    require_same(b);
    if (field_.is_rational()) {
        if (sgn(a.q_) == 0 || sgn(b.q_) == 0)
            return;
        q_ += a.q_ * b.q_;
    } else {
        r_ = (r_ + a.r_ * b.r_) % field_.characteristic();
    }
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (a.field_ != b.field_)
        return false;
    return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.to_string();
}

} // namespace dialg
