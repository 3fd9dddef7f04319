#pragma once

// Exact scalars over Q (GMP rationals) and prime fields GF(p).
//
// A Field is a small value naming the coefficient domain; every Scalar
// carries its Field and mixed-field arithmetic is rejected.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace leibniz {

class Field {
public:
    /// The rationals; also the default-constructed field.
    Field() = default;

    static Field rationals() noexcept { return Field{}; }

    /// GF(p). Throws std::invalid_argument unless 2 <= p < 2^31 is prime.
    static Field prime(std::uint32_t p);

    /// Accepts "Q" or "GF(p)".
    static Field parse(std::string_view text);

    std::uint32_t characteristic() const noexcept { return p_; }
    bool is_rationals() const noexcept { return p_ == 0; }
    bool is_finite() const noexcept { return p_ != 0; }

    /// "Q" or "GF(p)".
    std::string name() const;

    friend bool operator==(Field, Field) noexcept = default;

private:
    explicit Field(std::uint32_t p) noexcept : p_(p) {}
    std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

class Scalar {
public:
    /// Zero of Q.
    Scalar() = default;
    Scalar(Field field, long value);

    /// Maps a rational into `field`; over GF(p) the denominator must be a unit.
    static Scalar from_rational(Field field, const mpq_class& value);
    static Scalar zero(Field field) { return Scalar(field, 0); }
    static Scalar one(Field field) { return Scalar(field, 1); }

    /// Strict text syntax: `a` or `a/b` over Q, a residue in [0, p) over GF(p).
    /// Throws std::invalid_argument on anything else.
    static Scalar parse(Field field, std::string_view text);

    Field field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Over Q only.
    const mpq_class& rational() const;
    /// Over GF(p) only.
    std::uint32_t residue() const;

    Scalar inverse() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator/=(const Scalar& other);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Canonical rendering, inverse of parse().
    std::string str() const;

private:
    void require_same_field(const Scalar& other) const;

    Field field_;
    mpq_class q_;
    std::uint32_t r_ = 0;
};

std::string to_string(const Scalar& s);

}  // namespace leibniz
