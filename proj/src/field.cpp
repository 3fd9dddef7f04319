#include "leibniz/field.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace leibniz {

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p)
{
    if (p >= (1u << 31) || !is_prime(p))
        throw std::invalid_argument("characteristic " + std::to_string(p) + " is not a prime below 2^31");
    return Field{p};
}

Field Field::parse(std::string_view text)
{
    if (text == "Q") return rationals();
    if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
        auto digits = text.substr(3, text.size() - 4);
        std::uint32_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc{} && ptr == digits.data() + digits.size()) return prime(p);
    }
    throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected Q or GF(p))");
}

std::string Field::name() const
{
    return is_rationals() ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

namespace {

std::uint32_t reduce(long value, std::uint32_t p)
{
    long r = value % static_cast<long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p)
{
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint32_t exp, std::uint32_t p)
{
    std::uint32_t result = 1 % p;
    while (exp) {
        if (exp & 1u) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return result;
}

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Scalar::Scalar(Field field, long value) : field_(field)
{
    if (field_.is_rationals())
        q_ = value;
    else
        r_ = reduce(value, field_.characteristic());
}

Scalar Scalar::from_rational(Field field, const mpq_class& value)
{
    Scalar s;
    s.field_ = field;
    if (field.is_rationals()) {
        s.q_ = value;
        s.q_.canonicalize();
        return s;
    }
    const unsigned long p = field.characteristic();
    const unsigned long num = mpz_fdiv_ui(value.get_num_mpz_t(), p);
    const unsigned long den = mpz_fdiv_ui(value.get_den_mpz_t(), p);
    if (den == 0)
        throw std::domain_error("denominator of " + value.get_str() + " vanishes in " + field.name());
    s.r_ = mul_mod(static_cast<std::uint32_t>(num),
                   pow_mod(static_cast<std::uint32_t>(den), field.characteristic() - 2, field.characteristic()),
                   field.characteristic());
    return s;
}

Scalar Scalar::parse(Field field, std::string_view text)
{
    const std::string original(text);
    if (field.is_finite()) {
        if (!all_digits(text)) throw std::invalid_argument("'" + original + "' is not a residue in " + field.name());
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc{} || v >= field.characteristic())
            throw std::invalid_argument("'" + original + "' is not a residue in [0, " +
                                        std::to_string(field.characteristic()) + ")");
        return Scalar(field, static_cast<long>(v));
    }
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    auto slash = text.find('/');
    auto num = text.substr(0, slash);
    auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("'" + original + "' is not a rational");
    const mpz_class n{std::string(num)};
    const mpz_class d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + original + "'");
    mpq_class q(negative ? mpz_class(-n) : n, d);
    return from_rational(field, q);
}

bool Scalar::is_zero() const noexcept
{
    return field_.is_rationals() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const noexcept
{
    return field_.is_rationals() ? q_ == 1 : r_ == 1;
}

const mpq_class& Scalar::rational() const
{
    if (!field_.is_rationals()) throw std::logic_error("rational() on a prime-field scalar");
    return q_;
}

std::uint32_t Scalar::residue() const
{
    if (field_.is_rationals()) throw std::logic_error("residue() on a rational scalar");
    return r_;
}

void Scalar::require_same_field(const Scalar& other) const
{
    if (!(field_ == other.field_))
        throw std::invalid_argument("field mismatch: " + field_.name() + " vs " + other.field_.name());
}

Scalar Scalar::inverse() const
{
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar s = *this;
    if (field_.is_rationals())
        s.q_ = 1 / q_;
    else
        s.r_ = pow_mod(r_, field_.characteristic() - 2, field_.characteristic());
    return s;
}

Scalar Scalar::operator-() const
{
    Scalar s = *this;
    if (field_.is_rationals())
        s.q_ = -q_;
    else if (r_ != 0)
        s.r_ = field_.characteristic() - r_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& other)
{
    require_same_field(other);
    if (field_.is_rationals()) {
        q_ += other.q_;
    } else {
        std::uint64_t v = static_cast<std::uint64_t>(r_) + other.r_;
        r_ = static_cast<std::uint32_t>(v % field_.characteristic());
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other)
{
    require_same_field(other);
    if (field_.is_rationals()) {
        q_ -= other.q_;
    } else {
        const std::uint32_t p = field_.characteristic();
        r_ = r_ >= other.r_ ? r_ - other.r_ : r_ + (p - other.r_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& other)
{
    require_same_field(other);
    if (field_.is_rationals())
        q_ *= other.q_;
    else
        r_ = mul_mod(r_, other.r_, field_.characteristic());
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& other)
{
    require_same_field(other);
    return *this *= other.inverse();
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (!(a.field_ == b.field_)) return false;
    return a.field_.is_rationals() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::str() const
{
    return field_.is_rationals() ? q_.get_str() : std::to_string(r_);
}

std::string to_string(const Scalar& s)
{
    return s.str();
}

}  // namespace leibniz
