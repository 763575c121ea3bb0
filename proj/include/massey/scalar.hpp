#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace massey {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Serializes as "p/q", or "p" when the denominator is one.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Scalar(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    Scalar(long numerator, long denominator);
    explicit Scalar(mpq_class value);

    /// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
    /// or a zero denominator.
    static Scalar parse(std::string_view text);

    std::string str() const { return value_.get_str(); }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    int sign() const { return sgn(value_); }
    bool is_integer() const { return value_.get_den() == 1; }
    const mpq_class& raw() const { return value_; }
    std::string numerator_str() const { return value_.get_num().get_str(); }
    std::string denominator_str() const { return value_.get_den().get_str(); }

    Scalar& operator+=(const Scalar& o) { value_ += o.value_; return *this; }
    Scalar& operator-=(const Scalar& o) { value_ -= o.value_; return *this; }
    Scalar& operator*=(const Scalar& o) { value_ *= o.value_; return *this; }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { return Scalar(mpq_class(-value_)); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
    mpq_class value_{0};
};

}  // namespace massey
