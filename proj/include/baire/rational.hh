#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace baire
{
  /// Exact rational number, always in lowest terms with a positive
  /// denominator.
  class Rational
  {
  public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(long num, long den);
    explicit Rational(mpq_class value);

    /// Parses `p`, `-p` or `p/q`.
    static Rational parse(std::string_view text);

    const mpq_class& value() const noexcept { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }

    /// `p/q`, or `p` when q = 1.
    std::string str() const;

    /// Decimal expansion rounded half away from zero to `digits` places.
    std::string decimal(unsigned digits) const;

    /// Nearest double; for display and coarse tolerance checks only.
    double approx() const { return value_.get_d(); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
      int c = cmp(a.value_, b.value_);
      return c < 0 ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
    }

  private:
    mpq_class value_{0};
  };

  std::ostream& operator<<(std::ostream& os, const Rational& r);

  Rational abs(const Rational& r);
}
