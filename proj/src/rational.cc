#include "baire/rational.hh"

#include <ostream>

#include "baire/error.hh"

namespace baire
{
  Rational::Rational(long num, long den)
  {
    if (den == 0)
      throw InputError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }

  Rational::Rational(mpq_class value) : value_(std::move(value))
  {
    value_.canonicalize();
  }

  Rational Rational::parse(std::string_view text)
  {
    auto valid_int = [](std::string_view s) {
      if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
      if (s.empty())
        return false;
      for (char c : s)
        if (c < '0' || c > '9')
          return false;
      return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
      throw ParseError(0, "malformed rational '" + std::string(text) + "'");
    mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
      throw ParseError(0, "rational with zero denominator '" + std::string(text) + "'");
    return Rational(mpq_class(n, d));
  }

  Rational& Rational::operator/=(const Rational& o)
  {
    if (o.is_zero())
      throw InvariantViolation("rational division by zero");
    value_ /= o.value_;
    return *this;
  }

  std::string Rational::str() const
  {
    if (value_.get_den() == 1)
      return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  std::string Rational::decimal(unsigned digits) const
  {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpz_class num = abs(value_.get_num()) * scale;
    mpz_class den = value_.get_den();
    // round half away from zero: floor((2*num + den) / (2*den))
    mpz_class scaled = (2 * num + den) / (2 * den);
    std::string body = scaled.get_str();
    if (body.size() <= digits)
      body.insert(0, digits + 1 - body.size(), '0');
    std::string out = sign() < 0 && scaled != 0 ? "-" : "";
    out += body.substr(0, body.size() - digits);
    if (digits > 0)
      out += "." + body.substr(body.size() - digits);
    return out;
  }

  std::ostream& operator<<(std::ostream& os, const Rational& r)
  {
    return os << r.str();
  }

  Rational abs(const Rational& r)
  {
    return r.sign() < 0 ? -r : r;
  }
}
