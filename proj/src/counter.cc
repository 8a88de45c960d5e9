#include "baire/counter.hh"

#include <algorithm>
#include <map>
#include <numeric>

#include "baire/category.hh"
#include "baire/error.hh"

namespace baire
{
  void CounterLanguage::validate() const
  {
    if (terminal == branching)
      throw InputError("terminal and branching letters must differ");
    if (!alphabet.contains(terminal) || !alphabet.contains(branching))
      throw InputError("terminal and branching letters must be alphabet symbols");
    if (arity < 2)
      throw InputError("arity must be at least 2");
  }

  std::optional<long> CounterLanguage::weight(char c) const
  {
    if (c == terminal)
      return -1;
    if (c == branching)
      return arity - 1;
    return std::nullopt;
  }

  const char* to_string(CounterStatus s)
  {
    switch (s) {
    case CounterStatus::in_language: return "in_V";
    case CounterStatus::proper_prefix: return "proper_prefix";
    case CounterStatus::dead: return "dead";
    }
    return "?";
  }

  CounterRun counter_run(const CounterLanguage& lang, std::string_view w)
  {
    lang.validate();
    CounterRun out{CounterStatus::proper_prefix, {1}};
    long c = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto d = lang.weight(w[i]);
      if (!d) {
        out.status = CounterStatus::dead;
        return out;
      }
      c += *d;
      out.trace.push_back(c);
      if (c == 0) {
        out.status = i + 1 == w.size() ? CounterStatus::in_language : CounterStatus::dead;
        return out;
      }
    }
    return out;
  }

  CounterEvent first_counter_event(const CounterLanguage& lang, const UPWord& x)
  {
    lang.validate();
    long c = 1;
    std::size_t pos = 0;
    auto step = [&](char ch) -> std::optional<CounterEvent> {
      auto d = lang.weight(ch);
      if (!d)
        return CounterEvent{CounterEvent::Kind::foreign, pos};
      c += *d;
      if (c == 0)
        return CounterEvent{CounterEvent::Kind::zero, pos};
      ++pos;
      return std::nullopt;
    };
    for (char ch : x.prefix)
      if (auto ev = step(ch))
        return *ev;

    bool foreign = false;
    long drift = 0, low = 0;
    for (char ch : x.period) {
      auto d = lang.weight(ch);
      if (!d) {
        foreign = true;
        break;
      }
      drift += *d;
      low = std::min(low, drift);
    }
    if (!foreign && c + low > 0) {
      if (drift >= 0)
        return {CounterEvent::Kind::never, 0};
      // skip the periods that cannot reach zero
      long periods = (c + low + (-drift) - 1) / (-drift);
      c += periods * drift;
      pos += static_cast<std::size_t>(periods) * x.period.size();
    }
    for (char ch : x.period)
      if (auto ev = step(ch))
        return *ev;
    throw InvariantViolation("counter stream analysis missed an event");
  }

  bool f1_member_up(const UPWord& x, const CounterLanguage& lang, char separator)
  {
    std::vector<char> symbols = lang.alphabet.symbols();
    if (!lang.alphabet.contains(separator))
      symbols.push_back(separator);
    Alphabet full(symbols);
    full.validate(x.prefix);
    full.validate(x.period);
    auto ev = first_counter_event(lang, x);
    return ev.kind == CounterEvent::Kind::zero && x.at(ev.position + 1) == separator;
  }

  bool f2_member_up(const UPWord& x, const CounterLanguage& lang)
  {
    lang.alphabet.validate(x.prefix);
    lang.alphabet.validate(x.period);
    auto ev = first_counter_event(lang, x);
    if (ev.kind == CounterEvent::Kind::foreign)
      throw InputError(std::string("symbol '") + x.at(ev.position) + "' has no counter action");
    return ev.kind == CounterEvent::Kind::never;
  }

  Rational IntPolynomial::operator()(const Rational& t) const
  {
    Rational acc;
    for (long long c : coeffs)
      acc = acc * t + Rational(static_cast<long>(c));
    return acc;
  }

  IntPolynomial root_polynomial(int k)
  {
    return {{1, 0, -static_cast<long long>(k), 1}};
  }

  std::string Interval::str() const
  {
    return "[" + lo.str() + ", " + hi.str() + "]";
  }

  Interval min_positive_root(int k, unsigned precision)
  {
    if (k < 2)
      throw InputError("alphabet size must be at least 2");
    auto p = root_polynomial(k);
    Interval iv{Rational(0), Rational(1)};
    mpz_class one_bit = 1;
    Rational target(mpq_class(mpz_class(1), mpz_class(one_bit << precision)));
    // p(0) = 1 > 0 and p(1) = 2 - k <= 0; keep p(lo) > 0 >= p(hi)
    while (iv.width() > target) {
      Rational mid = iv.midpoint();
      Rational v = p(mid);
      if (v.is_zero())
        return {mid, mid};
      if (v.sign() > 0)
        iv.lo = mid;
      else
        iv.hi = mid;
    }
    if (p(iv.lo).sign() <= 0 || p(iv.hi).sign() > 0)
      throw InvariantViolation("root interval lost its sign change");
    return iv;
  }

  std::string root_decimal(int k, unsigned digits, unsigned precision)
  {
    for (;; precision *= 2) {
      auto iv = min_positive_root(k, precision);
      auto lo = iv.lo.decimal(digits), hi = iv.hi.decimal(digits);
      if (lo == hi)
        return lo;
      if (precision > 1u << 16)
        throw CapacityError("root rendering did not settle");
    }
  }

  namespace
  {
    std::vector<long long> divisors(long long n)
    {
      n = n < 0 ? -n : n;
      std::vector<long long> out;
      for (long long d = 1; d <= n; ++d)
        if (n % d == 0)
          out.push_back(d);
      return out;
    }

    long long isqrt_floor(long long n)
    {
      long long s = 0;
      while ((s + 1) * (s + 1) <= n)
        ++s;
      return s;
    }
  }

  IrrationalityCertificate irrationality_certificate(int k)
  {
    IrrationalityCertificate cert;
    cert.k = k;
    cert.polynomial = root_polynomial(k);
    const auto& cs = cert.polynomial.coeffs;
    for (long long p : divisors(cs.back()))
      for (long long q : divisors(cs.front()))
        for (long long s : {1LL, -1LL}) {
          Rational cand(static_cast<long>(s * p), static_cast<long>(q));
          if (std::any_of(cert.candidates.begin(), cert.candidates.end(),
                          [&](auto& e) { return e.first == cand; }))
            continue;
          cert.candidates.emplace_back(cand, cert.polynomial(cand));
        }
    auto root = min_positive_root(k, 64);
    cert.root_upper_bound = root.hi;
    std::optional<Rational> split;
    for (auto& [cand, value] : cert.candidates)
      if (value.is_zero()) {
        if (root.contains(cand))
          throw InputError("least positive root is rational for k = " + std::to_string(k));
        split = cand;
      }
    if (!split)
      return cert;
    if (split->denominator() != 1)
      throw InputError("unsupported rational root structure for k = " + std::to_string(k));
    // synthetic division by (t - r)
    long long r = split->numerator().get_si();
    std::vector<long long> quot;
    long long carry = 0;
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
      carry = carry * r + cs[i];
      quot.push_back(carry);
    }
    if (quot.size() != 3)
      throw InputError("unsupported factor structure for k = " + std::to_string(k));
    cert.rational_root = *split;
    cert.quadratic = IntPolynomial{quot};
    cert.discriminant = quot[1] * quot[1] - 4 * quot[0] * quot[2];
    cert.discriminant_floor_sqrt = isqrt_floor(cert.discriminant);
    if (cert.discriminant <= 0 || cert.discriminant_floor_sqrt * cert.discriminant_floor_sqrt == cert.discriminant)
      throw InputError("quadratic factor has rational roots for k = " + std::to_string(k));
    return cert;
  }

  bool replay(const IrrationalityCertificate& cert)
  {
    if (!(cert.polynomial == root_polynomial(cert.k)))
      return false;
    bool any_zero = false;
    for (auto& [cand, value] : cert.candidates) {
      if (cert.polynomial(cand) != value)
        return false;
      any_zero |= value.is_zero();
    }
    // every ±p/q with p | a0, q | an must have been tried
    for (long long p : divisors(cert.polynomial.coeffs.back()))
      for (long long q : divisors(cert.polynomial.coeffs.front()))
        for (long long s : {1LL, -1LL}) {
          Rational cand(static_cast<long>(s * p), static_cast<long>(q));
          if (std::none_of(cert.candidates.begin(), cert.candidates.end(),
                           [&](auto& e) { return e.first == cand; }))
            return false;
        }
    auto root = min_positive_root(cert.k, 64);
    if (!(root.hi <= cert.root_upper_bound) || !(root.lo < cert.root_upper_bound))
      return false;
    if (!any_zero)
      return !cert.rational_root && !cert.quadratic;
    if (!cert.rational_root || !cert.quadratic)
      return false;
    if (!cert.polynomial(*cert.rational_root).is_zero() || !(cert.root_upper_bound < *cert.rational_root))
      return false;
    // quadratic · (t - r) = polynomial
    const auto& q = cert.quadratic->coeffs;
    long long r = cert.rational_root->numerator().get_si();
    std::vector<long long> prod(q.size() + 1, 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      prod[i] += q[i];
      prod[i + 1] -= q[i] * r;
    }
    if (prod != cert.polynomial.coeffs)
      return false;
    long long d = q[1] * q[1] - 4 * q[0] * q[2];
    long long s = cert.discriminant_floor_sqrt;
    return d == cert.discriminant && s * s < d && d < (s + 1) * (s + 1);
  }

  namespace
  {
    // Distribution of the counter over runs that stayed positive, and the
    // mass absorbed at zero.
    std::pair<Rational, Rational> counter_dp(const CounterLanguage& lang, std::size_t n,
                                             const BernoulliMeasure& m)
    {
      lang.validate();
      require_same_alphabet(lang.alphabet, m.alphabet(), "survival_probability");
      Rational pd = m.prob(static_cast<std::size_t>(lang.alphabet.index(lang.terminal)));
      Rational ps = m.prob(static_cast<std::size_t>(lang.alphabet.index(lang.branching)));
      std::map<long, Rational> dist{{1, Rational(1)}};
      Rational hit;
      for (std::size_t step = 0; step < n; ++step) {
        std::map<long, Rational> next;
        for (auto& [c, p] : dist) {
          if (c == 1)
            hit += p * pd;
          else
            next[c - 1] += p * pd;
          next[c + lang.arity - 1] += p * ps;
        }
        dist = std::move(next);
      }
      Rational alive;
      for (auto& [c, p] : dist)
        alive += p;
      return {alive, hit};
    }
  }

  Rational survival_probability(const CounterLanguage& lang, std::size_t n, const BernoulliMeasure& m)
  {
    return counter_dp(lang, n, m).first;
  }

  Rational hitting_probability(const CounterLanguage& lang, std::size_t n, const BernoulliMeasure& m)
  {
    return counter_dp(lang, n, m).second;
  }

  Word f2_nowhere_dense_witness(const CounterLanguage& lang, const Word& w)
  {
    auto run = counter_run(lang, w);
    if (run.status != CounterStatus::proper_prefix)
      throw InputError("'" + w + "' is not a proper prefix of a word in V");
    Word z(static_cast<std::size_t>(run.trace.back()), lang.terminal);
    if (counter_run(lang, w + z).status != CounterStatus::in_language)
      throw InvariantViolation("nowhere-density extension of '" + w + "' does not complete a word in V");
    return z;
  }

  namespace
  {
    void require_f1_alphabet(const Alphabet& a)
    {
      auto syms = a.symbols();
      std::sort(syms.begin(), syms.end());
      if (syms != std::vector<char>{'a', 'b', 'c'})
        throw InputError("f1_refute_open needs an open set over {a, b, c}, got {" + a.str() + "}");
    }

    bool ball_in_f1_outside_closure(const OpenSet& e, const Word& ball)
    {
      if (ball.empty() || ball.back() != 'c')
        return false;
      Word v = ball.substr(0, ball.size() - 1);
      return counter_run(CounterLanguage::v3(), v).status == CounterStatus::in_language && !e.meets_ball(ball);
    }

    bool ball_in_e_outside_f1(const OpenSet& e, const Word& ball)
    {
      auto c = ball.find('c');
      if (c == Word::npos)
        return false;
      return counter_run(CounterLanguage::v3(), ball.substr(0, c)).status != CounterStatus::in_language
          && e.contains_ball(ball);
    }

    std::optional<RefutationReport::Side> compare(const Rational& measure, const Interval& t3)
    {
      if (measure < t3.lo / Rational(3))
        return RefutationReport::Side::below;
      if (measure > t3.hi / Rational(3))
        return RefutationReport::Side::above;
      return std::nullopt;
    }
  }

  RefutationReport f1_refute_open(const OpenSet& e, unsigned precision, std::size_t search_cap)
  {
    require_f1_alphabet(e.alphabet());
    auto uniform = BernoulliMeasure::uniform(e.alphabet());
    RefutationReport out;
    auto as_dma = open_to_dma(e);
    out.measure = mu(as_dma, uniform);
    out.closure_measure = mu(closure(as_dma), uniform);
    if (out.measure != out.closure_measure)
      throw InvariantViolation("open set has a boundary of positive measure");

    std::optional<RefutationReport::Side> side;
    for (out.precision = std::max(precision, 8u); out.precision <= 8192; out.precision *= 2) {
      out.t3 = min_positive_root(3, out.precision);
      if ((side = compare(out.measure, out.t3)))
        break;
    }
    if (!side)
      throw InvariantViolation("could not separate a rational measure from t3/3");
    out.side = *side;

    for_each_word(e.alphabet(), search_cap, [&](const Word& w) {
      if (out.side == RefutationReport::Side::below && ball_in_f1_outside_closure(e, w)) {
        out.ball_kind = RefutationReport::Ball::f1_minus_closure;
        out.ball = w;
        return true;
      }
      if (out.side == RefutationReport::Side::above && ball_in_e_outside_f1(e, w)) {
        out.ball_kind = RefutationReport::Ball::e_minus_f1;
        out.ball = w;
        return true;
      }
      return false;
    });
    return out;
  }

  bool replay(const RefutationReport& report, const OpenSet& e, unsigned precision)
  {
    auto uniform = BernoulliMeasure::uniform(e.alphabet());
    if (mu(open_to_dma(e), uniform) != report.measure)
      return false;
    auto side = compare(report.measure, min_positive_root(3, precision));
    if (side != report.side)
      return false;
    switch (report.ball_kind) {
    case RefutationReport::Ball::none: return true;
    case RefutationReport::Ball::f1_minus_closure: return ball_in_f1_outside_closure(e, report.ball);
    case RefutationReport::Ball::e_minus_f1: return ball_in_e_outside_f1(e, report.ball);
    }
    return false;
  }
}
