#pragma once

#include <optional>
#include <vector>

#include "baire/automata.hh"
#include "baire/measure.hh"
#include "baire/rational.hh"

namespace baire
{
  /// The prefix-free language V = d ∪ s·V^m, recognised by a one-counter
  /// automaton with empty-storage acceptance: the counter starts at 1, the
  /// terminal letter d adds -1, the branching letter s adds m-1, and a word
  /// belongs to V iff the counter first reaches 0 at its last letter.
  struct CounterLanguage
  {
    Alphabet alphabet = Alphabet({'a', 'b'});
    char terminal = 'a';
    char branching = 'b';
    int arity = 3;

    /// The default ternary language over {a, b}.
    static CounterLanguage v3() { return {}; }

    /// Throws InputError unless d ≠ s, both are symbols and arity >= 2.
    void validate() const;

    /// Counter increment of `c`, or nullopt for any other symbol.
    std::optional<long> weight(char c) const;
  };

  enum class CounterStatus
  {
    in_language,    ///< counter first hits 0 at the last letter
    proper_prefix,  ///< counter positive throughout
    dead,           ///< hit 0 early, or a foreign symbol
  };

  const char* to_string(CounterStatus s);

  struct CounterRun
  {
    CounterStatus status;
    std::vector<long> trace;  ///< counter after each letter, starting with 1
  };

  CounterRun counter_run(const CounterLanguage& lang, std::string_view w);

  /// First event along the counter stream of an ultimately periodic word.
  struct CounterEvent
  {
    enum class Kind { zero, foreign, never };
    Kind kind = Kind::never;
    std::size_t position = 0;  ///< index of the letter that zeroes the counter / is foreign
  };

  /// Exact: the periodic part is analysed by its drift rather than simulated
  /// to a horizon.
  CounterEvent first_counter_event(const CounterLanguage& lang, const UPWord& x);

  /// x ∈ V·c·{a,b,c}^ω, for x over lang.alphabet ∪ {separator}.
  bool f1_member_up(const UPWord& x, const CounterLanguage& lang = CounterLanguage::v3(), char separator = 'c');

  /// No prefix of x lies in V, for x over lang.alphabet.
  bool f2_member_up(const UPWord& x, const CounterLanguage& lang = CounterLanguage::v3());

  /// Integer polynomial, coefficients from the highest degree down.
  struct IntPolynomial
  {
    std::vector<long long> coeffs;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    Rational operator()(const Rational& t) const;
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  };

  /// t³ - k·t + 1, whose least positive root is Σ_{v∈V} k^{-|v|} for the
  /// ternary language over a k-letter alphabet.
  IntPolynomial root_polynomial(int k);

  struct Interval
  {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }
    bool contains(const Rational& r) const { return lo <= r && r <= hi; }

    /// `[p1/q1, p2/q2]`.
    std::string str() const;
  };

  /// Interval of width <= 2^-precision around the least root in (0,1) of
  /// t³ - k·t + 1, by exact bisection. Sign change verified at both ends.
  Interval min_positive_root(int k, unsigned precision = 64);

  /// The root rounded to `digits` decimals, refining from `precision` bits
  /// until both interval ends round alike.
  std::string root_decimal(int k, unsigned digits, unsigned precision = 64);

  struct IrrationalityCertificate
  {
    int k = 0;
    IntPolynomial polynomial;
    /// Rational-root-theorem candidates and the polynomial's value there.
    std::vector<std::pair<Rational, Rational>> candidates;
    /// Set when a rational root (t = 1 for k = 2) is split off.
    std::optional<Rational> rational_root;
    /// Remaining quadratic factor containing the least positive root.
    std::optional<IntPolynomial> quadratic;
    long long discriminant = 0;
    long long discriminant_floor_sqrt = 0;  ///< s with s² < D < (s+1)²
    /// The least positive root lies strictly below this bound, which
    /// separates it from the rational root.
    Rational root_upper_bound;
  };

  /// Certifies that the least positive root of t³ - k·t + 1 is irrational.
  IrrationalityCertificate irrationality_certificate(int k);

  /// Re-evaluates every recorded value and bound.
  bool replay(const IrrationalityCertificate& cert);

  /// Probability under `m` that the counter stays positive for n letters.
  Rational survival_probability(const CounterLanguage& lang, std::size_t n, const BernoulliMeasure& m);

  /// Probability that a prefix of length <= n lies in V.
  Rational hitting_probability(const CounterLanguage& lang, std::size_t n, const BernoulliMeasure& m);

  /// For w with a positive counter, the extension z = d^{counter(w)}; w·z ∈ V.
  Word f2_nowhere_dense_witness(const CounterLanguage& lang, const Word& w);

  struct RefutationReport
  {
    enum class Side { below, above };           ///< μ(E) vs μ(F1) = t3/3
    enum class Ball { none, f1_minus_closure, e_minus_f1 };

    Rational measure;           ///< μ(E)
    Rational closure_measure;   ///< μ(C(E)), equal to μ(E)
    Interval t3;                ///< isolating interval used for the comparison
    unsigned precision = 0;
    Side side = Side::below;
    Ball ball_kind = Ball::none;
    Word ball;                  ///< the witness ball is ball·X^ω
  };

  /// Shows that an open regular E over {a,b,c} cannot witness the
  /// Automatic Baire property of V·c·{a,b,c}^ω.
  RefutationReport f1_refute_open(const OpenSet& e, unsigned precision = 64, std::size_t search_cap = 6);

  /// Re-checks the inequality against a fresh root interval at `precision`
  /// and the ball against E.
  bool replay(const RefutationReport& report, const OpenSet& e, unsigned precision);
}
