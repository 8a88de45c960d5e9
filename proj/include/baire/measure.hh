#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "baire/automata.hh"
#include "baire/rational.hh"

namespace baire
{
  /// Product measure on X^ω with rational, strictly positive letter
  /// probabilities summing to one. Full support and balanced with constant
  /// min_x prob(x).
  class BernoulliMeasure
  {
  public:
    BernoulliMeasure(Alphabet alphabet, std::vector<Rational> probs);

    static BernoulliMeasure uniform(const Alphabet& alphabet);

    /// `uniform` or `a=1/2 b=1/3 c=1/6`.
    static BernoulliMeasure parse(const Alphabet& alphabet, std::string_view text);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const Rational& prob(std::size_t symbol) const { return probs_.at(symbol); }
    const std::vector<Rational>& probs() const noexcept { return probs_; }

    /// c_μ: every sub-ball wx·X^ω carries at least this fraction of w·X^ω.
    Rational balance_constant() const;

    /// Measure of the ball w·X^ω.
    Rational ball(std::string_view w) const;

    bool is_uniform() const;
    std::string str() const;

  private:
    Alphabet alphabet_;
    std::vector<Rational> probs_;
  };

  /// Exact solution of a square non-singular system by Gaussian
  /// elimination. Throws InvariantViolation when singular.
  std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> matrix,
                                    std::vector<Rational> rhs);

  /// Bottom strongly connected components of the transition graph.
  std::vector<StateSet> bsccs(const Dma& a);

  /// Per-state probability that the run from that state is accepted.
  std::vector<Rational> acceptance_probabilities(const Dma& a, const BernoulliMeasure& m);

  /// μ(L(a)).
  Rational mu(const Dma& a, const BernoulliMeasure& m);

  /// Σ_{w ∈ W} Π prob(w_i) for a prefix-free W given by a word automaton.
  /// Throws InputError naming a violating pair when W is not prefix-free.
  Rational sigma_prefix_free(const WordDfa& w, const BernoulliMeasure& m);
}
