#pragma once

#include <optional>
#include <vector>

#include "baire/automata.hh"

namespace baire
{
  /// A pair (E, F′) with E regular open and F′ regular meager such that
  /// F Δ E ⊆ F′ for the language F it witnesses.
  struct AbpWitness
  {
    OpenSet e;
    Dma fprime;
  };

  struct WitnessCheck
  {
    enum class Failure { none, fprime_not_meager, not_covered };

    Failure failure = Failure::none;
    std::optional<UPWord> counterexample;  ///< in (F Δ E) \ F′

    bool ok() const noexcept { return failure == Failure::none; }
    explicit operator bool() const noexcept { return ok(); }
  };

  /// E collects the balls whose state accepts with probability one under
  /// the uniform measure; F′ = F Δ E. Verified before returning.
  AbpWitness synthesize_abp_witness(const Dma& f);

  WitnessCheck verify_abp_witness(const Dma& f, const AbpWitness& w);

  /// Witness for F1 ∪ F2 from witnesses of F1 and F2.
  AbpWitness union_witness(const Dma& f1, const AbpWitness& w1, const Dma& f2, const AbpWitness& w2);

  /// Witness for X^ω \ F. E is replaced by the interior of its complement
  /// and the (nowhere dense) boundary joins F′.
  AbpWitness complement_witness(const Dma& f, const AbpWitness& w);

  /// De Morgan composition of union_witness and complement_witness.
  AbpWitness intersection_witness(const Dma& f1, const AbpWitness& w1, const Dma& f2, const AbpWitness& w2);

  struct FiniteUpWitness
  {
    AbpWitness witness;        ///< E = ∅
    std::vector<Word> avoided; ///< the infix each input word misses
  };

  /// Witness for a finite set of UP words: F′ is the union of the
  /// infix-avoiding sets X^ω \ X*·w_ξ·X^ω.
  FiniteUpWitness finite_up_abp(const Alphabet& alphabet, const std::vector<UPWord>& words);
}
