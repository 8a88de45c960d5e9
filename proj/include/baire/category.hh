#pragma once

#include <optional>

#include "baire/automata.hh"
#include "baire/measure.hh"

namespace baire
{
  /// First Baire category: no reachable bottom SCC is an accepted inf-set.
  bool is_meager(const Dma& a);

  /// Same question answered through μ(L(a)) = 0 under a full-support
  /// balanced measure (uniform when omitted). Kept independent of is_meager.
  bool is_meager_via_measure(const Dma& a);
  bool is_meager_via_measure(const Dma& a, const BernoulliMeasure& m);

  /// Some member of L(a) contains every finite word as an infix.
  bool contains_disjunctive(const Dma& a);

  /// pref L(a) = X*.
  bool is_dense(const Dma& a);

  /// The closure has empty interior.
  bool is_nowhere_dense(const Dma& a);

  /// X^ω \ X*·w·X^ω: the ω-words in which w never occurs.
  Dma avoid_infix(const Alphabet& alphabet, const Word& w);

  /// Shortlex-least w with |w| <= max_len and L(a) ⊆ X^ω \ X*·w·X^ω, or
  /// nullopt when the search is exhausted. Requires a meager L(a).
  std::optional<Word> avoided_infix(const Dma& a, std::size_t max_len = 8);
}
