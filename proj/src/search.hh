#pragma once

#include <vector>

#include "baire/automata.hh"

namespace baire::detail
{
  /// Accepted strongly connected state sets of `a`. With `first_only` the
  /// search stops at the first one. Otherwise every accepted inf-set is a
  /// subset of some returned set, and every returned set is itself accepted.
  std::vector<StateSet> accepting_cycles(const Dma& a, bool first_only);
}
