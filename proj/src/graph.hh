#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "baire/automata.hh"

namespace baire::detail
{
  /// Complete deterministic transition graph: `delta[q * arity + x]`.
  struct GraphView
  {
    std::span<const State> delta;
    std::size_t arity;

    std::size_t size() const { return arity ? delta.size() / arity : 0; }
    State next(State q, std::size_t x) const { return delta[q * arity + x]; }
  };

  /// SCCs of the subgraph induced by `mask`, successors before predecessors.
  /// Each component is sorted.
  std::vector<StateSet> sccs(GraphView g, std::span<const char> mask);

  /// SCCs of the subgraph induced by `region` (a sorted state set).
  std::vector<StateSet> sccs_within(GraphView g, const StateSet& region);

  /// True if the set carries a cycle: more than one state, or a self-loop.
  bool is_cycle_set(GraphView g, const StateSet& scc);

  /// True if no transition leaves the set.
  bool is_closed(GraphView g, const StateSet& set);

  /// States from which some state in `targets` is reachable.
  std::vector<char> backward_reachable(GraphView g, std::span<const char> targets);

  /// States reachable from `from`.
  std::vector<char> forward_reachable(GraphView g, State from);

  /// Every strongly connected state set (one carrying a cycle) of the
  /// subgraph induced by `mask`. Throws CapacityError beyond `limit` sets.
  std::set<StateSet> cycle_sets(GraphView g, std::span<const char> mask, std::size_t limit);

  std::vector<char> to_mask(const StateSet& set, std::size_t n);
}
