#include "graph.hh"

#include <algorithm>
#include <limits>

#include "baire/error.hh"

namespace baire::detail
{
  std::vector<StateSet> sccs(GraphView g, std::span<const char> mask)
  {
    constexpr State none = std::numeric_limits<State>::max();
    const std::size_t n = g.size();
    std::vector<State> index(n, none), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<State> stack;
    std::vector<StateSet> out;
    State counter = 0;

    struct Frame
    {
      State q;
      std::size_t edge;
    };
    std::vector<Frame> call;

    for (State root = 0; root < n; ++root) {
      if (!mask[root] || index[root] != none)
        continue;
      call.push_back({root, 0});
      index[root] = low[root] = counter++;
      stack.push_back(root);
      on_stack[root] = 1;
      while (!call.empty()) {
        Frame& f = call.back();
        if (f.edge < g.arity) {
          State r = g.next(f.q, f.edge++);
          if (!mask[r])
            continue;
          if (index[r] == none) {
            index[r] = low[r] = counter++;
            stack.push_back(r);
            on_stack[r] = 1;
            call.push_back({r, 0});
          } else if (on_stack[r]) {
            low[f.q] = std::min(low[f.q], index[r]);
          }
          continue;
        }
        State q = f.q;
        call.pop_back();
        if (!call.empty())
          low[call.back().q] = std::min(low[call.back().q], low[q]);
        if (low[q] == index[q]) {
          StateSet comp;
          State r;
          do {
            r = stack.back();
            stack.pop_back();
            on_stack[r] = 0;
            comp.push_back(r);
          } while (r != q);
          std::sort(comp.begin(), comp.end());
          out.push_back(std::move(comp));
        }
      }
    }
    return out;
  }

  std::vector<char> to_mask(const StateSet& set, std::size_t n)
  {
    std::vector<char> mask(n, 0);
    for (State q : set)
      mask[q] = 1;
    return mask;
  }

  std::vector<StateSet> sccs_within(GraphView g, const StateSet& region)
  {
    return sccs(g, to_mask(region, g.size()));
  }

  bool is_cycle_set(GraphView g, const StateSet& scc)
  {
    if (scc.size() > 1)
      return true;
    if (scc.empty())
      return false;
    for (std::size_t x = 0; x < g.arity; ++x)
      if (g.next(scc[0], x) == scc[0])
        return true;
    return false;
  }

  bool is_closed(GraphView g, const StateSet& set)
  {
    for (State q : set)
      for (std::size_t x = 0; x < g.arity; ++x)
        if (!std::binary_search(set.begin(), set.end(), g.next(q, x)))
          return false;
    return true;
  }

  std::vector<char> backward_reachable(GraphView g, std::span<const char> targets)
  {
    const std::size_t n = g.size();
    std::vector<std::vector<State>> pred(n);
    for (State q = 0; q < n; ++q)
      for (std::size_t x = 0; x < g.arity; ++x)
        pred[g.next(q, x)].push_back(q);
    std::vector<char> seen(targets.begin(), targets.end());
    std::vector<State> work;
    for (State q = 0; q < n; ++q)
      if (seen[q])
        work.push_back(q);
    while (!work.empty()) {
      State q = work.back();
      work.pop_back();
      for (State p : pred[q])
        if (!seen[p]) {
          seen[p] = 1;
          work.push_back(p);
        }
    }
    return seen;
  }

  std::vector<char> forward_reachable(GraphView g, State from)
  {
    std::vector<char> seen(g.size(), 0);
    std::vector<State> work{from};
    seen[from] = 1;
    while (!work.empty()) {
      State q = work.back();
      work.pop_back();
      for (std::size_t x = 0; x < g.arity; ++x) {
        State r = g.next(q, x);
        if (!seen[r]) {
          seen[r] = 1;
          work.push_back(r);
        }
      }
    }
    return seen;
  }

  namespace
  {
    void collect_cycles(GraphView g, const std::vector<char>& mask, std::set<StateSet>& out,
                        std::size_t limit)
    {
      for (auto& comp : sccs(g, mask)) {
        if (!is_cycle_set(g, comp) || !out.insert(comp).second)
          continue;
        if (out.size() > limit)
          throw CapacityError("more than " + std::to_string(limit) + " strongly connected state sets");
        if (comp.size() == 1)
          continue;
        auto sub = to_mask(comp, g.size());
        for (State q : comp) {
          sub[q] = 0;
          collect_cycles(g, sub, out, limit);
          sub[q] = 1;
        }
      }
    }
  }

  std::set<StateSet> cycle_sets(GraphView g, std::span<const char> mask, std::size_t limit)
  {
    std::set<StateSet> out;
    collect_cycles(g, std::vector<char>(mask.begin(), mask.end()), out, limit);
    return out;
  }
}
