#include "search.hh"

#include <algorithm>

#include "graph.hh"

namespace baire::detail
{
  namespace
  {
    // Requirement that the final cycle visit some state whose projection on
    // `component` is marked.
    struct Hit
    {
      std::size_t component;
      std::vector<char> marked;
    };

    class CycleSearch
    {
    public:
      CycleSearch(const Dma& a, bool first_only)
        : a_(a), graph_{a.transitions(), a.alphabet().size()}, first_only_(first_only),
          values_(a.component_count(), -1)
      {
      }

      std::vector<StateSet> run()
      {
        std::vector<char> all(a_.size(), 1);
        std::vector<Hit> hits;
        for (auto& scc : sccs(graph_, all))
          if (is_cycle_set(graph_, scc) && descend(0, scc, hits))
            break;
        return std::move(found_);
      }

    private:
      const Dma& a_;
      GraphView graph_;
      bool first_only_;
      std::vector<std::int8_t> values_;
      std::vector<StateSet> found_;

      bool satisfies(const StateSet& region, const Hit& h) const
      {
        return std::any_of(region.begin(), region.end(), [&](State q) {
          return h.marked[a_.projection(q, h.component)] != 0;
        });
      }

      std::vector<char> projected(const StateSet& region, std::size_t i) const
      {
        std::vector<char> out(a_.component(i).size, 0);
        for (State q : region)
          out[a_.projection(q, i)] = 1;
        return out;
      }

      // Recurse into every cycle-carrying SCC of `sub`.
      bool split(std::size_t next, const StateSet& sub, std::vector<Hit>& hits)
      {
        if (sub.empty())
          return false;
        for (auto& scc : sccs_within(graph_, sub))
          if (is_cycle_set(graph_, scc) && descend(next, scc, hits))
            return true;
        return false;
      }

      // `region` is strongly connected; components < i are decided.
      bool descend(std::size_t i, const StateSet& region, std::vector<Hit>& hits)
      {
        for (auto& h : hits)
          if (!satisfies(region, h))
            return false;
        auto verdict = a_.condition().eval_partial(values_);
        if (verdict == false)
          return false;
        if (verdict == true || i == a_.component_count()) {
          found_.push_back(region);
          return first_only_;
        }

        const Component& c = a_.component(i);
        bool stop = false;
        switch (c.kind) {
        case Component::Kind::muller: {
          auto present = projected(region, i);
          for (auto& cyc : c.cycles()) {
            if (!std::all_of(cyc.begin(), cyc.end(), [&](State s) { return present[s] != 0; }))
              continue;
            values_[i] = std::binary_search(c.family.begin(), c.family.end(), cyc) ? 1 : 0;
            if (a_.condition().eval_partial(values_) == false)
              continue;
            auto inside = to_mask(cyc, c.size);
            StateSet sub;
            for (State q : region)
              if (inside[a_.projection(q, i)])
                sub.push_back(q);
            std::size_t before = hits.size();
            for (State s : cyc) {
              std::vector<char> one(c.size, 0);
              one[s] = 1;
              hits.push_back({i, std::move(one)});
            }
            stop = split(i + 1, sub, hits);
            hits.resize(before);
            if (stop)
              break;
          }
          break;
        }
        case Component::Kind::safety:
        case Component::Kind::reach: {
          bool safety = c.kind == Component::Kind::safety;
          for (std::int8_t v : {std::int8_t{1}, std::int8_t{0}}) {
            values_[i] = v;
            if (a_.condition().eval_partial(values_) == false)
              continue;
            // safety true / reach false restrict the region;
            // safety false / reach true demand a visit.
            bool restrict = safety == (v == 1);
            std::vector<char> mark = c.marked;
            if (restrict) {
              StateSet sub;
              for (State q : region) {
                bool m = mark[a_.projection(q, i)] != 0;
                if (safety ? m : !m)
                  sub.push_back(q);
              }
              stop = split(i + 1, sub, hits);
            } else {
              if (safety)
                for (auto& m : mark)
                  m = !m;
              hits.push_back({i, std::move(mark)});
              stop = descend(i + 1, region, hits);
              hits.pop_back();
            }
            if (stop)
              break;
          }
          break;
        }
        }
        values_[i] = -1;
        return stop;
      }
    };
  }

  std::vector<StateSet> accepting_cycles(const Dma& a, bool first_only)
  {
    return CycleSearch(a, first_only).run();
  }
}
