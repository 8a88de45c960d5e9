#include "baire/automata.hh"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>

#include "baire/error.hh"
#include "graph.hh"
#include "search.hh"

namespace baire
{
  namespace
  {
    constexpr State unset = std::numeric_limits<State>::max();

    struct TupleHash
    {
      std::size_t operator()(const std::vector<State>& t) const noexcept
      {
        std::size_t h = 1469598103934665603ull;
        for (State s : t)
          h = (h ^ s) * 1099511628211ull;
        return h;
      }
    };

    // Breadth-first renumbering of the states reachable from `initial`.
    // Returns old -> new (unset for unreachable).
    std::vector<State> bfs_order(std::size_t n, std::size_t arity, State initial,
                                 const std::vector<State>& delta)
    {
      std::vector<State> order(n, unset);
      std::deque<State> queue{initial};
      order[initial] = 0;
      State next = 1;
      while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (std::size_t x = 0; x < arity; ++x) {
          State r = delta[q * arity + x];
          if (order[r] == unset) {
            order[r] = next++;
            queue.push_back(r);
          }
        }
      }
      return order;
    }

    void validate_table(const Alphabet& alphabet, std::size_t states, State initial,
                        const std::vector<State>& delta)
    {
      if (states == 0)
        throw InputError("automaton needs at least one state");
      if (initial >= states)
        throw InputError("initial state " + std::to_string(initial) + " is not declared");
      if (delta.size() != states * alphabet.size())
        throw InputError("transition table is not total");
      for (State r : delta)
        if (r >= states)
          throw InputError("transition to undeclared state " + std::to_string(r));
    }

    std::shared_ptr<Component> pruned_component(Component::Kind kind, const Alphabet& alphabet,
                                                std::size_t states, State initial,
                                                const std::vector<State>& delta,
                                                const std::vector<char>& marked,
                                                const std::vector<StateSet>& family)
    {
      const std::size_t k = alphabet.size();
      auto order = bfs_order(states, k, initial, delta);
      std::size_t n = 0;
      for (State o : order)
        n += o != unset;
      auto c = std::make_shared<Component>();
      c->kind = kind;
      c->size = n;
      c->arity = k;
      c->initial = 0;
      c->delta.assign(n * k, 0);
      if (kind != Component::Kind::muller)
        c->marked.assign(n, 0);
      for (State q = 0; q < states; ++q) {
        if (order[q] == unset)
          continue;
        for (std::size_t x = 0; x < k; ++x)
          c->delta[order[q] * k + x] = order[delta[q * k + x]];
        if (kind != Component::Kind::muller)
          c->marked[order[q]] = marked[q];
      }
      for (const auto& set : family) {
        StateSet mapped;
        bool reachable = !set.empty();
        for (State q : set) {
          if (q >= states)
            throw InputError("acceptance set references undeclared state " + std::to_string(q));
          if (order[q] == unset)
            reachable = false;
          else
            mapped.push_back(order[q]);
        }
        if (!reachable)
          continue;
        std::sort(mapped.begin(), mapped.end());
        mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
        c->family.push_back(std::move(mapped));
      }
      std::sort(c->family.begin(), c->family.end());
      c->family.erase(std::unique(c->family.begin(), c->family.end()), c->family.end());
      return c;
    }

    std::size_t symbol_index(const Alphabet& alphabet, char c)
    {
      int i = alphabet.index(c);
      if (i < 0)
        throw InputError(std::string("symbol '") + c + "' is not in alphabet {" + alphabet.str() + "}");
      return static_cast<std::size_t>(i);
    }
  }

  bool Component::holds(const StateSet& inf) const
  {
    switch (kind) {
    case Kind::muller:
      return std::binary_search(family.begin(), family.end(), inf);
    case Kind::safety:
      return std::all_of(inf.begin(), inf.end(), [this](State q) { return marked[q] != 0; });
    case Kind::reach:
      return std::any_of(inf.begin(), inf.end(), [this](State q) { return marked[q] != 0; });
    }
    return false;
  }

  const std::vector<StateSet>& Component::cycles() const
  {
    std::call_once(cycles_once_, [this] {
      std::vector<char> all(size, 1);
      auto sets = detail::cycle_sets({delta, arity}, all, std::size_t{1} << 20);
      cycles_.assign(sets.begin(), sets.end());
    });
    return cycles_;
  }

  Dma Dma::from_table(Alphabet alphabet, std::size_t states, State initial,
                      std::vector<State> delta, std::vector<StateSet> family)
  {
    validate_table(alphabet, states, initial, delta);
    auto c = pruned_component(Component::Kind::muller, alphabet, states, initial, delta, {}, family);
    return from_components(std::move(alphabet), {std::move(c)}, Condition::leaf(0));
  }

  Dma Dma::safety(Alphabet alphabet, std::size_t states, State initial,
                  std::vector<State> delta, std::vector<char> allowed)
  {
    validate_table(alphabet, states, initial, delta);
    if (allowed.size() != states)
      throw InputError("safety mask size mismatch");
    const std::size_t k = alphabet.size();
    for (State q = 0; q < states; ++q)
      if (!allowed[q])
        std::fill_n(delta.begin() + q * k, k, q);
    auto c = pruned_component(Component::Kind::safety, alphabet, states, initial, delta, allowed, {});
    return from_components(std::move(alphabet), {std::move(c)}, Condition::leaf(0));
  }

  Dma Dma::full(const Alphabet& alphabet)
  {
    return from_table(alphabet, 1, 0, std::vector<State>(alphabet.size(), 0), {{0}});
  }

  Dma Dma::empty(const Alphabet& alphabet)
  {
    return from_table(alphabet, 1, 0, std::vector<State>(alphabet.size(), 0), {});
  }

  Dma Dma::from_components(Alphabet alphabet,
                           std::vector<std::shared_ptr<const Component>> components,
                           Condition condition)
  {
    const std::size_t k = alphabet.size();
    const std::size_t m = components.size();
    for (auto& c : components)
      if (c->arity != k)
        throw InputError("component arity does not match alphabet");
    Dma out(std::move(alphabet));
    std::unordered_map<std::vector<State>, State, TupleHash> ids;
    std::vector<State> start(m);
    for (std::size_t i = 0; i < m; ++i)
      start[i] = components[i]->initial;
    ids.emplace(start, 0);
    out.tuples_ = start;
    std::vector<State> tuple(m);
    for (State q = 0; q < ids.size(); ++q) {
      for (std::size_t x = 0; x < k; ++x) {
        for (std::size_t i = 0; i < m; ++i)
          tuple[i] = components[i]->next(out.tuples_[q * m + i], x);
        auto [it, inserted] = ids.emplace(tuple, static_cast<State>(ids.size()));
        if (inserted)
          out.tuples_.insert(out.tuples_.end(), tuple.begin(), tuple.end());
        out.delta_.push_back(it->second);
      }
    }
    out.components_ = std::move(components);
    out.condition_ = std::move(condition);
    return out;
  }

  Dma Dma::product(const Dma& a, const Dma& b,
                   Condition (*combine)(const Condition&, const Condition&))
  {
    require_same_alphabet(a.alphabet_, b.alphabet_, "product");
    auto merged = a.components_;
    std::vector<std::uint32_t> mapping;
    for (auto& c : b.components_) {
      auto it = std::find(merged.begin(), merged.end(), c);
      if (it == merged.end()) {
        mapping.push_back(static_cast<std::uint32_t>(merged.size()));
        merged.push_back(c);
      } else {
        mapping.push_back(static_cast<std::uint32_t>(it - merged.begin()));
      }
    }
    return from_components(a.alphabet_, std::move(merged),
                           combine(a.condition_, b.condition_.remap(mapping)));
  }

  State Dma::run(State from, std::string_view w) const
  {
    State q = from;
    for (char c : w)
      q = next(q, symbol_index(alphabet_, c));
    return q;
  }

  bool Dma::accepts_inf_set(const StateSet& inf) const
  {
    const std::size_t m = components_.size();
    std::vector<char> values(m, 0);
    StateSet proj;
    for (std::size_t i = 0; i < m; ++i) {
      proj.clear();
      for (State q : inf)
        proj.push_back(projection(q, i));
      std::sort(proj.begin(), proj.end());
      proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
      values[i] = components_[i]->holds(proj);
    }
    return condition_.eval(values);
  }

  std::vector<StateSet> Dma::acceptance_family(std::size_t limit) const
  {
    if (components_.size() == 1 && condition_.as_leaf() == 0u
        && components_[0]->kind == Component::Kind::muller && components_[0]->size == size())
      return components_[0]->family;
    std::vector<char> all(size(), 1);
    std::vector<StateSet> out;
    for (auto& set : detail::cycle_sets({delta_, alphabet_.size()}, all, limit))
      if (accepts_inf_set(set))
        out.push_back(set);
    return out;
  }

  Dma Dma::negated() const
  {
    Dma out = *this;
    out.condition_ = !condition_;
    return out;
  }

  // ---------------------------------------------------------------- OpenSet

  OpenSet OpenSet::from_table(Alphabet alphabet, std::size_t states, State initial,
                              std::vector<State> delta, std::vector<char> final)
  {
    validate_table(alphabet, states, initial, delta);
    if (final.size() != states)
      throw InputError("final mask size mismatch");
    const std::size_t k = alphabet.size();
    // finals are absorbing: their outgoing edges are irrelevant
    std::vector<State> absorbed = delta;
    for (State q = 0; q < states; ++q)
      if (final[q])
        for (std::size_t x = 0; x < k; ++x)
          absorbed[q * k + x] = q;
    auto live = detail::backward_reachable({absorbed, k}, final);

    // classes: live non-final states keep their identity; all finals and
    // all dead states collapse
    const State final_cls = static_cast<State>(states), dead_cls = static_cast<State>(states + 1);
    auto cls = [&](State q) { return final[q] ? final_cls : (live[q] ? q : dead_cls); };

    OpenSet out(std::move(alphabet));
    std::unordered_map<State, State> ids;
    std::vector<State> reps;
    auto intern = [&](State c) {
      auto [it, inserted] = ids.emplace(c, static_cast<State>(reps.size()));
      if (inserted)
        reps.push_back(c);
      return it->second;
    };
    intern(cls(initial));
    for (std::size_t i = 0; i < reps.size(); ++i) {
      State c = reps[i];
      for (std::size_t x = 0; x < k; ++x) {
        State target = c >= states ? c : cls(absorbed[c * k + x]);
        out.delta_.push_back(intern(target));
      }
      out.final_.push_back(c == final_cls);
      out.live_.push_back(c != dead_cls);
    }
    return out;
  }

  OpenSet OpenSet::none(const Alphabet& alphabet)
  {
    return from_table(alphabet, 1, 0, std::vector<State>(alphabet.size(), 0), {0});
  }

  OpenSet OpenSet::everything(const Alphabet& alphabet)
  {
    return from_table(alphabet, 1, 0, std::vector<State>(alphabet.size(), 0), {1});
  }

  OpenSet OpenSet::ball(const Alphabet& alphabet, const Word& w)
  {
    alphabet.validate(w);
    const std::size_t k = alphabet.size();
    const std::size_t n = w.size() + 2;
    const State dead = static_cast<State>(w.size() + 1);
    std::vector<State> delta(n * k, dead);
    std::vector<char> final(n, 0);
    for (std::size_t i = 0; i < w.size(); ++i)
      delta[i * k + static_cast<std::size_t>(alphabet.index(w[i]))] = static_cast<State>(i + 1);
    final[w.size()] = 1;
    return from_table(alphabet, n, 0, std::move(delta), std::move(final));
  }

  State OpenSet::run(std::string_view w) const
  {
    State q = 0;
    for (char c : w)
      q = next(q, symbol_index(alphabet_, c));
    return q;
  }

  bool OpenSet::is_empty() const
  {
    return std::none_of(final_.begin(), final_.end(), [](char f) { return f != 0; });
  }

  bool OpenSet::meets_ball(std::string_view w) const
  {
    return live_[run(w)] != 0;
  }

  bool WordDfa::accepts(std::string_view w) const
  {
    State q = initial;
    for (char c : w)
      q = next(q, symbol_index(alphabet, c));
    return accepting[q] != 0;
  }

  // ------------------------------------------------------------- operations

  Dma boolean_combine(const Dma& a, const Dma* b, BoolOp op)
  {
    if (op == BoolOp::complement)
      return a.negated();
    if (!b)
      throw InputError("binary boolean operation needs two operands");
    switch (op) {
    case BoolOp::union_:
      return Dma::product(a, *b, [](const Condition& x, const Condition& y) { return x || y; });
    case BoolOp::intersection:
      return Dma::product(a, *b, [](const Condition& x, const Condition& y) { return x && y; });
    case BoolOp::symdiff:
      return Dma::product(a, *b, [](const Condition& x, const Condition& y) { return x ^ y; });
    case BoolOp::complement:
      break;
    }
    return a.negated();
  }

  Dma union_of(const Dma& a, const Dma& b) { return boolean_combine(a, &b, BoolOp::union_); }
  Dma intersection_of(const Dma& a, const Dma& b) { return boolean_combine(a, &b, BoolOp::intersection); }
  Dma complement_of(const Dma& a) { return boolean_combine(a, nullptr, BoolOp::complement); }
  Dma symdiff_of(const Dma& a, const Dma& b) { return boolean_combine(a, &b, BoolOp::symdiff); }

  Emptiness is_empty(const Dma& a)
  {
    auto cycles = detail::accepting_cycles(a, true);
    if (cycles.empty())
      return {};
    const StateSet& target = cycles.front();
    const std::size_t k = a.alphabet().size();
    const std::size_t n = a.size();

    // shortlex-least access word to the cycle
    std::vector<State> parent(n, unset);
    std::vector<std::size_t> via(n, 0);
    std::deque<State> queue{0};
    parent[0] = 0;
    State entry = unset;
    while (!queue.empty()) {
      State q = queue.front();
      queue.pop_front();
      if (std::binary_search(target.begin(), target.end(), q)) {
        entry = q;
        break;
      }
      for (std::size_t x = 0; x < k; ++x) {
        State r = a.next(q, x);
        if (parent[r] == unset) {
          parent[r] = q;
          via[r] = x;
          queue.push_back(r);
        }
      }
    }
    Word prefix;
    for (State q = entry; q != 0; q = parent[q])
      prefix += a.alphabet().symbol(via[q]);
    std::reverse(prefix.begin(), prefix.end());

    // tour of the cycle set starting and ending at the entry state
    auto in_target = [&](State q) { return std::binary_search(target.begin(), target.end(), q); };
    auto path_within = [&](State from, State to) {
      std::vector<State> par(n, unset);
      std::vector<std::size_t> sym(n, 0);
      std::deque<State> q{from};
      while (!q.empty()) {
        State s = q.front();
        q.pop_front();
        for (std::size_t x = 0; x < k; ++x) {
          State r = a.next(s, x);
          if (!in_target(r) || par[r] != unset)
            continue;
          par[r] = s;
          sym[r] = x;
          if (r == to) {
            Word w(1, a.alphabet().symbol(sym[to]));
            for (State cur = par[to]; cur != from; cur = par[cur])
              w += a.alphabet().symbol(sym[cur]);
            std::reverse(w.begin(), w.end());
            return w;
          }
          q.push_back(r);
        }
      }
      throw InvariantViolation("accepted cycle set is not strongly connected");
    };
    std::vector<char> covered(n, 0);
    covered[entry] = 1;
    Word period;
    State cur = entry;
    auto walk = [&](const Word& w) {
      for (char c : w) {
        cur = a.next(cur, static_cast<std::size_t>(a.alphabet().index(c)));
        covered[cur] = 1;
      }
      period += w;
    };
    for (State t : target)
      if (!covered[t])
        walk(path_within(cur, t));
    walk(path_within(cur, entry));
    return {false, up_normalize(prefix, period)};
  }

  StateSet lasso_states(const Dma& a, const UPWord& x)
  {
    State q = a.run(0, x.prefix);
    std::unordered_map<State, std::size_t> seen;
    std::vector<State> starts;
    while (!seen.contains(q)) {
      seen.emplace(q, starts.size());
      starts.push_back(q);
      q = a.run(q, x.period);
    }
    StateSet inf;
    for (std::size_t i = seen[q]; i < starts.size(); ++i) {
      State s = starts[i];
      inf.push_back(s);
      for (char c : x.period) {
        s = a.run(s, std::string_view(&c, 1));
        inf.push_back(s);
      }
    }
    std::sort(inf.begin(), inf.end());
    inf.erase(std::unique(inf.begin(), inf.end()), inf.end());
    return inf;
  }

  bool up_membership(const Dma& a, const UPWord& x)
  {
    a.alphabet().validate(x.prefix);
    a.alphabet().validate(x.period);
    return a.accepts_inf_set(lasso_states(a, x));
  }

  std::vector<char> live_states(const Dma& a)
  {
    std::vector<char> core(a.size(), 0);
    for (auto& set : detail::accepting_cycles(a, false))
      for (State q : set)
        core[q] = 1;
    return detail::backward_reachable({a.transitions(), a.alphabet().size()}, core);
  }

  Dma closure(const Dma& a)
  {
    auto live = live_states(a);
    auto t = a.transitions();
    return Dma::safety(a.alphabet(), a.size(), 0, std::vector<State>(t.begin(), t.end()), std::move(live));
  }

  OpenSet interior(const Dma& a)
  {
    auto escapes = live_states(a.negated());
    std::vector<char> universal(a.size());
    for (State q = 0; q < a.size(); ++q)
      universal[q] = !escapes[q];
    auto t = a.transitions();
    return OpenSet::from_table(a.alphabet(), a.size(), 0, std::vector<State>(t.begin(), t.end()),
                               std::move(universal));
  }

  Containment contains(const Dma& a, const Dma& b)
  {
    require_same_alphabet(a.alphabet(), b.alphabet(), "contains");
    auto e = is_empty(intersection_of(b, a.negated()));
    return {e.empty, e.witness};
  }

  bool equivalent(const Dma& a, const Dma& b)
  {
    return contains(a, b).holds && contains(b, a).holds;
  }

  Dma open_to_dma(const OpenSet& e)
  {
    const std::size_t k = e.alphabet().size();
    auto c = std::make_shared<Component>();
    c->kind = Component::Kind::reach;
    c->size = e.size();
    c->arity = k;
    c->initial = 0;
    auto t = e.transitions();
    c->delta.assign(t.begin(), t.end());
    c->marked.resize(e.size());
    for (State q = 0; q < e.size(); ++q)
      c->marked[q] = e.is_final(q);
    return Dma::from_components(e.alphabet(), {std::move(c)}, Condition::leaf(0));
  }

  OpenSet union_open(const OpenSet& a, const OpenSet& b)
  {
    require_same_alphabet(a.alphabet(), b.alphabet(), "union_open");
    const std::size_t k = a.alphabet().size();
    const std::size_t nb = b.size();
    const std::size_t n = a.size() * nb;
    std::vector<State> delta(n * k);
    std::vector<char> final(n);
    for (State p = 0; p < a.size(); ++p)
      for (State q = 0; q < nb; ++q) {
        State s = static_cast<State>(p * nb + q);
        final[s] = a.is_final(p) || b.is_final(q);
        for (std::size_t x = 0; x < k; ++x)
          delta[s * k + x] = static_cast<State>(a.next(p, x) * nb + b.next(q, x));
      }
    return OpenSet::from_table(a.alphabet(), n, 0, std::move(delta), std::move(final));
  }

  WordDfa pref_dfa(const Dma& a)
  {
    auto live = live_states(a);
    const std::size_t k = a.alphabet().size();
    std::vector<State> id(a.size(), unset);
    State n = 0;
    for (State q = 0; q < a.size(); ++q)
      if (live[q])
        id[q] = n++;
    const State sink = n;
    WordDfa out{a.alphabet(), static_cast<std::size_t>(n) + 1, live[0] ? id[0] : sink, {}, {}};
    out.delta.assign(out.size * k, sink);
    out.accepting.assign(out.size, 0);
    for (State q = 0; q < a.size(); ++q) {
      if (!live[q])
        continue;
      out.accepting[id[q]] = 1;
      for (std::size_t x = 0; x < k; ++x) {
        State r = a.next(q, x);
        out.delta[id[q] * k + x] = live[r] ? id[r] : sink;
      }
    }
    return out;
  }
}
