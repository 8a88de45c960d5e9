#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "baire/words.hh"

namespace baire
{
  using State = std::uint32_t;

  /// Sorted set of state ids.
  using StateSet = std::vector<State>;

  /// Boolean combination of per-component acceptance conditions.
  class Condition
  {
  public:
    enum class Op : std::uint8_t { leaf, negate, conj, disj, exclusive, constant };

    static Condition leaf(std::uint32_t component);
    static Condition constant(bool value);

    friend Condition operator!(const Condition& c);
    friend Condition operator&&(const Condition& a, const Condition& b);
    friend Condition operator||(const Condition& a, const Condition& b);
    friend Condition operator^(const Condition& a, const Condition& b);

    bool eval(std::span<const char> values) const;

    /// Three-valued evaluation: `values[i]` is 0, 1, or -1 for unknown.
    std::optional<bool> eval_partial(std::span<const std::int8_t> values) const;

    /// The component index when this condition is a single leaf.
    std::optional<std::uint32_t> as_leaf() const;

    /// Renames leaf i to `mapping[i]`.
    Condition remap(std::span<const std::uint32_t> mapping) const;

  private:
    struct Node;
    explicit Condition(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    std::shared_ptr<const Node> root_;
  };

  /// A complete deterministic automaton with its own acceptance condition on
  /// the set of infinitely visited states. Every DMA is the reachable
  /// product of a list of components under a Boolean Condition.
  struct Component
  {
    enum class Kind : std::uint8_t
    {
      muller,  ///< inf-set is a member of `family`
      safety,  ///< inf-set lies inside `marked`
      reach,   ///< inf-set meets `marked`
    };

    Kind kind = Kind::muller;
    std::size_t size = 0;
    std::size_t arity = 0;
    State initial = 0;
    std::vector<State> delta;
    std::vector<StateSet> family;
    std::vector<char> marked;

    State next(State q, std::size_t x) const { return delta[q * arity + x]; }

    /// Acceptance on a (projected) infinitely-visited set.
    bool holds(const StateSet& inf) const;

    /// Muller components: every strongly connected state set, computed once.
    const std::vector<StateSet>& cycles() const;

  private:
    mutable std::once_flag cycles_once_;
    mutable std::vector<StateSet> cycles_;
  };

  /// Deterministic Muller automaton over a fixed alphabet. Immutable.
  /// States are the reachable ones, numbered 0..n-1 in breadth-first
  /// shortlex order; state 0 is initial.
  class Dma
  {
  public:
    /// Explicit automaton. `delta[q * |X| + x]`; `family` lists inf-sets.
    /// Throws InputError on non-total transitions or foreign states.
    static Dma from_table(Alphabet alphabet, std::size_t states, State initial,
                          std::vector<State> delta, std::vector<StateSet> family);

    /// Runs that stay inside `allowed` forever.
    static Dma safety(Alphabet alphabet, std::size_t states, State initial,
                      std::vector<State> delta, std::vector<char> allowed);

    static Dma full(const Alphabet& alphabet);
    static Dma empty(const Alphabet& alphabet);

    /// Reachable product of components under `condition`.
    static Dma from_components(Alphabet alphabet,
                               std::vector<std::shared_ptr<const Component>> components,
                               Condition condition);

    /// Reachable product; `combine` receives this DMA's condition and the
    /// other's, remapped onto the merged component list.
    static Dma product(const Dma& a, const Dma& b,
                       Condition (*combine)(const Condition&, const Condition&));

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return delta_.size() / alphabet_.size(); }
    State initial() const noexcept { return 0; }
    State next(State q, std::size_t x) const { return delta_[q * alphabet_.size() + x]; }
    State run(State from, std::string_view w) const;
    std::span<const State> transitions() const noexcept { return delta_; }

    /// Whether a run with exactly this infinitely-visited set is accepted.
    bool accepts_inf_set(const StateSet& inf) const;

    /// Explicit acceptance family over this DMA's states. For composite
    /// DMAs this enumerates every accepted strongly connected set.
    std::vector<StateSet> acceptance_family(std::size_t limit = 200000) const;

    std::size_t component_count() const noexcept { return components_.size(); }
    const Component& component(std::size_t i) const { return *components_[i]; }
    State projection(State q, std::size_t i) const { return tuples_[q * components_.size() + i]; }
    const Condition& condition() const noexcept { return condition_; }

    Dma negated() const;

  private:
    Dma(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    Alphabet alphabet_;
    std::vector<std::shared_ptr<const Component>> components_;
    std::vector<State> tuples_;
    std::vector<State> delta_;
    Condition condition_ = Condition::constant(false);
  };

  /// Open set W·X^ω in canonical absorbing form: all final states are
  /// merged into one absorbing state, as are all states that cannot reach
  /// it. W is the set of words that first reach the final state.
  class OpenSet
  {
  public:
    /// `final` marks states whose arrival settles membership; the input
    /// need not be absorbing.
    static OpenSet from_table(Alphabet alphabet, std::size_t states, State initial,
                              std::vector<State> delta, std::vector<char> final);

    static OpenSet none(const Alphabet& alphabet);
    static OpenSet everything(const Alphabet& alphabet);
    static OpenSet ball(const Alphabet& alphabet, const Word& w);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return final_.size(); }
    State initial() const noexcept { return 0; }
    State next(State q, std::size_t x) const { return delta_[q * alphabet_.size() + x]; }
    State run(std::string_view w) const;
    bool is_final(State q) const { return final_[q] != 0; }
    std::span<const State> transitions() const noexcept { return delta_; }

    bool is_empty() const;

    /// w·X^ω ⊆ this set.
    bool contains_ball(std::string_view w) const { return is_final(run(w)); }

    /// w·X^ω meets this set.
    bool meets_ball(std::string_view w) const;

  private:
    OpenSet(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    Alphabet alphabet_;
    std::vector<State> delta_;
    std::vector<char> final_;
    std::vector<char> live_;
  };

  /// Plain deterministic automaton over finite words.
  struct WordDfa
  {
    Alphabet alphabet;
    std::size_t size;
    State initial;
    std::vector<State> delta;
    std::vector<char> accepting;

    State next(State q, std::size_t x) const { return delta[q * alphabet.size() + x]; }
    bool accepts(std::string_view w) const;
  };

  enum class BoolOp { union_, intersection, complement, symdiff };

  /// `b` must be present unless `op` is complement.
  Dma boolean_combine(const Dma& a, const Dma* b, BoolOp op);
  Dma union_of(const Dma& a, const Dma& b);
  Dma intersection_of(const Dma& a, const Dma& b);
  Dma complement_of(const Dma& a);
  Dma symdiff_of(const Dma& a, const Dma& b);

  struct Emptiness
  {
    bool empty = true;
    std::optional<UPWord> witness;
  };

  /// Decides emptiness; a non-empty language yields an accepted UP word.
  Emptiness is_empty(const Dma& a);

  bool up_membership(const Dma& a, const UPWord& x);

  /// The infinitely-visited state set of the run on x.
  StateSet lasso_states(const Dma& a, const UPWord& x);

  /// States whose forward language is non-empty.
  std::vector<char> live_states(const Dma& a);

  /// Topological closure.
  Dma closure(const Dma& a);

  /// Largest open subset.
  OpenSet interior(const Dma& a);

  struct Containment
  {
    bool holds = true;
    std::optional<UPWord> counterexample;  ///< in L(b) \ L(a)

    explicit operator bool() const noexcept { return holds; }
  };

  /// L(b) ⊆ L(a).
  Containment contains(const Dma& a, const Dma& b);

  /// Language equality via containment both ways.
  bool equivalent(const Dma& a, const Dma& b);

  Dma open_to_dma(const OpenSet& e);

  OpenSet union_open(const OpenSet& a, const OpenSet& b);

  /// Word automaton for pref L(a): live states plus a dead sink.
  WordDfa pref_dfa(const Dma& a);
}
