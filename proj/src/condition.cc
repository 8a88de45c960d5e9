#include "baire/automata.hh"

namespace baire
{
  struct Condition::Node
  {
    Op op;
    std::uint32_t component = 0;
    bool value = false;
    std::shared_ptr<const Node> lhs, rhs;
  };

  Condition Condition::leaf(std::uint32_t component)
  {
    return Condition(std::make_shared<const Node>(Node{Op::leaf, component, false, nullptr, nullptr}));
  }

  Condition Condition::constant(bool value)
  {
    return Condition(std::make_shared<const Node>(Node{Op::constant, 0, value, nullptr, nullptr}));
  }

  Condition operator!(const Condition& c)
  {
    if (c.root_->op == Condition::Op::negate)
      return Condition(c.root_->lhs);
    if (c.root_->op == Condition::Op::constant)
      return Condition::constant(!c.root_->value);
    return Condition(std::make_shared<const Condition::Node>(
      Condition::Node{Condition::Op::negate, 0, false, c.root_, nullptr}));
  }

  namespace
  {
    template <typename NodeT, typename OpT>
    std::shared_ptr<const NodeT> binary(OpT op, std::shared_ptr<const NodeT> a, std::shared_ptr<const NodeT> b)
    {
      return std::make_shared<const NodeT>(NodeT{op, 0, false, std::move(a), std::move(b)});
    }
  }

  Condition operator&&(const Condition& a, const Condition& b)
  {
    return Condition(binary(Condition::Op::conj, a.root_, b.root_));
  }

  Condition operator||(const Condition& a, const Condition& b)
  {
    return Condition(binary(Condition::Op::disj, a.root_, b.root_));
  }

  Condition operator^(const Condition& a, const Condition& b)
  {
    return Condition(binary(Condition::Op::exclusive, a.root_, b.root_));
  }

  namespace
  {
    template <typename NodeT>
    bool eval_node(const NodeT& n, std::span<const char> values)
    {
      using Op = decltype(n.op);
      switch (n.op) {
      case Op::leaf: return values[n.component] != 0;
      case Op::constant: return n.value;
      case Op::negate: return !eval_node(*n.lhs, values);
      case Op::conj: return eval_node(*n.lhs, values) && eval_node(*n.rhs, values);
      case Op::disj: return eval_node(*n.lhs, values) || eval_node(*n.rhs, values);
      case Op::exclusive: return eval_node(*n.lhs, values) != eval_node(*n.rhs, values);
      }
      return false;
    }

    template <typename NodeT>
    std::optional<bool> partial_node(const NodeT& n, std::span<const std::int8_t> values)
    {
      using Op = decltype(n.op);
      switch (n.op) {
      case Op::leaf:
        if (values[n.component] < 0)
          return std::nullopt;
        return values[n.component] != 0;
      case Op::constant: return n.value;
      case Op::negate: {
        auto v = partial_node(*n.lhs, values);
        if (!v)
          return std::nullopt;
        return !*v;
      }
      case Op::conj: {
        auto l = partial_node(*n.lhs, values);
        if (l == false)
          return false;
        auto r = partial_node(*n.rhs, values);
        if (r == false)
          return false;
        if (l && r)
          return true;
        return std::nullopt;
      }
      case Op::disj: {
        auto l = partial_node(*n.lhs, values);
        if (l == true)
          return true;
        auto r = partial_node(*n.rhs, values);
        if (r == true)
          return true;
        if (l && r)
          return false;
        return std::nullopt;
      }
      case Op::exclusive: {
        auto l = partial_node(*n.lhs, values);
        if (!l)
          return std::nullopt;
        auto r = partial_node(*n.rhs, values);
        if (!r)
          return std::nullopt;
        return *l != *r;
      }
      }
      return std::nullopt;
    }
  }

  bool Condition::eval(std::span<const char> values) const
  {
    return eval_node(*root_, values);
  }

  std::optional<bool> Condition::eval_partial(std::span<const std::int8_t> values) const
  {
    return partial_node(*root_, values);
  }

  std::optional<std::uint32_t> Condition::as_leaf() const
  {
    if (root_->op == Op::leaf)
      return root_->component;
    return std::nullopt;
  }

  Condition Condition::remap(std::span<const std::uint32_t> mapping) const
  {
    struct Rec
    {
      std::span<const std::uint32_t> mapping;
      std::shared_ptr<const Node> go(const std::shared_ptr<const Node>& n) const
      {
        switch (n->op) {
        case Op::leaf:
          return std::make_shared<const Node>(Node{Op::leaf, mapping[n->component], false, nullptr, nullptr});
        case Op::constant:
          return n;
        case Op::negate:
          return std::make_shared<const Node>(Node{Op::negate, 0, false, go(n->lhs), nullptr});
        default:
          return std::make_shared<const Node>(Node{n->op, 0, false, go(n->lhs), go(n->rhs)});
        }
      }
    };
    return Condition(Rec{mapping}.go(root_));
  }
}
