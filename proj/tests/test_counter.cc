#include <doctest.h>

#include <random>

#include "baire/automata.hh"
#include "baire/counter.hh"
#include "baire/error.hh"
#include "support/random_dma.hh"

using namespace baire;

namespace
{
  const auto v3 = CounterLanguage::v3();

  // Membership in V by the grammar V = a | b V V V, parsed greedily from
  // the left; returns the length of the V-word starting at i, or npos.
  std::size_t parse_v(const Word& w, std::size_t i)
  {
    if (i >= w.size())
      return Word::npos;
    if (w[i] == 'a')
      return 1;
    if (w[i] != 'b')
      return Word::npos;
    std::size_t at = i + 1;
    for (int k = 0; k < 3; ++k) {
      auto len = parse_v(w, at);
      if (len == Word::npos)
        return Word::npos;
      at += len;
    }
    return at - i;
  }

  bool grammar_member(const Word& w) { return parse_v(w, 0) == w.size(); }

  bool some_prefix_in_v(const Word& w)
  {
    for (std::size_t n = 1; n <= w.size(); ++n)
      if (grammar_member(w.substr(0, n)))
        return true;
    return false;
  }

  // value of x^2 + x - 1 at a rational
  Rational golden(const Rational& x) { return x * x + x - Rational(1); }
}

TEST_CASE("counter run examples")
{
  auto r = counter_run(v3, "baaa");
  CHECK(r.status == CounterStatus::in_language);
  CHECK(r.trace == std::vector<long>{1, 3, 2, 1, 0});
  CHECK(counter_run(v3, "a").status == CounterStatus::in_language);
  CHECK(counter_run(v3, "aa").status == CounterStatus::dead);
  CHECK(counter_run(v3, "b").status == CounterStatus::proper_prefix);
  CHECK(counter_run(v3, "").status == CounterStatus::proper_prefix);
  CHECK(counter_run(v3, "bc").status == CounterStatus::dead);
  CHECK(std::string(to_string(CounterStatus::in_language)) == "in_V");
}

TEST_CASE("counter acceptance matches the grammar")
{
  for_each_word(v3.alphabet, 12, [](const Word& w) {
    CHECK((counter_run(v3, w).status == CounterStatus::in_language) == grammar_member(w));
    CHECK((counter_run(v3, w).status == CounterStatus::proper_prefix) == !some_prefix_in_v(w));
    return false;
  });
}

TEST_CASE("V is prefix-free")
{
  std::vector<Word> members;
  for_each_word(v3.alphabet, 14, [&](const Word& w) {
    if (counter_run(v3, w).status == CounterStatus::in_language)
      members.push_back(w);
    return false;
  });
  for (auto& w : members)
    for (std::size_t n = 1; n < w.size(); ++n)
      CHECK(counter_run(v3, w.substr(0, n)).status != CounterStatus::in_language);
}

TEST_CASE("f1 and f2 membership examples")
{
  CHECK(f1_member_up({"a", "c"}));
  CHECK_FALSE(f1_member_up({"", "c"}));
  CHECK_FALSE(f1_member_up({"", "b"}));
  CHECK(f2_member_up({"", "b"}));
  CHECK_FALSE(f2_member_up({"a", "b"}));
  CHECK(f2_member_up({"", "ba"}));
  CHECK_THROWS_AS(f2_member_up({"", "c"}), InputError);
}

TEST_CASE("f1 and f2 membership match long simulation")
{
  std::mt19937 rng(61);
  Alphabet abc({'a', 'b', 'c'});
  for (int i = 0; i < 400; ++i) {
    auto x = testing::random_up(rng, abc, 5, 4);
    // drift per period is at most 2·|v|, so zero is reached within a bounded horizon if at all
    Word w = x.unroll(x.prefix.size() + x.period.size() * 40);
    bool expect = false;
    for (std::size_t n = 1; n < w.size(); ++n) {
      if (w[n] == 'c' && counter_run(v3, w.substr(0, n)).status == CounterStatus::in_language) {
        expect = true;
        break;
      }
    }
    CHECK(f1_member_up(x) == expect);

    auto y = testing::random_up(rng, v3.alphabet, 5, 4);
    Word z = y.unroll(y.prefix.size() + y.period.size() * 40);
    CHECK(f2_member_up(y) == !some_prefix_in_v(z));
    if (f2_member_up(y)) {
      Word three = y.unroll(y.prefix.size() + 3 * y.period.size());
      for (std::size_t n = 0; n <= three.size(); ++n)
        CHECK(counter_run(v3, three.substr(0, n)).status == CounterStatus::proper_prefix);
    }
  }
}

TEST_CASE("root intervals")
{
  auto two = min_positive_root(2, 64);
  CHECK(two.width() <= Rational(1) / Rational(mpq_class(mpz_class(1) << 64)));
  CHECK(golden(two.lo) < Rational(0));
  CHECK(golden(two.hi) > Rational(0));
  auto coarse = min_positive_root(2, 40);
  CHECK(golden(coarse.lo) < Rational(0));
  CHECK(golden(coarse.hi) > Rational(0));
  CHECK(root_decimal(2, 10, 40) == "0.6180339887");
  CHECK(root_decimal(3, 10) == "0.3472963553");

  auto three = min_positive_root(3, 64);
  CHECK(three.midpoint().decimal(10) == "0.3472963553");
  auto p = root_polynomial(3);
  CHECK(p(three.lo) > Rational(0));
  CHECK(p(three.hi) < Rational(0));

  auto ten = min_positive_root(10, 64);
  CHECK(ten.midpoint().decimal(7) == "0.1001003");
  CHECK_THROWS_AS(min_positive_root(1), InputError);
}

TEST_CASE("irrationality certificates")
{
  auto c3 = irrationality_certificate(3);
  REQUIRE(c3.candidates.size() == 2);
  CHECK(c3.candidates[0].second == Rational(-1));
  CHECK(c3.candidates[1].second == Rational(3));
  CHECK_FALSE(c3.rational_root);
  CHECK(replay(c3));

  auto c2 = irrationality_certificate(2);
  CHECK(c2.rational_root == Rational(1));
  CHECK(c2.discriminant == 5);
  CHECK(c2.discriminant_floor_sqrt == 2);
  CHECK(replay(c2));

  auto forged = c2;
  forged.discriminant_floor_sqrt = 3;
  CHECK_FALSE(replay(forged));
  for (int k = 4; k <= 12; ++k)
    CHECK(replay(irrationality_certificate(k)));
}

TEST_CASE("survival probabilities")
{
  auto u = BernoulliMeasure::uniform(v3.alphabet);
  CHECK(survival_probability(v3, 0, u) == Rational(1));
  CHECK(survival_probability(v3, 1, u) == Rational(1, 2));
  for (std::size_t n = 0; n <= 24; ++n) {
    CHECK(survival_probability(v3, n, u) + hitting_probability(v3, n, u) == Rational(1));
    // direct enumeration
    Rational count;
    for_each_word(v3.alphabet, n, [&](const Word& w) {
      if (w.size() == n && counter_run(v3, w).status == CounterStatus::proper_prefix)
        count = count + Rational(1);
      return false;
    });
    if (n <= 14)
      CHECK(survival_probability(v3, n, u) == count / Rational(mpq_class(mpz_class(1) << n)));
  }
}

TEST_CASE("partial sums of the generating series")
{
  auto hi = min_positive_root(2, 64).hi;
  Rational prev;
  for (std::size_t n = 1; n <= 40; ++n) {
    auto s = hitting_probability(v3, n, BernoulliMeasure::uniform(v3.alphabet));
    CHECK(s >= prev);
    CHECK(s <= hi);
    prev = s;
  }
  CHECK(hi - prev < Rational(2, 100));
}

TEST_CASE("nowhere density witnesses")
{
  CHECK(f2_nowhere_dense_witness(v3, "") == "a");
  CHECK(f2_nowhere_dense_witness(v3, "b") == "aaa");
  CHECK(f2_nowhere_dense_witness(v3, "ba") == "aa");
  CHECK_THROWS_AS(f2_nowhere_dense_witness(v3, "a"), InputError);
}

TEST_CASE("f1 refutation examples")
{
  Alphabet abc({'a', 'b', 'c'});
  auto none = f1_refute_open(OpenSet::none(abc));
  CHECK(none.side == RefutationReport::Side::below);
  CHECK(none.ball == "ac");
  CHECK(none.ball_kind == RefutationReport::Ball::f1_minus_closure);
  CHECK(replay(none, OpenSet::none(abc), 128));

  auto all = f1_refute_open(OpenSet::everything(abc));
  CHECK(all.side == RefutationReport::Side::above);
  CHECK(all.ball == "c");
  CHECK(all.ball_kind == RefutationReport::Ball::e_minus_f1);

  auto c = f1_refute_open(OpenSet::ball(abc, "c"));
  CHECK(c.measure == Rational(1, 3));
  CHECK(c.side == RefutationReport::Side::above);
  CHECK(c.ball == "c");
  CHECK(replay(c, OpenSet::ball(abc, "c"), 128));

  CHECK_THROWS_AS(f1_refute_open(OpenSet::none(Alphabet({'a', 'b'}))), InputError);
}
