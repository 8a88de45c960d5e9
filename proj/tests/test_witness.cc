#include <doctest.h>

#include <random>

#include "baire/category.hh"
#include "baire/error.hh"
#include "baire/measure.hh"
#include "baire/witness.hh"
#include "support/random_dma.hh"

using namespace baire;

namespace
{
  const Alphabet ab({'a', 'b'});

  Dma inf_many_a() { return Dma::from_table(ab, 2, 0, {1, 0, 1, 0}, {{1}, {0, 1}}); }
  Dma a_ball() { return Dma::from_table(ab, 3, 0, {1, 2, 1, 1, 2, 2}, {{1}}); }
  Dma b_ball() { return Dma::from_table(ab, 3, 0, {2, 1, 1, 1, 2, 2}, {{1}}); }
  Dma singleton_a() { return Dma::from_table(ab, 2, 0, {0, 1, 1, 1}, {{0}}); }
  Dma singleton_b() { return Dma::from_table(ab, 2, 0, {1, 0, 1, 1}, {{0}}); }

  bool same_open(const OpenSet& x, const OpenSet& y) { return equivalent(open_to_dma(x), open_to_dma(y)); }
}

TEST_CASE("synthesis examples")
{
  auto w = synthesize_abp_witness(inf_many_a());
  CHECK(same_open(w.e, OpenSet::everything(ab)));
  CHECK(equivalent(w.fprime, complement_of(inf_many_a())));

  auto b = synthesize_abp_witness(a_ball());
  CHECK(same_open(b.e, OpenSet::ball(ab, "a")));
  CHECK(is_empty(b.fprime).empty);

  auto s = synthesize_abp_witness(singleton_a());
  CHECK(s.e.is_empty());
  CHECK(equivalent(s.fprime, singleton_a()));
}

TEST_CASE("verification examples")
{
  auto bad = verify_abp_witness(Dma::full(ab), {OpenSet::none(ab), Dma::empty(ab)});
  CHECK_FALSE(bad.ok());
  CHECK(bad.failure == WitnessCheck::Failure::not_covered);
  REQUIRE(bad.counterexample);
  CHECK(verify_abp_witness(Dma::empty(ab), {OpenSet::none(ab), Dma::empty(ab)}).ok());
  auto nm = verify_abp_witness(Dma::full(ab), {OpenSet::none(ab), Dma::full(ab)});
  CHECK(nm.failure == WitnessCheck::Failure::fprime_not_meager);
}

TEST_CASE("union witness examples")
{
  AbpWitness none{OpenSet::none(ab), Dma::empty(ab)};
  auto z = union_witness(Dma::empty(ab), none, Dma::empty(ab), none);
  CHECK(z.e.is_empty());
  CHECK(is_empty(z.fprime).empty);

  auto fa = a_ball(), fb = b_ball();
  auto u = union_witness(fa, synthesize_abp_witness(fa), fb, synthesize_abp_witness(fb));
  CHECK(same_open(u.e, OpenSet::everything(ab)));
  CHECK(is_empty(u.fprime).empty);

  auto sa = singleton_a(), sb = singleton_b();
  auto s = union_witness(sa, synthesize_abp_witness(sa), sb, synthesize_abp_witness(sb));
  CHECK(s.e.is_empty());
  CHECK(is_meager(s.fprime));
  CHECK(verify_abp_witness(union_of(sa, sb), s).ok());
  CHECK_THROWS_AS(union_witness(sa, none, Dma::full(ab), none), InputError);
}

TEST_CASE("complement witness examples")
{
  auto full = complement_witness(Dma::full(ab), {OpenSet::everything(ab), Dma::empty(ab)});
  CHECK(full.e.is_empty());
  CHECK(is_empty(full.fprime).empty);

  auto c = complement_witness(a_ball(), {OpenSet::ball(ab, "a"), Dma::empty(ab)});
  CHECK(same_open(c.e, OpenSet::ball(ab, "b")));
  CHECK(is_empty(c.fprime).empty);

  auto fin = complement_of(inf_many_a());
  auto i = complement_witness(inf_many_a(), {OpenSet::everything(ab), fin});
  CHECK(i.e.is_empty());
  CHECK(equivalent(i.fprime, fin));
  CHECK(verify_abp_witness(fin, i).ok());
}

TEST_CASE("finite up examples")
{
  auto one = finite_up_abp(ab, {{"", "a"}});
  CHECK(equivalent(one.witness.fprime, singleton_a()));
  CHECK(one.avoided == std::vector<Word>{"b"});

  auto alt = finite_up_abp(ab, {{"", "ab"}});
  CHECK(alt.avoided == std::vector<Word>{"aa"});
  CHECK(up_membership(alt.witness.fprime, {"", "ab"}));

  auto two = finite_up_abp(ab, {{"", "a"}, {"", "b"}});
  CHECK(up_membership(two.witness.fprime, {"", "a"}));
  CHECK(up_membership(two.witness.fprime, {"", "b"}));
  CHECK(is_meager(two.witness.fprime));
  CHECK(two.witness.e.is_empty());
}

TEST_CASE("synthesis is total on random automata")
{
  std::mt19937 rng(51);
  for (int i = 0; i < 120; ++i) {
    auto f = testing::random_raw(rng).dma();
    auto w = synthesize_abp_witness(f);
    CHECK(verify_abp_witness(f, w).ok());
    CHECK(mu(symdiff_of(f, open_to_dma(w.e)), BernoulliMeasure::uniform(f.alphabet())).is_zero());
    if (is_meager(f)) {
      CHECK(w.e.is_empty());
      CHECK(contains(w.fprime, f).holds);
    }
  }
}

TEST_CASE("witness algebra on random pairs")
{
  std::mt19937 rng(52);
  int done = 0;
  while (done < 60) {
    auto ra = testing::random_raw(rng), rb = testing::random_raw(rng);
    if (!(ra.alphabet == rb.alphabet))
      continue;
    ++done;
    auto f1 = ra.dma(), f2 = rb.dma();
    auto w1 = synthesize_abp_witness(f1), w2 = synthesize_abp_witness(f2);
    CHECK(verify_abp_witness(union_of(f1, f2), union_witness(f1, w1, f2, w2)).ok());
    CHECK(verify_abp_witness(complement_of(f1), complement_witness(f1, w1)).ok());
    CHECK(verify_abp_witness(intersection_of(f1, f2), intersection_witness(f1, w1, f2, w2)).ok());
  }
}

TEST_CASE("finite up sets on random words")
{
  std::mt19937 rng(53);
  for (int i = 0; i < 60; ++i) {
    Alphabet al = testing::alphabet_of_size(2 + i % 2);
    std::vector<UPWord> xs;
    int count = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int j = 0; j < count; ++j) {
      auto x = testing::random_up(rng, al);
      xs.push_back(up_normalize(x.prefix, x.period));
    }
    auto fw = finite_up_abp(al, xs);
    CHECK(fw.witness.e.is_empty());
    CHECK(is_meager(fw.witness.fprime));
    for (std::size_t j = 0; j < xs.size(); ++j) {
      CHECK(up_membership(fw.witness.fprime, xs[j]));
      CHECK(fw.avoided[j] == up_non_infix_witness(al, xs[j]));
      CHECK(is_nowhere_dense(avoid_infix(al, fw.avoided[j])));
    }
  }
}
