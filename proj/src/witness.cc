#include "baire/witness.hh"

#include "baire/category.hh"
#include "baire/error.hh"
#include "baire/measure.hh"

namespace baire
{
  namespace
  {
    void require_verified(const Dma& f, const AbpWitness& w, const char* what)
    {
      if (!verify_abp_witness(f, w))
        throw InputError(std::string(what) + ": input witness does not verify");
    }

    AbpWitness checked(const Dma& f, AbpWitness w, const char* what)
    {
      auto check = verify_abp_witness(f, w);
      if (!check)
        throw InvariantViolation(std::string(what) + ": constructed witness fails verification"
                                 + (check.counterexample ? " at " + check.counterexample->str() : ""));
      return w;
    }
  }

  AbpWitness synthesize_abp_witness(const Dma& f)
  {
    auto p = acceptance_probabilities(f, BernoulliMeasure::uniform(f.alphabet()));
    std::vector<char> sure(f.size());
    for (State q = 0; q < f.size(); ++q)
      sure[q] = p[q] == Rational(1);
    auto t = f.transitions();
    auto e = OpenSet::from_table(f.alphabet(), f.size(), 0, std::vector<State>(t.begin(), t.end()),
                                 std::move(sure));
    auto fprime = symdiff_of(f, open_to_dma(e));
    if (!mu(fprime, BernoulliMeasure::uniform(f.alphabet())).is_zero())
      throw InvariantViolation("synthesize_abp_witness: F Δ E has positive measure");
    return checked(f, AbpWitness{std::move(e), std::move(fprime)}, "synthesize_abp_witness");
  }

  WitnessCheck verify_abp_witness(const Dma& f, const AbpWitness& w)
  {
    require_same_alphabet(f.alphabet(), w.e.alphabet(), "verify_abp_witness");
    require_same_alphabet(f.alphabet(), w.fprime.alphabet(), "verify_abp_witness");
    WitnessCheck out;
    if (!is_meager(w.fprime)) {
      out.failure = WitnessCheck::Failure::fprime_not_meager;
      return out;
    }
    auto c = contains(w.fprime, symdiff_of(f, open_to_dma(w.e)));
    if (!c) {
      out.failure = WitnessCheck::Failure::not_covered;
      out.counterexample = c.counterexample;
    }
    return out;
  }

  AbpWitness union_witness(const Dma& f1, const AbpWitness& w1, const Dma& f2, const AbpWitness& w2)
  {
    require_verified(f1, w1, "union_witness");
    require_verified(f2, w2, "union_witness");
    // (F1 ∪ F2) Δ (E1 ∪ E2) ⊆ (F1 Δ E1) ∪ (F2 Δ E2)
    AbpWitness out{union_open(w1.e, w2.e), union_of(w1.fprime, w2.fprime)};
    return checked(union_of(f1, f2), std::move(out), "union_witness");
  }

  AbpWitness complement_witness(const Dma& f, const AbpWitness& w)
  {
    require_verified(f, w, "complement_witness");
    auto outside = complement_of(open_to_dma(w.e));
    auto ec = interior(outside);
    auto boundary = intersection_of(outside, complement_of(open_to_dma(ec)));
    if (!is_nowhere_dense(boundary))
      throw InvariantViolation("complement_witness: boundary of the open set is not nowhere dense");
    AbpWitness out{std::move(ec), union_of(w.fprime, boundary)};
    return checked(complement_of(f), std::move(out), "complement_witness");
  }

  AbpWitness intersection_witness(const Dma& f1, const AbpWitness& w1, const Dma& f2, const AbpWitness& w2)
  {
    auto c1 = complement_witness(f1, w1);
    auto c2 = complement_witness(f2, w2);
    auto u = union_witness(complement_of(f1), c1, complement_of(f2), c2);
    return complement_witness(union_of(complement_of(f1), complement_of(f2)), u);
  }

  FiniteUpWitness finite_up_abp(const Alphabet& alphabet, const std::vector<UPWord>& words)
  {
    if (words.empty())
      throw InputError("finite_up_abp: empty word list");
    FiniteUpWitness out{{OpenSet::none(alphabet), Dma::empty(alphabet)}, {}};
    std::optional<Dma> fprime;
    for (auto& x : words) {
      alphabet.validate(x.prefix);
      alphabet.validate(x.period);
      auto canon = up_normalize(x.prefix, x.period);
      Word avoided = up_non_infix_witness(alphabet, canon);
      auto block = avoid_infix(alphabet, avoided);
      if (!is_nowhere_dense(block))
        throw InvariantViolation("finite_up_abp: avoid-infix set is not nowhere dense");
      fprime = fprime ? union_of(*fprime, block) : block;
      out.avoided.push_back(std::move(avoided));
    }
    out.witness.fprime = std::move(*fprime);
    if (!is_meager(out.witness.fprime))
      throw InvariantViolation("finite_up_abp: F' is not meager");
    for (auto& x : words)
      if (!up_membership(out.witness.fprime, x))
        throw InvariantViolation("finite_up_abp: " + x.str() + " is not covered by F'");
    return out;
  }
}
