#include "baire/category.hh"

#include "baire/error.hh"

namespace baire
{
  bool is_meager(const Dma& a)
  {
    for (auto& b : bsccs(a))
      if (a.accepts_inf_set(b))
        return false;
    return true;
  }

  bool is_meager_via_measure(const Dma& a)
  {
    return is_meager_via_measure(a, BernoulliMeasure::uniform(a.alphabet()));
  }

  bool is_meager_via_measure(const Dma& a, const BernoulliMeasure& m)
  {
    return mu(a, m).is_zero();
  }

  bool contains_disjunctive(const Dma& a)
  {
    return !is_meager(a);
  }

  bool is_dense(const Dma& a)
  {
    auto pref = pref_dfa(a);
    auto seen = std::vector<char>(pref.size, 0);
    std::vector<State> work{pref.initial};
    seen[pref.initial] = 1;
    while (!work.empty()) {
      State q = work.back();
      work.pop_back();
      if (!pref.accepting[q])
        return false;
      for (std::size_t x = 0; x < pref.alphabet.size(); ++x) {
        State r = pref.next(q, x);
        if (!seen[r]) {
          seen[r] = 1;
          work.push_back(r);
        }
      }
    }
    return true;
  }

  bool is_nowhere_dense(const Dma& a)
  {
    return interior(closure(a)).is_empty();
  }

  Dma avoid_infix(const Alphabet& alphabet, const Word& w)
  {
    alphabet.validate(w);
    const std::size_t k = alphabet.size();
    const std::size_t m = w.size();
    // KMP automaton; state m means w has occurred and is absorbing
    std::vector<std::size_t> fail(m + 1, 0);
    for (std::size_t i = 1, j = 0; i < m; ++i) {
      while (j > 0 && w[i] != w[j])
        j = fail[j];
      if (w[i] == w[j])
        ++j;
      fail[i + 1] = j;
    }
    std::vector<State> delta((m + 1) * k);
    for (std::size_t q = 0; q <= m; ++q)
      for (std::size_t x = 0; x < k; ++x) {
        if (q == m) {
          delta[q * k + x] = static_cast<State>(m);
          continue;
        }
        char c = alphabet.symbol(x);
        std::size_t j = q;
        while (j > 0 && w[j] != c)
          j = fail[j];
        if (w[j] == c)
          ++j;
        delta[q * k + x] = static_cast<State>(j);
      }
    std::vector<char> allowed(m + 1, 1);
    allowed[m] = 0;
    return Dma::safety(alphabet, m + 1, 0, std::move(delta), std::move(allowed));
  }

  std::optional<Word> avoided_infix(const Dma& a, std::size_t max_len)
  {
    if (!is_meager(a))
      throw InputError("avoided_infix: the language is not meager");
    std::optional<Word> found;
    for_each_word(a.alphabet(), max_len, [&](const Word& w) {
      if (contains(avoid_infix(a.alphabet(), w), a).holds)
        found = w;
      return found.has_value();
    });
    return found;
  }
}
