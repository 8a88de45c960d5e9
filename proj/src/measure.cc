#include "baire/measure.hh"

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <sstream>

#include "baire/error.hh"
#include "graph.hh"

namespace baire
{
  BernoulliMeasure::BernoulliMeasure(Alphabet alphabet, std::vector<Rational> probs)
    : alphabet_(std::move(alphabet)), probs_(std::move(probs))
  {
    if (probs_.size() != alphabet_.size())
      throw InputError("measure needs one probability per symbol");
    Rational total;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
      if (probs_[i].sign() <= 0)
        throw InputError(std::string("probability of '") + alphabet_.symbol(i) + "' must be positive");
      total += probs_[i];
    }
    if (total != Rational(1))
      throw InputError("letter probabilities sum to " + total.str() + ", not 1");
  }

  BernoulliMeasure BernoulliMeasure::uniform(const Alphabet& alphabet)
  {
    return BernoulliMeasure(alphabet, std::vector<Rational>(alphabet.size(),
                                                            Rational(1, static_cast<long>(alphabet.size()))));
  }

  BernoulliMeasure BernoulliMeasure::parse(const Alphabet& alphabet, std::string_view text)
  {
    std::istringstream in{std::string(text)};
    std::string tok;
    std::vector<std::optional<Rational>> probs(alphabet.size());
    bool any = false;
    while (in >> tok) {
      if (tok == "uniform" && !any) {
        if (in >> tok)
          throw ParseError(0, "unexpected '" + tok + "' after 'uniform'");
        return uniform(alphabet);
      }
      any = true;
      auto eq = tok.find('=');
      if (eq != 1)
        throw ParseError(0, "expected symbol=probability, got '" + tok + "'");
      int i = alphabet.index(tok[0]);
      if (i < 0)
        throw ParseError(0, std::string("measure names unknown symbol '") + tok[0] + "'");
      if (probs[i])
        throw ParseError(0, std::string("measure assigns '") + tok[0] + "' twice");
      probs[i] = Rational::parse(std::string_view(tok).substr(2));
    }
    std::vector<Rational> out;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      if (!probs[i])
        throw ParseError(0, std::string("measure omits symbol '") + alphabet.symbol(i) + "'");
      out.push_back(*probs[i]);
    }
    return BernoulliMeasure(alphabet, std::move(out));
  }

  Rational BernoulliMeasure::balance_constant() const
  {
    return *std::min_element(probs_.begin(), probs_.end());
  }

  Rational BernoulliMeasure::ball(std::string_view w) const
  {
    Rational out(1);
    for (char c : w) {
      int i = alphabet_.index(c);
      if (i < 0)
        throw InputError(std::string("symbol '") + c + "' is not in alphabet {" + alphabet_.str() + "}");
      out *= probs_[static_cast<std::size_t>(i)];
    }
    return out;
  }

  bool BernoulliMeasure::is_uniform() const
  {
    return std::all_of(probs_.begin(), probs_.end(), [&](const Rational& p) { return p == probs_[0]; });
  }

  std::string BernoulliMeasure::str() const
  {
    if (is_uniform())
      return "uniform";
    std::string out;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
      if (i)
        out += ' ';
      out += alphabet_.symbol(i);
      out += '=';
      out += probs_[i].str();
    }
    return out;
  }

  std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
  {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
      // pivot: largest numerator magnitude among non-zero candidates
      std::size_t pivot = n;
      for (std::size_t r = col; r < n; ++r) {
        if (a[r][col].is_zero())
          continue;
        if (pivot == n || mpz_cmpabs(a[r][col].value().get_num_mpz_t(), a[pivot][col].value().get_num_mpz_t()) > 0)
          pivot = r;
      }
      if (pivot == n)
        throw InvariantViolation("singular linear system");
      std::swap(a[col], a[pivot]);
      std::swap(b[col], b[pivot]);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || a[r][col].is_zero())
          continue;
        Rational f = a[r][col] / a[col][col];
        for (std::size_t c = col; c < n; ++c)
          if (!a[col][c].is_zero())
            a[r][c] -= f * a[col][c];
        b[r] -= f * b[col];
      }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i)
      x[i] = b[i] / a[i][i];
    return x;
  }

  namespace
  {
    // Values of p(q) = Σ_x prob(x) p(δ(q,x)) with `fixed` states pinned.
    // Every unpinned state must reach a pinned one, which makes the system
    // uniquely solvable; it is solved one SCC at a time, successors first.
    std::vector<Rational> absorption(detail::GraphView g, const std::vector<Rational>& probs,
                                     const std::vector<std::optional<Rational>>& fixed)
    {
      const std::size_t n = g.size();
      std::vector<Rational> p(n);
      std::vector<char> known(n, 0), open(n, 0);
      for (State q = 0; q < n; ++q) {
        if (fixed[q]) {
          p[q] = *fixed[q];
          known[q] = 1;
        } else {
          open[q] = 1;
        }
      }
      for (auto& comp : detail::sccs(g, open)) {
        const std::size_t m = comp.size();
        std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(m));
        std::vector<Rational> rhs(m);
        for (std::size_t i = 0; i < m; ++i) {
          mat[i][i] = Rational(1);
          for (std::size_t x = 0; x < g.arity; ++x) {
            State r = g.next(comp[i], x);
            if (known[r]) {
              rhs[i] += probs[x] * p[r];
            } else {
              auto j = static_cast<std::size_t>(std::lower_bound(comp.begin(), comp.end(), r) - comp.begin());
              mat[i][j] -= probs[x];
            }
          }
        }
        auto sol = solve_exact(std::move(mat), std::move(rhs));
        for (std::size_t i = 0; i < m; ++i) {
          p[comp[i]] = sol[i];
          known[comp[i]] = 1;
        }
      }
      return p;
    }
  }

  std::vector<StateSet> bsccs(const Dma& a)
  {
    detail::GraphView g{a.transitions(), a.alphabet().size()};
    std::vector<char> all(a.size(), 1);
    std::vector<StateSet> out;
    for (auto& comp : detail::sccs(g, all))
      if (detail::is_closed(g, comp))
        out.push_back(std::move(comp));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Rational> acceptance_probabilities(const Dma& a, const BernoulliMeasure& m)
  {
    require_same_alphabet(a.alphabet(), m.alphabet(), "acceptance_probabilities");
    std::vector<std::optional<Rational>> fixed(a.size());
    for (auto& b : bsccs(a)) {
      Rational v(a.accepts_inf_set(b) ? 1 : 0);
      for (State q : b)
        fixed[q] = v;
    }
    return absorption({a.transitions(), a.alphabet().size()}, m.probs(), fixed);
  }

  Rational mu(const Dma& a, const BernoulliMeasure& m)
  {
    return acceptance_probabilities(a, m)[a.initial()];
  }

  Rational sigma_prefix_free(const WordDfa& w, const BernoulliMeasure& m)
  {
    require_same_alphabet(w.alphabet, m.alphabet(), "sigma_prefix_free");
    const std::size_t k = w.alphabet.size();
    detail::GraphView g{w.delta, k};
    auto reach = detail::forward_reachable(g, w.initial);
    auto coreach = detail::backward_reachable(g, w.accepting);

    // prefix-freeness: no accepting state reaches an accepting state by a
    // non-empty path
    for (State f = 0; f < w.size; ++f) {
      if (!reach[f] || !w.accepting[f])
        continue;
      std::vector<State> par(w.size, std::numeric_limits<State>::max());
      std::vector<std::size_t> sym(w.size, 0);
      std::deque<State> queue{f};
      while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        for (std::size_t x = 0; x < k; ++x) {
          State r = w.next(s, x);
          if (par[r] != std::numeric_limits<State>::max())
            continue;
          par[r] = s;
          sym[r] = x;
          if (w.accepting[r]) {
            Word ext(1, w.alphabet.symbol(sym[r]));
            for (State cur = par[r]; cur != f; cur = par[cur])
              ext += w.alphabet.symbol(sym[cur]);
            std::reverse(ext.begin(), ext.end());
            // shortest access word to f
            std::vector<State> p2(w.size, std::numeric_limits<State>::max());
            std::vector<std::size_t> s2(w.size, 0);
            std::deque<State> q2{w.initial};
            p2[w.initial] = w.initial;
            while (!q2.empty() && p2[f] == std::numeric_limits<State>::max()) {
              State u = q2.front();
              q2.pop_front();
              for (std::size_t y = 0; y < k; ++y) {
                State v = w.next(u, y);
                if (p2[v] == std::numeric_limits<State>::max()) {
                  p2[v] = u;
                  s2[v] = y;
                  q2.push_back(v);
                }
              }
            }
            Word access;
            for (State cur = f; cur != w.initial; cur = p2[cur])
              access += w.alphabet.symbol(s2[cur]);
            std::reverse(access.begin(), access.end());
            throw InputError("language is not prefix-free: '" + access + "' is a proper prefix of '"
                             + access + ext + "'");
          }
          queue.push_back(r);
        }
      }
    }

    std::vector<std::optional<Rational>> fixed(w.size);
    for (State q = 0; q < w.size; ++q) {
      if (w.accepting[q])
        fixed[q] = Rational(1);
      else if (!coreach[q])
        fixed[q] = Rational(0);
    }
    return absorption(g, m.probs(), fixed)[w.initial];
  }
}
