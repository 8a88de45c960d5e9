#include "baire/words.hh"

#include <algorithm>
#include <cctype>

#include "baire/error.hh"

namespace baire
{
  Alphabet::Alphabet(std::vector<char> symbols) : symbols_(std::move(symbols))
  {
    index_.fill(-1);
    if (symbols_.size() < 2)
      throw InputError("alphabet needs at least two symbols");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      char c = symbols_[i];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '^'
          || c == '{' || c == '}' || c == '#' || c == '=' || !std::isprint(static_cast<unsigned char>(c)))
        throw InputError(std::string("symbol '") + c + "' is not allowed in an alphabet");
      auto& slot = index_[static_cast<unsigned char>(c)];
      if (slot >= 0)
        throw InputError(std::string("duplicate alphabet symbol '") + c + "'");
      slot = static_cast<int>(i);
    }
  }

  Alphabet Alphabet::parse(std::string_view text)
  {
    std::vector<char> out;
    bool spaced = text.find_first_of(" \t") != std::string_view::npos;
    std::size_t i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
        ++j;
      if (spaced && j - i != 1)
        throw ParseError(0, "alphabet symbols must be single characters: '"
                              + std::string(text.substr(i, j - i)) + "'");
      for (std::size_t t = i; t < j; ++t)
        out.push_back(text[t]);
      i = j;
    }
    return Alphabet(std::move(out));
  }

  bool Alphabet::contains(std::string_view w) const noexcept
  {
    return std::all_of(w.begin(), w.end(), [this](char c) { return contains(c); });
  }

  void Alphabet::validate(std::string_view w) const
  {
    for (char c : w)
      if (!contains(c))
        throw InputError(std::string("symbol '") + c + "' is not in alphabet {" + str() + "}");
  }

  std::string Alphabet::str() const
  {
    std::string out;
    for (char c : symbols_) {
      if (!out.empty())
        out += ' ';
      out += c;
    }
    return out;
  }

  void require_same_alphabet(const Alphabet& a, const Alphabet& b, const char* op)
  {
    if (!(a == b))
      throw InputError(std::string(op) + ": alphabet mismatch ({" + a.str() + "} vs {" + b.str() + "})");
  }

  bool shortlex_less(const Alphabet& alphabet, std::string_view x, std::string_view y)
  {
    if (x.size() != y.size())
      return x.size() < y.size();
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != y[i])
        return alphabet.index(x[i]) < alphabet.index(y[i]);
    return false;
  }

  bool for_each_word(const Alphabet& alphabet, std::size_t max_len,
                     const std::function<bool(const Word&)>& visit)
  {
    for (std::size_t len = 0; len <= max_len; ++len) {
      std::vector<std::size_t> digits(len, 0);
      Word w(len, alphabet.symbol(0));
      while (true) {
        if (visit(w))
          return true;
        std::size_t pos = len;
        while (pos > 0 && digits[pos - 1] + 1 == alphabet.size()) {
          digits[pos - 1] = 0;
          w[pos - 1] = alphabet.symbol(0);
          --pos;
        }
        if (pos == 0)
          break;
        ++digits[pos - 1];
        w[pos - 1] = alphabet.symbol(digits[pos - 1]);
      }
    }
    return false;
  }

  char UPWord::at(std::size_t i) const
  {
    if (i < prefix.size())
      return prefix[i];
    return period[(i - prefix.size()) % period.size()];
  }

  Word UPWord::unroll(std::size_t n) const
  {
    Word out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      out += at(i);
    return out;
  }

  std::string UPWord::str() const
  {
    return prefix + "(" + period + ")^w";
  }

  UPWord UPWord::parse(std::string_view text)
  {
    auto open = text.find('(');
    auto close = text.find(')');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open
        || text.substr(close) != ")^w" || text.find('(', open + 1) != std::string_view::npos)
      throw ParseError(0, "expected ultimately periodic word of the form u(v)^w, got '"
                            + std::string(text) + "'");
    Word u(text.substr(0, open));
    Word v(text.substr(open + 1, close - open - 1));
    if (v.empty())
      throw ParseError(0, "empty period in '" + std::string(text) + "'");
    return up_normalize(std::move(u), std::move(v));
  }

  UPWord up_normalize(Word u, Word v)
  {
    if (v.empty())
      throw InputError("ultimately periodic word needs a non-empty period");
    // primitive root: smallest d dividing |v| with v = (v[0..d))^{|v|/d}
    for (std::size_t d = 1; d <= v.size(); ++d) {
      if (v.size() % d != 0)
        continue;
      bool periodic = true;
      for (std::size_t i = d; i < v.size() && periodic; ++i)
        periodic = v[i] == v[i - d];
      if (periodic) {
        v.resize(d);
        break;
      }
    }
    // absorb the tail of u into the period by rotating it
    while (!u.empty() && u.back() == v.back()) {
      u.pop_back();
      std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
    }
    return UPWord{std::move(u), std::move(v)};
  }

  std::set<Word> infixes_of_unrolling(const UPWord& x, std::size_t n, std::size_t k)
  {
    Word body = x.prefix;
    for (std::size_t i = 0; i < k; ++i)
      body += x.period;
    std::set<Word> out;
    for (std::size_t i = 0; i + n <= body.size(); ++i)
      out.insert(body.substr(i, n));
    return out;
  }

  std::set<Word> up_infixes(const UPWord& x, std::size_t n)
  {
    std::size_t p = x.period.size();
    return infixes_of_unrolling(x, n, (n + p - 1) / p + 2);
  }

  Word up_non_infix_witness(const Alphabet& alphabet, const UPWord& x)
  {
    alphabet.validate(x.prefix);
    alphabet.validate(x.period);
    Word found;
    // at most |u|+|v| distinct infixes per length, so some length <= |u|+|v| has a gap
    for (std::size_t len = 1;; ++len) {
      auto present = up_infixes(x, len);
      bool hit = false;
      for_each_word(alphabet, len, [&](const Word& w) {
        if (w.size() == len && !present.contains(w)) {
          found = w;
          hit = true;
        }
        return hit;
      });
      if (hit)
        return found;
    }
  }
}
