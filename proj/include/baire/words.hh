#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace baire
{
  /// Finite words are plain symbol strings; every symbol is one character.
  using Word = std::string;

  /// An ordered alphabet of at least two distinct single-character symbols.
  /// The order drives shortlex enumeration everywhere in the library.
  class Alphabet
  {
  public:
    explicit Alphabet(std::vector<char> symbols);

    /// Accepts `a b c` (whitespace separated) or `abc`.
    static Alphabet parse(std::string_view text);

    std::size_t size() const noexcept { return symbols_.size(); }
    char symbol(std::size_t i) const { return symbols_.at(i); }
    const std::vector<char>& symbols() const noexcept { return symbols_; }

    /// Index of `c`, or -1 when `c` is not a symbol.
    int index(char c) const noexcept { return index_[static_cast<unsigned char>(c)]; }
    bool contains(char c) const noexcept { return index(c) >= 0; }
    bool contains(std::string_view w) const noexcept;

    /// Throws InputError naming the first foreign symbol.
    void validate(std::string_view w) const;

    /// Space-separated symbols, e.g. `a b c`.
    std::string str() const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

  private:
    std::vector<char> symbols_;
    std::array<int, 256> index_;
  };

  /// Throws InputError when the alphabets differ.
  void require_same_alphabet(const Alphabet& a, const Alphabet& b, const char* op);

  /// Shortlex order: by length, then lexicographically in alphabet order.
  bool shortlex_less(const Alphabet& alphabet, std::string_view x, std::string_view y);

  /// Calls `visit` on every word of length <= max_len in shortlex order
  /// until it returns true. Returns whether a visit returned true.
  bool for_each_word(const Alphabet& alphabet, std::size_t max_len,
                     const std::function<bool(const Word&)>& visit);

  /// The ultimately periodic ω-word prefix · period^ω.
  struct UPWord
  {
    Word prefix;
    Word period;

    /// The symbol at position i of the infinite word.
    char at(std::size_t i) const;

    /// The first n symbols.
    Word unroll(std::size_t n) const;

    /// `u(v)^w`; an empty prefix prints as `(v)^w`.
    std::string str() const;

    /// Parses `u(v)^w` and returns the canonical form.
    static UPWord parse(std::string_view text);

    friend bool operator==(const UPWord&, const UPWord&) = default;
  };

  /// Canonical representative of u·v^ω: the period is primitive and the
  /// prefix is as short as possible. Two inputs denote the same ω-word iff
  /// their canonical forms are equal.
  UPWord up_normalize(Word u, Word v);

  /// Length-n infixes of u·v^k for an explicit number of unrollings k.
  std::set<Word> infixes_of_unrolling(const UPWord& x, std::size_t n, std::size_t k);

  /// Length-n infixes of the ω-word x.
  std::set<Word> up_infixes(const UPWord& x, std::size_t n);

  /// Shortlex-least word over `alphabet` that never occurs in x.
  Word up_non_infix_witness(const Alphabet& alphabet, const UPWord& x);
}
