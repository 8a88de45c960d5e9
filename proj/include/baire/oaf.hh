#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "baire/automata.hh"

namespace baire
{
  /// Line-oriented automaton file:
  ///
  ///     kind: dma            # or: kind: open
  ///     alphabet: a b
  ///     states: 2
  ///     initial: 0
  ///     trans: 0 a 1         # one line per (state, symbol)
  ///     accept: {0 1} {1}    # dma only
  ///     final: 1             # open only
  ///     measure: uniform     # optional, or: a=1/3 b=2/3
  struct OafDocument
  {
    enum class Kind { dma, open };

    Kind kind = Kind::dma;
    Alphabet alphabet = Alphabet({'a', 'b'});
    std::size_t states = 1;
    State initial = 0;
    std::vector<State> delta;       ///< states × |alphabet|, row-major
    std::vector<StateSet> accept;   ///< sorted, deduplicated
    StateSet finals;                ///< sorted
    std::optional<std::string> measure;

    friend bool operator==(const OafDocument&, const OafDocument&) = default;
  };

  /// Validating parser. `warnings` receives notes about auto-corrections
  /// (non-absorbing finals in open documents).
  OafDocument parse_oaf(std::string_view text, std::vector<std::string>* warnings = nullptr);

  std::string serialize_oaf(const OafDocument& doc);

  Dma to_dma(const OafDocument& doc);
  OpenSet to_open_set(const OafDocument& doc);

  OafDocument to_document(const Dma& a);
  OafDocument to_document(const OpenSet& e);
}
