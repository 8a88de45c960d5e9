#include "baire/oaf.hh"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

#include "baire/error.hh"

namespace baire
{
  namespace
  {
    constexpr State missing = std::numeric_limits<State>::max();

    std::string_view trim(std::string_view s)
    {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
      return s;
    }

    std::vector<std::string> tokens(std::string_view s)
    {
      std::istringstream in{std::string(s)};
      std::vector<std::string> out;
      std::string t;
      while (in >> t)
        out.push_back(t);
      return out;
    }

    std::size_t number(std::size_t line, std::string_view tok)
    {
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
      return v;
    }

    struct RawItem
    {
      std::size_t line;
      std::string value;
    };
  }

  OafDocument parse_oaf(std::string_view text, std::vector<std::string>* warnings)
  {
    std::optional<RawItem> kind, alphabet, states, initial, accept, final, measure;
    std::vector<RawItem> trans;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto eol = text.find('\n', pos);
      if (eol == std::string_view::npos)
        eol = text.size();
      std::string_view line = text.substr(pos, eol - pos);
      pos = eol + 1;
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
      line = trim(line);
      if (line.empty())
        continue;
      auto colon = line.find(':');
      if (colon == std::string_view::npos)
        throw ParseError(line_no, "expected 'key: value'");
      std::string key(trim(line.substr(0, colon)));
      RawItem item{line_no, std::string(trim(line.substr(colon + 1)))};
      auto once = [&](std::optional<RawItem>& slot) {
        if (slot)
          throw ParseError(line_no, "duplicate '" + key + "' line");
        slot = std::move(item);
      };
      if (key == "kind")
        once(kind);
      else if (key == "alphabet")
        once(alphabet);
      else if (key == "states")
        once(states);
      else if (key == "initial")
        once(initial);
      else if (key == "accept")
        once(accept);
      else if (key == "final")
        once(final);
      else if (key == "measure")
        once(measure);
      else if (key == "trans")
        trans.push_back(std::move(item));
      else
        throw ParseError(line_no, "unknown key '" + key + "'");
    }

    OafDocument doc;
    if (kind) {
      if (kind->value == "dma")
        doc.kind = OafDocument::Kind::dma;
      else if (kind->value == "open")
        doc.kind = OafDocument::Kind::open;
      else
        throw ParseError(kind->line, "kind must be 'dma' or 'open'");
    }
    if (!alphabet)
      throw ParseError(0, "missing 'alphabet' line");
    try {
      doc.alphabet = Alphabet::parse(alphabet->value);
    } catch (const InputError& e) {
      throw ParseError(alphabet->line, e.what());
    }
    if (!states)
      throw ParseError(0, "missing 'states' line");
    doc.states = number(states->line, states->value);
    if (doc.states == 0)
      throw ParseError(states->line, "an automaton needs at least one state");
    if (!initial)
      throw ParseError(0, "missing 'initial' line");
    doc.initial = static_cast<State>(number(initial->line, initial->value));
    if (doc.initial >= doc.states)
      throw ParseError(initial->line, "initial state " + initial->value + " is not declared");

    const std::size_t k = doc.alphabet.size();
    doc.delta.assign(doc.states * k, missing);
    for (auto& t : trans) {
      auto tok = tokens(t.value);
      if (tok.size() != 3 || tok[1].size() != 1)
        throw ParseError(t.line, "expected 'trans: <state> <symbol> <state>'");
      std::size_t from = number(t.line, tok[0]);
      std::size_t to = number(t.line, tok[2]);
      int x = doc.alphabet.index(tok[1][0]);
      if (from >= doc.states || to >= doc.states)
        throw ParseError(t.line, "transition references undeclared state");
      if (x < 0)
        throw ParseError(t.line, "symbol '" + tok[1] + "' is not in the alphabet");
      State& slot = doc.delta[from * k + static_cast<std::size_t>(x)];
      if (slot != missing)
        throw ParseError(t.line, "duplicate transition for state " + tok[0] + " and symbol " + tok[1]);
      slot = static_cast<State>(to);
    }
    for (std::size_t q = 0; q < doc.states; ++q)
      for (std::size_t x = 0; x < k; ++x)
        if (doc.delta[q * k + x] == missing)
          throw ParseError(0, "transitions are not total: state " + std::to_string(q) + " has no move on '"
                                + std::string(1, doc.alphabet.symbol(x)) + "'");

    if (doc.kind == OafDocument::Kind::dma) {
      if (final)
        throw ParseError(final->line, "'final' belongs to open documents");
      if (accept) {
        std::string_view rest = accept->value;
        while (!(rest = trim(rest)).empty()) {
          if (rest.front() != '{')
            throw ParseError(accept->line, "expected '{' in acceptance family");
          auto close = rest.find('}');
          if (close == std::string_view::npos)
            throw ParseError(accept->line, "unterminated '{' in acceptance family");
          StateSet set;
          for (auto& tok : tokens(rest.substr(1, close - 1))) {
            std::size_t q = number(accept->line, tok);
            if (q >= doc.states)
              throw ParseError(accept->line, "acceptance set references unknown state " + tok);
            set.push_back(static_cast<State>(q));
          }
          if (set.empty())
            throw ParseError(accept->line, "acceptance sets must be non-empty");
          std::sort(set.begin(), set.end());
          set.erase(std::unique(set.begin(), set.end()), set.end());
          doc.accept.push_back(std::move(set));
          rest = rest.substr(close + 1);
        }
        std::sort(doc.accept.begin(), doc.accept.end());
        doc.accept.erase(std::unique(doc.accept.begin(), doc.accept.end()), doc.accept.end());
      }
    } else {
      if (accept)
        throw ParseError(accept->line, "'accept' belongs to dma documents");
      if (final) {
        for (auto& tok : tokens(final->value)) {
          std::size_t q = number(final->line, tok);
          if (q >= doc.states)
            throw ParseError(final->line, "final state " + tok + " is not declared");
          doc.finals.push_back(static_cast<State>(q));
        }
        std::sort(doc.finals.begin(), doc.finals.end());
        doc.finals.erase(std::unique(doc.finals.begin(), doc.finals.end()), doc.finals.end());
      }
      for (State f : doc.finals)
        for (std::size_t x = 0; x < k; ++x)
          if (doc.delta[f * k + x] != f) {
            if (warnings)
              warnings->push_back("final state " + std::to_string(f)
                                  + " was not absorbing; its transitions were made self-loops");
            for (std::size_t y = 0; y < k; ++y)
              doc.delta[f * k + y] = f;
            break;
          }
    }
    if (measure)
      doc.measure = measure->value;
    return doc;
  }

  std::string serialize_oaf(const OafDocument& doc)
  {
    std::ostringstream out;
    const std::size_t k = doc.alphabet.size();
    out << "kind: " << (doc.kind == OafDocument::Kind::dma ? "dma" : "open") << '\n';
    out << "alphabet: " << doc.alphabet.str() << '\n';
    out << "states: " << doc.states << '\n';
    out << "initial: " << doc.initial << '\n';
    for (std::size_t q = 0; q < doc.states; ++q)
      for (std::size_t x = 0; x < k; ++x)
        out << "trans: " << q << ' ' << doc.alphabet.symbol(x) << ' ' << doc.delta[q * k + x] << '\n';
    if (doc.kind == OafDocument::Kind::dma) {
      out << "accept:";
      for (auto& set : doc.accept) {
        out << " {";
        for (std::size_t i = 0; i < set.size(); ++i)
          out << (i ? " " : "") << set[i];
        out << '}';
      }
      out << '\n';
    } else {
      out << "final:";
      for (State f : doc.finals)
        out << ' ' << f;
      out << '\n';
    }
    if (doc.measure)
      out << "measure: " << *doc.measure << '\n';
    return out.str();
  }

  Dma to_dma(const OafDocument& doc)
  {
    if (doc.kind == OafDocument::Kind::open)
      return open_to_dma(to_open_set(doc));
    return Dma::from_table(doc.alphabet, doc.states, doc.initial, doc.delta, doc.accept);
  }

  OpenSet to_open_set(const OafDocument& doc)
  {
    if (doc.kind != OafDocument::Kind::open)
      throw InputError("expected an open-set document (kind: open)");
    std::vector<char> final(doc.states, 0);
    for (State f : doc.finals)
      final[f] = 1;
    return OpenSet::from_table(doc.alphabet, doc.states, doc.initial, doc.delta, std::move(final));
  }

  OafDocument to_document(const Dma& a)
  {
    OafDocument doc;
    doc.kind = OafDocument::Kind::dma;
    doc.alphabet = a.alphabet();
    doc.states = a.size();
    doc.initial = a.initial();
    auto t = a.transitions();
    doc.delta.assign(t.begin(), t.end());
    doc.accept = a.acceptance_family();
    std::sort(doc.accept.begin(), doc.accept.end());
    return doc;
  }

  OafDocument to_document(const OpenSet& e)
  {
    OafDocument doc;
    doc.kind = OafDocument::Kind::open;
    doc.alphabet = e.alphabet();
    doc.states = e.size();
    doc.initial = e.initial();
    auto t = e.transitions();
    doc.delta.assign(t.begin(), t.end());
    for (State q = 0; q < e.size(); ++q)
      if (e.is_final(q))
        doc.finals.push_back(q);
    return doc;
  }
}
