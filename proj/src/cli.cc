#include "baire/cli.hh"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <future>
#include <sstream>

#include "baire/category.hh"
#include "baire/counter.hh"
#include "baire/error.hh"
#include "baire/measure.hh"
#include "baire/oaf.hh"
#include "baire/witness.hh"

namespace baire
{
  namespace
  {
    struct Globals
    {
      unsigned precision = 64;
      unsigned digits = 10;
      std::size_t max_witness_len = 8;
      unsigned jobs = 1;
      std::string measure;
    };

    std::string read_file(const std::string& path)
    {
      std::ifstream in(path, std::ios::binary);
      if (!in)
        throw InputError("cannot read '" + path + "'");
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    void write_file(const std::string& path, const std::string& text)
    {
      std::ofstream out(path, std::ios::binary);
      if (!out || !(out << text))
        throw InputError("cannot write '" + path + "'");
    }

    struct Loaded
    {
      OafDocument doc;
      std::vector<std::string> warnings;
    };

    Loaded load(const std::string& path)
    {
      Loaded l;
      try {
        l.doc = parse_oaf(read_file(path), &l.warnings);
      } catch (const ParseError& e) {
        throw ParseError(0, path + ": " + e.what());
      }
      for (auto& w : l.warnings)
        w = path + ": warning: " + w;
      return l;
    }

    std::string tf(bool b) { return b ? "true" : "false"; }

    std::string word_text(const Word& w) { return w.empty() ? "(empty)" : w; }

    class Runner
    {
    public:
      std::ostringstream out, err;
      Globals g;

      // Per-file decision/value command, fanned out over --jobs workers
      // with results emitted in input order.
      void per_file(const std::vector<std::string>& files,
                    const std::function<std::string(const Loaded&)>& body)
      {
        std::vector<std::future<std::pair<std::string, std::string>>> pending;
        auto task = [&body](std::string path) {
          auto l = load(path);
          std::string notes;
          for (auto& w : l.warnings)
            notes += w + "\n";
          return std::make_pair(body(l), notes);
        };
        std::size_t jobs = std::max(1u, g.jobs);
        for (std::size_t start = 0; start < files.size(); start += jobs) {
          pending.clear();
          for (std::size_t i = start; i < std::min(files.size(), start + jobs); ++i)
            pending.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, task, files[i]));
          for (auto& f : pending) {
            auto [text, notes] = f.get();
            err << notes;
            out << text;
          }
        }
      }

      BernoulliMeasure measure_for(const OafDocument& doc) const
      {
        if (!g.measure.empty())
          return BernoulliMeasure::parse(doc.alphabet, g.measure);
        if (doc.measure)
          return BernoulliMeasure::parse(doc.alphabet, *doc.measure);
        return BernoulliMeasure::uniform(doc.alphabet);
      }

      Dma dma_of(const std::string& path)
      {
        auto l = load(path);
        for (auto& w : l.warnings)
          err << w << '\n';
        return to_dma(l.doc);
      }

      OpenSet open_of(const std::string& path)
      {
        auto l = load(path);
        for (auto& w : l.warnings)
          err << w << '\n';
        return to_open_set(l.doc);
      }

      void emit_document(const OafDocument& doc, const std::string& path)
      {
        if (path.empty())
          out << serialize_oaf(doc);
        else
          write_file(path, serialize_oaf(doc));
      }
    };
  }

  CliResult run_cli(const std::vector<std::string>& args)
  {
    Runner r;
    CLI::App app{"Decision procedures for regular ω-languages in Cantor space", "baire"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--precision", r.g.precision, "Root isolation precision in bits")->capture_default_str();
    app.add_option("--digits", r.g.digits, "Decimal digits in interval renderings")->capture_default_str();
    app.add_option("--max-witness-len", r.g.max_witness_len, "Search cap for witness words")->capture_default_str();
    app.add_option("--jobs", r.g.jobs, "Worker threads for multi-file commands")->capture_default_str();
    app.add_option("--measure", r.g.measure, "Bernoulli measure: uniform or a=1/2 b=1/2");

    std::function<void()> action;
    std::vector<std::string> files;

    auto file_verb = [&](const char* name, const char* help,
                         std::function<std::string(const Loaded&)> body) {
      auto* sub = app.add_subcommand(name, help);
      sub->add_option("files", files, "OAF files")->required();
      sub->callback([&, body] { action = [&, body] { r.per_file(files, body); }; });
    };

    file_verb("measure", "Exact measure of the language", [&](const Loaded& l) {
      return mu(to_dma(l.doc), r.measure_for(l.doc)).str() + "\n";
    });
    file_verb("meager", "Is the language of first Baire category", [](const Loaded& l) {
      return tf(is_meager(to_dma(l.doc))) + "\n";
    });
    file_verb("dense", "Is the language dense", [](const Loaded& l) {
      return tf(is_dense(to_dma(l.doc))) + "\n";
    });
    file_verb("nowhere-dense", "Is the language nowhere dense", [](const Loaded& l) {
      return tf(is_nowhere_dense(to_dma(l.doc))) + "\n";
    });
    file_verb("disjunctive", "Does the language contain a disjunctive word", [](const Loaded& l) {
      return tf(contains_disjunctive(to_dma(l.doc))) + "\n";
    });
    file_verb("empty", "Emptiness, with an ultimately periodic witness", [](const Loaded& l) {
      auto e = is_empty(to_dma(l.doc));
      return e.empty ? std::string("true\n") : "false\nwitness: " + e.witness->str() + "\n";
    });

    std::string file_a, file_b, file_c, out_path, out_e, out_fp, upword, op;
    std::optional<std::size_t> max_len;

    auto* avoided = app.add_subcommand("avoided-infix", "Shortlex-least infix avoided by a meager language");
    avoided->add_option("file", file_a)->required();
    avoided->add_option("--max-len", max_len, "Longest candidate word");
    avoided->callback([&] {
      action = [&] {
        auto w = avoided_infix(r.dma_of(file_a), max_len.value_or(r.g.max_witness_len));
        r.out << (w ? word_text(*w) : std::string("exhausted")) << '\n';
      };
    });

    auto* clo = app.add_subcommand("closure", "Topological closure as an OAF document");
    clo->add_option("file", file_a)->required();
    clo->add_option("-o,--out", out_path);
    clo->callback([&] { action = [&] { r.emit_document(to_document(closure(r.dma_of(file_a))), out_path); }; });

    auto* inte = app.add_subcommand("interior", "Largest open subset as an OAF open document");
    inte->add_option("file", file_a)->required();
    inte->add_option("-o,--out", out_path);
    inte->callback([&] { action = [&] { r.emit_document(to_document(interior(r.dma_of(file_a))), out_path); }; });

    auto* boo = app.add_subcommand("boolean", "union | intersection | complement | symdiff");
    boo->add_option("op", op)->required()->check(CLI::IsMember({"union", "intersection", "complement", "symdiff"}));
    boo->add_option("a", file_a)->required();
    boo->add_option("b", file_b);
    boo->add_option("-o,--out", out_path);
    boo->callback([&] {
      action = [&] {
        auto a = r.dma_of(file_a);
        BoolOp kind = op == "union" ? BoolOp::union_
                    : op == "intersection" ? BoolOp::intersection
                    : op == "symdiff" ? BoolOp::symdiff
                                      : BoolOp::complement;
        if (kind == BoolOp::complement) {
          if (!file_b.empty())
            throw InputError("complement takes one operand");
          r.emit_document(to_document(complement_of(a)), out_path);
          return;
        }
        if (file_b.empty())
          throw InputError(op + " needs two operands");
        auto b = r.dma_of(file_b);
        r.emit_document(to_document(boolean_combine(a, &b, kind)), out_path);
      };
    });

    auto* member = app.add_subcommand("member-up", "Membership of an ultimately periodic word u(v)^w");
    member->add_option("file", file_a)->required();
    member->add_option("word", upword)->required();
    member->callback([&] {
      action = [&] { r.out << tf(up_membership(r.dma_of(file_a), UPWord::parse(upword))) << '\n'; };
    });

    auto* cont = app.add_subcommand("contains", "Is L(B) a subset of L(A)");
    cont->add_option("a", file_a)->required();
    cont->add_option("b", file_b)->required();
    cont->callback([&] {
      action = [&] {
        auto c = contains(r.dma_of(file_a), r.dma_of(file_b));
        r.out << tf(c.holds) << '\n';
        if (!c.holds)
          r.out << "counterexample: " << c.counterexample->str() << '\n';
      };
    });

    // ------------------------------------------------------------- abp
    auto* abp = app.add_subcommand("abp", "Automatic Baire property witnesses");
    abp->require_subcommand(1);
    auto* synth = abp->add_subcommand("synth", "Synthesize and verify a witness (E, F')");
    synth->add_option("file", file_a)->required();
    synth->add_option("--out-e", out_e);
    synth->add_option("--out-fprime", out_fp);
    synth->callback([&] {
      action = [&] {
        auto w = synthesize_abp_witness(r.dma_of(file_a));
        r.out << "true\n";
        r.emit_document(to_document(w.e), out_e);
        r.emit_document(to_document(w.fprime), out_fp);
      };
    });
    auto* verify = abp->add_subcommand("verify", "Check F Δ E ⊆ F' with F' meager");
    verify->add_option("f", file_a)->required();
    verify->add_option("e", file_b)->required();
    verify->add_option("fprime", file_c)->required();
    verify->callback([&] {
      action = [&] {
        auto f = r.dma_of(file_a);
        AbpWitness w{r.open_of(file_b), r.dma_of(file_c)};
        auto check = verify_abp_witness(f, w);
        r.out << tf(check.ok()) << '\n';
        if (check.failure == WitnessCheck::Failure::fprime_not_meager)
          r.out << "reason: F' is not meager\n";
        if (check.failure == WitnessCheck::Failure::not_covered)
          r.out << "reason: F Δ E is not contained in F'\ncounterexample: " << check.counterexample->str() << '\n';
      };
    });
    std::vector<std::string> upwords;
    std::string alphabet_text;
    auto* finite = abp->add_subcommand("finite-up", "Witness for a finite set of ultimately periodic words");
    finite->add_option("words", upwords)->required();
    finite->add_option("--out-fprime", out_fp);
    finite->add_option("--alphabet", alphabet_text, "Alphabet, default: symbols used, padded to two");
    finite->callback([&] {
      action = [&] {
        std::vector<UPWord> xs;
        for (auto& s : upwords)
          xs.push_back(UPWord::parse(s));
        std::optional<Alphabet> alphabet;
        if (!alphabet_text.empty()) {
          alphabet = Alphabet::parse(alphabet_text);
        } else {
          std::vector<char> syms;
          for (auto& x : xs)
            for (char c : x.prefix + x.period)
              if (std::find(syms.begin(), syms.end(), c) == syms.end())
                syms.push_back(c);
          std::sort(syms.begin(), syms.end());
          for (char pad : {'a', 'b', 'c'})
            if (syms.size() < 2 && std::find(syms.begin(), syms.end(), pad) == syms.end())
              syms.push_back(pad);
          std::sort(syms.begin(), syms.end());
          alphabet = Alphabet(syms);
        }
        auto fw = finite_up_abp(*alphabet, xs);
        for (std::size_t i = 0; i < xs.size(); ++i)
          r.out << xs[i].str() << " avoids " << word_text(fw.avoided[i]) << '\n';
        r.out << "true\n";
        if (!out_fp.empty())
          write_file(out_fp, serialize_oaf(to_document(fw.witness.fprime)));
      };
    });

    // -------------------------------------------------------------- v3
    auto v3lang = CounterLanguage::v3();
    auto* v3 = app.add_subcommand("v3", "The one-counter language V = a ∪ b·V³ and its ω-languages");
    v3->require_subcommand(1);
    std::string word;
    bool trace = false;
    auto trace_line = [&](const CounterRun& run) {
      if (!trace)
        return;
      r.out << "trace:";
      for (long c : run.trace)
        r.out << ' ' << c;
      r.out << '\n';
    };
    auto* v3member = v3->add_subcommand("member", "Is the word in V");
    v3member->add_option("word", word)->required();
    v3member->add_flag("--trace", trace);
    v3member->callback([&] {
      action = [&] {
        auto run = counter_run(v3lang, word);
        r.out << tf(run.status == CounterStatus::in_language) << '\n';
        trace_line(run);
      };
    });
    auto* v3prefix = v3->add_subcommand("prefix", "Is the word a proper prefix of a word in V");
    v3prefix->add_option("word", word)->required();
    v3prefix->add_flag("--trace", trace);
    v3prefix->callback([&] {
      action = [&] {
        auto run = counter_run(v3lang, word);
        r.out << tf(run.status == CounterStatus::proper_prefix) << '\n';
        trace_line(run);
      };
    });
    int k = 2;
    auto* root = v3->add_subcommand("root", "Isolate the least positive root of t^3 - k t + 1");
    root->add_option("-k", k)->capture_default_str();
    root->callback([&] {
      action = [&] {
        auto iv = min_positive_root(k, r.g.precision);
        r.out << iv.str() << " ~ " << root_decimal(k, r.g.digits, r.g.precision) << '\n';
      };
    });
    auto* irr = v3->add_subcommand("irrational", "Irrationality certificate for the least positive root");
    irr->add_option("-k", k)->capture_default_str();
    irr->callback([&] {
      action = [&] {
        auto cert = irrationality_certificate(k);
        r.out << "polynomial: t^3 - " << k << "t + 1\n";
        for (auto& [cand, value] : cert.candidates)
          r.out << "candidate " << cand << ": " << value << '\n';
        if (cert.rational_root) {
          const auto& q = cert.quadratic->coeffs;
          r.out << "rational root " << *cert.rational_root << " lies above the least root (< "
                << cert.root_upper_bound.decimal(r.g.digits) << ")\n";
          r.out << "quadratic factor: " << q[0] << " " << q[1] << " " << q[2] << '\n';
          r.out << "discriminant " << cert.discriminant << ": " << cert.discriminant_floor_sqrt << "^2 < "
                << cert.discriminant << " < " << cert.discriminant_floor_sqrt + 1 << "^2\n";
        } else {
          r.out << "no rational roots\n";
        }
        r.out << "replay: " << tf(replay(cert)) << '\n';
      };
    });
    std::size_t steps = 0;
    auto* surv = v3->add_subcommand("survival", "Probability that the counter stays positive for n steps");
    surv->add_option("-n", steps)->required();
    surv->callback([&] {
      action = [&] {
        auto m = r.g.measure.empty() ? BernoulliMeasure::uniform(v3lang.alphabet)
                                     : BernoulliMeasure::parse(v3lang.alphabet, r.g.measure);
        r.out << survival_probability(v3lang, steps, m) << '\n';
      };
    });
    auto* f2w = v3->add_subcommand("f2-witness", "Extension leaving pref F2");
    f2w->add_option("word", word)->required();
    f2w->callback([&] { action = [&] { r.out << word_text(f2_nowhere_dense_witness(v3lang, word)) << '\n'; }; });
    std::size_t search_cap = 6;
    auto* f1r = v3->add_subcommand("f1-refute", "Refute E as an Automatic Baire witness for F1");
    f1r->add_option("file", file_a)->required();
    f1r->add_option("--search-cap", search_cap)->capture_default_str();
    f1r->callback([&] {
      action = [&] {
        auto e = r.open_of(file_a);
        auto rep = f1_refute_open(e, r.g.precision, search_cap);
        r.out << "mu(E) = " << rep.measure << '\n';
        r.out << "mu(C(E)) = " << rep.closure_measure << '\n';
        r.out << "t3 in " << rep.t3.str() << " (" << rep.precision << " bits)\n";
        r.out << "mu(E) " << (rep.side == RefutationReport::Side::below ? "<" : ">") << " t3/3 ~ "
              << (rep.t3.midpoint() / Rational(3)).decimal(r.g.digits) << '\n';
        switch (rep.ball_kind) {
        case RefutationReport::Ball::none:
          r.out << "ball: none within " << search_cap << '\n';
          break;
        case RefutationReport::Ball::f1_minus_closure:
          r.out << "ball: " << rep.ball << "·X^w in F1 \\ C(E)\n";
          break;
        case RefutationReport::Ball::e_minus_f1:
          r.out << "ball: " << rep.ball << "·X^w in E \\ F1\n";
          break;
        }
      };
    });
    auto* f1m = v3->add_subcommand("f1-member", "Membership of u(v)^w in V·c·{a,b,c}^w");
    f1m->add_option("word", upword)->required();
    f1m->callback([&] { action = [&] { r.out << tf(f1_member_up(UPWord::parse(upword))) << '\n'; }; });
    auto* f2m = v3->add_subcommand("f2-member", "Membership of u(v)^w in {a,b}^w \\ V·{a,b}^w");
    f2m->add_option("word", upword)->required();
    f2m->callback([&] { action = [&] { r.out << tf(f2_member_up(UPWord::parse(upword))) << '\n'; }; });

    CliResult result;
    try {
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
      if (action)
        action();
    } catch (const CLI::CallForHelp&) {
      r.out << app.help();
    } catch (const CLI::CallForAllHelp&) {
      r.out << app.help("", CLI::AppFormatMode::All);
    } catch (const CLI::ParseError& e) {
      r.err << "error: " << e.what() << '\n';
      result.status = 2;
    } catch (const InputError& e) {
      r.err << "error: " << e.what() << '\n';
      result.status = 2;
    } catch (const InvariantViolation& e) {
      r.err << "invariant violation: " << e.what() << '\n';
      result.status = 3;
    } catch (const std::exception& e) {
      r.err << "internal error: " << e.what() << '\n';
      result.status = 3;
    }
    result.out = r.out.str();
    result.err = r.err.str();
    return result;
  }
}
