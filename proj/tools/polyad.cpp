// Command line front-end for the polyad library.
//
// Every subcommand maps to one library operation. Words are read in the
// grammar of parse.hpp ("u v1^-2", "1" for the identity); alphabets are
// comma-separated generator lists ("u,v1"). When --alphabet is omitted the
// alphabet is inferred from the input words in order of first appearance,
// so explicit --alphabet is recommended whenever generator order matters
// (the first generator is the distinguished u of the n-ary constructions).
//
// stdout carries only payloads; diagnostics go to stderr. Exit codes:
// 0 success or verdict produced, 1 domain error, 2 usage or syntax error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyad/free_polyadic.hpp"
#include "polyad/freeness.hpp"
#include "polyad/json_io.hpp"
#include "polyad/parse.hpp"
#include "polyad/retract.hpp"

namespace {

using namespace polyad;

// Inconsistent flag combinations caught after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    out.push_back(item);
  }
  return out;
}

AlphabetRef alphabet_for(const std::string& flag,
                         const std::vector<std::string>& words) {
  if (!flag.empty()) {
    return make_alphabet(split_csv(flag));
  }
  std::string joined;
  for (const std::string& w : words) {
    joined += w;
    joined += ' ';
  }
  return infer_alphabet(joined);
}

std::vector<Word> parse_words(const AlphabetRef& alphabet,
                              const std::vector<std::string>& texts) {
  std::vector<Word> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) {
    out.push_back(parse_word(alphabet, t));
  }
  return out;
}

Json read_json_input(const std::string& path) {
  if (path == "-") {
    return Json::parse(std::cin);
  }
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open '" + path + "'");
  }
  return Json::parse(in);
}

// Triple files may be bare triples or extract-hg payloads with a "triple"
// member.
HgTriple read_triple(const std::string& path) {
  Json j = read_json_input(path);
  if (j.contains("triple")) {
    return triple_from_json(j["triple"]);
  }
  return triple_from_json(j);
}

void emit(const Json& payload) { std::cout << payload.dump(2) << "\n"; }

std::string join_words(const std::vector<Word>& words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) {
      out += " | ";
    }
    out += render(words[i]);
  }
  return out;
}

struct Options {
  bool json = false;
  int n = 0;
  std::string alphabet;
  std::string target;
  std::string images;
  std::string at;
  std::string b = "1";
  std::string triple_path;
  std::string table_path;
  long mod = 0;
  std::string residues;
  bool dot = false;
  bool extracted = false;
  bool derived = false;
  long bound = 2;
  long max_tuples = 100000;
  std::vector<std::string> witnesses;
  std::vector<std::string> words;
};

void cmd_reduce(const Options& o) {
  AlphabetRef alphabet = alphabet_for(o.alphabet, o.words);
  std::vector<Word> words = parse_words(alphabet, o.words);
  if (o.json) {
    Json out = Json::array();
    for (const Word& w : words) {
      out.push_back(word_to_json(w));
    }
    emit(out);
    return;
  }
  for (const Word& w : words) {
    std::cout << render(w) << "\n";
  }
}

void cmd_ht(const Options& o) {
  AlphabetRef alphabet = alphabet_for(o.alphabet, o.words);
  std::vector<Word> words = parse_words(alphabet, o.words);
  if (o.json) {
    Json out = Json::array();
    for (const Word& w : words) {
      out.push_back(w.ht().str());
    }
    emit(out);
    return;
  }
  for (const Word& w : words) {
    std::cout << w.ht().str() << "\n";
  }
}

void cmd_nary_eval(const Options& o) {
  Word result = [&] {
    if (!o.triple_path.empty()) {
      if (o.n != 0) {
        throw UsageError("--triple and --n are mutually exclusive");
      }
      HgTriple t = read_triple(o.triple_path);
      return t.eval(parse_words(t.base().alphabet(), o.words));
    }
    if (o.n == 0) {
      throw UsageError("one of --n or --triple is required");
    }
    AlphabetRef alphabet = alphabet_for(o.alphabet, o.words);
    FreePolyadicGroup g(o.n, alphabet);
    return g.f(parse_words(alphabet, o.words));
  }();
  if (o.json) {
    emit(word_to_json(result));
  } else {
    std::cout << render(result) << "\n";
  }
}

void cmd_skew(const Options& o) {
  if (o.words.size() != 1) {
    throw UsageError("skew takes exactly one word");
  }
  Word result = [&] {
    if (!o.triple_path.empty()) {
      if (o.n != 0) {
        throw UsageError("--triple and --n are mutually exclusive");
      }
      HgTriple t = read_triple(o.triple_path);
      return t.skew(parse_word(t.base().alphabet(), o.words[0]));
    }
    if (o.n == 0) {
      throw UsageError("one of --n or --triple is required");
    }
    AlphabetRef alphabet = alphabet_for(o.alphabet, o.words);
    FreePolyadicGroup g(o.n, alphabet);
    return g.skew(parse_word(alphabet, o.words[0]));
  }();
  if (o.json) {
    emit(word_to_json(result));
  } else {
    std::cout << render(result) << "\n";
  }
}

void cmd_retract(const Options& o) {
  if (o.at.empty()) {
    throw UsageError("--at is required");
  }
  if (!o.table_path.empty()) {
    FiniteNaryTable t = table_from_json(read_json_input(o.table_path));
    int a = std::stoi(o.at);
    FiniteRetract r = retract_table(t, a);
    if (o.json) {
      Json out;
      out["q"] = r.q;
      out["at"] = a;
      out["identity"] = r.identity;
      out["mul"] = r.mul;
      out["inverse"] = r.inverse;
      emit(out);
      return;
    }
    std::cout << "identity: " << r.identity << "\n";
    for (int x = 0; x < r.q; ++x) {
      for (int y = 0; y < r.q; ++y) {
        std::cout << r.mul[x * r.q + y] << (y + 1 < r.q ? " " : "\n");
      }
    }
    return;
  }
  if (o.n == 0) {
    throw UsageError("one of --n or --table is required");
  }
  if (o.words.size() != 2) {
    throw UsageError("retract takes exactly two words");
  }
  std::vector<std::string> all = o.words;
  all.push_back(o.at);
  AlphabetRef alphabet = alphabet_for(o.alphabet, all);
  FreePolyadicGroup g(o.n, alphabet);
  Retract<FreePolyadicGroup> r(g, parse_word(alphabet, o.at));
  Word product =
      r.mul(parse_word(alphabet, o.words[0]), parse_word(alphabet, o.words[1]));
  if (o.json) {
    Json out;
    out["at"] = render(r.at());
    out["identity"] = word_to_json(r.identity());
    out["product"] = word_to_json(product);
    emit(out);
    return;
  }
  std::cout << render(product) << "\n";
}

void cmd_schreier_basis(const Options& o) {
  if (o.alphabet.empty()) {
    throw UsageError("--alphabet is required");
  }
  AlphabetRef alphabet = make_alphabet(split_csv(o.alphabet));
  CosetMap map = [&] {
    if (o.n != 0) {
      if (o.mod != 0) {
        throw UsageError("--n and --mod are mutually exclusive");
      }
      return CosetMap::canonical(alphabet, o.n);
    }
    if (o.mod == 0) {
      throw UsageError("one of --n or --mod is required");
    }
    std::vector<long> residues;
    if (o.residues.empty()) {
      residues.assign(alphabet->size(), 1);
    } else {
      for (const std::string& r : split_csv(o.residues)) {
        residues.push_back(std::stol(r));
      }
    }
    return CosetMap(alphabet, o.mod, std::move(residues));
  }();
  Transversal reps = schreier_transversal(map);
  std::vector<Word> basis = schreier_basis(map, reps);
  if (o.json) {
    Json out;
    Json t = Json::array();
    for (const Word& w : reps.reps) {
      t.push_back(word_to_json(w));
    }
    out["transversal"] = std::move(t);
    Json b = Json::array();
    for (const Word& w : basis) {
      b.push_back(word_to_json(w));
    }
    out["basis"] = std::move(b);
    emit(out);
    return;
  }
  for (const Word& w : basis) {
    std::cout << render(w) << "\n";
  }
}

void cmd_fold(const Options& o) {
  AlphabetRef alphabet = alphabet_for(o.alphabet, o.words);
  SubgroupGraph g = SubgroupGraph::fold(alphabet, parse_words(alphabet, o.words));
  if (o.dot) {
    std::cout << g.to_dot();
    return;
  }
  if (o.json) {
    emit(graph_to_json(g));
    return;
  }
  std::cout << "vertices: " << g.vertex_count() << "\n";
  std::cout << "rank: " << g.rank() << "\n";
  if (auto index = g.index()) {
    std::cout << "index: " << *index << "\n";
  } else {
    std::cout << "index: infinite\n";
  }
}

void cmd_is_basis(const Options& o) {
  AlphabetRef alphabet = alphabet_for(o.alphabet, o.words);
  BasisCertificate cert =
      is_basis_of_whole_group(alphabet, parse_words(alphabet, o.words));
  if (o.json) {
    emit(certificate_to_json(cert));
    return;
  }
  std::cout << to_string(cert.verdict) << "\n";
  if (!cert.reason.empty()) {
    std::cout << cert.reason << "\n";
  }
}

void cmd_extract_hg(const Options& o) {
  if (o.n == 0 || o.alphabet.empty()) {
    throw UsageError("--n and --alphabet are required");
  }
  FreePolyadicGroup g(o.n, make_alphabet(split_csv(o.alphabet)));
  ExtractedHg e = g.extract_hg();
  if (o.json) {
    emit(extracted_to_json(e));
    return;
  }
  std::cout << "n: " << e.triple.arity() << "\n";
  std::cout << "unit: " << render(e.triple.base().unit()) << "\n";
  std::cout << "b: " << render(e.triple.b()) << "\n";
  for (int i = 0; i < g.alphabet()->size(); ++i) {
    std::cout << "theta(" << g.alphabet()->name(i)
              << ") = " << render(e.triple.theta().image(i)) << "\n";
  }
  std::cout << "orbit basis: " << join_words(e.pipeline.orbit_basis) << "\n";
}

void cmd_basis_pipeline(const Options& o) {
  if (o.n == 0 || o.alphabet.empty()) {
    throw UsageError("--n and --alphabet are required");
  }
  FreePolyadicGroup g(o.n, make_alphabet(split_csv(o.alphabet)));
  BasisPipeline p = g.basis_pipeline();
  if (o.json) {
    emit(pipeline_to_json(p));
    return;
  }
  std::cout << "kernel_basis: " << join_words(p.kernel_basis) << "\n";
  std::cout << "shifted_basis: " << join_words(p.shifted_basis) << "\n";
  std::cout << "orbit_basis: " << join_words(p.orbit_basis) << "\n";
}

void cmd_cover_extend(const Options& o) {
  if (o.n == 0 || o.alphabet.empty() || o.target.empty() || o.images.empty()) {
    throw UsageError("--n, --alphabet, --target and --images are required");
  }
  AlphabetRef source = make_alphabet(split_csv(o.alphabet));
  AlphabetRef target = make_alphabet(split_csv(o.target));
  FreePolyadicGroup g(o.n, source);
  Homomorphism h =
      g.cover_extend(target, parse_words(target, split_csv(o.images)));
  std::vector<Word> mapped;
  for (const Word& w : parse_words(source, o.words)) {
    mapped.push_back(apply(h, w));
  }
  if (o.json) {
    Json out;
    Json images = Json::array();
    for (const Word& w : h.images()) {
      images.push_back(word_to_json(w));
    }
    out["images"] = std::move(images);
    Json m = Json::array();
    for (const Word& w : mapped) {
      m.push_back(word_to_json(w));
    }
    out["mapped"] = std::move(m);
    emit(out);
    return;
  }
  for (int i = 0; i < source->size(); ++i) {
    std::cout << source->name(i) << " -> " << render(h.image(i)) << "\n";
  }
  for (const Word& w : mapped) {
    std::cout << render(w) << "\n";
  }
}

void cmd_verify_table(const Options& o) {
  if (o.table_path.empty()) {
    throw UsageError("--table is required");
  }
  FiniteNaryTable t = table_from_json(read_json_input(o.table_path));
  AxiomReport report = t.verify_axioms();
  if (o.json) {
    Json out;
    out["q"] = t.q();
    out["n"] = t.arity();
    out["ok"] = report.ok;
    if (report.failure) {
      out["failure"] = report.failure->describe();
    } else {
      out["failure"] = nullptr;
    }
    emit(out);
    return;
  }
  if (report.ok) {
    std::cout << "ok\n";
  } else {
    std::cout << report.failure->describe() << "\n";
  }
}

void cmd_decide_free(const Options& o) {
  int sources = (!o.triple_path.empty()) + o.extracted + o.derived;
  if (sources != 1) {
    throw UsageError("exactly one of --triple, --extracted, --derived is required");
  }
  std::optional<HgTriple> triple;
  if (!o.triple_path.empty()) {
    triple = read_triple(o.triple_path);
  } else {
    if (o.n == 0 || o.alphabet.empty()) {
      throw UsageError("--extracted/--derived need --n and --alphabet");
    }
    AlphabetRef alphabet = make_alphabet(split_csv(o.alphabet));
    if (o.extracted) {
      triple = FreePolyadicGroup(o.n, alphabet).extract_hg().triple;
    } else {
      triple = HgTriple::derived(alphabet, o.n, parse_word(alphabet, o.b));
    }
  }
  if (o.n != 0 && o.n != triple->arity()) {
    throw UsageError("--n disagrees with the triple's arity");
  }
  FreenessQuery q{*triple, std::nullopt, o.bound, o.max_tuples};
  if (!o.witnesses.empty()) {
    q.candidates = parse_words(triple->base().alphabet(), o.witnesses);
  }
  FreenessReport report = decide(q);
  if (o.json) {
    emit(report_to_json(report));
    return;
  }
  std::cout << to_string(report.verdict) << "\n";
  if (report.s) {
    std::cout << "s: " << *report.s << " k: " << report.k << "\n";
  }
  if (!report.witnesses.empty()) {
    std::cout << "witnesses: " << join_words(report.witnesses) << "\n";
  }
  if (!report.detail.empty()) {
    std::cout << report.detail << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"exact calculator for n-ary groups over free-group words"};
  app.require_subcommand(1);

  auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", o.json, "emit a JSON payload");
  };
  auto add_alphabet = [&](CLI::App* cmd) {
    cmd->add_option("--alphabet", o.alphabet,
                    "comma-separated generators; inferred from the words "
                    "when omitted");
  };
  auto add_words = [&](CLI::App* cmd, const char* label) {
    cmd->add_option("words", o.words, label);
  };

  CLI::App* reduce = app.add_subcommand("reduce", "freely reduce words");
  add_json(reduce);
  add_alphabet(reduce);
  add_words(reduce, "words to reduce");

  CLI::App* ht_cmd = app.add_subcommand("ht", "exponent sums of words");
  add_json(ht_cmd);
  add_alphabet(ht_cmd);
  add_words(ht_cmd, "words to measure");

  CLI::App* nary = app.add_subcommand(
      "nary-eval", "n-ary product in a free polyadic group or a triple");
  add_json(nary);
  add_alphabet(nary);
  nary->add_option("--n", o.n, "arity of the free polyadic group");
  nary->add_option("--triple", o.triple_path,
                   "triple JSON file ('-' for stdin)");
  add_words(nary, "the n arguments");

  CLI::App* skew = app.add_subcommand("skew", "skew element");
  add_json(skew);
  add_alphabet(skew);
  skew->add_option("--n", o.n, "arity of the free polyadic group");
  skew->add_option("--triple", o.triple_path,
                   "triple JSON file ('-' for stdin)");
  add_words(skew, "the element");

  CLI::App* retract = app.add_subcommand(
      "retract", "binary retract product at an element");
  add_json(retract);
  add_alphabet(retract);
  retract->add_option("--n", o.n, "arity of the free polyadic group");
  retract->add_option("--table", o.table_path,
                      "finite table JSON file ('-' for stdin)");
  retract->add_option("--at", o.at, "the retract element");
  add_words(retract, "the two factors");

  CLI::App* schreier = app.add_subcommand(
      "schreier-basis", "basis of a height-residue kernel");
  add_json(schreier);
  add_alphabet(schreier);
  schreier->add_option("--n", o.n, "arity (kernel of ht mod n-1)");
  schreier->add_option("--mod", o.mod, "explicit modulus");
  schreier->add_option("--residues", o.residues,
                       "comma-separated generator residues (default all 1)");

  CLI::App* fold = app.add_subcommand("fold", "fold a subgroup graph");
  add_json(fold);
  add_alphabet(fold);
  fold->add_flag("--dot", o.dot, "emit graphviz instead of a summary");
  add_words(fold, "subgroup generators");

  CLI::App* is_basis = app.add_subcommand(
      "is-basis", "certify a basis of the whole free group");
  add_json(is_basis);
  add_alphabet(is_basis);
  add_words(is_basis, "candidate basis");

  CLI::App* extract = app.add_subcommand(
      "extract-hg", "derived decomposition of a free polyadic group");
  add_json(extract);
  add_alphabet(extract);
  extract->add_option("--n", o.n, "arity");

  CLI::App* pipeline = app.add_subcommand(
      "basis-pipeline", "kernel basis, its shift, and the orbit form");
  add_json(pipeline);
  add_alphabet(pipeline);
  pipeline->add_option("--n", o.n, "arity");

  CLI::App* cover = app.add_subcommand(
      "cover-extend", "extend a generator map over the cover");
  add_json(cover);
  add_alphabet(cover);
  cover->add_option("--n", o.n, "arity");
  cover->add_option("--target", o.target, "comma-separated target generators");
  cover->add_option("--images", o.images,
                    "comma-separated image words, one per generator");
  add_words(cover, "words to map (optional)");

  CLI::App* verify = app.add_subcommand(
      "verify-table", "check the n-ary group axioms on a finite table");
  add_json(verify);
  verify->add_option("--table", o.table_path,
                     "finite table JSON file ('-' for stdin)");

  CLI::App* decide_cmd = app.add_subcommand(
      "decide-free", "decide freeness of a derived structure");
  add_json(decide_cmd);
  add_alphabet(decide_cmd);
  decide_cmd->add_option("--triple", o.triple_path,
                         "triple JSON file ('-' for stdin)");
  decide_cmd->add_flag("--extracted", o.extracted,
                       "use the extracted triple of the free polyadic group "
                       "on --alphabet");
  decide_cmd->add_flag("--derived", o.derived,
                       "use theta=id with --b over the plain free group on "
                       "--alphabet");
  decide_cmd->add_option("--n", o.n, "arity (checked against the triple)");
  decide_cmd->add_option("--b", o.b, "the b element for --derived");
  decide_cmd->add_option("--bound", o.bound, "witness word length bound");
  decide_cmd->add_option("--max-tuples", o.max_tuples,
                         "cap on witness tuples tried");
  decide_cmd->add_option("--witness", o.witnesses,
                         "candidate witness word (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (reduce->parsed()) {
      cmd_reduce(o);
    } else if (ht_cmd->parsed()) {
      cmd_ht(o);
    } else if (nary->parsed()) {
      cmd_nary_eval(o);
    } else if (skew->parsed()) {
      cmd_skew(o);
    } else if (retract->parsed()) {
      cmd_retract(o);
    } else if (schreier->parsed()) {
      cmd_schreier_basis(o);
    } else if (fold->parsed()) {
      cmd_fold(o);
    } else if (is_basis->parsed()) {
      cmd_is_basis(o);
    } else if (extract->parsed()) {
      cmd_extract_hg(o);
    } else if (pipeline->parsed()) {
      cmd_basis_pipeline(o);
    } else if (cover->parsed()) {
      cmd_cover_extend(o);
    } else if (verify->parsed()) {
      cmd_verify_table(o);
    } else if (decide_cmd->parsed()) {
      cmd_decide_free(o);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what()
              << "\n";
    return 2;
  } catch (const Json::parse_error& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
