#include "polyad/json_io.hpp"

#include "polyad/parse.hpp"

namespace polyad {

namespace {

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw Error(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

std::vector<Word> words_from_json(const AlphabetRef& alphabet, const Json& j) {
  if (!j.is_array()) {
    throw Error("expected an array of words");
  }
  std::vector<Word> out;
  out.reserve(j.size());
  for (const Json& item : j) {
    out.push_back(word_from_json(alphabet, item));
  }
  return out;
}

Json words_to_json(const std::vector<Word>& words) {
  Json out = Json::array();
  for (const Word& w : words) {
    out.push_back(word_to_json(w));
  }
  return out;
}

}  // namespace

Json alphabet_to_json(const AlphabetRef& alphabet) {
  Json out = Json::array();
  for (int i = 0; i < alphabet->size(); ++i) {
    out.push_back(alphabet->name(i));
  }
  return out;
}

AlphabetRef alphabet_from_json(const Json& j) {
  if (!j.is_array()) {
    throw Error("alphabet must be an array of generator names");
  }
  std::vector<std::string> names;
  names.reserve(j.size());
  for (const Json& item : j) {
    if (!item.is_string()) {
      throw Error("generator names must be strings");
    }
    names.push_back(item.get<std::string>());
  }
  return make_alphabet(std::move(names));
}

Json word_to_json(const Word& w) { return render(w); }

Word word_from_json(const AlphabetRef& alphabet, const Json& j) {
  if (!j.is_string()) {
    throw Error("words must be strings");
  }
  return parse_word(alphabet, j.get<std::string>());
}

Json word_group_to_json(const WordGroup& g) {
  Json out;
  out["alphabet"] = alphabet_to_json(g.alphabet());
  out["unit"] = word_to_json(g.unit());
  out["carrier_modulus"] = g.carrier_modulus();
  return out;
}

WordGroup word_group_from_json(const Json& j) {
  AlphabetRef alphabet = alphabet_from_json(field(j, "alphabet"));
  Word unit = word_from_json(alphabet, field(j, "unit"));
  long modulus = field(j, "carrier_modulus").get<long>();
  return WordGroup(alphabet, std::move(unit), modulus);
}

Json triple_to_json(const HgTriple& t) {
  Json out;
  out["n"] = t.arity();
  out["alphabet"] = alphabet_to_json(t.base().alphabet());
  out["unit"] = word_to_json(t.base().unit());
  out["carrier_modulus"] = t.base().carrier_modulus();
  out["theta"] = Json{{"images", words_to_json(t.theta().images())}};
  out["theta_inv"] = Json{{"images", words_to_json(t.theta_inv().images())}};
  out["b"] = word_to_json(t.b());
  return out;
}

HgTriple triple_from_json(const Json& j) {
  int n = field(j, "n").get<int>();
  AlphabetRef alphabet = alphabet_from_json(field(j, "alphabet"));
  Word unit = word_from_json(alphabet, field(j, "unit"));
  long modulus = field(j, "carrier_modulus").get<long>();
  WordGroup base(alphabet, std::move(unit), modulus);
  Homomorphism theta(
      alphabet, alphabet,
      words_from_json(alphabet, field(field(j, "theta"), "images")));
  Homomorphism theta_inv(
      alphabet, alphabet,
      words_from_json(alphabet, field(field(j, "theta_inv"), "images")));
  Word b = word_from_json(alphabet, field(j, "b"));
  return HgTriple(std::move(base), n, std::move(theta), std::move(theta_inv),
                  std::move(b));
}

Json pipeline_to_json(const BasisPipeline& p) {
  Json out;
  out["kernel_basis"] = words_to_json(p.kernel_basis);
  out["shifted_basis"] = words_to_json(p.shifted_basis);
  out["orbit_basis"] = words_to_json(p.orbit_basis);
  return out;
}

Json extracted_to_json(const ExtractedHg& e) {
  Json out;
  out["triple"] = triple_to_json(e.triple);
  out["pipeline"] = pipeline_to_json(e.pipeline);
  return out;
}

Json table_to_json(const FiniteNaryTable& t) {
  Json out;
  out["q"] = t.q();
  out["n"] = t.arity();
  out["table"] = t.table();
  return out;
}

FiniteNaryTable table_from_json(const Json& j) {
  int q = field(j, "q").get<int>();
  int n = field(j, "n").get<int>();
  std::vector<int> table = field(j, "table").get<std::vector<int>>();
  return FiniteNaryTable(q, n, std::move(table));
}

Json graph_to_json(const SubgroupGraph& g) {
  Json out;
  out["vertices"] = g.vertex_count();
  out["base"] = g.base();
  out["rank"] = g.rank();
  out["complete"] = g.complete();
  if (auto index = g.index()) {
    out["index"] = *index;
  } else {
    out["index"] = nullptr;
  }
  Json edges = Json::array();
  const AlphabetRef& alphabet = g.alphabet();
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int x = 0; x < alphabet->size(); ++x) {
      int w = g.out(v, x);
      if (w >= 0) {
        Json e;
        e["from"] = v;
        e["label"] = alphabet->name(x);
        e["to"] = w;
        edges.push_back(std::move(e));
      }
    }
  }
  out["edges"] = std::move(edges);
  return out;
}

Json certificate_to_json(const BasisCertificate& c) {
  Json out;
  out["verdict"] = to_string(c.verdict);
  out["rank"] = c.rank;
  if (c.index) {
    out["index"] = *c.index;
  } else {
    out["index"] = nullptr;
  }
  out["generators"] = words_to_json(c.generators);
  out["reason"] = c.reason;
  return out;
}

Json report_to_json(const FreenessReport& r) {
  Json out;
  out["verdict"] = to_string(r.verdict);
  out["k"] = r.k;
  out["n"] = r.n;
  if (r.s) {
    out["s"] = *r.s;
  } else {
    out["s"] = nullptr;
  }
  out["witnesses"] = words_to_json(r.witnesses);
  if (r.certificate) {
    out["certificate"] = certificate_to_json(*r.certificate);
  } else {
    out["certificate"] = nullptr;
  }
  out["detail"] = r.detail;
  out["length_bound"] = r.length_bound;
  out["tuples_tried"] = r.tuples_tried;
  return out;
}

}  // namespace polyad
