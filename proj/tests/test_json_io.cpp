#include <doctest.h>

#include <vector>

#include "polyad/free_polyadic.hpp"
#include "polyad/freeness.hpp"
#include "polyad/json_io.hpp"
#include "polyad/parse.hpp"
#include "support.hpp"

using namespace polyad;
using test::make_rng;
using test::random_word;

TEST_CASE("alphabet and word serialization") {
  AlphabetRef a = standard_alphabet(2);
  Json j = alphabet_to_json(a);
  CHECK(j.dump() == R"(["u","v1"])");
  CHECK(*alphabet_from_json(j) == *a);
  CHECK_THROWS_AS(alphabet_from_json(Json::parse("{}")), Error);
  CHECK_THROWS_AS(alphabet_from_json(Json::parse("[1,2]")), Error);

  Word w = parse_word(a, "u v1^-2 u^3");
  CHECK(word_to_json(w) == Json("u v1^-2 u^3"));
  CHECK(word_from_json(a, word_to_json(w)) == w);
  CHECK(word_from_json(a, Json("1")).is_identity());
  CHECK_THROWS_AS(word_from_json(a, Json(7)), Error);
  CHECK_THROWS_AS(word_from_json(a, Json("zz")), ParseError);

  auto rng = make_rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    Word x = random_word(rng, a, 16);
    CHECK(word_from_json(a, word_to_json(x)) == x);
  }
}

TEST_CASE("word group serialization") {
  AlphabetRef a = standard_alphabet(2);
  WordGroup circle(a, Word::generator(a, 0), 2);
  Json j = word_group_to_json(circle);
  CHECK(j.dump() ==
        R"({"alphabet":["u","v1"],"unit":"u","carrier_modulus":2})");
  WordGroup back = word_group_from_json(j);
  CHECK(back == circle);
  CHECK(word_group_from_json(word_group_to_json(WordGroup::plain(a))) ==
        WordGroup::plain(a));
  CHECK_THROWS_WITH_AS(word_group_from_json(Json::parse(R"({"unit":"u"})")),
                       doctest::Contains("alphabet"), Error);
}

TEST_CASE("triple serialization round trip") {
  AlphabetRef a = standard_alphabet(2);
  HgTriple triple = FreePolyadicGroup(3, a).extract_hg().triple;
  Json j = triple_to_json(triple);

  Json expected = Json::parse(R"({
    "n": 3,
    "alphabet": ["u", "v1"],
    "unit": "u",
    "carrier_modulus": 2,
    "theta": {"images": ["u", "u v1 u^-1"]},
    "theta_inv": {"images": ["u", "u^-1 v1 u"]},
    "b": "u^3"
  })");
  CHECK(j == expected);
  CHECK(j.dump().find(R"("n":3,"alphabet")") != std::string::npos);

  HgTriple back = triple_from_json(j);
  CHECK(back.arity() == 3);
  CHECK(back.base() == triple.base());
  CHECK(back.b() == triple.b());
  CHECK(back.theta() == triple.theta());
  CHECK(back.theta_inv() == triple.theta_inv());

  Json broken = expected;
  broken["b"] = "v1";
  CHECK_THROWS_WITH_AS(triple_from_json(broken), "theta does not fix b",
                       Error);
  broken = expected;
  broken.erase("theta_inv");
  CHECK_THROWS_WITH_AS(triple_from_json(broken),
                       doctest::Contains("theta_inv"), Error);

  HgTriple shift = test::twisted_shift_triple(4, 2);
  HgTriple shift_back = triple_from_json(triple_to_json(shift));
  CHECK(shift_back.theta() == shift.theta());
  CHECK(shift_back.b() == shift.b());
  CHECK(shift_back.base() == shift.base());
}

TEST_CASE("pipeline and extracted serialization") {
  AlphabetRef a = standard_alphabet(2);
  ExtractedHg ex = FreePolyadicGroup(3, a).extract_hg();
  Json j = extracted_to_json(ex);
  CHECK(j["pipeline"]["kernel_basis"] ==
        Json::parse(R"(["v1 u^-1","u^2","u v1"])"));
  CHECK(j["pipeline"]["shifted_basis"] ==
        Json::parse(R"(["v1","u^3","u v1 u"])"));
  CHECK(j["pipeline"]["orbit_basis"] ==
        Json::parse(R"(["v1","u^3","u v1 u^-1"])"));
  CHECK(j["triple"] == triple_to_json(ex.triple));
}

TEST_CASE("finite table serialization") {
  FiniteNaryTable t = cyclic_derived_table(4, 3, 1);
  Json j = table_to_json(t);
  CHECK(j["q"] == 4);
  CHECK(j["n"] == 3);
  CHECK(j["table"].size() == 64);
  CHECK(table_from_json(j) == t);
  Json bad = j;
  bad["table"][0] = 9;
  CHECK_THROWS_AS(table_from_json(bad), Error);
}

TEST_CASE("graph serialization") {
  AlphabetRef a = standard_alphabet(2);
  SubgroupGraph g = SubgroupGraph::fold(
      a, test::parse_all(a, {"u^2", "v1 u^-1", "u v1 u^-2"}));
  Json j = graph_to_json(g);
  CHECK(j["vertices"] == 2);
  CHECK(j["base"] == 0);
  CHECK(j["rank"] == 3);
  CHECK(j["complete"] == true);
  CHECK(j["index"] == 2);
  CHECK(j["edges"].size() == 4);
  for (const Json& e : j["edges"]) {
    CHECK(e.contains("from"));
    CHECK(e.contains("label"));
    CHECK(e.contains("to"));
  }

  Json partial = graph_to_json(
      SubgroupGraph::fold(a, test::parse_all(a, {"u^2", "v1"})));
  CHECK(partial["complete"] == false);
  CHECK(partial["index"].is_null());
}

TEST_CASE("certificate and report serialization") {
  AlphabetRef a = standard_alphabet(2);
  HgTriple triple = FreePolyadicGroup(3, a).extract_hg().triple;
  FreenessQuery q{triple, std::nullopt, 2, 100000};
  FreenessReport report = decide(q);
  Json j = report_to_json(report);
  CHECK(j["verdict"] == "free-with-witness");
  CHECK(j["k"] == 3);
  CHECK(j["n"] == 3);
  CHECK(j["s"] == 2);
  CHECK(j["witnesses"] == Json::parse(R"(["v1"])"));
  CHECK(j["certificate"]["verdict"] == "is-basis");
  CHECK(j["certificate"]["rank"] == 3);
  CHECK(j["certificate"]["index"] == 2);
  CHECK(j["certificate"]["generators"] ==
        Json::parse(R"(["u^3","v1","u v1 u^-1"])"));
  CHECK(j["tuples_tried"] == 3);
  CHECK(j["length_bound"] == 2);

  FreenessReport blocked =
      decide(FreenessQuery{HgTriple::derived(a, 3, Word::identity(a)),
                           std::nullopt, 2, 100000});
  Json jb = report_to_json(blocked);
  CHECK(jb["verdict"] == "not-free-rank-obstruction");
  CHECK(jb["s"].is_null());
  CHECK(jb["certificate"].is_null());
  CHECK(jb["witnesses"] == Json::array());

  BasisCertificate infinite =
      is_basis_of_whole_group(a, test::parse_all(a, {"u^2", "v1"}));
  Json jc = certificate_to_json(infinite);
  CHECK(jc["verdict"] == "not-generating");
  CHECK(jc["index"].is_null());
  CHECK(jc["rank"] == 2);
  CHECK(jc["generators"] == Json::parse(R"(["u^2","v1"])"));
}
