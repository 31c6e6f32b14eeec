#include <doctest.h>

#include "unimod/json_io.hpp"
#include "unimod/verify.hpp"

using namespace unimod;

TEST_CASE("big integers serialize as strings") {
  CHECK(to_json(Int(42)) == json(42));
  const Int big("123456789012345678901234567890");
  CHECK(to_json(big) == json("123456789012345678901234567890"));
  CHECK(int_from_json(to_json(big)) == big);
  CHECK(to_json(Rat(1, 2)) == json("1/2"));
  CHECK_THROWS_AS(int_from_json(json("abc")), Error);
}

TEST_CASE("form input forms") {
  const GramForm u = parse_form("U");
  CHECK(form_from_text("U") == u);
  CHECK(form_from_text("[[0,1],[1,0]]") == u);
  CHECK(form_from_text(R"({"dim":2,"gram":[[0,1],[1,0]]})") == u);
  CHECK(form_from_json(to_json(u)) == u);
  CHECK_THROWS_AS(form_from_text(R"({"dim":3,"gram":[[0,1],[1,0]]})"), Error);
  CHECK_THROWS_AS(form_from_text("[[0,1],[1]]"), Error);
}

TEST_CASE("escape trace JSON is self-contained") {
  const EscapeTrace t = escape(parse_form("2<1>+<-1>"), make_vec({0, 0, 1}), 3);
  const json j = to_json(t);
  CHECK(j["steps"].size() == 3);
  CHECK(j["steps"][0]["vector"] == json::array({2, 2, 3}));
  CHECK(form_from_json(j["form"]) == t.form);
  CHECK(j["tracked_index"] == 2);
}

TEST_CASE("verification reports are deterministic") {
  json a = verify_paper("def1.1", 5), b = verify_paper("def1.1", 5);
  CHECK(a["status"] == "pass");
  CHECK(a["certificate"] == b["certificate"]);
  CHECK(a["seed"] == 5);
  CHECK(a["version"] == tool_version());
  const json p = verify_paper("lemma2.5", 2), q = verify_paper("lemma2.5", 2);
  CHECK(p["certificate"] == q["certificate"]);
  CHECK_THROWS_AS(verify_paper("thm9.9", 1), Error);
}
