#include "agd/codefile.hpp"

#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"

using namespace agd;

namespace {

const char* kElliptic = R"({
  "name": "e", "field": {"w": 4, "prim_poly": "0b10011"},
  "curve": {"a": 2, "b": 3, "e": 0, "chi": [[0,1,0],[1,0,0]], "genus": 1},
  "code": {"m": 8}
})";

}  // namespace

TEST_CASE("bundled presets parse to the worked codes") {
  auto e = fx::preset("elliptic_gf16");
  CHECK(e.code->n() == 24);
  CHECK(e.t == 3);
  auto k = fx::preset("klein_gf8");
  CHECK(k.C->klein());
  CHECK(k.code->n() == 23);
  CHECK(k.code->m() == 15);
  auto h = fx::preset("hermitian_gf16");
  CHECK(h.code->n() == 64);
  CHECK(h.code->m() == 24);
  CHECK(h.hash.size() == 16);
  CHECK(e.hash != k.hash);
}

TEST_CASE("hash ignores whitespace and key order") {
  auto a = parse_code_spec(kElliptic);
  auto b = parse_code_spec(
      R"({"code":{"m":8},"curve":{"genus":1,"chi":[[0,1,0],[1,0,0]],"e":0,"b":3,"a":2},)"
      R"("field":{"prim_poly":"0b10011","w":4},"name":"e"})");
  CHECK(a.hash == b.hash);
  CHECK(a.hash == fnv1a_hex(a.canonical));
  auto c = parse_code_spec(R"({"name":"e","field":{"w":4,"prim_poly":19},"curve":{"a":2,"b":3,"e":0,)"
                           R"("chi":[[0,1,0],[1,0,0]],"genus":1},"code":{"m":9}})");
  CHECK(a.hash != c.hash);
}

TEST_CASE("fnv1a reference values") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("polynomial notations agree") {
  for (const char* p : {"19", "\"19\"", "\"0x13\"", "\"0b10011\""}) {
    std::string s = std::string(R"({"field":{"w":4,"prim_poly":)") + p +
                    R"(},"curve":{"a":2,"b":3,"chi":[[0,1,0],[1,0,0]],"genus":1},"code":{"m":8}})";
    CHECK(parse_code_spec(s).field.prim_poly == 19u);
  }
}

TEST_CASE("malformed specs raise ParseError") {
  CHECK_THROWS_AS(parse_code_spec("{"), ParseError);
  CHECK_THROWS_AS(parse_code_spec("{}"), ParseError);
  CHECK_THROWS_AS(parse_code_spec(R"({"field":{"w":4,"prim_poly":"0b1x"},"curve":{},"code":{"m":8}})"),
                  ParseError);
  // Valid JSON, invalid code: gcd(a, b) != 1.
  CHECK_THROWS_AS(parse_code_spec(R"({"field":{"w":4,"prim_poly":19},"curve":{"a":2,"b":4,"genus":1},)"
                                  R"("code":{"m":8}})"),
                  ParseError);
  CHECK_THROWS_AS(parse_code_spec(R"({"field":{"w":4,"prim_poly":19},"curve":{"a":2,"b":3,"genus":1,)"
                                  R"("chi":[[0,1,0],[1,0,0]]},"code":{"m":-1}})"),
                  ParseError);
  CHECK_THROWS_AS(load_code_spec("/nonexistent/spec.json"), ParseError);
}

TEST_CASE("words and errors round-trip through text") {
  auto b = fx::preset("elliptic_gf16");
  const Code& code = *b.code;
  Word w = load_word(fx::preset_path("elliptic_gf16", ".received"), code);
  std::ostringstream os;
  write_word(os, w);
  CHECK(parse_word(os.str(), code) == w);
  CHECK(parse_word("# header\n" + os.str() + "  # trailing\n", code) == w);

  ErrorPattern e{{4, 12, 23}, {6, 8, 11}};
  std::ostringstream es;
  write_errors(es, e);
  ErrorPattern back = parse_errors(es.str(), code);
  CHECK(back.locs == e.locs);
  CHECK(back.vals == e.vals);
}

TEST_CASE("bad words and error files raise ParseError") {
  auto b = fx::preset("elliptic_gf16");
  const Code& code = *b.code;
  CHECK_THROWS_AS(parse_word("1 2 3", code), ParseError);
  std::string w = "15";  // GF(16) logs stop at 14
  for (int k = 1; k < code.n(); ++k) w += " -1";
  CHECK_THROWS_AS(parse_word(w, code), ParseError);
  CHECK_THROWS_AS(parse_word("x", code), ParseError);
  CHECK_THROWS_AS(parse_errors("1", code), ParseError);
  CHECK_THROWS_AS(parse_errors("1 -1", code), ParseError);
  CHECK_THROWS_AS(parse_errors("1 2 1 3", code), ParseError);
  CHECK_THROWS_AS(parse_errors("24 2", code), ParseError);
  CHECK_THROWS_AS(parse_errors("3 1.5", code), ParseError);
}
