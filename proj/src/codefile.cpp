#include "agd/codefile.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace agd {

using nlohmann::json;

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int need_int(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

// Accepts 19, "19", "0x13" or "0b10011".
unsigned parse_poly(const json& v) {
  if (v.is_number_unsigned() || v.is_number_integer()) return v.get<unsigned>();
  if (!v.is_string()) throw ParseError("prim_poly must be an integer or string");
  std::string s = v.get<std::string>();
  try {
    if (s.rfind("0b", 0) == 0) return static_cast<unsigned>(std::stoul(s.substr(2), nullptr, 2));
    return static_cast<unsigned>(std::stoul(s, nullptr, 0));
  } catch (const std::exception&) {
    throw ParseError("bad prim_poly '" + s + "'");
  }
}

}  // namespace

CodeBundle parse_code_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("code spec is not valid JSON: ") + e.what());
  }
  CodeBundle b;
  try {
    const json& jf = need(j, "field");
    const json& jc = need(j, "curve");
    const json& jm = need(j, "code");
    b.name = j.value("name", std::string("unnamed"));
    b.field = {need_int(jf, "w"), parse_poly(need(jf, "prim_poly"))};

    const bool klein = jc.value("klein", false);
    if (klein) {
      b.curve = klein_spec();
      b.curve.a = need_int(jc, "a");
      b.curve.b = need_int(jc, "b");
      b.curve.genus = need_int(jc, "genus");
    } else {
      b.curve.a = need_int(jc, "a");
      b.curve.b = need_int(jc, "b");
      b.curve.e = jc.value("e", kOne);
      b.curve.genus = need_int(jc, "genus");
      for (const json& t : jc.value("chi", json::array())) {
        if (!t.is_array() || t.size() != 3) throw ParseError("chi entries are [n1, n2, log]");
        b.curve.chi.push_back({Mono{t[0].get<int>(), t[1].get<int>()}, t[2].get<int>()});
      }
    }
    b.curve.klein = klein;
    b.curve.name = b.name;
    b.m = need_int(jm, "m");
    if (jm.contains("t")) b.t = need_int(jm, "t");
  } catch (const json::exception& e) {
    throw ParseError(std::string("code spec: ") + e.what());
  }

  try {
    b.F = std::make_shared<Field>(b.field);
    b.C = std::make_shared<Curve>(b.curve, b.F);
    if (b.m < 0) throw std::invalid_argument("m must be non-negative");
    b.code = std::make_shared<Code>(b.C, b.m);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("code spec: ") + e.what());
  }
  b.canonical = j.dump();
  b.hash = fnv1a_hex(b.canonical);
  return b;
}

CodeBundle load_code_spec(const std::string& path) { return parse_code_spec(read_file(path)); }

namespace {

// Strips comments and returns the whitespace-separated integer tokens.
std::vector<long long> tokens(const std::string& text) {
  std::vector<long long> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw ParseError("not an integer: '" + tok + "'");
      }
      if (used != tok.size()) throw ParseError("not an integer: '" + tok + "'");
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

Word parse_word(const std::string& text, const Code& code) {
  auto t = tokens(text);
  if (static_cast<int>(t.size()) != code.n())
    throw ParseError("word has " + std::to_string(t.size()) + " symbols, code length is " + std::to_string(code.n()));
  Word w;
  for (long long v : t) {
    if (v < -1 || v >= code.field().order()) throw ParseError("symbol out of range: " + std::to_string(v));
    w.push_back(static_cast<Elem>(v));
  }
  return w;
}

Word load_word(const std::string& path, const Code& code) { return parse_word(read_file(path), code); }

void write_word(std::ostream& os, const Word& w) {
  for (size_t k = 0; k < w.size(); ++k) os << (k ? " " : "") << w[k];
  os << '\n';
}

ErrorPattern parse_errors(const std::string& text, const Code& code) {
  auto t = tokens(text);
  if (t.size() % 2) throw ParseError("error file needs `index value_log` pairs");
  ErrorPattern e;
  std::set<long long> seen;
  for (size_t k = 0; k < t.size(); k += 2) {
    if (t[k] < 0 || t[k] >= code.n()) throw ParseError("error index out of range: " + std::to_string(t[k]));
    if (t[k + 1] < 0 || t[k + 1] >= code.field().order())
      throw ParseError("error value must be a nonzero log: " + std::to_string(t[k + 1]));
    if (!seen.insert(t[k]).second) throw ParseError("duplicate error index " + std::to_string(t[k]));
    e.locs.push_back(static_cast<int>(t[k]));
    e.vals.push_back(static_cast<Elem>(t[k + 1]));
  }
  return e;
}

ErrorPattern load_errors(const std::string& path, const Code& code) {
  return parse_errors(read_file(path), code);
}

void write_errors(std::ostream& os, const ErrorPattern& e) {
  for (size_t k = 0; k < e.locs.size(); ++k) os << e.locs[k] << ' ' << e.vals[k] << '\n';
}

}  // namespace agd
