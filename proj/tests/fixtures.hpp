#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "agd/codefile.hpp"

namespace fx {

inline agd::CodeBundle preset(const std::string& name) {
  return agd::load_code_spec(std::string(AGD_PRESET_DIR) + "/" + name + ".json");
}

inline std::string preset_path(const std::string& name, const std::string& ext) {
  return std::string(AGD_PRESET_DIR) + "/" + name + ext;
}

// {log, n1, n2} triples.
struct Term {
  agd::Elem c;
  int n1, n2;
};

inline agd::BiPoly poly(std::initializer_list<Term> terms) {
  agd::BiPoly P;
  for (const Term& t : terms) P[{t.n1, t.n2}] = t.c;
  return P;
}

// Affine point by (log x, log y) with the error value at it.
struct ErrAt {
  int x, y;
  agd::Elem val;
};

struct Golden {
  std::string preset;
  std::vector<ErrAt> errors;
  std::vector<agd::BiPoly> F;  // empty entries are not checked
  std::vector<agd::BiPoly> G;
  bool check_G = true;
};

inline agd::ErrorPattern pattern(const agd::Code& code, const std::vector<ErrAt>& errs) {
  agd::ErrorPattern e;
  for (const ErrAt& p : errs) {
    e.locs.push_back(code.point_index(agd::Point{false, p.x, p.y}));
    e.vals.push_back(p.val);
  }
  return e;
}

inline Golden elliptic_golden() {
  return {"elliptic_gf16",
          {{3, 7, 6}, {9, 11, 8}, {14, 4, 11}},
          {poly({{13, 2, 0}, {13, 0, 1}, {12, 1, 0}, {2, 0, 0}}),
           poly({{13, 1, 1}, {11, 2, 0}, {10, 0, 1}, {2, 1, 0}, {4, 0, 0}})},
          {poly({{10, 1, 0}, {14, 0, 0}}), poly({{4, 0, 1}, {2, 1, 0}})}};
}

inline Golden klein_golden() {
  return {"klein_gf8",
          {{0, 1, 1}, {1, 0, 2}, {2, 0, 5}, {3, 3, 4}},
          {poly({{0, 3, 0}, {0, 2, 0}, {3, 1, 1}, {2, 1, 0}, {1, 0, 0}}),
           poly({{0, 2, 1}, {1, 2, 0}, {6, 1, 1}, {2, 1, 0}, {6, 0, 0}}),
           poly({{0, 1, 2}, {2, 2, 0}, {0, 1, 1}, {6, 1, 0}, {5, 0, 0}})},
          {poly({{4, 1, 1}, {6, 1, 0}, {6, 0, 0}}), agd::BiPoly{}, poly({{4, 2, 0}, {6, 1, 0}, {4, 0, 0}})}};
}

inline Golden hermitian_golden() {
  return {"hermitian_gf16",
          {{-1, 0, 11}, {5, 3, 13}, {9, 8, 2}, {10, 13, 12}, {12, 2, 9}},
          {poly({{11, 3, 0}, {10, 1, 1}, {8, 2, 0}, {2, 0, 1}, {1, 1, 0}, {2, 0, 0}})},
          {},
          false};
}

inline const char* const kPresets[] = {"elliptic_gf16", "klein_gf8", "hermitian_gf16"};

}  // namespace fx
