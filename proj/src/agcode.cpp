#include "agd/agcode.hpp"

#include <set>
#include <stdexcept>

namespace agd {

Elem SyndromeTable::at(Mono l) const {
  auto it = u.find(l);
  if (it == u.end()) throw std::out_of_range("syndrome index outside table");
  return it->second;
}

Code::Code(std::shared_ptr<const Curve> curve, int m) : curve_(std::move(curve)), m_(m) {
  const Curve& C = *curve_;
  if (m <= 2 * C.genus() - 2) throw std::invalid_argument("m must exceed 2g-2");
  checks_ = C.basis(m);
  if (static_cast<int>(checks_.size()) >= n())
    throw std::invalid_argument("m too large for the number of points");

  // Gaussian elimination over GF(2^w) in log form.
  const Field& F = C.field();
  std::vector<std::vector<Elem>> H(checks_.size(), std::vector<Elem>(n()));
  for (size_t r = 0; r < checks_.size(); ++r)
    for (int j = 0; j < n(); ++j) H[r][j] = C.eval_mono(checks_[r], points()[j]);
  size_t row = 0;
  std::vector<bool> is_pivot(n(), false);
  for (int col = 0; col < n() && row < H.size(); ++col) {
    size_t p = row;
    while (p < H.size() && H[p][col] == kZero) ++p;
    if (p == H.size()) continue;
    std::swap(H[p], H[row]);
    Elem inv = F.inv(H[row][col]);
    for (auto& x : H[row]) x = F.mul(x, inv);
    for (size_t r = 0; r < H.size(); ++r) {
      if (r == row || H[r][col] == kZero) continue;
      Elem f = H[r][col];
      for (int j = 0; j < n(); ++j) H[r][j] = F.add(H[r][j], F.mul(f, H[row][j]));
    }
    pivot_cols_.push_back(col);
    is_pivot[col] = true;
    ++row;
  }
  if (row != checks_.size()) throw std::logic_error("parity-check matrix is rank deficient");
  for (int j = 0; j < n(); ++j)
    if (!is_pivot[j]) free_cols_.push_back(j);
  rref_.assign(H.size(), std::vector<unsigned>(n()));
  for (size_t r = 0; r < H.size(); ++r)
    for (int j = 0; j < n(); ++j) rref_[r][j] = F.to_vec(H[r][j]);
}

int Code::t_designed() const {
  int twice = m_ - 2 * curve_->genus() + 1;
  return twice >= 0 && twice % 2 == 0 ? twice / 2 : -1;
}

Word Code::encode(const std::vector<Elem>& message) const {
  if (static_cast<int>(message.size()) != k()) throw std::invalid_argument("message length != k");
  const Field& F = field();
  Word c(n(), kZero);
  for (size_t i = 0; i < free_cols_.size(); ++i) c[free_cols_[i]] = message[i];
  // Row r reads c[pivot_r] + sum_{free j} H[r][j] c[j] = 0.
  for (size_t r = 0; r < rref_.size(); ++r) {
    unsigned acc = 0;
    for (int j : free_cols_) {
      if (c[j] == kZero || rref_[r][j] == 0) continue;
      acc ^= F.to_vec(F.mul(F.from_vec(rref_[r][j]), c[j]));
    }
    c[pivot_cols_[r]] = F.from_vec(acc);
  }
  return c;
}

int Code::point_index(const Point& P) const {
  for (int j = 0; j < n(); ++j)
    if (points()[j] == P) return j;
  return -1;
}

std::vector<Mono> Code::domain(int B) const {
  const Curve& C = *curve_;
  std::vector<Mono> out;
  for (Mono l : C.phi(0, 2 * C.a() - 1, B))
    if (C.regular(l)) out.push_back(l);
  return out;
}

SyndromeTable Code::syndromes(const Word& r) const {
  if (static_cast<int>(r.size()) != n()) throw std::invalid_argument("word length != n");
  const Field& F = field();
  SyndromeTable t;
  for (Mono l : syndrome_domain()) {
    Elem s = kZero;
    for (int j = 0; j < n(); ++j)
      if (r[j] != kZero) s = F.add(s, F.mul(r[j], curve_->eval_mono(l, points()[j])));
    t.u[l] = s;
  }
  return t;
}

SyndromeTable Code::full_syndromes(const ErrorPattern& e, int B) const {
  const Field& F = field();
  SyndromeTable t;
  for (Mono l : domain(B)) {
    Elem s = kZero;
    for (size_t g = 0; g < e.locs.size(); ++g)
      s = F.add(s, F.mul(e.vals[g], curve_->eval_mono(l, points()[e.locs[g]])));
    t.u[l] = s;
  }
  return t;
}

Word inject_errors(const Code& code, const Word& w, const ErrorPattern& e) {
  if (e.locs.size() != e.vals.size()) throw std::invalid_argument("locations/values length mismatch");
  std::set<int> seen;
  Word r = w;
  for (size_t g = 0; g < e.locs.size(); ++g) {
    int j = e.locs[g];
    if (j < 0 || j >= code.n()) throw std::invalid_argument("error location out of range");
    if (!seen.insert(j).second) throw std::invalid_argument("duplicate error location");
    if (e.vals[g] == kZero) throw std::invalid_argument("zero error value");
    if (!code.field().valid(e.vals[g])) throw std::invalid_argument("error value out of range");
    r[j] = code.field().add(r[j], e.vals[g]);
  }
  return r;
}

Word add_words(const Word& u, const Word& v, const Field& F) {
  if (u.size() != v.size()) throw std::invalid_argument("word length mismatch");
  Word r(u.size());
  for (size_t j = 0; j < u.size(); ++j) r[j] = F.add(u[j], v[j]);
  return r;
}

}  // namespace agd
