#pragma once

#include <map>
#include <memory>
#include <vector>

#include "agd/curve.hpp"

namespace agd {

using Word = std::vector<Elem>;

// Syndromes u_l keyed by monomial.
struct SyndromeTable {
  std::map<Mono, Elem> u;
  Elem at(Mono l) const;  // throws if l is outside the table
  bool has(Mono l) const { return u.count(l) != 0; }
};

struct ErrorPattern {
  std::vector<int> locs;   // indices into Code::points()
  std::vector<Elem> vals;  // nonzero
};

class Code {
 public:
  // C(m): parity checks z^l(P_j) for basis monomials l with o(l) <= m.
  Code(std::shared_ptr<const Curve> curve, int m);

  const Curve& curve() const { return *curve_; }
  std::shared_ptr<const Curve> curve_ptr() const { return curve_; }
  const Field& field() const { return curve_->field(); }
  const std::vector<Point>& points() const { return curve_->points(); }
  int m() const { return m_; }
  int n() const { return static_cast<int>(points().size()); }
  int k() const { return n() - static_cast<int>(checks_.size()); }
  int d_goppa() const { return m_ - 2 * curve_->genus() + 2; }
  // Designed t from m = 2t + 2g - 1, or -1 when m - 2g + 1 is odd.
  int t_designed() const;
  const std::vector<Mono>& checks() const { return checks_; }
  const std::vector<int>& info_positions() const { return free_cols_; }

  Word encode(const std::vector<Elem>& message) const;
  Word zero_word() const { return Word(n(), kZero); }
  int point_index(const Point& P) const;  // -1 if absent

  // Domain of u: Phi(2a-1, m), restricted to monomials regular at every point.
  std::vector<Mono> syndrome_domain() const { return domain(m_); }
  std::vector<Mono> domain(int B) const;
  SyndromeTable syndromes(const Word& r) const;
  // Test-only: u_l computed from a known error vector on Phi(2a-1, B).
  SyndromeTable full_syndromes(const ErrorPattern& e, int B) const;

 private:
  std::shared_ptr<const Curve> curve_;
  int m_;
  std::vector<Mono> checks_;
  // Reduced row-echelon parity-check matrix in vector form (GF(2^w) as ints).
  std::vector<std::vector<unsigned>> rref_;
  std::vector<int> pivot_cols_;
  std::vector<int> free_cols_;
};

// Adds the pattern's values at its locations; rejects duplicates and zeros.
Word inject_errors(const Code& code, const Word& w, const ErrorPattern& e);
Word add_words(const Word& u, const Word& v, const Field& F);

}  // namespace agd
