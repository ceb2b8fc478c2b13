#include "agd/decoder.hpp"

#include <stdexcept>

namespace agd {

const char* status_name(DecodeStatus s) {
  switch (s) {
    case DecodeStatus::Success: return "success";
    case DecodeStatus::NotGenericDetected: return "not_generic";
    case DecodeStatus::Failure: return "failure";
  }
  return "?";
}

std::vector<int> chien_search(const LocatorOutput& basis, const Code& code, OpCounter* ctr) {
  const Curve& C = code.curve();
  const Field& F = C.field();
  std::vector<int> E;
  for (int j = 0; j < code.n(); ++j) {
    const Point& P = code.points()[j];
    bool all = true;
    for (const BiPoly& f : basis.F) {
      Elem acc = kZero;
      for (auto [n, c] : f) acc = F.add(acc, F.mul(c, C.eval_mono(n, P), ctr), ctr);
      if (acc != kZero) {
        all = false;
        break;
      }
    }
    if (all) E.push_back(j);
  }
  return E;
}

std::vector<Elem> error_values(const std::vector<int>& E, const LocatorOutput& basis, const Code& code,
                               const SyndromeTable& synd, bool monic, OpCounter* ctr) {
  const Curve& C = code.curve();
  const Field& F = C.field();
  const int a = C.a();
  std::vector<Derivative> dF;
  for (int i = 0; i < a; ++i) dF.push_back(C.formal_derivative(basis.F[i]));

  std::vector<Elem> vals(E.size(), kZero);
  int special = -1;
  Elem affine_sum = kZero;
  for (size_t k = 0; k < E.size(); ++k) {
    const Point& P = code.points()[E[k]];
    if (P.special) {
      special = static_cast<int>(k);
      continue;
    }
    Elem sum = kZero;
    for (int i = 0; i < a; ++i) {
      const int lab = basis.dual[i];
      Elem term = F.mul(C.eval_derivative(dF[i], P, ctr), C.eval(basis.G[lab], P), ctr);
      if (term == kZero) continue;
      if (!monic) {
        if (basis.lead_F[i] == kZero || basis.head_e[lab] == kZero)
          throw std::domain_error("zero normaliser in error evaluation");
        term = F.mul(term, F.inv(F.mul(basis.lead_F[i], basis.head_e[lab], ctr), ctr), ctr);
      }
      sum = F.add(sum, term, ctr);
    }
    if (sum == kZero) throw std::domain_error("error-value sum vanishes");
    vals[k] = F.inv(sum, ctr);
    affine_sum = F.add(affine_sum, vals[k], ctr);
  }
  if (special >= 0) {
    // z^(0,0) = 1 at every point, so u_(0,0) is the sum of all error values.
    vals[special] = F.add(synd.at({0, 0}), affine_sum, ctr);
    if (vals[special] == kZero) throw std::domain_error("zero error value at the special point");
  }
  return vals;
}

std::vector<Elem> solve_error_values(const std::vector<int>& E, const Code& code, const SyndromeTable& synd,
                                     OpCounter* ctr) {
  const Curve& C = code.curve();
  const Field& F = C.field();
  const size_t t = E.size();
  // Augmented rows [z^l(P_j) ... | u_l].
  std::vector<std::vector<Elem>> A;
  for (auto& [l, u] : synd.u) {
    std::vector<Elem> row;
    for (int j : E) row.push_back(C.eval_mono(l, code.points()[j]));
    row.push_back(u);
    A.push_back(std::move(row));
  }
  size_t r = 0;
  for (size_t c = 0; c < t; ++c) {
    size_t p = r;
    while (p < A.size() && A[p][c] == kZero) ++p;
    if (p == A.size()) return {};
    std::swap(A[p], A[r]);
    const Elem inv = F.inv(A[r][c], ctr);
    for (Elem& x : A[r]) x = F.mul(x, inv, ctr);
    for (size_t q = 0; q < A.size(); ++q) {
      if (q == r || A[q][c] == kZero) continue;
      const Elem k = A[q][c];
      for (size_t z = c; z <= t; ++z) A[q][z] = F.add(A[q][z], F.mul(k, A[r][z], ctr), ctr);
    }
    ++r;
  }
  for (size_t q = r; q < A.size(); ++q)
    if (A[q][t] != kZero) return {};
  std::vector<Elem> vals(t);
  for (size_t c = 0; c < t; ++c) {
    if (A[c][t] == kZero) return {};  // a located point with no error
    vals[c] = A[c][t];
  }
  return vals;
}

namespace {

bool clean(const Code& code, const Word& w) {
  for (auto& [l, u] : code.syndromes(w).u)
    if (u != kZero) return false;
  return true;
}

Word apply(const Word& r, const std::vector<int>& E, const std::vector<Elem>& vals, const Field& F) {
  Word c = r;
  for (size_t k = 0; k < E.size(); ++k) c[E[k]] = F.add(c[E[k]], vals[k]);
  return c;
}

}  // namespace

DecodeResult decode(const Code& code, const Word& received, const DecodeOptions& opt) {
  DecodeResult res;
  res.corrected = received;
  const Curve& C = code.curve();
  const Field& F = C.field();
  const SyndromeTable synd = code.syndromes(received);

  BmsState st = run(code, synd, opt.mode, code.m(), &res.bms_ops, opt.trace);
  res.basis = extract_locators(st, C);

  bool zero_synd = true;
  for (auto& [l, u] : synd.u) zero_synd = zero_synd && u == kZero;
  if (zero_synd) {
    res.status = DecodeStatus::Success;
    return res;
  }

  res.error_locs = chien_search(res.basis, code, &res.eval_ops);
  const int delta = delta_size(st, C);
  if (res.error_locs.empty() || static_cast<int>(res.error_locs.size()) != delta) {
    res.status = DecodeStatus::NotGenericDetected;
    res.reason = "located " + std::to_string(res.error_locs.size()) + " points, delta set has " +
                 std::to_string(delta);
    return res;
  }

  std::string formula_issue;
  try {
    res.error_vals = error_values(res.error_locs, res.basis, code, synd, opt.mode == Mode::Division,
                                  &res.eval_ops);
    Word c = apply(received, res.error_locs, res.error_vals, F);
    if (clean(code, c)) {
      res.corrected = std::move(c);
      res.value_method = "formula";
      res.status = DecodeStatus::Success;
      return res;
    }
    formula_issue = "closed-form values fail the parity checks";
  } catch (const std::domain_error& ex) {
    formula_issue = ex.what();
  }

  // The closed form can miss when the auxiliary polynomials were replaced by a
  // simultaneous update; the located set still determines the values.
  res.error_vals = solve_error_values(res.error_locs, code, synd, &res.eval_ops);
  if (res.error_vals.empty()) {
    res.status = DecodeStatus::Failure;
    res.reason = formula_issue + "; syndrome system has no unique nonzero solution";
    return res;
  }
  Word c = apply(received, res.error_locs, res.error_vals, F);
  if (!clean(code, c)) {
    res.status = DecodeStatus::NotGenericDetected;
    res.reason = "corrected word fails the parity checks";
    res.error_vals.clear();
    return res;
  }
  res.corrected = std::move(c);
  res.value_method = "syndrome_solve";
  res.reason = formula_issue;
  res.status = DecodeStatus::Success;
  return res;
}

}  // namespace agd
