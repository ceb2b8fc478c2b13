#include "agd/archsim.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace agd {

const char* arch_name(Arch a) {
  switch (a) {
    case Arch::Systolic: return "systolic";
    case Arch::Koetter: return "koetter";
    case Arch::ParallelBms: return "parallel_bms";
    case Arch::InverseFree: return "inverse_free";
    case Arch::Serial: return "serial";
    case Arch::SerialInverseFree: return "serial_inverse_free";
  }
  return "?";
}

Arch parse_arch(const std::string& s) {
  for (Arch a : {Arch::Systolic, Arch::Koetter, Arch::ParallelBms, Arch::InverseFree, Arch::Serial,
                 Arch::SerialInverseFree})
    if (s == arch_name(a)) return a;
  throw std::invalid_argument("unknown architecture: " + s);
}

std::string Switches::str() const {
  std::string s;
  s += combine ? "A" : "a";
  s += preserve ? "B" : "b";
  s += update ? "U" : "u";
  s += exchange ? "X" : "x";
  s += latch ? "D" : "d";
  s += zero ? "Z" : "z";
  return s;
}

namespace {

int mod(int x, int n) { return ((x % n) + n) % n; }

struct Config {
  Arch arch;
  int seqs;       // independent register sequences
  int lanes;      // interleaved lanes per sequence
  int delta;      // supplementary lookahead in clocks
  bool exchange;  // vf lanes rotate through the exchange chain
  bool division;
};

class Machine {
 public:
  Machine(const Code& code, const SyndromeTable& synd, Config cfg, const SimOptions& opt)
      : code_(code), C_(code.curve()), F_(C_.field()), cfg_(cfg), opt_(opt), m_(code.m()), A_(cfg.lanes) {
    a_ = C_.a();
    if (cfg_.seqs * cfg_.lanes != a_) throw std::invalid_argument("layout does not cover a blocks");
    T_ = A_ * (m_ + 3) + cfg_.delta;
    L_ = A_ * (m_ + 2) - (cfg_.exchange ? 1 : 0);
    Lw_ = A_ * (m_ + 3);
    mode_ = cfg_.division ? Mode::Division : Mode::InverseFree;

    // The reference run supplies both the initial register load and the
    // per-boundary expectations.
    BmsState st = init_state(code_, synd, mode_, m_);
    ref_.push_back(st);
    for (int N = 0; N <= m_; ++N) {
      step(st, C_);
      ref_.push_back(st);
    }
    const BmsState& s0 = ref_[0];
    s1_ = s0.s1;
    c1_ = s0.c1;
    M_.assign(a_, -1);
    Tdeg_.assign(a_, Mono{0, 0});

    rf_.vf.assign(cfg_.seqs, std::vector<Elem>(L_, kZero));
    rf_.wg.assign(cfg_.seqs, std::vector<Elem>(Lw_, kZero));
    rf_.exch.assign(cfg_.exchange ? A_ : 0, kZero);
    rf_.supp_v.assign(cfg_.delta, kZero);
    rf_.supp_w.assign(cfg_.delta, kZero);
    if (cfg_.delta && cfg_.seqs != 1) throw std::invalid_argument("supplementary chains need one sequence");
    rf_.disc.assign(a_, kZero);
    rf_.head.assign(a_, kZero);
    rf_.dinv.assign(a_, kZero);
    rf_.preserve.assign(a_, true);
    for (int q = 0; q < cfg_.seqs; ++q)
      for (int p = 0; p < A_; ++p) {
        const int i = block_of(q, p, 0), j = slot_of(q, p, 0);
        for (int k = 0; k <= m_ + 1; ++k) {
          Elem x = k <= m_ ? s0.v[i].at(k) : s0.f[i].at(0);
          put_vf(q, A_ * k + p, x);
        }
        for (int k = 0; k <= m_; ++k) rf_.wg[q][A_ * k + p] = s0.w[j].at(k);
      }
  }

  ArchTrace run() {
    ArchTrace tr;
    tr.arch = cfg_.arch;
    tr.period = T_;
    tr.mult_budget = 2 * cfg_.seqs;
    tr.vf_regs = L_ * cfg_.seqs;
    tr.wg_regs = Lw_ * cfg_.seqs;
    tr.exch_regs = static_cast<int>(rf_.exch.size());
    tr.supp_regs = 2 * cfg_.delta;
    const long long total = static_cast<long long>(m_ + 1) * T_;
    for (long long t = 0; t < total; ++t) {
      if (t % T_ == 0) boundary(static_cast<int>(t / T_), tr);
      clock(t, tr);
    }
    boundary(m_ + 1, tr);
    tr.total_clocks = total;

    BmsState fin;
    const BoundaryState& b = tr.boundaries.back();
    fin.mode = mode_;
    fin.N = m_ + 1;
    fin.horizon = m_;
    fin.s1 = b.s1;
    fin.c1 = b.c1;
    fin.f = b.f;
    fin.v = b.v;
    fin.g = b.g;
    fin.w = b.w;
    fin.M = M_;
    fin.T = Tdeg_;
    tr.basis = extract_locators(fin, C_);
    return tr;
  }

 private:
  int block_of(int q, int p, int N) const {
    if (cfg_.seqs > 1) return q;
    return mod(C_.binv() * N - sigma(p), a_);
  }
  int slot_of(int q, int p, int N) const {
    if (cfg_.seqs > 1) return C_.ibar(q, N);
    return sigma(p);
  }
  // wg lane p of the serial layout carries a fixed slot.
  int sigma(int p) const { return mod(-C_.binv() * p, a_); }
  int lane_id(int q, int p) const { return q * A_ + p; }

  // Element j of the vf stream at a period boundary: the last one is in flight
  // at the exchange output.
  Elem get_vf(int q, int j) const { return j < L_ ? rf_.vf[q][j] : rf_.exch[0]; }
  void put_vf(int q, int j, Elem x) {
    if (j < L_) {
      rf_.vf[q][j] = x;
    } else {
      rf_.exch[0] = x;
    }
  }

  void boundary(int N, ArchTrace& tr) {
    BoundaryState b;
    b.N = N;
    b.s1 = s1_;
    b.c1 = c1_;
    const int cap = ref_[0].f[0].cap();
    b.f.assign(a_, ZPoly(cap));
    b.v.assign(a_, ZPoly(cap));
    b.g.assign(a_, ZPoly(cap));
    b.w.assign(a_, ZPoly(cap));
    for (int q = 0; q < cfg_.seqs; ++q)
      for (int p = 0; p < A_; ++p) {
        const int i = block_of(q, p, N), j = slot_of(q, p, N);
        auto vf = [&](int k) { return get_vf(q, A_ * k + p); };
        auto wg = [&](int k) { return rf_.wg[q][A_ * k + p]; };
        if (N <= m_) {
          for (int h = N; h <= m_; ++h) {
            b.v[i].c[h] = vf(h - N);
            b.w[j].c[h] = wg(h - N);
          }
          for (int h = 0; h <= N; ++h) {
            b.f[i].c[h] = vf(m_ - N + 1 + h);
            b.g[j].c[h] = wg(m_ - N + 1 + h);
          }
        } else {
          for (int h = 0; h <= N; ++h) b.f[i].c[h] = vf(h);
          // Zero-setting is skipped in the last period, so group 0 keeps the
          // head w_{m+1} and g_0 is implicitly zero.
          b.w[j].c[N] = wg(0);
          for (int h = 1; h <= N; ++h) b.g[j].c[h] = wg(h);
        }
      }
    if (opt_.compare) {
      for (auto& msg : compare_boundary(b, ref_[N], C_, m_)) tr.mismatches.push_back(msg);
    }
    tr.boundaries.push_back(std::move(b));
  }

  void latch(int q, int p, int N, ArchTrace& tr) {
    const int i = block_of(q, p, N), j = slot_of(q, p, N), id = lane_id(q, p);
    auto l = C_.l_of(i, N);
    const Elem d = checks(C_, l, Mono{s1_[i], i}, N) ? rf_.vf[q][0] : kZero;
    rf_.disc[id] = d;
    rf_.head[id] = rf_.wg[q][0];
    const bool P = d == kZero || s1_[i] >= l->n1 - c1_[j];
    rf_.preserve[id] = P;
    if (!P) {
      ++tr.update_branches;
      if (cfg_.division) {
        rf_.dinv[id] = F_.inv_chain(d).first;
        ++tr.inverter_uses;
      }
      const int s_old = s1_[i];
      s1_[i] = l->n1 - c1_[j];
      c1_[j] = l->n1 - s_old;
      M_[j] = N;
      Tdeg_[j] = Mono{s_old, i};
    }
  }

  void clock(long long t, ArchTrace& tr) {
    const int N = static_cast<int>(t / T_);
    const int c = static_cast<int>(t % T_);
    const int j = c - cfg_.delta;  // stream element reaching the combiner
    const int p = mod(j, A_);
    const int k = j < 0 ? -1 : j / A_;
    int mults = 0;
    std::vector<Elem> vf_out(cfg_.seqs), wg_out(cfg_.seqs);
    std::vector<Switches> sw(cfg_.seqs);

    for (int q = 0; q < cfg_.seqs; ++q) {
      Switches& s = sw[q];
      if (c < A_) {
        latch(q, c, N, tr);
        s.latch = true;
      }
      Elem vr = rf_.vf[q][0], wr = rf_.wg[q][0];
      if (cfg_.delta) {
        vr = rf_.supp_v[0];
        wr = rf_.supp_w[0];
      }
      const int id = lane_id(q, p);
      const Elem d = rf_.disc[id], e = rf_.head[id];
      const bool P = rf_.preserve[id];

      // vf: group 0 is v_N, deleted; groups past m+1 carry no element.
      Elem vo = kZero;
      if (k >= 1 && k <= m_ + 1) {
        s.combine = true;
        const Elem dw = F_.mul(d, wr);
        ++mults;
        if (cfg_.division) {
          vo = F_.add(vr, dw);
        } else {
          vo = F_.add(F_.mul(e, vr), dw);
          ++mults;
        }
      } else if (k < 0 && (vr != kZero || wr != kZero)) {
        throw std::logic_error("supplementary group holds a nonzero value");
      }

      Elem wo = kZero;
      if (k >= 0) {
        if (P) {
          s.preserve = true;
          wo = wr;
        } else {
          s.update = true;
          wo = vr;
          if (cfg_.division) {
            wo = F_.mul(rf_.dinv[id], vr);
            ++mults;
          }
        }
        if (k == m_ - N && N < m_) {
          s.zero = true;
          wo = kZero;
        }
      }
      vf_out[q] = vo;
      wg_out[q] = wo;
    }
    tr.max_mults_per_clock = std::max(tr.max_mults_per_clock, mults);

    if (opt_.csv) dump(t, sw);

    for (int q = 0; q < cfg_.seqs; ++q) {
      Elem into_vf = vf_out[q];
      if (cfg_.exchange) {
        const Elem delayed = rf_.exch[0];
        shift_in(rf_.exch, vf_out[q]);
        if (p == 0) {
          into_vf = delayed;
          sw[q].exchange = true;
        }
      }
      if (cfg_.delta) {
        shift_in(rf_.supp_v, rf_.vf[q][0]);
        shift_in(rf_.supp_w, rf_.wg[q][0]);
      }
      shift_in(rf_.vf[q], into_vf);
    }
    // Parallel blocks hand their wg stream to the block partnering that slot
    // in the next period; serial wg lanes never move.
    std::vector<Elem> tails(cfg_.seqs);
    for (int q = 0; q < cfg_.seqs; ++q) tails[mod(q + (cfg_.seqs > 1 ? C_.binv() : 0), cfg_.seqs)] = wg_out[q];
    for (int q = 0; q < cfg_.seqs; ++q) shift_in(rf_.wg[q], tails[q]);
  }

  static void shift_in(std::vector<Elem>& r, Elem x) {
    if (r.empty()) return;
    std::rotate(r.begin(), r.begin() + 1, r.end());
    r.back() = x;
  }

  void dump(long long t, const std::vector<Switches>& sw) {
    std::ostream& os = *opt_.csv;
    for (int q = 0; q < cfg_.seqs; ++q) {
      const std::string s = sw[q].str();
      auto rows = [&](const char* name, const std::vector<Elem>& r) {
        for (size_t x = 0; x < r.size(); ++x) os << t << ',' << q << ',' << name << ',' << x << ',' << r[x] << ',' << s << '\n';
      };
      rows("vf", rf_.vf[q]);
      rows("wg", rf_.wg[q]);
      if (q == 0) {
        rows("exch", rf_.exch);
        rows("supp_v", rf_.supp_v);
        rows("supp_w", rf_.supp_w);
        rows("disc", rf_.disc);
        rows("head", rf_.head);
      }
    }
  }

  const Code& code_;
  const Curve& C_;
  const Field& F_;
  Config cfg_;
  SimOptions opt_;
  int m_, A_, a_ = 0, T_ = 0, L_ = 0, Lw_ = 0;
  Mode mode_ = Mode::InverseFree;
  std::vector<BmsState> ref_;
  RegisterFile rf_;
  std::vector<int> s1_, c1_, M_;
  std::vector<Mono> Tdeg_;
};

}  // namespace

// Same line layout as dump_record, minus the per-step d/e latches.
std::string dump_boundary(const BoundaryState& b) {
  std::ostringstream os;
  auto series = [&](const char* tag, const ZPoly& p) {
    os << ' ' << tag << ':';
    for (int h = 0; h < p.cap(); ++h)
      if (p.c[h] != kZero) os << ' ' << h << '=' << p.c[h];
  };
  for (size_t i = 0; i < b.s1.size(); ++i) {
    os << "N=" << b.N << " i=" << i << " s1=" << b.s1[i] << " c1=" << b.c1[i];
    series("f", b.f[i]);
    series("g", b.g[i]);
    series("v", b.v[i]);
    series("w", b.w[i]);
    os << '\n';
  }
  return os.str();
}

std::vector<std::string> compare_boundary(const BoundaryState& b, const BmsState& ref, const Curve& C, int m) {
  std::vector<std::string> out;
  const int N = b.N;
  auto fail = [&](const std::string& what, int idx, int h) {
    std::ostringstream os;
    os << "N=" << N << ' ' << what << '[' << idx << "] at Z^" << h;
    out.push_back(os.str());
  };
  for (int i = 0; i < C.a(); ++i) {
    if (b.s1[i] != ref.s1[i]) fail("s1", i, -1);
    if (b.c1[i] != ref.c1[i]) fail("c1", i, -1);
    if (!ref.f[i].zero_outside(0, N)) fail("reference f support", i, -1);
    if (!ref.g[i].zero_outside(0, N)) fail("reference g support", i, -1);
    for (int h = 0; h <= N; ++h) {
      if (b.f[i].at(h) != ref.f[i].at(h)) fail("f", i, h);
      if (b.g[i].at(h) != ref.g[i].at(h)) fail("g", i, h);
    }
    if (N <= m) {
      for (int h = N; h <= m; ++h) {
        if (b.v[i].at(h) != ref.v[i].at(h)) fail("v", i, h);
        if (b.w[i].at(h) != ref.w[i].at(h)) fail("w", i, h);
      }
    } else if (b.w[i].at(N) != ref.w[i].at(N)) {
      fail("w", i, N);
    }
  }
  return out;
}

ArchTrace sim_inverse_free(const Code& code, const SyndromeTable& synd, const SimOptions& opt) {
  const int a = code.curve().a();
  return Machine(code, synd, {Arch::InverseFree, a, 1, 0, false, false}, opt).run();
}

ArchTrace sim_serial(const Code& code, const SyndromeTable& synd, const SimOptions& opt) {
  const int a = code.curve().a();
  return Machine(code, synd, {Arch::Serial, 1, a, 0, true, true}, opt).run();
}

ArchTrace sim_serial_inverse_free(const Code& code, const SyndromeTable& synd, const SimOptions& opt) {
  const int a = code.curve().a();
  return Machine(code, synd, {Arch::SerialInverseFree, 1, a, a, true, false}, opt).run();
}

ArchTrace simulate(Arch arch, const Code& code, const SyndromeTable& synd, const SimOptions& opt) {
  switch (arch) {
    case Arch::InverseFree: return sim_inverse_free(code, synd, opt);
    case Arch::Serial: return sim_serial(code, synd, opt);
    case Arch::SerialInverseFree: return sim_serial_inverse_free(code, synd, opt);
    default: throw std::invalid_argument(std::string(arch_name(arch)) + " is estimated only, not simulated");
  }
}

ResourceEstimate resources(Arch arch, int a, int m) {
  ResourceEstimate r;
  r.arch = arch;
  const double A = a, Mm = m;
  switch (arch) {
    case Arch::Systolic:
      r.multipliers = 2 * A * Mm;
      r.inverters = A * Mm / 2;
      r.registers = (4 * Mm + 9) * A / 2;
      r.clocks = Mm + 1;
      break;
    case Arch::Koetter: {
      const double lambda = (Mm + 1) / 2 - 1 + A;
      r.multipliers = 3 * A;
      r.inverters = A;
      r.registers = A * (4 * lambda + 5);
      r.clocks = (Mm + 3) * (Mm + 1);
      break;
    }
    case Arch::ParallelBms:
      r.multipliers = 2 * A;
      r.inverters = A;
      r.registers = 2 * A * (Mm + 2);
      r.clocks = (Mm + 1) * (Mm + 2);
      break;
    case Arch::InverseFree:
      r.multipliers = 2 * A;
      r.inverters = 0;
      r.registers = 2 * A * (Mm + 2);
      r.clocks = (Mm + 1) * (Mm + 2);
      break;
    case Arch::Serial:
      r.multipliers = 2;
      r.inverters = 1;
      r.registers = 2 * A * (Mm + 2);
      r.clocks = A * (Mm + 1) * (Mm + 2);
      break;
    case Arch::SerialInverseFree:
      r.multipliers = 2;
      r.inverters = 0;
      r.registers = 2 * A * (Mm + 2);
      r.clocks = A * (Mm + 1) * (Mm + 2);
      break;
  }
  return r;
}

}  // namespace agd
