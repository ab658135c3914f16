#include "branchdec/rootdata.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace branchdec {

Params parse_params(const std::string& s) {
  Params out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw StructuralError("bad parameter '" + item + "'");
    std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(val, &used);
    } catch (const std::exception&) {
      throw StructuralError("bad parameter value '" + val + "'");
    }
    if (used != val.size()) throw StructuralError("bad parameter value '" + val + "'");
    out[key] = v;
  }
  return out;
}

std::string params_str(const Params& p) {
  std::string s;
  for (auto& [k, v] : p) s += (s.empty() ? "" : ",") + k + "=" + std::to_string(v);
  return s;
}

bool RootDatum::has_zero_weight() const {
  return std::any_of(p_weights.begin(), p_weights.end(), [](const Weight& w) { return w.is_zero(); });
}

namespace {

// builder helpers ---------------------------------------------------------

struct Builder {
  RootDatum d;
  explicit Builder(size_t dim) { d.dim = dim; }

  RatVec v(std::initializer_list<std::pair<size_t, Rat>> terms) const {
    RatVec x = zeros(d.dim);
    for (auto& [i, c] : terms) x[i] += c;
    return x;
  }
  void k(const RatVec& r) { d.pos_k_roots.push_back(r); }
  // +w then -w
  void pm(const RatVec& w) {
    d.p_weights.push_back({w, 1});
    d.p_weights.push_back({neg(w), 1});
  }
  void zero() { d.p_weights.push_back({zeros(d.dim), 1}); }
  void dom(const RatVec& f) { d.dominance.push_back(f); }

  // roots e_i +- e_j for i<j in [lo, hi)
  void d_roots(size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i)
      for (size_t j = i + 1; j < hi; ++j) {
        k(v({{i, 1}, {j, -1}}));
        k(v({{i, 1}, {j, 1}}));
      }
  }
  void a_roots(size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i)
      for (size_t j = i + 1; j < hi; ++j) k(v({{i, 1}, {j, -1}}));
  }
  // a_lo >= ... >= a_{hi-1}
  void a_dom(size_t lo, size_t hi) {
    for (size_t i = lo; i + 1 < hi; ++i) dom(v({{i, 1}, {i + 1, -1}}));
  }
  // a_lo >= ... >= a_{hi-2} >= |a_{hi-1}|
  void d_dom(size_t lo, size_t hi) {
    a_dom(lo, hi);
    if (hi - lo >= 2) dom(v({{hi - 2, 1}, {hi - 1, 1}}));
  }
  // a_lo >= ... >= a_{hi-1} >= 0
  void bc_dom(size_t lo, size_t hi) {
    a_dom(lo, hi);
    if (hi > lo) dom(v({{hi - 1, 1}}));
  }
};

Rat half(1, 2);

// all sign vectors over n coordinates, first coordinate varying slowest, '+' first
std::vector<std::vector<int>> sign_vectors(size_t n) {
  std::vector<std::vector<int>> out;
  for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
    std::vector<int> s(n);
    for (size_t i = 0; i < n; ++i) s[i] = (mask >> (n - 1 - i)) & 1 ? -1 : 1;
    out.push_back(s);
  }
  return out;
}

int count_minus(const std::vector<int>& s) { return int(std::count(s.begin(), s.end(), -1)); }

int need(const Params& p, const char* key) {
  auto it = p.find(key);
  if (it == p.end()) throw RankError(std::string("missing rank parameter ") + key);
  return it->second;
}

void check_keys(const Params& p, const std::vector<std::string>& keys) {
  for (auto& [k, v] : p) {
    (void)v;
    if (std::find(keys.begin(), keys.end(), k) == keys.end())
      throw RankError("unexpected rank parameter " + k);
  }
}

std::string S(int x) { return std::to_string(x); }

// families ----------------------------------------------------------------

RootDatum build_su(int m, int n) {
  if (m < 1 || n < 1) throw RankError("su(m,n) needs m,n >= 1");
  Builder b(m + n);
  b.a_roots(0, m);
  b.a_roots(m, m + n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) b.pm(b.v({{size_t(i), 1}, {size_t(m + j), -1}}));
  b.a_dom(0, m);
  b.a_dom(m, m + n);
  b.d.constraints.push_back(RatVec(m + n, Rat(1)));
  RatVec z(m + n);
  for (int i = 0; i < m + n; ++i) z[i] = i < m ? n : -m;
  b.d.hermitian = HermitianData{z, {}, {}};
  b.d.label = "su(" + S(m) + "," + S(n) + ")";
  return b.d;
}

// so(p,q) with blocks of sizes m (first) and n (second). odd1/odd2 mark the
// odd-dimensional side.
RootDatum build_so_real(int m, int n, bool odd1, bool odd2) {
  if (m < 1 || n < 1) throw RankError("so family needs m,n >= 1");
  size_t M = m, N = n;
  Builder b(M + N);
  b.d_roots(0, M);
  b.d_roots(M, M + N);
  if (odd1)
    for (size_t i = 0; i < M; ++i) b.k(b.v({{i, 1}}));
  if (odd2)
    for (size_t i = 0; i < N; ++i) b.k(b.v({{M + i, 1}}));
  for (size_t i = 0; i < M; ++i)
    for (size_t j = 0; j < N; ++j) {
      b.pm(b.v({{i, 1}, {M + j, 1}}));
      b.pm(b.v({{i, 1}, {M + j, -1}}));
    }
  if (odd2)
    for (size_t i = 0; i < M; ++i) b.pm(b.v({{i, 1}}));
  if (odd1)
    for (size_t i = 0; i < N; ++i) b.pm(b.v({{M + i, 1}}));
  if (odd1 && odd2) b.zero();
  if (odd1)
    b.bc_dom(0, M);
  else
    b.d_dom(0, M);
  if (odd2)
    b.bc_dom(M, M + N);
  else
    b.d_dom(M, M + N);
  int p = 2 * m + (odd1 ? 1 : 0), q = 2 * n + (odd2 ? 1 : 0);
  // Hermitian when one side is so(2)
  if (!odd1 && m == 1)
    b.d.hermitian = HermitianData{b.v({{0, 1}}), {}, {}};
  else if (!odd2 && n == 1)
    b.d.hermitian = HermitianData{b.v({{M, 1}}), {}, {}};
  b.d.label = "so(" + S(p) + "," + S(q) + ")";
  return b.d;
}

RootDatum build_sp(int m, int n) {
  if (m < 1 || n < 1) throw RankError("sp(m,n) needs m,n >= 1");
  size_t M = m, N = n;
  Builder b(M + N);
  b.d_roots(0, M);
  b.d_roots(M, M + N);
  for (size_t i = 0; i < M + N; ++i) b.k(b.v({{i, 2}}));
  for (size_t i = 0; i < M; ++i)
    for (size_t j = 0; j < N; ++j) {
      b.pm(b.v({{i, 1}, {M + j, 1}}));
      b.pm(b.v({{i, 1}, {M + j, -1}}));
    }
  b.bc_dom(0, M);
  b.bc_dom(M, M + N);
  b.d.label = "sp(" + S(m) + "," + S(n) + ")";
  return b.d;
}

RootDatum build_sostar(int n) {
  if (n < 2) throw RankError("so*(2n) needs n >= 2");
  Builder b(n);
  b.a_roots(0, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.pm(b.v({{size_t(i), 1}, {size_t(j), 1}}));
  b.a_dom(0, n);
  b.d.hermitian = HermitianData{RatVec(n, Rat(1)), {}, {}};
  b.d.label = "so*(" + S(2 * n) + ")";
  return b.d;
}

RootDatum build_spR(int n) {
  if (n < 1) throw RankError("sp(n,R) needs n >= 1");
  Builder b(n);
  b.a_roots(0, n);
  for (int i = 0; i < n; ++i) b.pm(b.v({{size_t(i), 2}}));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.pm(b.v({{size_t(i), 1}, {size_t(j), 1}}));
  b.a_dom(0, n);
  b.d.hermitian = HermitianData{RatVec(n, Rat(1)), {}, {}};
  b.d.label = "sp(" + S(n) + ",R)";
  return b.d;
}

RootDatum build_slC(int n) {
  if (n < 1) throw RankError("sl(2n,C) needs n >= 1");
  size_t N = 2 * n;
  Builder b(N);
  b.a_roots(0, N);
  for (size_t i = 0; i < N; ++i)
    for (size_t j = i + 1; j < N; ++j) b.pm(b.v({{i, 1}, {j, -1}}));
  b.zero();
  b.a_dom(0, N);
  b.d.constraints.push_back(RatVec(N, Rat(1)));
  b.d.label = "sl(" + S(2 * n) + ",C)";
  return b.d;
}

RootDatum build_soC(int n) {
  if (n < 2) throw RankError("so(2n,C) needs n >= 2");
  size_t N = n;
  Builder b(N);
  b.d_roots(0, N);
  for (size_t i = 0; i < N; ++i)
    for (size_t j = i + 1; j < N; ++j) {
      b.pm(b.v({{i, 1}, {j, 1}}));
      b.pm(b.v({{i, 1}, {j, -1}}));
    }
  b.zero();
  b.d_dom(0, N);
  b.d.label = "so(" + S(2 * n) + ",C)";
  return b.d;
}

RootDatum build_f4_4() {
  Builder b(4);
  b.d_roots(0, 3);
  for (size_t i = 0; i < 3; ++i) b.k(b.v({{i, 2}}));
  b.k(b.v({{3, 2}}));
  for (auto& s : sign_vectors(3)) b.pm(b.v({{0, 1}, {1, s[0]}, {2, s[1]}, {3, s[2]}}));
  for (size_t i = 0; i < 3; ++i) {
    b.pm(b.v({{i, 1}, {3, 1}}));
    b.pm(b.v({{i, 1}, {3, -1}}));
  }
  b.bc_dom(0, 3);
  b.dom(b.v({{3, 1}}));
  b.d.label = "f4(4)";
  return b.d;
}

RootDatum build_f4_20() {
  Builder b(4);
  b.d_roots(0, 4);
  for (size_t i = 0; i < 4; ++i) b.k(b.v({{i, 1}}));
  for (auto& s : sign_vectors(3))
    b.pm(b.v({{0, half}, {1, half * s[0]}, {2, half * s[1]}, {3, half * s[2]}}));
  b.bc_dom(0, 4);
  b.d.label = "f4(-20)";
  return b.d;
}

RootDatum build_e6_2() {
  Builder b(7);
  b.a_roots(0, 6);
  b.k(b.v({{6, 2}}));
  for (auto& s : sign_vectors(6)) {
    if (count_minus(s) != 3) continue;
    RatVec w = zeros(7);
    for (size_t i = 0; i < 6; ++i) w[i] = half * s[i];
    for (int e : {1, -1}) {
      RatVec x = w;
      x[6] = e;
      b.d.p_weights.push_back({x, 1});
    }
  }
  b.a_dom(0, 6);
  b.dom(b.v({{6, 1}}));
  RatVec c(7, Rat(1));
  c[6] = 0;
  b.d.constraints.push_back(c);
  b.d.label = "e6(2)";
  return b.d;
}

RootDatum build_e6_14() {
  Builder b(6);
  b.d_roots(0, 5);
  for (auto& s : sign_vectors(6)) {
    if (count_minus(s) % 2 == 0) continue;
    RatVec w = zeros(6);
    for (size_t i = 0; i < 6; ++i) w[i] = half * s[i];
    b.d.p_weights.push_back({w, 1});
  }
  b.d_dom(0, 5);
  b.d.hermitian = HermitianData{b.v({{5, 1}}), {}, {}};
  b.d.label = "e6(-14)";
  return b.d;
}

RootDatum build_e7_5() {
  Builder b(7);
  b.d_roots(0, 6);
  b.k(b.v({{6, 2}}));
  for (auto& s : sign_vectors(6)) {
    if (count_minus(s) % 2 == 0) continue;
    RatVec w = zeros(7);
    for (size_t i = 0; i < 6; ++i) w[i] = half * s[i];
    for (int e : {1, -1}) {
      RatVec x = w;
      x[6] = e;
      b.d.p_weights.push_back({x, 1});
    }
  }
  b.d_dom(0, 6);
  b.dom(b.v({{6, 1}}));
  b.d.label = "e7(-5)";
  return b.d;
}

RootDatum build_e7_25() {
  Builder b(8);
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < i; ++j) {
      b.k(b.v({{i, 1}, {j, 1}}));
      b.k(b.v({{i, 1}, {j, -1}}));
    }
  for (auto& s : sign_vectors(5)) {
    if (count_minus(s) % 2) continue;
    RatVec w = b.v({{7, half}, {6, -half}, {5, -half}});
    for (size_t i = 0; i < 5; ++i) w[i] = half * s[i];
    b.k(w);
  }
  for (size_t i = 0; i < 5; ++i) {
    b.pm(b.v({{5, 1}, {i, 1}}));
    b.pm(b.v({{5, 1}, {i, -1}}));
  }
  b.pm(b.v({{7, 1}, {6, -1}}));
  for (auto& s : sign_vectors(5)) {
    if (count_minus(s) % 2 == 0) continue;
    RatVec w = b.v({{7, half}, {6, -half}, {5, half}});
    for (size_t i = 0; i < 5; ++i) w[i] = half * s[i];
    b.pm(w);
  }
  // a5 >= ... >= a2 >= |a1|
  for (size_t i = 4; i >= 1; --i) b.dom(b.v({{i, 1}, {i - 1, -1}}));
  b.dom(b.v({{1, 1}, {0, 1}}));
  b.dom(b.v({{7, 1}, {6, -1}, {5, -1}, {4, -1}, {3, -1}, {2, -1}, {1, -1}, {0, 1}}));
  b.d.constraints.push_back(b.v({{6, 1}, {7, 1}}));
  b.d.hermitian = HermitianData{b.v({{5, 2}, {6, -1}, {7, 1}}), {}, {}};
  b.d.label = "e7(-25)";
  b.d.notes =
      "z = 2e6 - e7 + e8 is not printed; it pairs to 2 with every '+' weight and reproduces "
      "the holomorphic condition a6 >= a5 and the anti-holomorphic condition a8 <= a7";
  return b.d;
}

RootDatum build_e8_24() {
  Builder b(8);
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = 0; j < i; ++j) {
      b.k(b.v({{i, 1}, {j, 1}}));
      b.k(b.v({{i, 1}, {j, -1}}));
    }
  b.k(b.v({{7, 1}, {6, 1}}));
  b.k(b.v({{7, 1}, {6, -1}}));
  for (auto& s : sign_vectors(6)) {
    if (count_minus(s) % 2 == 0) continue;
    RatVec w = b.v({{7, half}, {6, -half}});
    for (size_t i = 0; i < 6; ++i) w[i] = half * s[i];
    b.k(w);
  }
  for (size_t i = 0; i < 6; ++i) {
    b.pm(b.v({{6, 1}, {i, 1}}));
    b.pm(b.v({{6, 1}, {i, -1}}));
  }
  for (size_t i = 0; i < 6; ++i) {
    b.pm(b.v({{7, 1}, {i, 1}}));
    b.pm(b.v({{7, 1}, {i, -1}}));
  }
  for (auto& s : sign_vectors(6)) {
    if (count_minus(s) % 2) continue;
    RatVec w = b.v({{7, half}, {6, half}});
    for (size_t i = 0; i < 6; ++i) w[i] = half * s[i];
    b.pm(w);
  }
  for (size_t i = 5; i >= 1; --i) b.dom(b.v({{i, 1}, {i - 1, -1}}));
  b.dom(b.v({{1, 1}, {0, 1}}));
  b.dom(b.v({{7, 1}, {6, -1}, {5, -1}, {4, -1}, {3, -1}, {2, -1}, {1, -1}, {0, 1}}));
  // simple root e7+e8 of the sl(2) factor
  b.dom(b.v({{7, 1}, {6, 1}}));
  b.d.label = "e8(-24)";
  b.d.notes = "dominance includes a7 + a8 >= 0 in addition to the six printed inequalities";
  return b.d;
}

const std::set<std::string> kUnsupported = {
    "slR", "sustar", "so1n", "slC_odd", "soC_odd", "spC", "g2_2", "e6_6", "e6m26",
    "e7_7", "e8_8", "g2C", "f4C", "e6C", "e7C", "e8C"};

void finish(RootDatum& d) {
  // simple roots: not a sum of two positive roots
  std::set<RatVec> pos(d.pos_k_roots.begin(), d.pos_k_roots.end());
  for (auto& r : d.pos_k_roots) {
    bool dec = false;
    for (auto& s : d.pos_k_roots) {
      if (pos.count(sub(r, s))) {
        dec = true;
        break;
      }
    }
    if (!dec) d.simple_k_roots.push_back(r);
  }
  std::set<RatVec> taken;
  for (size_t i = 0; i < d.p_weights.size(); ++i) {
    auto& w = d.p_weights[i].coeffs;
    if (is_zero(w) || taken.count(neg(w)) || taken.count(w)) continue;
    taken.insert(w);
    d.p_half.push_back(i);
  }
  if (d.hermitian) {
    auto& h = *d.hermitian;
    for (size_t i = 0; i < d.p_weights.size(); ++i) {
      int s = sgn(dot(d.p_weights[i].coeffs, h.z));
      if (s > 0) h.p_plus.push_back(i);
      if (s < 0) h.p_minus.push_back(i);
    }
  }
}

}  // namespace

const std::vector<std::string>& supported_algebras() {
  static const std::vector<std::string> ids = {
      "su",    "so2m2n", "so2m2n1", "so2m12n", "so2m12n1", "sp",    "sostar", "spR",   "slC",
      "soC",   "f4_4",   "f4m20",   "e6_2",    "e6m14",    "e7m5",  "e7m25",  "e8m24"};
  return ids;
}

std::vector<std::string> algebra_param_names(const std::string& id) {
  if (id == "su" || id == "sp" || id.rfind("so2m", 0) == 0) return {"m", "n"};
  if (id == "sostar" || id == "spR" || id == "slC" || id == "soC") return {"n"};
  return {};
}

RootDatum root_datum(const std::string& id, const Params& p) {
  if (kUnsupported.count(id)) throw UnsupportedAlgebra("no proper decomposable triple exists for " + id);
  auto ids = supported_algebras();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw UnsupportedAlgebra("unknown algebra " + id);
  auto keys = algebra_param_names(id);
  check_keys(p, keys);
  RootDatum d;
  if (id == "su") d = build_su(need(p, "m"), need(p, "n"));
  else if (id == "so2m2n") d = build_so_real(need(p, "m"), need(p, "n"), false, false);
  else if (id == "so2m2n1") d = build_so_real(need(p, "m"), need(p, "n"), false, true);
  else if (id == "so2m12n") d = build_so_real(need(p, "m"), need(p, "n"), true, false);
  else if (id == "so2m12n1") d = build_so_real(need(p, "m"), need(p, "n"), true, true);
  else if (id == "sp") d = build_sp(need(p, "m"), need(p, "n"));
  else if (id == "sostar") d = build_sostar(need(p, "n"));
  else if (id == "spR") d = build_spR(need(p, "n"));
  else if (id == "slC") d = build_slC(need(p, "n"));
  else if (id == "soC") d = build_soC(need(p, "n"));
  else if (id == "f4_4") d = build_f4_4();
  else if (id == "f4m20") d = build_f4_20();
  else if (id == "e6_2") d = build_e6_2();
  else if (id == "e6m14") d = build_e6_14();
  else if (id == "e7m5") d = build_e7_5();
  else if (id == "e7m25") d = build_e7_25();
  else d = build_e8_24();
  d.algebra_id = id;
  d.rank_params = p;
  finish(d);
  return d;
}

Rat pairing(const RootDatum& d, const RatVec& w, const RatVec& a) {
  if (w.size() != d.dim || a.size() != d.dim) throw StructuralError("dimension mismatch in pairing");
  return dot(w, a);
}

RatVec canonical(const RootDatum& d, const RatVec& a) {
  if (a.size() != d.dim) throw StructuralError("expected " + std::to_string(d.dim) + " coordinates");
  return canonicalize_mod(a, d.constraints);
}

bool is_dominant(const RootDatum& d, const RatVec& a) {
  if (a.size() != d.dim) throw StructuralError("expected " + std::to_string(d.dim) + " coordinates");
  for (auto& f : d.dominance)
    if (sgn(dot(f, a)) < 0) return false;
  return true;
}

RatVec require_dominant(const RootDatum& d, const RatVec& a) {
  RatVec c = canonical(d, a);
  if (!is_dominant(d, c)) throw DominanceError(vec_str(a) + " is not dominant for " + d.label);
  return c;
}

RatVec regular_dominant(const RootDatum& d) {
  if (d.simple_k_roots.empty()) return zeros(d.dim);
  auto cols = LinMap(d.simple_k_roots).transpose().rows();
  auto x = solve_row_combination(cols, RatVec(d.simple_k_roots.size(), Rat(1)));
  if (!x) throw StructuralError("simple roots of " + d.label + " are dependent");
  return canonical(d, *x);
}

Weight highest_p_weight(const RootDatum& d) {
  std::vector<size_t> pool;
  if (d.hermitian)
    pool = d.hermitian->p_plus;
  else
    for (size_t i = 0; i < d.p_weights.size(); ++i) pool.push_back(i);
  RatVec rho = regular_dominant(d);
  size_t best = pool.front();
  for (size_t i : pool)
    if (dot(d.p_weights[i].coeffs, rho) > dot(d.p_weights[best].coeffs, rho)) best = i;
  for (size_t i : pool)
    if (i != best && dot(d.p_weights[i].coeffs, rho) == dot(d.p_weights[best].coeffs, rho))
      throw StructuralError("highest weight of " + d.label + " is not unique");
  return d.p_weights[best];
}

std::optional<HermitianSplit> hermitian_split(const RootDatum& d) {
  if (!d.hermitian) return std::nullopt;
  HermitianSplit h;
  h.z = d.hermitian->z;
  for (size_t i : d.hermitian->p_plus) h.p_plus.push_back(d.p_weights[i]);
  for (size_t i : d.hermitian->p_minus) h.p_minus.push_back(d.p_weights[i]);
  return h;
}

}  // namespace branchdec
