#include "branchdec/pairs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace branchdec {

std::string provenance_str(Provenance p) { return p == Provenance::Paper ? "PAPER" : "DERIVED"; }

std::string appendix_b_str(AppendixB b) {
  switch (b) {
    case AppendixB::B1: return "B1";
    case AppendixB::B2: return "B2";
    default: return "none";
  }
}

bool SymmetricPair::in_table(const std::string& t) const {
  return std::find(tables.begin(), tables.end(), t) != tables.end();
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.ok; });
}

std::string ValidationReport::summary() const {
  std::string s;
  for (auto& c : checks) {
    s += (c.ok ? "pass " : "FAIL ") + c.name;
    if (!c.ok && !c.witness.empty()) s += " [" + c.witness + "]";
    s += "\n";
  }
  return s;
}

namespace {

std::string S(int x) { return std::to_string(x); }

int get(const Params& p, const std::string& key, std::optional<int> dflt = std::nullopt) {
  auto it = p.find(key);
  if (it != p.end()) return it->second;
  if (dflt) return *dflt;
  throw RankError("missing parameter " + key);
}

void require(bool cond, const std::string& what) {
  if (!cond) throw RankError("parameter range: " + what);
}

// signed permutation of coordinates: sigma(e_i) = sg[i] * e_{to[i]}
struct SignedPerm {
  std::vector<size_t> to;
  std::vector<int> sg;
  explicit SignedPerm(size_t n) : to(n), sg(n, 1) {
    for (size_t i = 0; i < n; ++i) to[i] = i;
  }
  void swap(size_t i, size_t j, int s) {
    to[i] = j, sg[i] = s;
    to[j] = i, sg[j] = s;
  }
  void negate(size_t i) { sg[i] = -sg[i]; }
  LinMap map() const {
    LinMap m(to.size(), to.size());
    for (size_t i = 0; i < to.size(); ++i) m.at(to[i], i) = sg[i];
    return m;
  }
};

// pairs (lo+2i, lo+2i+1), i < count: e_{2i-1} -> s e_{2i}
void pair_swaps(SignedPerm& sp, size_t lo, size_t count, int s) {
  for (size_t i = 0; i < count; ++i) sp.swap(lo + 2 * i, lo + 2 * i + 1, s);
}
// reverse the outer r entries of [lo, lo+len)
void outer_reverse(SignedPerm& sp, size_t lo, size_t len, size_t r, int s = 1) {
  for (size_t i = 0; i < r; ++i) sp.swap(lo + i, lo + len - 1 - i, s);
}

std::string so_algebra(int p, int q) {
  std::string id = "so2m";
  id += (p % 2) ? "12n" : "2n";
  if (q % 2) id += "1";
  return id;
}
Params so_params(int p, int q) { return {{"m", p / 2}, {"n", q / 2}}; }

LinMap refl(const RatVec& b) {
  size_t n = b.size();
  LinMap m = LinMap::identity(n);
  Rat bb = dot(b, b);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m.at(i, j) -= 2 * b[i] * b[j] / bb;
  return m;
}

// simple roots of k listed in a fixed order, so masks and permutations are stable
std::vector<RatVec> satake_frame(const RootDatum& d) {
  auto v = [&](std::initializer_list<std::pair<size_t, Rat>> t) {
    RatVec x = zeros(d.dim);
    for (auto& [i, c] : t) x[i] += c;
    return x;
  };
  Rat h(1, 2);
  const std::string& id = d.algebra_id;
  if (id == "f4_4") return {v({{0, 1}, {1, -1}}), v({{1, 1}, {2, -1}}), v({{2, 2}}), v({{3, 2}})};
  if (id == "f4m20") return {v({{0, 1}, {1, -1}}), v({{1, 1}, {2, -1}}), v({{2, 1}, {3, -1}}), v({{3, 1}})};
  if (id == "e6_2")
    return {v({{0, 1}, {1, -1}}), v({{1, 1}, {2, -1}}), v({{2, 1}, {3, -1}}), v({{3, 1}, {4, -1}}),
            v({{4, 1}, {5, -1}}), v({{6, 2}})};
  if (id == "e6m14")
    return {v({{0, 1}, {1, -1}}), v({{1, 1}, {2, -1}}), v({{2, 1}, {3, -1}}), v({{3, 1}, {4, 1}}),
            v({{3, 1}, {4, -1}})};
  if (id == "e7m5")
    return {v({{0, 1}, {1, -1}}), v({{1, 1}, {2, -1}}), v({{2, 1}, {3, -1}}), v({{3, 1}, {4, -1}}),
            v({{4, 1}, {5, 1}}),  v({{4, 1}, {5, -1}}), v({{6, 2}})};
  if (id == "e7m25" || id == "e8m24") {
    std::vector<RatVec> f = {v({{0, 1}, {1, 1}}), v({{0, -1}, {1, 1}}), v({{1, -1}, {2, 1}}),
                             v({{2, -1}, {3, 1}}), v({{3, -1}, {4, 1}})};
    if (id == "e8m24") f.push_back(v({{4, -1}, {5, 1}}));
    if (id == "e8m24") f.push_back(v({{6, 1}, {7, 1}}));
    RatVec s(8, -h);
    s[0] = h;
    s[7] = h;
    f.push_back(s);
    return f;
  }
  throw CatalogIntegrityError("no Satake frame for " + id);
}

// sigma = -w_B o pi, with pi permuting the frame and scaling the center by center_sign
LinMap satake_sigma(const RootDatum& d, const std::vector<size_t>& perm, int center_sign, unsigned mask) {
  auto frame = satake_frame(d);
  std::set<RatVec> simple(d.simple_k_roots.begin(), d.simple_k_roots.end());
  if (frame.size() != simple.size()) throw CatalogIntegrityError("Satake frame size for " + d.label);
  for (auto& f : frame)
    if (!simple.count(f)) throw CatalogIntegrityError("Satake frame root " + vec_str(f) + " is not simple");
  size_t n = d.dim, r = frame.size();
  std::vector<size_t> pi = perm.empty() ? std::vector<size_t>() : perm;
  if (pi.empty())
    for (size_t i = 0; i < r; ++i) pi.push_back(i);

  std::vector<RatVec> kill = frame;
  kill.insert(kill.end(), d.constraints.begin(), d.constraints.end());
  auto center = kernel(kill, n);

  std::vector<RatVec> basis, images;
  for (size_t i = 0; i < r; ++i) {
    basis.push_back(frame[i]);
    images.push_back(frame[pi[i]]);
  }
  for (auto& c : center) {
    basis.push_back(c);
    images.push_back(scale(Rat(center_sign), c));
  }
  for (auto& c : d.constraints) {
    basis.push_back(c);
    images.push_back(neg(c));
  }
  // row i of P solves row . basis_j = images_j[i]
  auto cols = LinMap(basis).transpose().rows();
  std::vector<RatVec> prow;
  for (size_t i = 0; i < n; ++i) {
    RatVec target(basis.size());
    for (size_t j = 0; j < basis.size(); ++j) target[j] = images[j][i];
    auto x = solve_row_combination(cols, target);
    if (!x) throw CatalogIntegrityError("Satake basis is singular for " + d.label);
    prow.push_back(*x);
  }
  LinMap P(prow);

  std::set<RatVec> pos(d.pos_k_roots.begin(), d.pos_k_roots.end());
  LinMap w = LinMap::identity(n);
  for (bool moved = true; moved;) {
    moved = false;
    for (size_t i = 0; i < r; ++i) {
      if (!(mask >> i & 1)) continue;
      if (pos.count(w.apply(frame[i]))) {
        w = w.compose(refl(frame[i]));
        moved = true;
        break;
      }
    }
  }
  LinMap s = w.compose(P);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) s.at(i, j) = -s.at(i, j);
  return s;
}

struct Exceptional {
  std::string algebra, sub;
  std::vector<size_t> perm;
  int center_sign;
  unsigned mask;
  size_t k_sigma_dim;
  std::vector<std::string> tables;
  AppendixB b;
  std::string assoc;
};

const std::map<std::string, Exceptional>& exceptional_table() {
  using V = std::vector<size_t>;
  const V a5rev = {4, 3, 2, 1, 0, 5};
  const V d5 = {0, 1, 2, 4, 3};
  const V e6 = {0, 3, 2, 1, 5, 4};
  static const std::map<std::string, Exceptional> t = {
      {"f4_4_sp21", {"f4_4", "sp(2,1)+su(2)", {}, 1, 0b1101, 16, {"T3"}, AppendixB::None, "f4_4_so54"}},
      {"f4_4_so54", {"f4_4", "so(5,4)", {}, 1, 0b1101, 16, {"T3"}, AppendixB::None, "f4_4_sp21"}},
      {"f4m20_so81", {"f4m20", "so(8,1)", {}, 1, 0b1110, 28, {"T4"}, AppendixB::None, ""}},
      {"e6_2_so64", {"e6_2", "so(6,4)+so(2)", a5rev, 1, 0b100100, 22, {"T3"}, AppendixB::None, "e6_2_su42"}},
      {"e6_2_su42", {"e6_2", "su(4,2)+su(2)", a5rev, 1, 0b100100, 22, {"T3"}, AppendixB::None, "e6_2_so64"}},
      {"e6_2_sp31", {"e6_2", "sp(3,1)", {}, 1, 0b110101, 24, {"T3"}, AppendixB::None, "e6_2_f44"}},
      {"e6_2_f44", {"e6_2", "f4(4)", {}, 1, 0b110101, 24, {"T3"}, AppendixB::None, "e6_2_sp31"}},
      {"e6_2_sostar10", {"e6_2", "so*(10)+so(2)", a5rev, 1, 0b1110, 26, {"T4"}, AppendixB::None, ""}},
      {"e6_2_su33", {"e6_2", "su(3,3)+sl(2,R)", a5rev, 1, 0, 18, {"T5"}, AppendixB::B1, "e6_2_su33"}},
      {"e6m14_so28", {"e6m14", "so(2,8)+so(2)", d5, -1, 0b11100, 30, {"T2", "T4"}, AppendixB::None, ""}},
      {"e6m14_su42", {"e6m14", "su(4,2)+su(2)", d5, -1, 0, 22, {"T2"}, AppendixB::B2, "e6m14_su42"}},
      {"e6m14_sostar10", {"e6m14", "so*(10)+so(2)", d5, -1, 0b101, 26, {"T2"}, AppendixB::B2, "e6m14_su51"}},
      {"e6m14_su51", {"e6m14", "su(5,1)+sl(2,R)", d5, -1, 0b101, 26, {"T2"}, AppendixB::B2, "e6m14_sostar10"}},
      {"e6m14_f4", {"e6m14", "f4(-20)", {}, 1, 0b11110, 36, {"T4"}, AppendixB::None, ""}},
      {"e7m5_so84", {"e7m5", "so(8,4)+su(2)", {}, 1, 0b1110000, 37, {"T3"}, AppendixB::None, ""}},
      {"e7m5_su62", {"e7m5", "su(6,2)", {}, 1, 0b1010101, 39, {"T3"}, AppendixB::None, ""}},
      {"e7m5_e62", {"e7m5", "e6(2)+so(2)", {}, 1, 0b1100101, 39, {"T3"}, AppendixB::None, ""}},
      {"e7m5_e6m14", {"e7m5", "e6(-14)+so(2)", {}, 1, 0b111100, 47, {"T4"}, AppendixB::None, ""}},
      {"e7m5_sostar12",
       {"e7m5", "so*(12)+sl(2,R)", {}, 1, 0b10101, 37, {"T5"}, AppendixB::B1, "e7m5_sostar12"}},
      {"e7m25_e6m14", {"e7m25", "e6(-14)+so(2)", e6, -1, 0b1110, 47, {"T2"}, AppendixB::B2, "e7m25_so210"}},
      {"e7m25_so210",
       {"e7m25", "so(2,10)+sl(2,R)", e6, -1, 0b1110, 47, {"T2"}, AppendixB::B2, "e7m25_e6m14"}},
      {"e7m25_su62", {"e7m25", "su(6,2)", e6, -1, 0, 39, {"T2"}, AppendixB::B2, "e7m25_sostar12"}},
      {"e7m25_sostar12", {"e7m25", "so*(12)+su(2)", e6, -1, 0, 39, {"T2"}, AppendixB::B2, "e7m25_su62"}},
      {"e7m25_e6m26", {"e7m25", "e6(-26)+R", {}, 1, 0b1111, 52, {"T5"}, AppendixB::B1, "e7m25_e6m26"}},
      {"e8m24_so124", {"e8m24", "so(12,4)", {}, 1, 0b1101001, 72, {"T3"}, AppendixB::None, "e8m24_e7m5"}},
      {"e8m24_e7m5", {"e8m24", "e7(-5)+su(2)", {}, 1, 0b1101001, 72, {"T3"}, AppendixB::None, "e8m24_so124"}},
      {"e8m24_e7m25",
       {"e8m24", "e7(-25)+sl(2,R)", {}, 1, 0b1111, 80, {"T5"}, AppendixB::B1, "e8m24_e7m25"}},
  };
  return t;
}

// named sigma = theta entries
const std::map<std::string, std::pair<std::string, std::string>>& named_theta() {
  static const std::map<std::string, std::pair<std::string, std::string>> t = {
      {"e6m14_so10", {"e6m14", "so(10)+so(2)"}},
      {"e7m25_e6c", {"e7m25", "e6(-78)+so(2)"}},
  };
  return t;
}

struct Family {
  std::vector<std::string> params;
  std::function<SymmetricPair(const Params&)> build;
};

SymmetricPair base(const std::string& algebra, const Params& ap) {
  SymmetricPair sp;
  sp.datum = root_datum(algebra, ap);
  return sp;
}

void set_assoc(SymmetricPair& p, const std::string& id, const Params& prm) {
  p.assoc_id = id;
  p.assoc_params = prm;
}

const std::map<std::string, Family>& families() {
  static const std::map<std::string, Family> f = [] {
    std::map<std::string, Family> f;

    // su(m,n) ---------------------------------------------------------------
    f["su_mk"] = {{"m", "n", "k"}, [](const Params& p) {
                    int m = get(p, "m"), n = get(p, "n"), k = get(p, "k");
                    require(m >= 1 && n >= 2 && k >= 1 && k <= n - 1, "m>=1, 1<=k<=n-1");
                    auto sp = base("su", {{"m", m}, {"n", n}});
                    SignedPerm s(m + n);
                    outer_reverse(s, m, n, std::min(k, n - k));
                    sp.sigma = s.map();
                    sp.subalgebra_label = "su(" + S(m) + "," + S(k) + ")+su(" + S(n - k) + ")+u(1)";
                    sp.provenance = Provenance::Paper;
                    sp.tables = {"T2", "T3"};
                    set_assoc(sp, "su_mk", {{"m", m}, {"n", n}, {"k", n - k}});
                    return sp;
                  }};
    f["su_kl"] = {{"m", "n", "k", "l"}, [](const Params& p) {
                    int m = get(p, "m"), n = get(p, "n"), k = get(p, "k"), l = get(p, "l");
                    require(k >= 1 && l >= 1 && m - k >= 1 && n - l >= 1, "k,l,m-k,n-l>=1");
                    auto sp = base("su", {{"m", m}, {"n", n}});
                    SignedPerm s(m + n);
                    outer_reverse(s, 0, m, std::min(k, m - k));
                    outer_reverse(s, m, n, std::min(l, n - l));
                    sp.sigma = s.map();
                    sp.subalgebra_label =
                        "su(" + S(k) + "," + S(l) + ")+su(" + S(m - k) + "," + S(n - l) + ")+u(1)";
                    sp.tables = {"T2"};
                    sp.appendix_b = AppendixB::B2;
                    set_assoc(sp, "su_kl", {{"m", m}, {"n", n}, {"k", k}, {"l", n - l}});
                    return sp;
                  }};
    f["su_slC"] = {{"n"}, [](const Params& p) {
                     int n = get(p, "n");
                     require(n >= 1, "n>=1");
                     auto sp = base("su", {{"m", n}, {"n", n}});
                     SignedPerm s(2 * n);
                     outer_reverse(s, 0, 2 * n, n);
                     sp.sigma = s.map();
                     sp.subalgebra_label = "sl(" + S(n) + ",C)+R";
                     sp.tables = {"T5"};
                     if (n >= 2) sp.appendix_b = AppendixB::B1;
                     set_assoc(sp, "su_slC", p);
                     return sp;
                   }};
    auto su_nn = [](const std::string& sub, const std::string& partner) {
      return Family{{"n"}, [sub, partner](const Params& p) {
                      int n = get(p, "n");
                      require(n >= 2, "n>=2");
                      auto sp = base("su", {{"m", n}, {"n", n}});
                      SignedPerm s(2 * n);
                      for (int i = 0; i < n; ++i) s.swap(i, n + i, -1);
                      sp.sigma = s.map();
                      sp.subalgebra_label = sub == "so*" ? "so*(" + S(2 * n) + ")" : "sp(" + S(n) + ",R)";
                      sp.tables = {"T2"};
                      sp.appendix_b = AppendixB::B2;
                      set_assoc(sp, partner, p);
                      return sp;
                    }};
    };
    f["su_sostar"] = su_nn("so*", "su_spR");
    f["su_spR"] = su_nn("spR", "su_sostar");
    f["su_sp"] = {{"m", "n"}, [](const Params& p) {
                    int m = get(p, "m"), n = get(p, "n");
                    require(m >= 1 && n >= 1, "m,n>=1");
                    auto sp = base("su", {{"m", 2 * m}, {"n", 2 * n}});
                    SignedPerm s(2 * m + 2 * n);
                    pair_swaps(s, 0, m, -1);
                    pair_swaps(s, 2 * m, n, -1);
                    sp.sigma = s.map();
                    sp.subalgebra_label = "sp(" + S(m) + "," + S(n) + ")";
                    sp.tables = {"T4"};
                    if (m == 1 || n == 1) sp.tables.insert(sp.tables.begin(), "T3");
                    set_assoc(sp, "su_sp", p);
                    return sp;
                  }};

    // so(p,q) ---------------------------------------------------------------
    f["so_kl"] = {{"p", "q", "k", "l"}, [](const Params& p) {
                    int P = get(p, "p"), Q = get(p, "q"), k = get(p, "k"), l = get(p, "l");
                    require(P >= 2 && Q >= 2, "p,q>=2");
                    require(k >= 0 && k <= P && l >= 0 && l <= Q, "0<=k<=p, 0<=l<=q");
                    int r1 = std::min(k, P - k), r2 = std::min(l, Q - l);
                    require(r1 + r2 > 0, "proper subalgebra");
                    if (r1 > 0 && r2 == 0) throw RankError("list the undivided block first: use so(q,p)");
                    auto sp = base(so_algebra(P, Q), so_params(P, Q));
                    size_t h1 = P / 2;
                    SignedPerm s(sp.datum.dim);
                    for (int i = 0; i < r1; ++i) s.negate(i);
                    for (int i = 0; i < r2; ++i) s.negate(h1 + i);
                    sp.sigma = s.map();
                    sp.subalgebra_label = "so(" + S(k) + "," + S(l) + ")+so(" + S(P - k) + "," + S(Q - l) + ")";
                    if (r1 == 0) {
                      int kk = std::max(k, P - k), ll = (k == P) ? l : Q - l;
                      sp.subalgebra_label = "so(" + S(kk) + "," + S(ll) + ")+so(" + S(Q - ll) + ")";
                      if (P == 2) {
                        sp.tables.push_back("T2");
                        sp.appendix_b = AppendixB::B2;
                      }
                      sp.tables.push_back(P % 2 == 0 ? "T3" : "T4");
                    } else {
                      sp.tables = {"T5"};
                      if (std::max(std::abs(P - 2 * k), std::abs(Q - 2 * l)) >= 2) sp.appendix_b = AppendixB::B1;
                    }
                    set_assoc(sp, "so_kl", {{"p", P}, {"q", Q}, {"k", k}, {"l", Q - l}});
                    return sp;
                  }};
    f["so_u"] = {{"m", "n", "x", "y"}, [](const Params& p) {
                   int m = get(p, "m"), n = get(p, "n"), x = get(p, "x", 1), y = get(p, "y", 1);
                   require(m >= 1 && n >= 1, "m,n>=1");
                   require((x == 1 || x == 2) && (y == 1 || y == 2), "x,y in {1,2}");
                   auto sp = base("so2m2n", {{"m", m}, {"n", n}});
                   SignedPerm s(m + n);
                   auto diii = [&](size_t lo, int len, int variant) {
                     for (int i = 0; i < len / 2; ++i)
                       s.swap(lo + 2 * i, lo + 2 * i + 1, (i == 0 && variant == 2) ? 1 : -1);
                   };
                   diii(0, m, x);
                   diii(m, n, y);
                   sp.sigma = s.map();
                   sp.subalgebra_label = "u(" + S(m) + "," + S(n) + ")";
                   if (m == 2 && n == 2)
                     sp.subalgebra_label += "_" + S(x) + S(y);
                   else if (m == 2)
                     sp.subalgebra_label += "_" + S(x);
                   else if (n == 2)
                     sp.subalgebra_label += "_" + S(y);
                   if (m == 2 || n == 2) sp.provenance = Provenance::Paper;
                   if (m == 1 || n == 1) sp.tables.push_back("T2");
                   if (m == 2 || n == 2) sp.tables.push_back("T3");
                   sp.tables.push_back("T4");
                   Params ap = {{"m", m}, {"n", n}, {"x", x}, {"y", y}};
                   set_assoc(sp, "so_u", ap);
                   return sp;
                 }};
    auto so_nn = [](bool complex_form) {
      return Family{{"n"}, [complex_form](const Params& p) {
                      int n = get(p, "n");
                      require(n >= 2, "n>=2");
                      auto sp = base(so_algebra(n, n), so_params(n, n));
                      size_t h = n / 2;
                      SignedPerm s(2 * h);
                      for (size_t i = 0; i < h; ++i) s.swap(i, h + i, -1);
                      sp.sigma = s.map();
                      sp.subalgebra_label = complex_form ? "so(" + S(n) + ",C)" : "gl(" + S(n) + ",R)";
                      if (n >= 3) {
                        sp.tables = {"T5"};
                        sp.appendix_b = AppendixB::B1;
                      }
                      set_assoc(sp, complex_form ? "so_gl" : "so_C", p);
                      return sp;
                    }};
    };
    f["so_C"] = so_nn(true);
    f["so_gl"] = so_nn(false);

    // sp(m,n) ---------------------------------------------------------------
    f["sp_mk"] = {{"m", "n", "k"}, [](const Params& p) {
                    int m = get(p, "m"), n = get(p, "n"), k = get(p, "k");
                    require(m >= 1 && n >= 2 && k >= 1 && k <= n - 1, "m>=1, 1<=k<=n-1");
                    auto sp = base("sp", {{"m", m}, {"n", n}});
                    SignedPerm s(m + n);
                    pair_swaps(s, m, std::min(k, n - k), -1);
                    sp.sigma = s.map();
                    sp.subalgebra_label = "sp(" + S(m) + "," + S(k) + ")+sp(" + S(n - k) + ")";
                    sp.tables = {"T3", "T4"};
                    set_assoc(sp, "sp_mk", {{"m", m}, {"n", n}, {"k", n - k}});
                    return sp;
                  }};
    f["sp_kl"] = {{"m", "n", "k", "l"}, [](const Params& p) {
                    int m = get(p, "m"), n = get(p, "n"), k = get(p, "k"), l = get(p, "l");
                    require(k >= 1 && l >= 1 && m - k >= 1 && n - l >= 1, "k,l,m-k,n-l>=1");
                    auto sp = base("sp", {{"m", m}, {"n", n}});
                    SignedPerm s(m + n);
                    pair_swaps(s, 0, std::min(k, m - k), -1);
                    pair_swaps(s, m, std::min(l, n - l), -1);
                    sp.sigma = s.map();
                    sp.subalgebra_label =
                        "sp(" + S(k) + "," + S(l) + ")+sp(" + S(m - k) + "," + S(n - l) + ")";
                    sp.tables = {"T4"};
                    set_assoc(sp, "sp_kl", {{"m", m}, {"n", n}, {"k", k}, {"l", n - l}});
                    return sp;
                  }};
    auto sp_nn = [](bool complex_form) {
      return Family{{"n"}, [complex_form](const Params& p) {
                      int n = get(p, "n");
                      require(n >= 1, "n>=1");
                      auto sp = base("sp", {{"m", n}, {"n", n}});
                      SignedPerm s(2 * n);
                      for (int i = 0; i < n; ++i) s.swap(i, n + i, -1);
                      sp.sigma = s.map();
                      sp.subalgebra_label = complex_form ? "sp(" + S(n) + ",C)" : "su*(" + S(2 * n) + ")+R";
                      sp.tables = {"T5"};
                      sp.appendix_b = AppendixB::B1;
                      set_assoc(sp, complex_form ? "sp_sustar" : "sp_spC", p);
                      return sp;
                    }};
    };
    f["sp_spC"] = sp_nn(true);
    f["sp_sustar"] = sp_nn(false);

    // so*(2n) ---------------------------------------------------------------
    auto sostar_m = [](bool unitary) {
      return Family{{"n", "m"}, [unitary](const Params& p) {
                      int n = get(p, "n"), m = get(p, "m");
                      require(n >= 3 && m >= 1 && m <= n - 1, "n>=3, 1<=m<=n-1");
                      auto sp = base("sostar", {{"n", n}});
                      SignedPerm s(n);
                      outer_reverse(s, 0, n, std::min(m, n - m));
                      sp.sigma = s.map();
                      sp.subalgebra_label = unitary ? "u(" + S(m) + "," + S(n - m) + ")"
                                                    : "so*(" + S(2 * m) + ")+so*(" + S(2 * n - 2 * m) + ")";
                      sp.tables = {"T2"};
                      if (std::min(m, n - m) == 1) sp.tables.push_back("T4");
                      if (std::min(m, n - m) >= 2) sp.appendix_b = AppendixB::B2;
                      set_assoc(sp, unitary ? "sostar_sostar" : "sostar_u", p);
                      return sp;
                    }};
    };
    f["sostar_u"] = sostar_m(true);
    f["sostar_sostar"] = sostar_m(false);
    f["sostar_sustar"] = {{"n"}, [](const Params& p) {
                            int n = get(p, "n");
                            require(n >= 2, "n>=2");
                            auto sp = base("sostar", {{"n", 2 * n}});
                            SignedPerm s(2 * n);
                            pair_swaps(s, 0, n, -1);
                            sp.sigma = s.map();
                            sp.subalgebra_label = "su*(" + S(2 * n) + ")+R";
                            sp.tables = {"T5"};
                            sp.appendix_b = AppendixB::B1;
                            set_assoc(sp, "sostar_sustar", p);
                            return sp;
                          }};

    // sp(n,R) ---------------------------------------------------------------
    auto spR_m = [](bool unitary) {
      return Family{{"n", "m"}, [unitary](const Params& p) {
                      int n = get(p, "n"), m = get(p, "m");
                      require(n >= 2 && m >= 1 && m <= n - 1, "n>=2, 1<=m<=n-1");
                      auto sp = base("spR", {{"n", n}});
                      SignedPerm s(n);
                      outer_reverse(s, 0, n, std::min(m, n - m));
                      sp.sigma = s.map();
                      sp.subalgebra_label = unitary ? "u(" + S(m) + "," + S(n - m) + ")"
                                                    : "sp(" + S(m) + ",R)+sp(" + S(n - m) + ",R)";
                      sp.tables = {"T2"};
                      sp.appendix_b = AppendixB::B2;
                      set_assoc(sp, unitary ? "spR_sp" : "spR_u", p);
                      return sp;
                    }};
    };
    f["spR_u"] = spR_m(true);
    f["spR_sp"] = spR_m(false);
    f["spR_spC"] = {{"n"}, [](const Params& p) {
                      int n = get(p, "n");
                      require(n >= 1, "n>=1");
                      auto sp = base("spR", {{"n", 2 * n}});
                      SignedPerm s(2 * n);
                      pair_swaps(s, 0, n, -1);
                      sp.sigma = s.map();
                      sp.subalgebra_label = "sp(" + S(n) + ",C)";
                      sp.tables = {n >= 2 ? "T5" : "T4"};
                      return sp;
                    }};

    // sl(2n,C) --------------------------------------------------------------
    auto slC_aii = [](bool complex_form) {
      return Family{{"n"}, [complex_form](const Params& p) {
                      int n = get(p, "n");
                      require(n >= 2, "n>=2");
                      auto sp = base("slC", {{"n", n}});
                      SignedPerm s(2 * n);
                      pair_swaps(s, 0, n, -1);
                      sp.sigma = s.map();
                      sp.subalgebra_label = complex_form ? "sp(" + S(n) + ",C)" : "su*(" + S(2 * n) + ")";
                      sp.tables = {"T4"};
                      set_assoc(sp, complex_form ? "slC_sustar" : "slC_sp", p);
                      return sp;
                    }};
    };
    f["slC_sp"] = slC_aii(true);
    f["slC_sustar"] = slC_aii(false);
    auto slC_block = [](bool complex_form) {
      return Family{{"n", "m"}, [complex_form](const Params& p) {
                      int n = get(p, "n"), m = get(p, "m");
                      require(n >= 1 && m >= 1 && m <= 2 * n - 1, "1<=m<=2n-1");
                      auto sp = base("slC", {{"n", n}});
                      SignedPerm s(2 * n);
                      outer_reverse(s, 0, 2 * n, std::min(m, 2 * n - m));
                      sp.sigma = s.map();
                      sp.subalgebra_label = complex_form
                                                ? "sl(" + S(m) + ",C)+sl(" + S(2 * n - m) + ",C)+C"
                                                : "su(" + S(m) + "," + S(2 * n - m) + ")";
                      sp.tables = {"T5"};
                      sp.appendix_b = AppendixB::B1;
                      set_assoc(sp, complex_form ? "slC_su" : "slC_sl", p);
                      return sp;
                    }};
    };
    f["slC_sl"] = slC_block(true);
    f["slC_su"] = slC_block(false);

    // so(2n,C) --------------------------------------------------------------
    auto soC_block = [](bool complex_form) {
      return Family{{"n", "m"}, [complex_form](const Params& p) {
                      int n = get(p, "n"), m = get(p, "m");
                      require(n >= 2 && m >= 1 && m <= 2 * n - 1, "n>=2, 1<=m<=2n-1");
                      auto sp = base("soC", {{"n", n}});
                      SignedPerm s(n);
                      for (int i = 0; i < std::min(m, 2 * n - m); ++i) s.negate(i);
                      sp.sigma = s.map();
                      sp.subalgebra_label = complex_form ? "so(" + S(m) + ",C)+so(" + S(2 * n - m) + ",C)"
                                                         : "so(" + S(m) + "," + S(2 * n - m) + ")";
                      if (m == 1 || m == 2 * n - 1) {
                        sp.subalgebra_label = complex_form ? "so(" + S(2 * n - 1) + ",C)"
                                                           : "so(" + S(2 * n - 1) + ",1)";
                        sp.tables = {"T4"};
                      } else {
                        sp.tables = {"T5"};
                        if (std::abs(2 * n - 2 * m) >= 2) sp.appendix_b = AppendixB::B1;
                      }
                      set_assoc(sp, complex_form ? "soC_sor" : "soC_so", p);
                      return sp;
                    }};
    };
    f["soC_so"] = soC_block(true);
    f["soC_sor"] = soC_block(false);
    auto soC_diii = [](bool complex_form) {
      return Family{{"n"}, [complex_form](const Params& p) {
                      int n = get(p, "n");
                      require(n >= 2, "n>=2");
                      auto sp = base("soC", {{"n", n}});
                      SignedPerm s(n);
                      pair_swaps(s, 0, n / 2, -1);
                      sp.sigma = s.map();
                      sp.subalgebra_label = complex_form ? "gl(" + S(n) + ",C)" : "so*(" + S(2 * n) + ")";
                      if (n >= 3) sp.tables = {"T5"};
                      // n = 3: listed as sl(4,C)/sl(1,C)+sl(3,C)+C and sl(4,C)/su(3,1)
                      if (n >= 3) sp.appendix_b = AppendixB::B1;
                      set_assoc(sp, complex_form ? "soC_sostar" : "soC_gl", p);
                      return sp;
                    }};
    };
    f["soC_gl"] = soC_diii(true);
    f["soC_sostar"] = soC_diii(false);

    // exceptional -----------------------------------------------------------
    for (auto& [id, e] : exceptional_table()) {
      f[id] = {{}, [id = id, e = e](const Params&) {
                 auto sp = base(e.algebra, {});
                 sp.sigma = satake_sigma(sp.datum, e.perm, e.center_sign, e.mask);
                 sp.subalgebra_label = e.sub;
                 sp.k_sigma_dim = e.k_sigma_dim;
                 sp.tables = e.tables;
                 sp.appendix_b = e.b;
                 if (id == "f4m20_so81") sp.provenance = Provenance::Paper;
                 if (!e.assoc.empty()) set_assoc(sp, e.assoc, {});
                 sp.notes = "sigma = -w_B o pi from Satake data";
                 return sp;
               }};
    }
    for (auto& [id, e] : named_theta()) {
      f[id] = {{}, [e = e](const Params&) {
                 auto sp = base(e.first, {});
                 sp.sigma = LinMap::identity(sp.datum.dim);
                 sp.sigma_is_theta = true;
                 sp.subalgebra_label = e.second;
                 sp.tables = {"T2"};
                 return sp;
               }};
    }
    for (auto& alg : supported_algebras()) {
      f["theta_" + alg] = {algebra_param_names(alg), [alg = alg](const Params& p) {
                             auto sp = base(alg, p);
                             sp.sigma = LinMap::identity(sp.datum.dim);
                             sp.sigma_is_theta = true;
                             sp.subalgebra_label = "k";
                             return sp;
                           }};
    }
    return f;
  }();
  return f;
}

bool in_span(const std::vector<RatVec>& rows, const RatVec& v) { return in_row_space(rows, v); }

}  // namespace

const std::vector<std::string>& pair_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (auto& [k, f] : families()) v.push_back(k);
    return v;
  }();
  return ids;
}

std::vector<std::string> pair_param_names(const std::string& pair_id) {
  auto it = families().find(pair_id);
  if (it == families().end()) throw UnknownPair("unknown pair " + pair_id);
  return it->second.params;
}

SymmetricPair symmetric_pair(const std::string& pair_id, const Params& params) {
  auto it = families().find(pair_id);
  if (it == families().end()) throw UnknownPair("unknown pair " + pair_id);
  auto& names = it->second.params;
  for (auto& [k, v] : params) {
    (void)v;
    if (std::find(names.begin(), names.end(), k) == names.end())
      throw RankError("unexpected parameter " + k + " for " + pair_id);
  }
  SymmetricPair sp = it->second.build(params);
  sp.pair_id = pair_id;
  sp.params = params;
  auto rep = validate_pair(sp);
  if (!rep.ok()) throw CatalogIntegrityError(sp.label() + " fails validation:\n" + rep.summary());
  return sp;
}

SymmetricPair associated_pair(const SymmetricPair& p) {
  if (!p.assoc_id.empty()) {
    auto q = symmetric_pair(p.assoc_id, p.assoc_params);
    if (!(q.sigma == p.sigma)) throw CatalogIntegrityError("associated pair of " + p.label() + " has another sigma");
    return q;
  }
  SymmetricPair q = p;
  const std::string mark = "theta-sigma partner of ";
  if (p.assoc_label.empty()) {
    q.assoc_label = p.subalgebra_label;
    q.subalgebra_label = mark + p.subalgebra_label;
    q.pair_id = p.pair_id + "~";
  } else {
    q.subalgebra_label = p.assoc_label;
    q.assoc_label.clear();
    q.pair_id = p.pair_id.substr(0, p.pair_id.size() - 1);
  }
  return q;
}

RatVec sigma_weight(const SymmetricPair& p, const RatVec& w) { return p.sigma.apply_transpose(w); }

RatVec sigma_point(const SymmetricPair& p, const RatVec& a) { return canonical(p.datum, p.sigma.apply(a)); }

bool is_holomorphic_type(const SymmetricPair& p) {
  if (!p.datum.hermitian) return false;
  auto& z = p.datum.hermitian->z;
  return in_span(p.datum.constraints, sub(p.sigma.apply(z), z));
}

EigenspaceData eigenspaces(const SymmetricPair& p) {
  size_t n = p.datum.dim;
  auto& C = p.datum.constraints;
  auto perp = kernel(C, n);
  EigenspaceData e;
  for (int s : {1, -1}) {
    std::vector<RatVec> rows = C;
    for (auto& w : perp) {
      RatVec r = p.sigma.apply_transpose(w);
      rows.push_back(s == 1 ? sub(r, w) : add(r, w));
    }
    auto k = kernel(rows, n);
    for (auto& v : k) v = primitive_integer(v);
    (s == 1 ? e.t_sigma_basis : e.t_minus_sigma_basis) = k;
  }
  return e;
}

ValidationReport validate_pair(const SymmetricPair& p) {
  ValidationReport rep;
  auto& d = p.datum;
  size_t n = d.dim;
  auto add_check = [&](const std::string& name, bool ok, const std::string& w) {
    rep.checks.push_back({name, ok, ok ? "" : w});
  };

  bool shape = p.sigma.domain_dim() == n && p.sigma.codomain_dim() == n;
  add_check("sigma has the datum dimension", shape,
            S(int(p.sigma.codomain_dim())) + "x" + S(int(p.sigma.domain_dim())));
  if (!shape) return rep;

  {
    std::string bad;
    for (size_t i = 0; i < n && bad.empty(); ++i) {
      RatVec e = unit(n, i);
      if (!in_span(d.constraints, sub(p.sigma.apply(p.sigma.apply(e)), e))) bad = "e" + S(int(i + 1));
    }
    add_check("sigma is an involution", bad.empty(), bad);
  }
  {
    std::string bad;
    for (auto& c : d.constraints)
      if (bad.empty() && !in_span(d.constraints, p.sigma.apply(c))) bad = vec_str(c);
    add_check("sigma preserves the constraint span", bad.empty(), bad);
  }

  std::vector<RatVec> allk;
  for (auto& r : d.pos_k_roots) {
    allk.push_back(r);
    allk.push_back(neg(r));
  }
  std::set<RatVec> kset(allk.begin(), allk.end());
  {
    std::string bad;
    for (auto& r : allk)
      if (bad.empty() && !kset.count(sigma_weight(p, r))) bad = vec_str(r);
    add_check("sigma permutes Delta(k)", bad.empty(), bad);
  }
  {
    std::vector<RatVec> orig, img;
    for (auto& w : d.p_weights) {
      orig.push_back(w.coeffs);
      img.push_back(sigma_weight(p, w.coeffs));
    }
    std::multiset<RatVec> have(orig.begin(), orig.end());
    std::string bad;
    for (size_t i = 0; i < img.size() && bad.empty(); ++i) {
      auto it = have.find(img[i]);
      if (it == have.end())
        bad = vec_str(orig[i]) + " -> " + vec_str(img[i]);
      else
        have.erase(it);
    }
    add_check("sigma permutes Delta(p)", bad.empty(), bad);
  }
  {
    std::set<RatVec> pos(d.pos_k_roots.begin(), d.pos_k_roots.end());
    std::string bad;
    for (auto& r : d.pos_k_roots) {
      RatVec s = sigma_weight(p, r);
      if (bad.empty() && s != r && !pos.count(neg(s))) bad = vec_str(r);
    }
    add_check("positive system compatible with sigma", bad.empty(), bad);
  }
  auto eig = eigenspaces(p);
  add_check("eigenspaces span t", eig.t_sigma_basis.size() + eig.t_minus_sigma_basis.size() == d.total_rank(),
            S(int(eig.t_sigma_basis.size())) + "+" + S(int(eig.t_minus_sigma_basis.size())));
  if (p.sigma_is_theta) add_check("theta entry has identity sigma", p.sigma == LinMap::identity(n), "");
  if (p.k_sigma_dim) {
    size_t fixed = 0, moved = 0;
    for (auto& r : allk) (sigma_weight(p, r) == r ? fixed : moved)++;
    size_t dim = eig.t_sigma_basis.size() + fixed + moved / 2;
    add_check("dim k^sigma matches the subalgebra", dim == *p.k_sigma_dim,
              S(int(dim)) + " != " + S(int(*p.k_sigma_dim)));
  }
  return rep;
}

std::vector<PairInstance> default_instances() {
  std::vector<PairInstance> v;
  auto add = [&](const std::string& id, Params p) { v.push_back({id, std::move(p)}); };
  for (auto [m, n, k] : std::vector<std::tuple<int, int, int>>{{2, 2, 1}, {3, 2, 1}, {1, 2, 1}, {2, 3, 1}, {1, 3, 1}})
    add("su_mk", {{"m", m}, {"n", n}, {"k", k}});
  add("su_kl", {{"m", 2}, {"n", 2}, {"k", 1}, {"l", 1}});
  add("su_kl", {{"m", 2}, {"n", 3}, {"k", 1}, {"l", 1}});
  add("su_kl", {{"m", 3}, {"n", 2}, {"k", 1}, {"l", 1}});
  for (int n : {1, 2, 3}) add("su_slC", {{"n", n}});
  for (int n : {2, 3}) {
    add("su_sostar", {{"n", n}});
    add("su_spR", {{"n", n}});
  }
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}}) add("su_sp", {{"m", m}, {"n", n}});

  for (auto [P, Q, k, l] : std::vector<std::tuple<int, int, int, int>>{
           {4, 5, 4, 1}, {4, 5, 4, 2}, {4, 5, 4, 3}, {4, 5, 4, 4}, {4, 4, 4, 1}, {4, 4, 4, 2}, {4, 2, 4, 1},
           {3, 3, 3, 1}, {3, 3, 3, 2}, {3, 2, 3, 1}, {3, 4, 3, 1}, {3, 4, 3, 2}, {5, 2, 5, 1},
           {2, 3, 2, 1}, {2, 3, 2, 2}, {2, 4, 2, 1}, {2, 4, 2, 2}, {2, 5, 2, 2},
           {4, 4, 2, 1}, {4, 4, 1, 1}, {4, 4, 2, 2}, {3, 3, 1, 1}, {3, 4, 1, 2}, {2, 4, 1, 1}, {4, 3, 1, 1}})
    add("so_kl", {{"p", P}, {"q", Q}, {"k", k}, {"l", l}});
  add("so_u", {{"m", 1}, {"n", 2}, {"x", 1}, {"y", 1}});
  add("so_u", {{"m", 2}, {"n", 1}, {"x", 1}, {"y", 1}});
  add("so_u", {{"m", 2}, {"n", 1}, {"x", 2}, {"y", 1}});
  for (int x : {1, 2})
    for (int y : {1, 2}) add("so_u", {{"m", 2}, {"n", 2}, {"x", x}, {"y", y}});
  for (int x : {1, 2}) add("so_u", {{"m", 2}, {"n", 3}, {"x", x}, {"y", 1}});
  add("so_u", {{"m", 3}, {"n", 1}, {"x", 1}, {"y", 1}});
  for (int n : {3, 4}) {
    add("so_C", {{"n", n}});
    add("so_gl", {{"n", n}});
  }

  add("sp_mk", {{"m", 1}, {"n", 2}, {"k", 1}});
  add("sp_mk", {{"m", 2}, {"n", 2}, {"k", 1}});
  add("sp_mk", {{"m", 1}, {"n", 3}, {"k", 1}});
  add("sp_kl", {{"m", 2}, {"n", 2}, {"k", 1}, {"l", 1}});
  for (int n : {1, 2}) {
    add("sp_spC", {{"n", n}});
    add("sp_sustar", {{"n", n}});
  }

  for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {4, 3}, {4, 2}, {5, 2}}) {
    add("sostar_u", {{"n", n}, {"m", m}});
    add("sostar_sostar", {{"n", n}, {"m", m}});
  }
  add("sostar_sustar", {{"n", 2}});

  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 2}}) {
    add("spR_u", {{"n", n}, {"m", m}});
    add("spR_sp", {{"n", n}, {"m", m}});
  }
  for (int n : {1, 2}) add("spR_spC", {{"n", n}});

  for (int n : {2, 3}) {
    add("slC_sp", {{"n", n}});
    add("slC_sustar", {{"n", n}});
  }
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 1}}) {
    add("slC_sl", {{"n", n}, {"m", m}});
    add("slC_su", {{"n", n}, {"m", m}});
  }
  for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {4, 2}, {4, 3}, {4, 4}, {3, 2}}) {
    add("soC_so", {{"n", n}, {"m", m}});
    add("soC_sor", {{"n", n}, {"m", m}});
  }
  for (int n : {3, 4}) {
    add("soC_gl", {{"n", n}});
    add("soC_sostar", {{"n", n}});
  }

  for (auto& [id, e] : exceptional_table()) add(id, {});
  for (auto& [id, e] : named_theta()) add(id, {});
  for (auto& alg : supported_algebras()) {
    Params p;
    for (auto& k : algebra_param_names(alg)) p[k] = 2;
    add("theta_" + alg, p);
  }
  return v;
}

}  // namespace branchdec
