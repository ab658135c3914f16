#include "branchdec/ratlin.hpp"

#include <algorithm>
#include <sstream>

namespace branchdec {

Rat parse_rat(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (c != ' ' && c != '+') s.push_back(c);
  if (s.empty()) throw StructuralError("empty rational");
  auto ok = [](const std::string& t) {
    size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!ok(num) || !ok(den) || den[0] == '-') throw StructuralError("malformed rational: " + raw);
  mpz_class n(num), d(den);
  if (d == 0) throw StructuralError("zero denominator: " + raw);
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

std::string vec_str(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << rat_str(v[i]);
  os << ")";
  return os.str();
}

RatVec zeros(size_t n) { return RatVec(n, Rat(0)); }

RatVec unit(size_t n, size_t i) {
  RatVec v = zeros(n);
  v[i] = 1;
  return v;
}

static void same_dim(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw StructuralError("dimension mismatch");
}

Rat dot(const RatVec& a, const RatVec& b) {
  same_dim(a, b);
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) && sgn(b[i])) s += a[i] * b[i];
  return s;
}

RatVec add(const RatVec& a, const RatVec& b) {
  same_dim(a, b);
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  same_dim(a, b);
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec scale(const Rat& c, const RatVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

RatVec neg(const RatVec& a) { return scale(Rat(-1), a); }

bool is_zero(const RatVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return sgn(x) == 0; });
}


RatVec primitive_integer(const RatVec& v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class n = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ints.push_back(n);
  }
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = g == 0 ? Rat(0) : Rat(ints[i] / g);
  return out;
}

LinMap::LinMap(size_t codomain, size_t domain) : dom_(domain), rows_(codomain, zeros(domain)) {}

LinMap::LinMap(std::vector<RatVec> rows) : rows_(std::move(rows)) {
  dom_ = rows_.empty() ? 0 : rows_[0].size();
  for (const auto& r : rows_)
    if (r.size() != dom_) throw StructuralError("ragged matrix");
}

LinMap LinMap::identity(size_t n) {
  LinMap m(n, n);
  for (size_t i = 0; i < n; ++i) m.rows_[i][i] = 1;
  return m;
}

RatVec LinMap::apply(const RatVec& x) const {
  if (x.size() != dom_) throw StructuralError("dimension mismatch");
  RatVec y(rows_.size());
  for (size_t i = 0; i < rows_.size(); ++i) y[i] = dot(rows_[i], x);
  return y;
}

RatVec LinMap::apply_transpose(const RatVec& x) const {
  if (x.size() != rows_.size()) throw StructuralError("dimension mismatch");
  RatVec y = zeros(dom_);
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (size_t j = 0; j < dom_; ++j)
      if (sgn(rows_[i][j])) y[j] += rows_[i][j] * x[i];
  }
  return y;
}

LinMap LinMap::compose(const LinMap& rhs) const {
  if (dom_ != rhs.codomain_dim()) throw StructuralError("dimension mismatch");
  LinMap out(codomain_dim(), rhs.domain_dim());
  for (size_t i = 0; i < codomain_dim(); ++i)
    for (size_t k = 0; k < dom_; ++k) {
      if (sgn(rows_[i][k]) == 0) continue;
      for (size_t j = 0; j < rhs.domain_dim(); ++j) out.rows_[i][j] += rows_[i][k] * rhs.rows_[k][j];
    }
  return out;
}

LinMap LinMap::transpose() const {
  LinMap t(dom_, codomain_dim());
  for (size_t i = 0; i < codomain_dim(); ++i)
    for (size_t j = 0; j < dom_; ++j) t.rows_[j][i] = rows_[i][j];
  return t;
}

std::vector<size_t> rref(std::vector<RatVec>& m, size_t ncols) {
  std::vector<size_t> piv;
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < m.size(); ++c) {
    size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rat inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < ncols; ++j)
        if (sgn(m[r][j])) m[i][j] -= f * m[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  m.resize(r);
  return piv;
}

size_t rank(std::vector<RatVec> m, size_t ncols) { return rref(m, ncols).size(); }

std::vector<RatVec> kernel(const std::vector<RatVec>& rows, size_t ncols) {
  std::vector<RatVec> m = rows;
  auto piv = rref(m, ncols);
  std::vector<bool> is_piv(ncols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<RatVec> basis;
  for (size_t f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    RatVec v = zeros(ncols);
    v[f] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve_row_combination(const std::vector<RatVec>& rows, const RatVec& b) {
  // Unknown x with sum_i x_i rows_i = b: transpose into columns and eliminate.
  size_t n = rows.size(), d = b.size();
  std::vector<RatVec> aug(d, zeros(n + 1));
  for (size_t j = 0; j < d; ++j) {
    for (size_t i = 0; i < n; ++i) aug[j][i] = rows[i][j];
    aug[j][n] = b[j];
  }
  auto piv = rref(aug, n + 1);
  if (!piv.empty() && piv.back() == n) return std::nullopt;
  RatVec x = zeros(n);
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][n];
  return x;
}

bool in_row_space(const std::vector<RatVec>& rows, const RatVec& v) {
  if (rows.empty()) return is_zero(v);
  return solve_row_combination(rows, v).has_value();
}

namespace {

// Phase-1 simplex with Bland's rule on {M lam = c, lam >= 0}.
// Feasible: lam. Infeasible: u with u^T M >= 0 and u.c < 0.
struct StdResult {
  bool feasible;
  RatVec lam;
  RatVec u;
};

StdResult solve_standard(const std::vector<RatVec>& M, const RatVec& c, size_t n) {
  size_t p = M.size();
  std::vector<int> flip(p, 1);
  size_t W = n + p + 1;
  std::vector<RatVec> T(p, zeros(W));
  for (size_t i = 0; i < p; ++i) {
    flip[i] = sgn(c[i]) < 0 ? -1 : 1;
    for (size_t j = 0; j < n; ++j) T[i][j] = flip[i] < 0 ? Rat(-M[i][j]) : M[i][j];
    T[i][n + i] = 1;
    T[i][W - 1] = flip[i] < 0 ? Rat(-c[i]) : c[i];
  }
  // objective row: reduced costs for min sum(artificials)
  RatVec obj = zeros(W);
  for (size_t i = 0; i < p; ++i)
    for (size_t j = 0; j < W; ++j)
      if (j < n || j == W - 1) obj[j] -= T[i][j];
  std::vector<size_t> basis(p);
  for (size_t i = 0; i < p; ++i) basis[i] = n + i;

  for (;;) {
    size_t enter = W;
    for (size_t j = 0; j + 1 < W; ++j)
      if (sgn(obj[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == W) break;
    size_t leave = p;
    Rat best;
    for (size_t i = 0; i < p; ++i) {
      if (sgn(T[i][enter]) <= 0) continue;
      Rat ratio = T[i][W - 1] / T[i][enter];
      if (leave == p || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == p) break;  // unbounded direction cannot occur in phase 1
    Rat inv = 1 / T[leave][enter];
    for (auto& x : T[leave]) x *= inv;
    for (size_t i = 0; i < p; ++i) {
      if (i == leave || sgn(T[i][enter]) == 0) continue;
      Rat f = T[i][enter];
      for (size_t j = 0; j < W; ++j)
        if (sgn(T[leave][j])) T[i][j] -= f * T[leave][j];
    }
    if (sgn(obj[enter])) {
      Rat f = obj[enter];
      for (size_t j = 0; j < W; ++j)
        if (sgn(T[leave][j])) obj[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }

  StdResult res;
  // obj[W-1] holds -(current objective)
  if (sgn(obj[W - 1]) == 0) {
    res.feasible = true;
    res.lam = zeros(n);
    for (size_t i = 0; i < p; ++i)
      if (basis[i] < n) res.lam[basis[i]] = T[i][W - 1];
    return res;
  }
  res.feasible = false;
  res.u = zeros(p);
  for (size_t i = 0; i < p; ++i) {
    Rat y = 1 - obj[n + i];
    res.u[i] = flip[i] < 0 ? y : Rat(-y);
  }
  return res;
}

struct Homogenized {
  size_t d;  // original dim; w has d + 1 coordinates
  std::vector<RatVec> eq;
  std::vector<RatVec> ge;
  RatVec rhs;
};

Homogenized homogenize(const LpSystem& s) {
  Homogenized h;
  h.d = s.dim;
  size_t w = s.dim + 1;
  for (const auto& [a, b] : s.eqs) {
    RatVec r = a;
    r.push_back(-b);
    h.eq.push_back(std::move(r));
  }
  if (s.nonneg)
    for (size_t i = 0; i < s.dim; ++i) {
      h.ge.push_back(unit(w, i));
      h.rhs.push_back(0);
    }
  for (const auto& [g, b] : s.ges) {
    RatVec r = g;
    r.push_back(-b);
    h.ge.push_back(std::move(r));
    h.rhs.push_back(0);
  }
  for (const auto& st : s.stricts) {
    RatVec r = st;
    r.push_back(0);
    h.ge.push_back(std::move(r));
    h.rhs.push_back(1);
  }
  h.ge.push_back(unit(w, s.dim));
  h.rhs.push_back(1);
  return h;
}

void check_dims(const LpSystem& s) {
  if (s.eqs.empty() && s.ges.empty() && s.stricts.empty()) throw StructuralError("empty LP system");
  for (const auto& e : s.eqs)
    if (e.first.size() != s.dim) throw StructuralError("LP dimension mismatch");
  for (const auto& g : s.ges)
    if (g.first.size() != s.dim) throw StructuralError("LP dimension mismatch");
  for (const auto& st : s.stricts)
    if (st.size() != s.dim) throw StructuralError("LP dimension mismatch");
}

}  // namespace

LpResult lp_feasible(const LpSystem& sys) {
  check_dims(sys);
  LpResult out;
  if (sys.nonneg && sys.ges.empty() && sys.stricts.empty()) {
    std::vector<RatVec> M;
    RatVec c;
    for (const auto& [a, b] : sys.eqs) {
      M.push_back(a);
      c.push_back(b);
    }
    auto r = solve_standard(M, c, sys.dim);
    if (r.feasible) {
      out.feasible = true;
      out.witness = r.lam;
    } else {
      out.certificate.eq_mult = neg(r.u);
      RatVec lam = zeros(sys.dim + 1);
      for (size_t j = 0; j < sys.dim; ++j)
        for (size_t i = 0; i < M.size(); ++i) lam[j] += r.u[i] * M[i][j];
      lam[sys.dim] = -dot(r.u, c);
      out.certificate.ge_mult = lam;
    }
    return out;
  }

  Homogenized h = homogenize(sys);
  size_t w = sys.dim + 1;
  auto K = kernel(h.eq, w);
  size_t dk = K.size();
  // Dual of {(ge K) y >= rhs}: lam >= 0, (ge K)^T lam = 0, rhs.lam = 1.
  size_t m = h.ge.size();
  std::vector<RatVec> M(dk + 1, zeros(m));
  for (size_t i = 0; i < m; ++i) {
    for (size_t k = 0; k < dk; ++k) M[k][i] = dot(h.ge[i], K[k]);
    M[dk][i] = h.rhs[i];
  }
  RatVec c = zeros(dk + 1);
  c[dk] = 1;
  auto r = solve_standard(M, c, m);
  if (r.feasible) {
    out.feasible = false;
    out.certificate.ge_mult = r.lam;
    RatVec comb = zeros(w);
    for (size_t i = 0; i < m; ++i)
      if (sgn(r.lam[i])) comb = add(comb, scale(r.lam[i], h.ge[i]));
    if (h.eq.empty()) {
      out.certificate.eq_mult = {};
    } else {
      auto mu = solve_row_combination(h.eq, neg(comb));
      if (!mu) throw StructuralError("internal: Farkas combination outside equality row space");
      out.certificate.eq_mult = *mu;
    }
    return out;
  }
  // u = (v, t) with t < 0; y = v / (-t)
  Rat t = r.u[dk];
  RatVec wv = zeros(w);
  for (size_t k = 0; k < dk; ++k)
    if (sgn(r.u[k])) wv = add(wv, scale(r.u[k] / (-t), K[k]));
  out.feasible = true;
  out.witness.resize(sys.dim);
  for (size_t i = 0; i < sys.dim; ++i) out.witness[i] = wv[i] / wv[sys.dim];
  return out;
}

LpResult lp_feasible(const std::vector<std::pair<RatVec, Rat>>& equalities, bool nonneg_vars,
                     const std::vector<RatVec>& strict_ineqs) {
  LpSystem s;
  s.eqs = equalities;
  s.nonneg = nonneg_vars;
  s.stricts = strict_ineqs;
  if (!equalities.empty())
    s.dim = equalities[0].first.size();
  else if (!strict_ineqs.empty())
    s.dim = strict_ineqs[0].size();
  return lp_feasible(s);
}

bool verify_witness(const LpSystem& sys, const RatVec& x) {
  if (x.size() != sys.dim) return false;
  for (const auto& [a, b] : sys.eqs)
    if (dot(a, x) != b) return false;
  for (const auto& [g, b] : sys.ges)
    if (dot(g, x) < b) return false;
  for (const auto& s : sys.stricts)
    if (sgn(dot(s, x)) <= 0) return false;
  if (sys.nonneg)
    for (const auto& v : x)
      if (sgn(v) < 0) return false;
  return true;
}

bool verify_certificate(const LpSystem& sys, const FarkasCertificate& c) {
  Homogenized h = homogenize(sys);
  if (c.eq_mult.size() != h.eq.size() || c.ge_mult.size() != h.ge.size()) return false;
  size_t w = sys.dim + 1;
  RatVec comb = zeros(w);
  Rat rhs = 0;
  for (size_t j = 0; j < h.eq.size(); ++j) comb = add(comb, scale(c.eq_mult[j], h.eq[j]));
  for (size_t i = 0; i < h.ge.size(); ++i) {
    if (sgn(c.ge_mult[i]) < 0) return false;
    comb = add(comb, scale(c.ge_mult[i], h.ge[i]));
    rhs += c.ge_mult[i] * h.rhs[i];
  }
  return is_zero(comb) && sgn(rhs) > 0;
}

RatVec canonicalize_mod(const RatVec& v, const std::vector<RatVec>& relations) {
  RatVec out = v;
  for (const auto& r : relations) {
    if (r.size() != v.size()) throw StructuralError("relation dimension mismatch");
    Rat rs = 0, vs = 0;
    for (size_t i = 0; i < r.size(); ++i)
      if (sgn(r[i])) {
        rs += r[i];
        vs += out[i];
      }
    if (sgn(rs) == 0) throw StructuralError("relation with zero coordinate sum");
    Rat c = vs / rs;
    if (sgn(c))
      for (size_t i = 0; i < r.size(); ++i) out[i] -= c * r[i];
  }
  return out;
}

}  // namespace branchdec
