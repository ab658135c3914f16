#include "branchdec/classify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace branchdec {

bool TableRow::holds(const RatVec& a) const {
  for (auto& alt : alternatives)
    if (alt.holds(a)) return true;
  return false;
}

bool matches_form(const RootDatum& d, const RatVec& a, const std::vector<std::string>& form, bool nonneg) {
  if (form.size() != d.dim) throw StructuralError("form length mismatch");
  size_t r = d.constraints.size();
  LpSystem s;
  s.dim = 2 + r;
  for (size_t i = 0; i < d.dim; ++i) {
    RatVec row(s.dim, Rat(0));
    const std::string& f = form[i];
    if (f == "s") row[0] = 1;
    else if (f == "-s") row[0] = -1;
    else if (f == "t") row[1] = 1;
    else if (f == "-t") row[1] = -1;
    else if (f != "0") throw StructuralError("bad form token " + f);
    for (size_t j = 0; j < r; ++j) row[2 + j] = d.constraints[j][i];
    s.eqs.push_back({row, a[i]});
  }
  if (nonneg)
    for (size_t v : {0, 1}) s.ges.push_back({unit(s.dim, v), Rat(0)});
  return lp_feasible(s).feasible;
}

namespace {

using Pred = std::function<bool(const RatVec&)>;

// a_i, 1-based
const Rat& at(const RatVec& a, int i) { return a.at(size_t(i - 1)); }

std::vector<std::string> form(size_t n, std::vector<std::pair<size_t, std::string>> entries) {
  std::vector<std::string> f(n, "0");
  for (auto& [i, t] : entries) f.at(i) = t;
  return f;
}

std::string form_str(const std::vector<std::string>& f) {
  std::string s = "(";
  for (size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + f[i];
  return s + ")";
}

TableAlternative form_alt(const RootDatum& d, std::vector<std::string> f, bool nonneg) {
  std::string text = "a = " + form_str(f) + (d.constraints.empty() ? "" : " mod constraints");
  RootDatum dd = d;
  return {text, [dd, f, nonneg](const RatVec& a) { return matches_form(dd, a, f, nonneg); }};
}

TableRow row(std::string id, std::string text, std::vector<TableAlternative> alts) {
  return {std::move(id), std::move(text), std::move(alts)};
}

int param(const SymmetricPair& p, const std::string& k) {
  auto it = p.params.find(k);
  if (it == p.params.end()) throw StructuralError(p.pair_id + " lacks parameter " + k);
  return it->second;
}

std::vector<TableRow> classical_rows(const SymmetricPair& p) {
  const auto& id = p.pair_id;
  const auto& d = p.datum;
  std::vector<TableRow> out;

  if (id == "su_mk") {
    int m = param(p, "m"), n = param(p, "n");
    out.push_back(row("T3", "su(m,n)/su(m,k)+su(n-k)+u(1)",
                      {{"a_{m+n} >= a_1", [=](const RatVec& a) { return at(a, m + n) >= at(a, 1); }},
                       {"a_l >= a_{m+1} and a_{m+n} >= a_{l+1}, some 1 <= l <= m-1",
                        [=](const RatVec& a) {
                          for (int l = 1; l <= m - 1; ++l)
                            if (at(a, l) >= at(a, m + 1) && at(a, m + n) >= at(a, l + 1)) return true;
                          return false;
                        }},
                       {"a_m >= a_{m+1}", [=](const RatVec& a) { return at(a, m) >= at(a, m + 1); }}}));
  } else if (id == "su_sp") {
    int m = param(p, "m"), n = param(p, "n");
    size_t M = 2 * m, N = 2 * n;
    if (m == 1 && n != 1)
      out.push_back(row("T3", "su(2,2n)/sp(1,n), n != 1",
                        {{"a_1 >= a_3 and a_{2n+2} >= a_2", [=](const RatVec& a) {
                            return at(a, 1) >= at(a, 3) && at(a, 2 * n + 2) >= at(a, 2);
                          }}}));
    if (m == 1 && n == 1)
      out.push_back(row("T3", "su(2,2)/sp(1,1)",
                        {{"a_1 >= a_3 >= a_4 >= a_2",
                          [](const RatVec& a) { return at(a, 1) >= at(a, 3) && at(a, 3) >= at(a, 4) && at(a, 4) >= at(a, 2); }},
                         {"a_3 >= a_1 >= a_2 >= a_4", [](const RatVec& a) {
                            return at(a, 3) >= at(a, 1) && at(a, 1) >= at(a, 2) && at(a, 2) >= at(a, 4);
                          }}}));
    if (m != 1 && n == 1)
      out.push_back(row("T3", "su(2m,2)/sp(m,1) as su(2,2m)/sp(1,m), blocks exchanged",
                        {{"a_{2m+1} >= a_1 and a_{2m} >= a_{2m+2}", [=](const RatVec& a) {
                            return at(a, 2 * m + 1) >= at(a, 1) && at(a, 2 * m) >= at(a, 2 * m + 2);
                          }}}));
    out.push_back(row("T4", "su(2m,2n)/sp(m,n)",
                      {form_alt(d, form(M + N, {{0, "s"}, {M, "t"}}), true),
                       form_alt(d, form(M + N, {{M - 1, "-s"}, {M + N - 1, "-t"}}), true),
                       form_alt(d, form(M + N, {{0, "s"}, {M - 1, "-t"}}), true),
                       form_alt(d, form(M + N, {{M, "s"}, {M + N - 1, "-t"}}), true)}));
  } else if (id == "so_kl") {
    int P = param(p, "p"), Q = param(p, "q"), k = param(p, "k");
    int h1 = P / 2, h2 = Q / 2;
    if (std::min(k, P - k) == 0) {
      if (P % 2 == 0 && Q % 2 == 0)
        out.push_back(row("T3", "so(2m,2n)/so(2m,k)+so(2n-k)",
                          {{"|a_m| >= |a_{m+1}|", [=](const RatVec& a) { return abs(at(a, h1)) >= abs(at(a, h1 + 1)); }}}));
      else if (P % 2 == 0)
        out.push_back(row("T3", "so(2m,2n+1)/so(2m,k)+so(2n-k+1)",
                          {{"|a_m| >= a_{m+1}", [=](const RatVec& a) { return abs(at(a, h1)) >= at(a, h1 + 1); }}}));
      else
        out.push_back(row("T4", "so(2m+1,q)/so(2m+1,k)+so(q-k)",
                          {{"a_{m+1} = ... = a_{m+n} = 0", [=](const RatVec& a) {
                              for (int i = h1 + 1; i <= h1 + h2; ++i)
                                if (sgn(at(a, i)) != 0) return false;
                              return true;
                            }}}));
    }
  } else if (id == "so_u") {
    int m = param(p, "m"), n = param(p, "n"), x = param(p, "x"), y = param(p, "y");
    if (m == 2 && n != 2) {
      if (x == 1)
        out.push_back(row("T3", "so(4,2n)/u(2,n)_1",
                          {{"-a_2 >= |a_3|", [](const RatVec& a) { return -at(a, 2) >= abs(at(a, 3)); }}}));
      else
        out.push_back(row("T3", "so(4,2n)/u(2,n)_2",
                          {{"a_2 >= |a_3|", [](const RatVec& a) { return at(a, 2) >= abs(at(a, 3)); }}}));
    }
    if (m == 2 && n == 2) {
      int s2 = x == 1 ? -1 : 1, s4 = y == 1 ? -1 : 1;
      std::string t2 = x == 1 ? "-a_2 >= a_3" : "a_2 >= a_3", t4 = y == 1 ? "-a_4 >= a_1" : "a_4 >= a_1";
      out.push_back(row("T3", "so(4,4)/u(2,2)_" + std::to_string(x) + std::to_string(y),
                        {{t2, [=](const RatVec& a) { return s2 * at(a, 2) >= at(a, 3); }},
                         {t4, [=](const RatVec& a) { return s4 * at(a, 4) >= at(a, 1); }}}));
    }
    if (n == 2 && m != 2) {
      // so(2m,4)/u(m,2)_y is so(4,2m)/u(2,m)_y with the blocks exchanged
      if (y == 1)
        out.push_back(row("T3", "so(2m,4)/u(m,2)_1",
                          {{"-a_{m+2} >= |a_1|", [=](const RatVec& a) { return -at(a, m + 2) >= abs(at(a, 1)); }}}));
      else
        out.push_back(row("T3", "so(2m,4)/u(m,2)_2",
                          {{"a_{m+2} >= |a_1|", [=](const RatVec& a) { return at(a, m + 2) >= abs(at(a, 1)); }}}));
    }
    out.push_back(row("T4", "so(2m,2n)/u(m,n)",
                      {form_alt(d, form(m + n, {{0, "s"}}), false),
                       form_alt(d, form(m + n, {{size_t(m), "s"}}), false)}));
  } else if (id == "sostar_u" || id == "sostar_sostar") {
    int n = param(p, "n"), m = param(p, "m");
    if (std::min(m, n - m) == 1) {
      std::vector<TableAlternative> alts;
      for (int k = 1; k <= n - 1; ++k) {
        std::vector<std::string> f(n, "-s");
        for (int i = 0; i < k; ++i) f[i] = "s";
        alts.push_back(form_alt(d, f, false));
      }
      out.push_back(row("T4", id == "sostar_u" ? "so*(2n)/u(n-1,1)" : "so*(2n)/so*(2n-2)+so(2)", alts));
    }
  } else if (id == "sp_kl") {
    int m = param(p, "m"), n = param(p, "n");
    out.push_back(row("T4", "sp(m,n)/sp(k,l)+sp(m-k,n-l)",
                      {form_alt(d, form(m + n, {{0, "s"}}), false),
                       form_alt(d, form(m + n, {{size_t(m), "s"}}), false)}));
  } else if (id == "sp_mk") {
    int m = param(p, "m"), n = param(p, "n");
    out.push_back(row("T3", "sp(m,n)/sp(m,k)+sp(n-k)",
                      {{"a_m >= a_{m+1}", [=](const RatVec& a) { return at(a, m) >= at(a, m + 1); }}}));
    out.push_back(row("T4", "sp(m,n)/sp(m,k)+sp(n-k)",
                      {form_alt(d, form(m + n, {{size_t(m), "s"}}), false),
                       {"a_{l-1} >= a_{m+1} and a_l = a_{m+2} = 0, some 2 <= l <= m", [=](const RatVec& a) {
                          for (int l = 2; l <= m; ++l)
                            if (at(a, l - 1) >= at(a, m + 1) && sgn(at(a, l)) == 0 && sgn(at(a, m + 2)) == 0)
                              return true;
                          return false;
                        }}}));
  } else if (id == "slC_sp" || id == "slC_sustar") {
    size_t N = d.dim;
    out.push_back(row("T4", id == "slC_sp" ? "sl(2n,C)/sp(n,C)" : "sl(2n,C)/su*(2n)",
                      {form_alt(d, form(N, {{0, "s"}}), false), form_alt(d, form(N, {{N - 1, "s"}}), false)}));
  } else if (id == "spR_spC") {
    // sp(2,R)/sp(1,C) is so(3,2)/so(3,1); b = ((a_1-a_2)/2 ; (a_1+a_2)/2)
    if (param(p, "n") == 1)
      out.push_back(row("T4", "sp(2,R)/sp(1,C) as so(3,2)/so(3,1)",
                        {{"a_1 + a_2 = 0", [](const RatVec& a) { return sgn(at(a, 1) + at(a, 2)) == 0; }}}));
  } else if (id == "soC_so" || id == "soC_sor") {
    int n = param(p, "n"), m = param(p, "m");
    if (m == 1 || m == 2 * n - 1)
      out.push_back(row("T4", id == "soC_so" ? "so(2n,C)/so(2n-1,C)" : "so(2n,C)/so(2n-1,1)",
                        {form_alt(d, std::vector<std::string>(d.dim, "s"), false)}));
  }
  return out;
}

std::vector<TableRow> exceptional_rows(const SymmetricPair& p) {
  const auto& id = p.pair_id;
  const auto& d = p.datum;
  auto pre = [&](const std::string& s) { return id.rfind(s, 0) == 0; };
  std::vector<TableRow> out;
  auto alts = [&](std::vector<std::vector<std::string>> fs) {
    std::vector<TableAlternative> v;
    for (auto& f : fs) v.push_back(form_alt(d, f, false));
    return v;
  };
  if (pre("f4_4_"))
    out.push_back(row("T3", "f4(4)", {{"a_1+a_2+a_3 <= a_4", [](const RatVec& a) {
                                         return at(a, 1) + at(a, 2) + at(a, 3) <= at(a, 4);
                                       }}}));
  else if (id == "f4m20_so81")
    out.push_back(row("T4", "f4(-20)/so(8,1)", alts({{"s", "s", "s", "s"}, {"s", "s", "0", "0"}})));
  else if (id == "e6_2_so64" || id == "e6_2_su42" || id == "e6_2_sp31" || id == "e6_2_f44")
    out.push_back(row("T3", "e6(2)", {{"a_1+a_2+a_3-a_4-a_5-a_6 <= 2a_7", [](const RatVec& a) {
                                         return at(a, 1) + at(a, 2) + at(a, 3) - at(a, 4) - at(a, 5) - at(a, 6) <=
                                                2 * at(a, 7);
                                       }}}));
  else if (id == "e6_2_sostar10")
    out.push_back(row("T4", "e6(2)/so*(10)+so(2)",
                      alts({{"s", "s", "s", "s", "t", "t", "0"}, {"s", "s", "t", "t", "t", "t", "0"}})));
  else if (id == "e6m14_so28")
    out.push_back(row("T4", "e6(-14)/so(2,8)+so(2)",
                      alts({{"s", "s", "s", "s", "s", "s"}, {"s", "s", "s", "s", "-s", "-s"}})));
  else if (id == "e6m14_f4")
    out.push_back(row("T4", "e6(-14)/f4(-20)",
                      alts({{"s", "s", "0", "0", "0", "0"}, {"s", "s", "s", "s", "t", "t"}})));
  else if (id == "e7m5_so84" || id == "e7m5_su62" || id == "e7m5_e62")
    out.push_back(row("T3", "e7(-5)", {{"a_1+a_2+a_3+a_4+a_5-a_6 <= 2a_7", [](const RatVec& a) {
                                          return at(a, 1) + at(a, 2) + at(a, 3) + at(a, 4) + at(a, 5) - at(a, 6) <=
                                                 2 * at(a, 7);
                                        }}}));
  else if (id == "e7m5_e6m14")
    out.push_back(row("T4", "e7(-5)/e6(-14)+so(2)", alts({{"s", "s", "s", "s", "s", "s", "0"}})));
  else if (id == "e8m24_so124" || id == "e8m24_e7m5")
    out.push_back(row("T3", "e8(-24)", {{"a_7 >= a_6", [](const RatVec& a) { return at(a, 7) >= at(a, 6); }}}));
  return out;
}

}  // namespace

std::vector<TableRow> table_rows(const SymmetricPair& p) {
  auto out = classical_rows(p);
  for (auto& r : exceptional_rows(p)) out.push_back(r);
  if (p.in_table("T5")) out.push_back(row("T5", p.label(), {}));
  return out;
}

TableRow holomorphic_row(const RootDatum& d, bool anti) {
  auto P = [&](const std::string& k) { return d.rank_params.at(k); };
  std::string id = anti ? "T1_antiholo" : "T1_holo";
  const auto& a = d.algebra_id;
  auto one = [&](std::string text, Pred f) { return row(id, d.label, {{std::move(text), std::move(f)}}); };
  if (a == "su") {
    int m = P("m"), n = P("n");
    if (anti) return one("a_{m+n} >= a_1", [=](const RatVec& x) { return at(x, m + n) >= at(x, 1); });
    return one("a_m >= a_{m+1}", [=](const RatVec& x) { return at(x, m) >= at(x, m + 1); });
  }
  if ((a == "so2m2n" || a == "so2m2n1") && P("m") == 1) {
    if (anti) return one("-a_1 >= a_2", [](const RatVec& x) { return -at(x, 1) >= at(x, 2); });
    return one("a_1 >= a_2", [](const RatVec& x) { return at(x, 1) >= at(x, 2); });
  }
  if (a == "sostar") {
    int n = P("n");
    if (anti) return one("a_1+a_2 <= 0", [](const RatVec& x) { return sgn(at(x, 1) + at(x, 2)) <= 0; });
    return one("a_{n-1}+a_n >= 0", [=](const RatVec& x) { return sgn(at(x, n - 1) + at(x, n)) >= 0; });
  }
  if (a == "spR") {
    int n = P("n");
    if (anti) return one("a_1 <= 0", [](const RatVec& x) { return sgn(at(x, 1)) <= 0; });
    return one("a_n >= 0", [=](const RatVec& x) { return sgn(at(x, n)) >= 0; });
  }
  if (a == "e6m14") {
    if (anti)
      return one("-a_6 >= a_1+a_2+a_3+a_4-a_5", [](const RatVec& x) {
        return -at(x, 6) >= at(x, 1) + at(x, 2) + at(x, 3) + at(x, 4) - at(x, 5);
      });
    return one("a_6 >= a_1+a_2+a_3+a_4+a_5", [](const RatVec& x) {
      return at(x, 6) >= at(x, 1) + at(x, 2) + at(x, 3) + at(x, 4) + at(x, 5);
    });
  }
  if (a == "e7m25") {
    if (anti) return one("a_8 <= a_7", [](const RatVec& x) { return at(x, 8) <= at(x, 7); });
    return one("a_6 >= a_5", [](const RatVec& x) { return at(x, 6) >= at(x, 5); });
  }
  throw UnknownRow("no holomorphic condition tabulated for " + d.label);
}

bool table_predicate_eval(const std::string& table_id, const SymmetricPair& p, const RatVec& a) {
  RatVec c = require_dominant(p.datum, a);
  if (table_id == "T1_holo" || table_id == "T1_antiholo")
    return holomorphic_row(p.datum, table_id == "T1_antiholo").holds(c);
  if (table_id == "T2") {
    if (!p.in_table("T2")) throw UnknownRow(p.label() + " is not listed as holomorphic type");
    return holomorphic_class(p.datum, c) != HoloClass::Neither;
  }
  bool found = false, any = false;
  for (auto& r : table_rows(p))
    if (r.table_id == table_id) {
      found = true;
      any = any || r.holds(c);
    }
  if (!found) throw UnknownRow(p.label() + " has no row in " + table_id);
  return any;
}

RatVec k_dominant(const RootDatum& d, const RatVec& a) {
  RatVec x = canonical(d, a);
  for (bool moved = true; moved;) {
    moved = false;
    for (auto& r : d.simple_k_roots) {
      Rat rx = dot(r, x);
      if (sgn(rx) < 0) {
        x = sub(x, scale(2 * rx / dot(r, r), r));
        moved = true;
      }
    }
  }
  return canonical(d, x);
}

bool theorem_verdict(const SymmetricPair& p, const RatVec& a) {
  RatVec c = require_dominant(p.datum, a);
  if (p.sigma_is_theta || sign_pattern(p.datum, c).all_zero()) return true;
  if (is_holomorphic_type(p) && holomorphic_class(p.datum, c) != HoloClass::Neither) return true;
  auto rows = table_rows(p);
  // q and sigma(q) restrict identically to g^sigma
  for (auto& x : {c, k_dominant(p.datum, sigma_point(p, c))})
    for (auto& r : rows)
      if ((r.table_id == "T3" || r.table_id == "T4") && r.holds(x)) return true;
  return false;
}

const std::vector<ParabolicClass>& cached_classes(const RootDatum& d, std::optional<size_t> rank_bound) {
  static std::map<std::string, std::vector<ParabolicClass>> cache;
  auto it = cache.find(d.label);
  if (it == cache.end()) it = cache.emplace(d.label, enumerate_classes(d, rank_bound)).first;
  return it->second;
}

InstanceConfig load_instance_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot read " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError(path + ": " + e.what());
  }
  if (j.value("schema", "") != "branchdec/1") throw StructuralError(path + ": schema must be branchdec/1");
  InstanceConfig c;
  c.rank_bound = j.value("rank_bound", size_t(8));
  if (c.rank_bound < 2) throw StructuralError(path + ": rank_bound must be at least 2");
  for (auto& e : j.at("instances")) {
    PairInstance pi;
    pi.pair_id = e.at("pair_id").get<std::string>();
    if (e.contains("params"))
      for (auto& [k, v] : e["params"].items()) pi.params[k] = v.get<int>();
    c.instances.push_back(std::move(pi));
  }
  return c;
}

VerificationReport verify_pair(const SymmetricPair& p) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  r.pair_id = p.pair_id;
  r.params = p.params;
  r.label = p.label();
  auto& cs = cached_classes(p.datum);
  r.classes_total = cs.size();
  for (auto& c : cs) {
    bool crit = decide_iii(p, c.witness).decomposable;
    bool tab = theorem_verdict(p, c.witness);
    r.classes_decomposable += crit;
    if (crit != tab) r.mismatches.push_back({c.pattern, c.witness, crit, tab});
  }
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

namespace {

nlohmann::ordered_json vec_json(const RatVec& v) {
  auto j = nlohmann::ordered_json::array();
  for (auto& x : v) j.push_back(rat_str(x));
  return j;
}

nlohmann::ordered_json params_json(const Params& p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (auto& [k, v] : p) j[k] = v;
  return j;
}

}  // namespace

nlohmann::ordered_json instance_config_json(const InstanceConfig& c) {
  nlohmann::ordered_json j;
  j["schema"] = "branchdec/1";
  j["rank_bound"] = c.rank_bound;
  auto arr = nlohmann::ordered_json::array();
  for (auto& pi : c.instances) arr.push_back({{"pair_id", pi.pair_id}, {"params", params_json(pi.params)}});
  j["instances"] = arr;
  return j;
}

nlohmann::ordered_json report_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["pair_id"] = r.pair_id;
  j["params"] = params_json(r.params);
  j["label"] = r.label;
  j["classes_total"] = r.classes_total;
  j["classes_decomposable"] = r.classes_decomposable;
  j["pass"] = r.pass();
  auto mm = nlohmann::ordered_json::array();
  for (auto& m : r.mismatches)
    mm.push_back({{"pattern", m.pattern.str()}, {"witness", vec_json(m.witness)}, {"criterion", m.criterion},
                  {"table", m.table}});
  j["mismatches"] = mm;
  return j;
}

std::string report_tsv(const VerificationReport& r) {
  std::string id = r.pair_id;
  if (!r.params.empty()) id += "[" + params_str(r.params) + "]";
  return id + "\t" + std::to_string(r.classes_total) + "\t" + std::to_string(r.classes_decomposable) + "\t" +
         (r.pass() ? "pass" : "fail");
}

std::vector<AppendixBEntry> verify_appendix_b(const std::vector<SymmetricPair>& pairs) {
  std::vector<AppendixBEntry> out;
  for (auto& p : pairs) {
    if (p.sigma_is_theta || filter_split(p)) continue;
    AppendixBEntry e;
    e.pair_id = p.pair_id;
    e.params = p.params;
    e.label = p.label();
    e.listed = p.appendix_b;
    e.dominant = minus_sigma_alpha0_dominant(p);
    bool member_ok = e.dominant == (e.listed != AppendixB::None);
    bool classes_ok = true;
    if (e.listed != AppendixB::None) {
      e.decomposable_eq_holo = true;
      for (auto& c : cached_classes(p.datum)) {
        if (c.pattern.all_zero()) continue;
        bool dec = decide_iii(p, c.witness).decomposable;
        bool holo = p.datum.hermitian && holomorphic_class(p.datum, c.witness) != HoloClass::Neither;
        e.proper_decomposable += dec;
        e.holo_classes += holo;
        if (dec != holo) e.decomposable_eq_holo = false;
      }
      classes_ok = e.listed == AppendixB::B1 ? e.proper_decomposable == 0 : e.decomposable_eq_holo;
    }
    e.pass = member_ok && classes_ok;
    if (!member_ok) e.detail = e.dominant ? "-sigma(alpha0) dominant but not listed" : "listed but -sigma(alpha0) not dominant";
    else if (!classes_ok) e.detail = "decomposable classes do not match the listing";
    out.push_back(std::move(e));
  }
  return out;
}

nlohmann::ordered_json appendix_b_json(const AppendixBEntry& e) {
  nlohmann::ordered_json j;
  j["pair_id"] = e.pair_id;
  j["params"] = params_json(e.params);
  j["label"] = e.label;
  j["listed"] = appendix_b_str(e.listed);
  j["minus_sigma_alpha0_dominant"] = e.dominant;
  j["proper_decomposable"] = e.proper_decomposable;
  j["holomorphic_classes"] = e.holo_classes;
  j["pass"] = e.pass;
  if (!e.detail.empty()) j["detail"] = e.detail;
  return j;
}

// figures ------------------------------------------------------------------

const std::vector<std::pair<std::string, std::string>>& figure1_orderings() {
  static const std::vector<std::pair<std::string, std::string>> v = {
      {"X1", "1>2>3>4"}, {"X2", "1>3>2>4"}, {"X3", "1>3>4>2"}, {"X4", "3>1>2>4"}, {"X5", "3>1>4>2"},
      {"X6", "3>4>1>2"}, {"Y1", "1>2=3>4"}, {"Y2", "1>3>2=4"}, {"Y3", "1=3>2>4"}, {"Y4", "3>1>2=4"},
      {"Y5", "1=3>4>2"}, {"Y6", "3>1=4>2"}, {"Z1", "1>2=3=4"}, {"Z2", "1=2=3>4"}, {"Z3", "3>1=2=4"},
      {"Z4", "1=3=4>2"}, {"W", "1=3>2=4"},  {"U", "1=2=3=4"},
  };
  return v;
}

std::string figure1_label(const RatVec& a) {
  if (a.size() != 4) throw StructuralError("su(2,2) points have four coordinates");
  for (auto& [label, chain] : figure1_orderings()) {
    bool ok = true;
    for (size_t i = 0; i + 2 < chain.size() && ok; i += 2) {
      const Rat& x = a[size_t(chain[i] - '1')];
      const Rat& y = a[size_t(chain[i + 2] - '1')];
      ok = chain[i + 1] == '>' ? x > y : x == y;
    }
    if (ok) return label;
  }
  return "";
}

RatVec su22_to_so42(const RatVec& a) {
  Rat h(1, 2);
  return {h * (a[0] - a[1] + a[2] - a[3]), h * (-a[0] + a[1] + a[2] - a[3]), h * (a[0] + a[1] - a[2] - a[3])};
}

namespace {

std::vector<std::string> in_figure_order(std::set<std::string> s) {
  std::vector<std::string> v;
  for (auto& [l, c] : figure1_orderings())
    if (s.count(l)) v.push_back(l);
  return v;
}

}  // namespace

std::vector<FigureReport> reproduce_figures() {
  auto d = root_datum("su", {{"m", 2}, {"n", 2}});
  auto& cs = cached_classes(d);
  std::vector<std::string> labels;
  for (auto& c : cs) labels.push_back(figure1_label(c.witness));

  std::vector<FigureReport> out;
  {
    FigureReport f;
    f.name = "figure1";
    std::set<std::string> all, borel, holo;
    for (size_t i = 0; i < cs.size(); ++i) {
      all.insert(labels[i]);
      if (is_borel(d, cs[i].witness)) borel.insert(labels[i]);
      if (holomorphic_class(d, cs[i].witness) != HoloClass::Neither) holo.insert(labels[i]);
    }
    f.nodes = cs.size();
    f.borel = borel.size();
    f.holo = holo.size();
    for (auto& l : in_figure_order(all)) f.got.push_back(l);
    for (auto& l : in_figure_order(borel)) f.got.push_back("borel:" + l);
    for (auto& l : in_figure_order(holo)) f.got.push_back("holo:" + l);
    for (auto& [l, c] : figure1_orderings()) f.expected.push_back(l);
    for (auto l : {"X1", "X2", "X3", "X4", "X5", "X6"}) f.expected.push_back(std::string("borel:") + l);
    for (auto l : {"X1", "X6", "Y1", "Y6", "Z1", "Z2", "Z3", "Z4", "U"}) f.expected.push_back(std::string("holo:") + l);
    auto marks = default_marks(d, cs);
    for (size_t i = 0; i < cs.size(); ++i) marks[i].name = labels[i];
    f.dot = export_dot(cs, marks);
    f.pass = f.got == f.expected && all.size() == 18 && !all.count("");
    out.push_back(std::move(f));
  }
  auto decomposable_fig = [&](const std::string& name, const SymmetricPair& p, std::function<RatVec(const RatVec&)> map,
                              std::vector<std::string> expected) {
    FigureReport f;
    f.name = name;
    std::set<std::string> dec;
    auto marks = default_marks(d, cs);
    for (size_t i = 0; i < cs.size(); ++i) {
      bool v = decide_iii(p, map(cs[i].witness)).decomposable;
      if (v) dec.insert(labels[i]);
      marks[i].name = labels[i];
      marks[i].decomposable = v;
    }
    f.nodes = cs.size();
    f.got = in_figure_order(dec);
    f.expected = std::move(expected);
    f.dot = export_dot(cs, marks);
    f.pass = f.got == f.expected;
    out.push_back(std::move(f));
  };
  std::vector<std::string> fig2 = {"X1", "X3", "X6", "Y1", "Y2", "Y5", "Y6", "Z1", "Z2", "Z3", "Z4", "W", "U"};
  auto id = [](const RatVec& a) { return a; };
  decomposable_fig("figure2", symmetric_pair("su_mk", {{"m", 2}, {"n", 2}, {"k", 1}}), id, fig2);
  auto so42 = symmetric_pair("so_u", {{"m", 2}, {"n", 1}, {"x", 1}, {"y", 1}});
  decomposable_fig("figure2-so42", so42, su22_to_so42, fig2);
  decomposable_fig("figure3", symmetric_pair("su_sp", {{"m", 1}, {"n", 1}}), id,
                   {"X3", "X4", "Y2", "Y3", "Y4", "Y5", "Z1", "Z2", "Z3", "Z4", "W", "U"});
  return out;
}

nlohmann::ordered_json figure_json(const FigureReport& f) {
  nlohmann::ordered_json j;
  j["name"] = f.name;
  j["nodes"] = f.nodes;
  if (f.name == "figure1") {
    j["borel"] = f.borel;
    j["holomorphic_or_antiholomorphic"] = f.holo;
  }
  j["expected"] = f.expected;
  j["got"] = f.got;
  j["pass"] = f.pass;
  return j;
}

std::vector<NodeMark> default_marks(const RootDatum& d, const std::vector<ParabolicClass>& classes) {
  std::vector<NodeMark> v;
  for (auto& c : classes) {
    NodeMark m;
    m.name = c.pattern.str();
    m.borel = is_borel(d, c.witness);
    m.holo = d.hermitian && holomorphic_class(d, c.witness) != HoloClass::Neither;
    v.push_back(m);
  }
  return v;
}

std::string export_dot(const std::vector<ParabolicClass>& classes, const std::vector<NodeMark>& marks) {
  if (marks.size() != classes.size()) throw StructuralError("one mark per class");
  size_t n = classes.size();
  auto lt = [&](size_t i, size_t j) {
    return i != j && pattern_contains(classes[i].pattern, classes[j].pattern) && classes[i].pattern != classes[j].pattern;
  };
  std::ostringstream o;
  o << "digraph classes {\n  rankdir=BT;\n";
  for (size_t i = 0; i < n; ++i) {
    auto& m = marks[i];
    o << "  n" << i << " [label=\"" << m.name << "\"";
    o << ", shape=" << (m.borel ? "triangle" : "circle");
    if (m.holo) o << ", peripheries=2";
    if (m.decomposable) o << ", style=filled, fillcolor=" << (*m.decomposable ? "gray70" : "white");
    o << "];\n";
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (!lt(i, j)) continue;
      bool covered = true;
      for (size_t k = 0; k < n && covered; ++k)
        if (lt(i, k) && lt(k, j)) covered = false;
      if (covered) o << "  n" << i << " -> n" << j << ";\n";
    }
  o << "}\n";
  return o.str();
}

}  // namespace branchdec
