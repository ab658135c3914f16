#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "branchdec/classify.hpp"
#include "branchdec/tensor.hpp"
#include "test_util.hpp"

using namespace branchdec;
using testutil::V;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void run(int n, const std::string& title, double limit, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.pass && s > limit) o.fail("took " + std::to_string(s) + " s, limit " + std::to_string(limit) + " s");
  failures += !o.pass;
  std::printf("criterion %2d %s  %s: %s (%.2f s)\n", n, o.pass ? "PASS" : "FAIL", title.c_str(), o.detail.c_str(), s);
  std::fflush(stdout);
}

std::string id_of(const SymmetricPair& p) {
  return p.pair_id + (p.params.empty() ? "" : "[" + params_str(p.params) + "]");
}

const std::vector<SymmetricPair>& catalog() {
  static const std::vector<SymmetricPair> c = [] {
    std::vector<SymmetricPair> v;
    for (auto& in : default_instances()) {
      auto p = symmetric_pair(in.pair_id, in.params);
      if (p.datum.total_rank() <= configured_rank_bound()) v.push_back(std::move(p));
    }
    return v;
  }();
  return c;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (auto& x : v) s += (s.empty() ? "" : ",") + x;
  return s;
}

// signs of every k root and p weight; equal vectors up to refinement decide contains()
std::vector<int> full_signs(const RootDatum& d, const RatVec& a) {
  std::vector<int> s;
  for (auto& r : d.pos_k_roots) s.push_back(sgn(dot(r, a)));
  for (auto& w : d.p_weights) s.push_back(sgn(dot(w.coeffs, a)));
  return s;
}

bool refines(const std::vector<int>& s1, const std::vector<int>& s2) {
  for (size_t i = 0; i < s1.size(); ++i)
    if (s2[i] != 0 && s2[i] != s1[i]) return false;
  return true;
}

Outcome figure(size_t index, const std::string& what) {
  Outcome o;
  auto fs = reproduce_figures();
  auto& f = fs.at(index);
  o.detail = what + " {" + join(f.got) + "}";
  if (!f.pass) o.fail("expected {" + join(f.expected) + "}, got {" + join(f.got) + "}");
  return o;
}

}  // namespace

int main() {
  run(1, "su(2,2) class lattice", 1.0, [] {
    Outcome o;
    auto d = root_datum("su", {{"m", 2}, {"n", 2}});
    auto& cs = cached_classes(d);
    size_t borel = 0, holo = 0;
    std::set<std::string> labels;
    for (auto& c : cs) {
      borel += is_borel(d, c.witness);
      holo += holomorphic_class(d, c.witness) != HoloClass::Neither;
      labels.insert(figure1_label(c.witness));
    }
    o.detail = std::to_string(cs.size()) + " classes, " + std::to_string(borel) + " Borel, " + std::to_string(holo) +
               " holomorphic or anti-holomorphic, " + std::to_string(labels.size()) + " distinct labels";
    if (cs.size() != 18 || borel != 6 || holo != 9 || labels.size() != 18 || labels.count("")) o.fail(o.detail);
    auto f = reproduce_figures().at(0);
    if (!f.pass) o.fail("marked label sets differ: got {" + join(f.got) + "}");
    return o;
  });

  run(2, "su(2,2)/sp(1,1) decomposable classes", 1.0, [] { return figure(3, "12 classes"); });

  run(3, "so(4,2)/u(2,1) decomposable classes in both models", 1.0, [] {
    Outcome o = figure(1, "su(2,2) model");
    auto f = reproduce_figures().at(2);
    if (!f.pass) o.fail("so(4,2) model: got {" + join(f.got) + "}");
    o.detail += ", so(4,2) model agrees";
    return o;
  });

  run(4, "f4(-20)/so(8,1) decomposable faces", 1.0, [] {
    Outcome o;
    auto p = symmetric_pair("f4m20_so81");
    std::vector<std::string> dec;
    for (auto& c : cached_classes(p.datum))
      if (decide_iii(p, c.witness).decomposable) dec.push_back(vec_str(primitive_integer(c.witness)));
    std::set<std::string> got(dec.begin(), dec.end());
    std::set<std::string> want = {vec_str(V({1, 1, 1, 1})), vec_str(V({1, 1, 0, 0})), vec_str(V({0, 0, 0, 0}))};
    o.detail = "{" + join(dec) + "}";
    if (got != want || dec.size() != 3) o.fail("got " + o.detail);
    if (!verify_pair(p).pass()) o.fail("table mismatch");
    return o;
  });

  run(5, "criterion vs tables on the instance list", 600.0, [] {
    Outcome o;
    std::vector<std::pair<std::string, Params>> required = {
        {"su_mk", {{"m", 3}, {"n", 2}, {"k", 1}}},
        {"su_sp", {{"m", 1}, {"n", 2}}},
        {"su_sp", {{"m", 1}, {"n", 1}}},
        {"so_u", {{"m", 2}, {"n", 2}, {"x", 1}, {"y", 1}}},
        {"so_u", {{"m", 2}, {"n", 2}, {"x", 1}, {"y", 2}}},
        {"so_u", {{"m", 2}, {"n", 2}, {"x", 2}, {"y", 1}}},
        {"so_u", {{"m", 2}, {"n", 2}, {"x", 2}, {"y", 2}}},
        {"so_u", {{"m", 2}, {"n", 3}, {"x", 1}, {"y", 1}}},
        {"so_u", {{"m", 2}, {"n", 3}, {"x", 2}, {"y", 1}}},
        {"so_kl", {{"p", 4}, {"q", 5}, {"k", 4}, {"l", 1}}},
        {"so_kl", {{"p", 4}, {"q", 5}, {"k", 4}, {"l", 2}}},
        {"so_kl", {{"p", 4}, {"q", 5}, {"k", 4}, {"l", 3}}},
        {"so_kl", {{"p", 4}, {"q", 5}, {"k", 4}, {"l", 4}}},
        {"sp_mk", {{"m", 1}, {"n", 2}, {"k", 1}}},
        {"sp_kl", {{"m", 2}, {"n", 2}, {"k", 1}, {"l", 1}}},
        {"so_kl", {{"p", 3}, {"q", 3}, {"k", 3}, {"l", 1}}},
        {"so_kl", {{"p", 3}, {"q", 2}, {"k", 3}, {"l", 1}}},
        {"sostar_u", {{"n", 4}, {"m", 1}}},
        {"sostar_sostar", {{"n", 4}, {"m", 1}}},
        {"slC_sp", {{"n", 2}}},
        {"slC_sustar", {{"n", 2}}},
        {"soC_so", {{"n", 4}, {"m", 1}}},
        {"soC_sor", {{"n", 4}, {"m", 1}}},
        {"f4_4_sp21", {}},
        {"f4_4_so54", {}},
        {"f4m20_so81", {}},
        {"e6_2_so64", {}},
        {"e6_2_su42", {}},
        {"e6_2_sp31", {}},
        {"e6_2_f44", {}},
        {"e6_2_sostar10", {}},
        {"e6m14_so28", {}},
        {"e6m14_f4", {}},
        {"e7m5_so84", {}},
        {"e7m5_su62", {}},
        {"e7m5_e62", {}},
        {"e7m5_e6m14", {}},
        {"e8m24_so124", {}},
        {"e8m24_e7m5", {}},
    };
    std::set<std::string> verified;
    size_t classes = 0, instances = 0;
    for (auto& p : catalog()) {
      auto r = verify_pair(p);
      ++instances;
      classes += r.classes_total;
      verified.insert(id_of(p));
      if (!r.pass()) o.fail(id_of(p) + ": " + std::to_string(r.mismatches.size()) + " mismatches");
    }
    for (auto& [id, params] : required) {
      std::string key = id + (params.empty() ? "" : "[" + params_str(params) + "]");
      if (!verified.count(key)) o.fail(key + " not in the instance list");
    }
    if (o.pass)
      o.detail = std::to_string(instances) + " instances, " + std::to_string(classes) + " classes, 0 mismatches";
    return o;
  });

  run(6, "no proper decomposable class for the no-decomposition rows", 300.0, [] {
    Outcome o;
    std::vector<SymmetricPair> ps = {
        symmetric_pair("su_slC", {{"n", 2}}),         symmetric_pair("sp_spC", {{"n", 1}}),
        symmetric_pair("spR_spC", {{"n", 2}}),        symmetric_pair("sostar_sustar", {{"n", 2}}),
        symmetric_pair("slC_su", {{"n", 2}, {"m", 2}}), symmetric_pair("so_gl", {{"n", 4}}),
        symmetric_pair("e6_2_su33"),                  symmetric_pair("e7m5_sostar12"),
        symmetric_pair("e7m25_e6m26"),                symmetric_pair("e8m24_e7m25"),
    };
    for (auto& p : catalog())
      if (p.in_table("T5")) ps.push_back(p);
    std::set<std::string> seen;
    for (auto& p : ps) {
      if (!seen.insert(id_of(p)).second) continue;
      if (!p.in_table("T5")) o.fail(id_of(p) + " is not tagged as a no-decomposition row");
      for (auto& c : cached_classes(p.datum))
        if (!c.pattern.all_zero() && decide_iii(p, c.witness).decomposable)
          o.fail(id_of(p) + " decomposable at " + vec_str(c.witness));
    }
    if (o.pass) o.detail = std::to_string(seen.size()) + " pairs, none with a proper decomposable class";
    return o;
  });

  run(7, "three criteria agree on classes and random points", 600.0, [] {
    Outcome o;
    size_t classes = 0, points = 0, certs = 0;
    auto check = [&](const SymmetricPair& p, const RatVec& a) {
      auto v3 = decide_iii(p, a), vc = decide_ii_cone(p, a), vp = decide_ii_prime(p, a);
      if (v3.decomposable != vc.decomposable || v3.decomposable != vp.decomposable)
        o.fail(id_of(p) + " disagree at " + vec_str(a));
      for (auto* v : {&v3, &vc, &vp}) {
        ++certs;
        if (!verify_verdict(p, a, *v)) o.fail(id_of(p) + " certificate rejected at " + vec_str(a));
      }
    };
    for (auto& p : catalog())
      for (auto& c : cached_classes(p.datum)) {
        check(p, c.witness);
        ++classes;
      }
    const size_t target = 10000;
    size_t per = target / catalog().size() + 1;
    unsigned seed = 1;
    while (points < target)
      for (auto& p : catalog()) {
        for (auto& a : testutil::random_dominant(p.datum, int(per), seed++)) {
          check(p, a);
          if (++points >= target) break;
        }
        if (points >= target) break;
      }
    if (o.pass)
      o.detail = std::to_string(classes) + " classes and " + std::to_string(points) + " random points, " +
                 std::to_string(certs) + " certificates re-checked";
    return o;
  });

  run(8, "structural properties across the catalog", 600.0, [] {
    Outcome o;
    size_t n_assoc = 0, n_mono = 0, n_holo = 0, n_split = 0, n_highlow = 0, n_borel = 0;
    for (auto& p : catalog()) {
      auto& d = p.datum;
      auto& cs = cached_classes(d);
      auto assoc = associated_pair(p);
      bool split = filter_split(p).has_value(), holo_type = is_holomorphic_type(p);
      std::vector<bool> dec;
      std::vector<std::vector<int>> signs;
      for (auto& c : cs) {
        dec.push_back(decide_iii(p, c.witness).decomposable);
        signs.push_back(full_signs(d, c.witness));
      }
      for (size_t i = 0; i < cs.size(); ++i) {
        auto& w = cs[i].witness;
        bool proper = !cs[i].pattern.all_zero();
        ++n_assoc;
        if (dec[i] != decide_iii(assoc, w).decomposable) o.fail(id_of(p) + " associated pair differs at " + vec_str(w));
        auto h = holomorphic_class(d, w);
        if (holo_type && h != HoloClass::Neither) {
          ++n_holo;
          if (!dec[i]) o.fail(id_of(p) + " holomorphic class not decomposable at " + vec_str(w));
        }
        if (split && proper) {
          ++n_split;
          if (dec[i]) o.fail(id_of(p) + " split pair decomposable at " + vec_str(w));
        }
        if (proper && filter_highlow(p, w)) {
          ++n_highlow;
          if (dec[i]) o.fail(id_of(p) + " highlow filter contradicted at " + vec_str(w));
        }
        if (is_borel(d, w) && dec[i]) {
          ++n_borel;
          if (!p.sigma_is_theta && !d.equal_rank()) o.fail(id_of(p) + " Borel corollary fails at " + vec_str(w));
        }
        if (!dec[i]) continue;
        for (size_t j = 0; j < cs.size(); ++j)
          if (refines(signs[i], signs[j])) {
            ++n_mono;
            if (!dec[j]) o.fail(id_of(p) + " monotonicity fails from " + vec_str(w) + " to " + vec_str(cs[j].witness));
          }
      }
      // spot check that the sign refinement is the containment relation
      for (size_t i = 0; i < cs.size() && i < 12; ++i)
        for (size_t j = 0; j < cs.size() && j < 12; ++j)
          if (refines(signs[i], signs[j]) != contains(d, cs[i].witness, cs[j].witness))
            o.fail(id_of(p) + " containment disagrees with sign refinement");
    }
    if (o.pass) {
      std::ostringstream s;
      s << "associated " << n_assoc << ", monotone " << n_mono << ", holomorphic " << n_holo << ", split " << n_split
        << ", highlow " << n_highlow << ", decomposable Borel " << n_borel << " cases";
      o.detail = s.str();
    }
    return o;
  });

  run(9, "dominance of -sigma(alpha0) against the listed pairs", 120.0, [] {
    Outcome o;
    auto es = verify_appendix_b(catalog());
    size_t b1 = 0, b2 = 0;
    std::vector<std::string> bad;
    for (auto& e : es) {
      b1 += e.listed == AppendixB::B1;
      b2 += e.listed == AppendixB::B2;
      if (e.pass) continue;
      auto id = e.pair_id + (e.params.empty() ? "" : "[" + params_str(e.params) + "]");
      bad.push_back(id + ": " + e.detail);
    }
    for (size_t i = 0; i < bad.size(); ++i) o.fail(std::to_string(bad.size()) + " failing, " + bad[i]);
    for (size_t i = 1; i < bad.size(); ++i) o.detail += "; " + bad[i];
    if (o.pass)
      o.detail = std::to_string(es.size()) + " pairs with nonzero t^sigma, " + std::to_string(b1) + " in B1, " +
                 std::to_string(b2) + " in B2";
    return o;
  });

  run(10, "tensor products", 60.0, [] {
    Outcome o;
    std::vector<RootDatum> data = {root_datum("spR", {{"n", 2}}), root_datum("su", {{"m", 2}, {"n", 1}}),
                                   root_datum("sostar", {{"n", 3}}), root_datum("su", {{"m", 2}, {"n", 2}}),
                                   root_datum("sp", {{"m", 1}, {"n", 1}})};
    size_t pairs = 0, decomposable = 0;
    for (auto& d : data) {
      auto& cs = cached_classes(d);
      for (auto& x : cs)
        for (auto& y : cs) {
          if (x.pattern.all_zero() || y.pattern.all_zero()) continue;
          auto t = tensor_instance(d, x.witness, y.witness);
          bool dec = tensor_decide(t).decomposable;
          ++pairs;
          decomposable += dec;
          if (dec != tensor_characterize(t))
            o.fail(d.label + " decide and characterize differ at " + vec_str(x.witness) + " x " + vec_str(y.witness));
          if (!d.hermitian && dec) o.fail(d.label + " non-Hermitian pair decomposable");
          if (is_borel(d, x.witness) && is_borel(d, y.witness)) {
            auto hx = holomorphic_class(d, x.witness), hy = holomorphic_class(d, y.witness);
            bool want = d.hermitian && hx == hy && hx != HoloClass::Neither;
            if (dec != want) o.fail(d.label + " Borel tensor rule fails at " + vec_str(x.witness));
          }
        }
    }
    if (o.pass)
      o.detail = std::to_string(pairs) + " ordered class pairs, " + std::to_string(decomposable) + " decomposable";
    return o;
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures ? 1 : 0;
}
