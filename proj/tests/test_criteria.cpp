#include <map>

#include "branchdec/criteria.hpp"
#include "catalog_cache.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace branchdec;
using testutil::V;

namespace {

// small data only; the acceptance binary covers the rest
bool small(const SymmetricPair& p) { return p.datum.total_rank() <= 4; }

}  // namespace

TEST_CASE("decide_iii examples") {
  auto f4 = symmetric_pair("f4m20_so81");
  CHECK(decide_iii(f4, V({2, 2, 0, 0})).decomposable);
  auto v = decide_iii(f4, V({3, 2, 1, 0}));
  CHECK_FALSE(v.decomposable);
  REQUIRE(v.kind == CertKind::ViolatingRoot);
  for (auto& x : v.data) CHECK(abs(x) == Rat(1, 2));
  CHECK(verify_verdict(f4, V({3, 2, 1, 0}), v));

  auto sp11 = symmetric_pair("su_sp", {{"m", 1}, {"n", 1}});
  CHECK(decide_iii(sp11, V({3, 0, 2, 1})).decomposable);
  auto x1 = decide_iii(sp11, V({1, 0, 0, -1}));
  CHECK_FALSE(x1.decomposable);
  CHECK(cert_kind_str(x1.kind) == "ViolatingRoot");

  auto th = symmetric_pair("theta_su", {{"m", 2}, {"n", 2}});
  auto tv = decide_iii(th, V({1, 0, 0, -1}));
  CHECK(tv.decomposable);
  CHECK(tv.kind == CertKind::Vacuous);
  CHECK_THROWS_AS(decide_iii(sp11, V({0, 1, 0, 0})), DominanceError);
}

TEST_CASE("cone and strict forms on explicit points") {
  auto sp11 = symmetric_pair("su_sp", {{"m", 1}, {"n", 1}});
  auto c = decide_ii_cone(sp11, V({1, 0, 0, -1}));
  CHECK_FALSE(c.decomposable);
  CHECK(c.kind == CertKind::ConeWitness);
  CHECK(verify_verdict(sp11, V({1, 0, 0, -1}), c));
  auto z = decide_ii_cone(sp11, zeros(4));
  CHECK(z.decomposable);
  CHECK(z.kind == CertKind::Vacuous);

  auto u21 = symmetric_pair("so_u", {{"m", 2}, {"n", 1}, {"x", 1}});
  // Z1 (a1 > a2 = a3 = a4) after the change to so(4,2) coordinates
  auto zp = V({1, -1, 1});
  CHECK(decide_ii_cone(u21, zp).decomposable);

  auto sumk = symmetric_pair("su_mk", {{"m", 2}, {"n", 2}, {"k", 1}});
  auto pv = decide_ii_prime(sumk, V({3, 2, 1, 0}));
  CHECK(pv.decomposable);
  CHECK(pv.kind == CertKind::FarkasVector);
  CHECK(verify_verdict(sumk, V({3, 2, 1, 0}), pv));
  // fails a4 >= a1, a2 >= a3 and the l = 1 alternative
  auto a = V({2, 1, 3, 0});
  CHECK_FALSE(decide_ii_prime(sumk, a).decomposable);
  CHECK_FALSE(decide_iii(sumk, a).decomposable);
}

TEST_CASE("Verdict JSON") {
  auto f4 = symmetric_pair("f4m20_so81");
  auto j = verdict_json(decide_iii(f4, V({3, 2, 1, 0})));
  CHECK(j["decomposable"] == false);
  CHECK(j["certificate_kind"] == "ViolatingRoot");
  CHECK(j["certificate_data"].size() == 4);
  CHECK(j.dump().find("1/2") != std::string::npos);
}

TEST_CASE("three criteria agree on every class of small catalog pairs") {
  for (auto& p : testutil::catalog_pairs()) {
    if (!small(p)) continue;
    INFO(p.label());
    for (auto& c : testutil::classes_of(p.datum)) {
      auto v3 = decide_iii(p, c.witness);
      auto vc = decide_ii_cone(p, c.witness);
      auto vp = decide_ii_prime(p, c.witness);
      CHECK(v3.decomposable == vc.decomposable);
      CHECK(v3.decomposable == vp.decomposable);
      CHECK(verify_verdict(p, c.witness, v3));
      CHECK(verify_verdict(p, c.witness, vc));
      CHECK(verify_verdict(p, c.witness, vp));
    }
  }
}

TEST_CASE("verdict is a function of the sign pattern") {
  for (auto& p : testutil::catalog_pairs()) {
    if (!small(p)) continue;
    INFO(p.label());
    std::map<SignPattern, bool> by_class;
    for (auto& c : testutil::classes_of(p.datum)) by_class[c.pattern] = decide_iii(p, c.witness).decomposable;
    for (auto& a : testutil::random_dominant(p.datum, 30, 11)) {
      auto it = by_class.find(sign_pattern(p.datum, a));
      REQUIRE(it != by_class.end());
      bool d = decide_iii(p, a).decomposable;
      CHECK(d == it->second);
      CHECK(d == decide_ii_prime(p, a).decomposable);
    }
  }
}

TEST_CASE("structural properties on small catalog pairs") {
  for (auto& p : testutil::catalog_pairs()) {
    if (!small(p)) continue;
    INFO(p.label());
    auto& cs = testutil::classes_of(p.datum);
    auto assoc = associated_pair(p);
    bool split = filter_split(p).has_value();
    bool holo_type = is_holomorphic_type(p);
    std::vector<bool> dec;
    for (auto& c : cs) dec.push_back(decide_iii(p, c.witness).decomposable);
    for (size_t i = 0; i < cs.size(); ++i) {
      auto& w = cs[i].witness;
      CHECK(dec[i] == decide_iii(assoc, w).decomposable);
      auto h = holomorphic_class(p.datum, w);
      if (holo_type && h != HoloClass::Neither) CHECK(dec[i]);
      if (split && !cs[i].pattern.all_zero()) CHECK_FALSE(dec[i]);
      if (!cs[i].pattern.all_zero() && filter_highlow(p, w)) CHECK_FALSE(dec[i]);
      if (is_borel(p.datum, w) && dec[i]) CHECK((p.sigma_is_theta || p.datum.equal_rank()));
      for (size_t j = 0; j < cs.size(); ++j)
        if (dec[i] && pattern_contains(cs[i].pattern, cs[j].pattern)) CHECK(dec[j]);
    }
  }
}

TEST_CASE("-sigma(alpha0) dominance") {
  CHECK(minus_sigma_alpha0_dominant(symmetric_pair("su_slC", {{"n", 2}})));
  CHECK(minus_sigma_alpha0_dominant(symmetric_pair("su_slC", {{"n", 3}})));
  CHECK(minus_sigma_alpha0_dominant(symmetric_pair("spR_u", {{"n", 2}, {"m", 1}})));
  CHECK_FALSE(minus_sigma_alpha0_dominant(symmetric_pair("f4m20_so81")));
  CHECK_FALSE(minus_sigma_alpha0_dominant(symmetric_pair("su_sp", {{"m", 1}, {"n", 1}})));
}

TEST_CASE("filters") {
  auto slc = symmetric_pair("su_slC", {{"n", 2}});
  CHECK_FALSE(filter_split(slc));
  for (auto& c : testutil::classes_of(slc.datum))
    if (!c.pattern.all_zero()) CHECK(filter_highlow(slc, c.witness));
  auto spr = symmetric_pair("spR_u", {{"n", 2}, {"m", 1}});
  CHECK_FALSE(filter_highlow(spr, V({2, 1})));
  auto sp11 = symmetric_pair("su_sp", {{"m", 1}, {"n", 1}});
  CHECK_FALSE(filter_split(sp11));
  for (auto& c : testutil::classes_of(sp11.datum)) CHECK_FALSE(filter_highlow(sp11, c.witness));
  CHECK_FALSE(filter_split(symmetric_pair("theta_su", {{"m", 2}, {"n", 2}})));
  int split = 0;
  for (auto& p : testutil::catalog_pairs()) split += filter_split(p).has_value();
  CHECK(split > 0);
}
