#include <set>

#include "branchdec/parabolic.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace branchdec;
using testutil::V;

namespace {

// every weak ordering of the coordinates of su(m,n), dominant ones only
std::set<SignPattern> su_oracle(int m, int n) {
  auto d = root_datum("su", {{"m", m}, {"n", n}});
  int N = m + n;
  std::set<SignPattern> out;
  std::vector<int> r(N, 0);
  while (true) {
    RatVec a;
    for (int x : r) a.emplace_back(x);
    a = canonical(d, a);
    if (is_dominant(d, a)) out.insert(sign_pattern(d, a));
    int i = 0;
    while (i < N && ++r[i] == N) r[i++] = 0;
    if (i == N) break;
  }
  return out;
}

// integer grid points; only a lower bound in general
std::set<SignPattern> grid_oracle(const RootDatum& d, int B) {
  std::set<SignPattern> out;
  std::vector<int> r(d.dim, -B);
  while (true) {
    RatVec a;
    for (int x : r) a.emplace_back(x);
    a = canonical(d, a);
    if (is_dominant(d, a)) out.insert(sign_pattern(d, a));
    size_t i = 0;
    while (i < d.dim && ++r[i] > B) r[i++] = -B;
    if (i == d.dim) break;
  }
  return out;
}

std::set<SignPattern> patterns(const std::vector<ParabolicClass>& cs) {
  std::set<SignPattern> s;
  for (auto& c : cs) s.insert(c.pattern);
  return s;
}

}  // namespace

TEST_CASE("su(m,n) classes match weak orderings") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
    INFO(m << "," << n);
    auto cs = enumerate_classes(root_datum("su", {{"m", m}, {"n", n}}));
    CHECK(patterns(cs) == su_oracle(m, n));
    CHECK(patterns(cs).size() == cs.size());
  }
  CHECK(enumerate_classes(root_datum("su", {{"m", 1}, {"n", 1}})).size() == 3);
  CHECK(enumerate_classes(root_datum("su", {{"m", 2}, {"n", 1}})).size() == 6);
}

TEST_CASE("su(2,2) has 18 classes, 6 Borel, 9 holomorphic or anti-holomorphic") {
  auto d = root_datum("su", {{"m", 2}, {"n", 2}});
  auto cs = enumerate_classes(d);
  REQUIRE(cs.size() == 18);
  int borel = 0, holo = 0, both = 0;
  for (auto& c : cs) {
    borel += is_borel(d, c.witness);
    auto h = holomorphic_class(d, c.witness);
    holo += h != HoloClass::Neither;
    both += h == HoloClass::Both;
  }
  CHECK(borel == 6);
  CHECK(holo == 9);
  CHECK(both == 1);
}

TEST_CASE("grid points never leave the enumerated classes") {
  struct S {
    std::string id;
    Params p;
    int B;
    bool exact;
  };
  for (auto& s : std::vector<S>{{"sp", {{"m", 1}, {"n", 1}}, 3, true},
                                {"so2m2n", {{"m", 2}, {"n", 1}}, 3, true},
                                {"so2m12n", {{"m", 1}, {"n", 1}}, 3, true},
                                {"so2m2n1", {{"m", 1}, {"n", 1}}, 3, true},
                                {"spR", {{"n", 2}}, 3, true},
                                {"sostar", {{"n", 3}}, 3, false},
                                {"slC", {{"n", 2}}, 2, false},
                                {"sp", {{"m", 2}, {"n", 1}}, 2, false}}) {
    INFO(s.id);
    auto d = root_datum(s.id, s.p);
    auto enumerated = patterns(enumerate_classes(d));
    auto grid = grid_oracle(d, s.B);
    for (auto& g : grid) CHECK(enumerated.count(g) == 1);
    if (s.exact) CHECK(grid == enumerated);
  }
}

TEST_CASE("witnesses are integral canonical and reproduce their pattern") {
  for (auto id : {"f4m20", "f4_4"}) {
    auto d = root_datum(id);
    auto cs = enumerate_classes(d);
    CHECK(cs.size() == (std::string(id) == "f4m20" ? 10u : 46u));
    for (auto& c : cs) {
      CHECK(c.witness == canonical(d, c.witness));
      for (auto& x : c.witness) CHECK(x.get_den() == 1);
      CHECK(sign_pattern(d, c.witness) == c.pattern);
    }
  }
}

TEST_CASE("zero class and maximal classes") {
  auto d = root_datum("su", {{"m", 2}, {"n", 2}});
  auto cs = enumerate_classes(d);
  int zero = 0;
  for (auto& c : cs) {
    if (c.pattern.all_zero()) {
      ++zero;
      CHECK(is_zero(c.witness));
      // the zero class contains every other class
      for (auto& o : cs) CHECK(pattern_contains(o.pattern, c.pattern));
    }
  }
  CHECK(zero == 1);
}

TEST_CASE("containment is a partial order and agrees with pointwise containment") {
  auto d = root_datum("su", {{"m", 2}, {"n", 2}});
  auto cs = enumerate_classes(d);
  for (auto& x : cs) {
    CHECK(pattern_contains(x.pattern, x.pattern));
    CHECK(contains(d, x.witness, x.witness));
    for (auto& y : cs) {
      if (&x != &y && pattern_contains(x.pattern, y.pattern)) CHECK_FALSE(pattern_contains(y.pattern, x.pattern));
      if (contains(d, x.witness, y.witness)) CHECK(pattern_contains(x.pattern, y.pattern));
      for (auto& z : cs)
        if (pattern_contains(x.pattern, y.pattern) && pattern_contains(y.pattern, z.pattern))
          CHECK(pattern_contains(x.pattern, z.pattern));
    }
  }
  // X1 inside Z1
  CHECK(contains(d, V({1, 0, 0, -1}), canonical(d, V({1, 0, 0, 0}))));
}

TEST_CASE("nilradical and holomorphic class on explicit points") {
  auto d = root_datum("su", {{"m", 2}, {"n", 2}});
  auto a = V({2, 1, -1, -2});
  CHECK(nilradical_p_weights(d, a).size() == 4);
  CHECK(holomorphic_class(d, a) == HoloClass::Holo);
  CHECK(holomorphic_class(d, V({-1, -2, 2, 1})) == HoloClass::AntiHolo);
  CHECK(holomorphic_class(d, zeros(4)) == HoloClass::Both);
  CHECK(holomorphic_class(root_datum("f4m20"), V({1, 0, 0, 0})) == HoloClass::NotHermitian);
  CHECK(is_borel(d, a));
  CHECK_FALSE(is_borel(d, V({1, 1, -1, -1})));
  CHECK_THROWS_AS(sign_pattern(d, V({0, 1, 0, -1})), DominanceError);
  CHECK_FALSE(is_borel(root_datum("so2m12n1", {{"m", 1}, {"n", 1}}), V({2, 1})));
}

TEST_CASE("rank bound") {
  auto e8 = root_datum("e8m24");
  CHECK_THROWS_AS(enumerate_classes(e8, 7), ResourceBound);
  CHECK_THROWS_AS(enumerate_classes(root_datum("su", {{"m", 2}, {"n", 2}}), 2), ResourceBound);
  CHECK(configured_rank_bound() >= 2);
}
