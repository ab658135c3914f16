#include <random>

#include "branchdec/ratlin.hpp"
#include "doctest.h"

using namespace branchdec;

namespace {

RatVec V(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Fourier-Motzkin oracle. Rows: coeffs . x (>= or >) rhs.
struct FmRow {
  RatVec c;
  Rat rhs;
  bool strict;
};

bool fm_feasible(std::vector<FmRow> rows, size_t dim) {
  for (size_t v = 0; v < dim; ++v) {
    std::vector<FmRow> pos, negs, rest;
    for (auto& r : rows) {
      int s = sgn(r.c[v]);
      (s > 0 ? pos : s < 0 ? negs : rest).push_back(r);
    }
    for (auto& p : pos)
      for (auto& n : negs) {
        Rat a = p.c[v], b = -n.c[v];
        FmRow r{add(scale(b, p.c), scale(a, n.c)), b * p.rhs + a * n.rhs, p.strict || n.strict};
        rest.push_back(r);
      }
    rows = std::move(rest);
  }
  for (auto& r : rows) {
    if (r.strict && !(0 > r.rhs)) return false;
    if (!r.strict && !(0 >= r.rhs)) return false;
  }
  return true;
}

bool fm_of(const LpSystem& s) {
  std::vector<FmRow> rows;
  for (auto& [a, b] : s.eqs) {
    rows.push_back({a, b, false});
    rows.push_back({neg(a), -b, false});
  }
  for (auto& [g, h] : s.ges) rows.push_back({g, h, false});
  for (auto& st : s.stricts) rows.push_back({st, 0, true});
  if (s.nonneg)
    for (size_t i = 0; i < s.dim; ++i) rows.push_back({unit(s.dim, i), 0, false});
  return fm_feasible(rows, s.dim);
}

}  // namespace

TEST_CASE("rat parsing and printing") {
  CHECK(parse_rat("3/6") == Rat(1, 2));
  CHECK(parse_rat("-4") == Rat(-4));
  CHECK(rat_str(parse_rat("-10/5")) == "-2");
  CHECK(rat_str(Rat(6, 4) / 1) == "3/2");
  CHECK_THROWS_AS(parse_rat("1/0"), StructuralError);
  CHECK_THROWS_AS(parse_rat("x"), StructuralError);
  CHECK_THROWS_AS(parse_rat("1/-2"), StructuralError);
}

TEST_CASE("lp symmetric witness") {
  auto r = lp_feasible({{V({1, 1}), Rat(1)}, {V({1, -1}), Rat(0)}}, true, {});
  REQUIRE(r.feasible);
  CHECK(r.witness == RatVec{Rat(1, 2), Rat(1, 2)});
}

TEST_CASE("lp sum contradiction") {
  LpSystem s;
  s.dim = 2;
  s.nonneg = true;
  s.eqs = {{V({1, 1}), Rat(1)}, {V({-1, -1}), Rat(1)}};
  auto r = lp_feasible(s);
  REQUIRE_FALSE(r.feasible);
  CHECK(verify_certificate(s, r.certificate));
}

TEST_CASE("lp structural errors") {
  LpSystem s;
  s.dim = 2;
  CHECK_THROWS_AS(lp_feasible(s), StructuralError);
  s.eqs = {{V({1, 1, 1}), Rat(0)}};
  CHECK_THROWS_AS(lp_feasible(s), StructuralError);
}

TEST_CASE("lp strict homogeneous cone") {
  LpSystem s;
  s.dim = 2;
  s.stricts = {V({1, 0}), V({0, 1}), V({-1, -1})};
  auto r = lp_feasible(s);
  REQUIRE_FALSE(r.feasible);
  CHECK(verify_certificate(s, r.certificate));
  s.stricts.pop_back();
  r = lp_feasible(s);
  REQUIRE(r.feasible);
  CHECK(verify_witness(s, r.witness));
}

TEST_CASE("lp random systems agree with Fourier-Motzkin") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3), kind(0, 3), dimd(1, 4), cnt(1, 5);
  int feas = 0, infeas = 0;
  for (int iter = 0; iter < 600; ++iter) {
    LpSystem s;
    s.dim = dimd(rng);
    s.nonneg = kind(rng) == 0;
    int n = cnt(rng);
    for (int k = 0; k < n; ++k) {
      RatVec a(s.dim);
      for (auto& x : a) x = coef(rng);
      int t = kind(rng);
      if (t == 0)
        s.eqs.push_back({a, Rat(coef(rng))});
      else if (t == 1)
        s.ges.push_back({a, Rat(coef(rng))});
      else
        s.stricts.push_back(a);
    }
    auto r = lp_feasible(s);
    bool oracle = fm_of(s);
    CHECK(r.feasible == oracle);
    if (r.feasible) {
      CHECK(verify_witness(s, r.witness));
      ++feas;
    } else {
      CHECK(verify_certificate(s, r.certificate));
      ++infeas;
    }
  }
  CHECK(feas > 50);
  CHECK(infeas > 50);
}

TEST_CASE("canonicalize_mod") {
  RatVec ones = V({1, 1, 1, 1});
  CHECK(canonicalize_mod(V({3, 3, 3, 3}), {ones}) == V({0, 0, 0, 0}));
  CHECK(canonicalize_mod(V({2, 1, 1, 0}), {ones}) == V({1, 0, 0, -1}));
  RatVec e78 = V({0, 0, 0, 0, 0, 0, 1, 1});
  auto c = canonicalize_mod(V({0, 0, 0, 0, 0, 0, 1, 3}), {e78});
  CHECK(c[6] == -1);
  CHECK(c[7] == 1);
  CHECK_THROWS_AS(canonicalize_mod(V({1, 2}), {V({1, -1})}), StructuralError);
}

TEST_CASE("canonicalize_mod is idempotent and linear") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-9, 9);
  RatVec ones = V({1, 1, 1, 1, 1});
  for (int i = 0; i < 100; ++i) {
    RatVec x(5), y(5);
    for (auto& v : x) {
      v = Rat(coef(rng), 1 + (coef(rng) + 9) % 4);
      v.canonicalize();
    }
    for (auto& v : y) v = coef(rng);
    auto cx = canonicalize_mod(x, {ones});
    CHECK(canonicalize_mod(cx, {ones}) == cx);
    CHECK(canonicalize_mod(add(x, scale(3, y)), {ones}) == add(cx, scale(3, canonicalize_mod(y, {ones}))));
    CHECK(dot(V({1, -1, 0, 0, 0}), cx) == dot(V({1, -1, 0, 0, 0}), x));
  }
}

TEST_CASE("linear algebra helpers") {
  auto K = kernel({V({1, 1, 0}), V({0, 1, 1})}, 3);
  REQUIRE(K.size() == 1);
  CHECK(dot(V({1, 1, 0}), K[0]) == 0);
  CHECK(rank({V({1, 2}), V({2, 4})}, 2) == 1);
  CHECK(primitive_integer({Rat(1, 2), Rat(-3, 4), Rat(0)}) == V({2, -3, 0}));
  LinMap m({V({0, 1}), V({1, 0})});
  CHECK(m.compose(m) == LinMap::identity(2));
  CHECK(m.apply(V({3, 4})) == V({4, 3}));
}
