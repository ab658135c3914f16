#include "branchdec/tensor.hpp"
#include "catalog_cache.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace branchdec;
using testutil::V;

TEST_CASE("tensor examples") {
  auto sp2 = root_datum("spR", {{"n", 2}});
  auto t1 = tensor_instance(sp2, V({2, 1}), V({1, 1}));
  CHECK(tensor_decide(t1).decomposable);
  CHECK(tensor_characterize(t1));
  auto t2 = tensor_instance(sp2, V({2, 1}), V({-1, -2}));
  CHECK(t2.a2 == V({-2, -1}));
  auto v = tensor_decide(t2);
  CHECK_FALSE(v.decomposable);
  CHECK(v.kind == CertKind::ViolatingRoot);
  CHECK_FALSE(tensor_characterize(t2));

  auto so6 = root_datum("sostar", {{"n", 3}});
  // a1 holomorphic (a2 + a3 >= 0), a2 neither
  auto t3 = tensor_instance(so6, V({2, 1, 0}), V({1, 0, -2}));
  CHECK_FALSE(tensor_characterize(t3));
  CHECK_FALSE(tensor_decide(t3).decomposable);

  auto su12 = root_datum("su", {{"m", 1}, {"n", 2}});
  CHECK(tensor_characterize(tensor_instance(su12, V({2, 0, -1}), V({1, 0, 0}))));

  CHECK_THROWS_AS(tensor_instance(sp2, V({1, 2}), V({1, 1})), DominanceError);
  CHECK_THROWS_AS(tensor_decide(TensorInstance{sp2, V({2, 1}), V({2, 1})}), DominanceError);
  CHECK_THROWS_AS(tensor_instance(sp2, V({2, 1}), V({0, 0})), StructuralError);
}

TEST_CASE("w0 of K") {
  auto d = root_datum("su", {{"m", 2}, {"n", 3}});
  for (auto& a : testutil::random_dominant(d, 20, 5)) {
    auto w = longest_k_element(d, a);
    CHECK(is_dominant(d, canonical(d, neg(w))));
    CHECK(longest_k_element(d, neg(w)) == neg(a));
    CHECK(dot(w, w) == dot(a, a));
  }
  CHECK(longest_k_element(d, V({2, 1, 3, 2, 1})) == canonical(d, V({1, 2, 1, 2, 3})));
}

TEST_CASE("decide and characterize agree over all class pairs") {
  std::vector<RootDatum> data = {
      root_datum("spR", {{"n", 2}}),           root_datum("su", {{"m", 2}, {"n", 1}}),
      root_datum("sostar", {{"n", 3}}),        root_datum("su", {{"m", 2}, {"n", 2}}),
      root_datum("sp", {{"m", 1}, {"n", 1}}),  root_datum("so2m2n", {{"m", 2}, {"n", 1}}),
      root_datum("so2m12n", {{"m", 1}, {"n", 1}}), root_datum("so2m2n1", {{"m", 1}, {"n", 1}}),
      root_datum("slC", {{"n", 2}}),           root_datum("f4m20"),
  };
  for (auto& d : data) {
    INFO(d.label);
    auto& cs = testutil::classes_of(d);
    int decomposable = 0;
    for (auto& x : cs)
      for (auto& y : cs) {
        if (x.pattern.all_zero() || y.pattern.all_zero()) continue;
        auto t = tensor_instance(d, x.witness, y.witness);
        bool dec = tensor_decide(t).decomposable;
        decomposable += dec;
        CHECK(dec == tensor_characterize(t));
        // roles exchanged
        bool sym = true;
        for (auto& w : d.p_weights)
          if (sgn(dot(w.coeffs, t.a2)) > 0 && sgn(dot(w.coeffs, t.a1)) < 0) sym = false;
        CHECK(dec == sym);
        if (is_borel(d, x.witness) && is_borel(d, y.witness)) {
          auto hx = holomorphic_class(d, x.witness), hy = holomorphic_class(d, y.witness);
          CHECK(dec == (d.hermitian && hx == hy && hx != HoloClass::Neither));
        }
      }
    if (!d.hermitian) CHECK(decomposable == 0);
  }
}
