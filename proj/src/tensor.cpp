#include "branchdec/tensor.hpp"

namespace branchdec {

RatVec longest_k_element(const RootDatum& d, const RatVec& a) {
  RatVec x = canonical(d, a);
  bool moved = true;
  while (moved) {
    moved = false;
    for (auto& r : d.simple_k_roots) {
      Rat rx = dot(r, x);
      if (sgn(rx) > 0) {
        x = sub(x, scale(2 * rx / dot(r, r), r));
        moved = true;
      }
    }
  }
  return canonical(d, x);
}

namespace {

void check(const TensorInstance& t) {
  auto& d = t.datum;
  require_dominant(d, t.a1);
  if (!is_dominant(d, canonical(d, neg(t.a2))))
    throw DominanceError(vec_str(t.a2) + " is not in the second factor's chamber for " + d.label);
  for (auto* v : {&t.a1, &t.a2}) {
    bool proper = false;
    for (auto& w : d.p_weights) proper = proper || sgn(dot(w.coeffs, *v)) != 0;
    if (!proper) throw StructuralError("tensor factors must be proper");
  }
}

// holomorphic class is W(k)-invariant, so the sign test works in either chamber
std::pair<bool, bool> holo_anti(const RootDatum& d, const RatVec& a) {
  auto nonneg = [&](const std::vector<size_t>& idx) {
    for (size_t i : idx)
      if (sgn(dot(d.p_weights[i].coeffs, a)) < 0) return false;
    return true;
  };
  return {nonneg(d.hermitian->p_plus), nonneg(d.hermitian->p_minus)};
}

}  // namespace

TensorInstance tensor_instance(const RootDatum& d, const RatVec& a1, const RatVec& a2) {
  TensorInstance t{d, require_dominant(d, a1), longest_k_element(d, require_dominant(d, a2))};
  check(t);
  return t;
}

Verdict tensor_decide(const TensorInstance& t) {
  check(t);
  RatVec a1 = canonical(t.datum, t.a1), a2 = canonical(t.datum, t.a2);
  for (auto& w : t.datum.p_weights)
    if (sgn(dot(w.coeffs, a1)) > 0 && sgn(dot(w.coeffs, a2)) < 0) return {false, CertKind::ViolatingRoot, w.coeffs};
  return {true, CertKind::Scan, {}};
}

bool tensor_characterize(const TensorInstance& t) {
  check(t);
  if (!t.datum.hermitian) return false;
  auto [h1, ah1] = holo_anti(t.datum, canonical(t.datum, t.a1));
  auto [h2, ah2] = holo_anti(t.datum, canonical(t.datum, t.a2));
  return (h1 && h2) || (ah1 && ah2);
}

}  // namespace branchdec
