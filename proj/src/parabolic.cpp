#include "branchdec/parabolic.hpp"

#include <algorithm>
#include <cstdlib>

namespace branchdec {

bool SignPattern::all_zero() const {
  return std::all_of(signs.begin(), signs.end(), [](int s) { return s == 0; });
}

std::string SignPattern::str() const {
  std::string s;
  for (int x : signs) s += x > 0 ? '+' : x < 0 ? '-' : '0';
  return s;
}

std::string holo_str(HoloClass h) {
  switch (h) {
    case HoloClass::Holo: return "HOLO";
    case HoloClass::AntiHolo: return "ANTIHOLO";
    case HoloClass::Both: return "BOTH";
    case HoloClass::Neither: return "NEITHER";
    default: return "NOT_HERMITIAN";
  }
}

SignPattern sign_pattern(const RootDatum& d, const RatVec& a) {
  RatVec c = require_dominant(d, a);
  SignPattern p;
  for (size_t i : d.p_half) p.signs.push_back(sgn(dot(d.p_weights[i].coeffs, c)));
  return p;
}

std::vector<Weight> nilradical_p_weights(const RootDatum& d, const RatVec& a) {
  RatVec c = require_dominant(d, a);
  std::vector<Weight> out;
  for (auto& w : d.p_weights)
    if (sgn(dot(w.coeffs, c)) > 0) out.push_back(w);
  return out;
}

bool contains(const RootDatum& d, const RatVec& a1, const RatVec& a2) {
  RatVec c1 = require_dominant(d, a1), c2 = require_dominant(d, a2);
  auto ok = [&](const RatVec& w) {
    for (int s : {1, -1}) {
      RatVec x = scale(Rat(s), w);
      if (sgn(dot(x, c1)) >= 0 && sgn(dot(x, c2)) < 0) return false;
    }
    return true;
  };
  for (auto& r : d.pos_k_roots)
    if (!ok(r)) return false;
  for (auto& w : d.p_weights)
    if (!ok(w.coeffs)) return false;
  return true;
}

bool pattern_contains(const SignPattern& p1, const SignPattern& p2) {
  if (p1.signs.size() != p2.signs.size()) throw StructuralError("pattern length mismatch");
  for (size_t i = 0; i < p1.signs.size(); ++i)
    if (p2.signs[i] != 0 && p2.signs[i] != p1.signs[i]) return false;
  return true;
}

HoloClass holomorphic_class(const RootDatum& d, const RatVec& a) {
  RatVec c = require_dominant(d, a);
  if (!d.hermitian) return HoloClass::NotHermitian;
  auto nonneg = [&](const std::vector<size_t>& idx) {
    for (size_t i : idx)
      if (sgn(dot(d.p_weights[i].coeffs, c)) < 0) return false;
    return true;
  };
  bool h = nonneg(d.hermitian->p_plus), ah = nonneg(d.hermitian->p_minus);
  if (h && ah) return HoloClass::Both;
  if (h) return HoloClass::Holo;
  if (ah) return HoloClass::AntiHolo;
  return HoloClass::Neither;
}

bool is_borel(const RootDatum& d, const RatVec& a) {
  RatVec c = require_dominant(d, a);
  for (auto& r : d.pos_k_roots)
    if (sgn(dot(r, c)) == 0) return false;
  for (auto& w : d.p_weights)
    if (sgn(dot(w.coeffs, c)) == 0) return false;
  return true;
}

size_t configured_rank_bound() {
  if (const char* s = std::getenv("BRANCHDEC_RANK_BOUND")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && *end == 0 && v >= 2) return size_t(v);
    throw StructuralError(std::string("BRANCHDEC_RANK_BOUND must be an integer >= 2, got ") + s);
  }
  return 8;
}

namespace {

struct Face {
  std::vector<int> signs;  // over the first signs.size() hyperplanes
  RatVec w;
};

struct Enumerator {
  const RootDatum& d;
  std::vector<RatVec> hyper;

  // rows of the face cone plus one optional extra row
  LpSystem system(const Face& f, const RatVec* extra_ge, const RatVec* extra_eq) const {
    LpSystem s;
    s.dim = d.dim;
    for (auto& c : d.constraints) s.eqs.push_back({c, Rat(0)});
    for (auto& g : d.dominance) s.ges.push_back({g, Rat(0)});
    for (size_t i = 0; i < f.signs.size(); ++i) {
      if (f.signs[i] == 0)
        s.eqs.push_back({hyper[i], Rat(0)});
      else
        s.ges.push_back({scale(Rat(f.signs[i]), hyper[i]), Rat(1)});
    }
    if (extra_ge) s.ges.push_back({*extra_ge, Rat(1)});
    if (extra_eq) s.eqs.push_back({*extra_eq, Rat(0)});
    return s;
  }

  std::optional<RatVec> solve(const LpSystem& s) const {
    auto r = lp_feasible(s);
    if (!r.feasible) return std::nullopt;
    return r.witness;
  }

  void refine(const Face& f, size_t idx, std::vector<Face>& out) const {
    const RatVec& h = hyper[idx];
    Rat hw = dot(h, f.w);
    auto push = [&](int s, const RatVec& w) {
      Face g{f.signs, w};
      g.signs.push_back(s);
      out.push_back(std::move(g));
    };
    int s0 = sgn(hw);
    if (s0 == 0) {
      push(0, f.w);
      for (int s : {1, -1}) {
        RatVec g = scale(Rat(s), h);
        if (auto w = solve(system(f, &g, nullptr))) push(s, *w);
      }
      return;
    }
    // h(w) has sign s0; look for the opposite sign
    RatVec opp = scale(Rat(-s0), h);
    push(s0, f.w);
    if (auto w2 = solve(system(f, &opp, nullptr))) {
      Rat h2 = dot(h, *w2);
      // positive combination with h = 0
      RatVec w0 = sub(scale(hw, *w2), scale(h2, f.w));
      if (s0 < 0) w0 = neg(w0);
      push(0, w0);
      push(-s0, *w2);
    } else if (auto w0 = solve(system(f, nullptr, &h))) {
      push(0, *w0);
    }
  }

  // push the witness off every dominance wall the face does not force
  RatVec regularize(const Face& f) const {
    RatVec w = f.w;
    for (auto& g : d.dominance) {
      if (sgn(dot(g, w)) > 0) continue;
      if (auto x = solve(system(f, &g, nullptr))) w = add(w, *x);
    }
    return w;
  }
};

}  // namespace

std::vector<ParabolicClass> enumerate_classes(const RootDatum& d, std::optional<size_t> rank_bound) {
  size_t bound = rank_bound ? *rank_bound : configured_rank_bound();
  if (d.total_rank() > bound)
    throw ResourceBound(d.label + " has rank " + std::to_string(d.total_rank()) + " above bound " +
                        std::to_string(bound));
  Enumerator en{d, {}};
  for (size_t i : d.p_half) en.hyper.push_back(d.p_weights[i].coeffs);

  std::vector<Face> faces = {Face{{}, zeros(d.dim)}};
  // start from a regular dominant point so most refinements need a single LP
  faces[0].w = regular_dominant(d);
  for (size_t idx = 0; idx < en.hyper.size(); ++idx) {
    std::vector<Face> next;
    for (auto& f : faces) en.refine(f, idx, next);
    faces = std::move(next);
  }
  std::vector<ParabolicClass> out;
  for (auto& f : faces) {
    RatVec w = canonical(d, en.regularize(f));
    if (!is_zero(w)) w = primitive_integer(w);
    ParabolicClass c{SignPattern{f.signs}, w};
    if (sign_pattern(d, w) != c.pattern) throw StructuralError("witness does not reproduce its pattern");
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const ParabolicClass& a, const ParabolicClass& b) {
    return a.pattern > b.pattern;
  });
  return out;
}

}  // namespace branchdec
