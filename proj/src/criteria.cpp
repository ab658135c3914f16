#include "branchdec/criteria.hpp"

namespace branchdec {

std::string cert_kind_str(CertKind k) {
  switch (k) {
    case CertKind::ViolatingRoot: return "ViolatingRoot";
    case CertKind::FarkasVector: return "FarkasVector";
    case CertKind::ConeWitness: return "ConeWitness";
    case CertKind::Vacuous: return "Vacuous";
    default: return "Scan";
  }
}

nlohmann::ordered_json verdict_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["decomposable"] = v.decomposable;
  j["certificate_kind"] = cert_kind_str(v.kind);
  auto data = nlohmann::ordered_json::array();
  for (auto& x : v.data) data.push_back(rat_str(x));
  j["certificate_data"] = data;
  return j;
}

namespace {

// Delta(u cap p) with the sigma-symmetric part of each weight
struct Generators {
  std::vector<RatVec> alpha, sym;
};

Generators generators(const SymmetricPair& p, const RatVec& c) {
  Generators g;
  for (auto& w : p.datum.p_weights)
    if (sgn(dot(w.coeffs, c)) > 0) {
      g.alpha.push_back(w.coeffs);
      g.sym.push_back(add(w.coeffs, sigma_weight(p, w.coeffs)));
    }
  return g;
}

std::optional<Verdict> vacuous(const SymmetricPair& p, const RatVec& c) {
  if (p.sigma_is_theta) return Verdict{true, CertKind::Vacuous, {}};
  for (auto& w : p.datum.p_weights)
    if (sgn(dot(w.coeffs, c)) != 0) return std::nullopt;
  return Verdict{true, CertKind::Vacuous, {}};
}

// b in t^sigma (canonical) with sym(b) > 0 for all generators, if one exists
std::optional<RatVec> strict_b(const SymmetricPair& p, const Generators& g) {
  auto basis = eigenspaces(p).t_sigma_basis;
  if (basis.empty()) return std::nullopt;
  LpSystem s;
  s.dim = basis.size();
  for (auto& v : g.sym) {
    RatVec row;
    for (auto& e : basis) row.push_back(dot(v, e));
    s.ges.push_back({row, Rat(1)});
  }
  auto r = lp_feasible(s);
  if (!r.feasible) return std::nullopt;
  RatVec b = zeros(p.datum.dim);
  for (size_t j = 0; j < basis.size(); ++j) b = add(b, scale(r.witness[j], basis[j]));
  return primitive_integer(canonical(p.datum, b));
}

LpSystem cone_system(const Generators& g, size_t dim) {
  LpSystem s;
  s.dim = g.sym.size();
  s.nonneg = true;
  s.eqs.push_back({RatVec(s.dim, Rat(1)), Rat(1)});
  for (size_t c = 0; c < dim; ++c) {
    RatVec row;
    for (auto& v : g.sym) row.push_back(v[c]);
    s.eqs.push_back({row, Rat(0)});
  }
  return s;
}

}  // namespace

Verdict decide_iii(const SymmetricPair& p, const RatVec& a) {
  RatVec c = require_dominant(p.datum, a);
  if (auto v = vacuous(p, c)) return *v;
  RatVec sc = p.sigma.apply(c);
  for (auto& w : p.datum.p_weights)
    if (sgn(dot(w.coeffs, c)) > 0 && sgn(dot(w.coeffs, sc)) < 0) return {false, CertKind::ViolatingRoot, w.coeffs};
  return {true, CertKind::Scan, {}};
}

Verdict decide_ii_cone(const SymmetricPair& p, const RatVec& a) {
  RatVec c = require_dominant(p.datum, a);
  if (auto v = vacuous(p, c)) return *v;
  auto g = generators(p, c);
  auto sys = cone_system(g, p.datum.dim);
  auto r = lp_feasible(sys);
  if (r.feasible) return {false, CertKind::ConeWitness, r.witness};
  // eq_mult = (mu0, mu); -mu pairs positively with every symmetric part
  RatVec mu(r.certificate.eq_mult.begin() + 1, r.certificate.eq_mult.end());
  RatVec b = neg(mu);
  b = canonical(p.datum, scale(Rat(1, 2), add(b, p.sigma.apply(b))));
  if (!is_zero(b)) b = primitive_integer(b);
  Verdict v{true, CertKind::FarkasVector, b};
  if (!verify_verdict(p, c, v)) throw StructuralError("Farkas certificate does not map into t^sigma");
  return v;
}

Verdict decide_ii_prime(const SymmetricPair& p, const RatVec& a) {
  RatVec c = require_dominant(p.datum, a);
  if (auto v = vacuous(p, c)) return *v;
  auto g = generators(p, c);
  for (size_t i = 0; i < g.sym.size(); ++i)
    if (in_row_space(p.datum.constraints, g.sym[i])) {
      RatVec n(g.sym.size(), Rat(0));
      n[i] = 1;
      return {false, CertKind::ConeWitness, n};
    }
  if (auto b = strict_b(p, g)) return {true, CertKind::FarkasVector, *b};
  auto r = lp_feasible(cone_system(g, p.datum.dim));
  if (!r.feasible) throw StructuralError("strict LP and cone LP both infeasible");
  return {false, CertKind::ConeWitness, r.witness};
}

bool verify_verdict(const SymmetricPair& p, const RatVec& a, const Verdict& v) {
  RatVec c = require_dominant(p.datum, a);
  auto g = generators(p, c);
  switch (v.kind) {
    case CertKind::Vacuous:
      return v.decomposable && (p.sigma_is_theta || g.alpha.empty());
    case CertKind::Scan:
      return v.decomposable == decide_iii(p, c).decomposable;
    case CertKind::ViolatingRoot:
      return !v.decomposable && sgn(dot(v.data, c)) > 0 && sgn(dot(v.data, p.sigma.apply(c))) < 0;
    case CertKind::FarkasVector: {
      if (!v.decomposable || v.data.size() != p.datum.dim) return false;
      if (canonical(p.datum, p.sigma.apply(v.data)) != canonical(p.datum, v.data)) return false;
      for (auto& s : g.sym)
        if (sgn(dot(s, v.data)) <= 0) return false;
      return true;
    }
    case CertKind::ConeWitness: {
      if (v.decomposable || v.data.size() != g.sym.size()) return false;
      Rat total(0);
      RatVec sum = zeros(p.datum.dim);
      for (size_t i = 0; i < v.data.size(); ++i) {
        if (sgn(v.data[i]) < 0) return false;
        total += v.data[i];
        sum = add(sum, scale(v.data[i], g.sym[i]));
      }
      return total == 1 && in_row_space(p.datum.constraints, sum);
    }
  }
  return false;
}

std::optional<std::string> filter_split(const SymmetricPair& p) {
  if (p.sigma_is_theta) return std::nullopt;
  if (eigenspaces(p).t_sigma_basis.empty()) return "t^sigma = 0";
  return std::nullopt;
}

bool minus_sigma_alpha0_dominant(const SymmetricPair& p) {
  RatVec x = canonical(p.datum, neg(sigma_weight(p, highest_p_weight(p.datum).coeffs)));
  for (auto& r : p.datum.simple_k_roots)
    if (sgn(dot(x, canonical(p.datum, r))) < 0) return false;
  return true;
}

std::optional<std::string> filter_highlow(const SymmetricPair& p, const RatVec& a) {
  RatVec c = require_dominant(p.datum, a);
  if (vacuous(p, c) || !minus_sigma_alpha0_dominant(p)) return std::nullopt;
  if (!p.datum.hermitian) return "non-Hermitian, -sigma(alpha0) dominant";
  if (!is_holomorphic_type(p)) return "Hermitian, not of holomorphic type, -sigma(alpha0) dominant";
  auto sgn_set = [&](const std::vector<size_t>& idx) {
    for (size_t i : idx)
      if (sgn(dot(p.datum.p_weights[i].coeffs, c)) < 0) return false;
    return true;
  };
  if (!sgn_set(p.datum.hermitian->p_plus) && !sgn_set(p.datum.hermitian->p_minus))
    return "holomorphic type, q neither holomorphic nor anti-holomorphic, -sigma(alpha0) dominant";
  return std::nullopt;
}

}  // namespace branchdec
