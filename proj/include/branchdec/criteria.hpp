#pragma once

#include <optional>
#include <string>

#include "branchdec/pairs.hpp"
#include "json.hpp"

namespace branchdec {

enum class CertKind {
  ViolatingRoot,  // alpha with alpha(a) > 0 and alpha(sigma a) < 0
  FarkasVector,   // b in t^sigma, positive on every sigma-symmetric part
  ConeWitness,    // coefficients over Delta(u cap p), in p_weights order of the generators
  Vacuous,        // q = g or sigma = theta
  Scan            // decide_iii found no violating weight
};
std::string cert_kind_str(CertKind k);

struct Verdict {
  bool decomposable = false;
  CertKind kind = CertKind::Scan;
  RatVec data;
};

nlohmann::ordered_json verdict_json(const Verdict& v);

Verdict decide_iii(const SymmetricPair& p, const RatVec& a);
Verdict decide_ii_cone(const SymmetricPair& p, const RatVec& a);
Verdict decide_ii_prime(const SymmetricPair& p, const RatVec& a);

/// Re-checks the certificate of v by direct evaluation at a.
bool verify_verdict(const SymmetricPair& p, const RatVec& a, const Verdict& v);

/// Present iff dim t^sigma = 0: no proper q is decomposable.
std::optional<std::string> filter_split(const SymmetricPair& p);
/// Present when -sigma(alpha0) dominance rules q out; a must be dominant.
std::optional<std::string> filter_highlow(const SymmetricPair& p, const RatVec& a);
bool minus_sigma_alpha0_dominant(const SymmetricPair& p);

}  // namespace branchdec
