#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "branchdec/ratlin.hpp"

namespace branchdec {

struct UnsupportedAlgebra : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RankError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DominanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Params = std::map<std::string, int>;

/// "m=2,n=1" -> {m:2, n:1}. Throws StructuralError on malformed text.
Params parse_params(const std::string& s);
std::string params_str(const Params& p);

struct Weight {
  RatVec coeffs;
  int multiplicity = 1;  // the zero weight is stored once; criteria only use signs
  bool is_zero() const { return branchdec::is_zero(coeffs); }
};

struct HermitianData {
  RatVec z;
  std::vector<size_t> p_plus;   // indices into p_weights
  std::vector<size_t> p_minus;
};

struct RootDatum {
  std::string algebra_id;
  Params rank_params;
  std::string label;  // e.g. "su(2,2)"
  size_t dim = 0;
  std::vector<RatVec> pos_k_roots;
  std::vector<Weight> p_weights;
  std::vector<RatVec> dominance;
  std::vector<RatVec> constraints;
  std::optional<HermitianData> hermitian;

  std::vector<RatVec> simple_k_roots;   // indecomposable elements of pos_k_roots, listed order
  std::vector<size_t> p_half;           // canonical half of the nonzero p weights
  std::string notes;

  bool has_zero_weight() const;
  bool equal_rank() const { return !has_zero_weight(); }
  size_t total_rank() const { return dim - constraints.size(); }
};

/// Ids: su so2m2n so2m2n1 so2m12n so2m12n1 sp sostar spR slC soC
///      f4_4 f4m20 e6_2 e6m14 e7m5 e7m25 e8m24
const std::vector<std::string>& supported_algebras();
/// Parameter names each family expects, in order.
std::vector<std::string> algebra_param_names(const std::string& algebra_id);

RootDatum root_datum(const std::string& algebra_id, const Params& rank_params = {});

Rat pairing(const RootDatum& d, const RatVec& w, const RatVec& a);
inline Rat pairing(const RootDatum& d, const Weight& w, const RatVec& a) { return pairing(d, w.coeffs, a); }

bool is_dominant(const RootDatum& d, const RatVec& a);
/// Throws DominanceError unless a is dominant; returns the canonical representative.
RatVec require_dominant(const RootDatum& d, const RatVec& a);
RatVec canonical(const RootDatum& d, const RatVec& a);

/// Highest weight of p (or of p_plus when Hermitian).
Weight highest_p_weight(const RootDatum& d);

struct HermitianSplit {
  std::vector<Weight> p_plus, p_minus;
  RatVec z;
};
std::optional<HermitianSplit> hermitian_split(const RootDatum& d);

/// Element with every simple k root equal to 1 on it.
RatVec regular_dominant(const RootDatum& d);

}  // namespace branchdec
