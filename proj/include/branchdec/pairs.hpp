#pragma once

#include <optional>
#include <string>
#include <vector>

#include "branchdec/rootdata.hpp"

namespace branchdec {

struct UnknownPair : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CatalogIntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Provenance { Paper, Derived };
enum class AppendixB { None, B1, B2 };

std::string provenance_str(Provenance p);
std::string appendix_b_str(AppendixB b);

struct SymmetricPair {
  RootDatum datum;
  LinMap sigma;  // acts on a in e-coordinates; weights transform by the transpose
  std::string pair_id;
  Params params;
  std::string subalgebra_label;
  Provenance provenance = Provenance::Derived;
  bool sigma_is_theta = false;
  AppendixB appendix_b = AppendixB::None;
  std::vector<std::string> tables;  // subset of T2 T3 T4 T5 naming the rows that mention the pair
  std::optional<size_t> k_sigma_dim;  // dim of k^sigma implied by the label, when recorded
  std::string assoc_id;
  Params assoc_params;
  std::string assoc_label;
  std::string notes;

  std::string label() const { return datum.label + "/" + subalgebra_label; }
  bool in_table(const std::string& t) const;
};

struct EigenspaceData {
  std::vector<RatVec> t_sigma_basis;
  std::vector<RatVec> t_minus_sigma_basis;
};

struct ValidationCheck {
  std::string name;
  bool ok = true;
  std::string witness;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok() const;
  std::string summary() const;
};

/// Every pair family known to the catalog.
const std::vector<std::string>& pair_ids();
std::vector<std::string> pair_param_names(const std::string& pair_id);

/// Builds and validates; throws UnknownPair, RankError, CatalogIntegrityError.
SymmetricPair symmetric_pair(const std::string& pair_id, const Params& params = {});

SymmetricPair associated_pair(const SymmetricPair& p);

/// sigma on a functional: (sigma w)(x) = w(sigma x).
RatVec sigma_weight(const SymmetricPair& p, const RatVec& w);
/// sigma on a point, canonicalized.
RatVec sigma_point(const SymmetricPair& p, const RatVec& a);

bool is_holomorphic_type(const SymmetricPair& p);
EigenspaceData eigenspaces(const SymmetricPair& p);
ValidationReport validate_pair(const SymmetricPair& p);

struct PairInstance {
  std::string pair_id;
  Params params;
};

/// Small-rank instances covering every family; the default verification list.
std::vector<PairInstance> default_instances();

}  // namespace branchdec
