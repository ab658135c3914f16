#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "branchdec/criteria.hpp"
#include "branchdec/parabolic.hpp"
#include "json.hpp"

namespace branchdec {

struct UnknownRow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TableAlternative {
  std::string text;
  std::function<bool(const RatVec&)> holds;  // on canonical a
};

struct TableRow {
  std::string table_id;  // T1_holo T1_antiholo T3 T4 T5
  std::string text;
  std::vector<TableAlternative> alternatives;
  bool holds(const RatVec& a) const;
};

/// Rows of the discrete-series, isolated and no-decomposable tables naming the pair.
std::vector<TableRow> table_rows(const SymmetricPair& p);
/// Holomorphic / anti-holomorphic condition for a Hermitian datum.
TableRow holomorphic_row(const RootDatum& d, bool anti);

/// table_id in T1_holo T1_antiholo T2 T3 T4 T5; throws UnknownRow when the pair has no such row.
bool table_predicate_eval(const std::string& table_id, const SymmetricPair& p, const RatVec& a);

/// W(k)-dominant point of the orbit of a.
RatVec k_dominant(const RootDatum& d, const RatVec& a);

/// Union of every clause that makes (g, g^sigma, q) decomposable.
bool theorem_verdict(const SymmetricPair& p, const RatVec& a);

/// a = form(s, t) + (combination of the datum constraints).
/// Tokens per coordinate: "0" "s" "-s" "t" "-t"; s, t >= 0 when nonneg.
bool matches_form(const RootDatum& d, const RatVec& a, const std::vector<std::string>& form, bool nonneg);

/// Enumerates once per datum label.
const std::vector<ParabolicClass>& cached_classes(const RootDatum& d, std::optional<size_t> rank_bound = std::nullopt);

struct InstanceConfig {
  size_t rank_bound = 8;
  std::vector<PairInstance> instances;
};
/// {"schema": "branchdec/1", "rank_bound": n, "instances": [{"pair_id": .., "params": {..}}, ..]}
InstanceConfig load_instance_config(const std::string& path);
nlohmann::ordered_json instance_config_json(const InstanceConfig& c);

struct Mismatch {
  SignPattern pattern;
  RatVec witness;
  bool criterion = false;
  bool table = false;
};

struct VerificationReport {
  std::string pair_id;
  Params params;
  std::string label;
  size_t classes_total = 0;
  size_t classes_decomposable = 0;
  std::vector<Mismatch> mismatches;
  double elapsed = 0;
  bool pass() const { return mismatches.empty(); }
};

VerificationReport verify_pair(const SymmetricPair& p);
nlohmann::ordered_json report_json(const VerificationReport& r);
std::string report_tsv(const VerificationReport& r);

struct AppendixBEntry {
  std::string pair_id;
  Params params;
  std::string label;
  AppendixB listed = AppendixB::None;
  bool dominant = false;
  size_t proper_decomposable = 0;
  size_t holo_classes = 0;        // proper holomorphic or anti-holomorphic classes
  bool decomposable_eq_holo = false;
  bool pass = false;
  std::string detail;
};

/// Pairs with sigma = theta or dim t^sigma = 0 are skipped.
std::vector<AppendixBEntry> verify_appendix_b(const std::vector<SymmetricPair>& pairs);
nlohmann::ordered_json appendix_b_json(const AppendixBEntry& e);

// su(2,2) figures ---------------------------------------------------------

/// Label X1..U of a dominant su(2,2) point, or "" if the ordering is not one of the eighteen.
std::string figure1_label(const RatVec& a);
const std::vector<std::pair<std::string, std::string>>& figure1_orderings();
/// su(2,2) coordinates to so(4,2) coordinates.
RatVec su22_to_so42(const RatVec& a);

struct FigureReport {
  std::string name;
  std::vector<std::string> expected, got;
  size_t nodes = 0, borel = 0, holo = 0;
  std::string dot;
  bool pass = false;
};

std::vector<FigureReport> reproduce_figures();
nlohmann::ordered_json figure_json(const FigureReport& f);

struct NodeMark {
  std::string name;
  bool borel = false;
  bool holo = false;
  std::optional<bool> decomposable;
};

/// Hasse diagram of pattern containment; edges point from q1 to q2 when q1 is covered by q2.
std::string export_dot(const std::vector<ParabolicClass>& classes, const std::vector<NodeMark>& marks);
/// Default marks: pattern string, is_borel, holomorphic class.
std::vector<NodeMark> default_marks(const RootDatum& d, const std::vector<ParabolicClass>& classes);

}  // namespace branchdec
