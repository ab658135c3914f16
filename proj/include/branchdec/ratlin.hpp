#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace branchdec {

using Rat = mpq_class;
using RatVec = std::vector<Rat>;

struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses "p/q", "-p", "p" into a canonical rational.
Rat parse_rat(const std::string& s);
/// Canonical text form: "p" or "p/q".
std::string rat_str(const Rat& r);
std::string vec_str(const RatVec& v);

RatVec zeros(size_t n);
RatVec unit(size_t n, size_t i);
Rat dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& c, const RatVec& a);
RatVec neg(const RatVec& a);
bool is_zero(const RatVec& a);

/// Scales by a positive rational so that all coordinates are coprime integers.
RatVec primitive_integer(const RatVec& v);

/// Dense rational matrix, row-major.
class LinMap {
 public:
  LinMap() = default;
  LinMap(size_t codomain, size_t domain);
  explicit LinMap(std::vector<RatVec> rows);

  static LinMap identity(size_t n);

  size_t domain_dim() const { return dom_; }
  size_t codomain_dim() const { return rows_.size(); }
  const std::vector<RatVec>& rows() const { return rows_; }
  Rat& at(size_t i, size_t j) { return rows_[i][j]; }
  const Rat& at(size_t i, size_t j) const { return rows_[i][j]; }

  RatVec apply(const RatVec& x) const;
  /// x -> M^T x
  RatVec apply_transpose(const RatVec& x) const;
  LinMap compose(const LinMap& rhs) const;  // this * rhs
  LinMap transpose() const;

  bool operator==(const LinMap& o) const { return dom_ == o.dom_ && rows_ == o.rows_; }

 private:
  size_t dom_ = 0;
  std::vector<RatVec> rows_;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(std::vector<RatVec>& m, size_t ncols);
size_t rank(std::vector<RatVec> m, size_t ncols);
/// Basis of {x : r.x = 0 for all rows r}, deterministic.
std::vector<RatVec> kernel(const std::vector<RatVec>& rows, size_t ncols);
/// Solves x^T A = b^T for x (A given as rows); nullopt when b is outside the row space.
std::optional<RatVec> solve_row_combination(const std::vector<RatVec>& rows, const RatVec& b);
bool in_row_space(const std::vector<RatVec>& rows, const RatVec& v);

/// Feasibility system over x in Q^dim.
///   eqs:     a.x = b
///   ges:     g.x >= h
///   stricts: s.x > 0
///   nonneg:  x >= 0 componentwise when set
struct LpSystem {
  size_t dim = 0;
  std::vector<std::pair<RatVec, Rat>> eqs;
  std::vector<std::pair<RatVec, Rat>> ges;
  std::vector<RatVec> stricts;
  bool nonneg = false;
};

/// Certificate over the homogenized system in w = (x, tau):
///   eq_j:  (a_j, -b_j).w = 0
///   ge rows in order: [x_i >= 0 if nonneg] [(g_k, -h_k).w >= 0] [(s_l, 0).w >= 1] [tau >= 1]
/// Valid when sum mu_j eq_j + sum lambda_i ge_i = 0, lambda >= 0, sum lambda_i rhs_i > 0.
struct FarkasCertificate {
  RatVec eq_mult;
  RatVec ge_mult;
};

struct LpResult {
  bool feasible = false;
  RatVec witness;
  FarkasCertificate certificate;
};

LpResult lp_feasible(const LpSystem& sys);
/// Spec-level signature: equalities, nonneg flag, strict inequalities.
LpResult lp_feasible(const std::vector<std::pair<RatVec, Rat>>& equalities, bool nonneg_vars,
                     const std::vector<RatVec>& strict_ineqs);

bool verify_witness(const LpSystem& sys, const RatVec& x);
bool verify_certificate(const LpSystem& sys, const FarkasCertificate& c);

/// Representative of v modulo span(relations): for each relation, subtract the
/// multiple of the relation that zeroes the coordinate sum over its support.
RatVec canonicalize_mod(const RatVec& v, const std::vector<RatVec>& relations);

}  // namespace branchdec
