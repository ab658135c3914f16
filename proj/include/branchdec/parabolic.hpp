#pragma once

#include <optional>
#include <string>
#include <vector>

#include "branchdec/rootdata.hpp"

namespace branchdec {

struct ResourceBound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Signs of alpha(a) over datum.p_half, in that order.
struct SignPattern {
  std::vector<int> signs;

  bool all_zero() const;
  /// sign of an arbitrary weight of p (zero weight -> 0)
  std::string str() const;  // e.g. "++0-"
  auto operator<=>(const SignPattern&) const = default;
};

enum class HoloClass { Holo, AntiHolo, Both, Neither, NotHermitian };
std::string holo_str(HoloClass h);

SignPattern sign_pattern(const RootDatum& d, const RatVec& a);
std::vector<Weight> nilradical_p_weights(const RootDatum& d, const RatVec& a);
/// q(a1) is contained in q(a2), over all roots of k and weights of p.
bool contains(const RootDatum& d, const RatVec& a1, const RatVec& a2);
/// Containment of classes: every p weight nonnegative on the first pattern is nonnegative on the second.
bool pattern_contains(const SignPattern& p1, const SignPattern& p2);
HoloClass holomorphic_class(const RootDatum& d, const RatVec& a);
bool is_borel(const RootDatum& d, const RatVec& a);

struct ParabolicClass {
  SignPattern pattern;
  RatVec witness;  // integral, canonical, positive on every dominance functional not forced to vanish
};

/// BRANCHDEC_RANK_BOUND, else 8.
size_t configured_rank_bound();

/// All realizable sign patterns over the closed dominant cone, sorted by pattern.
std::vector<ParabolicClass> enumerate_classes(const RootDatum& d, std::optional<size_t> rank_bound = std::nullopt);

}  // namespace branchdec
