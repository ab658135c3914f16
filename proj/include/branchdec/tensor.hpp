#pragma once

#include "branchdec/criteria.hpp"
#include "branchdec/parabolic.hpp"

namespace branchdec {

/// a1 dominant; a2 in the second factor's chamber, i.e. -a2 dominant.
struct TensorInstance {
  RootDatum datum;
  RatVec a1, a2;
};

/// w0 of W(k) applied to a: the antidominant point of the orbit.
RatVec longest_k_element(const RootDatum& d, const RatVec& a);

/// Both vectors in standard dominant form; the second is moved by w0.
TensorInstance tensor_instance(const RootDatum& d, const RatVec& a1, const RatVec& a2);

/// alpha(a1) > 0 implies alpha(a2) >= 0 for every weight of p.
Verdict tensor_decide(const TensorInstance& t);
/// Hermitian, and both factors holomorphic or both anti-holomorphic.
bool tensor_characterize(const TensorInstance& t);

}  // namespace branchdec
