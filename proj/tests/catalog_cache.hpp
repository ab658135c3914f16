#pragma once

#include <map>

#include "branchdec/parabolic.hpp"
#include "branchdec/pairs.hpp"

namespace testutil {

using namespace branchdec;

inline const std::vector<SymmetricPair>& catalog_pairs() {
  static const std::vector<SymmetricPair> c = [] {
    std::vector<SymmetricPair> v;
    for (auto& inst : default_instances()) v.push_back(symmetric_pair(inst.pair_id, inst.params));
    return v;
  }();
  return c;
}

// enumerations keyed by datum label, reused across test cases
inline const std::vector<ParabolicClass>& classes_of(const RootDatum& d) {
  static std::map<std::string, std::vector<ParabolicClass>> cache;
  auto it = cache.find(d.label);
  if (it == cache.end()) it = cache.emplace(d.label, enumerate_classes(d)).first;
  return it->second;
}

}  // namespace testutil
