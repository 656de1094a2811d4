#pragma once

#include <map>
#include <string>

#include "ballq/arrangement.hpp"
#include "ballq/group.hpp"

/// Group enumeration is the expensive part of these tests (G31 has 46080
/// exact matrices), so every built group and arrangement is shared across
/// test cases.
inline const ballq::group::BuiltGroup& built(const std::string& id) {
  static std::map<std::string, ballq::group::BuiltGroup> cache;
  auto it = cache.find(id);
  if (it == cache.end())
    it = cache.emplace(id, ballq::group::build_group(id)).first;
  return it->second;
}

inline const ballq::arrangement::MirrorArrangement& arranged(const std::string& id) {
  static std::map<std::string, ballq::arrangement::MirrorArrangement> cache;
  auto it = cache.find(id);
  if (it == cache.end())
    it = cache.emplace(id, ballq::arrangement::build_arrangement(built(id))).first;
  return it->second;
}
