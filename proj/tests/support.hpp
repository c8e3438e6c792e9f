#ifndef GSC_TESTS_SUPPORT_HPP
#define GSC_TESTS_SUPPORT_HPP

#include <map>
#include <string>

#include "gsc/cartan.hpp"
#include "gsc/characters.hpp"
#include "gsc/coxeter_group.hpp"

namespace gsc::testing {

// Groups and tables are built once per label; E6 is the slow one.
inline const GroupPtr& preset_group(const std::string& label) {
  static std::map<std::string, GroupPtr> cache;
  auto it = cache.find(label);
  if (it == cache.end())
    it = cache.emplace(label, build_group(load_cartan_preset(GSC_PRESET_DIR "/cartan", label))).first;
  return it->second;
}

inline const CharacterTable& preset_table(const std::string& label) {
  static std::map<std::string, CharacterTable> cache;
  auto it = cache.find(label);
  if (it == cache.end()) it = cache.emplace(label, character_table(preset_group(label))).first;
  return it->second;
}

}  // namespace gsc::testing

#endif  // GSC_TESTS_SUPPORT_HPP
