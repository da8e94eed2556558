#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mingen/group.hpp"

namespace mingen {

/// What one lift through one layer did.
struct StageRecord {
  std::size_t group_order = 1;  // order of the group being generated at this stage
  std::size_t layer_order = 1;
  std::size_t t = 0;  // d of the quotient by the layer
  std::size_t d = 0;  // d reached at this stage
  bool abelian = true;
  bool tuple_search = false;  // true when a search over tuples of layer elements ran
  std::string route;
  std::uint64_t candidates = 0;
  std::uint64_t bound = 0;  // the counter budget asserted for this stage
};

/// d(G), a witness, and how it was obtained.
struct MinGenResult {
  std::size_t d = 0;
  std::vector<Element> witness;
  std::string algorithm;
  std::uint64_t candidates_tried = 0;
  std::uint64_t p = 0;  // smallest prime dividing |G|, 0 for the trivial group
  std::vector<StageRecord> stages;
  /// Chief-series runs only: whether every nonabelian layer has order <= chi_l.
  std::optional<bool> chi_l_member;
};

}  // namespace mingen
