#pragma once

#include <cstdint>
#include <vector>

namespace lcsext::cohomology {

/// A (l, s-l)-shuffle: slot i of the bracket moves to position[i].
struct Shuffle {
  std::vector<std::size_t> position;
  std::int64_t sign;
};

/// shuffles(s)[l] lists sh_{l,s-l} for 1 <= l < s.
const std::vector<std::vector<Shuffle>>& shuffles(std::size_t s);

}  // namespace lcsext::cohomology
