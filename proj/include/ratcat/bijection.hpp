#pragma once

#include "ratcat/paths.hpp"
#include "ratcat/rank_words.hpp"
#include "ratcat/statistics.hpp"

namespace ratcat {

/// Maps a (3,n)-path with statistics (area, skips, dinv) = (a, s, d) to the
/// unique (3,n)-path with statistics (d, s, a).
inline DyckPath involution(const DyckPath& path) {
  const StatTriple triple = stat_triple(path);
  return path_from_word(omega(triple.dinv, triple.skips, triple.area));
}

}  // namespace ratcat
