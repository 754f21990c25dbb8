#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratcat/error.hpp"
#include "ratcat/paths.hpp"

namespace ratcat {

// Rank of cell (column, row) in the 3-column lattice with n rows.
inline int rank(int column, int row, int n) {
  if (n < 1 || column < 1 || column > 3 || row < 1 || row > n) {
    throw Error(ErrorKind::OutOfBounds, "cell (" + std::to_string(column) + "," +
                                            std::to_string(row) + ") with n=" + std::to_string(n));
  }
  return -column * n + 3 * (row - 1);
}

inline void require_residue(int n) {
  if (n < 1 || n % 3 == 0) {
    throw Error(ErrorKind::BadResidue, "n=" + std::to_string(n) + " must be positive and not divisible by 3");
  }
}

inline void require_three_columns(const DyckPath& path) {
  if (path.m() != 3) throw Error(ErrorKind::UnsupportedM, "m=" + std::to_string(path.m()) + ", need m=3");
  require_residue(path.n());
}

// Color of a positive rank: 1 for the first column, 2 for the second, 0 if
// the rank does not occur in the word.
constexpr int rank_color(int r, int n) noexcept {
  if (r <= 0) return 0;
  if (r < 2 * n && (r - 2 * n) % 3 == 0) return 1;
  if (r < n && (r - n) % 3 == 0) return 2;
  return 0;
}

struct RankEntry {
  int rank = 0;
  int color = 0;
  bool boxed = false;

  friend bool operator==(const RankEntry&, const RankEntry&) = default;
};

class MarkedRankWord;
MarkedRankWord lattice_rank_word(int n);

/**
 * The positive ranks of the 3 x n lattice in increasing order, each colored
 * by its column and optionally boxed. Has n - 1 entries.
 */
class MarkedRankWord {
 public:
  int n() const noexcept { return n_; }
  std::span<const RankEntry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const RankEntry& operator[](std::size_t i) const { return entries_.at(i); }

  // Copy of this word with entry i boxed.
  MarkedRankWord box(std::size_t i) const {
    MarkedRankWord out(*this);
    out.entries_.at(i).boxed = true;
    return out;
  }

  // Copy of this word with the entry of the given rank boxed.
  MarkedRankWord box_rank(int r) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), r,
                               [](const RankEntry& e, int value) { return e.rank < value; });
    if (it == entries_.end() || it->rank != r) {
      throw Error(ErrorKind::OutOfBounds, "rank " + std::to_string(r) + " not in word for n=" + std::to_string(n_));
    }
    return box(static_cast<std::size_t>(it - entries_.begin()));
  }

  std::vector<int> boxed_ranks() const {
    std::vector<int> out;
    for (const auto& e : entries_) {
      if (e.boxed) out.push_back(e.rank);
    }
    return out;
  }

  std::size_t unboxed_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [](const RankEntry& e) { return !e.boxed; }));
  }

  friend bool operator==(const MarkedRankWord&, const MarkedRankWord&) = default;

 private:
  explicit MarkedRankWord(int n) : n_(n) {}

  friend MarkedRankWord lattice_rank_word(int n);

  int n_;
  std::vector<RankEntry> entries_;
};

inline MarkedRankWord lattice_rank_word(int n) {
  require_residue(n);
  MarkedRankWord word(n);
  for (int column = 1; column <= 2; ++column) {
    for (int row = 1; row <= n; ++row) {
      const int r = rank(column, row, n);
      if (r > 0) word.entries_.push_back(RankEntry{r, column, false});
    }
  }
  std::sort(word.entries_.begin(), word.entries_.end(),
            [](const RankEntry& a, const RankEntry& b) { return a.rank < b.rank; });
  return word;
}

/// Boxes the ranks of the cells above a (3,n)-path.
inline MarkedRankWord mark_from_path(const DyckPath& path) {
  require_three_columns(path);
  MarkedRankWord word = lattice_rank_word(path.n());
  for (const Cell& x : cells_above(path).cells()) {
    const int r = rank(x.column, x.row, path.n());
    if (r <= 0) throw std::logic_error("cell above a (3,n)-path has non-positive rank");
    word = word.box_rank(r);
  }
  return word;
}

/// Number of maximal unboxed runs with a boxed entry somewhere on each side.
inline int count_skips(const MarkedRankWord& word) {
  int count = 0;
  bool seen_box = false;
  bool open_run = false;
  for (const auto& e : word.entries()) {
    if (e.boxed) {
      if (open_run) ++count;
      open_run = false;
      seen_box = true;
    } else if (seen_box) {
      open_run = true;
    }
  }
  return count;
}

struct BoxedCounts {
  int color1 = 0;  // k: cells above the path in column 1
  int color2 = 0;  // l: cells above the path in column 2

  friend bool operator==(const BoxedCounts&, const BoxedCounts&) = default;
};

inline BoxedCounts boxed_counts(const MarkedRankWord& word) {
  BoxedCounts counts;
  for (const auto& e : word.entries()) {
    if (!e.boxed) continue;
    if (e.color == 1) ++counts.color1;
    else ++counts.color2;
  }
  return counts;
}

/// s <= a, s <= d, all nonnegative, and 3 does not divide a + s + d + 1.
constexpr bool is_valid_triple(int a, int s, int d) noexcept {
  if (a < 0 || s < 0 || d < 0) return false;
  return s <= a && s <= d && (a + s + d + 1) % 3 != 0;
}

/**
 * Rebuilds the marked rank word of the (3, a+s+d+1)-path with statistics
 * (area, skips, dinv) = (a, s, d).
 *
 * Boxes the rightmost d entries, then s times: walk left over the maximal run
 * of same-colored entries at the cursor and box the entry just past it.
 */
inline MarkedRankWord omega(int a, int s, int d) {
  if (!is_valid_triple(a, s, d)) {
    throw Error(ErrorKind::InvalidTriple, "(" + std::to_string(a) + "," + std::to_string(s) + "," +
                                              std::to_string(d) + ")");
  }
  const int n = a + s + d + 1;
  MarkedRankWord word = lattice_rank_word(n);
  const auto len = static_cast<std::ptrdiff_t>(word.size());

  std::ptrdiff_t cursor = len - 1;
  for (int i = 0; i < d; ++i, --cursor) word = word.box(static_cast<std::size_t>(cursor));

  for (int i = 0; i < s; ++i) {
    if (cursor < 0) throw std::logic_error("omega ran out of entries");
    const int run_color = word[static_cast<std::size_t>(cursor)].color;
    while (cursor >= 0 && word[static_cast<std::size_t>(cursor)].color == run_color) --cursor;
    if (cursor < 0) throw std::logic_error("omega ran out of entries");
    word = word.box(static_cast<std::size_t>(cursor));
    --cursor;
  }
  return word;
}

/// Within each color the boxed entries are the rightmost ones, and at least as
/// many color-1 entries are boxed as color-2 entries.
inline bool is_realizable(const MarkedRankWord& word) {
  bool boxed_seen[3] = {false, false, false};
  for (const auto& e : word.entries()) {
    if (e.boxed) boxed_seen[e.color] = true;
    else if (boxed_seen[e.color]) return false;
  }
  const BoxedCounts counts = boxed_counts(word);
  return counts.color1 >= counts.color2;
}

inline DyckPath path_from_word(const MarkedRankWord& word) {
  if (!is_realizable(word)) {
    throw Error(ErrorKind::NotRealizable, "boxed entries are not per-color suffixes with k >= l");
  }
  const BoxedCounts counts = boxed_counts(word);
  const int n = word.n();
  return make_path(3, n, {n - counts.color1, n - counts.color2, n});
}

/// Text form: "<rank>_<color>" per entry, boxed entries in square brackets.
inline std::string render_word(const MarkedRankWord& word) {
  std::string out;
  for (const auto& e : word.entries()) {
    if (!out.empty()) out.push_back(' ');
    std::string item = std::to_string(e.rank) + "_" + std::to_string(e.color);
    out += e.boxed ? "[" + item + "]" : item;
  }
  return out;
}

}  // namespace ratcat
