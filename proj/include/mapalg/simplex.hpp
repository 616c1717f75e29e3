#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace mapalg {

using CellId = std::uint32_t;

/// Bit t set means the simplex repeats position t, i.e. s_t occurs in its
/// Eilenberg-Zilber degeneracy word. A mask is the set of indices of the word
/// s_{j1} ... s_{jk} (j1 > ... > jk), which is why words are unique.
using DegeneracyMask = std::uint32_t;

inline constexpr int kMaxSimplexDim = 30;

/// A simplex in Eilenberg-Zilber normal form: `degens` applied to the
/// nondegenerate cell `cell`. The cell's own dimension is
/// `dim - popcount(degens)`.
struct Simplex {
  CellId cell = 0;
  std::uint16_t dim = 0;
  DegeneracyMask degens = 0;

  bool degenerate() const { return degens != 0; }
  int cell_dim() const { return dim - std::popcount(degens); }

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::uint64_t h = s.cell;
    h = h * 0x9E3779B97F4A7C15ull ^ (std::uint64_t{s.dim} << 32 | s.degens);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// A nondegenerate cell viewed as a simplex of its own dimension.
inline Simplex nondegenerate(CellId cell, int dim) {
  return Simplex{cell, static_cast<std::uint16_t>(dim), 0};
}

/// Degeneracy word with strictly decreasing indices.
class DegeneracyWord {
 public:
  DegeneracyWord() = default;
  /// Throws ParseError unless `indices` is strictly decreasing and nonnegative.
  explicit DegeneracyWord(std::vector<int> indices);

  static DegeneracyWord from_mask(DegeneracyMask mask);
  DegeneracyMask mask() const;
  const std::vector<int>& indices() const { return indices_; }
  bool empty() const { return indices_.empty(); }

  friend bool operator==(const DegeneracyWord&, const DegeneracyWord&) = default;

 private:
  std::vector<int> indices_;
};

// Surjections [n] -> [m] are stored as value sequences of length n + 1.

/// The surjection of an n-simplex with the given mask.
std::vector<int> surjection_of(DegeneracyMask mask, int n);

/// Repeat mask of a nondecreasing surjective sequence.
DegeneracyMask mask_of(std::span<const int> seq);

/// theta^* x where theta: [outer_dim] -> [x.dim] is the surjection given by
/// `outer` (a mask on outer_dim positions).
Simplex apply_surjection(const Simplex& x, DegeneracyMask outer, int outer_dim);

/// s_j x.
Simplex degeneracy(const Simplex& x, int j);

/// Factor a pair of equal-dimensional simplices through their common
/// degeneracy: returns the reduced mask of `x` after deleting the repeat
/// positions in `common` (which must be a subset of x.degens).
DegeneracyMask remove_repeats(DegeneracyMask mask, int dim, DegeneracyMask common);

/// All masks on n positions with exactly k bits set, in increasing order.
std::vector<DegeneracyMask> masks_with_popcount(int n, int k);

}  // namespace mapalg
