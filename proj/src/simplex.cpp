#include "mapalg/simplex.hpp"

#include "mapalg/errors.hpp"

namespace mapalg {

DegeneracyWord::DegeneracyWord(std::vector<int> indices) : indices_(std::move(indices)) {
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k] < 0 || indices_[k] >= kMaxSimplexDim) {
      throw ParseError("degeneracy index out of range");
    }
    if (k > 0 && indices_[k - 1] <= indices_[k]) {
      throw ParseError("degeneracy indices must be strictly decreasing");
    }
  }
}

DegeneracyWord DegeneracyWord::from_mask(DegeneracyMask mask) {
  std::vector<int> out;
  for (int t = kMaxSimplexDim; t >= 0; --t) {
    if (mask >> t & 1u) out.push_back(t);
  }
  DegeneracyWord w;
  w.indices_ = std::move(out);
  return w;
}

DegeneracyMask DegeneracyWord::mask() const {
  DegeneracyMask m = 0;
  for (int j : indices_) m |= DegeneracyMask{1} << j;
  return m;
}

std::vector<int> surjection_of(DegeneracyMask mask, int n) {
  std::vector<int> seq(static_cast<std::size_t>(n) + 1);
  seq[0] = 0;
  for (int t = 0; t < n; ++t) {
    seq[t + 1] = seq[t] + ((mask >> t & 1u) ? 0 : 1);
  }
  return seq;
}

DegeneracyMask mask_of(std::span<const int> seq) {
  DegeneracyMask m = 0;
  for (std::size_t t = 0; t + 1 < seq.size(); ++t) {
    if (seq[t] == seq[t + 1]) m |= DegeneracyMask{1} << t;
  }
  return m;
}

Simplex apply_surjection(const Simplex& x, DegeneracyMask outer, int outer_dim) {
  if (outer == 0) return x;
  if (x.degens == 0) {
    return Simplex{x.cell, static_cast<std::uint16_t>(outer_dim), outer};
  }
  const auto inner = surjection_of(x.degens, x.dim);
  const auto theta = surjection_of(outer, outer_dim);
  std::vector<int> comp(theta.size());
  for (std::size_t t = 0; t < theta.size(); ++t) comp[t] = inner[theta[t]];
  return Simplex{x.cell, static_cast<std::uint16_t>(outer_dim), mask_of(comp)};
}

Simplex degeneracy(const Simplex& x, int j) {
  return apply_surjection(x, DegeneracyMask{1} << j, x.dim + 1);
}

DegeneracyMask remove_repeats(DegeneracyMask mask, int dim, DegeneracyMask common) {
  if (common == 0) return mask;
  const auto seq = surjection_of(mask, dim);
  std::vector<int> kept;
  kept.reserve(seq.size());
  for (int t = 0; t <= dim; ++t) {
    if (t > 0 && (common >> (t - 1) & 1u)) continue;
    kept.push_back(seq[t]);
  }
  return mask_of(kept);
}

std::vector<DegeneracyMask> masks_with_popcount(int n, int k) {
  std::vector<DegeneracyMask> out;
  if (k < 0 || k > n) return out;
  const DegeneracyMask limit = DegeneracyMask{1} << n;
  for (DegeneracyMask m = 0; m < limit; ++m) {
    if (std::popcount(m) == k) out.push_back(m);
  }
  return out;
}

}  // namespace mapalg
