#include "mapalg/simplicial_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mapalg/errors.hpp"

namespace mapalg {

SimplicialSet::SimplicialSet(std::vector<Cell> cells, CellId basepoint, int dim_cap,
                             std::vector<std::string> labels)
    : cells_(std::move(cells)), basepoint_(basepoint), dim_cap_(dim_cap), labels_(std::move(labels)) {
  if (cells_.empty()) throw StructuralError("simplicial set needs at least a basepoint");
  if (!labels_.empty() && labels_.size() != cells_.size()) {
    throw StructuralError("label count does not match cell count");
  }
  int prev = 0;
  for (CellId c = 0; c < cells_.size(); ++c) {
    const Cell& cell = cells_[c];
    if (cell.dim < prev) throw StructuralError("cells must be sorted by dimension");
    if (cell.dim > kMaxSimplexDim) throw CapError("cell dimension exceeds representable range");
    while (static_cast<int>(dim_start_.size()) <= cell.dim) dim_start_.push_back(c);
    prev = cell.dim;
    for (const Simplex& f : cell.faces) {
      if (f.cell >= c) throw StructuralError("face refers to a later cell");
    }
  }
  if (basepoint_ >= cells_.size() || cells_[basepoint_].dim != 0) {
    throw StructuralError("basepoint must be a 0-cell");
  }
}

int SimplicialSet::dimension() const { return cells_.back().dim; }

std::pair<CellId, CellId> SimplicialSet::cells_of_dim(int n) const {
  if (n < 0 || n >= static_cast<int>(dim_start_.size())) {
    const auto end = static_cast<CellId>(cells_.size());
    return {end, end};
  }
  const CellId lo = dim_start_[n];
  const CellId hi = n + 1 < static_cast<int>(dim_start_.size()) ? dim_start_[n + 1]
                                                                  : static_cast<CellId>(cells_.size());
  return {lo, hi};
}

std::size_t SimplicialSet::count(int n) const {
  auto [lo, hi] = cells_of_dim(n);
  return hi - lo;
}

const std::string& SimplicialSet::label(CellId c) const {
  static const std::string empty;
  return labels_.empty() ? empty : labels_[c];
}

Simplex SimplicialSet::face(const Simplex& x, int i) const {
  const int n = x.dim;
  if (n == 0) throw StructuralError("a 0-simplex has no faces");
  if (i < 0 || i > n) throw StructuralError("face index out of range");
  const auto seq = surjection_of(x.degens, n);
  const int v = seq[i];
  const bool still_hit = (i > 0 && seq[i - 1] == v) || (i < n && seq[i + 1] == v);
  std::vector<int> rest;
  rest.reserve(n);
  for (int t = 0; t <= n; ++t) {
    if (t != i) rest.push_back(seq[t]);
  }
  if (still_hit) {
    return Simplex{x.cell, static_cast<std::uint16_t>(n - 1), mask_of(rest)};
  }
  // The face lands on d_v of the underlying cell, followed by the induced
  // surjection.
  for (int& r : rest) {
    if (r > v) --r;
  }
  const Simplex& fc = cells_[x.cell].faces[v];
  const auto inner = surjection_of(fc.degens, fc.dim);
  for (int& r : rest) r = inner[r];
  return Simplex{fc.cell, static_cast<std::uint16_t>(n - 1), mask_of(rest)};
}

Simplex SimplicialSet::apply_operator(const Simplex& x, std::span<const int> theta) const {
  if (theta.empty()) throw StructuralError("empty simplicial operator");
  std::vector<int> image(theta.begin(), theta.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  for (std::size_t k = 1; k < theta.size(); ++k) {
    if (theta[k] < theta[k - 1]) throw StructuralError("simplicial operator must be monotone");
  }
  if (image.back() > x.dim || image.front() < 0) {
    throw StructuralError("simplicial operator out of range");
  }
  Simplex y = x;
  for (int v = x.dim; v >= 0; --v) {
    if (!std::binary_search(image.begin(), image.end(), v)) y = face(y, v);
  }
  std::vector<int> surj(theta.size());
  for (std::size_t t = 0; t < theta.size(); ++t) {
    surj[t] = static_cast<int>(std::lower_bound(image.begin(), image.end(), theta[t]) - image.begin());
  }
  return apply_surjection(y, mask_of(surj), static_cast<int>(theta.size()) - 1);
}

Simplex SimplicialSet::vertex(const Simplex& x, int k) const {
  const int theta[1] = {k};
  return apply_operator(x, theta);
}

SimplicialSet SimplicialSet::with_dim_cap(int cap) const {
  if (cap < dimension()) throw CapError("dimension cap below the dimension of the object");
  SimplicialSet out = *this;
  out.dim_cap_ = cap;
  return out;
}

std::vector<std::string> validate(const SimplicialSet& x) {
  std::vector<std::string> report;
  auto name = [&](CellId c) {
    return x.has_labels() ? x.label(c) : "c" + std::to_string(c);
  };
  if (x.cell(x.basepoint()).dim != 0) report.push_back("basepoint is not a 0-cell");
  bool shape_ok = true;
  for (CellId c = 0; c < x.size(); ++c) {
    const Cell& cell = x.cell(c);
    if (cell.dim > x.dim_cap()) {
      report.push_back("cell " + name(c) + " exceeds dim_cap " + std::to_string(x.dim_cap()));
    }
    const std::size_t expected = cell.dim == 0 ? 0 : static_cast<std::size_t>(cell.dim) + 1;
    if (cell.faces.size() != expected) {
      report.push_back("cell " + name(c) + " has " + std::to_string(cell.faces.size()) +
                       " faces, expected " + std::to_string(expected));
      shape_ok = false;
      continue;
    }
    for (std::size_t i = 0; i < cell.faces.size(); ++i) {
      const Simplex& f = cell.faces[i];
      if (f.dim != cell.dim - 1) {
        report.push_back("face d_" + std::to_string(i) + " of " + name(c) + " has wrong dimension");
        shape_ok = false;
        continue;
      }
      if (f.cell >= x.size() || (f.dim < 32 && (f.degens >> f.dim) != 0)) {
        report.push_back("face d_" + std::to_string(i) + " of " + name(c) + " is not in normal form");
        shape_ok = false;
        continue;
      }
      if (x.cell(f.cell).dim != f.cell_dim()) {
        report.push_back("face d_" + std::to_string(i) + " of " + name(c) +
                         " has a degeneracy word inconsistent with its target");
        shape_ok = false;
      }
    }
  }
  if (!shape_ok) return report;
  for (CellId c = 0; c < x.size(); ++c) {
    const int n = x.cell(c).dim;
    if (n < 2) continue;
    const Simplex s = nondegenerate(c, n);
    for (int j = 1; j <= n; ++j) {
      for (int i = 0; i < j; ++i) {
        const Simplex lhs = x.face(x.face(s, j), i);
        const Simplex rhs = x.face(x.face(s, i), j - 1);
        if (lhs != rhs) {
          std::ostringstream os;
          os << "d_" << i << " d_" << j << " = d_" << (j - 1) << " d_" << i << " fails on cell " << name(c);
          report.push_back(os.str());
        }
      }
    }
  }
  return report;
}

std::vector<int> pi0(const SimplicialSet& x) {
  auto [lo, hi] = x.cells_of_dim(0);
  std::vector<CellId> parent(hi - lo);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](CellId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto [elo, ehi] = x.cells_of_dim(1);
  for (CellId e = elo; e < ehi; ++e) {
    const auto& f = x.cell(e).faces;
    CellId a = find(f[0].cell - lo), b = find(f[1].cell - lo);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> component(hi - lo, -1);
  std::vector<int> label_of_root(hi - lo, -1);
  int next = 0;
  for (CellId v = 0; v < hi - lo; ++v) {
    CellId r = find(v);
    if (label_of_root[r] < 0) label_of_root[r] = next++;
    component[v] = label_of_root[r];
  }
  return component;
}

int pi0_count(const SimplicialSet& x) {
  const auto comp = pi0(x);
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

std::vector<Simplex> all_simplices(const SimplicialSet& x, int n) {
  std::vector<Simplex> out;
  for (CellId c = 0; c < x.size(); ++c) {
    const int p = x.cell(c).dim;
    if (p > n) break;
    for (DegeneracyMask m : masks_with_popcount(n, n - p)) {
      out.push_back(Simplex{c, static_cast<std::uint16_t>(n), m});
    }
  }
  return out;
}

}  // namespace mapalg
