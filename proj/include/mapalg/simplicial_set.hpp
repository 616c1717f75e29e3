#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mapalg/simplex.hpp"

namespace mapalg {

inline constexpr int kDefaultDimCap = 3;

/// A nondegenerate cell: its dimension and the normal forms of its faces.
struct Cell {
  int dim = 0;
  std::vector<Simplex> faces;  // faces[i] = d_i, each of dimension dim - 1
};

/// Finite pointed simplicial set in Eilenberg-Zilber form. Cells are stored
/// sorted by dimension; ids are indices into that order. Immutable once
/// built, so instances are shared through `SetPtr`.
class SimplicialSet {
 public:
  SimplicialSet() = default;

  /// Cells must be sorted by dimension and faces must point at earlier cells.
  /// Does not check the simplicial identities; use `validate` for that.
  SimplicialSet(std::vector<Cell> cells, CellId basepoint, int dim_cap,
                std::vector<std::string> labels = {});

  std::size_t size() const { return cells_.size(); }
  const Cell& cell(CellId c) const { return cells_[c]; }
  std::span<const Cell> cells() const { return cells_; }
  CellId basepoint() const { return basepoint_; }
  int dim_cap() const { return dim_cap_; }
  /// Highest dimension of a nondegenerate cell (0 for a point).
  int dimension() const;

  /// Ids of the nondegenerate cells of dimension n, as a contiguous range.
  std::pair<CellId, CellId> cells_of_dim(int n) const;
  std::size_t count(int n) const;

  const std::string& label(CellId c) const;
  bool has_labels() const { return !labels_.empty(); }

  /// d_i of an arbitrary simplex, reduced to normal form.
  Simplex face(const Simplex& x, int i) const;
  /// theta^* x for a monotone theta: [j] -> [x.dim] given by its values.
  Simplex apply_operator(const Simplex& x, std::span<const int> theta) const;
  /// The k-th vertex of x.
  Simplex vertex(const Simplex& x, int k) const;

  /// Copy with a different dimension cap (must be >= dimension()).
  SimplicialSet with_dim_cap(int cap) const;

 private:
  std::vector<Cell> cells_;
  std::vector<CellId> dim_start_;
  CellId basepoint_ = 0;
  int dim_cap_ = kDefaultDimCap;
  std::vector<std::string> labels_;
};

using SetPtr = std::shared_ptr<const SimplicialSet>;

template <class... Args>
SetPtr make_set(Args&&... args) {
  return std::make_shared<const SimplicialSet>(std::forward<Args>(args)...);
}

/// Every violated invariant, one line each; empty means valid.
std::vector<std::string> validate(const SimplicialSet& x);

/// Connected components of the vertices; component[v] for each vertex id,
/// numbered in order of first appearance.
std::vector<int> pi0(const SimplicialSet& x);
int pi0_count(const SimplicialSet& x);

/// Every simplex (degenerate or not) of dimension n, ordered by cell id then
/// degeneracy mask.
std::vector<Simplex> all_simplices(const SimplicialSet& x, int n);

}  // namespace mapalg
