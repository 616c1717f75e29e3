#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mapalg/simplicial_map.hpp"

namespace mapalg {

SetPtr point();
/// Delta[n]; cells are the nonempty vertex subsets ordered by size, then
/// lexicographically. Basepoint is vertex 0.
SetPtr standard_simplex(int n);
/// The boundary of Delta[n], n >= 1, with the same cell ids as Delta[n].
SetPtr boundary(int n);
SetPtr sphere(int n);

/// Cell of Delta[n] spanned by a vertex bitset.
CellId delta_cell(int n, std::uint32_t vertices);
std::uint32_t delta_vertices(int n, CellId c);
CellId delta_top(int n);
/// The simplex of Delta[n] given by a monotone vertex sequence.
Simplex delta_simplex(int n, std::span<const int> theta);
/// Delta[k] -> Delta[n] induced by monotone theta: [k] -> [n].
SimplicialMap delta_map(int k, int n, std::span<const int> theta);
/// Vertex sequence of a simplex of Delta[n], i.e. the operator [k] -> [n] it represents.
std::vector<int> delta_operator(int n, const Simplex& b);
/// Coface delta^i: Delta[n-1] -> Delta[n] and codegeneracy sigma^j: Delta[n+1] -> Delta[n].
SimplicialMap delta_coface(int n, int i);
SimplicialMap delta_codegeneracy(int n, int j);

struct SimplexPairHash {
  std::size_t operator()(const std::pair<Simplex, Simplex>& p) const noexcept {
    return SimplexHash{}(p.first) * 31 ^ SimplexHash{}(p.second);
  }
};

/// X x Y with the coordinates of every nondegenerate cell.
struct ProductPresentation {
  SetPtr space;
  SetPtr left;
  SetPtr right;
  std::vector<std::pair<Simplex, Simplex>> coords;
  std::unordered_map<std::pair<Simplex, Simplex>, CellId, SimplexPairHash> index;

  /// The simplex (a, b) of the product; a and b must have equal dimension.
  Simplex pair(const Simplex& a, const Simplex& b) const;
};

/// `dim_cap < 0` means the larger of the input caps.
ProductPresentation product(SetPtr x, SetPtr y, int dim_cap = -1);

struct QuotientResult {
  SetPtr space;
  SimplicialMap projection;
  /// Smallest source cell mapping onto each result cell.
  std::vector<CellId> representative;
};

/// Colimit of W by the simplicial equivalence relation generated by `pairs`.
QuotientResult quotient_by_relations(SetPtr w, std::vector<std::pair<Simplex, Simplex>> pairs,
                                     int dim_cap = -1);
/// Collapse a face-closed set of cells containing the basepoint.
QuotientResult quotient(SetPtr x, std::span<const CellId> sub);

struct ColimitPresentation {
  SetPtr space;
  std::vector<SimplicialMap> legs;
  /// For each result cell, every (input, cell) that maps onto it.
  std::vector<std::vector<std::pair<int, CellId>>> tags;
  bool left_injective = false;
  bool right_injective = false;
};

/// Identify simplex x of input a with simplex y of input b.
struct Gluing {
  int a;
  Simplex x;
  int b;
  Simplex y;
};

/// Colimit of a family of objects along gluings. The basepoint comes from
/// `basepoint_input`; callers glue the other basepoints as needed.
ColimitPresentation colimit(const std::vector<SetPtr>& inputs, const std::vector<Gluing>& glue,
                            int basepoint_input = 0, int dim_cap = -1);
/// The map out of a colimit given on each input. Throws StructuralError when
/// two inputs disagree on a shared cell.
SimplicialMap map_from_colimit(const ColimitPresentation& c, SetPtr target, const std::vector<SimplicialMap>& parts);
ColimitPresentation wedge(const std::vector<SetPtr>& inputs);
ColimitPresentation pushout(const SimplicialMap& f, const SimplicialMap& g);

/// A product with part of it collapsed, keeping product coordinates.
struct ProductQuotient {
  ProductPresentation product;
  SetPtr space;
  SimplicialMap projection;
  std::vector<std::pair<Simplex, Simplex>> coords;  // of each result cell

  Simplex pair(const Simplex& a, const Simplex& b) const {
    return projection.apply(product.pair(a, b));
  }
};

/// X ⋊ K = (X x K)/(* x K). K need not be pointed.
ProductQuotient half_smash_right(SetPtr x, SetPtr k, int dim_cap = -1);
/// A ∧ K = (A x K)/(* x K ∪ A x *).
ProductQuotient smash_left(SetPtr a, SetPtr k, int dim_cap = -1);
/// A x Delta[i] / (* x Delta[i] ∪ A x ∂Delta[i]).
ProductQuotient suspension_presentation(SetPtr a, int i, int dim_cap = -1);
SetPtr suspension(SetPtr a, int i);

/// The map src -> dst induced on coordinates by f x g; null means identity.
/// The collapsed parts must be respected.
SimplicialMap product_quotient_map(const ProductQuotient& src, const ProductQuotient& dst,
                                   const SimplicialMap* f, const SimplicialMap* g);

/// An explicit pointed isomorphism, when one exists.
std::optional<SimplicialMap> find_isomorphism(SetPtr x, SetPtr y);
bool isomorphic(SetPtr x, SetPtr y);

}  // namespace mapalg
