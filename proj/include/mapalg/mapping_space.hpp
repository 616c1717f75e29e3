#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mapalg/constructions.hpp"
#include "mapalg/enumerate.hpp"

namespace mapalg {

inline constexpr int kDefaultLevelCap = 1;

/// A ⋊ Delta[n] for n = 0..top with the maps induced by cofaces and
/// codegeneracies, shared by every mapping space out of A.
class SourceFamily {
 public:
  SourceFamily(SetPtr a, int top);

  const SetPtr& a() const { return a_; }
  int top() const { return static_cast<int>(levels_.size()) - 1; }
  const ProductQuotient& level(int n) const { return levels_[n]; }
  /// A ⋊ delta^i : A ⋊ Delta[n-1] -> A ⋊ Delta[n].
  const SimplicialMap& coface(int n, int i) const { return cofaces_[n][i]; }
  /// A ⋊ sigma^j : A ⋊ Delta[n+1] -> A ⋊ Delta[n].
  const SimplicialMap& codegeneracy(int n, int j) const { return codegens_[n][j]; }

 private:
  SetPtr a_;
  std::vector<ProductQuotient> levels_;
  std::vector<std::vector<SimplicialMap>> cofaces_;
  std::vector<std::vector<SimplicialMap>> codegens_;
};

using SourcePtr = std::shared_ptr<const SourceFamily>;
using TablePtr = std::shared_ptr<const SimplexTable>;

/// Levels 0..m of map_*(A, T): level n lists the pointed maps A ⋊ Delta[n] -> T,
/// and `table` carries the face and degeneracy actions by precomposition.
struct MappingSpace {
  SourcePtr source;
  TablePtr target;
  std::shared_ptr<const EzTable> ez_target;  // set when T tabulates a simplicial set
  int levels = 0;
  std::vector<std::vector<Assignment>> elements;
  std::vector<std::unordered_map<Assignment, Index, IndexVectorHash>> lookup;
  SimplexTable table;

  Index find(int n, const Assignment& f) const;
  /// Value of element (n, k) on a simplex of A ⋊ Delta[n].
  Index value(int n, Index k, const Simplex& s) const;
  /// Element (n, k) as a map into the tabulated simplicial set.
  SimplicialMap as_map(int n, Index k) const;
  /// Index of a map A ⋊ Delta[n] -> Y at level n; needs `ez_target`.
  Index index_of(int n, const SimplicialMap& f) const;
};

using SpacePtr = std::shared_ptr<const MappingSpace>;

/// Levels 0..m of map_*(A, T); T must reach level dim(A) + m.
MappingSpace mapping_space(SourcePtr source, TablePtr target, int m, const EnumerationOptions& options = {});
MappingSpace mapping_space(SetPtr a, SetPtr y, int m, const EnumerationOptions& options = {});
/// Y is tabulated through dim(A ⋊ Delta[m]).
MappingSpace mapping_space(SourcePtr source, SetPtr y, int m, const EnumerationOptions& options = {});
/// Every pointed map A -> Y.
std::vector<SimplicialMap> enumerate_pointed_maps(SetPtr a, SetPtr y, const EnumerationOptions& options = {});

/// The level-wise map map(A, T) -> map(A, T') given by postcomposing with g.
LevelMap postcompose(const MappingSpace& from, const MappingSpace& to, const LevelMap& g);

/// Loops of a table: maps S^1 ⋊ Delta[n] -> T for n = 0..m. Level 0 is the
/// set of level-1 elements with both faces at the basepoint.
MappingSpace loop_space(TablePtr t, int m, const EnumerationOptions& options = {});

struct TruncatedObject {
  Index k0 = 0;
  Index k1 = 0;
  std::vector<Index> d0;
  std::vector<Index> d1;

  friend bool operator==(const TruncatedObject&, const TruncatedObject&) = default;
};

TruncatedObject rho(const SimplexTable& t);
TruncatedObject rho(const SimplicialSet& x);

/// Components of level 0 under the relation generated by level 1.
struct HomotopyClassTable {
  std::vector<int> class_of;           // per level-0 element
  std::vector<Index> representative;   // smallest element of each class
  /// T_{f,g}: level-1 elements F with d_0 F = f and d_1 F = g.
  std::map<std::pair<Index, Index>, std::vector<Index>> witnesses;

  int count() const { return static_cast<int>(representative.size()); }
  std::vector<Index> members(int cls) const;
};

HomotopyClassTable homotopy_classes(const TruncatedObject& t);
HomotopyClassTable homotopy_classes(const SimplexTable& t);

struct LevelReport {
  int level = 0;
  Index left = 0;
  Index right = 0;
  bool injective = false;
  bool surjective = false;
  bool bijective() const { return injective && surjective; }
};

/// The comparison map(ΣA, Y) -> Ω map(A, Y) at levels 0..m.
struct SigmaOmegaReport {
  std::vector<LevelReport> levels;
  LevelMap comparison;
  bool bijective() const;
};

/// Comparison adjoint to ΣA ⋊ Delta[n] = (A x Delta[1]) ⋊ Delta[n] modulo
/// the suspension collapse. `suspended` must be map(ΣA, Y) built from
/// suspension_presentation(A, 1) and `loops` must be Ω of `base` = map(A, Y).
LevelMap sigma_omega_comparison(const ProductQuotient& susp, const MappingSpace& suspended,
                                const MappingSpace& base, const MappingSpace& loops);
SigmaOmegaReport verify_sigma_omega(SetPtr a, SetPtr y, int m, const EnumerationOptions& options = {});

LevelReport compare_levels(const LevelMap& f, const SimplexTable& from, const SimplexTable& to, int n);

}  // namespace mapalg
