#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "mapalg/simplicial_map.hpp"

namespace mapalg {

using Index = std::uint32_t;

struct IndexVectorHash {
  std::size_t operator()(const std::vector<Index>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull ^ v.size();
    for (Index x : v) h = (h ^ x) * 0x100000001b3ull;
    return static_cast<std::size_t>(h);
  }
};

/// A simplicial set listed level by level up to `top()`: every simplex is an
/// index within its level, with explicit face and degeneracy tables.
/// Degeneracies are recorded only where the target level exists.
class SimplexTable {
 public:
  SimplexTable() = default;
  SimplexTable(std::vector<Index> sizes, std::vector<std::vector<std::vector<Index>>> faces,
               std::vector<std::vector<std::vector<Index>>> degens, std::vector<Index> basepoint);

  int top() const { return static_cast<int>(sizes_.size()) - 1; }
  Index size(int n) const { return sizes_[n]; }
  Index basepoint(int n) const { return basepoint_[n]; }
  Index face(int n, int i, Index k) const { return faces_[n][i][k]; }
  Index degeneracy(int n, int j, Index k) const { return degens_[n][j][k]; }
  /// The degeneracy word `mask` applied to element k of level n0, landing at n.
  Index degenerate(int n0, Index k, DegeneracyMask mask, int n) const;
  /// Elements of level n >= 1 whose faces are exactly `faces`, ascending.
  std::span<const Index> with_faces(int n, const std::vector<Index>& faces) const;

  /// Same data with levels above n dropped.
  SimplexTable truncated(int n) const;

 private:
  std::vector<Index> sizes_;
  std::vector<std::vector<std::vector<Index>>> faces_;   // [n][i][k], n >= 1
  std::vector<std::vector<std::vector<Index>>> degens_;  // [n][j][k], n < top
  std::vector<Index> basepoint_;
  std::vector<std::unordered_map<std::vector<Index>, std::vector<Index>, IndexVectorHash>> buckets_;
};

/// Every violated simplicial identity among the recorded operators.
std::vector<std::string> check_identities(const SimplexTable& t);

/// Levelwise functions between two tables (at[n][k] is the image of (n, k)).
struct LevelMap {
  std::vector<std::vector<Index>> at;
};

/// Commutes with faces, degeneracies and basepoints on the shared levels.
std::vector<std::string> check_level_map(const SimplexTable& from, const SimplexTable& to, const LevelMap& f);

LevelMap identity_level_map(const SimplexTable& t);
LevelMap compose(const LevelMap& g, const LevelMap& f);

/// A finite simplicial set tabulated through level `top`, with the normal
/// form of every element and its inverse.
struct EzTable {
  SetPtr set;
  SimplexTable table;
  std::vector<std::vector<Simplex>> simplices;  // [n][k]
  std::unordered_map<Simplex, Index, SimplexHash> index;

  Index index_of(const Simplex& s) const;
};

EzTable tabulate(SetPtr y, int top);
/// Tabulated form of a map between two tabulated sets.
LevelMap tabulate_map(const EzTable& from, const EzTable& to, const SimplicialMap& f);

/// The finite simplicial set generated by a table: nondegenerate elements are
/// those outside the image of every degeneracy. `simplex[n][k]` is the normal
/// form of element (n, k).
struct Realization {
  SetPtr set;
  std::vector<std::vector<Simplex>> simplex;
  std::unordered_map<Simplex, Index, SimplexHash> index;
};

Realization realize(const SimplexTable& t);

/// Levelwise cartesian product; element (a, b) has index a * |right_n| + b.
SimplexTable product_table(const SimplexTable& left, const SimplexTable& right);

}  // namespace mapalg
