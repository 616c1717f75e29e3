#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mapalg/mapping_space.hpp"

namespace mapalg {

/// F_A K = A ∧ K, left adjoint to M_A = map_*(A, -).
ProductQuotient left_adjoint_F(SetPtr a, SetPtr k, int dim_cap = -1);

/// The element (a, b) -> A∧K(a, sigma ∘ b) of map(A, A∧K)_n for sigma in K_n.
/// `space` must be map(A, A∧K) built over the same A.
Index unit_element(const MappingSpace& space, const ProductQuotient& fk, const Simplex& sigma);
/// The same element as a map A ⋊ Delta[n] -> A∧K; `src` is A ⋊ Delta[n].
SimplicialMap unit_map(const ProductQuotient& src, const ProductQuotient& fk, const Simplex& sigma);

/// The adjoint g♭ : K -> map(A, X) of g : A∧K -> X, one element per cell of K.
Assignment flat(const SimplicialMap& g, const ProductQuotient& fk, const MappingSpace& mx);
/// The adjoint h♯ : A∧K -> X of h : K -> map(A, X), given per cell of K.
SimplicialMap sharp(const Assignment& h, const ProductQuotient& fk, const MappingSpace& mx);

/// Per cell of a realized table, the element it came from.
Assignment cell_elements(const Realization& r);
/// A simplicial map between realizations induced by a level map of tables.
SimplicialMap realize_map(const Realization& from, const Realization& to, const LevelMap& f);

struct AdjunctionReport {
  std::size_t left = 0;   // |map(F_A K, X)_0|
  std::size_t right = 0;  // |map(K, M_A X)_0|
  bool flat_lands = false;      // every g♭ is a simplicial map K -> M_A X
  bool bijection = false;       // ♭ injective and |left| = |right|
  bool sharp_flat = false;      // (g♭)♯ = g for all g
  bool flat_sharp = false;      // (h♯)♭ = h for all h
  bool counit_factor = false;   // g = eps_X ∘ F_A(g♭) for all g
  bool unit_factor = false;     // h = M_A(h♯) ∘ eta_K for all h
  bool triangle_f = false;      // eps_{F K} ∘ F eta_K = id
  bool triangle_m = false;      // M eps_X ∘ eta_{M X} = id
  bool pass() const;
};

/// Level-0 adjunction bijection with both triangle identities, on every
/// enumerated element.
AdjunctionReport adjunction_check(SetPtr a, SetPtr k, SetPtr x, const EnumerationOptions& options = {});

/// The T_A-algebra M_A Y through level m: K realizes X, T_A X = map(A, A∧K),
/// eps = M_A(ev) and mu = M_A(ev_{A∧K}) on T_A T_A X.
struct AlgebraStructure {
  SetPtr a;
  SetPtr y;
  int m = 0;
  std::shared_ptr<const MappingSpace> x;
  Realization k;
  ProductQuotient fk;
  std::shared_ptr<const MappingSpace> t;
  LevelMap eta;
  LevelMap eps;
  SimplicialMap ev;
  // T_A T_A X
  Realization kk;
  ProductQuotient fkk;
  std::shared_ptr<const MappingSpace> tt;
  LevelMap mu;
};

/// `with_square = false` skips T_A T_A X.
AlgebraStructure realizable_algebra_structure(SetPtr a, SetPtr y, int m, const EnumerationOptions& options = {},
                                              bool with_square = true);

struct AlgebraCheck {
  std::string name;
  bool pass = false;
  std::string witness;  // offending (level, element)
};

/// eps ∘ eta = id, eps a simplicial level map, and the square
/// eps ∘ T_A(eps) = eps ∘ mu, for a given (possibly corrupted) eps.
std::vector<AlgebraCheck> check_algebra(const AlgebraStructure& s, const LevelMap& eps);

}  // namespace mapalg
