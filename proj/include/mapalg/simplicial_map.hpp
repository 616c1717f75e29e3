#pragma once

#include <string>
#include <vector>

#include "mapalg/simplicial_set.hpp"

namespace mapalg {

/// Pointed simplicial map, stored as the image of every nondegenerate source
/// cell. `image[c]` has the dimension of cell c.
struct SimplicialMap {
  SetPtr source;
  SetPtr target;
  std::vector<Simplex> image;

  Simplex apply(const Simplex& s) const;
  Simplex on_cell(CellId c) const { return image[c]; }

  friend bool operator==(const SimplicialMap& f, const SimplicialMap& g) {
    return f.image == g.image;
  }
};

SimplicialMap identity_map(SetPtr x);
/// Everything to the basepoint of `target`.
SimplicialMap constant_map(SetPtr source, SetPtr target);
/// g after f. Throws StructuralError when f's target is not g's source.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// Face compatibility and pointedness violations, one line each.
std::vector<std::string> validate(const SimplicialMap& f);
bool is_valid(const SimplicialMap& f);

/// Distinct nondegenerate cells go to distinct nondegenerate cells.
bool injective_on_cells(const SimplicialMap& f);

}  // namespace mapalg
