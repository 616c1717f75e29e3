#include "mapalg/simplicial_map.hpp"

#include <unordered_set>

#include "mapalg/errors.hpp"

namespace mapalg {

Simplex SimplicialMap::apply(const Simplex& s) const {
  return apply_surjection(image[s.cell], s.degens, s.dim);
}

SimplicialMap identity_map(SetPtr x) {
  SimplicialMap f{x, x, {}};
  f.image.reserve(x->size());
  for (CellId c = 0; c < x->size(); ++c) f.image.push_back(nondegenerate(c, x->cell(c).dim));
  return f;
}

SimplicialMap constant_map(SetPtr source, SetPtr target) {
  SimplicialMap f{source, target, {}};
  f.image.reserve(source->size());
  const CellId b = target->basepoint();
  for (CellId c = 0; c < source->size(); ++c) {
    const int n = source->cell(c).dim;
    f.image.push_back(Simplex{b, static_cast<std::uint16_t>(n), (DegeneracyMask{1} << n) - 1});
  }
  return f;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (f.target != g.source && f.target->size() != g.source->size()) {
    throw StructuralError("maps are not composable");
  }
  SimplicialMap h{f.source, g.target, {}};
  h.image.reserve(f.image.size());
  for (const Simplex& s : f.image) h.image.push_back(g.apply(s));
  return h;
}

std::vector<std::string> validate(const SimplicialMap& f) {
  std::vector<std::string> report;
  const SimplicialSet& x = *f.source;
  const SimplicialSet& y = *f.target;
  if (f.image.size() != x.size()) {
    report.push_back("map assigns " + std::to_string(f.image.size()) + " cells, source has " +
                     std::to_string(x.size()));
    return report;
  }
  for (CellId c = 0; c < x.size(); ++c) {
    const Simplex& t = f.image[c];
    const int n = x.cell(c).dim;
    if (t.dim != n || t.cell >= y.size() || y.cell(t.cell).dim != t.cell_dim()) {
      report.push_back("image of cell " + std::to_string(c) + " is malformed");
      continue;
    }
    for (int i = 0; n > 0 && i <= n; ++i) {
      if (f.apply(x.cell(c).faces[i]) != y.face(t, i)) {
        report.push_back("map does not commute with d_" + std::to_string(i) + " on cell " +
                         std::to_string(c));
      }
    }
  }
  if (f.image[x.basepoint()] != nondegenerate(y.basepoint(), 0)) {
    report.push_back("basepoint is not preserved");
  }
  return report;
}

bool is_valid(const SimplicialMap& f) { return validate(f).empty(); }

bool injective_on_cells(const SimplicialMap& f) {
  std::unordered_set<CellId> seen;
  for (const Simplex& s : f.image) {
    if (s.degenerate() || !seen.insert(s.cell).second) return false;
  }
  return true;
}

}  // namespace mapalg
