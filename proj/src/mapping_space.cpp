#include "mapalg/mapping_space.hpp"

#include <algorithm>
#include <numeric>

#include "mapalg/errors.hpp"

namespace mapalg {

SourceFamily::SourceFamily(SetPtr a, int top) : a_(std::move(a)) {
  for (int n = 0; n <= top; ++n) levels_.push_back(half_smash_right(a_, standard_simplex(n)));
  cofaces_.resize(top + 1);
  codegens_.resize(top + 1);
  for (int n = 1; n <= top; ++n) {
    for (int i = 0; i <= n; ++i) {
      const SimplicialMap d = delta_coface(n, i);
      cofaces_[n].push_back(product_quotient_map(levels_[n - 1], levels_[n], nullptr, &d));
    }
  }
  for (int n = 0; n < top; ++n) {
    for (int j = 0; j <= n; ++j) {
      const SimplicialMap s = delta_codegeneracy(n, j);
      codegens_[n].push_back(product_quotient_map(levels_[n + 1], levels_[n], nullptr, &s));
    }
  }
}

Index MappingSpace::find(int n, const Assignment& f) const {
  const auto it = lookup[n].find(f);
  if (it == lookup[n].end()) throw StructuralError("assignment is not a pointed map at level " + std::to_string(n));
  return it->second;
}

Index MappingSpace::value(int n, Index k, const Simplex& s) const {
  return target->degenerate(s.cell_dim(), elements[n][k][s.cell], s.degens, s.dim);
}

SimplicialMap MappingSpace::as_map(int n, Index k) const {
  if (!ez_target) throw StructuralError("mapping space target is not a tabulated simplicial set");
  const SetPtr& src = source->level(n).space;
  SimplicialMap f{src, ez_target->set, {}};
  for (CellId c = 0; c < src->size(); ++c) f.image.push_back(ez_target->simplices[src->cell(c).dim][elements[n][k][c]]);
  return f;
}

Index MappingSpace::index_of(int n, const SimplicialMap& f) const {
  if (!ez_target) throw StructuralError("mapping space target is not a tabulated simplicial set");
  Assignment g(f.image.size());
  for (CellId c = 0; c < g.size(); ++c) g[c] = ez_target->index_of(f.image[c]);
  return find(n, g);
}

MappingSpace mapping_space(SourcePtr source, TablePtr target, int m, const EnumerationOptions& options) {
  if (source->top() < m) throw StructuralError("source family is shorter than the level cap");
  MappingSpace out;
  out.source = source;
  out.target = target;
  out.levels = m;
  for (int n = 0; n <= m; ++n) {
    out.elements.push_back(enumerate_maps(*source->level(n).space, *target, options));
    auto& index = out.lookup.emplace_back();
    for (Index k = 0; k < out.elements[n].size(); ++k) index.emplace(out.elements[n][k], k);
  }
  auto pull = [&](int n, Index k, const SimplicialMap& along) {
    Assignment g(along.source->size());
    for (CellId c = 0; c < g.size(); ++c) g[c] = out.value(n, k, along.image[c]);
    return g;
  };
  std::vector<Index> sizes, bp;
  std::vector<std::vector<std::vector<Index>>> faces(m + 1), degens(m + 1);
  for (int n = 0; n <= m; ++n) {
    const Index count = static_cast<Index>(out.elements[n].size());
    sizes.push_back(count);
    const SimplicialSet& src = *source->level(n).space;
    Assignment constant(src.size());
    for (CellId c = 0; c < src.size(); ++c) constant[c] = target->basepoint(src.cell(c).dim);
    bp.push_back(out.find(n, constant));
    for (int i = 0; n >= 1 && i <= n; ++i) {
      auto& row = faces[n].emplace_back(count);
      for (Index k = 0; k < count; ++k) row[k] = out.find(n - 1, pull(n, k, source->coface(n, i)));
    }
    for (int j = 0; n < m && j <= n; ++j) {
      auto& row = degens[n].emplace_back(count);
      for (Index k = 0; k < count; ++k) row[k] = out.find(n + 1, pull(n, k, source->codegeneracy(n, j)));
    }
  }
  out.table = SimplexTable(std::move(sizes), std::move(faces), std::move(degens), std::move(bp));
  return out;
}

MappingSpace mapping_space(SetPtr a, SetPtr y, int m, const EnumerationOptions& options) {
  return mapping_space(std::make_shared<const SourceFamily>(a, m), std::move(y), m, options);
}

MappingSpace mapping_space(SourcePtr source, SetPtr y, int m, const EnumerationOptions& options) {
  auto ez = std::make_shared<const EzTable>(tabulate(y, source->level(m).space->dimension()));
  auto out = mapping_space(source, TablePtr(ez, &ez->table), m, options);
  out.ez_target = ez;
  return out;
}

std::vector<SimplicialMap> enumerate_pointed_maps(SetPtr a, SetPtr y, const EnumerationOptions& options) {
  const EzTable ez = tabulate(y, a->dimension());
  std::vector<SimplicialMap> out;
  for (const Assignment& f : enumerate_maps(*a, ez.table, options)) {
    SimplicialMap g{a, y, {}};
    for (CellId c = 0; c < a->size(); ++c) g.image.push_back(ez.simplices[a->cell(c).dim][f[c]]);
    out.push_back(std::move(g));
  }
  return out;
}

LevelMap postcompose(const MappingSpace& from, const MappingSpace& to, const LevelMap& g) {
  LevelMap out;
  const int top = std::min(from.levels, to.levels);
  for (int n = 0; n <= top; ++n) {
    const SimplicialSet& src = *from.source->level(n).space;
    auto& row = out.at.emplace_back(from.elements[n].size());
    for (Index k = 0; k < row.size(); ++k) {
      Assignment h(src.size());
      for (CellId c = 0; c < src.size(); ++c) h[c] = g.at[src.cell(c).dim][from.elements[n][k][c]];
      row[k] = to.find(n, h);
    }
  }
  return out;
}

MappingSpace loop_space(TablePtr t, int m, const EnumerationOptions& options) {
  return mapping_space(std::make_shared<const SourceFamily>(sphere(1), m), std::move(t), m, options);
}

TruncatedObject rho(const SimplexTable& t) {
  if (t.top() < 1) throw CapError("truncation needs level 1");
  TruncatedObject out;
  out.k0 = t.size(0);
  out.k1 = t.size(1);
  for (Index k = 0; k < out.k1; ++k) {
    out.d0.push_back(t.face(1, 0, k));
    out.d1.push_back(t.face(1, 1, k));
  }
  return out;
}

TruncatedObject rho(const SimplicialSet& x) {
  auto ptr = std::make_shared<const SimplicialSet>(x);
  return rho(tabulate(ptr, 1).table);
}

std::vector<Index> HomotopyClassTable::members(int cls) const {
  std::vector<Index> out;
  for (Index k = 0; k < class_of.size(); ++k) {
    if (class_of[k] == cls) out.push_back(k);
  }
  return out;
}

HomotopyClassTable homotopy_classes(const TruncatedObject& t) {
  std::vector<Index> parent(t.k0);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Index v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  HomotopyClassTable out;
  for (Index x = 0; x < t.k1; ++x) {
    out.witnesses[{t.d0[x], t.d1[x]}].push_back(x);
    const Index a = find(t.d0[x]), b = find(t.d1[x]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  out.class_of.assign(t.k0, -1);
  std::vector<int> id_of_root(t.k0, -1);
  for (Index v = 0; v < t.k0; ++v) {
    const Index r = find(v);
    if (id_of_root[r] < 0) {
      id_of_root[r] = out.count();
      out.representative.push_back(v);
    }
    out.class_of[v] = id_of_root[r];
  }
  return out;
}

HomotopyClassTable homotopy_classes(const SimplexTable& t) { return homotopy_classes(rho(t)); }

bool SigmaOmegaReport::bijective() const {
  return std::all_of(levels.begin(), levels.end(), [](const LevelReport& r) { return r.bijective(); });
}

namespace {

// A simplex of Delta[1] over the given simplex of S^1.
Simplex lift_to_interval(const SimplicialSet& circle, const Simplex& u) {
  std::vector<int> seq(u.dim + 1, 0);
  if (u.cell != circle.basepoint()) seq = surjection_of(u.degens, u.dim);
  return delta_simplex(1, seq);
}

}  // namespace

LevelMap sigma_omega_comparison(const ProductQuotient& susp, const MappingSpace& suspended,
                                const MappingSpace& base, const MappingSpace& loops) {
  const SimplicialSet& circle = *loops.source->a();
  LevelMap out;
  const int top = std::min(suspended.levels, loops.levels);
  for (int n = 0; n <= top; ++n) {
    const ProductQuotient& loop_src = loops.source->level(n);
    const ProductQuotient& susp_src = suspended.source->level(n);
    const SimplicialSet& simplex_n = *standard_simplex(n);
    auto& row = out.at.emplace_back(suspended.elements[n].size());
    for (Index psi = 0; psi < row.size(); ++psi) {
      Assignment omega(loop_src.space->size());
      for (CellId tau = 0; tau < omega.size(); ++tau) {
        const auto& [c0, d0] = loop_src.coords[tau];
        const int k = c0.dim;
        const ProductQuotient& a_src = base.source->level(k);
        Assignment elem(a_src.space->size());
        for (CellId sigma = 0; sigma < elem.size(); ++sigma) {
          const auto& [a, b] = a_src.coords[sigma];
          const auto theta = delta_operator(k, b);
          const Simplex u = circle.apply_operator(c0, theta);
          const Simplex v = simplex_n.apply_operator(d0, theta);
          elem[sigma] = suspended.value(n, psi, susp_src.pair(susp.pair(a, lift_to_interval(circle, u)), v));
        }
        omega[tau] = base.find(k, elem);
      }
      row[psi] = loops.find(n, omega);
    }
  }
  return out;
}

LevelReport compare_levels(const LevelMap& f, const SimplexTable& from, const SimplexTable& to, int n) {
  LevelReport r;
  r.level = n;
  r.left = from.size(n);
  r.right = to.size(n);
  std::vector<bool> hit(to.size(n), false);
  r.injective = true;
  for (Index k = 0; k < from.size(n); ++k) {
    const Index t = f.at[n][k];
    if (hit[t]) r.injective = false;
    hit[t] = true;
  }
  r.surjective = std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
  return r;
}

SigmaOmegaReport verify_sigma_omega(SetPtr a, SetPtr y, int m, const EnumerationOptions& options) {
  auto susp = suspension_presentation(a, 1);
  auto suspended_src = std::make_shared<const SourceFamily>(susp.space, m);
  auto base_src = std::make_shared<const SourceFamily>(a, m + 1);
  const int top = std::max(suspended_src->level(m).space->dimension(), base_src->level(m + 1).space->dimension());
  auto ez = std::make_shared<const EzTable>(tabulate(y, top));
  TablePtr t(ez, &ez->table);
  const MappingSpace suspended = mapping_space(suspended_src, t, m, options);
  auto base = std::make_shared<const MappingSpace>(mapping_space(base_src, t, m + 1, options));
  const MappingSpace loops = loop_space(TablePtr(base, &base->table), m, options);
  SigmaOmegaReport report;
  report.comparison = sigma_omega_comparison(susp, suspended, *base, loops);
  for (int n = 0; n <= m; ++n) report.levels.push_back(compare_levels(report.comparison, suspended.table, loops.table, n));
  return report;
}

}  // namespace mapalg
