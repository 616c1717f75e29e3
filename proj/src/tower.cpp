#include "mapalg/tower.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "mapalg/errors.hpp"

namespace mapalg {

const char* to_string(TowerKind k) { return k == TowerKind::dold_lashof ? "dold_lashof" : "stover"; }

namespace {

Simplex degenerate_vertex(CellId v, int dim) {
  return Simplex{v, static_cast<std::uint16_t>(dim), masks_with_popcount(dim, dim).front()};
}

// The end V ⋊ {t} of V ⋊ Delta[1] at cell c of V.
Simplex cylinder_end(const ProductQuotient& cyl, const SimplicialSet& v, CellId c, int t) {
  const int d = v.cell(c).dim;
  return cyl.pair(nondegenerate(c, d), degenerate_vertex(delta_cell(1, 1u << t), d));
}

LevelMap push(const MappingSpace& from, const MappingSpace& to, const SimplicialMap& g) {
  return postcompose(from, to, tabulate_map(*from.ez_target, *to.ez_target, g));
}

std::string at(int n, Index e) { return "level " + std::to_string(n) + " element " + std::to_string(e); }

// f_new ∘ M i = f_old on every element of map(A, Z_old).
LawCheck expand_i(const TowerStage& prev, const TowerStage& next, const SimplicialMap& i) {
  LawCheck c{"expand_i", true, {}};
  const LevelMap mi = push(*prev.mz, *next.mz, i);
  for (int n = 0; n < static_cast<int>(mi.at.size()) && c.pass; ++n) {
    for (Index e = 0; e < mi.at[n].size(); ++e) {
      if (next.f.at[n][mi.at[n][e]] != prev.f.at[n][e]) {
        c.pass = false;
        c.witness = at(n, e);
        break;
      }
    }
  }
  return c;
}

// lhs ∘ via = rhs on every element of `over`.
LawCheck agree(const std::string& name, const LevelMap& lhs, const LevelMap& via, const LevelMap& rhs) {
  LawCheck c{name, true, {}};
  for (int n = 0; n < static_cast<int>(via.at.size()) && c.pass; ++n) {
    for (Index e = 0; e < via.at[n].size(); ++e) {
      if (lhs.at[n][via.at[n][e]] != rhs.at[n][e]) {
        c.pass = false;
        c.witness = at(n, e);
        break;
      }
    }
  }
  return c;
}

LawCheck validity(const TowerStage& s, const SimplicialMap& i) {
  LawCheck c{"valid", true, {}};
  auto problems = validate(*s.z);
  for (const SimplicialMap* f : {&s.e, &i, &s.p}) {
    if (problems.empty()) problems = validate(*f);
  }
  if (!problems.empty()) {
    c.pass = false;
    c.witness = problems.front();
  }
  return c;
}

TowerStage finish_stage(const TowerState& state, CylinderPushout cp, const SimplicialMap& e_on_w) {
  const TowerStage& prev = state.stages.back();
  TowerStage next;
  next.z = cp.z.space;
  next.e = map_from_colimit(cp.z, state.y, {prev.e, e_on_w});
  next.mz = std::make_shared<const MappingSpace>(mapping_space(state.source, next.z, state.m, state.options));
  next.f = push(*next.mz, state.x(), next.e);
  next.pushout = std::move(cp);
  return next;
}

void common_checks(TowerStage& next, const TowerStage& prev) {
  const SimplicialMap& i = next.pushout->i();
  next.checks.push_back({"i_injective", injective_on_cells(i), injective_on_cells(i) ? "" : "i identifies two cells"});
  next.checks.push_back(validity(next, i));
  next.checks.push_back(expand_i(prev, next, i));
}

}  // namespace

CylinderPushout cylinder_pushout(const SimplicialMap& u, const SimplicialMap& v, int dim_cap) {
  const SetPtr& vs = u.source;
  const SetPtr& us = v.target;
  CylinderPushout out;
  out.cyl = half_smash_right(vs, standard_simplex(1), std::max(dim_cap, vs->dim_cap()));
  std::vector<Gluing> glue{{0, nondegenerate(us->basepoint(), 0), 1, nondegenerate(out.cyl.space->basepoint(), 0)}};
  for (CellId c = 0; c < vs->size(); ++c) glue.push_back({1, cylinder_end(out.cyl, *vs, c, 1), 0, v.image[c]});
  out.w = colimit({us, out.cyl.space}, glue);
  out.front = SimplicialMap{vs, out.w.space, {}};
  for (CellId c = 0; c < vs->size(); ++c) out.front.image.push_back(out.w.legs[1].apply(cylinder_end(out.cyl, *vs, c, 0)));
  out.back = out.w.legs[0];
  SimplicialMap proj{out.cyl.space, vs, {}};
  for (const auto& [a, b] : out.cyl.coords) proj.image.push_back(a);
  out.collapse = map_from_colimit(out.w, us, {identity_map(us), compose(v, proj)});
  out.z = pushout(u, out.front);
  return out;
}

TowerState start_tower(TowerKind kind, SetPtr a, SetPtr y, int m, int i_max, int dim_cap,
                       const EnumerationOptions& options) {
  return start_tower(kind, std::move(a), constant_map(point(), std::move(y)), m, i_max, dim_cap, options);
}

TowerState start_tower(TowerKind kind, SetPtr a, const SimplicialMap& e0, int m, int i_max, int dim_cap,
                       const EnumerationOptions& options) {
  const SetPtr& y = e0.target;
  if (m < 1) throw CapError("towers need level cap at least 1");
  TowerState s;
  s.kind = kind;
  s.a = a;
  s.y = y;
  s.m = m;
  s.i_max = i_max;
  s.dim_cap = dim_cap;
  s.options = options;
  s.algebra = std::make_shared<const AlgebraStructure>(realizable_algebra_structure(a, y, m, options, false));
  s.source = s.algebra->x->source;
  if (kind == TowerKind::stover) s.ly = std::make_shared<const StoverObject>(stover_comonad(a, y, i_max, options));
  TowerStage& z0 = s.stages.emplace_back();
  z0.z = e0.source;
  z0.e = e0;
  z0.mz = std::make_shared<const MappingSpace>(mapping_space(s.source, z0.z, m, options));
  z0.f = push(*z0.mz, s.x(), z0.e);
  return s;
}

TowerState dold_lashof_step(const TowerState& state) {
  if (state.kind != TowerKind::dold_lashof) throw StructuralError("not a Dold-Lashof tower");
  TowerState out = state;
  TowerStage& prev = out.stages.back();
  const AlgebraStructure& alg = *state.algebra;
  prev.kz = std::make_shared<const Realization>(realize(prev.mz->table));
  prev.fz = std::make_shared<const ProductQuotient>(left_adjoint_F(state.a, prev.kz->set));
  const SimplicialMap ev_z = sharp(cell_elements(*prev.kz), *prev.fz, *prev.mz);
  const SimplicialMap f_hat = realize_map(*prev.kz, alg.k, prev.f);
  const SimplicialMap v = product_quotient_map(*prev.fz, alg.fk, nullptr, &f_hat);
  CylinderPushout cp = cylinder_pushout(ev_z, v, state.dim_cap);
  const SimplicialMap e_on_w = compose(alg.ev, cp.collapse);
  TowerStage next = finish_stage(out, std::move(cp), e_on_w);
  next.p = compose(next.pushout->p(), next.pushout->back);
  common_checks(next, prev);

  const MappingSpace& x = out.x();
  next.checks.push_back(agree("expand_p", next.f, push(*alg.t, *next.mz, next.p), alg.eps));
  LawCheck split{"splitter", true, {}};
  for (int n = 0; n <= state.m && split.pass; ++n) {
    for (Index e = 0; e < x.table.size(n); ++e) {
      const SimplicialMap s = compose(next.p, unit_map(state.source->level(n), alg.fk, alg.k.simplex[n][e]));
      if (compose(next.e, s) != x.as_map(n, e)) {
        split.pass = false;
        split.witness = at(n, e);
        break;
      }
    }
  }
  next.checks.push_back(split);
  out.stages.push_back(std::move(next));
  return out;
}

TowerState stover_tower_step(const TowerState& state) {
  if (state.kind != TowerKind::stover) throw StructuralError("not a Stover tower");
  TowerState out = state;
  TowerStage& prev = out.stages.back();
  const StoverObject& ly = *state.ly;
  prev.lz = std::make_shared<const StoverObject>(stover_comonad(ly, prev.z, state.options));
  const SimplicialMap le = stover_functor(*prev.lz, ly, prev.e);
  CylinderPushout cp = cylinder_pushout(*prev.lz->counit, le, state.dim_cap);
  const SimplicialMap e_on_w = compose(*ly.counit, cp.collapse);
  TowerStage next = finish_stage(out, std::move(cp), e_on_w);
  const CylinderPushout& po = *next.pushout;
  next.p = po.p();
  common_checks(next, prev);

  const MappingSpace mw = mapping_space(state.source, po.w.space, state.m, state.options);
  next.checks.push_back(agree("expand_p", next.f, push(mw, *next.mz, next.p), push(mw, out.x(), e_on_w)));
  next.checks.push_back(compare_on_cells("retract", compose(po.collapse, po.back), identity_map(ly.space())));
  LawCheck split{"splitter", true, {}};
  const SimplicialMap pj = compose(next.p, po.back);
  for (int q = 0; q < static_cast<int>(ly.pieces.size()) && split.pass; ++q) {
    if (compose(next.e, compose(pj, ly.built.legs[q])) != ly.piece_map(q)) {
      split.pass = false;
      const StoverPiece& piece = ly.pieces[q];
      split.witness = "degree " + std::to_string(piece.degree) + " " + at(piece.level(), piece.element);
    }
  }
  next.checks.push_back(split);
  out.stages.push_back(std::move(next));
  return out;
}

TowerState tower_step(const TowerState& state) {
  return state.kind == TowerKind::dold_lashof ? dold_lashof_step(state) : stover_tower_step(state);
}

TowerState run_tower(TowerKind kind, SetPtr a, SetPtr y, int stages, int m, int i_max, int dim_cap,
                     const EnumerationOptions& options) {
  TowerState s = start_tower(kind, std::move(a), std::move(y), m, i_max, dim_cap, options);
  for (int k = 0; k < stages; ++k) s = tower_step(s);
  return s;
}

namespace {

// The maps B ⋊ Delta[n] -> Z^(alpha+1) used by the injectivity witnesses: lifts
// of elements of X<B> and the cylinder connecting i(g) to the lift of f(g).
struct WitnessMaps {
  const TowerState& state;
  int alpha;
  int degree;
  const SourceFamily& src;

  SimplicialMap lift(int n, Index x) const {
    const TowerStage& next = state.stages[alpha + 1];
    if (state.kind == TowerKind::stover) {
      const StoverObject& ly = *state.ly;
      const int q = ly.piece_index(degree, n == 0 ? PieceKind::copy : PieceKind::cylinder, x);
      return compose(next.p, compose(next.pushout->back, ly.built.legs[q]));
    }
    return compose(next.p, unit_map(src.level(n), state.algebra->fk, state.algebra->k.simplex[n][x]));
  }

  SimplicialMap connector(const SimplicialMap& g) const {
    const TowerStage& prev = state.stages[alpha];
    const CylinderPushout& po = *state.stages[alpha + 1].pushout;
    SimplicialMap h;  // B ⋊ Delta[0] -> V
    if (state.kind == TowerKind::stover) {
      const StoverObject& lz = *prev.lz;
      const Index e = lz.spaces[degree]->index_of(0, g);
      h = lz.built.legs[lz.piece_index(degree, PieceKind::copy, e)];
    } else {
      h = unit_map(src.level(0), *prev.fz, prev.kz->simplex[0][prev.mz->index_of(0, g)]);
    }
    const ProductQuotient& b0 = src.level(0);
    const SetPtr& b = src.a();
    SimplicialMap h_b{b, h.target, {}};
    for (CellId c = 0; c < b->size(); ++c) {
      const int d = b->cell(c).dim;
      h_b.image.push_back(h.apply(b0.pair(nondegenerate(c, d), degenerate_vertex(0, d))));
    }
    const SimplicialMap cyl = product_quotient_map(src.level(1), po.cyl, &h_b, nullptr);
    return compose(po.p(), compose(po.w.legs[1], cyl));
  }
};

// Shortest path of 1-simplices between two vertices; each step records the
// simplex and whether it is traversed from d_1 to d_0.
std::vector<std::pair<Index, bool>> path(const TruncatedObject& t, Index from, Index to) {
  std::map<Index, std::pair<Index, std::pair<Index, bool>>> parent;
  std::deque<Index> queue{from};
  parent[from] = {from, {0, false}};
  while (!queue.empty() && !parent.count(to)) {
    const Index v = queue.front();
    queue.pop_front();
    for (Index s = 0; s < t.k1; ++s) {
      for (const auto& [src, dst, forward] : {std::tuple{t.d1[s], t.d0[s], true}, std::tuple{t.d0[s], t.d1[s], false}}) {
        if (src == v && !parent.count(dst)) {
          parent[dst] = {v, {s, forward}};
          queue.push_back(dst);
        }
      }
    }
  }
  std::vector<std::pair<Index, bool>> out;
  if (!parent.count(to)) return out;
  for (Index v = to; v != from; v = parent[v].first) out.push_back(parent[v].second);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

RecoveryReport recovery_report(const TowerState& state) {
  RecoveryReport report;
  const int k = static_cast<int>(state.stages.size()) - 1;
  report.stages = k;
  const TowerStage& last = state.stages[k];
  const MappingSpace& x = state.x();
  for (int n = 0; n <= state.m; ++n) report.levels.push_back(compare_levels(last.f, last.mz->table, x.table, n));

  const std::vector<SetPtr> generators = stover_generators(state.a, state.i_max);
  for (int i = 0; i <= state.i_max; ++i) {
    SourcePtr src = i == 0 ? state.source : std::make_shared<const SourceFamily>(generators[i], 1);
    if (state.kind == TowerKind::stover) src = state.ly->sources[i];
    std::vector<std::shared_ptr<const MappingSpace>> spaces;  // map(B, Z^(alpha)) through level 1
    for (const TowerStage& s : state.stages) {
      spaces.push_back(std::make_shared<const MappingSpace>(mapping_space(src, s.z, 1, state.options)));
    }
    const auto my = state.kind == TowerKind::stover ? state.ly->spaces[i]
                                                    : std::make_shared<const MappingSpace>(mapping_space(src, state.y, 1, state.options));
    const HomotopyClassTable cy = homotopy_classes(my->table);
    std::vector<LevelMap> f_at;
    std::vector<HomotopyClassTable> cz;
    for (int a = 0; a <= k; ++a) {
      f_at.push_back(push(*spaces[a], *my, state.stages[a].e));
      cz.push_back(homotopy_classes(spaces[a]->table));
    }

    RecoveryReport::Degree d;
    d.i = i;
    d.stage_classes = cz[k].count();
    d.target_classes = cy.count();
    std::vector<int> image(cz[k].count());
    for (int c = 0; c < cz[k].count(); ++c) image[c] = cy.class_of[f_at[k].at[0][cz[k].representative[c]]];
    d.injective = std::set<int>(image.begin(), image.end()).size() == image.size();
    d.surjective = true;
    const bool explicit_lift = k >= 1 && (state.kind == TowerKind::stover || i == 0);
    for (int c = 0; c < cy.count(); ++c) {
      const Index rep = cy.representative[c];
      std::optional<Index> lift;
      if (explicit_lift) {
        const Index l = spaces[k]->index_of(0, WitnessMaps{state, k - 1, i, *src}.lift(0, rep));
        if (f_at[k].at[0][l] == rep) lift = l;
      } else {
        for (Index e = 0; e < spaces[k]->table.size(0) && !lift; ++e) {
          if (cy.class_of[f_at[k].at[0][e]] == c) lift = e;
        }
      }
      if (lift) {
        d.lifts.push_back(*lift);
      } else {
        d.surjective = false;
      }
    }
    if (k >= 1) {
      const LevelMap inc = push(*spaces[k - 1], *spaces[k], state.stages[k].pushout->i());
      std::vector<int> hit(cz[k].count(), 0);
      bool injective = true;
      std::vector<int> seen(cz[k].count(), -1);
      for (int c = 0; c < cz[k - 1].count(); ++c) {
        const int t = cz[k].class_of[inc.at[0][cz[k - 1].representative[c]]];
        if (seen[t] >= 0) injective = false;
        seen[t] = c;
        hit[t] = 1;
      }
      d.stabilized = injective && std::all_of(hit.begin(), hit.end(), [](int h) { return h; });
    }
    report.degrees.push_back(std::move(d));

    if (state.kind == TowerKind::dold_lashof && i > 0) continue;
    const TruncatedObject ty = rho(my->table);
    for (int a = 0; a < k; ++a) {
      const WitnessMaps maps{state, a, i, *src};
      const SimplicialMap& inc = state.stages[a + 1].pushout->i();
      std::map<int, std::vector<int>> by_image;
      for (int c = 0; c < cz[a].count(); ++c) by_image[cy.class_of[f_at[a].at[0][cz[a].representative[c]]]].push_back(c);
      for (const auto& [target, group] : by_image) {
        for (std::size_t j = 1; j < group.size(); ++j) {
          InjectivityWitness w;
          w.stage = a;
          w.degree = i;
          w.g = cz[a].representative[group[0]];
          w.g2 = cz[a].representative[group[j]];
          const auto steps = path(ty, f_at[a].at[0][w.g], f_at[a].at[0][w.g2]);
          const SimplicialMap g = spaces[a]->as_map(0, w.g), g2 = spaces[a]->as_map(0, w.g2);
          // Walk from i(g): connector, lifted sigmas, reversed connector of g2.
          std::vector<std::pair<SimplicialMap, bool>> chain{{maps.connector(g), true}};
          for (const auto& [s, forward] : steps) {
            w.sigma.push_back(s);
            chain.emplace_back(maps.lift(1, s), forward);
          }
          chain.emplace_back(maps.connector(g2), false);
          SimplicialMap here = compose(inc, g);
          w.verified = f_at[a].at[0][w.g] == f_at[a].at[0][w.g2] || !steps.empty();
          for (const auto& [tau, forward] : chain) {
            const SimplicialMap d0 = compose(tau, src->coface(1, 0)), d1 = compose(tau, src->coface(1, 1));
            if ((forward ? d1 : d0) != here) w.verified = false;
            here = forward ? d0 : d1;
            w.chain.push_back(spaces[a + 1]->index_of(1, tau));
          }
          if (here != compose(inc, g2)) w.verified = false;
          report.witnesses.push_back(std::move(w));
        }
      }
    }
  }
  return report;
}

}  // namespace mapalg
