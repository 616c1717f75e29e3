#include "mapalg/monad.hpp"

#include <algorithm>
#include <set>

#include "mapalg/errors.hpp"

namespace mapalg {

ProductQuotient left_adjoint_F(SetPtr a, SetPtr k, int dim_cap) { return smash_left(std::move(a), std::move(k), dim_cap); }

namespace {

// The map A ⋊ Delta[n] -> A∧K, (a, b) -> (a, sigma ∘ b), as an assignment into `ez`.
Assignment adjoint_source(const ProductQuotient& src, const ProductQuotient& fk, const Simplex& sigma,
                          const SimplicialMap* g, const EzTable& ez) {
  const SimplicialSet& k = *fk.product.right;
  Assignment out(src.space->size());
  for (CellId c = 0; c < out.size(); ++c) {
    const auto& [a, b] = src.coords[c];
    Simplex s = fk.pair(a, k.apply_operator(sigma, delta_operator(sigma.dim, b)));
    if (g) s = g->apply(s);
    out[c] = ez.index_of(s);
  }
  return out;
}

std::string at(int n, Index e) { return "level " + std::to_string(n) + " element " + std::to_string(e); }

}  // namespace

Index unit_element(const MappingSpace& space, const ProductQuotient& fk, const Simplex& sigma) {
  return space.find(sigma.dim, adjoint_source(space.source->level(sigma.dim), fk, sigma, nullptr, *space.ez_target));
}

SimplicialMap unit_map(const ProductQuotient& src, const ProductQuotient& fk, const Simplex& sigma) {
  const SimplicialSet& k = *fk.product.right;
  SimplicialMap out{src.space, fk.space, {}};
  for (const auto& [a, b] : src.coords) out.image.push_back(fk.pair(a, k.apply_operator(sigma, delta_operator(sigma.dim, b))));
  return out;
}

Assignment flat(const SimplicialMap& g, const ProductQuotient& fk, const MappingSpace& mx) {
  const SimplicialSet& k = *fk.product.right;
  Assignment out(k.size());
  for (CellId c = 0; c < k.size(); ++c) {
    const int d = k.cell(c).dim;
    out[c] = mx.find(d, adjoint_source(mx.source->level(d), fk, nondegenerate(c, d), &g, *mx.ez_target));
  }
  return out;
}

SimplicialMap sharp(const Assignment& h, const ProductQuotient& fk, const MappingSpace& mx) {
  SimplicialMap out{fk.space, mx.ez_target->set, {}};
  for (const auto& [a, k] : fk.coords) {
    // k = s_I k0 with k0 a cell of dimension d0; h(k) is h(k0) precomposed
    // with A ⋊ s_I, so evaluate h(k0) on (a, s_I of the top simplex).
    const int d0 = k.cell_dim();
    const Simplex b{delta_top(d0), a.dim, k.degens};
    const Index v = mx.value(d0, h[k.cell], mx.source->level(d0).pair(a, b));
    out.image.push_back(mx.ez_target->simplices[a.dim][v]);
  }
  return out;
}

Assignment cell_elements(const Realization& r) {
  Assignment out;
  for (CellId c = 0; c < r.set->size(); ++c) out.push_back(r.index.at(nondegenerate(c, r.set->cell(c).dim)));
  return out;
}

SimplicialMap realize_map(const Realization& from, const Realization& to, const LevelMap& f) {
  SimplicialMap out{from.set, to.set, {}};
  const Assignment elems = cell_elements(from);
  for (CellId c = 0; c < from.set->size(); ++c) {
    const int n = from.set->cell(c).dim;
    out.image.push_back(to.simplex[n][f.at[n][elems[c]]]);
  }
  return out;
}

bool AdjunctionReport::pass() const {
  return flat_lands && bijection && sharp_flat && flat_sharp && counit_factor && unit_factor && triangle_f && triangle_m;
}

AdjunctionReport adjunction_check(SetPtr a, SetPtr k, SetPtr x, const EnumerationOptions& options) {
  const int dk = k->dimension();
  auto src = std::make_shared<const SourceFamily>(a, dk);
  const ProductQuotient fk = left_adjoint_F(a, k);
  const MappingSpace mx = mapping_space(src, x, dk, options);
  const std::vector<SimplicialMap> left = enumerate_pointed_maps(fk.space, x, options);
  const std::vector<Assignment> right = enumerate_maps(*k, mx.table, options);
  AdjunctionReport r;
  r.left = left.size();
  r.right = right.size();

  std::vector<Assignment> flats;
  r.flat_lands = true;
  const std::set<Assignment> right_set(right.begin(), right.end());
  for (const SimplicialMap& g : left) {
    try {
      flats.push_back(flat(g, fk, mx));
    } catch (const StructuralError&) {
      r.flat_lands = false;
      return r;
    }
    if (!right_set.count(flats.back())) r.flat_lands = false;
  }
  const std::set<Assignment> distinct(flats.begin(), flats.end());
  r.bijection = r.flat_lands && distinct.size() == flats.size() && left.size() == right.size();

  r.sharp_flat = true;
  for (std::size_t j = 0; j < left.size(); ++j) r.sharp_flat &= sharp(flats[j], fk, mx) == left[j];
  r.flat_sharp = true;
  for (const Assignment& h : right) r.flat_sharp &= flat(sharp(h, fk, mx), fk, mx) == h;

  // eps_X : A∧M -> X with M the realization of M_A X.
  const Realization m = realize(mx.table);
  const ProductQuotient fm = left_adjoint_F(a, m.set);
  const SimplicialMap eps_x = sharp(cell_elements(m), fm, mx);
  auto to_m = [&](const Assignment& h, const Realization& target) {
    SimplicialMap out{k, target.set, {}};
    for (CellId c = 0; c < k->size(); ++c) out.image.push_back(target.simplex[k->cell(c).dim][h[c]]);
    return out;
  };
  r.counit_factor = true;
  for (std::size_t j = 0; j < left.size(); ++j) {
    const SimplicialMap g_hat = to_m(flats[j], m);
    r.counit_factor &= compose(eps_x, product_quotient_map(fk, fm, nullptr, &g_hat)) == left[j];
  }

  // eta_K : K -> map(A, A∧K).
  const MappingSpace mfk = mapping_space(src, fk.space, dk, options);
  Assignment eta(k->size());
  for (CellId c = 0; c < k->size(); ++c) eta[c] = unit_element(mfk, fk, nondegenerate(c, k->cell(c).dim));
  r.unit_factor = true;
  for (const Assignment& h : right) {
    const LevelMap pushed = postcompose(mfk, mx, tabulate_map(*mfk.ez_target, *mx.ez_target, sharp(h, fk, mx)));
    for (CellId c = 0; c < k->size(); ++c) r.unit_factor &= pushed.at[k->cell(c).dim][eta[c]] == h[c];
  }

  // eps_{F K} ∘ F eta_K = id.
  const Realization mk = realize(mfk.table);
  const ProductQuotient fmk = left_adjoint_F(a, mk.set);
  const SimplicialMap eps_fk = sharp(cell_elements(mk), fmk, mfk);
  const SimplicialMap eta_hat = to_m(eta, mk);
  r.triangle_f = compose(eps_fk, product_quotient_map(fk, fmk, nullptr, &eta_hat)) == identity_map(fk.space);

  // M eps_X ∘ eta_{M X} = id.
  const MappingSpace mfm = mapping_space(src, fm.space, dk, options);
  const LevelMap m_eps = postcompose(mfm, mx, tabulate_map(*mfm.ez_target, *mx.ez_target, eps_x));
  r.triangle_m = true;
  for (int n = 0; n <= dk; ++n) {
    for (Index e = 0; e < mx.table.size(n); ++e) r.triangle_m &= m_eps.at[n][unit_element(mfm, fm, m.simplex[n][e])] == e;
  }
  return r;
}

AlgebraStructure realizable_algebra_structure(SetPtr a, SetPtr y, int m, const EnumerationOptions& options,
                                              bool with_square) {
  AlgebraStructure s;
  s.a = a;
  s.y = y;
  s.m = m;
  auto src = std::make_shared<const SourceFamily>(a, m);
  s.x = std::make_shared<const MappingSpace>(mapping_space(src, y, m, options));
  s.k = realize(s.x->table);
  s.fk = left_adjoint_F(a, s.k.set);
  s.t = std::make_shared<const MappingSpace>(mapping_space(src, s.fk.space, m, options));
  for (int n = 0; n <= m; ++n) {
    auto& row = s.eta.at.emplace_back();
    for (Index e = 0; e < s.x->table.size(n); ++e) row.push_back(unit_element(*s.t, s.fk, s.k.simplex[n][e]));
  }
  s.ev = sharp(cell_elements(s.k), s.fk, *s.x);
  s.eps = postcompose(*s.t, *s.x, tabulate_map(*s.t->ez_target, *s.x->ez_target, s.ev));
  if (!with_square) return s;
  s.kk = realize(s.t->table);
  s.fkk = left_adjoint_F(a, s.kk.set);
  s.tt = std::make_shared<const MappingSpace>(mapping_space(src, s.fkk.space, m, options));
  const SimplicialMap ev_t = sharp(cell_elements(s.kk), s.fkk, *s.t);
  s.mu = postcompose(*s.tt, *s.t, tabulate_map(*s.tt->ez_target, *s.t->ez_target, ev_t));
  return s;
}

std::vector<AlgebraCheck> check_algebra(const AlgebraStructure& s, const LevelMap& eps) {
  std::vector<AlgebraCheck> out;
  AlgebraCheck unit{"unit", true, {}};
  for (int n = 0; n <= s.m && unit.pass; ++n) {
    for (Index e = 0; e < s.x->table.size(n); ++e) {
      if (eps.at[n][s.eta.at[n][e]] != e) {
        unit.pass = false;
        unit.witness = at(n, e);
        break;
      }
    }
  }
  out.push_back(unit);

  AlgebraCheck simplicial{"eps_simplicial", true, {}};
  const auto problems = check_level_map(s.t->table, s.x->table, eps);
  if (!problems.empty()) {
    simplicial.pass = false;
    simplicial.witness = problems.front();
  }
  out.push_back(simplicial);

  AlgebraCheck square{"square", true, {}};
  if (!s.tt) {
    square.pass = false;
    square.witness = "T_A T_A X was not computed";
  } else if (!simplicial.pass) {
    square.pass = false;
    square.witness = "eps is not simplicial, T_A(eps) undefined";
  } else {
    const SimplicialMap eps_hat = realize_map(s.kk, s.k, eps);
    const SimplicialMap t_eps_map = product_quotient_map(s.fkk, s.fk, nullptr, &eps_hat);
    const LevelMap t_eps = postcompose(*s.tt, *s.t, tabulate_map(*s.tt->ez_target, *s.t->ez_target, t_eps_map));
    for (int n = 0; n <= s.m && square.pass; ++n) {
      for (Index e = 0; e < s.tt->table.size(n); ++e) {
        if (eps.at[n][t_eps.at[n][e]] != eps.at[n][s.mu.at[n][e]]) {
          square.pass = false;
          square.witness = at(n, e);
          break;
        }
      }
    }
  }
  out.push_back(square);
  return out;
}

}  // namespace mapalg
