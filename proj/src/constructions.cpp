#include "mapalg/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "mapalg/errors.hpp"

namespace mapalg {

namespace {

struct DeltaData {
  SetPtr set;
  std::vector<CellId> by_vertices;      // indexed by vertex bitset
  std::vector<std::uint32_t> vertices;  // indexed by cell
};

std::shared_ptr<const DeltaData> build_delta(int n) {
  auto data = std::make_shared<DeltaData>();
  const std::uint32_t full = (std::uint32_t{1} << (n + 1)) - 1;
  data->by_vertices.assign(static_cast<std::size_t>(full) + 1, ~CellId{0});
  for (int k = 0; k <= n; ++k) {
    // Subsets of size k + 1 in lexicographic order of their sorted vertices.
    std::vector<int> pick(k + 1);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::uint32_t bits = 0;
      for (int v : pick) bits |= std::uint32_t{1} << v;
      data->by_vertices[bits] = static_cast<CellId>(data->vertices.size());
      data->vertices.push_back(bits);
      int t = k;
      while (t >= 0 && pick[t] == n - k + t) --t;
      if (t < 0) break;
      ++pick[t];
      for (int u = t + 1; u <= k; ++u) pick[u] = pick[u - 1] + 1;
    }
  }
  std::vector<Cell> cells;
  cells.reserve(data->vertices.size());
  for (std::uint32_t bits : data->vertices) {
    Cell cell;
    cell.dim = std::popcount(bits) - 1;
    if (cell.dim > 0) {
      for (int v = 0; v <= n; ++v) {
        if (!(bits >> v & 1u)) continue;
        cell.faces.push_back(nondegenerate(data->by_vertices[bits & ~(std::uint32_t{1} << v)], cell.dim - 1));
      }
    }
    cells.push_back(std::move(cell));
  }
  data->set = make_set(std::move(cells), CellId{0}, std::max(kDefaultDimCap, n));
  return data;
}

const DeltaData& delta_data(int n) {
  if (n < 0 || n > 20) throw StructuralError("standard simplex dimension out of range");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const DeltaData>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = build_delta(n);
  return *slot;
}

Simplex full_degeneracy(CellId c, int n) {
  return Simplex{c, static_cast<std::uint16_t>(n), (DegeneracyMask{1} << n) - 1};
}

struct DisjointUnion {
  SetPtr space;
  std::vector<std::vector<CellId>> offset;  // offset[input][cell]

  Simplex embed(int k, const Simplex& s) const { return Simplex{offset[k][s.cell], s.dim, s.degens}; }
};

DisjointUnion disjoint_union(const std::vector<SetPtr>& inputs, int basepoint_input, int cap) {
  struct Entry {
    int dim;
    int input;
    CellId cell;
  };
  std::vector<Entry> order;
  DisjointUnion out;
  out.offset.resize(inputs.size());
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    out.offset[k].resize(inputs[k]->size());
    for (CellId c = 0; c < inputs[k]->size(); ++c) {
      order.push_back({inputs[k]->cell(c).dim, static_cast<int>(k), c});
    }
  }
  std::stable_sort(order.begin(), order.end(), [](const Entry& a, const Entry& b) { return a.dim < b.dim; });
  for (std::size_t t = 0; t < order.size(); ++t) out.offset[order[t].input][order[t].cell] = static_cast<CellId>(t);
  std::vector<Cell> cells;
  cells.reserve(order.size());
  for (const Entry& e : order) {
    Cell cell = inputs[e.input]->cell(e.cell);
    for (Simplex& f : cell.faces) f.cell = out.offset[e.input][f.cell];
    cells.push_back(std::move(cell));
  }
  const CellId bp = out.offset[basepoint_input][inputs[basepoint_input]->basepoint()];
  out.space = make_set(std::move(cells), bp, cap);
  return out;
}

int max_cap(const std::vector<SetPtr>& inputs) {
  int cap = 0;
  for (const auto& x : inputs) cap = std::max(cap, x->dim_cap());
  return cap;
}

std::vector<std::vector<std::pair<int, CellId>>> tags_from_legs(const SetPtr& space,
                                                                 const std::vector<SimplicialMap>& legs) {
  std::vector<std::vector<std::pair<int, CellId>>> tags(space->size());
  for (std::size_t k = 0; k < legs.size(); ++k) {
    for (CellId c = 0; c < legs[k].image.size(); ++c) {
      const Simplex& s = legs[k].image[c];
      if (!s.degenerate()) tags[s.cell].emplace_back(static_cast<int>(k), c);
    }
  }
  return tags;
}

ProductQuotient collapse_product(ProductPresentation prod, const std::function<bool(const Simplex&, const Simplex&)>& collapse,
                                 int cap) {
  std::vector<CellId> sub;
  for (CellId c = 0; c < prod.space->size(); ++c) {
    if (collapse(prod.coords[c].first, prod.coords[c].second)) sub.push_back(c);
  }
  auto q = quotient(prod.space, sub);
  ProductQuotient out{std::move(prod), nullptr, {}, {}};
  out.space = q.space->dim_cap() == cap ? q.space : make_set(q.space->with_dim_cap(cap));
  out.projection = std::move(q.projection);
  out.projection.target = out.space;
  for (CellId r : q.representative) out.coords.push_back(out.product.coords[r]);
  return out;
}

}  // namespace

SetPtr point() {
  static const SetPtr pt = make_set(std::vector<Cell>{Cell{}}, CellId{0}, kDefaultDimCap);
  return pt;
}

SetPtr standard_simplex(int n) { return delta_data(n).set; }

SetPtr boundary(int n) {
  if (n < 1) throw StructuralError("boundary needs n >= 1");
  const SimplicialSet& d = *delta_data(n).set;
  std::vector<Cell> cells(d.cells().begin(), d.cells().end() - 1);
  return make_set(std::move(cells), CellId{0}, std::max(kDefaultDimCap, n));
}

SetPtr sphere(int n) {
  if (n < 0) throw StructuralError("sphere dimension must be nonnegative");
  std::vector<Cell> cells(2);
  if (n > 0) {
    cells[1].dim = n;
    cells[1].faces.assign(n + 1, full_degeneracy(0, n - 1));
  }
  return make_set(std::move(cells), CellId{0}, std::max(kDefaultDimCap, n));
}

CellId delta_cell(int n, std::uint32_t vertices) {
  const auto& d = delta_data(n);
  if (vertices == 0 || vertices >= d.by_vertices.size()) throw StructuralError("not a face of the simplex");
  return d.by_vertices[vertices];
}

std::uint32_t delta_vertices(int n, CellId c) { return delta_data(n).vertices.at(c); }

CellId delta_top(int n) { return static_cast<CellId>(delta_data(n).vertices.size() - 1); }

Simplex delta_simplex(int n, std::span<const int> theta) {
  std::uint32_t bits = 0;
  for (int v : theta) {
    if (v < 0 || v > n) throw StructuralError("vertex out of range");
    bits |= std::uint32_t{1} << v;
  }
  return Simplex{delta_cell(n, bits), static_cast<std::uint16_t>(theta.size() - 1), mask_of(theta)};
}

SimplicialMap delta_map(int k, int n, std::span<const int> theta) {
  SimplicialMap f{standard_simplex(k), standard_simplex(n), {}};
  for (CellId c = 0; c < f.source->size(); ++c) {
    const std::uint32_t bits = delta_vertices(k, c);
    std::vector<int> seq;
    for (int v = 0; v <= k; ++v) {
      if (bits >> v & 1u) seq.push_back(theta[v]);
    }
    f.image.push_back(delta_simplex(n, seq));
  }
  return f;
}

std::vector<int> delta_operator(int n, const Simplex& b) {
  const std::uint32_t bits = delta_vertices(n, b.cell);
  std::vector<int> verts;
  for (int v = 0; v <= n; ++v) {
    if (bits >> v & 1u) verts.push_back(v);
  }
  std::vector<int> seq;
  for (int s : surjection_of(b.degens, b.dim)) seq.push_back(verts[s]);
  return seq;
}

SimplicialMap delta_coface(int n, int i) {
  std::vector<int> theta;
  for (int v = 0; v <= n; ++v) {
    if (v != i) theta.push_back(v);
  }
  return delta_map(n - 1, n, theta);
}

SimplicialMap delta_codegeneracy(int n, int j) {
  std::vector<int> theta;
  for (int v = 0; v <= n + 1; ++v) theta.push_back(v <= j ? v : v - 1);
  return delta_map(n + 1, n, theta);
}

Simplex ProductPresentation::pair(const Simplex& a, const Simplex& b) const {
  if (a.dim != b.dim) throw StructuralError("product coordinates of different dimension");
  const int n = a.dim;
  const DegeneracyMask common = a.degens & b.degens;
  const auto m = static_cast<std::uint16_t>(n - std::popcount(common));
  const Simplex ra{a.cell, m, remove_repeats(a.degens, n, common)};
  const Simplex rb{b.cell, m, remove_repeats(b.degens, n, common)};
  const auto it = index.find({ra, rb});
  if (it == index.end()) throw StructuralError("simplex pair not present in product");
  return Simplex{it->second, static_cast<std::uint16_t>(n), common};
}

ProductPresentation product(SetPtr x, SetPtr y, int dim_cap) {
  const int cap = dim_cap < 0 ? std::max(x->dim_cap(), y->dim_cap()) : dim_cap;
  ProductPresentation out;
  out.left = x;
  out.right = y;
  std::vector<Cell> cells;
  const int top = x->dimension() + y->dimension();
  for (int n = 0; n <= top; ++n) {
    for (CellId xc = 0; xc < x->size(); ++xc) {
      const int p = x->cell(xc).dim;
      if (p > n) break;
      for (CellId yc = 0; yc < y->size(); ++yc) {
        const int q = y->cell(yc).dim;
        if (q > n) break;
        if (p + q < n) continue;
        for (DegeneracyMask mx : masks_with_popcount(n, n - p)) {
          for (DegeneracyMask my : masks_with_popcount(n, n - q)) {
            if (mx & my) continue;
            if (n > cap) {
              throw CapError("product would create a " + std::to_string(n) + "-cell above dim_cap " +
                             std::to_string(cap));
            }
            const Simplex a{xc, static_cast<std::uint16_t>(n), mx};
            const Simplex b{yc, static_cast<std::uint16_t>(n), my};
            Cell cell;
            cell.dim = n;
            for (int i = 0; n > 0 && i <= n; ++i) cell.faces.push_back(out.pair(x->face(a, i), y->face(b, i)));
            const auto id = static_cast<CellId>(cells.size());
            out.index.emplace(std::make_pair(a, b), id);
            out.coords.emplace_back(a, b);
            cells.push_back(std::move(cell));
          }
        }
      }
    }
  }
  const CellId bp = out.index.at({nondegenerate(x->basepoint(), 0), nondegenerate(y->basepoint(), 0)});
  out.space = make_set(std::move(cells), bp, cap);
  return out;
}

QuotientResult quotient_by_relations(SetPtr w, std::vector<std::pair<Simplex, Simplex>> pairs, int dim_cap) {
  const SimplicialSet& x = *w;
  const int cap = dim_cap < 0 ? x.dim_cap() : dim_cap;
  // Close the relation under faces so each dimension sees settled faces.
  std::set<std::pair<Simplex, Simplex>> closed;
  std::vector<std::pair<Simplex, Simplex>> work;
  auto push = [&](Simplex a, Simplex b) {
    if (a.dim != b.dim) throw StructuralError("identified simplices differ in dimension");
    if (a == b) return;
    if (b < a) std::swap(a, b);
    if (closed.insert({a, b}).second) work.emplace_back(a, b);
  };
  for (const auto& [a, b] : pairs) push(a, b);
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    for (int i = 0; a.dim > 0 && i <= a.dim; ++i) push(x.face(a, i), x.face(b, i));
  }
  std::vector<std::vector<std::pair<Simplex, Simplex>>> by_dim(x.dimension() + 1);
  for (const auto& p : closed) by_dim[p.first.dim].push_back(p);

  std::vector<Simplex> proj(x.size());
  std::vector<Cell> cells;
  std::vector<CellId> representative;
  for (int n = 0; n <= x.dimension(); ++n) {
    auto [lo, hi] = x.cells_of_dim(n);
    std::vector<CellId> parent(hi - lo);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](CellId v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    auto settled = [&](const Simplex& s) { return apply_surjection(proj[s.cell], s.degens, n); };
    for (const auto& [a, b] : by_dim[n]) {
      if (a.degenerate() || b.degenerate()) continue;
      CellId ra = find(a.cell - lo), rb = find(b.cell - lo);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::vector<std::optional<Simplex>> known(hi - lo);
    for (const auto& [a, b] : by_dim[n]) {
      // Two degenerate simplices with identified faces already agree.
      if (a.degenerate() == b.degenerate()) continue;
      const Simplex& free_side = a.degenerate() ? b : a;
      const Simplex& fixed_side = a.degenerate() ? a : b;
      auto& slot = known[find(free_side.cell - lo)];
      if (!slot) slot = settled(fixed_side);
    }
    std::vector<CellId> fresh(hi - lo, ~CellId{0});
    for (CellId c = lo; c < hi; ++c) {
      const CellId r = find(c - lo);
      if (known[r]) {
        proj[c] = *known[r];
        continue;
      }
      if (fresh[r] == ~CellId{0}) {
        fresh[r] = static_cast<CellId>(cells.size());
        Cell cell;
        cell.dim = n;
        for (const Simplex& f : x.cell(c).faces) cell.faces.push_back(apply_surjection(proj[f.cell], f.degens, n - 1));
        cells.push_back(std::move(cell));
        representative.push_back(c);
      }
      proj[c] = nondegenerate(fresh[r], n);
    }
  }
  QuotientResult out;
  out.space = make_set(std::move(cells), proj[x.basepoint()].cell, cap);
  out.projection = SimplicialMap{w, out.space, std::move(proj)};
  out.representative = std::move(representative);
  return out;
}

QuotientResult quotient(SetPtr x, std::span<const CellId> sub) {
  std::vector<bool> in(x->size(), false);
  for (CellId c : sub) {
    if (c >= x->size()) throw StructuralError("subcomplex refers to a missing cell");
    in[c] = true;
  }
  if (!in[x->basepoint()]) throw StructuralError("subcomplex must contain the basepoint");
  std::vector<std::pair<Simplex, Simplex>> pairs;
  for (CellId c : sub) {
    for (const Simplex& f : x->cell(c).faces) {
      if (!in[f.cell]) throw StructuralError("subcomplex is not closed under faces");
    }
    const int n = x->cell(c).dim;
    pairs.emplace_back(nondegenerate(c, n), full_degeneracy(x->basepoint(), n));
  }
  return quotient_by_relations(x, std::move(pairs));
}

ColimitPresentation colimit(const std::vector<SetPtr>& inputs, const std::vector<Gluing>& glue,
                            int basepoint_input, int dim_cap) {
  if (inputs.empty()) {
    ColimitPresentation out;
    out.space = point();
    out.tags.resize(1);
    return out;
  }
  const int cap = dim_cap < 0 ? max_cap(inputs) : dim_cap;
  const DisjointUnion u = disjoint_union(inputs, basepoint_input, cap);
  std::vector<std::pair<Simplex, Simplex>> pairs;
  pairs.reserve(glue.size());
  for (const Gluing& g : glue) pairs.emplace_back(u.embed(g.a, g.x), u.embed(g.b, g.y));
  auto q = quotient_by_relations(u.space, std::move(pairs), cap);
  ColimitPresentation out;
  out.space = q.space;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    SimplicialMap leg{inputs[k], q.space, {}};
    leg.image.reserve(inputs[k]->size());
    for (CellId c = 0; c < inputs[k]->size(); ++c) leg.image.push_back(q.projection.image[u.offset[k][c]]);
    out.legs.push_back(std::move(leg));
  }
  out.tags = tags_from_legs(out.space, out.legs);
  return out;
}

SimplicialMap map_from_colimit(const ColimitPresentation& c, SetPtr target, const std::vector<SimplicialMap>& parts) {
  if (parts.size() != c.legs.size()) throw StructuralError("one map per colimit input expected");
  SimplicialMap out{c.space, target, {}};
  out.image.reserve(c.tags.size());
  for (CellId r = 0; r < c.tags.size(); ++r) {
    if (c.tags[r].empty()) {
      out.image.push_back(nondegenerate(target->basepoint(), 0));
      continue;
    }
    const auto [k, cell] = c.tags[r].front();
    out.image.push_back(parts[k].image[cell]);
  }
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const SimplicialMap& leg = c.legs[k];
    for (CellId cell = 0; cell < leg.image.size(); ++cell) {
      if (out.apply(leg.image[cell]) != parts[k].image[cell]) {
        throw StructuralError("colimit inputs disagree on cell " + std::to_string(leg.image[cell].cell));
      }
    }
  }
  return out;
}

ColimitPresentation wedge(const std::vector<SetPtr>& inputs) {
  std::vector<Gluing> glue;
  for (std::size_t k = 1; k < inputs.size(); ++k) {
    glue.push_back({0, nondegenerate(inputs[0]->basepoint(), 0), static_cast<int>(k),
                    nondegenerate(inputs[k]->basepoint(), 0)});
  }
  return colimit(inputs, glue);
}

ColimitPresentation pushout(const SimplicialMap& f, const SimplicialMap& g) {
  if (f.source.get() != g.source.get() && f.source->size() != g.source->size()) {
    throw StructuralError("pushout legs have different sources");
  }
  std::vector<Gluing> glue;
  for (CellId c = 0; c < f.source->size(); ++c) glue.push_back({0, f.image[c], 1, g.image[c]});
  auto out = colimit({f.target, g.target}, glue);
  out.left_injective = injective_on_cells(f);
  out.right_injective = injective_on_cells(g);
  return out;
}

ProductQuotient half_smash_right(SetPtr x, SetPtr k, int dim_cap) {
  const int cap = dim_cap < 0 ? std::max(x->dim_cap(), k->dim_cap()) : dim_cap;
  const CellId bx = x->basepoint();
  return collapse_product(product(x, k, cap), [bx](const Simplex& a, const Simplex&) { return a.cell == bx; }, cap);
}

ProductQuotient smash_left(SetPtr a, SetPtr k, int dim_cap) {
  const int cap = dim_cap < 0 ? std::max(a->dim_cap(), k->dim_cap()) : dim_cap;
  const CellId ba = a->basepoint(), bk = k->basepoint();
  return collapse_product(
      product(a, k, cap), [ba, bk](const Simplex& s, const Simplex& t) { return s.cell == ba || t.cell == bk; }, cap);
}

ProductQuotient suspension_presentation(SetPtr a, int i, int dim_cap) {
  const int cap = dim_cap < 0 ? std::max(a->dim_cap(), standard_simplex(i)->dim_cap()) : dim_cap;
  const CellId ba = a->basepoint();
  const CellId top = delta_top(i);
  return collapse_product(
      product(a, standard_simplex(i), cap),
      [ba, top](const Simplex& s, const Simplex& t) { return s.cell == ba || t.cell != top; }, cap);
}

SetPtr suspension(SetPtr a, int i) {
  if (i == 0) return a;
  return suspension_presentation(std::move(a), i).space;
}

SimplicialMap product_quotient_map(const ProductQuotient& src, const ProductQuotient& dst,
                                   const SimplicialMap* f, const SimplicialMap* g) {
  SimplicialMap out{src.space, dst.space, {}};
  out.image.reserve(src.space->size());
  for (const auto& [a, b] : src.coords) {
    out.image.push_back(dst.pair(f ? f->apply(a) : a, g ? g->apply(b) : b));
  }
  return out;
}

std::optional<SimplicialMap> find_isomorphism(SetPtr x, SetPtr y) {
  if (x->size() != y->size() || x->dimension() != y->dimension()) return std::nullopt;
  for (int n = 0; n <= x->dimension(); ++n) {
    if (x->count(n) != y->count(n)) return std::nullopt;
  }
  SimplicialMap f{x, y, std::vector<Simplex>(x->size())};
  std::vector<bool> used(y->size(), false);
  std::function<bool(CellId)> extend = [&](CellId c) -> bool {
    if (c == x->size()) return true;
    const int n = x->cell(c).dim;
    auto [lo, hi] = y->cells_of_dim(n);
    for (CellId t = lo; t < hi; ++t) {
      if (used[t]) continue;
      if ((c == x->basepoint()) != (t == y->basepoint())) continue;
      const Simplex cand = nondegenerate(t, n);
      bool ok = true;
      for (int i = 0; ok && n > 0 && i <= n; ++i) ok = f.apply(x->cell(c).faces[i]) == y->face(cand, i);
      if (!ok) continue;
      used[t] = true;
      f.image[c] = cand;
      if (extend(c + 1)) return true;
      used[t] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return f;
}

bool isomorphic(SetPtr x, SetPtr y) { return find_isomorphism(std::move(x), std::move(y)).has_value(); }

}  // namespace mapalg
