#include "mapalg/simplex_table.hpp"

#include <algorithm>
#include <sstream>

#include "mapalg/errors.hpp"

namespace mapalg {

SimplexTable::SimplexTable(std::vector<Index> sizes, std::vector<std::vector<std::vector<Index>>> faces,
                           std::vector<std::vector<std::vector<Index>>> degens, std::vector<Index> basepoint)
    : sizes_(std::move(sizes)), faces_(std::move(faces)), degens_(std::move(degens)), basepoint_(std::move(basepoint)) {
  const int top = this->top();
  if (top < 0) throw StructuralError("table needs level 0");
  faces_.resize(top + 1);
  degens_.resize(top + 1);
  if (basepoint_.size() != sizes_.size()) throw StructuralError("table needs a basepoint on every level");
  buckets_.resize(top + 1);
  for (int n = 1; n <= top; ++n) {
    if (static_cast<int>(faces_[n].size()) != n + 1) throw StructuralError("face table has wrong arity");
    std::vector<Index> key(n + 1);
    for (Index k = 0; k < sizes_[n]; ++k) {
      for (int i = 0; i <= n; ++i) key[i] = faces_[n][i][k];
      buckets_[n][key].push_back(k);
    }
  }
}

Index SimplexTable::degenerate(int n0, Index k, DegeneracyMask mask, int n) const {
  int level = n0;
  for (int t = 0; t < n; ++t) {
    if (mask >> t & 1u) {
      if (level >= top()) throw CapError("degeneracy leaves the tabulated levels");
      k = degens_[level][t][k];
      ++level;
    }
  }
  return k;
}

std::span<const Index> SimplexTable::with_faces(int n, const std::vector<Index>& faces) const {
  const auto it = buckets_[n].find(faces);
  if (it == buckets_[n].end()) return {};
  return it->second;
}

SimplexTable SimplexTable::truncated(int n) const {
  if (n > top()) throw CapError("cannot truncate above the top level");
  std::vector<Index> sizes(sizes_.begin(), sizes_.begin() + n + 1);
  auto faces = std::vector<std::vector<std::vector<Index>>>(faces_.begin(), faces_.begin() + n + 1);
  auto degens = std::vector<std::vector<std::vector<Index>>>(degens_.begin(), degens_.begin() + n + 1);
  degens[n].clear();
  std::vector<Index> bp(basepoint_.begin(), basepoint_.begin() + n + 1);
  return SimplexTable(std::move(sizes), std::move(faces), std::move(degens), std::move(bp));
}

std::vector<std::string> check_identities(const SimplexTable& t) {
  std::vector<std::string> report;
  auto fail = [&](int n, Index k, const std::string& what) {
    std::ostringstream os;
    os << what << " fails on element " << k << " of level " << n;
    report.push_back(os.str());
  };
  for (int n = 0; n <= t.top(); ++n) {
    for (Index k = 0; k < t.size(n); ++k) {
      for (int j = 1; n >= 2 && j <= n; ++j) {
        for (int i = 0; i < j; ++i) {
          if (t.face(n - 1, i, t.face(n, j, k)) != t.face(n - 1, j - 1, t.face(n, i, k))) {
            fail(n, k, "d_" + std::to_string(i) + " d_" + std::to_string(j) + " = d_" + std::to_string(j - 1) +
                           " d_" + std::to_string(i));
          }
        }
      }
      if (n + 1 > t.top()) continue;
      for (int j = 0; j <= n; ++j) {
        const Index s = t.degeneracy(n, j, k);
        for (int i = 0; i <= n + 1; ++i) {
          const Index d = t.face(n + 1, i, s);
          Index expect;
          if (i == j || i == j + 1) {
            expect = k;
          } else if (i < j) {
            expect = t.degeneracy(n - 1, j - 1, t.face(n, i, k));
          } else {
            expect = t.degeneracy(n - 1, j, t.face(n, i - 1, k));
          }
          if (d != expect) fail(n, k, "d_" + std::to_string(i) + " s_" + std::to_string(j));
        }
        if (n + 2 > t.top()) continue;
        for (int i = 0; i <= j; ++i) {
          if (t.degeneracy(n + 1, i, s) != t.degeneracy(n + 1, j + 1, t.degeneracy(n, i, k))) {
            fail(n, k, "s_" + std::to_string(i) + " s_" + std::to_string(j) + " = s_" + std::to_string(j + 1) +
                           " s_" + std::to_string(i));
          }
        }
      }
    }
  }
  for (int n = 1; n <= t.top(); ++n) {
    for (int i = 0; i <= n; ++i) {
      if (t.face(n, i, t.basepoint(n)) != t.basepoint(n - 1)) fail(n, t.basepoint(n), "basepoint face");
    }
  }
  return report;
}

std::vector<std::string> check_level_map(const SimplexTable& from, const SimplexTable& to, const LevelMap& f) {
  std::vector<std::string> report;
  const int top = std::min({from.top(), to.top(), static_cast<int>(f.at.size()) - 1});
  for (int n = 0; n <= top; ++n) {
    if (f.at[n][from.basepoint(n)] != to.basepoint(n)) {
      report.push_back("basepoint not preserved at level " + std::to_string(n));
    }
    for (Index k = 0; k < from.size(n); ++k) {
      for (int i = 0; n >= 1 && i <= n; ++i) {
        if (f.at[n - 1][from.face(n, i, k)] != to.face(n, i, f.at[n][k])) {
          report.push_back("d_" + std::to_string(i) + " not preserved on element " + std::to_string(k) +
                           " of level " + std::to_string(n));
        }
      }
      for (int j = 0; n < top && j <= n; ++j) {
        if (f.at[n + 1][from.degeneracy(n, j, k)] != to.degeneracy(n, j, f.at[n][k])) {
          report.push_back("s_" + std::to_string(j) + " not preserved on element " + std::to_string(k) +
                           " of level " + std::to_string(n));
        }
      }
    }
  }
  return report;
}

LevelMap identity_level_map(const SimplexTable& t) {
  LevelMap f;
  for (int n = 0; n <= t.top(); ++n) {
    f.at.emplace_back(t.size(n));
    for (Index k = 0; k < t.size(n); ++k) f.at[n][k] = k;
  }
  return f;
}

LevelMap compose(const LevelMap& g, const LevelMap& f) {
  LevelMap h;
  const std::size_t levels = std::min(f.at.size(), g.at.size());
  for (std::size_t n = 0; n < levels; ++n) {
    h.at.emplace_back(f.at[n].size());
    for (std::size_t k = 0; k < f.at[n].size(); ++k) h.at[n][k] = g.at[n][f.at[n][k]];
  }
  return h;
}

Index EzTable::index_of(const Simplex& s) const {
  const auto it = index.find(s);
  if (it == index.end()) throw CapError("simplex outside the tabulated levels");
  return it->second;
}

EzTable tabulate(SetPtr y, int top) {
  EzTable out;
  out.set = y;
  for (int n = 0; n <= top; ++n) {
    out.simplices.push_back(all_simplices(*y, n));
    for (Index k = 0; k < out.simplices[n].size(); ++k) out.index.emplace(out.simplices[n][k], k);
  }
  std::vector<Index> sizes;
  std::vector<std::vector<std::vector<Index>>> faces(top + 1), degens(top + 1);
  std::vector<Index> bp;
  for (int n = 0; n <= top; ++n) {
    const auto& level = out.simplices[n];
    sizes.push_back(static_cast<Index>(level.size()));
    bp.push_back(out.index.at(Simplex{y->basepoint(), static_cast<std::uint16_t>(n), (DegeneracyMask{1} << n) - 1}));
    if (n >= 1) {
      faces[n].assign(n + 1, std::vector<Index>(level.size()));
      for (int i = 0; i <= n; ++i) {
        for (Index k = 0; k < level.size(); ++k) faces[n][i][k] = out.index.at(y->face(level[k], i));
      }
    }
    if (n < top) {
      degens[n].assign(n + 1, std::vector<Index>(level.size()));
      for (int j = 0; j <= n; ++j) {
        for (Index k = 0; k < level.size(); ++k) degens[n][j][k] = out.index.at(degeneracy(level[k], j));
      }
    }
  }
  out.table = SimplexTable(std::move(sizes), std::move(faces), std::move(degens), std::move(bp));
  return out;
}

LevelMap tabulate_map(const EzTable& from, const EzTable& to, const SimplicialMap& f) {
  LevelMap out;
  const int top = std::min(from.table.top(), to.table.top());
  for (int n = 0; n <= top; ++n) {
    out.at.emplace_back();
    for (const Simplex& s : from.simplices[n]) out.at[n].push_back(to.index_of(f.apply(s)));
  }
  return out;
}

Realization realize(const SimplexTable& t) {
  Realization out;
  out.simplex.resize(t.top() + 1);
  std::vector<Cell> cells;
  for (int n = 0; n <= t.top(); ++n) {
    // Mark the degenerate elements with one way of reaching them.
    std::vector<std::pair<int, Index>> source(t.size(n), {-1, 0});
    for (int j = 0; n >= 1 && j < n; ++j) {
      for (Index k = 0; k < t.size(n - 1); ++k) {
        auto& slot = source[t.degeneracy(n - 1, j, k)];
        if (slot.first < 0) slot = {j, k};
      }
    }
    out.simplex[n].resize(t.size(n));
    for (Index k = 0; k < t.size(n); ++k) {
      if (source[k].first >= 0) {
        out.simplex[n][k] = degeneracy(out.simplex[n - 1][source[k].second], source[k].first);
        continue;
      }
      Cell cell;
      cell.dim = n;
      for (int i = 0; n >= 1 && i <= n; ++i) cell.faces.push_back(out.simplex[n - 1][t.face(n, i, k)]);
      out.simplex[n][k] = nondegenerate(static_cast<CellId>(cells.size()), n);
      cells.push_back(std::move(cell));
    }
  }
  const CellId bp = out.simplex[0][t.basepoint(0)].cell;
  out.set = make_set(std::move(cells), bp, std::max(kDefaultDimCap, t.top()));
  for (int n = 0; n <= t.top(); ++n) {
    for (Index k = 0; k < t.size(n); ++k) out.index.emplace(out.simplex[n][k], k);
  }
  return out;
}

SimplexTable product_table(const SimplexTable& left, const SimplexTable& right) {
  const int top = std::min(left.top(), right.top());
  std::vector<Index> sizes, bp;
  std::vector<std::vector<std::vector<Index>>> faces(top + 1), degens(top + 1);
  for (int n = 0; n <= top; ++n) {
    const Index rs = right.size(n);
    sizes.push_back(left.size(n) * rs);
    bp.push_back(left.basepoint(n) * rs + right.basepoint(n));
    auto combine = [&](int level, auto&& op) {
      std::vector<Index> out(static_cast<std::size_t>(left.size(n)) * rs);
      const Index target_rs = right.size(level);
      for (Index a = 0; a < left.size(n); ++a) {
        for (Index b = 0; b < rs; ++b) {
          auto [x, y] = op(a, b);
          out[a * rs + b] = x * target_rs + y;
        }
      }
      return out;
    };
    for (int i = 0; n >= 1 && i <= n; ++i) {
      faces[n].push_back(combine(n - 1, [&](Index a, Index b) {
        return std::pair{left.face(n, i, a), right.face(n, i, b)};
      }));
    }
    for (int j = 0; n < top && j <= n; ++j) {
      degens[n].push_back(combine(n + 1, [&](Index a, Index b) {
        return std::pair{left.degeneracy(n, j, a), right.degeneracy(n, j, b)};
      }));
    }
  }
  return SimplexTable(std::move(sizes), std::move(faces), std::move(degens), std::move(bp));
}

}  // namespace mapalg
