#include "mapalg/mapping_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "mapalg/errors.hpp"

namespace mapalg {

namespace {

class FormalParser {
 public:
  explicit FormalParser(std::string_view text) : text_(text) {}

  FormalObject parse_all() {
    FormalObject obj = parse_object();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return obj;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("formal object: " + what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::string word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  int number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 6) fail("expected a suspension degree");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }
  FormalObject parse_object() {
    const std::string w = word();
    if (w == "A") return FormalObject::generator();
    if (w == "susp") {
      expect('(');
      FormalObject inner = parse_object();
      expect(',');
      const int i = number();
      expect(')');
      return inner.suspended(i);
    }
    if (w == "wedge") {
      expect('(');
      FormalObject out;
      if (eat(')')) return out;
      do {
        out = out.wedge(parse_object());
      } while (eat(','));
      expect(')');
      return out;
    }
    fail(w.empty() ? "expected an object" : "unknown constructor '" + w + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string term(int d) { return d == 0 ? "A" : "susp(A," + std::to_string(d) + ")"; }

}  // namespace

FormalObject FormalObject::generator() {
  FormalObject out;
  out.summands_[0] = 1;
  return out;
}

FormalObject FormalObject::parse(std::string_view text) { return FormalParser(text).parse_all(); }

FormalObject FormalObject::suspended(int i) const {
  FormalObject out;
  for (const auto& [d, n] : summands_) out.summands_[d + i] += n;
  return out;
}

FormalObject FormalObject::wedge(const FormalObject& other) const {
  FormalObject out = *this;
  for (const auto& [d, n] : other.summands_) out.summands_[d] += n;
  return out;
}

std::vector<int> FormalObject::degrees() const {
  std::vector<int> out;
  for (const auto& [d, n] : summands_) out.insert(out.end(), n, d);
  return out;
}

int FormalObject::max_degree() const { return summands_.empty() ? 0 : summands_.rbegin()->first; }

std::string FormalObject::key() const {
  const auto ds = degrees();
  if (ds.size() == 1) return term(ds[0]);
  std::string out = "wedge(";
  for (std::size_t k = 0; k < ds.size(); ++k) out += (k ? "," : "") + term(ds[k]);
  return out + ")";
}

RealizedPtr realize(SetPtr a, const FormalObject& b) {
  static std::mutex mutex;
  static std::map<std::pair<SetPtr, std::string>, RealizedPtr> cache;
  const std::string key = b.key();
  {
    std::lock_guard lock(mutex);
    const auto it = cache.find({a, key});
    if (it != cache.end()) return it->second;
  }
  auto out = std::make_shared<RealizedObject>();
  out->degrees = b.degrees();
  std::vector<SetPtr> powers{a};
  for (int j = 0; j < b.max_degree(); ++j) {
    out->suspensions.push_back(suspension_presentation(powers.back(), 1));
    powers.push_back(out->suspensions.back().space);
  }
  for (int d : out->degrees) out->summands.push_back(powers[d]);
  if (out->summands.size() == 1) {
    out->space = out->summands[0];
    out->legs.push_back(identity_map(out->space));
  } else {
    auto w = wedge(out->summands);
    out->space = w.space;
    out->legs = std::move(w.legs);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(std::make_pair(a, key), std::move(out)).first->second;
}

DiscreteMappingAlgebra::DiscreteMappingAlgebra(TablePtr base, EnumerationOptions options)
    : base_(std::move(base)), options_(options) {}

std::shared_ptr<const MappingSpace> DiscreteMappingAlgebra::loops(int k) const {
  if (k < 1) throw StructuralError("loop depth must be positive");
  std::lock_guard lock(mutex_);
  while (static_cast<int>(loops_.size()) < k) {
    const int depth = static_cast<int>(loops_.size()) + 1;
    TablePtr inner = loops_.empty() ? base_ : TablePtr(loops_.back(), &loops_.back()->table);
    if (inner->top() < 1) throw CapError("not enough levels to loop " + std::to_string(depth) + " times");
    loops_.push_back(std::make_shared<const MappingSpace>(loop_space(inner, inner->top() - 1, options_)));
  }
  return loops_[k - 1];
}

TablePtr DiscreteMappingAlgebra::loops_table(int k) const {
  if (k == 0) return base_;
  auto l = loops(k);
  return TablePtr(l, &l->table);
}

std::shared_ptr<const SimplexTable> DiscreteMappingAlgebra::evaluate(const FormalObject& b, int m) const {
  const std::pair<std::string, int> key{b.key(), m};
  {
    std::lock_guard lock(mutex_);
    const auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  if (base_->top() < m + b.max_degree()) {
    throw CapError("evaluating " + key.first + " through level " + std::to_string(m) + " needs base level " +
                   std::to_string(m + b.max_degree()));
  }
  SimplexTable value = tabulate(point(), m).table;
  bool first = true;
  for (int d : b.degrees()) {
    SimplexTable factor = loops_table(d)->truncated(m);
    value = first ? std::move(factor) : product_table(value, factor);
    first = false;
  }
  auto out = std::make_shared<const SimplexTable>(std::move(value));
  std::lock_guard lock(mutex_);
  return memo_.emplace(key, std::move(out)).first->second;
}

RealizableAlgebra::RealizableAlgebra(SetPtr a, SetPtr y, int m, int i_max, EnumerationOptions options)
    : a_(std::move(a)), y_(std::move(y)), m_(m), i_max_(i_max), options_(options) {
  base_ = std::make_shared<const MappingSpace>(mapping_space(a_, y_, m + i_max, options));
  discrete_ = std::make_unique<DiscreteMappingAlgebra>(TablePtr(base_, &base_->table), options);
}

bool RealizableAlgebra::Comparison::bijective() const {
  return std::all_of(levels.begin(), levels.end(), [](const LevelReport& r) { return r.bijective(); });
}

RealizableAlgebra::Comparison RealizableAlgebra::compare(const FormalObject& b) const {
  if (b.max_degree() > i_max_) throw CapError("formal object exceeds the suspension cap");
  const RealizedPtr real = realize(a_, b);
  Comparison out;
  out.direct = std::make_shared<const MappingSpace>(mapping_space(real->space, y_, m_, options_));
  out.evaluated = discrete_->evaluate(b, m_);

  // chain[j] = map(Σ^j A, Y) through level m + d - j, with its own loops.
  std::map<int, std::vector<std::shared_ptr<const MappingSpace>>> chains;
  std::map<int, LevelMap> to_loops;  // Σ^d A component -> Ω^d X<A>, by degree d
  for (int d : real->degrees) {
    if (to_loops.count(d)) continue;
    std::vector<std::shared_ptr<const MappingSpace>> chain(d + 1);
    chain[0] = base_;
    std::vector<SetPtr> powers{a_};
    for (const auto& p : real->suspensions) powers.push_back(p.space);
    for (int j = 1; j <= d; ++j) chain[j] = std::make_shared<const MappingSpace>(mapping_space(powers[j], y_, m_ + d - j, options_));
    // own[j][k] = Ω^k chain[j] for k <= d - j; for j = 0 they come from the algebra.
    std::vector<std::vector<std::shared_ptr<const MappingSpace>>> own(d + 1);
    for (int j = 0; j <= d; ++j) {
      own[j].push_back(chain[j]);
      for (int k = 1; k <= d - j; ++k) {
        if (j == 0) {
          own[j].push_back(discrete_->loops(k));
        } else {
          const auto& inner = own[j].back();
          own[j].push_back(std::make_shared<const MappingSpace>(
              loop_space(TablePtr(inner, &inner->table), inner->levels - 1, options_)));
        }
      }
    }
    LevelMap total;
    bool have = false;
    for (int j = d; j >= 1; --j) {
      // chain[j] -> Ω chain[j-1], then looped d - j times.
      LevelMap step = sigma_omega_comparison(real->suspensions[j - 1], *chain[j], *chain[j - 1], *own[j - 1][1]);
      for (int k = 1; k <= d - j; ++k) step = postcompose(*own[j][k], *own[j - 1][k + 1], step);
      total = have ? compose(step, total) : step;
      have = true;
    }
    if (!have) total = identity_level_map(chain[0]->table);
    to_loops.emplace(d, std::move(total));
    chains.emplace(d, std::move(chain));
  }

  const MappingSpace& direct = *out.direct;
  for (int n = 0; n <= m_; ++n) {
    auto& row = out.map.at.emplace_back(direct.elements[n].size());
    std::vector<SimplicialMap> restrict_n;
    for (std::size_t s = 0; s < real->degrees.size(); ++s) {
      const int d = real->degrees[s];
      const MappingSpace& component = *chains.at(d)[d];
      restrict_n.push_back(product_quotient_map(component.source->level(n), direct.source->level(n), &real->legs[s], nullptr));
    }
    for (Index k = 0; k < row.size(); ++k) {
      Index combined = 0;
      for (std::size_t s = 0; s < real->degrees.size(); ++s) {
        const int d = real->degrees[s];
        const MappingSpace& component = *chains.at(d)[d];
        const SimplicialMap& along = restrict_n[s];
        Assignment part(along.source->size());
        for (CellId c = 0; c < part.size(); ++c) part[c] = direct.value(n, k, along.image[c]);
        const Index looped = to_loops.at(d).at[n][component.find(n, part)];
        const Index radix = discrete_->loops_table(d)->size(n);
        combined = s == 0 ? looped : combined * radix + looped;
      }
      if (real->degrees.empty()) combined = 0;
      row[k] = combined;
    }
    out.levels.push_back(compare_levels(out.map, direct.table, *out.evaluated, n));
  }
  return out;
}


SimplexTable relabel(const SimplexTable& t, const std::vector<std::vector<Index>>& perm) {
  std::vector<Index> sizes, bp;
  std::vector<std::vector<std::vector<Index>>> faces(t.top() + 1), degens(t.top() + 1);
  for (int n = 0; n <= t.top(); ++n) {
    sizes.push_back(t.size(n));
    bp.push_back(perm[n][t.basepoint(n)]);
    for (int i = 0; n >= 1 && i <= n; ++i) {
      auto& row = faces[n].emplace_back(t.size(n));
      for (Index k = 0; k < t.size(n); ++k) row[perm[n][k]] = perm[n - 1][t.face(n, i, k)];
    }
    for (int j = 0; n < t.top() && j <= n; ++j) {
      auto& row = degens[n].emplace_back(t.size(n));
      for (Index k = 0; k < t.size(n); ++k) row[perm[n][k]] = perm[n + 1][t.degeneracy(n, j, k)];
    }
  }
  return SimplexTable(std::move(sizes), std::move(faces), std::move(degens), std::move(bp));
}

namespace {

using MapKey = std::vector<Simplex>;

struct HomSet {
  std::vector<SimplicialMap> maps;
  std::map<MapKey, Index> index;

  explicit HomSet(std::vector<SimplicialMap> m) : maps(std::move(m)) {
    for (Index k = 0; k < maps.size(); ++k) index.emplace(maps[k].image, k);
  }
  Index find(const SimplicialMap& f) const { return index.at(f.image); }
};

}  // namespace

YonedaReport yoneda_check(SetPtr a, const FormalObject& b, SetPtr y, const EnumerationOptions& options) {
  std::vector<FormalObject> family{FormalObject::generator(), b};
  for (int d : b.degrees()) family.push_back(FormalObject::generator().suspended(d));
  std::vector<FormalObject> unique;
  for (const auto& f : family) {
    if (std::find(unique.begin(), unique.end(), f) == unique.end()) unique.push_back(f);
  }
  const std::size_t size = unique.size();
  std::vector<SetPtr> objs;
  YonedaReport report;
  for (const auto& f : unique) {
    objs.push_back(realize(a, f)->space);
    report.family.push_back(f.key());
  }
  const auto b_pos = static_cast<std::size_t>(std::find(unique.begin(), unique.end(), b) - unique.begin());
  const SetPtr& bb = objs[b_pos];

  std::vector<HomSet> to_b, to_y;
  for (const auto& c : objs) {
    to_b.emplace_back(enumerate_pointed_maps(c, bb, options));
    to_y.emplace_back(enumerate_pointed_maps(c, y, options));
  }
  // Variable (k, a) is the value of the family at object k on the a-th map
  // C_k -> B; offsets flatten them.
  std::vector<std::size_t> offset(size + 1, 0);
  for (std::size_t k = 0; k < size; ++k) offset[k + 1] = offset[k] + to_b[k].maps.size();
  const std::size_t vars = offset[size];

  // Constraint: value(k, φ∘u) = value(k', φ)∘u for u: C_k -> C_k', φ: C_k' -> B.
  struct Edge {
    std::size_t target;
    std::vector<Index> precompose;  // value index on C_k' -> value index on C_k
  };
  std::vector<std::vector<Edge>> edges(vars);
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t kp = 0; kp < size; ++kp) {
      for (const SimplicialMap& u : enumerate_pointed_maps(objs[k], objs[kp], options)) {
        std::vector<Index> pre;
        for (const SimplicialMap& v : to_y[kp].maps) pre.push_back(to_y[k].find(compose(v, u)));
        for (Index phi = 0; phi < to_b[kp].maps.size(); ++phi) {
          const Index target = to_b[k].find(compose(to_b[kp].maps[phi], u));
          edges[offset[kp] + phi].push_back({offset[k] + target, pre});
        }
      }
    }
  }
  auto object_of = [&](std::size_t var) {
    return static_cast<std::size_t>(std::upper_bound(offset.begin(), offset.end(), var) - offset.begin()) - 1;
  };

  std::vector<long> value(vars, -1);
  std::vector<std::size_t> trail;
  std::vector<std::vector<long>> solutions;
  std::uint64_t nodes = 0;
  auto assign = [&](std::size_t var, long v) {
    std::vector<std::pair<std::size_t, long>> queue{{var, v}};
    while (!queue.empty()) {
      auto [x, val] = queue.back();
      queue.pop_back();
      if (value[x] >= 0) {
        if (value[x] != val) return false;
        continue;
      }
      value[x] = val;
      trail.push_back(x);
      for (const Edge& e : edges[x]) queue.emplace_back(e.target, e.precompose[val]);
    }
    return true;
  };
  std::function<void(std::size_t)> search = [&](std::size_t var) {
    while (var < vars && value[var] >= 0) ++var;
    if (var == vars) {
      solutions.push_back(value);
      return;
    }
    const std::size_t domain = to_y[object_of(var)].maps.size();
    for (std::size_t v = 0; v < domain; ++v) {
      if (++nodes > options.node_budget) throw BudgetError(options.node_budget, solutions.size());
      const std::size_t mark = trail.size();
      if (assign(var, static_cast<long>(v))) search(var + 1);
      while (trail.size() > mark) {
        value[trail.back()] = -1;
        trail.pop_back();
      }
    }
  };
  search(0);

  report.transformations = solutions.size();
  report.elements = to_y[b_pos].maps.size();
  const Index id = to_b[b_pos].find(identity_map(bb));
  std::vector<bool> hit(report.elements, false);
  bool ok = report.transformations == report.elements;
  for (const auto& sol : solutions) {
    const auto psi = static_cast<Index>(sol[offset[b_pos] + id]);
    if (hit[psi]) ok = false;
    hit[psi] = true;
    // The inverse sends ψ to φ -> ψ∘φ.
    for (std::size_t k = 0; k < size && ok; ++k) {
      for (Index phi = 0; phi < to_b[k].maps.size(); ++phi) {
        if (sol[offset[k] + phi] != to_y[k].find(compose(to_y[b_pos].maps[psi], to_b[k].maps[phi]))) ok = false;
      }
    }
  }
  report.bijective = ok && std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
  return report;
}

bool AEquivalenceReport::positive() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const Degree& d) { return d.injective && d.surjective; });
}

std::string AEquivalenceReport::verdict() const {
  const std::string caps = "(" + std::to_string(i_max) + ", " + std::to_string(m) + ")";
  return positive() ? "A-equivalence up to " + caps : "not an A-equivalence up to " + caps;
}

AEquivalenceReport a_equivalence_check(const SimplicialMap& f, SetPtr a, int i_max, int m,
                                       const EnumerationOptions& options) {
  AEquivalenceReport report;
  report.i_max = i_max;
  report.m = m;
  const int levels = std::max(1, m);
  for (int i = 0; i <= i_max; ++i) {
    const SetPtr s = realize(a, FormalObject::generator().suspended(i))->space;
    const MappingSpace mx = mapping_space(s, f.source, levels, options);
    const MappingSpace my = mapping_space(s, f.target, levels, options);
    const LevelMap post = postcompose(mx, my, tabulate_map(*mx.ez_target, *my.ez_target, f));
    const auto cx = homotopy_classes(mx.table);
    const auto cy = homotopy_classes(my.table);
    AEquivalenceReport::Degree deg;
    deg.i = i;
    deg.source_classes = cx.count();
    deg.target_classes = cy.count();
    std::vector<int> image(cx.count());
    std::vector<bool> hit(cy.count(), false);
    for (int c = 0; c < cx.count(); ++c) {
      image[c] = cy.class_of[post.at[0][cx.representative[c]]];
      hit[image[c]] = true;
    }
    std::vector<int> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    deg.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    deg.surjective = std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
    report.degrees.push_back(deg);
  }
  return report;
}

}  // namespace mapalg
