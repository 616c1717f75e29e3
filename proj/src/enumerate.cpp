#include "mapalg/enumerate.hpp"

#include <omp.h>

#include <atomic>

#include "mapalg/errors.hpp"

namespace mapalg {

namespace {

struct Aborted {};

class Search {
 public:
  Search(const SimplicialSet& source, const SimplexTable& target) : source_(source), target_(target) {
    if (source.dimension() > target.top()) throw CapError("target table is shallower than the source");
    key_.resize(source.size());
    for (CellId c = 0; c < source.size(); ++c) key_[c].resize(source.cell(c).faces.size());
  }

  std::size_t cells() const { return source_.size(); }

  // Candidates for cell c given the assignment of all earlier cells.
  std::span<const Index> candidates(CellId c, const Assignment& f, std::vector<Index>& scratch) {
    const Cell& cell = source_.cell(c);
    if (cell.dim == 0) {
      if (c == source_.basepoint()) {
        scratch.assign(1, target_.basepoint(0));
      } else {
        scratch.resize(target_.size(0));
        for (Index k = 0; k < target_.size(0); ++k) scratch[k] = k;
      }
      return scratch;
    }
    std::vector<Index>& key = key_[c];
    for (std::size_t i = 0; i < cell.faces.size(); ++i) {
      const Simplex& s = cell.faces[i];
      key[i] = target_.degenerate(s.cell_dim(), f[s.cell], s.degens, s.dim);
    }
    return target_.with_faces(cell.dim, key);
  }

  // Depth-first completion of f from cell c. `tick` is called once per node
  // and may throw to abandon the search.
  template <class Tick>
  void complete(CellId c, Assignment& f, std::vector<Assignment>& out, Tick&& tick) {
    if (c == source_.size()) {
      out.push_back(f);
      return;
    }
    std::vector<Index> scratch;
    const auto cand = candidates(c, f, scratch);
    const std::vector<Index> local(cand.begin(), cand.end());
    for (Index k : local) {
      tick(out.size());
      f[c] = k;
      complete(c + 1, f, out, tick);
    }
  }

  Search fork() const { return Search(source_, target_); }

 private:
  const SimplicialSet& source_;
  const SimplexTable& target_;
  std::vector<std::vector<Index>> key_;
};

}  // namespace

std::vector<Assignment> enumerate_maps_serial(const SimplicialSet& source, const SimplexTable& target,
                                              std::uint64_t node_budget) {
  Search search(source, target);
  std::vector<Assignment> out;
  Assignment f(source.size());
  std::uint64_t nodes = 0;
  search.complete(0, f, out, [&](std::size_t found) {
    if (++nodes > node_budget) throw BudgetError(node_budget, found);
  });
  return out;
}

std::vector<Assignment> enumerate_maps_parallel(const SimplicialSet& source, const SimplexTable& target,
                                                std::uint64_t node_budget) {
  Search search(source, target);
  const std::size_t want = 8 * static_cast<std::size_t>(omp_get_max_threads());
  // Breadth-first expansion keeps the frontier in lexicographic order.
  std::vector<Assignment> frontier{Assignment(source.size())};
  CellId depth = 0;
  std::uint64_t nodes = 0;
  std::vector<Index> scratch;
  while (depth < source.size() && frontier.size() < want) {
    std::vector<Assignment> next;
    for (Assignment& f : frontier) {
      for (Index k : search.candidates(depth, f, scratch)) {
        if (++nodes > node_budget) return enumerate_maps_serial(source, target, node_budget);
        f[depth] = k;
        next.push_back(f);
      }
    }
    frontier = std::move(next);
    ++depth;
  }
  if (depth == source.size()) return frontier;

  std::atomic<std::uint64_t> spent{nodes};
  std::atomic<bool> aborted{false};
  std::vector<std::vector<Assignment>> results(frontier.size());
  const auto count = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel
  {
    Search local = search.fork();
#pragma omp for schedule(dynamic)
    for (std::int64_t t = 0; t < count; ++t) {
      if (aborted.load(std::memory_order_relaxed)) continue;
      Assignment f = frontier[t];
      std::uint64_t pending = 0;
      try {
        local.complete(depth, f, results[t], [&](std::size_t) {
          if (++pending == 256) {
            if (spent.fetch_add(pending) + pending > node_budget || aborted.load(std::memory_order_relaxed)) {
              throw Aborted{};
            }
            pending = 0;
          }
        });
        if (spent.fetch_add(pending) + pending > node_budget) aborted = true;
      } catch (const Aborted&) {
        aborted = true;
      }
    }
  }
  // Rerun serially so the error carries the same partial count either way.
  if (aborted) return enumerate_maps_serial(source, target, node_budget);
  std::vector<Assignment> out;
  for (auto& r : results) {
    for (auto& f : r) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Assignment> enumerate_maps(const SimplicialSet& source, const SimplexTable& target,
                                       const EnumerationOptions& options) {
  return options.parallel ? enumerate_maps_parallel(source, target, options.node_budget)
                          : enumerate_maps_serial(source, target, options.node_budget);
}

Index evaluate(const SimplicialSet&, const SimplexTable& target, const Assignment& f, const Simplex& s) {
  return target.degenerate(s.cell_dim(), f[s.cell], s.degens, s.dim);
}

}  // namespace mapalg
