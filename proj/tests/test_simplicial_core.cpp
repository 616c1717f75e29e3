#include <algorithm>
#include <functional>

#include "doctest.h"
#include "mapalg/constructions.hpp"
#include "mapalg/errors.hpp"

using namespace mapalg;

namespace {

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

// Strictly increasing chains of length k + 1 in the poset [p] x [q]; each is a
// nondegenerate k-simplex of Delta[p] x Delta[q]. `keep` filters chains.
long count_chains(int p, int q, int k, const std::function<bool(const std::vector<std::pair<int, int>>&)>& keep) {
  long total = 0;
  std::vector<std::pair<int, int>> chain;
  std::function<void()> grow = [&]() {
    if (static_cast<int>(chain.size()) == k + 1) {
      total += keep(chain) ? 1 : 0;
      return;
    }
    for (int a = 0; a <= p; ++a) {
      for (int b = 0; b <= q; ++b) {
        if (!chain.empty()) {
          auto [x, y] = chain.back();
          if (a < x || b < y || (a == x && b == y)) continue;
        }
        chain.emplace_back(a, b);
        grow();
        chain.pop_back();
      }
    }
  };
  grow();
  return total;
}

bool surjective_both(const std::vector<std::pair<int, int>>& chain, int p, int q) {
  std::vector<bool> first(p + 1), second(q + 1);
  for (auto [a, b] : chain) {
    first[a] = true;
    second[b] = true;
  }
  return std::all_of(first.begin(), first.end(), [](bool v) { return v; }) &&
         std::all_of(second.begin(), second.end(), [](bool v) { return v; });
}

}  // namespace

TEST_CASE("standard simplex cell counts are binomial") {
  for (int n = 0; n <= 4; ++n) {
    auto d = standard_simplex(n);
    CHECK(validate(*d).empty());
    for (int k = 0; k <= n; ++k) CHECK(static_cast<long>(d->count(k)) == binom(n + 1, k + 1));
  }
  auto d2 = standard_simplex(2);
  CHECK(d2->count(0) == 3);
  CHECK(d2->count(1) == 3);
  CHECK(d2->count(2) == 1);
}

TEST_CASE("faces of degenerate simplices follow vertex sequences") {
  // In Delta[n] a simplex is a monotone vertex sequence; d_i deletes entry i.
  const int n = 3;
  auto d = standard_simplex(n);
  std::vector<int> seq;
  std::function<void(int)> walk = [&](int len) {
    if (static_cast<int>(seq.size()) == len) {
      const Simplex s = delta_simplex(n, seq);
      for (int i = 0; i < len && len > 1; ++i) {
        std::vector<int> shorter = seq;
        shorter.erase(shorter.begin() + i);
        CHECK(d->face(s, i) == delta_simplex(n, shorter));
      }
      for (int j = 0; j < len; ++j) {
        std::vector<int> longer = seq;
        longer.insert(longer.begin() + j, seq[j]);
        CHECK(degeneracy(s, j) == delta_simplex(n, longer));
      }
      return;
    }
    for (int v = seq.empty() ? 0 : seq.back(); v <= n; ++v) {
      seq.push_back(v);
      walk(len);
      seq.pop_back();
    }
  };
  for (int len = 1; len <= 5; ++len) walk(len);
}

TEST_CASE("degeneracy words must strictly decrease") {
  CHECK_NOTHROW(DegeneracyWord({3, 1, 0}));
  CHECK_THROWS_AS(DegeneracyWord({1, 1}), ParseError);
  CHECK_THROWS_AS(DegeneracyWord({0, 2}), ParseError);
  CHECK(DegeneracyWord::from_mask(DegeneracyWord({4, 2}).mask()) == DegeneracyWord({4, 2}));
}

TEST_CASE("spheres") {
  auto s0 = sphere(0);
  CHECK(s0->count(0) == 2);
  auto s1 = sphere(1);
  CHECK(s1->count(0) == 1);
  CHECK(s1->count(1) == 1);
  auto s2 = sphere(2);
  CHECK(s2->count(0) == 1);
  CHECK(s2->count(1) == 0);
  CHECK(s2->count(2) == 1);
  for (int n = 0; n <= 3; ++n) CHECK(validate(*sphere(n)).empty());
}

TEST_CASE("validate names a broken identity") {
  auto d2 = standard_simplex(2);
  std::vector<Cell> cells(d2->cells().begin(), d2->cells().end());
  std::swap(cells.back().faces[0], cells.back().faces[2]);
  SimplicialSet broken(cells, 0, 3);
  auto report = validate(broken);
  REQUIRE_FALSE(report.empty());
  CHECK(report.front().find("d_0 d_1") != std::string::npos);
}

TEST_CASE("products against the chain oracle") {
  for (int p = 0; p <= 2; ++p) {
    for (int q = 0; q <= 2; ++q) {
      auto prod = product(standard_simplex(p), standard_simplex(q), std::max(3, p + q));
      CHECK(validate(*prod.space).empty());
      for (int k = 0; k <= p + q; ++k) {
        CHECK(static_cast<long>(prod.space->count(k)) == count_chains(p, q, k, [](const auto&) { return true; }));
      }
    }
  }
  auto sq = product(standard_simplex(1), standard_simplex(1)).space;
  CHECK(sq->count(0) == 4);
  CHECK(sq->count(1) == 5);
  CHECK(sq->count(2) == 2);
  CHECK(isomorphic(product(sphere(2), point()).space, sphere(2)));
  CHECK(product(sphere(0), sphere(0)).space->count(0) == 4);
}

TEST_CASE("product dimension cap is enforced") {
  CHECK_THROWS_AS(product(sphere(2), standard_simplex(2)), CapError);
  CHECK_NOTHROW(product(sphere(2), standard_simplex(2), 4));
}

TEST_CASE("quotients") {
  auto d1 = standard_simplex(1);
  const std::vector<CellId> ends = {0, 1};
  CHECK(isomorphic(quotient(d1, ends).space, sphere(1)));
  auto d2 = standard_simplex(2);
  std::vector<CellId> bd;
  for (CellId c = 0; c + 1 < d2->size(); ++c) bd.push_back(c);
  auto q = quotient(d2, bd);
  CHECK(validate(*q.space).empty());
  CHECK(validate(q.projection).empty());
  CHECK(isomorphic(q.space, sphere(2)));
  std::vector<CellId> all;
  for (CellId c = 0; c < d2->size(); ++c) all.push_back(c);
  CHECK(isomorphic(quotient(d2, all).space, point()));
  const std::vector<CellId> not_closed = {0, 6};
  CHECK_THROWS_AS(quotient(d2, not_closed), StructuralError);
}

TEST_CASE("wedges and pushouts") {
  auto w = wedge({sphere(1), sphere(1)});
  CHECK(w.space->count(0) == 1);
  CHECK(w.space->count(1) == 2);
  CHECK(isomorphic(wedge({sphere(2)}).space, sphere(2)));
  CHECK(isomorphic(wedge({}).space, point()));
  auto w12 = wedge({sphere(1), sphere(2)});
  CHECK(w12.space->size() == sphere(1)->size() + sphere(2)->size() - 1);
  for (const auto& leg : w12.legs) CHECK(validate(leg).empty());

  auto s1 = sphere(2);
  auto id = identity_map(s1);
  CHECK(isomorphic(pushout(id, id).space, s1));

  auto bd = boundary(1);
  SimplicialMap incl{bd, standard_simplex(1), {nondegenerate(0, 0), nondegenerate(1, 0)}};
  auto collapse = constant_map(bd, point());
  auto po = pushout(incl, collapse);
  CHECK(po.left_injective);
  CHECK_FALSE(po.right_injective);
  CHECK(isomorphic(po.space, sphere(1)));

  auto x = sphere(1), z = sphere(2);
  auto wz = pushout(constant_map(point(), x), constant_map(point(), z));
  CHECK(isomorphic(wz.space, wedge({x, z}).space));
}

TEST_CASE("half smash, smash and suspension") {
  auto s0 = sphere(0), s1 = sphere(1), s2 = sphere(2);
  auto hs = half_smash_right(s0, standard_simplex(1)).space;
  CHECK(hs->count(0) == 3);
  CHECK(hs->count(1) == 1);
  CHECK(validate(*hs).empty());
  CHECK(isomorphic(half_smash_right(s2, standard_simplex(0)).space, s2));
  CHECK(isomorphic(half_smash_right(point(), standard_simplex(2)).space, point()));
  CHECK(isomorphic(smash_left(s0, s2).space, s2));
  CHECK(isomorphic(smash_left(s2, s0).space, s2));
  CHECK(isomorphic(suspension(s0, 1), s1));
  CHECK(suspension(s1, 0) == s1);

  // Σ^i S^j is Delta[j] x Delta[i] modulo the product of boundaries; its
  // nondegenerate cells off the basepoint are the chains surjecting onto both
  // factors.
  for (auto [j, i] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}}) {
    auto susp = suspension(sphere(j), i);
    CHECK(validate(*susp).empty());
    CHECK(pi0_count(*susp) == 1);
    for (int k = 1; k <= i + j; ++k) {
      const long expected = count_chains(j, i, k, [&](const auto& c) { return surjective_both(c, j, i); });
      CHECK(static_cast<long>(susp->count(k)) == expected);
    }
    CHECK(susp->count(0) == 1);
  }
  auto ss = smash_left(s1, s1).space;
  auto sus = suspension(s1, 1);
  CHECK(isomorphic(ss, sus));
  CHECK(pi0_count(*ss) == 1);
}

TEST_CASE("pi0") {
  CHECK(pi0_count(*sphere(0)) == 2);
  CHECK(pi0_count(*sphere(1)) == 1);
  CHECK(pi0_count(*wedge({sphere(1), sphere(1)}).space) == 1);
  CHECK(pi0_count(*wedge({sphere(0), sphere(0)}).space) == 3);
}
