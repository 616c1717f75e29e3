#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "mapalg/mapping_space.hpp"

namespace mapalg {

/// A finite wedge of suspensions of the generator A, as a multiset of
/// suspension degrees.
class FormalObject {
 public:
  FormalObject() = default;
  static FormalObject generator();
  /// Grammar: `A`, `susp(<obj>,i)`, `wedge(<obj>,...)`. Throws ParseError.
  static FormalObject parse(std::string_view text);

  FormalObject suspended(int i) const;
  FormalObject wedge(const FormalObject& other) const;

  /// Canonical text, e.g. `wedge(A,A,susp(A,2))`; parse(key()) == *this.
  std::string key() const;
  /// Degrees with multiplicity, ascending.
  std::vector<int> degrees() const;
  int max_degree() const;
  bool empty() const { return summands_.empty(); }

  friend bool operator==(const FormalObject&, const FormalObject&) = default;

 private:
  std::map<int, int> summands_;  // degree -> count
};

/// The wedge of Σ^i A realizing a formal object. Σ^i A is built by iterated
/// single suspensions; `suspensions[j]` presents Σ^{j+1}A over Σ^j A.
struct RealizedObject {
  SetPtr space;
  std::vector<int> degrees;
  std::vector<SetPtr> summands;
  std::vector<SimplicialMap> legs;  // summand -> space
  std::vector<ProductQuotient> suspensions;
};

using RealizedPtr = std::shared_ptr<const RealizedObject>;

/// Deterministic and cached by (A, canonical key).
RealizedPtr realize(SetPtr a, const FormalObject& b);

/// A discrete A-mapping algebra given by its value X<A>; every other value
/// comes from X<∨ B_k> = ∏ X<B_k> and X<ΣB> = Ω X<B>.
class DiscreteMappingAlgebra {
 public:
  explicit DiscreteMappingAlgebra(TablePtr base, EnumerationOptions options = {});

  const TablePtr& base() const { return base_; }
  /// Ω^k X<A> with levels base.top - k; k >= 1.
  std::shared_ptr<const MappingSpace> loops(int k) const;
  TablePtr loops_table(int k) const;
  /// X<B> through level m. Needs base levels up to m + max degree of B.
  std::shared_ptr<const SimplexTable> evaluate(const FormalObject& b, int m) const;

 private:
  TablePtr base_;
  EnumerationOptions options_;
  mutable std::mutex mutex_;
  mutable std::vector<std::shared_ptr<const MappingSpace>> loops_;
  mutable std::map<std::pair<std::string, int>, std::shared_ptr<const SimplexTable>> memo_;
};

/// M_A Y with base map(A, Y) through level m + i_max.
class RealizableAlgebra {
 public:
  RealizableAlgebra(SetPtr a, SetPtr y, int m, int i_max, EnumerationOptions options = {});

  const SetPtr& a() const { return a_; }
  const SetPtr& y() const { return y_; }
  int levels() const { return m_; }
  const MappingSpace& base() const { return *base_; }
  const DiscreteMappingAlgebra& discrete() const { return *discrete_; }

  struct Comparison {
    std::shared_ptr<const MappingSpace> direct;  // map(realize B, Y)
    std::shared_ptr<const SimplexTable> evaluated;
    LevelMap map;
    std::vector<LevelReport> levels;
    bool bijective() const;
  };

  /// The canonical map map(realize B, Y) -> X<B>: restriction to summands
  /// followed by the suspension-loop comparisons.
  Comparison compare(const FormalObject& b) const;

 private:
  SetPtr a_;
  SetPtr y_;
  int m_;
  int i_max_;
  EnumerationOptions options_;
  std::shared_ptr<const MappingSpace> base_;
  std::unique_ptr<DiscreteMappingAlgebra> discrete_;
};

/// Relabel every level of a table by a permutation: element k of level n
/// becomes perm[n][k].
SimplexTable relabel(const SimplexTable& t, const std::vector<std::vector<Index>>& perm);

struct YonedaReport {
  std::size_t transformations = 0;  // natural families counted by search
  std::size_t elements = 0;         // |map(B, Y)_0|
  bool bijective = false;
  std::vector<std::string> family;  // canonical keys of the test objects
};

/// Counts natural families of level-0 functions map(C, B)_0 -> map(C, Y)_0
/// over a test family C (A, B and the summands of B), commuting with
/// precomposition by every map in the family, and checks that f -> f_B(id)
/// is a bijection onto map(B, Y)_0.
YonedaReport yoneda_check(SetPtr a, const FormalObject& b, SetPtr y, const EnumerationOptions& options = {});

struct AEquivalenceReport {
  int i_max = 0;
  int m = 0;
  struct Degree {
    int i = 0;
    int source_classes = 0;
    int target_classes = 0;
    bool injective = false;
    bool surjective = false;
  };
  std::vector<Degree> degrees;
  bool positive() const;
  /// e.g. "A-equivalence up to (1, 1)" or "not an A-equivalence up to (1, 1)".
  std::string verdict() const;
};

AEquivalenceReport a_equivalence_check(const SimplicialMap& f, SetPtr a, int i_max, int m,
                                       const EnumerationOptions& options = {});

}  // namespace mapalg
