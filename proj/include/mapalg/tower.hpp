#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mapalg/monad.hpp"
#include "mapalg/stover.hpp"

namespace mapalg {

/// Z ∪_V Cyl(v) for u : V -> Z and v : V -> U. Cyl(v) = V ⋊ Delta[1] ∪ U with
/// the end V ⋊ {1} glued along v; V ⋊ {0} is the front, glued to Z along u.
struct CylinderPushout {
  ProductQuotient cyl;
  ColimitPresentation w;     // inputs: U, cyl
  SimplicialMap front;       // V -> W
  SimplicialMap back;        // U -> W, a section of `collapse`
  SimplicialMap collapse;    // W -> U
  ColimitPresentation z;     // pushout of u and front; legs Z -> Z', W -> Z'
  const SimplicialMap& i() const { return z.legs[0]; }
  const SimplicialMap& p() const { return z.legs[1]; }
};

/// `dim_cap` bounds the cylinder; the inputs' caps are kept when larger.
CylinderPushout cylinder_pushout(const SimplicialMap& u, const SimplicialMap& v, int dim_cap = 3);

enum class TowerKind { dold_lashof, stover };

const char* to_string(TowerKind k);

struct TowerStage {
  SetPtr z;
  SimplicialMap e;                            // Z -> Y
  std::shared_ptr<const MappingSpace> mz;     // map(A, Z) through level m
  LevelMap f;                                 // M_A e : map(A, Z) -> X
  // Stages above 0 only.
  std::optional<CylinderPushout> pushout;     // builds this stage from the previous one
  SimplicialMap p;                            // F_A X -> Z, or W -> Z for the Stover kind
  std::vector<LawCheck> checks;
  // What the next stage is built from.
  std::shared_ptr<const StoverObject> lz;     // L_A Z
  std::shared_ptr<const Realization> kz;      // realization of map(A, Z)
  std::shared_ptr<const ProductQuotient> fz;  // F_A map(A, Z)
};

/// Realizable case only: X = map(A, Y) through level m.
struct TowerState {
  TowerKind kind = TowerKind::dold_lashof;
  SetPtr a;
  SetPtr y;
  int m = kDefaultLevelCap;
  int i_max = 0;
  int dim_cap = 3;
  EnumerationOptions options;
  SourcePtr source;
  std::shared_ptr<const AlgebraStructure> algebra;  // X, F_A X, ev, eps
  std::shared_ptr<const StoverObject> ly;           // L_A Y for the Stover kind
  std::vector<TowerStage> stages;

  const MappingSpace& x() const { return *algebra->x; }
};

TowerState start_tower(TowerKind kind, SetPtr a, SetPtr y, int m, int i_max, int dim_cap = 3,
                       const EnumerationOptions& options = {});
/// The same tower started from e0 : Z0 -> Y instead of the point.
TowerState start_tower(TowerKind kind, SetPtr a, const SimplicialMap& e0, int m, int i_max, int dim_cap = 3,
                       const EnumerationOptions& options = {});
TowerState dold_lashof_step(const TowerState& state);
TowerState stover_tower_step(const TowerState& state);
TowerState tower_step(const TowerState& state);
TowerState run_tower(TowerKind kind, SetPtr a, SetPtr y, int stages, int m, int i_max, int dim_cap = 3,
                     const EnumerationOptions& options = {});

/// Classes of the stage merged downstream, with the connecting chain of
/// 1-simplices of map(B, Z^(alpha+1)) built from sigma in X<B>_1.
struct InjectivityWitness {
  int stage = 0;
  int degree = 0;
  Index g = 0;
  Index g2 = 0;
  std::vector<Index> sigma;  // path in map(B, Y)_1 from f(g) to f(g2)
  std::vector<Index> chain;  // elements of map(B, Z^(alpha+1))_1
  bool verified = false;     // faces connect i(g) to i(g2) through the chain
};

struct RecoveryReport {
  struct Degree {
    int i = 0;
    int stage_classes = 0;
    int target_classes = 0;
    bool surjective = false;
    bool injective = false;
    bool stabilized = false;  // i_# : [B, Z^(k-1)] -> [B, Z^(k)] bijective
    std::vector<Index> lifts;  // per class of [B, Y]: an element of map(B, Z^(k))_0 over it
  };
  int stages = 0;
  std::vector<Degree> degrees;
  std::vector<InjectivityWitness> witnesses;
  /// Level-wise comparison of f^(k) : map(A, Z^(k)) -> X through level m.
  std::vector<LevelReport> levels;
};

RecoveryReport recovery_report(const TowerState& state);

}  // namespace mapalg
