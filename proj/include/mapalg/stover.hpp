#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "mapalg/mapping_algebra.hpp"

namespace mapalg {

enum class PieceKind { copy, cylinder, cone, base };

const char* to_string(PieceKind k);

/// One input of a Stover colimit: a copy of B_i = Σ^i A indexed by a level-0
/// element, or a cylinder (cone) B_i ⋊ Delta[1] indexed by a level-1 element.
struct StoverPiece {
  int degree = 0;
  int cls = -1;
  PieceKind kind = PieceKind::copy;
  Index element = 0;

  int level() const { return kind == PieceKind::copy ? 0 : 1; }
  friend bool operator==(const StoverPiece&, const StoverPiece&) = default;
};

/// L_A Y or a summand of it. `built.tags` records, for every cell, the
/// pieces and piece cells it comes from.
struct StoverObject {
  SetPtr a;
  int i_max = 0;
  std::vector<SetPtr> generators;                // B_i, i <= i_max
  std::vector<SourcePtr> sources;                // B_i ⋊ Delta[n], n <= 1
  std::vector<TruncatedObject> truncations;      // rho map(B_i, Y)
  std::vector<HomotopyClassTable> classes;
  std::vector<StoverPiece> pieces;
  ColimitPresentation built;
  /// Present when built over an actual Y.
  SetPtr y;
  std::vector<std::shared_ptr<const MappingSpace>> spaces;  // map(B_i, Y), levels 0..1
  std::optional<SimplicialMap> counit;

  const SetPtr& space() const { return built.space; }
  /// Input index of a piece, or -1.
  int piece_index(int degree, PieceKind kind, Index element) const;
  /// The map B_i ⋊ Delta[n] -> Y indexing a piece.
  SimplicialMap piece_map(int p) const;

  std::map<std::tuple<int, PieceKind, Index>, int> keys;
};

/// Σ^i A for i <= i_max as iterated suspensions, and their sources up to level 1.
std::vector<SetPtr> stover_generators(SetPtr a, int i_max);

/// The construction on truncated data only. `only` keeps the pieces of one
/// (degree, class).
StoverObject stover_from_truncation(SetPtr a, const std::vector<SourcePtr>& sources,
                                    const std::vector<TruncatedObject>& truncations,
                                    std::optional<std::pair<int, int>> only = std::nullopt);
StoverObject stover_from_truncation(SetPtr a, const std::vector<TruncatedObject>& truncations);

/// L_A Y with its tautological counit.
StoverObject stover_comonad(SetPtr a, SetPtr y, int i_max, const EnumerationOptions& options = {});
/// Same A, i_max and sources as `like`, over a new Y.
StoverObject stover_comonad(const StoverObject& like, SetPtr y, const EnumerationOptions& options = {});

/// E_phi for B and the class phi of [B, Y].
struct ElementaryStoverObject {
  SetPtr b;
  int phi = 0;
  std::vector<Index> maps;                                        // S
  std::map<std::pair<Index, Index>, std::vector<Index>> homotopies;  // T_{f,g}
  StoverObject object;
};

ElementaryStoverObject elementary_stover(SetPtr b, SetPtr y, int phi, const EnumerationOptions& options = {});

/// The map out of a Stover object given on each piece. Throws StructuralError
/// when two pieces disagree on a shared cell.
SimplicialMap assemble_from_pieces(const StoverObject& src, SetPtr target, const std::vector<SimplicialMap>& piece_maps);

/// L_A g : L_A Y -> L_A Y' for g : Y -> Y'; both objects built with the same A and i_max.
SimplicialMap stover_functor(const StoverObject& from, const StoverObject& to, const SimplicialMap& g);

/// mu_Y : L_A Y -> L_A L_A Y; `lly` must be stover_comonad(A, ly.space(), i_max).
SimplicialMap comultiplication(const StoverObject& ly, const StoverObject& lly);

/// One named check with the first offending cell, if any.
struct LawCheck {
  std::string name;
  bool pass = false;
  std::string witness;
};

/// Compares two maps cell by cell; the witness names the first differing cell
/// and the pieces it came from.
LawCheck compare_on_cells(const std::string& name, const SimplicialMap& f, const SimplicialMap& g,
                          const StoverObject* tags = nullptr);

struct ComonadLawReport {
  std::vector<LawCheck> checks;
  std::size_t cells = 0;  // of L_A Y
  bool pass() const;
};

/// Both counit identities and, when requested, coassociativity.
ComonadLawReport check_comonad_laws(SetPtr a, SetPtr y, int i_max, bool coassociativity,
                                    const EnumerationOptions& options = {});

/// eps_{Y'} o L_A g = g o eps_Y.
LawCheck check_functoriality(SetPtr a, const SimplicialMap& g, int i_max, const EnumerationOptions& options = {});

/// Cones on Σ^i A along null-homotopies only, with the zero copy collapsed.
/// Refused unless `cogroup` is set and A is connected.
StoverObject stover_cogroup_variant(SetPtr a, SetPtr y, int i_max, bool cogroup,
                                    const EnumerationOptions& options = {});

struct CounitResolutionReport {
  bool copies = false;     // eps o (copy of f) = f
  bool cylinders = false;  // eps o (cylinder of F) = F
  struct Degree {
    int i = 0;
    int source_classes = 0;
    int target_classes = 0;
    bool surjective = false;
    std::vector<Index> lifts;  // per class of [Σ^i A, Y], an element of map(Σ^i A, L_A Y)_0
  };
  std::vector<Degree> degrees;
  bool pass() const;
};

CounitResolutionReport check_counit_resolution(const StoverObject& ly, const EnumerationOptions& options = {});

}  // namespace mapalg
