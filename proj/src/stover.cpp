#include "mapalg/stover.hpp"

#include <algorithm>
#include <sstream>

#include "mapalg/errors.hpp"

namespace mapalg {

const char* to_string(PieceKind k) {
  switch (k) {
    case PieceKind::copy: return "copy";
    case PieceKind::cylinder: return "cylinder";
    case PieceKind::cone: return "cone";
    case PieceKind::base: return "base";
  }
  return "?";
}

int StoverObject::piece_index(int degree, PieceKind kind, Index element) const {
  const auto it = keys.find({degree, kind, element});
  return it == keys.end() ? -1 : it->second;
}

SimplicialMap StoverObject::piece_map(int p) const {
  const StoverPiece& piece = pieces[p];
  if (piece.kind == PieceKind::base) return constant_map(point(), y);
  if (spaces.empty()) throw StructuralError("Stover object was built from truncated data only");
  return spaces[piece.degree]->as_map(piece.level(), piece.element);
}

namespace {

Simplex collapsed(int dim) { return Simplex{0, static_cast<std::uint16_t>(dim), masks_with_popcount(dim, dim).front()}; }

std::shared_ptr<const MappingSpace> space_over(const SourcePtr& source, const SetPtr& y, const EnumerationOptions& options) {
  return std::make_shared<const MappingSpace>(mapping_space(source, y, 1, options));
}

std::vector<SourcePtr> sources_for(const std::vector<SetPtr>& generators) {
  std::vector<SourcePtr> out;
  for (const SetPtr& b : generators) out.push_back(std::make_shared<const SourceFamily>(b, 1));
  return out;
}

// Glue one end of a cylinder onto a copy, or onto input 0 (a point) when collapsing.
void glue_end(std::vector<Gluing>& glue, const SourceFamily& src, int cylinder, int end, int target, bool collapse) {
  const SimplicialSet& copy = *src.level(0).space;
  const SimplicialMap& coface = src.coface(1, end);
  for (CellId c = 0; c < copy.size(); ++c) {
    const int dim = copy.cell(c).dim;
    glue.push_back({cylinder, coface.image[c], collapse ? 0 : target, collapse ? collapsed(dim) : nondegenerate(c, dim)});
  }
}

std::string describe_cell(const StoverObject* tags, CellId c) {
  std::ostringstream os;
  os << "cell " << c;
  if (tags && c < tags->built.tags.size() && !tags->built.tags[c].empty()) {
    const auto [p, pc] = tags->built.tags[c].front();
    const StoverPiece& piece = tags->pieces[p];
    os << " (" << to_string(piece.kind) << " " << piece.element << " of degree " << piece.degree << ", cell " << pc
       << ")";
  }
  return os.str();
}

std::string describe_simplex(const Simplex& s) {
  std::ostringstream os;
  os << s.cell << "/" << s.dim << "/" << s.degens;
  return os.str();
}

void attach_counit(StoverObject& out) {
  std::vector<SimplicialMap> pieces;
  for (int p = 0; p < static_cast<int>(out.pieces.size()); ++p) pieces.push_back(out.piece_map(p));
  out.counit = assemble_from_pieces(out, out.y, pieces);
}

}  // namespace

std::vector<SetPtr> stover_generators(SetPtr a, int i_max) {
  std::vector<SetPtr> out{a};
  for (int i = 1; i <= i_max; ++i) out.push_back(realize(a, FormalObject::generator().suspended(i))->summands.front());
  return out;
}

StoverObject stover_from_truncation(SetPtr a, const std::vector<SourcePtr>& sources,
                                    const std::vector<TruncatedObject>& truncations,
                                    std::optional<std::pair<int, int>> only) {
  if (sources.size() != truncations.size()) throw StructuralError("one truncation per suspension degree expected");
  StoverObject out;
  out.a = a;
  out.i_max = static_cast<int>(truncations.size()) - 1;
  out.sources = sources;
  out.truncations = truncations;
  for (const SourcePtr& s : sources) out.generators.push_back(s->a());
  std::vector<SetPtr> inputs;
  auto add = [&](int i, int cls, PieceKind kind, Index e) {
    out.keys[{i, kind, e}] = static_cast<int>(out.pieces.size());
    out.pieces.push_back({i, cls, kind, e});
    inputs.push_back(sources[i]->level(kind == PieceKind::copy ? 0 : 1).space);
  };
  for (int i = 0; i <= out.i_max; ++i) {
    const TruncatedObject& t = truncations[i];
    const HomotopyClassTable& classes = out.classes.emplace_back(homotopy_classes(t));
    for (int cls = 0; cls < classes.count(); ++cls) {
      if (only && *only != std::pair{i, cls}) continue;
      for (Index f : classes.members(cls)) add(i, cls, PieceKind::copy, f);
      for (Index F = 0; F < t.k1; ++F) {
        if (classes.class_of[t.d0[F]] == cls) add(i, cls, PieceKind::cylinder, F);
      }
    }
  }
  // The end B ⋊ {1}, reached by delta^0, restricts F to d_0 F; B ⋊ {0} to d_1 F.
  std::vector<Gluing> glue;
  for (int p = 0; p < static_cast<int>(out.pieces.size()); ++p) {
    const StoverPiece& piece = out.pieces[p];
    if (p > 0) glue.push_back({0, nondegenerate(inputs[0]->basepoint(), 0), p, nondegenerate(inputs[p]->basepoint(), 0)});
    if (piece.kind != PieceKind::cylinder) continue;
    const TruncatedObject& t = truncations[piece.degree];
    glue_end(glue, *sources[piece.degree], p, 0, out.piece_index(piece.degree, PieceKind::copy, t.d0[piece.element]), false);
    glue_end(glue, *sources[piece.degree], p, 1, out.piece_index(piece.degree, PieceKind::copy, t.d1[piece.element]), false);
  }
  out.built = colimit(inputs, glue);
  return out;
}

StoverObject stover_from_truncation(SetPtr a, const std::vector<TruncatedObject>& truncations) {
  return stover_from_truncation(a, sources_for(stover_generators(a, static_cast<int>(truncations.size()) - 1)),
                                truncations);
}

StoverObject stover_comonad(const StoverObject& like, SetPtr y, const EnumerationOptions& options) {
  std::vector<std::shared_ptr<const MappingSpace>> spaces;
  std::vector<TruncatedObject> truncations;
  for (const SourcePtr& s : like.sources) {
    spaces.push_back(space_over(s, y, options));
    truncations.push_back(rho(spaces.back()->table));
  }
  StoverObject out = stover_from_truncation(like.a, like.sources, truncations);
  out.y = std::move(y);
  out.spaces = std::move(spaces);
  attach_counit(out);
  return out;
}

StoverObject stover_comonad(SetPtr a, SetPtr y, int i_max, const EnumerationOptions& options) {
  StoverObject like;
  like.a = a;
  like.sources = sources_for(stover_generators(a, i_max));
  return stover_comonad(like, std::move(y), options);
}

ElementaryStoverObject elementary_stover(SetPtr b, SetPtr y, int phi, const EnumerationOptions& options) {
  const std::vector<SourcePtr> sources{std::make_shared<const SourceFamily>(b, 1)};
  auto space = space_over(sources.front(), y, options);
  const TruncatedObject t = rho(space->table);
  const HomotopyClassTable classes = homotopy_classes(t);
  if (phi < 0 || phi >= classes.count()) throw StructuralError("no homotopy class with id " + std::to_string(phi));
  ElementaryStoverObject out;
  out.b = b;
  out.phi = phi;
  out.maps = classes.members(phi);
  for (const auto& [ends, witnesses] : classes.witnesses) {
    if (classes.class_of[ends.first] == phi) out.homotopies[ends] = witnesses;
  }
  out.object = stover_from_truncation(b, sources, {t}, std::pair{0, phi});
  out.object.y = y;
  out.object.spaces = {space};
  attach_counit(out.object);
  return out;
}

SimplicialMap assemble_from_pieces(const StoverObject& src, SetPtr target, const std::vector<SimplicialMap>& piece_maps) {
  try {
    return map_from_colimit(src.built, std::move(target), piece_maps);
  } catch (const StructuralError& e) {
    throw StructuralError(std::string("Stover pieces disagree: ") + e.what());
  }
}

SimplicialMap stover_functor(const StoverObject& from, const StoverObject& to, const SimplicialMap& g) {
  if (from.i_max != to.i_max) throw StructuralError("Stover objects with different suspension cuts");
  std::vector<SimplicialMap> pieces;
  for (int p = 0; p < static_cast<int>(from.pieces.size()); ++p) {
    const StoverPiece& piece = from.pieces[p];
    const Index e = to.spaces[piece.degree]->index_of(piece.level(), compose(g, from.piece_map(p)));
    pieces.push_back(to.built.legs[to.piece_index(piece.degree, piece.kind, e)]);
  }
  return assemble_from_pieces(from, to.space(), pieces);
}

SimplicialMap comultiplication(const StoverObject& ly, const StoverObject& lly) {
  if (lly.y.get() != ly.space().get()) throw StructuralError("comultiplication needs L_A applied to L_A Y");
  std::vector<SimplicialMap> pieces;
  for (int p = 0; p < static_cast<int>(ly.pieces.size()); ++p) {
    const StoverPiece& piece = ly.pieces[p];
    const Index e = lly.spaces[piece.degree]->index_of(piece.level(), ly.built.legs[p]);
    pieces.push_back(lly.built.legs[lly.piece_index(piece.degree, piece.kind, e)]);
  }
  return assemble_from_pieces(ly, lly.space(), pieces);
}

LawCheck compare_on_cells(const std::string& name, const SimplicialMap& f, const SimplicialMap& g,
                          const StoverObject* tags) {
  LawCheck out{name, true, {}};
  if (f.image.size() != g.image.size()) {
    out.pass = false;
    out.witness = "maps have different sources";
    return out;
  }
  for (CellId c = 0; c < f.image.size(); ++c) {
    if (f.image[c] != g.image[c]) {
      out.pass = false;
      out.witness = describe_cell(tags, c) + ": " + describe_simplex(f.image[c]) + " vs " + describe_simplex(g.image[c]);
      break;
    }
  }
  return out;
}

bool ComonadLawReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const LawCheck& c) { return c.pass; });
}

ComonadLawReport check_comonad_laws(SetPtr a, SetPtr y, int i_max, bool coassociativity,
                                    const EnumerationOptions& options) {
  const StoverObject ly = stover_comonad(a, y, i_max, options);
  const StoverObject lly = stover_comonad(ly, ly.space(), options);
  const SimplicialMap mu = comultiplication(ly, lly);
  const SimplicialMap id = identity_map(ly.space());
  ComonadLawReport report;
  report.cells = ly.space()->size();
  report.checks.push_back(compare_on_cells("counit_left", compose(*lly.counit, mu), id, &ly));
  report.checks.push_back(compare_on_cells("counit_right", compose(stover_functor(lly, ly, *ly.counit), mu), id, &ly));
  if (coassociativity) {
    const StoverObject llly = stover_comonad(ly, lly.space(), options);
    const SimplicialMap mu_l = comultiplication(lly, llly);
    const SimplicialMap l_mu = stover_functor(lly, llly, mu);
    report.checks.push_back(compare_on_cells("coassociativity", compose(l_mu, mu), compose(mu_l, mu), &ly));
  }
  return report;
}

LawCheck check_functoriality(SetPtr a, const SimplicialMap& g, int i_max, const EnumerationOptions& options) {
  const StoverObject from = stover_comonad(a, g.source, i_max, options);
  const StoverObject to = stover_comonad(from, g.target, options);
  const SimplicialMap lg = stover_functor(from, to, g);
  return compare_on_cells("functoriality", compose(*to.counit, lg), compose(g, *from.counit), &from);
}

StoverObject stover_cogroup_variant(SetPtr a, SetPtr y, int i_max, bool cogroup, const EnumerationOptions& options) {
  if (!cogroup) throw StructuralError("the cone construction needs A flagged as a homotopy cogroup");
  if (pi0_count(*a) != 1) throw StructuralError("the cone construction is refused for a disconnected A");
  StoverObject out;
  out.a = a;
  out.i_max = i_max;
  out.y = y;
  out.generators = stover_generators(a, i_max);
  out.sources = sources_for(out.generators);
  std::vector<SetPtr> inputs{point()};
  out.pieces.push_back({0, -1, PieceKind::base, 0});
  for (int i = 0; i <= i_max; ++i) {
    out.spaces.push_back(space_over(out.sources[i], y, options));
    const TruncatedObject& t = out.truncations.emplace_back(rho(out.spaces.back()->table));
    const HomotopyClassTable& classes = out.classes.emplace_back(homotopy_classes(t));
    const Index zero = out.spaces.back()->table.basepoint(0);
    auto add = [&](int cls, PieceKind kind, Index e) {
      out.keys[{i, kind, e}] = static_cast<int>(out.pieces.size());
      out.pieces.push_back({i, cls, kind, e});
      inputs.push_back(out.sources[i]->level(kind == PieceKind::copy ? 0 : 1).space);
    };
    for (int cls = 0; cls < classes.count(); ++cls) {
      for (Index f : classes.members(cls)) {
        if (f != zero) add(cls, PieceKind::copy, f);
      }
      for (Index F = 0; F < t.k1; ++F) {
        if (t.d1[F] == zero && classes.class_of[t.d0[F]] == cls) add(cls, PieceKind::cone, F);
      }
    }
  }
  std::vector<Gluing> glue;
  for (int p = 1; p < static_cast<int>(out.pieces.size()); ++p) {
    const StoverPiece& piece = out.pieces[p];
    glue.push_back({0, nondegenerate(0, 0), p, nondegenerate(inputs[p]->basepoint(), 0)});
    if (piece.kind != PieceKind::cone) continue;
    const SourceFamily& src = *out.sources[piece.degree];
    const Index top = out.truncations[piece.degree].d0[piece.element];
    const bool null = top == out.spaces[piece.degree]->table.basepoint(0);
    glue_end(glue, src, p, 0, null ? 0 : out.piece_index(piece.degree, PieceKind::copy, top), null);
    glue_end(glue, src, p, 1, 0, true);
  }
  out.built = colimit(inputs, glue);
  attach_counit(out);
  return out;
}

bool CounitResolutionReport::pass() const {
  return copies && cylinders &&
         std::all_of(degrees.begin(), degrees.end(), [](const Degree& d) { return d.surjective; });
}

CounitResolutionReport check_counit_resolution(const StoverObject& ly, const EnumerationOptions& options) {
  if (!ly.counit) throw StructuralError("counit resolution needs a Stover object over some Y");
  CounitResolutionReport report;
  report.copies = report.cylinders = true;
  for (int p = 0; p < static_cast<int>(ly.pieces.size()); ++p) {
    const StoverPiece& piece = ly.pieces[p];
    if (piece.kind == PieceKind::base) continue;
    const bool ok = compose(*ly.counit, ly.built.legs[p]) == ly.piece_map(p);
    (piece.kind == PieceKind::copy ? report.copies : report.cylinders) &= ok;
  }
  for (int i = 0; i <= ly.i_max; ++i) {
    const MappingSpace& down = *ly.spaces[i];
    const auto up = space_over(ly.sources[i], ly.space(), options);
    const LevelMap eps = postcompose(*up, down, tabulate_map(*up->ez_target, *down.ez_target, *ly.counit));
    const HomotopyClassTable up_classes = homotopy_classes(up->table);
    const HomotopyClassTable& down_classes = ly.classes[i];
    CounitResolutionReport::Degree d;
    d.i = i;
    d.source_classes = up_classes.count();
    d.target_classes = down_classes.count();
    d.surjective = true;
    for (int cls = 0; cls < down_classes.count(); ++cls) {
      const Index f = down_classes.representative[cls];
      const int p = ly.piece_index(i, PieceKind::copy, f);
      if (p < 0) {
        d.surjective = false;
        continue;
      }
      const Index lift = up->index_of(0, ly.built.legs[p]);
      d.lifts.push_back(lift);
      if (eps.at[0][lift] != f) d.surjective = false;
    }
    report.degrees.push_back(std::move(d));
  }
  return report;
}

}  // namespace mapalg
