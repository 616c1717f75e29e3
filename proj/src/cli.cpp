#include "mapalg/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "mapalg/errors.hpp"
#include "mapalg/mapping_algebra.hpp"
#include "mapalg/monad.hpp"
#include "mapalg/stover.hpp"
#include "mapalg/tower.hpp"

namespace mapalg::cli {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::conditional: return "conditional";
  }
  return "fail";
}

void Report::add(std::string name, bool pass, std::string witness) {
  checks.push_back({std::move(name), pass ? Verdict::pass : Verdict::fail, std::move(witness)});
}

bool Report::pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.verdict == Verdict::fail; });
}

json Report::to_json() const {
  json cs = json::array();
  for (const Check& c : checks) {
    json j{{"name", c.name}, {"verdict", cli::to_string(c.verdict)}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    cs.push_back(j);
  }
  json out{{"command", command},
           {"caps", {{"dim_cap", caps.dim_cap}, {"levels", caps.levels}, {"sigma_max", caps.sigma_max}, {"budget", caps.budget}}},
           {"checks", cs}};
  if (!data.empty()) out["data"] = data;
  out["timing_ms"] = timing_ms ? json(*timing_ms) : json(nullptr);
  return out;
}

namespace {

struct Options {
  Caps caps;
  bool serial = false;
  bool timing = false;
  std::string out;
  std::vector<std::string> build_expr;
  std::string a = "s1", y = "s1", k, b = "A";
  std::string variant = "general";
  std::string kind = "dl";
  std::string suite;
  int stages = 1;
  bool mutate = false;

  EnumerationOptions enumeration() const { return {caps.budget, !serial}; }
};

void add_all(Report& r, const std::string& prefix, const std::vector<LawCheck>& checks) {
  for (const LawCheck& c : checks) r.add(prefix + c.name, c.pass, c.witness);
}

json level_json(const std::vector<LevelReport>& levels) {
  json out = json::array();
  for (const LevelReport& l : levels) {
    out.push_back({{"level", l.level}, {"source", l.left}, {"target", l.right}, {"injective", l.injective}, {"surjective", l.surjective}});
  }
  return out;
}

// Delta[1] with its endpoints identified.
SetPtr circle_quotient() {
  const CellId ends[] = {delta_cell(1, 1u), delta_cell(1, 2u)};
  return quotient(standard_simplex(1), ends).space;
}

void cmd_build(const Options& o, Report& r, std::vector<std::string>& notes, bool recap) {
  std::string expr;
  for (const std::string& s : o.build_expr) expr += (expr.empty() ? "" : " ") + s;
  SetPtr x = parse_catalog(expr);
  if (recap) {
    if (o.caps.dim_cap < x->dimension()) throw CapError("object has dimension " + std::to_string(x->dimension()) + " above --dim-cap");
    x = make_set(x->with_dim_cap(o.caps.dim_cap));
  }
  r.data["expression"] = expr;
  r.data["cells"] = json::array();
  for (int n = 0; n <= x->dimension(); ++n) r.data["cells"].push_back(x->count(n));
  const auto problems = validate(*x);
  r.add("validate", problems.empty(), problems.empty() ? "" : problems.front());
  const json j = object_to_json(*x);
  r.add("round_trip", object_to_json(*object_from_json(j)) == j);
  if (!o.out.empty()) {
    write_json(o.out, j);
    notes.push_back("wrote " + o.out);
  }
}

void cmd_map_space(const Options& o, Report& r) {
  SetPtr a = load_object(o.a), y = load_object(o.y);
  const MappingSpace m = mapping_space(a, y, o.caps.levels, o.enumeration());
  json counts = json::array();
  for (int n = 0; n <= m.table.top(); ++n) counts.push_back(m.table.size(n));
  r.data["counts"] = counts;
  const auto problems = check_identities(m.table);
  r.add("simplicial_identities", problems.empty(), problems.empty() ? "" : problems.front());
  if (m.table.top() >= 1) {
    const HomotopyClassTable classes = homotopy_classes(m.table);
    r.data["classes"] = {{"class_of", classes.class_of}, {"representatives", classes.representative}};
    json witnesses = json::array();
    for (const auto& [fg, ws] : classes.witnesses) {
      witnesses.push_back({{"d0", fg.first}, {"d1", fg.second}, {"simplices", ws}});
    }
    r.data["witnesses"] = witnesses;
  }
}

void cmd_algebra_eval(const Options& o, Report& r) {
  SetPtr a = load_object(o.a), y = load_object(o.y);
  const FormalObject b = FormalObject::parse(o.b);
  r.data["B"] = b.key();
  const RealizableAlgebra alg(a, y, o.caps.levels, b.max_degree(), o.enumeration());
  const auto cmp = alg.compare(b);
  r.data["levels"] = level_json(cmp.levels);
  r.add("realized_vs_evaluated", cmp.bijective());
}

void algebra_checks(Report& r, SetPtr a, SetPtr y, const std::string& name, int m, bool mutate,
                    const EnumerationOptions& options) {
  const AlgebraStructure s = realizable_algebra_structure(a, y, m, options);
  LevelMap eps = s.eps;
  if (mutate) {
    // Corrupt one value: the image of the first non-base unit at the top level.
    for (int n = m; n >= 0; --n) {
      const Index bp = s.x->table.basepoint(n);
      if (s.x->table.size(n) < 2) continue;
      const Index x = bp == 0 ? 1 : 0;
      eps.at[n][s.eta.at[n][x]] = bp;
      break;
    }
  }
  for (const AlgebraCheck& c : check_algebra(s, eps)) r.add(name + "." + c.name, c.pass, c.witness);
}

void cmd_algebra_monad(const Options& o, Report& r) {
  algebra_checks(r, load_object(o.a), load_object(o.y), "algebra", o.caps.levels, o.mutate, o.enumeration());
}

json stover_json(const StoverObject& s) {
  json pieces = json::array();
  for (const StoverPiece& p : s.pieces) {
    pieces.push_back({{"degree", p.degree}, {"class", p.cls}, {"kind", to_string(p.kind)}, {"element", p.element}});
  }
  json tags = json::array();
  for (const auto& t : s.built.tags) {
    json cell = json::array();
    for (const auto& [input, c] : t) cell.push_back({input, c});
    tags.push_back(cell);
  }
  return {{"object", object_to_json(*s.space())}, {"pieces", pieces}, {"tags", tags},
          {"counit", map_to_json(*s.counit, "L", "Y")}};
}

void cmd_stover(const Options& o, Report& r, std::vector<std::string>& notes) {
  SetPtr a = load_object(o.a), y = load_object(o.y);
  if (o.variant != "general" && o.variant != "cogroup") throw ParseError("unknown variant \"" + o.variant + "\"");
  const bool cogroup = o.variant == "cogroup";
  const StoverObject s = cogroup ? stover_cogroup_variant(a, y, o.caps.sigma_max, true, o.enumeration())
                                 : stover_comonad(a, y, o.caps.sigma_max, o.enumeration());
  r.data["variant"] = o.variant;
  r.data["pieces"] = s.pieces.size();
  r.data["cells"] = s.space()->size();
  const auto problems = validate(*s.space());
  r.add("object_valid", problems.empty(), problems.empty() ? "" : problems.front());
  const auto counit = validate(*s.counit);
  r.add("counit_valid", counit.empty(), counit.empty() ? "" : counit.front());
  if (!cogroup) {
    const CounitResolutionReport res = check_counit_resolution(s, o.enumeration());
    r.add("counit_on_copies", res.copies);
    r.add("counit_on_cylinders", res.cylinders);
    for (const auto& d : res.degrees) {
      r.add("counit_surjective.degree" + std::to_string(d.i), d.surjective,
            std::to_string(d.source_classes) + " -> " + std::to_string(d.target_classes) + " classes");
    }
  }
  if (!o.out.empty()) {
    write_json(o.out, stover_json(s));
    notes.push_back("wrote " + o.out);
  }
}

TowerKind tower_kind(const std::string& k) {
  if (k == "dl" || k == "dold_lashof") return TowerKind::dold_lashof;
  if (k == "stover") return TowerKind::stover;
  throw ParseError("unknown tower kind \"" + k + "\"");
}

void tower_checks(Report& r, const TowerState& s, const std::string& prefix) {
  for (std::size_t k = 1; k < s.stages.size(); ++k) add_all(r, prefix + "stage" + std::to_string(k) + ".", s.stages[k].checks);
}

void cmd_tower(const Options& o, Report& r, std::vector<std::string>& notes) {
  SetPtr a = load_object(o.a), y = load_object(o.y);
  const TowerKind kind = tower_kind(o.kind);
  TowerState s = start_tower(kind, a, y, o.caps.levels, o.caps.sigma_max, o.caps.dim_cap, o.enumeration());
  for (int k = 0; k < o.stages; ++k) s = tower_step(s);
  tower_checks(r, s, "");
  const RecoveryReport rec = recovery_report(s);
  json degrees = json::array();
  for (const auto& d : rec.degrees) {
    const std::string deg = ".degree" + std::to_string(d.i);
    r.add("surjective" + deg, d.surjective, std::to_string(d.stage_classes) + " -> " + std::to_string(d.target_classes) + " classes");
    r.checks.push_back({"injective" + deg, d.injective ? Verdict::pass : Verdict::conditional,
                        d.injective ? "" : "classes merge beyond the computed stages"});
    degrees.push_back({{"degree", d.i}, {"stage_classes", d.stage_classes}, {"target_classes", d.target_classes},
                       {"stabilized", d.stabilized}, {"lifts", d.lifts}});
  }
  for (const InjectivityWitness& w : rec.witnesses) {
    r.add("witness.stage" + std::to_string(w.stage) + ".degree" + std::to_string(w.degree), w.verified,
          std::to_string(w.g) + " ~ " + std::to_string(w.g2));
  }
  const bool stable = std::all_of(rec.degrees.begin(), rec.degrees.end(), [](const auto& d) { return d.stabilized; });
  // Stabilization of class tables is only evidence of an A-equivalence for
  // non-fibrant targets.
  r.checks.push_back({"a_equivalence", stable ? Verdict::conditional : Verdict::fail,
                      stable ? "class tables stabilized; targets are not fibrant" : "class tables still changing"});
  r.data["kind"] = to_string(kind);
  r.data["factorization"] = "mapping cylinder: front inclusion, collapse retraction with back section";
  r.data["degrees"] = degrees;
  r.data["levels"] = level_json(rec.levels);
  json sizes = json::array();
  for (const TowerStage& st : s.stages) sizes.push_back(st.z->size());
  r.data["stage_cells"] = sizes;
  if (!o.out.empty()) {
    const std::filesystem::path dir(o.out);
    for (std::size_t k = 0; k < s.stages.size(); ++k) {
      const std::string n = std::to_string(k);
      write_json((dir / ("Z" + n + ".json")).string(), object_to_json(*s.stages[k].z));
      write_json((dir / ("e" + n + ".json")).string(), map_to_json(s.stages[k].e, "Z" + n, "Y"));
      if (k > 0) {
        const std::string prev = std::to_string(k - 1);
        write_json((dir / ("i" + prev + ".json")).string(), map_to_json(s.stages[k].pushout->i(), "Z" + prev, "Z" + n));
      }
    }
    notes.push_back("wrote " + o.out);
  }
}

void suite_adjunction(const Options& o, Report& r, bool custom) {
  std::vector<std::tuple<std::string, std::string, SetPtr, SetPtr, SetPtr>> family;
  if (custom) {
    family.emplace_back(o.a, o.k, load_object(o.a), load_object(o.k), load_object(o.y));
  } else {
    for (const std::string a : {"s0", "s1"}) {
      for (const auto& [kn, kx] : {std::pair{std::string("pt"), point()}, std::pair{std::string("s0"), sphere(0)},
                                   std::pair{std::string("delta(1)/boundary"), circle_quotient()}}) {
        family.emplace_back(a, kn, parse_catalog(a), kx, sphere(1));
      }
    }
  }
  json sizes = json::array();
  for (const auto& [an, kn, a, k, x] : family) {
    const AdjunctionReport rep = adjunction_check(a, k, x, o.enumeration());
    const std::string p = "adjunction[" + an + "," + kn + "].";
    r.add(p + "bijection", rep.flat_lands && rep.bijection && rep.sharp_flat && rep.flat_sharp,
          std::to_string(rep.left) + " vs " + std::to_string(rep.right));
    r.add(p + "counit_factor", rep.counit_factor);
    r.add(p + "unit_factor", rep.unit_factor);
    r.add(p + "triangle_f", rep.triangle_f);
    r.add(p + "triangle_m", rep.triangle_m);
    sizes.push_back({{"A", an}, {"K", kn}, {"maps", rep.left}});
  }
  r.data["sizes"] = sizes;
}

std::vector<std::tuple<std::string, std::string, SetPtr, SetPtr>> pairs(
    const Options& o, bool custom, std::vector<std::pair<std::string, std::string>> defaults) {
  std::vector<std::tuple<std::string, std::string, SetPtr, SetPtr>> out;
  if (custom) defaults = {{o.a, o.y}};
  for (const auto& [a, y] : defaults) out.emplace_back(a, y, load_object(a), load_object(y));
  return out;
}

void run_suite(const Options& o, Report& r, bool custom) {
  const std::string& s = o.suite;
  if (s == "adjunction") return suite_adjunction(o, r, custom);
  if (s == "monad_algebra") {
    for (const auto& [an, yn, a, y] : pairs(o, custom, {{"s0", "s1"}, {"s1", "s1"}, {"s1", "pt"}})) {
      algebra_checks(r, a, y, "monad_algebra[" + an + "," + yn + "]", o.caps.levels, o.mutate, o.enumeration());
    }
    return;
  }
  if (s == "comonad") {
    for (const auto& [an, yn, a, y] : pairs(o, custom, {{"s0", "s0"}, {"s1", "pt"}})) {
      const ComonadLawReport rep = check_comonad_laws(a, y, 0, true, o.enumeration());
      add_all(r, "comonad[" + an + "," + yn + "].", rep.checks);
    }
    return;
  }
  if (s == "sigma_omega") {
    for (const auto& [an, yn, a, y] : pairs(o, custom, {{"s0", "s1"}, {"s0", "s2"}, {"s1", "s1"}, {"s1", "s2"}})) {
      const SigmaOmegaReport rep = verify_sigma_omega(a, y, o.caps.levels, o.enumeration());
      for (const LevelReport& l : rep.levels) {
        r.add("sigma_omega[" + an + "," + yn + "].level" + std::to_string(l.level), l.bijective(),
              std::to_string(l.left) + " -> " + std::to_string(l.right));
      }
    }
    return;
  }
  if (s == "tower_identities") {
    for (const auto& [an, yn, a, y] : pairs(o, custom, {{"s1", "s1"}})) {
      for (TowerKind kind : {TowerKind::dold_lashof, TowerKind::stover}) {
        const TowerState t = run_tower(kind, a, y, o.stages, o.caps.levels, 0, o.caps.dim_cap, o.enumeration());
        tower_checks(r, t, std::string("tower[") + to_string(kind) + "," + an + "," + yn + "].");
      }
    }
    return;
  }
  throw ParseError("unknown suite \"" + s + "\"");
}

void caps_options(CLI::App* app, Options& o) {
  app->add_option("--dim-cap", o.caps.dim_cap, "Dimension cap")->check(CLI::Range(0, 30));
  app->add_option("--levels", o.caps.levels, "Level cap m")->check(CLI::Range(0, 4));
  app->add_option("--sigma-max", o.caps.sigma_max, "Largest suspension degree")->check(CLI::Range(0, 3));
  app->add_option("--budget", o.caps.budget, "Enumeration node budget");
  app->add_flag("--serial", o.serial, "Disable parallel enumeration");
  app->add_flag("--timing", o.timing, "Record wall time in the report");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite mapping spaces, Stover objects and recovery towers"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::string> notes;

  auto* build = app.add_subcommand("build", "Build a catalog object and write it");
  build->add_option("expr", o.build_expr, "Catalog expression, e.g. `sphere 2` or `wedge(s1,s2)`")->required();
  build->add_option("--out", o.out, "Object file");
  caps_options(build, o);

  auto* ms = app.add_subcommand("map-space", "Enumerate map(A, Y) through the level cap");
  ms->add_option("--A", o.a, "Source object (file or catalog)")->required();
  ms->add_option("--Y", o.y, "Target object (file or catalog)")->required();
  ms->add_option("--out", o.out, "Report file");
  caps_options(ms, o);

  auto* alg = app.add_subcommand("algebra", "Mapping algebra and T_A-algebra checks");
  alg->require_subcommand(1);
  auto* eval = alg->add_subcommand("eval", "Compare X<B> with map(B, Y)");
  eval->add_option("--A", o.a, "Generator");
  eval->add_option("--Y", o.y, "Target")->required();
  eval->add_option("--B", o.b, "Formal object over A");
  eval->add_option("--out", o.out, "Report file");
  caps_options(eval, o);
  auto* monad = alg->add_subcommand("monad", "Check the T_A-algebra structure of map(A, Y)");
  monad->add_option("--A", o.a, "Generator");
  monad->add_option("--Y", o.y, "Target")->required();
  monad->add_flag("--mutate", o.mutate, "Corrupt one structure-map value");
  monad->add_option("--out", o.out, "Report file");
  caps_options(monad, o);

  auto* st = app.add_subcommand("stover", "Build L_A Y with its counit");
  st->add_option("--A", o.a, "Generator")->required();
  st->add_option("--Y", o.y, "Target")->required();
  st->add_option("--variant", o.variant, "general or cogroup");
  st->add_option("--out", o.out, "Output file with object, tags and counit");
  caps_options(st, o);

  auto* tw = app.add_subcommand("tower", "Run a recovery tower");
  tw->add_option("--kind", o.kind, "dl or stover");
  tw->add_option("--A", o.a, "Generator")->required();
  tw->add_option("--Y", o.y, "Target")->required();
  tw->add_option("--stages", o.stages, "Number of steps")->check(CLI::Range(0, 8));
  tw->add_option("--out", o.out, "Output directory");
  caps_options(tw, o);

  auto* cl = app.add_subcommand("check-laws", "Run a law suite");
  cl->add_option("--suite", o.suite, "adjunction, monad_algebra, comonad, sigma_omega or tower_identities")->required();
  auto* oa = cl->add_option("--A", o.a, "Generator (default: the standard family)");
  auto* oy = cl->add_option("--Y", o.y, "Target");
  auto* ok = cl->add_option("--K", o.k, "Second argument for the adjunction suite");
  cl->add_option("--stages", o.stages, "Tower steps for tower_identities")->check(CLI::Range(0, 8));
  cl->add_flag("--mutate", o.mutate, "Corrupt one structure-map value (monad_algebra)");
  cl->add_option("--out", o.out, "Report file");
  caps_options(cl, o);

  Report report;
  for (const std::string& a : args) report.command += (report.command.empty() ? "" : " ") + a;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kParseError;
  }
  if (cl->parsed() && o.suite == "tower_identities" && !cl->count("--stages")) o.stages = 2;
  report.caps = o.caps;

  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  std::string report_path;
  try {
    if (build->parsed()) {
      cmd_build(o, report, notes, build->count("--dim-cap") > 0);
    } else if (ms->parsed()) {
      cmd_map_space(o, report);
      report_path = o.out;
    } else if (eval->parsed()) {
      cmd_algebra_eval(o, report);
      report_path = o.out;
    } else if (monad->parsed()) {
      cmd_algebra_monad(o, report);
      report_path = o.out;
    } else if (st->parsed()) {
      cmd_stover(o, report, notes);
    } else if (tw->parsed()) {
      cmd_tower(o, report, notes);
      if (!o.out.empty()) report_path = (std::filesystem::path(o.out) / "report.json").string();
    } else if (cl->parsed()) {
      const bool custom = oa->count() || oy->count() || ok->count();
      if (o.suite == "adjunction" && custom && !(oa->count() && oy->count() && ok->count())) {
        throw ParseError("the adjunction suite needs all of --A, --K and --Y");
      }
      run_suite(o, report, custom);
      report_path = o.out;
    }
    code = report.pass() ? kOk : kLawViolation;
  } catch (const ParseError& e) {
    report.add("error", false, std::string("parse: ") + e.what());
    code = kParseError;
  } catch (const CapError& e) {
    report.add("error", false, std::string("cap: ") + e.what());
    code = kCapError;
  } catch (const BudgetError& e) {
    report.add("error", false, std::string("budget: ") + e.what());
    code = kCapError;
  } catch (const StructuralError& e) {
    report.add("error", false, std::string("structure: ") + e.what());
    code = kLawViolation;
  }
  if (o.timing) {
    report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  const json j = report.to_json();
  out << j.dump(2) << '\n';
  if (!report_path.empty()) write_json(report_path, j);
  for (const std::string& n : notes) err << n << '\n';
  if (code != kOk) {
    for (const Check& c : report.checks) {
      if (c.verdict == Verdict::fail) err << c.name << ": " << (c.witness.empty() ? "fail" : c.witness) << '\n';
    }
  }
  return code;
}

}  // namespace mapalg::cli
