#include "mapalg/io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>

#include "mapalg/constructions.hpp"
#include "mapalg/errors.hpp"

namespace mapalg {

namespace {

std::vector<std::string> cell_ids(const SimplicialSet& x) {
  std::vector<std::string> ids;
  if (x.has_labels()) {
    for (CellId c = 0; c < x.size(); ++c) ids.push_back(x.label(c));
    if (std::set<std::string>(ids.begin(), ids.end()).size() == ids.size()) return ids;
    ids.clear();
  }
  for (CellId c = 0; c < x.size(); ++c) ids.push_back(std::to_string(c));
  return ids;
}

json simplex_json(const Simplex& s, const std::vector<std::string>& ids) {
  return json{{"degens", DegeneracyWord::from_mask(s.degens).indices()}, {"target", ids[s.cell]}};
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad field \"") + key + "\": " + e.what());
  }
}

std::string id_string(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError("cell ids must be strings");
}

// target id and degeneracy word; the simplex dimension follows from both.
Simplex simplex_from(const json& j, const std::map<std::string, CellId>& index, const std::vector<int>& dims) {
  const std::string t = id_string(j.contains("target") ? j.at("target") : json());
  const auto it = index.find(t);
  if (it == index.end()) throw ParseError("unknown cell id \"" + t + "\"");
  const DegeneracyWord word(field<std::vector<int>>(j, "degens"));
  const int dim = dims[it->second] + static_cast<int>(word.indices().size());
  if (!word.empty() && word.indices().front() >= dim) throw ParseError("degeneracy index out of range");
  return Simplex{it->second, static_cast<std::uint16_t>(dim), word.mask()};
}

}  // namespace

json object_to_json(const SimplicialSet& x) {
  const auto ids = cell_ids(x);
  json cells = json::array();
  for (CellId c = 0; c < x.size(); ++c) {
    json faces = json::array();
    for (const Simplex& f : x.cell(c).faces) faces.push_back(simplex_json(f, ids));
    cells.push_back(json{{"id", ids[c]}, {"dim", x.cell(c).dim}, {"faces", faces}});
  }
  return json{{"dim_cap", x.dim_cap()}, {"basepoint", ids[x.basepoint()]}, {"cells", cells}};
}

SetPtr object_from_json(const json& j) {
  const auto raw = field<std::vector<json>>(j, "cells");
  // Cells are stored by dimension; keep the file order within a dimension.
  std::vector<std::size_t> order(raw.size());
  std::vector<int> raw_dims;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    order[k] = k;
    raw_dims.push_back(field<int>(raw[k], "dim"));
    if (raw_dims.back() < 0 || raw_dims.back() > kMaxSimplexDim) throw ParseError("bad cell dimension");
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) { return raw_dims[p] < raw_dims[q]; });
  std::map<std::string, CellId> index;
  std::vector<std::string> labels;
  std::vector<int> dims;
  for (std::size_t k : order) {
    const std::string id = id_string(raw[k].contains("id") ? raw[k].at("id") : json());
    if (!index.emplace(id, static_cast<CellId>(labels.size())).second) throw ParseError("duplicate cell id \"" + id + "\"");
    labels.push_back(id);
    dims.push_back(raw_dims[k]);
  }
  std::vector<Cell> cells;
  for (std::size_t k : order) {
    Cell cell{raw_dims[k], {}};
    const auto faces = raw[k].contains("faces") ? field<std::vector<json>>(raw[k], "faces") : std::vector<json>{};
    if (static_cast<int>(faces.size()) != (cell.dim == 0 ? 0 : cell.dim + 1)) {
      throw ParseError("cell \"" + labels[cells.size()] + "\" needs " + std::to_string(cell.dim == 0 ? 0 : cell.dim + 1) + " faces");
    }
    for (const json& f : faces) {
      const Simplex s = simplex_from(f, index, dims);
      if (s.dim != cell.dim - 1) throw ParseError("face of cell \"" + labels[cells.size()] + "\" has the wrong dimension");
      cell.faces.push_back(s);
    }
    cells.push_back(std::move(cell));
  }
  const std::string bp = id_string(j.contains("basepoint") ? j.at("basepoint") : json());
  const auto it = index.find(bp);
  if (it == index.end() || dims[it->second] != 0) throw ParseError("basepoint must be a vertex");
  const int cap = j.contains("dim_cap") ? field<int>(j, "dim_cap") : kDefaultDimCap;
  const int top = dims.empty() ? 0 : *std::max_element(dims.begin(), dims.end());
  if (cap < top) throw ParseError("dim_cap below the object's dimension");
  return make_set(std::move(cells), it->second, cap, std::move(labels));
}

json map_to_json(const SimplicialMap& f, const std::string& source_name, const std::string& target_name) {
  const auto src = cell_ids(*f.source), dst = cell_ids(*f.target);
  json assign = json::array();
  for (CellId c = 0; c < f.source->size(); ++c) {
    json a = simplex_json(f.image[c], dst);
    assign.push_back(json{{"cell", src[c]}, {"degens", a["degens"]}, {"target", a["target"]}});
  }
  return json{{"source", source_name}, {"target", target_name}, {"assign", assign}};
}

SimplicialMap map_from_json(const json& j, SetPtr source, SetPtr target) {
  std::map<std::string, CellId> src, dst;
  const auto src_ids = cell_ids(*source), dst_ids = cell_ids(*target);
  for (CellId c = 0; c < source->size(); ++c) src[src_ids[c]] = c;
  for (CellId c = 0; c < target->size(); ++c) dst[dst_ids[c]] = c;
  std::vector<int> dims;
  for (CellId c = 0; c < target->size(); ++c) dims.push_back(target->cell(c).dim);
  std::vector<std::optional<Simplex>> image(source->size());
  for (const json& a : field<std::vector<json>>(j, "assign")) {
    const std::string cell = id_string(a.contains("cell") ? a.at("cell") : json());
    const auto it = src.find(cell);
    if (it == src.end()) throw ParseError("unknown source cell \"" + cell + "\"");
    const Simplex s = simplex_from(a, dst, dims);
    if (s.dim != source->cell(it->second).dim) throw ParseError("image of \"" + cell + "\" has the wrong dimension");
    image[it->second] = s;
  }
  SimplicialMap f{source, target, {}};
  for (CellId c = 0; c < source->size(); ++c) {
    if (!image[c]) throw ParseError("no image for source cell \"" + src_ids[c] + "\"");
    f.image.push_back(*image[c]);
  }
  return f;
}

namespace {

class CatalogParser {
 public:
  explicit CatalogParser(std::string_view text) : text_(text) {}

  SetPtr parse() {
    SetPtr x = expression();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return x;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("catalog: " + what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool take(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!take(c)) fail(std::string("expected '") + c + "'");
  }

  std::string name() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  int number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 2) fail("expected a small natural number");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  SetPtr expression() {
    const std::string n = name();
    if (n == "point" || n == "pt") {
      if (take('(')) expect(')');
      return point();
    }
    if (n.size() == 2 && n[0] == 's' && std::isdigit(static_cast<unsigned char>(n[1]))) return sphere(n[1] - '0');
    if (n == "sphere" || n == "delta" || n == "boundary") {
      // Both `sphere(2)` and `sphere 2`.
      const bool paren = take('(');
      const int k = number();
      if (paren) expect(')');
      if (n == "sphere") return sphere(k);
      if (n == "delta") return standard_simplex(k);
      if (k < 1) fail("boundary needs n >= 1");
      return boundary(k);
    }
    if (n == "wedge") {
      expect('(');
      std::vector<SetPtr> parts{expression()};
      while (take(',')) parts.push_back(expression());
      expect(')');
      return wedge(parts).space;
    }
    if (n == "susp") {
      expect('(');
      SetPtr x = expression();
      int i = 1;
      if (take(',')) i = number();
      expect(')');
      return i == 0 ? x : suspension(x, i);
    }
    if (n == "product" || n == "smash" || n == "halfsmash") {
      expect('(');
      SetPtr x = expression();
      expect(',');
      SetPtr y = expression();
      expect(')');
      if (n == "product") return product(x, y).space;
      if (n == "smash") return smash_left(x, y).space;
      return half_smash_right(x, y).space;
    }
    fail("unknown constructor \"" + n + "\"");
  }
};

}  // namespace

SetPtr parse_catalog(std::string_view text) { return CatalogParser(text).parse(); }

SetPtr load_object(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw ParseError(arg + ": " + e.what());
    }
    return object_from_json(j);
  }
  return parse_catalog(arg);
}

void write_json(const std::string& path, const json& j) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace mapalg
