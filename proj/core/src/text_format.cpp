#include "raneykit/text_format.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

namespace raneykit {

std::size_t max_elements() {
  if (const char* env = std::getenv("RANEYKIT_MAX_ELEMS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 4096;
}

namespace {

using Kind = Workspace::Kind;

std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

struct Block {
  Line header;
  std::map<std::string, std::pair<std::size_t, std::vector<std::string>>> fields;  // key -> (line, values)
};

class Loader {
 public:
  Loader(Workspace& ws, std::string source) : ws_(ws), source_(std::move(source)) {}

  [[noreturn]] void fail(ErrorCode code, std::size_t line, const std::string& msg) const {
    throw Error(code, source_ + ":" + std::to_string(line) + ": " + msg);
  }

  void run(std::string_view text) {
    std::optional<Block> current;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t end = std::min(text.find('\n', pos), text.size());
      std::string_view raw = text.substr(pos, end - pos);
      pos = end + 1;
      ++number;
      if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      auto words = tokens(raw);
      if (words.empty()) continue;

      const std::string& head = words[0];
      if (head == "lattice" || head == "mtalgebra" || head == "raney" || head == "morphism" || head == "extmorphism" ||
          head == "latticemap") {
        if (current) finish(*current);
        current = Block{{number, std::move(words)}, {}};
        continue;
      }
      if (!current) fail(ErrorCode::ParseError, number, "expected a block header, got '" + head + "'");
      if (head.size() < 2 || head.back() != ':')
        fail(ErrorCode::ParseError, number, "expected '<field>:', got '" + head + "'");
      const std::string key = head.substr(0, head.size() - 1);
      auto& [line, values] = current->fields[key];
      if (line != 0 && key != "covers" && key != "map")
        fail(ErrorCode::ParseError, number, "field '" + key + "' given twice");
      if (line == 0) line = number;
      values.insert(values.end(), words.begin() + 1, words.end());
    }
    if (current) finish(*current);
  }

 private:
  const std::vector<std::string>& field(const Block& b, const std::string& key, std::size_t* line = nullptr) const {
    const auto it = b.fields.find(key);
    if (it == b.fields.end())
      fail(ErrorCode::ParseError, b.header.number, "block '" + b.header.words[0] + "' is missing '" + key + ":'");
    if (line) *line = it->second.first;
    return it->second.second;
  }

  void allow_fields(const Block& b, std::initializer_list<std::string_view> keys) const {
    for (const auto& [key, entry] : b.fields) {
      bool known = false;
      for (auto k : keys) known = known || key == k;
      if (!known) fail(ErrorCode::ParseError, entry.first, "unknown field '" + key + "'");
    }
  }

  std::string declared_name(const Block& b) const {
    const auto& w = b.header.words;
    if (w.size() < 2) fail(ErrorCode::ParseError, b.header.number, "'" + w[0] + "' needs a name");
    if (ws_.contains(w[1])) fail(ErrorCode::ParseError, b.header.number, "name '" + w[1] + "' is already defined");
    return w[1];
  }

  template <class Ptr>
  Ptr resolve(const std::map<std::string, Ptr>& table, const std::string& name, const char* what, std::size_t line) const {
    const auto it = table.find(name);
    if (it == table.end()) fail(ErrorCode::UnresolvedReference, line, std::string("unknown ") + what + " '" + name + "'");
    return it->second;
  }

  Elem element(const FiniteLattice& l, const std::string& name, std::size_t line) const {
    const auto e = l.find(name);
    if (!e) fail(ErrorCode::UnresolvedReference, line, "unknown element '" + name + "'");
    return *e;
  }

  Subset elements(const FiniteLattice& l, const std::vector<std::string>& names, std::size_t line) const {
    Subset s(Bits(l.size()));
    for (const auto& n : names) s.insert(element(l, n, line));
    return s;
  }

  /// Runs a validator and prefixes its error with the block's line.
  template <class F>
  auto validated(std::size_t line, F&& build) const {
    try {
      return build();
    } catch (const Error& e) {
      const std::string what = e.what();
      const std::string message = what.substr(to_string(e.code()).size() + 2);
      throw Error(e.code(), source_ + ":" + std::to_string(line) + ": " + message, e.witness());
    }
  }

  void finish(const Block& b) {
    const std::string& kind = b.header.words[0];
    if (kind == "lattice") finish_lattice(b);
    else if (kind == "mtalgebra") finish_algebra(b);
    else if (kind == "raney") finish_extension(b);
    else finish_arrow(b);
  }

  void finish_lattice(const Block& b) {
    const std::string name = declared_name(b);
    if (b.header.words.size() != 2) fail(ErrorCode::ParseError, b.header.number, "expected 'lattice <name>'");
    allow_fields(b, {"elements", "covers"});
    std::size_t line = 0;
    const auto& names = field(b, "elements", &line);
    if (names.empty()) fail(ErrorCode::ParseError, line, "a lattice needs at least one element");
    if (names.size() > max_elements())
      fail(ErrorCode::SizeLimit, line,
           std::to_string(names.size()) + " elements exceed the cap of " + std::to_string(max_elements()));
    std::map<std::string, Elem> index;
    for (const auto& n : names) {
      if (n.find('<') != std::string::npos || n.find("->") != std::string::npos)
        fail(ErrorCode::ParseError, line, "element name '" + n + "' may not contain '<' or '->'");
      if (!index.emplace(n, static_cast<Elem>(index.size())).second)
        fail(ErrorCode::ParseError, line, "duplicate element '" + n + "'");
    }
    std::vector<Bits> rows(names.size(), Bits(names.size()));
    if (const auto it = b.fields.find("covers"); it != b.fields.end()) {
      for (const auto& c : it->second.second) {
        const auto lt = c.find('<');
        if (lt == std::string::npos || lt == 0 || lt + 1 == c.size())
          fail(ErrorCode::ParseError, it->second.first, "expected '<lower><<upper>', got '" + c + "'");
        const auto lo = index.find(c.substr(0, lt));
        const auto hi = index.find(c.substr(lt + 1));
        if (lo == index.end() || hi == index.end())
          fail(ErrorCode::UnresolvedReference, it->second.first, "cover '" + c + "' names an unknown element");
        rows[lo->second].set(hi->second);
      }
    }
    auto l = validated(b.header.number, [&] {
      return std::make_shared<const FiniteLattice>(validate_lattice(reflexive_transitive_closure(std::move(rows)), names));
    });
    ws_.lattices.emplace(name, std::move(l));
    ws_.order.emplace_back(Kind::Lattice, name);
  }

  void finish_algebra(const Block& b) {
    const std::string name = declared_name(b);
    if (b.header.words.size() != 2) fail(ErrorCode::ParseError, b.header.number, "expected 'mtalgebra <name>'");
    allow_fields(b, {"base", "opens"});
    std::size_t base_line = 0, opens_line = 0;
    const auto& base = field(b, "base", &base_line);
    if (base.size() != 1) fail(ErrorCode::ParseError, base_line, "expected 'base: <lattice>'");
    const auto l = resolve(ws_.lattices, base[0], "lattice", base_line);
    const auto opens = elements(*l, field(b, "opens", &opens_line), opens_line);
    auto m = validated(b.header.number, [&] { return from_subframe(l, opens, name); });
    ws_.algebras.emplace(name, std::move(m));
    ws_.order.emplace_back(Kind::Algebra, name);
  }

  void finish_extension(const Block& b) {
    const std::string name = declared_name(b);
    if (b.header.words.size() != 2) fail(ErrorCode::ParseError, b.header.number, "expected 'raney <name>'");
    allow_fields(b, {"coframe", "subframe"});
    std::size_t c_line = 0, s_line = 0;
    const auto& c = field(b, "coframe", &c_line);
    if (c.size() != 1) fail(ErrorCode::ParseError, c_line, "expected 'coframe: <lattice>'");
    const auto l = resolve(ws_.lattices, c[0], "lattice", c_line);
    const auto sub = elements(*l, field(b, "subframe", &s_line), s_line);
    auto r = validated(b.header.number, [&] { return validate_extension(l, sub, name); });
    ws_.extensions.emplace(name, std::move(r));
    ws_.order.emplace_back(Kind::Extension, name);
  }

  /// Table of an arrow block between carriers `dom` and `cod`.
  std::vector<Elem> arrow_map(const Block& b, const FiniteLattice& dom, const FiniteLattice& cod) const {
    std::size_t line = 0;
    const auto& entries = field(b, "map", &line);
    std::vector<Elem> map(dom.size(), 0);
    std::vector<bool> seen(dom.size(), false);
    for (const auto& e : entries) {
      const auto arrow = e.find("->");
      if (arrow == std::string::npos || arrow == 0 || arrow + 2 == e.size())
        fail(ErrorCode::ParseError, line, "expected '<elem>-><elem>', got '" + e + "'");
      const Elem a = element(dom, e.substr(0, arrow), line);
      if (seen[a]) fail(ErrorCode::ParseError, line, "element '" + e.substr(0, arrow) + "' is mapped twice");
      seen[a] = true;
      map[a] = element(cod, e.substr(arrow + 2), line);
    }
    for (Elem a = 0; a < dom.size(); ++a)
      if (!seen[a]) fail(ErrorCode::ParseError, line, "no image for '" + dom.name(a) + "'");
    return map;
  }

  void finish_arrow(const Block& b) {
    const std::string name = declared_name(b);
    const auto& w = b.header.words;
    if (w.size() != 6 || w[2] != ":" || w[4] != "->")
      fail(ErrorCode::ParseError, b.header.number, "expected '" + w[0] + " <name> : <dom> -> <cod>'");
    allow_fields(b, {"map"});
    const std::size_t at = b.header.number;
    if (w[0] == "morphism") {
      const auto dom = resolve(ws_.algebras, w[3], "algebra", at);
      const auto cod = resolve(ws_.algebras, w[5], "algebra", at);
      ws_.morphisms.emplace(name, MorphismTable{dom, cod, arrow_map(b, dom->lattice(), cod->lattice()), name});
      ws_.order.emplace_back(Kind::Morphism, name);
    } else if (w[0] == "extmorphism") {
      const auto dom = resolve(ws_.extensions, w[3], "extension", at);
      const auto cod = resolve(ws_.extensions, w[5], "extension", at);
      ws_.ext_morphisms.emplace(name, ExtMorphism{dom, cod, arrow_map(b, dom->coframe(), cod->coframe()), name});
      ws_.order.emplace_back(Kind::ExtMorphism, name);
    } else {
      const auto dom = resolve(ws_.lattices, w[3], "lattice", at);
      const auto cod = resolve(ws_.lattices, w[5], "lattice", at);
      ws_.lattice_maps.emplace(name, LatticeMap{dom, cod, arrow_map(b, *dom, *cod)});
      ws_.order.emplace_back(Kind::LatticeMap, name);
    }
  }

  Workspace& ws_;
  std::string source_;
};

template <class T>
const T& lookup(const std::map<std::string, T>& table, const std::string& name, const char* what) {
  const auto it = table.find(name);
  if (it == table.end()) throw Error(ErrorCode::UnresolvedReference, std::string("unknown ") + what + " '" + name + "'");
  return it->second;
}

std::string join_names(const FiniteLattice& l, const Subset& s) {
  std::string out;
  s.for_each([&](Elem e) { out += " " + l.name(e); });
  return out;
}

std::string or_default(const std::string& name, const char* fallback) { return name.empty() ? fallback : name; }

}  // namespace

bool Workspace::contains(const std::string& name) const {
  return lattices.count(name) || algebras.count(name) || extensions.count(name) || morphisms.count(name) ||
         ext_morphisms.count(name) || lattice_maps.count(name);
}

LatticePtr Workspace::lattice(const std::string& name) const { return lookup(lattices, name, "lattice"); }
AlgebraPtr Workspace::algebra(const std::string& name) const { return lookup(algebras, name, "algebra"); }
ExtensionPtr Workspace::extension(const std::string& name) const { return lookup(extensions, name, "extension"); }
const MorphismTable& Workspace::morphism(const std::string& name) const { return lookup(morphisms, name, "morphism"); }
const ExtMorphism& Workspace::ext_morphism(const std::string& name) const {
  return lookup(ext_morphisms, name, "extension morphism");
}
const LatticeMap& Workspace::lattice_map(const std::string& name) const { return lookup(lattice_maps, name, "lattice map"); }

void Workspace::load(std::string_view text, const std::string& source) { Loader(*this, source).run(text); }

void Workspace::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  load(buf.str(), path);
}

namespace {

std::string arrow(const char* kind, const std::string& name, const std::string& dom_name, const std::string& cod_name,
                  const FiniteLattice& dom, const FiniteLattice& cod, const std::vector<Elem>& map) {
  std::string out = std::string(kind) + " " + name + " : " + dom_name + " -> " + cod_name + "\nmap:";
  for (Elem a = 0; a < map.size(); ++a) out += " " + dom.name(a) + "->" + cod.name(map[a]);
  return out + "\n";
}

}  // namespace

std::string print_lattice(const FiniteLattice& l, const std::string& name) {
  std::string out = "lattice " + name + "\nelements:";
  for (const auto& n : l.names()) out += " " + n;
  out += "\ncovers:";
  for (auto [a, b] : covers(l)) out += " " + l.name(a) + "<" + l.name(b);
  return out + "\n";
}

std::string print_algebra(const MTAlgebra& m, const std::string& name, const std::string& base_name) {
  return "mtalgebra " + name + "\nbase: " + base_name + "\nopens:" + join_names(m.lattice(), m.opens()) + "\n";
}

std::string print_extension(const RaneyExtension& r, const std::string& name, const std::string& coframe_name) {
  return "raney " + name + "\ncoframe: " + coframe_name + "\nsubframe:" + join_names(r.coframe(), r.subframe()) + "\n";
}

std::string print_morphism(const MorphismTable& f, const std::string& name, const std::string& dom_name,
                           const std::string& cod_name) {
  return arrow("morphism", name, dom_name, cod_name, f.dom->lattice(), f.cod->lattice(), f.map);
}

std::string print_ext_morphism(const ExtMorphism& h, const std::string& name, const std::string& dom_name,
                               const std::string& cod_name) {
  return arrow("extmorphism", name, dom_name, cod_name, h.dom->coframe(), h.cod->coframe(), h.map);
}

std::string print_lattice_map(const LatticeMap& h, const std::string& name, const std::string& dom_name,
                              const std::string& cod_name) {
  return arrow("latticemap", name, dom_name, cod_name, *h.dom, *h.cod, h.map);
}

namespace {

std::string algebra_document(const MTAlgebra& m, const std::string& name) {
  const std::string base = name + ".base";
  return print_lattice(m.lattice(), base) + "\n" + print_algebra(m, name, base);
}

}  // namespace

std::string print_algebra_document(const MTAlgebra& m) { return algebra_document(m, or_default(m.name(), "m")); }

std::string print_extension_document(const RaneyExtension& r) {
  const std::string name = or_default(r.name(), "r");
  const std::string base = name + ".coframe";
  return print_lattice(r.coframe(), base) + "\n" + print_extension(r, name, base);
}

std::string print_morphism_document(const MorphismTable& f) {
  const std::string name = or_default(f.name, "f");
  const std::string dom = or_default(f.dom->name(), "dom");
  if (same_algebra(f.dom, f.cod)) return algebra_document(*f.dom, dom) + "\n" + print_morphism(f, name, dom, dom);
  std::string cod = or_default(f.cod->name(), "cod");
  if (cod == dom) cod += "'";
  return algebra_document(*f.dom, dom) + "\n" + algebra_document(*f.cod, cod) + "\n" + print_morphism(f, name, dom, cod);
}

std::string print_ext_morphism_document(const ExtMorphism& h) {
  const std::string name = or_default(h.name, "h");
  const std::string dom = or_default(h.dom->name(), "dom");
  auto document = [](const RaneyExtension& r, const std::string& rname) {
    const std::string base = rname + ".coframe";
    return print_lattice(r.coframe(), base) + "\n" + print_extension(r, rname, base);
  };
  if (same_extension(h.dom, h.cod)) return document(*h.dom, dom) + "\n" + print_ext_morphism(h, name, dom, dom);
  std::string cod = or_default(h.cod->name(), "cod");
  if (cod == dom) cod += "'";
  return document(*h.dom, dom) + "\n" + document(*h.cod, cod) + "\n" + print_ext_morphism(h, name, dom, cod);
}

std::string print_lattice_map_document(const LatticeMap& h, const std::string& name) {
  const std::string dom = name + ".dom";
  const std::string cod = name + ".cod";
  return print_lattice(*h.dom, dom) + "\n" + print_lattice(*h.cod, cod) + "\n" + print_lattice_map(h, name, dom, cod);
}

}  // namespace raneykit
