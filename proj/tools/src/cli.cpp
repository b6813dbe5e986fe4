#include "raneykit/cli.hpp"

#include <filesystem>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "raneykit/cantor.hpp"
#include "raneykit/harness.hpp"
#include "raneykit/text_format.hpp"

namespace raneykit {
namespace {

/// Errors the user can fix by changing the command line or the input text.
bool is_usage_error(ErrorCode code) {
  return code == ErrorCode::ParseError || code == ErrorCode::UnresolvedReference || code == ErrorCode::SizeLimit;
}

/// A structure named on the command line as `file` or `file:name`.
struct Item {
  Workspace ws;
  Workspace::Kind kind;
  std::string name;
};

Item load_item(const std::string& ref) {
  std::string path = ref;
  std::string name;
  if (!std::filesystem::exists(ref))
    if (const auto colon = ref.rfind(':'); colon != std::string::npos) {
      path = ref.substr(0, colon);
      name = ref.substr(colon + 1);
    }
  Item item;
  item.ws.load_file(path);
  if (item.ws.order.empty()) throw Error(ErrorCode::ParseError, path + ": no structures");
  if (name.empty()) {
    item.kind = item.ws.order.back().first;
    item.name = item.ws.order.back().second;
    return item;
  }
  for (const auto& [kind, n] : item.ws.order)
    if (n == name) {
      item.kind = kind;
      item.name = n;
      return item;
    }
  throw Error(ErrorCode::UnresolvedReference, path + ": no structure named '" + name + "'");
}

const char* kind_word(Workspace::Kind k) {
  switch (k) {
    case Workspace::Kind::Lattice: return "lattice";
    case Workspace::Kind::Algebra: return "mtalgebra";
    case Workspace::Kind::Extension: return "raney";
    case Workspace::Kind::Morphism: return "morphism";
    case Workspace::Kind::ExtMorphism: return "extmorphism";
    case Workspace::Kind::LatticeMap: return "latticemap";
  }
  return "?";
}

Error wrong_kind(const Item& item, const std::string& wanted) {
  return Error(ErrorCode::PreconditionUnmet,
               "'" + item.name + "' is a " + kind_word(item.kind) + ", expected " + wanted);
}

std::string names_of(const FiniteLattice& l, const Subset& s) {
  std::string out;
  s.for_each([&](Elem e) { out += (out.empty() ? "" : " ") + l.name(e); });
  return out.empty() ? "-" : out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_report(const ValidationReport& report, const FiniteLattice& dom, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& c : report.checks) width = std::max(width, c.id.size());
  for (const auto& c : report.checks) {
    out << c.id << std::string(width - c.id.size() + 2, ' ') << (c.pass ? "pass" : "FAIL");
    if (!c.pass) {
      if (!c.witness.empty()) {
        out << "  at";
        for (Elem e : c.witness) out << " " << (e < dom.size() ? dom.name(e) : std::to_string(e));
      }
      if (!c.detail.empty()) out << "  (" << c.detail << ")";
    }
    out << "\n";
  }
}

// ---- validate -----------------------------------------------------------------------

int cmd_validate(const std::string& path, std::ostream& out) {
  Workspace ws;
  ws.load_file(path);
  bool valid = true;
  for (const auto& [kind, name] : ws.order) {
    out << kind_word(kind) << " " << name << ": ";
    switch (kind) {
      case Workspace::Kind::Lattice: {
        const auto& l = *ws.lattice(name);
        out << l.size() << " elements, distributive " << yes_no(is_distributive(l)) << ", boolean "
            << yes_no(is_boolean(l)) << "\n";
        break;
      }
      case Workspace::Kind::Algebra: {
        const auto& m = *ws.algebra(name);
        out << m.size() << " elements, " << m.opens().count() << " opens, T0 " << yes_no(is_T0(m)) << ", TD "
            << yes_no(is_TD(m)) << "\n";
        break;
      }
      case Workspace::Kind::Extension: {
        const auto& r = *ws.extension(name);
        out << r.size() << " elements, subframe of " << r.subframe().count() << "\n";
        break;
      }
      case Workspace::Kind::Morphism: {
        const auto& f = ws.morphism(name);
        const bool mt = check_mt_morphism(f).ok();
        const bool prox = check_proximity_morphism(f).ok();
        const bool raney = check_raney_morphism(f).ok();
        out << "mt " << yes_no(mt) << ", proximity " << yes_no(prox) << ", raney " << yes_no(raney) << "\n";
        valid = valid && (mt || prox || raney);
        break;
      }
      case Workspace::Kind::ExtMorphism: {
        const bool ok = check_ext_morphism(ws.ext_morphism(name)).ok();
        out << "extension morphism " << yes_no(ok) << "\n";
        valid = valid && ok;
        break;
      }
      case Workspace::Kind::LatticeMap: {
        const bool ok = is_bounded_lattice_hom(ws.lattice_map(name));
        out << "bounded lattice homomorphism " << yes_no(ok) << "\n";
        valid = valid && ok;
        break;
      }
    }
  }
  out << (valid ? "valid" : "invalid") << "\n";
  return valid ? kExitOk : kExitInvalid;
}

// ---- constructions ------------------------------------------------------------------

int cmd_envelope(const std::string& ref, std::ostream& out) {
  const Item item = load_item(ref);
  if (item.kind != Workspace::Kind::Lattice) throw wrong_kind(item, "lattice");
  const auto env = funayama_envelope_frame_with_embedding(item.ws.lattice(item.name));
  const MTAlgebra& m = *env.algebra;
  const FiniteLattice& b = m.lattice();
  const std::string name = "F(" + item.name + ")";
  out << "# Funayama envelope of " << item.name << ": " << b.size() << " elements\n";
  out << "# box:";
  for (Elem x = 0; x < m.size(); ++x) out << " " << b.name(x) << "->" << b.name(m.box(x));
  out << "\n# opens: " << names_of(b, m.opens()) << "\n";
  out << "# embedding:";
  for (Elem x = 0; x < env.embedding.map.size(); ++x)
    out << " " << env.embedding.dom->name(x) << "->" << b.name(env.embedding(x));
  out << "\n\n" << print_lattice(b, name + ".base") << "\n" << print_algebra(m, name, name + ".base");
  return kExitOk;
}

int cmd_classify(const std::string& ref, std::ostream& out) {
  const Item item = load_item(ref);
  if (item.kind != Workspace::Kind::Algebra) throw wrong_kind(item, "mtalgebra");
  const MTAlgebra& m = *item.ws.algebra(item.name);
  const FiniteLattice& l = m.lattice();
  const auto& c = m.classes();
  out << "algebra " << item.name << " (" << m.size() << " elements)\n";
  out << "opens: " << names_of(l, c.opens) << "\n";
  out << "closeds: " << names_of(l, c.closeds) << "\n";
  out << "saturated: " << names_of(l, c.saturated) << "\n";
  out << "locally-closed: " << names_of(l, c.locally_closed) << "\n";
  out << "generated-boolean: " << names_of(l, c.gen_boolean) << "\n";
  out << "T0: " << yes_no(is_T0(m)) << "\n";
  out << "TD: " << yes_no(is_TD(m)) << "\n";
  return kExitOk;
}

int cmd_check_morphism(const std::string& ref, const std::string& as, std::ostream& out) {
  const Item item = load_item(ref);
  if (item.kind != Workspace::Kind::Morphism) throw wrong_kind(item, "morphism");
  const MorphismTable& f = item.ws.morphism(item.name);
  const ValidationReport report = as == "mt"          ? check_mt_morphism(f)
                                  : as == "proximity" ? check_proximity_morphism(f)
                                                      : check_raney_morphism(f);
  out << "morphism " << item.name << " as " << as << "\n";
  print_report(report, f.dom->lattice(), out);
  out << (report.ok() ? "valid" : "invalid") << "\n";
  return report.ok() ? kExitOk : kExitInvalid;
}

int cmd_compose(const std::string& gref, const std::string& fref, const std::string& op, std::ostream& out) {
  const Item g = load_item(gref);
  const Item f = load_item(fref);
  if (g.kind != Workspace::Kind::Morphism) throw wrong_kind(g, "morphism");
  if (f.kind != Workspace::Kind::Morphism) throw wrong_kind(f, "morphism");
  const auto& gm = g.ws.morphism(g.name);
  const auto& fm = f.ws.morphism(f.name);
  MorphismTable r = op == "star" ? star(gm, fm) : star_prox(gm, fm);
  r.name = g.name + (op == "star" ? "*" : "**") + f.name;
  out << print_morphism_document(r);
  return kExitOk;
}

int cmd_functor(const std::string& which, const std::string& ref, std::ostream& out) {
  const Item item = load_item(ref);
  const Workspace& ws = item.ws;
  using K = Workspace::Kind;
  if (which == "R") {
    if (item.kind == K::Algebra) {
      out << print_extension_document(*functor_R_obj(ws.algebra(item.name)));
    } else if (item.kind == K::Morphism) {
      auto h = functor_R_mor(ws.morphism(item.name));
      h.name = "R(" + item.name + ")";
      out << print_ext_morphism_document(h);
    } else {
      throw wrong_kind(item, "mtalgebra or morphism");
    }
  } else if (which == "F") {
    if (item.kind == K::Extension) {
      out << print_algebra_document(*functor_F_obj(ws.extension(item.name)));
    } else if (item.kind == K::ExtMorphism) {
      auto f = functor_F_mor(ws.ext_morphism(item.name));
      f.name = "F(" + item.name + ")";
      out << print_morphism_document(f);
    } else {
      throw wrong_kind(item, "raney or extmorphism");
    }
  } else if (which == "I") {
    if (item.kind == K::Algebra) {
      out << print_algebra_document(*ws.algebra(item.name));
    } else if (item.kind == K::Morphism) {
      auto f = functor_I(ws.morphism(item.name));
      f.name = "I(" + item.name + ")";
      out << print_morphism_document(f);
    } else {
      throw wrong_kind(item, "mtalgebra or morphism");
    }
  } else {
    if (item.kind == K::Extension) {
      const auto& r = *ws.extension(item.name);
      out << print_lattice(induced_lattice(r.coframe(), r.subframe()), "U(" + item.name + ")");
    } else if (item.kind == K::ExtMorphism) {
      out << print_lattice_map_document(functor_U(ws.ext_morphism(item.name)), "U(" + item.name + ")");
    } else {
      throw wrong_kind(item, "raney or extmorphism");
    }
  }
  return kExitOk;
}

int cmd_laws(std::size_t max_atoms, std::uint64_t seed, const std::string& format,
             const std::vector<std::string>& laws, std::ostream& out) {
  CorpusOptions options;
  options.max_atoms = max_atoms;
  options.seed = seed;
  const auto report = run_suite(generate_corpus(options), laws);
  out << (format == "kv" ? report.key_value() : report.text());
  return report.ok() ? kExitOk : kExitInvalid;
}

// ---- cantor ---------------------------------------------------------------------------

using cantor::CantorPoint;

std::string show(const CantorPoint& x) {
  std::ostringstream s;
  s << x.to_string() << " = " << x.value();
  return s.str();
}

int cmd_cantor_demo(std::ostream& out) {
  using namespace cantor;
  const auto third = CantorPoint::parse("0.0(2)");
  const auto two_thirds = CantorPoint::parse("0.2(0)");
  out << "L1 is the Cantor set, read as ternary expansions 0.a1a2a3... with digits 0 and 2.\n"
      << "Points here have eventually constant digits; 0.a1...an(2) are the left endpoints.\n\n"
      << "Left endpoint " << show(third) << " is covered by " << show(cover_of(third)) << ".\n"
      << "L2 removes the left endpoints. Its nucleus j moves each left endpoint to its cover:\n"
      << "  j(" << third.to_string() << ") = " << nucleus_j(third).to_string() << "\n"
      << "  j(" << two_thirds.to_string() << ") = " << nucleus_j(two_thirds).to_string() << "\n\n"
      << "In a chain, a -> b is 1 when a <= b and b otherwise:\n"
      << "  " << two_thirds.to_string() << " -> " << third.to_string() << " = "
      << heyting(two_thirds, third).to_string() << "\n"
      << "  " << third.to_string() << " -> " << two_thirds.to_string() << " = "
      << heyting(third, two_thirds).to_string() << "\n\n";
  const auto x = CantorPoint::parse("0.2(0)");
  out << "The truncations of " << x.to_string() << " are left endpoints descending to it:\n ";
  for (const auto& t : truncation_chain(x, 5)) out << " " << t.to_string();
  out << "\nTheir images under j are covers that still descend to " << x.to_string()
      << ", so j keeps this meet: " << (check_j_truncation(x) ? "yes" : "no") << "\n\n";
  const auto a = CantorPoint::parse("0.22(0)");
  const auto b = CantorPoint::parse("0.2(0)");
  const auto w = witness_left_endpoint(a, b);
  out << "O(a) meet C(b) for a = " << a.to_string() << ", b = " << b.to_string() << " is [b, a) together with 1.\n"
      << "It holds the left endpoint " << w.to_string() << ", which is not in L2.\n"
      << "Every nontrivial locally closed sublocale does the same, so the only one inside L2 is {1}.\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite MT-algebras, Raney extensions and their morphisms", "raneykit"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string file, item, g, f, as = "raney", op = "star", functor, format = "text";
  std::size_t max_atoms = 3;
  std::uint64_t seed = 1;
  std::vector<std::string> laws;

  auto* validate = app.add_subcommand("validate", "Parse a file and validate every structure in it");
  validate->add_option("file", file, "Input file")->required();
  validate->callback([&] { action = [&] { return cmd_validate(file, out); }; });

  auto* envelope = app.add_subcommand("envelope", "Funayama envelope of a finite frame");
  envelope->add_option("frame", item, "file or file:name")->required();
  envelope->callback([&] { action = [&] { return cmd_envelope(item, out); }; });

  auto* classify = app.add_subcommand("classify", "Element classes and separation flags");
  classify->add_option("mtalgebra", item, "file or file:name")->required();
  classify->callback([&] { action = [&] { return cmd_classify(item, out); }; });

  auto* check = app.add_subcommand("check-morphism", "Per-axiom morphism report");
  check->add_option("morphism", item, "file or file:name")->required();
  check->add_option("--as", as, "Morphism kind")->check(CLI::IsMember({"mt", "proximity", "raney"}));
  check->callback([&] { action = [&] { return cmd_check_morphism(item, as, out); }; });

  auto* compose = app.add_subcommand("compose", "Compose two morphisms");
  compose->add_option("g", g, "Outer morphism")->required();
  compose->add_option("f", f, "Inner morphism")->required();
  compose->add_option("--op", op, "Composition")->check(CLI::IsMember({"star", "star-prox"}));
  compose->callback([&] { action = [&] { return cmd_compose(g, f, op, out); }; });

  auto* fun = app.add_subcommand("functor", "Apply R, F, I or U");
  fun->add_option("functor", functor, "R, F, I or U")->required()->check(CLI::IsMember({"R", "F", "I", "U"}));
  fun->add_option("item", item, "file or file:name")->required();
  fun->callback([&] { action = [&] { return cmd_functor(functor, item, out); }; });

  auto* suite = app.add_subcommand("laws", "Run the law suite over the generated corpus");
  suite->add_option("--max-atoms", max_atoms, "Largest carrier, in atoms")->check(CLI::Range(0, 4));
  suite->add_option("--seed", seed, "Sampling seed");
  suite->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "kv"}));
  suite->add_option("--law", laws, "Run only these laws");
  suite->callback([&] { action = [&] { return cmd_laws(max_atoms, seed, format, laws, out); }; });

  std::string x, y;
  auto* cantor_cmd = app.add_subcommand("cantor", "Points of the Cantor chain and the nucleus j");
  cantor_cmd->require_subcommand(1);
  auto point = [](const std::string& s) { return CantorPoint::parse(s); };
  auto unary = [&](const char* name, const char* help, std::function<std::string(const CantorPoint&)> fn) {
    auto* sub = cantor_cmd->add_subcommand(name, help);
    sub->add_option("x", x, "Point such as 0.02(2)")->required();
    sub->callback([&, fn] { action = [&, fn] { out << fn(point(x)) << "\n"; return kExitOk; }; });
  };
  auto binary = [&](const char* name, const char* help, std::function<std::string(const CantorPoint&, const CantorPoint&)> fn) {
    auto* sub = cantor_cmd->add_subcommand(name, help);
    sub->add_option("a", x, "First point")->required();
    sub->add_option("b", y, "Second point")->required();
    sub->callback([&, fn] { action = [&, fn] { out << fn(point(x), point(y)) << "\n"; return kExitOk; }; });
  };
  unary("show", "Canonical form and value", [](const CantorPoint& p) {
    return show(p) + (cantor::is_left_endpoint(p) ? "  left endpoint" : "") + (cantor::in_fixpoints(p) ? "  in L2" : "");
  });
  unary("j", "Apply the nucleus", [](const CantorPoint& p) { return cantor::nucleus_j(p).to_string(); });
  unary("cover", "Cover of a left endpoint", [](const CantorPoint& p) { return cantor::cover_of(p).to_string(); });
  binary("compare", "Order of two points", [](const CantorPoint& a, const CantorPoint& b) {
    const auto o = cantor::compare(a, b);
    return std::string(o == cantor::Order::LT ? "<" : o == cantor::Order::EQ ? "=" : ">");
  });
  binary("heyting", "Relative pseudocomplement a -> b",
         [](const CantorPoint& a, const CantorPoint& b) { return cantor::heyting(a, b).to_string(); });
  binary("witness", "Left endpoint in [b, a)",
         [](const CantorPoint& a, const CantorPoint& b) { return cantor::witness_left_endpoint(a, b).to_string(); });
  auto* demo = cantor_cmd->add_subcommand("demo", "Walk through the example");
  demo->callback([&] { action = [&] { return cmd_cantor_demo(out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_usage_error(e.code()) ? kExitUsage : kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace raneykit
