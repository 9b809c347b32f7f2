#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "homhopf/admissible.hpp"
#include "homhopf/cli.hpp"
#include "homhopf/corpus.hpp"
#include "json.hpp"

namespace homhopf::cli {

using nlohmann::json;

namespace {

json witness_json(const Witness& w) {
  json lhs = json::array(), rhs = json::array();
  for (const auto& s : w.lhs) lhs.push_back(s.to_string());
  for (const auto& s : w.rhs) rhs.push_back(s.to_string());
  return json{{"column", w.column},     {"basis_tuple", w.basis_tuple}, {"row", w.row},
              {"row_name", w.row_name}, {"lhs", lhs},                   {"rhs", rhs},
              {"codomain_basis", w.codomain_basis}};
}

json to_json(const CheckReport& r) {
  json j{{"axiom", r.axiom}, {"pass", r.pass}};
  j["witness"] = r.witness ? witness_json(*r.witness) : json(nullptr);
  json parts = json::array();
  for (const auto& p : r.parts) parts.push_back(to_json(p));
  j["parts"] = parts;
  j["notes"] = r.notes;
  return j;
}

/// Renders f as one line per domain basis vector: "f(b) = c1·e1 + c2·e2".
std::string map_text(const std::string& label, const LinearMap& f) {
  std::ostringstream os;
  for (std::size_t c = 0; c < f.cols(); ++c) {
    os << label << "(" << f.domain().basis_name(c) << ") = ";
    bool any = false;
    for (std::size_t r = 0; r < f.rows(); ++r) {
      const Scalar& v = f.at(r, c);
      if (v.is_zero()) continue;
      os << (any ? " + " : "") << "(" << v << ")·" << f.codomain().basis_name(r);
      any = true;
    }
    if (!any) os << "0";
    os << "\n";
  }
  return os.str();
}

struct Outcome {
  std::string command;
  std::vector<CheckReport> reports;
  std::string text;  ///< extra human-readable output (maps, messages)
  bool pass() const {
    for (const auto& r : reports) {
      if (!r.pass) return false;
    }
    return true;
  }
};

int emit(const Outcome& o, bool as_json, std::ostream& out) {
  if (as_json) {
    json reports = json::array();
    for (const auto& r : o.reports) reports.push_back(to_json(r));
    json j{{"command", o.command}, {"pass", o.pass()}, {"reports", reports}};
    if (!o.text.empty()) j["output"] = o.text;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : o.reports) out << render(r);
    out << o.text;
    out << (o.pass() ? "result: pass\n" : "result: FAIL\n");
  }
  return o.pass() ? exit_pass : exit_fail;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Model load(const std::string& path) { return Model(parse(read_file(path))); }

const BiproductBundle& need_biproduct(const Object& o) {
  if (const auto* b = std::get_if<BiproductBundle>(&o)) return *b;
  throw ShapeError("expected a biproduct bundle, found a " + kind_name(o), 0, 0);
}

/// Unknown check set for a kind of bundle.
[[noreturn]] void bad_set(const std::string& what, const Object& o) {
  throw ShapeError("no check set \"" + what + "\" for a " + kind_name(o), 0, 0);
}

Outcome run_check(const Object& o, std::string what) {
  Outcome out{"check", {}, {}};
  auto& rs = out.reports;
  if (const auto* a = std::get_if<HomAlgebra>(&o)) {
    if (what == "all" || what == "hom-algebra") rs.push_back(check_hom_algebra(*a));
    else bad_set(what, o);
  } else if (const auto* c = std::get_if<HomCoalgebra>(&o)) {
    if (what == "all" || what == "hom-coalgebra") rs.push_back(check_hom_coalgebra(*c));
    else bad_set(what, o);
  } else if (std::holds_alternative<HomBialgebra>(o) || std::holds_alternative<HomHopf>(o)) {
    const auto* h = std::get_if<HomHopf>(&o);
    const HomBialgebra& b = h ? h->bialgebra() : std::get<HomBialgebra>(o);
    if (what == "all") what = h ? "hom-hopf" : "hom-bialgebra";
    if (what == "hom-algebra") rs.push_back(check_hom_algebra(b.algebra()));
    else if (what == "hom-coalgebra") rs.push_back(check_hom_coalgebra(b.coalgebra()));
    else if (what == "hom-bialgebra") rs.push_back(check_hom_bialgebra(b));
    else if (h && what == "antipode") rs.push_back(check_antipode(*h));
    else if (h && what == "hom-hopf") rs.push_back(check_hom_hopf(*h));
    else if (what == "comodule") rs.push_back(check_comodule(Coaction::regular(b)));
    else bad_set(what, o);
  } else if (const auto* act = std::get_if<ModuleAction>(&o)) {
    if (what == "all" || what == "hom-module") rs.push_back(check_hom_module(*act));
    if (what == "all" || what == "weak-module-algebra") rs.push_back(check_weak_module_algebra(*act));
    if (rs.empty()) bad_set(what, o);
  } else if (const auto* co = std::get_if<Coaction>(&o)) {
    if (what == "comodule") rs.push_back(check_comodule(*co));
    else if (what == "all" || what == "comodule-coalgebra") rs.push_back(check_comodule_coalgebra(*co));
    else bad_set(what, o);
  } else if (const auto* sg = std::get_if<Cocycle>(&o)) {
    if (what != "all" && what != "convolution-invertible") bad_set(what, o);
    CheckReport r = CheckReport::ok("convolution-invertible");
    try {
      Cocycle inv = cocycle_inverse(*sg);
      out.text = map_text("σ⁻¹", *inv.inverse());
    } catch (const NotInvertible& e) {
      r.pass = false;
      r.notes.push_back(e.what());
    }
    rs.push_back(r);
  } else if (const auto* cp = std::get_if<CrossedProductSpec>(&o)) {
    if (what == "all" || what == "crossed-conditions") rs.push_back(check_crossed_cocycle_conditions(*cp));
    if (what == "all" || what == "crossed-algebra") rs.push_back(check_hom_algebra(crossed_product(*cp)));
    if (what == "smash-algebra") rs.push_back(check_hom_algebra(smash_product(cp->action, cp->m)));
    if (what == "module-algebra") rs.push_back(check_weak_module_algebra(cp->action));
    if (rs.empty()) bad_set(what, o);
  } else {
    const BiproductBundle& bp = std::get<BiproductBundle>(o);
    if (what == "all" || what == "radford") rs.push_back(check_radford_conditions(bp.spec));
    if (what == "twisted-comodule-cocycle") rs.push_back(check_twisted_comodule_cocycle(bp.spec));
    if (what == "comodule-coalgebra") rs.push_back(check_comodule_coalgebra(bp.spec.coaction));
    if (what == "biproduct-bialgebra") rs.push_back(build_biproduct(bp.spec, true).report);
    if (what == "cocycle-identities") rs.push_back(check_cocycle_convolution_identities(bp.spec.crossed));
    if (what == "sigma-antipode") {
      if (!bp.antipode_h) throw ShapeError("sigma-antipode needs H to be a hopf bundle", 0, 0);
      rs.push_back(check_sigma_antipode(bp.spec.crossed.H, bp.spec.crossed.sigma, *bp.antipode_h));
    }
    if (rs.empty()) bad_set(what, o);
  }
  return out;
}

CrossedProductSpec crossed_of(const Object& o) {
  if (const auto* cp = std::get_if<CrossedProductSpec>(&o)) return *cp;
  if (const auto* bp = std::get_if<BiproductBundle>(&o)) return bp->spec.crossed;
  throw ShapeError("expected a crossed or biproduct bundle, found a " + kind_name(o), 0, 0);
}

Outcome run_build(const std::string& what, const Object& o, std::optional<long> m, std::optional<long> k,
                  bool bypass, Exporter& ex) {
  Outcome out{"build " + what, {}, {}};
  CrossedProductSpec spec = crossed_of(o);
  spec = spec.with_grid(m.value_or(spec.m), k.value_or(spec.k));
  if (what == "crossed") {
    HomAlgebra a = crossed_product(spec);
    out.reports.push_back(check_crossed_cocycle_conditions(spec));
    out.reports.push_back(check_hom_algebra(a));
    ex.set_main(ex.add_algebra("crossed", a));
  } else if (what == "smash") {
    HomAlgebra a = smash_product(spec.action, spec.m);
    out.reports.push_back(check_hom_algebra(a));
    ex.set_main(ex.add_algebra("smash", a));
  } else {
    BiproductBundle bp = need_biproduct(o);
    bp.spec.crossed = spec;
    Biproduct b = build_biproduct(bp.spec, bypass);
    out.reports.push_back(b.conditions);
    out.reports.push_back(b.report);
    if (b.conditions.pass && bp.antipode_h && bp.antipode_a) {
      LinearMap s = biproduct_antipode(bp.spec, *bp.antipode_h, *bp.antipode_a);
      HomHopf hopf(b.bialgebra, s);
      out.reports.push_back(check_antipode(hopf));
      ex.set_main(ex.add_hopf("biproduct", hopf));
    } else {
      ex.set_main(ex.add_bialgebra("biproduct", b.bialgebra));
    }
  }
  return out;
}

Outcome run_antipode(const Object& o) {
  Outcome out{"antipode", {}, {}};
  const BiproductBundle& bp = need_biproduct(o);
  Biproduct b = build_biproduct(bp.spec);
  LinearMap id = LinearMap::identity(b.bialgebra.space());
  LinearMap conv = convolution_inverse(id, b.bialgebra.coalgebra(), b.bialgebra.algebra());
  LinearMap s = conv;
  if (bp.antipode_h && bp.antipode_a) {
    s = biproduct_antipode(bp.spec, *bp.antipode_h, *bp.antipode_a);
    out.reports.push_back(maps_equal(s, conv, "antipode-is-convolution-inverse"));
  }
  out.reports.push_back(check_antipode(HomHopf(b.bialgebra, s)));
  out.text = map_text("S", s);
  return out;
}

MappingSystem system_of(const Object& o) {
  const BiproductBundle& bp = need_biproduct(o);
  if (!bp.antipode_h) throw ShapeError("the acting bundle of the biproduct must be a hopf bundle", 0, 0);
  return canonical_system(bp.spec, *bp.antipode_h);
}

Outcome run_admissible(const Object& o) {
  Outcome out{"admissible", {}, {}};
  MappingSystem sys = system_of(o);
  out.reports.push_back(check_admissible(sys));
  out.reports.push_back(check_displayed_structures(sys));
  out.reports.push_back(check_cocycle_convolution_identities(sys.datum.crossed));
  return out;
}

Outcome run_iso(const Object& o) {
  Outcome out{"iso", {}, {}};
  SplitIsomorphism iso = split_isomorphism(system_of(o));
  out.reports.push_back(iso.report);
  out.text = map_text("f", iso.f) + map_text("g", iso.g);
  return out;
}

Outcome run_selftest() {
  Outcome out{"selftest", {}, {}};
  CheckReport all = CheckReport::ok("selftest");
  std::ostringstream text;
  for (const auto& c : selftest()) {
    CheckReport r = CheckReport::ok(c.name);
    r.pass = c.pass;
    if (!c.detail.empty()) r.notes.push_back(c.detail);
    all.parts.push_back(r);
    all.pass = all.pass && c.pass;
  }
  out.reports.push_back(all);
  return out;
}

}  // namespace

std::string report_json(const CheckReport& report) { return to_json(report).dump(2); }

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of monoidal Hom-Hopf structures", "homhopf"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable reports");

  std::string file, what = "all", bundle, out_path, target;
  long m_value = 0, k_value = 0;
  bool bypass = false;

  auto* check = app.add_subcommand("check", "Check the axioms of a bundle");
  check->add_option("file", file)->required();
  check->add_option("--what", what, "Axiom set (default: the full set for the bundle's kind)");
  check->add_option("--bundle", bundle, "Bundle name (default: the file's main bundle)");

  auto* build = app.add_subcommand("build", "Build a crossed product, smash product or biproduct");
  build->add_option("construction", target)->required()->check(CLI::IsMember({"crossed", "smash", "biproduct"}));
  build->add_option("file", file)->required();
  auto* m_opt = build->add_option("-m", m_value, "Parameter m (default: from the file)");
  auto* k_opt = build->add_option("-k", k_value, "Parameter k (default: from the file)");
  build->add_option("-o", out_path, "Output file (default: standard output)");
  build->add_option("--bundle", bundle);
  build->add_flag("--bypass", bypass, "Build the biproduct even when its conditions fail");

  auto* antipode = app.add_subcommand("antipode", "Biproduct antipode and its convolution identities");
  antipode->add_option("file", file)->required();
  antipode->add_option("--bundle", bundle);

  auto* admissible = app.add_subcommand("admissible", "Canonical admissible system of a biproduct");
  admissible->add_option("file", file)->required();
  admissible->add_option("--bundle", bundle);

  auto* iso = app.add_subcommand("iso", "Isomorphism between a biproduct and its split bialgebra");
  iso->add_option("file", file)->required();
  iso->add_option("--bundle", bundle);

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the corpus goldens");

  auto* export_cmd = app.add_subcommand("export", "Write a corpus structure in the file format");
  export_cmd->add_option("name", target)->required();
  export_cmd->add_option("-o", out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  }

  try {
    if (selftest_cmd->parsed()) return emit(run_selftest(), as_json, out);
    if (export_cmd->parsed()) {
      for (const auto& [name, f] : corpus_exports()) {
        if (name != target) continue;
        std::string text = serialize(f);
        if (out_path.empty()) {
          out << text;
        } else {
          std::ofstream o(out_path, std::ios::binary);
          if (!(o << text)) throw Error("cannot write " + out_path);
        }
        return exit_pass;
      }
      throw UnknownReference("no corpus export named \"" + target + "\"", 0, 0);
    }

    Model model = load(file);
    const Object& o = model.select(bundle);
    if (check->parsed()) return emit(run_check(o, what), as_json, out);
    if (antipode->parsed()) return emit(run_antipode(o), as_json, out);
    if (admissible->parsed()) return emit(run_admissible(o), as_json, out);
    if (iso->parsed()) return emit(run_iso(o), as_json, out);
    if (build->parsed()) {
      Exporter ex(model.file().field);
      std::optional<long> m, k;
      if (m_opt->count()) m = m_value;
      if (k_opt->count()) k = k_value;
      Outcome r = run_build(target, o, m, k, bypass, ex);
      std::string text = serialize(ex.file());
      if (out_path.empty()) {
        out << text;
        return emit(r, as_json, err);
      }
      std::ofstream f(out_path, std::ios::binary);
      if (!(f << text)) throw Error("cannot write " + out_path);
      return emit(r, as_json, out);
    }
  } catch (const ConditionsFail& e) {
    Outcome o{"conditions", {e.report()}, {}};
    emit(o, as_json, out);
    return exit_fail;
  } catch (const NotAdmissible& e) {
    Outcome o{"admissible", {e.report()}, {}};
    emit(o, as_json, out);
    return exit_fail;
  } catch (const IsoCheckFail& e) {
    Outcome o{"iso", {e.report()}, {}};
    emit(o, as_json, out);
    return exit_fail;
  } catch (const NotInvertible& e) {
    err << "error: " << e.what() << "\n";
    return exit_fail;
  } catch (const homhopf::Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  }
  return exit_input;
}

std::vector<std::pair<std::string, StructureFile>> corpus_exports() {
  std::vector<std::pair<std::string, StructureFile>> out;
  auto hopf = [&](const std::string& name, const HomHopf& h) {
    Exporter ex;
    ex.set_main(ex.add_hopf(name, h));
    out.emplace_back(name, ex.file());
  };
  hopf("h4", sweedler_h4_hom());
  hopf("sweedler", classical_sweedler());
  hopf("kc4", cyclic_group_algebra(4));

  for (const auto& e : biproduct_corpus()) {
    if (e.name != "radford" && e.name != "h4-sign" && e.name != "h4-cocycle-n1") continue;
    Exporter ex;
    ex.set_main(ex.add_biproduct(e.name, e.spec, e.antipode_h, e.antipode_a));
    out.emplace_back(e.name, ex.file());
  }

  {
    Exporter ex;
    ex.set_main(ex.add_crossed("h4-cocycle", h4_cocycle_example(Scalar(1), 0, -1), sweedler_h4_hom().antipode()));
    out.emplace_back("h4-cocycle", ex.file());
  }
  {
    StructureFile f;
    f.main = "example";
    f.bundles["example"] = BundleDecl{"cocycle-example", {{"reading", "unit"}}, {{"n", 2}, {"m", 1}, {"k", 0}}};
    out.emplace_back("h4-cocycle-generated", f);
  }
  return out;
}

}  // namespace homhopf::cli
