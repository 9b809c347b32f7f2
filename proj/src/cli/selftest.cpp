#include <sstream>

#include "homhopf/admissible.hpp"
#include "homhopf/cli.hpp"
#include "homhopf/corpus.hpp"

namespace homhopf::cli {

namespace {

/// Sweeps every nonzero-delta single-site mutation of one structure map; each must fail
/// check_hom_hopf with a witness that the pointwise oracle reproduces as unequal sides.
SelftestCase mutation_case(const std::string& label, const HomHopf& h, const std::string& which) {
  SelftestCase c{"mutation-witness " + label + " " + which, true, ""};
  const HomBialgebra& b = h.bialgebra();
  const LinearMap* target = nullptr;
  if (which == "mult") target = &b.mult();
  else if (which == "comult") target = &b.comult();
  else if (which == "unit") target = &b.unit();
  else if (which == "counit") target = &b.counit();
  else target = &h.antipode();
  std::size_t count = 0;
  for (std::size_t r = 0; r < target->rows(); ++r) {
    for (std::size_t col = 0; col < target->cols(); ++col) {
      LinearMap mutated = mutate(*target, r, col, Scalar(1));
      HomAlgebra alg = b.algebra();
      HomCoalgebra coalg = b.coalgebra();
      LinearMap s = h.antipode();
      if (which == "mult") alg = alg.with_mult(mutated);
      else if (which == "comult") coalg = coalg.with_comult(mutated);
      else if (which == "unit") alg = HomAlgebra(alg.space(), alg.mult(), mutated, alg.alpha());
      else if (which == "counit") coalg = HomCoalgebra(coalg.space(), coalg.comult(), mutated, coalg.gamma());
      else s = mutated;
      HomHopf m(HomBialgebra(alg, coalg), s);
      CheckReport report = check_hom_hopf(m);
      ++count;
      std::ostringstream site;
      site << which << "[" << r << "," << col << "]";
      if (report.pass) {
        c.pass = false;
        c.detail += site.str() + " not detected; ";
        continue;
      }
      const CheckReport* leaf = report.first_failure();
      if (!leaf || !leaf->witness || render(report).find("lhs = ") == std::string::npos) {
        c.pass = false;
        c.detail += site.str() + " has no printed witness; ";
        continue;
      }
      auto sides = reevaluate(m.bialgebra(), m.antipode(), leaf->axiom, *leaf->witness);
      if (!sides || sides->first != leaf->witness->lhs || sides->second != leaf->witness->rhs ||
          sides->first == sides->second) {
        c.pass = false;
        c.detail += site.str() + " witness for " + leaf->axiom + " does not re-evaluate; ";
      }
    }
  }
  if (c.pass) c.detail = std::to_string(count) + " mutations";
  return c;
}

bool round_trip(const StructureFile& f, std::string& detail) {
  std::string text = serialize(f);
  StructureFile back = parse(text);
  if (serialize(back) != text) {
    detail = "serialize(parse(text)) differs from text";
    return false;
  }
  return true;
}

}  // namespace

std::vector<SelftestCase> selftest() {
  std::vector<SelftestCase> out;
  auto add = [&](std::string name, bool pass, std::string detail = {}) {
    out.push_back(SelftestCase{std::move(name), pass, std::move(detail)});
  };
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(name, false, std::string("exception: ") + e.what());
    }
  };

  for (const auto& e : hopf_corpus()) {
    guarded("golden hom-hopf " + e.name, [&] {
      CheckReport r = check_hom_hopf(e.hopf);
      const CheckReport* f = r.first_failure();
      add("golden hom-hopf " + e.name, r.pass == e.expect_hom_hopf, f ? "first failure " + f->axiom : "");
    });
  }

  guarded("h4 equals twisted sweedler", [&] {
    HomHopf t = yau_twist(classical_sweedler(), sweedler_twist_map());
    HomHopf h = sweedler_h4_hom();
    add("h4 equals twisted sweedler",
        t.bialgebra().mult() == h.bialgebra().mult() && t.bialgebra().comult() == h.bialgebra().comult() &&
            t.antipode() == h.antipode() && t.alpha() == h.alpha());
  });

  for (const auto& fam : twist_families()) {
    std::size_t i = 0;
    for (const auto& phi : fam.involutions) {
      std::string name = "twist " + fam.name + " #" + std::to_string(i++);
      guarded(name, [&] { add(name, check_hom_hopf(yau_twist(fam.classical, phi)).pass); });
    }
  }

  for (long n : {0, 1, 2}) {
    for (auto reading : {SigmaReading::unit_multiple, SigmaReading::y_multiple}) {
      std::string name = "cocycle example n=" + std::to_string(n) +
                         (reading == SigmaReading::unit_multiple ? " unit" : " y") + " (m,k)=(0,-1),(1,0)";
      guarded(name, [&] {
        bool ok = true;
        for (auto [m, k] : {std::pair{0L, -1L}, std::pair{1L, 0L}}) {
          CrossedProductSpec spec = h4_cocycle_example(Scalar(n), m, k, reading);
          ok = ok && check_crossed_cocycle_conditions(spec).pass && check_hom_algebra(crossed_product(spec)).pass;
        }
        add(name, ok);
      });
    }
  }
  guarded("golden row-first table fails n=1", [&] {
    CrossedProductSpec spec =
        h4_cocycle_example(Scalar(1), 0, -1, SigmaReading::unit_multiple, TableOrientation::row_first);
    CheckReport cond = check_crossed_cocycle_conditions(spec);
    CheckReport alg = check_hom_algebra(crossed_product(spec));
    add("golden row-first table fails n=1", !cond.pass && !alg.pass);
  });
  guarded("cocycle n=0 is the smash product", [&] {
    CrossedProductSpec spec = h4_cocycle_example(Scalar(0), 0, -1);
    add("cocycle n=0 is the smash product", crossed_product(spec).mult() == smash_product(spec.action, 0).mult());
  });

  for (const auto& e : biproduct_corpus()) {
    std::string name = "biproduct " + e.name;
    guarded(name, [&] {
      CheckReport cond = check_radford_conditions(e.spec);
      if (cond.pass != e.expect_conditions) {
        add(name, false, "conditions verdict differs from golden");
        return;
      }
      Biproduct bp = build_biproduct(e.spec, true);
      if (!e.expect_conditions) {
        add(name, !bp.report.pass, "conditions fail and the bypassed biproduct is not a Hom-bialgebra");
        return;
      }
      LinearMap s = biproduct_antipode(e.spec, *e.antipode_h, *e.antipode_a);
      MappingSystem sys = canonical_system(e.spec, *e.antipode_h);
      bool ok = bp.report.pass && check_antipode(HomHopf(bp.bialgebra, s)).pass && check_admissible(sys).pass &&
                check_displayed_structures(sys).pass && split_isomorphism(sys).report.pass;
      add(name, ok);
    });
  }

  for (const auto& [name, f] : corpus_exports()) {
    guarded("round trip " + name, [&] {
      std::string detail;
      add("round trip " + name, round_trip(f, detail), detail);
    });
  }

  guarded("mutation witnesses", [&] {
    HomHopf h4 = sweedler_h4_hom();
    for (const char* which : {"unit", "counit", "mult", "comult", "antipode"}) {
      out.push_back(mutation_case("h4", h4, which));
    }
  });

  guarded("cocycle mutations", [&] {
    SelftestCase c{"cocycle mutations agree and carry witnesses", true, ""};
    CrossedProductSpec spec = h4_cocycle_example(Scalar(1), 0, -1);
    const LinearMap& sigma = spec.sigma.sigma();
    std::size_t count = 0;
    for (std::size_t r = 0; r < sigma.rows(); ++r) {
      for (std::size_t col = 0; col < sigma.cols(); ++col) {
        CrossedProductSpec mutated = spec;
        mutated.sigma = Cocycle(spec.H, spec.A, mutate(sigma, r, col, Scalar(1)));
        bool cond = check_crossed_cocycle_conditions(mutated).pass;
        HomAlgebra alg = crossed_product(mutated);
        CheckReport rep = check_hom_algebra(alg);
        ++count;
        if (cond != rep.pass) {
          c.pass = false;
          c.detail += "verdicts differ at sigma[" + std::to_string(r) + "," + std::to_string(col) + "]; ";
        }
        if (!rep.pass) {
          const CheckReport* leaf = rep.first_failure();
          auto sides = reevaluate(alg, leaf->axiom, *leaf->witness);
          if (!sides || sides->first != leaf->witness->lhs || sides->second != leaf->witness->rhs ||
              sides->first == sides->second) {
            c.pass = false;
            c.detail += "witness does not re-evaluate at sigma[" + std::to_string(r) + "," + std::to_string(col) + "]; ";
          }
        }
      }
    }
    if (c.pass) c.detail = std::to_string(count) + " mutations";
    out.push_back(c);
  });

  return out;
}

}  // namespace homhopf::cli
