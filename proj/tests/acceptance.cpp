// One line per acceptance criterion; exit status 0 only when every line passes.
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "homhopf/admissible.hpp"
#include "homhopf/cli.hpp"
#include "homhopf/corpus.hpp"
#include "homhopf/structfile.hpp"

using namespace homhopf;

namespace {

const std::filesystem::path data_dir = HOMHOPF_DATA_DIR;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Result {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (detail.size() < 400) detail += what + "; ";
    }
  }
};

bool identity(const LinearMap& f) { return f == LinearMap::identity(f.domain()); }

Result hopf_laws_and_cocycle_grid() {
  Result r;
  HomHopf h4 = sweedler_h4_hom();
  r.require(check_hom_algebra(h4.bialgebra().algebra()).pass, "H4 hom-algebra");
  r.require(check_hom_coalgebra(h4.bialgebra().coalgebra()).pass, "H4 hom-coalgebra");
  r.require(check_hom_bialgebra(h4.bialgebra()).pass, "H4 bialgebra");
  r.require(check_antipode(h4).pass, "H4 antipode");
  std::size_t points = 0;
  for (long n : {0, 1, 2})
    for (long m = -2; m <= 2; ++m)
      for (long k = -2; k <= 2; ++k) {
        CrossedProductSpec spec = h4_cocycle_example(Scalar(n), m, k);
        std::string at = "n=" + std::to_string(n) + " (m,k)=(" + std::to_string(m) + "," + std::to_string(k) + ")";
        r.require(check_crossed_cocycle_conditions(spec).pass, "conditions " + at);
        r.require(check_hom_algebra(crossed_product(spec)).pass, "crossed product " + at);
        ++points;
      }
  r.detail = r.pass ? std::to_string(points) + " grid points" : r.detail;
  return r;
}

Result trivial_cocycle_is_smash() {
  Result r;
  for (long m = -2; m <= 2; ++m)
    for (long k = -2; k <= 2; ++k) {
      CrossedProductSpec spec = h4_cocycle_example(Scalar(0), m, k);
      spec.sigma = Cocycle::trivial(spec.H, spec.A);
      r.require(crossed_product(spec).mult() == smash_product(spec.action, m).mult(),
                "(m,k)=(" + std::to_string(m) + "," + std::to_string(k) + ")");
    }
  return r;
}

Result mutation_equivalence() {
  Result r;
  std::size_t total = 0, rejected = 0, accepted = 0;
  for (auto [n, delta] : {std::pair{1L, Scalar(1)}, std::pair{2L, Scalar(1)}, std::pair{0L, Scalar(3)}}) {
    CrossedProductSpec spec = h4_cocycle_example(Scalar(n), 0, -1);
    const LinearMap& sigma = spec.sigma.sigma();
    for (std::size_t row = 0; row < sigma.rows(); ++row)
      for (std::size_t col = 0; col < sigma.cols(); ++col) {
        CrossedProductSpec mut = spec;
        mut.sigma = Cocycle(spec.H, spec.A, mutate(sigma, row, col, delta));
        bool cond = check_crossed_cocycle_conditions(mut).pass;
        bool alg = check_hom_algebra(crossed_product(mut)).pass;
        r.require(cond == alg, "disagree at n=" + std::to_string(n) + " [" + std::to_string(row) + "," +
                                   std::to_string(col) + "]");
        ++total;
        rejected += cond || alg ? 0 : 1;
        accepted += cond && alg ? 1 : 0;
      }
  }
  r.require(total >= 50, "fewer than 50 mutations");
  if (r.pass)
    r.detail = std::to_string(total) + " mutations, " + std::to_string(rejected) + " rejected and " +
               std::to_string(accepted) + " accepted by both";
  return r;
}

Result classical_datum_and_injection() {
  Result r;
  BiproductSpec spec = classical_radford_datum();
  CheckReport cond = check_radford_conditions(spec);
  r.require(cond.pass && cond.parts.size() == 9, "A1-A9");
  r.require(check_hom_bialgebra(build_biproduct(spec).bialgebra).pass, "biproduct bialgebra");
  BiproductSpec bad = spec;
  // Δ_A(1) = 1⊗1 + y⊗y
  bad.A_coalgebra = HomCoalgebra(spec.A_coalgebra.space(), mutate(spec.A_coalgebra.comult(), 3, 0, Scalar(1)),
                                 spec.A_coalgebra.counit(), spec.A_coalgebra.gamma());
  bad.coaction = Coaction(spec.coaction.coacting(), bad.A_coalgebra, spec.coaction.coact());
  bool a4_fails = false;
  for (const auto& p : check_radford_conditions(bad).parts) a4_fails = a4_fails || (p.axiom == "radford-A4" && !p.pass);
  r.require(a4_fails, "injected A4 violation not reported");
  r.require(!check_hom_bialgebra(build_biproduct(bad, true).bialgebra).pass, "bypassed biproduct still passes");
  return r;
}

Result classical_antipode() {
  Result r;
  BiproductSpec spec = classical_radford_datum();
  LinearMap s_a = LinearMap::diagonal(spec.crossed.A.space(), {Scalar(1), Scalar(-1)});
  LinearMap s = biproduct_antipode(spec, cyclic_group_algebra(2).antipode(), s_a);
  HomBialgebra b = build_biproduct(spec).bialgebra;
  LinearMap id = LinearMap::identity(b.space());
  LinearMap ee = unit_counit(b.coalgebra(), b.algebra());
  r.require(convolve(s, id, b.coalgebra(), b.algebra()) == ee, "S*id");
  r.require(convolve(id, s, b.coalgebra(), b.algebra()) == ee, "id*S");
  r.require(compose(s, b.alpha()) == compose(b.alpha(), s), "S commutes with the structure map");
  r.require(convolution_inverse(id, b.coalgebra(), b.algebra()) == s, "convolution inverse differs");
  return r;
}

Result corpus_biproducts_split() {
  Result r;
  std::size_t count = 0;
  for (const auto& e : biproduct_corpus()) {
    if (!e.expect_conditions) continue;
    MappingSystem sys = canonical_system(e.spec, *e.antipode_h);
    CheckReport adm = check_admissible(sys);
    r.require(adm.pass && adm.parts.size() == 5, e.name + " admissible");
    r.require(check_displayed_structures(sys).pass, e.name + " displayed structures");
    r.require(check_cocycle_convolution_identities(e.spec.crossed).pass, e.name + " cocycle identities");
    SplitIsomorphism iso = split_isomorphism(sys);
    HomBialgebra b = build_biproduct(e.spec).bialgebra;
    const HomBialgebra& a = sys.A;
    LinearMap fg = compose(iso.f, iso.g), gf = compose(iso.g, iso.f);
    r.require(identity(fg) && identity(gf), e.name + " f and g not inverse");
    r.require(compose(iso.f, b.mult()).entries() == compose(a.mult(), tensor(iso.f, iso.f)).entries(),
              e.name + " f not multiplicative");
    r.require(compose(b.comult(), iso.g).entries() == compose(tensor(iso.g, iso.g), a.comult()).entries(),
              e.name + " g not comultiplicative");
    r.require(iso.report.pass, e.name + " iso report");
    ++count;
  }
  if (r.pass) r.detail = std::to_string(count) + " biproducts";
  return r;
}

Result yau_twists() {
  Result r;
  std::size_t count = 0;
  for (const auto& fam : twist_families()) {
    // The identity is included so that k[C2], which has no involution, is still exercised.
    std::vector<LinearMap> phis = fam.involutions;
    phis.push_back(LinearMap::identity(fam.classical.space()));
    for (const auto& phi : phis) {
      HomHopf t = yau_twist(fam.classical, phi);
      bool ok = check_hom_algebra(t.bialgebra().algebra()).pass && check_hom_coalgebra(t.bialgebra().coalgebra()).pass &&
                check_hom_bialgebra(t.bialgebra()).pass && check_antipode(t).pass && check_hom_hopf(t).pass;
      r.require(ok, fam.name);
      ++count;
    }
  }
  if (r.pass) r.detail = std::to_string(count) + " twists";
  return r;
}

Result cli_selftest_and_files() {
  Result r;
  std::ostringstream out, err;
  r.require(cli::run_command({"selftest"}, out, err) == cli::exit_pass, "selftest");
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(data_dir)) {
    if (entry.path().extension() != ".struct") continue;
    std::string text = slurp(entry.path());
    r.require(cli::serialize(cli::parse(text)) == text, entry.path().filename().string() + " round trip");
    ++files;
  }
  r.require(files >= 8, "missing struct files");

  // Every single-site mutation of H4's product and coproduct, loaded through the file format.
  cli::StructureFile base = cli::parse(slurp(data_dir / "h4.struct"));
  std::size_t mutations = 0;
  for (const char* name : {"h4.mult", "h4.comult"}) {
    cli::Model m0(base);
    LinearMap dense = m0.map(name);
    for (std::size_t row = 0; row < dense.rows(); ++row)
      for (std::size_t col = 0; col < dense.cols(); ++col) {
        cli::StructureFile f = base;
        auto& entries = f.maps.at(name).entries;
        auto it = std::find_if(entries.begin(), entries.end(),
                               [&](const cli::MapEntry& e) { return e.row == row && e.col == col; });
        if (it == entries.end()) {
          entries.push_back({row, col, Scalar(1)});
          std::sort(entries.begin(), entries.end(),
                    [](const auto& a, const auto& b) { return std::pair(a.row, a.col) < std::pair(b.row, b.col); });
        } else {
          it->value = it->value + Scalar(1);
        }
        cli::Model model(cli::parse(cli::serialize(f)));
        const HomHopf& h = std::get<HomHopf>(model.select(""));
        CheckReport rep = check_hom_hopf(h);
        std::string site = std::string(name) + "[" + std::to_string(row) + "," + std::to_string(col) + "]";
        ++mutations;
        if (rep.pass) {
          r.require(false, site + " undetected");
          continue;
        }
        const CheckReport* leaf = rep.first_failure();
        r.require(leaf && leaf->witness && render(rep).find("lhs = ") != std::string::npos, site + " no witness");
        if (!leaf || !leaf->witness) continue;
        auto sides = cli::reevaluate(h.bialgebra(), h.antipode(), leaf->axiom, *leaf->witness);
        r.require(sides && sides->first == leaf->witness->lhs && sides->second == leaf->witness->rhs &&
                      sides->first != sides->second,
                  site + " witness does not re-evaluate");
      }
  }
  if (r.pass) r.detail = std::to_string(files) + " files, " + std::to_string(mutations) + " file mutations";
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"1 H4 laws and cocycle example on the (m,k) grid", hopf_laws_and_cocycle_grid},
      {"2 trivial cocycle gives the smash product", trivial_cocycle_is_smash},
      {"3 mutation verdicts agree with the Hom-algebra check", mutation_equivalence},
      {"4 classical datum A1-A9 and injected A4 violation", classical_datum_and_injection},
      {"5 classical biproduct antipode", classical_antipode},
      {"6 corpus biproducts: admissible system and split isomorphism", corpus_biproducts_split},
      {"7 Yau twists of classical Hopf algebras", yau_twists},
      {"8 CLI selftest, file round trip and mutation witnesses", cli_selftest_and_files},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Result r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    std::cout << (r.pass ? "PASS " : "FAIL ") << name;
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
    failed += r.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
