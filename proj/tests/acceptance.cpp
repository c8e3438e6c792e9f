#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gsc/cartan.hpp"
#include "gsc/census.hpp"
#include "gsc/characters.hpp"
#include "gsc/coxeter_group.hpp"
#include "gsc/euler.hpp"
#include "gsc/springer_block.hpp"
#include "gsc/sym_matrix.hpp"
#include "printed_tables.hpp"

using namespace gsc;
using namespace gsc::testing;

namespace {

// Collects the reasons a criterion failed; empty means pass.
struct Check {
  std::vector<std::string> problems;
  bool partial = false;  // some clause cannot be met by any implementation
  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

GroupPtr group(const std::string& label) {
  static std::map<std::string, GroupPtr> cache;
  auto& g = cache[label];
  if (!g) g = build_group(load_cartan_preset(GSC_PRESET_DIR "/cartan", label));
  return g;
}

const CharacterTable& table(const std::string& label) {
  static std::map<std::string, CharacterTable> cache;
  auto it = cache.find(label);
  if (it == cache.end()) it = cache.emplace(label, character_table(group(label))).first;
  return it->second;
}

struct E6Block {
  BlockRoot root = block_root("E6");
  RelativeWeylGroup w{root};
  ScenarioResult a = evaluate_scenario(w, root, 'a');
  ScenarioResult b = evaluate_scenario(w, root, 'b');
};

const E6Block& e6_block() {
  static const E6Block b;
  return b;
}

void criterion1(Check& c) {
  const auto& w = e6_block().w;
  const std::map<G2Irrep, std::string> expected = {
      {G2Irrep::one, "q^6"},         {G2Irrep::eps, "q^3"},           {G2Irrep::eps_prime, "q^3"},
      {G2Irrep::rho, "q+q^5"},       {G2Irrep::rho_prime, "q^2+q^4"}, {G2Irrep::sign, "1"}};
  for (const auto& [e, g] : expected)
    c.require(w.gamma(e).to_string() == g, "Gamma_" + irrep_name(e) + " = " + w.gamma(e).to_string());
}

void criterion2(Check& c) {
  c.require(e6_block().a.matrix.entries() == table_matrix(kMatrixA), "M differs in scenario a");
  c.require(e6_block().b.matrix.entries() == table_matrix(kMatrixB), "M differs in scenario b");
}

void criterion3(Check& c) {
  for (const auto* r : {&e6_block().a, &e6_block().b}) {
    const std::string v(1, r->scenario.variant);
    const auto& f = r->ic.factors;
    c.require(f.upper == table_matrix(v == "a" ? kUpperA : kUpperB), "tPi differs in scenario " + v);
    for (std::size_t i = 0; i < 6; ++i)
      c.require(f.diagonal[i] == RatFunc(diagonal_entry(kDiagonal[i])),
                "A differs at position " + std::to_string(i) + " in scenario " + v);
    c.require(f.reconstruct() == r->matrix.entries(), "tPi A Pi != M in scenario " + v);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j)
        c.require(certify_ring(f.upper(i, j), CoefficientRing::natural_poly),
                  "Pi entry outside N[q] in scenario " + v);
  }
}

void criterion4(Check& c) {
  const auto& a = e6_block().a;
  const auto& b = e6_block().b;
  c.require(a.cohomology.describe(3) == "rho" && a.cohomology.describe(2) == "1", "scenario a module");
  c.require(b.cohomology.describe(3) == "rho'" && b.cohomology.describe(2) == "eps", "scenario b module");
  for (int j : {0, 1}) {
    c.require(a.cohomology.describe(j) == "0", "scenario a has extra degree");
    c.require(b.cohomology.describe(j) == "0", "scenario b has extra degree");
  }
  c.require(a.cohomology.degrees.rbegin()->first == 3, "scenario a has degrees above 6");
  c.require(a.trace == 1, "trace a = " + a.trace.str());
  c.require(b.trace == -1, "trace b = " + b.trace.str());
  const auto v = decide_scenario(e6_block().root);
  c.require(v.scenario == 'a' && v.trace == 1 && !v.conjectural, "verdict " + v.line());
}

// Returns a note for the criterion line.
std::string criterion5(Check& c) {
  const std::vector<std::string> presets = {"e6_du3", "d4_du3", "a5_du3", "a2a2a1", "a2a1a1"};
  int partial = 0;
  for (const auto& name : presets) {
    const auto p = load_census_preset(GSC_PRESET_DIR "/census", name);
    const auto g = group(p.group);
    const auto rho = resolve_springer_rep(table(p.group), p.constituents);
    const auto r = census(g, rho.resolved);
    c.require(census_check(r, expected_counts(p, g->spec()), p.complete).empty(),
              name + ": listed counts differ");
    const Integer dim = numerator(rho.resolved.at_identity());
    c.require(r.total() == dim, name + ": total " + r.total().str() + " != dim " + dim.str());
    for (const auto& [j, m] : r.restriction) {
      Integer s = 0;
      for (const auto& [jp, n] : r.counts)
        if (std::includes(jp.begin(), jp.end(), j.begin(), j.end())) s += n;
      c.require(s == m, name + ": Moebius inversion fails at " + g->spec().format_nodes(j));
    }
    if (!p.complete) ++partial;
  }
  c.partial = partial > 0;
  c.require(census(group("A2A2A1"), resolve_springer_rep(table("A2A2A1"), {{4, 3}}).resolved).total() == 4,
            "A2A2A1 total");
  return "listed J-sets exact; the '0 elsewhere' clause for E6/D4/A5 is not attainable "
         "(total = dim rho_u = 45/14/5 > listed 9/8/2), so those " +
         std::to_string(partial) + " presets check listed sets and the total only";
}

void criterion6(Check& c) {
  struct Want {
    const char* file;
    const char* name;
    long long chi;
  };
  const std::vector<Want> wants = {
      {"d4_Z.eul", "Z", 6},          {"d4_X.eul", "X", 12},
      {"a5_T.eul", "T24", 4},        {"a5_T.eul", "T", 8},
      {"e6_Sdiamond.eul", "Z15", 3}, {"e6_Sdiamond.eul", "Zstar", 6},
      {"e6_Sdiamond.eul", "Zstar_Z15", 4}, {"e6_Sdiamond.eul", "Zprime", 5},
      {"e6_Sdiamond.eul", "Ysecond", 1},   {"e6_Sdiamond.eul", "Sdiamond", 1},
      {"e6_T_case_in.eul", "Tdiamond", 1}, {"e6_T_case_out.eul", "Tdiamond", 0},
  };
  std::map<std::string, ScriptReport> reports;
  for (const char* f : {"d4_Z.eul", "d4_X.eul", "a5_T.eul", "e6_Sdiamond.eul", "e6_T_case_in.eul",
                        "e6_T_case_out.eul"}) {
    auto rep = run_script(parse_script(read_text_file(std::string(GSC_SCRIPT_DIR) + "/" + f)));
    c.require(rep.ok(), std::string(f) + ": an assert failed");
    reports.emplace(f, std::move(rep));
  }
  for (const auto& w : wants) {
    const auto& row = reports.at(w.file).row(w.name);
    c.require(row.chi == w.chi && row.status == "pass",
              std::string(w.file) + ": " + w.name + " = " + row.chi.str());
  }
}

RatFunc random_entry(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3), shape(0, 3);
  LaurentPoly num;
  for (int e = -2; e <= 2; ++e) num.add_term(e, coeff(rng));
  if (shape(rng) != 0) return RatFunc(num);
  LaurentPoly den;
  den.add_term(0, 1);
  den.add_term(1, coeff(rng));
  return RatFunc(num, den);
}

void criterion7(Check& c) {
  for (const char* label : {"A1", "G2", "D4", "A5", "E6"}) {
    const auto& t = table(label);
    const auto g = group(label);
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j)
        c.require(inner_product(t[i].character, t[j].character) == Rational(i == j ? 1 : 0),
                  std::string(label) + ": orthogonality");
    LaurentPoly s;
    for (const auto& irr : t.irreducibles()) {
      c.require(irr.gamma.sum_of_coefficients() == irr.dimension, std::string(label) + ": Gamma(1)");
      s += LaurentPoly(irr.dimension) * irr.gamma;
    }
    c.require(s == g->poincare(), std::string(label) + ": sum dim Gamma != Poincare");
  }

  std::mt19937 rng(99);
  int done = 0, attempts = 0;
  while (done < 100 && attempts < 1000) {
    ++attempts;
    RatMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i; j < 4; ++j) m(i, j) = m(j, i) = random_entry(rng);
    UduFactors f;
    try {
      f = symmetric_udu(SymMatrix({0, 1, 2, 3}, m));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::zero_pivot) continue;
      throw;
    }
    ++done;
    c.require(f.reconstruct() == m, "random round-trip failed");
  }
  c.require(done == 100, "too few random matrices with nonzero pivots");

  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    LaurentPoly p;
    for (int e = -5; e <= 5; ++e) p.add_term(e, coeff(rng));
    c.require(parse_laurent(p.to_string()) == p, "parser round-trip: " + p.to_string());
  }
}

void criterion8(Check& c) {
  const auto root = block_root("E8");
  const RelativeWeylGroup w(root);
  const auto a = evaluate_scenario(w, root, 'a');
  const auto b = evaluate_scenario(w, root, 'b');
  c.require(a.matrix.entries() == e6_block().a.matrix.entries(), "E8 M a differs from E6");
  c.require(b.matrix.entries() == e6_block().b.matrix.entries(), "E8 M b differs from E6");
  c.require(a.ic.factors.upper == e6_block().a.ic.factors.upper, "E8 tPi a differs");
  c.require(b.ic.factors.upper == e6_block().b.ic.factors.upper, "E8 tPi b differs");
  c.require(a.trace == 1 && b.trace == -1, "E8 traces");
  const auto v = decide_scenario({a, b}, root);
  std::ostringstream os;
  write_block_report(os, root, w, {a, b}, v);
  const auto text = os.str();
  c.require(text.find("status=conjectural") != std::string::npos, "E8 not labelled conjectural");
  c.require(text.find("reconstructed") != std::string::npos, "E8 not labelled reconstructed");
  c.require(text.find("# sigma0\t7") != std::string::npos && text.find("# sigma3\t6") != std::string::npos,
            "E8 relabelling missing");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<std::string(Check&)> run;
  };
  auto plain = [](void (*f)(Check&)) {
    return [f](Check& c) {
      f(c);
      return std::string();
    };
  };
  const std::vector<Criterion> criteria = {
      {1, "Gamma table over G2", plain(criterion1)},
      {2, "block matrices M for both scenarios", plain(criterion2)},
      {3, "factorization tPi A Pi with Pi in N[q]", plain(criterion3)},
      {4, "graded module, traces and E6 decision", plain(criterion4)},
      {5, "component census presets", criterion5},
      {6, "Euler script corpus", plain(criterion6)},
      {7, "property suites", plain(criterion7)},
      {8, "E8 report", plain(criterion8)},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    std::string note;
    try {
      note = cr.run(c);
    } catch (const std::exception& e) {
      c.problems.push_back(std::string("exception: ") + e.what());
    }
    const bool pass = c.problems.empty();
    if (!pass) ++failed;
    const char* status = !pass ? "FAIL" : c.partial ? "PARTIAL" : "PASS";
    std::cout << "criterion " << cr.id << ": " << status << " - " << cr.title;
    if (!note.empty()) std::cout << " (" << note << ")";
    std::cout << '\n';
    for (const auto& p : c.problems) std::cout << "    " << p << '\n';
  }
  return failed == 0 ? 0 : 1;
}
