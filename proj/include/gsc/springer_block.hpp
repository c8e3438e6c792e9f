#ifndef GSC_SPRINGER_BLOCK_HPP
#define GSC_SPRINGER_BLOCK_HPP

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gsc/cartan.hpp"
#include "gsc/characters.hpp"
#include "gsc/coxeter_group.hpp"
#include "gsc/error.hpp"
#include "gsc/laurent_poly.hpp"
#include "gsc/sym_matrix.hpp"

namespace gsc {

/// The six irreducibles of the rank-2 relative Weyl group, named as 1, eps,
/// eps', rho, rho', s.
enum class G2Irrep { one, eps, eps_prime, rho, rho_prime, sign };

inline constexpr std::array<G2Irrep, 6> kG2Irreps = {G2Irrep::one,     G2Irrep::eps,
                                                     G2Irrep::eps_prime, G2Irrep::rho,
                                                     G2Irrep::rho_prime, G2Irrep::sign};

inline std::string irrep_name(G2Irrep e) {
  switch (e) {
    case G2Irrep::one: return "1";
    case G2Irrep::eps: return "eps";
    case G2Irrep::eps_prime: return "eps'";
    case G2Irrep::rho: return "rho";
    case G2Irrep::rho_prime: return "rho'";
    case G2Irrep::sign: return "s";
  }
  return "?";
}

/// Strata labels d_u of the block, in order.
inline const std::vector<int> kBlockH = {0, 1, 3, 4, 9, 12};

/// The ambient root system a block lives in. Only labels change between
/// E6 and E8; the numerical data is the same.
struct BlockRoot {
  std::string root;
  std::string sigma0;  // parent node whose reflection acts as sigma_0
  std::string sigma3;  // ... and as sigma_3
  std::array<std::string, 6> class_names;
  bool conjectural = false;
};

inline BlockRoot block_root(std::string_view name) {
  if (name == "E6")
    return {"E6", "0", "3", {"E6", "E6(a1)", "A5A1", "A5", "2A2A1", "2A2"}, false};
  if (name == "E8")
    return {"E8", "7", "6", {"E8", "E8(a1)", "E7A1", "E7", "E6A1", "E6"}, true};
  throw Error(ErrorKind::usage, "unknown root '" + std::string(name) + "' (expected E6 or E8)");
}

struct BlockScenario {
  char variant = 'a';
  std::vector<int> H = kBlockH;
  std::vector<G2Irrep> assignment;  // E_h for each h in H
  std::string sigma0;
  std::string sigma3;

  std::size_t position(int h) const {
    for (std::size_t i = 0; i < H.size(); ++i)
      if (H[i] == h) return i;
    throw Error(ErrorKind::invalid_input, "h=" + std::to_string(h) + " is not in the block");
  }
  G2Irrep irrep(int h) const { return assignment[position(h)]; }
};

/// Scenario (a) puts rho at h=3 and rho' at h=4; (b) swaps them.
inline BlockScenario make_scenario(const BlockRoot& root, char variant) {
  using E = G2Irrep;
  BlockScenario s;
  s.variant = variant;
  s.sigma0 = root.sigma0;
  s.sigma3 = root.sigma3;
  if (variant == 'a')
    s.assignment = {E::one, E::eps, E::rho, E::rho_prime, E::eps_prime, E::sign};
  else if (variant == 'b')
    s.assignment = {E::one, E::eps, E::rho_prime, E::rho, E::eps_prime, E::sign};
  else
    throw Error(ErrorKind::usage, std::string("unknown scenario '") + variant + "'");
  return s;
}

/// The relative Weyl group of type G2 with generators named after the
/// sigma_0 and sigma_3 roles, and its irreducibles matched to the names.
class RelativeWeylGroup {
 public:
  explicit RelativeWeylGroup(const BlockRoot& root)
      : group_(build_group(CartanSpec{"G2", {{2, -1}, {-3, 2}}, {root.sigma0, root.sigma3}})),
        table_(character_table(group_)) {
    std::map<G2Irrep, std::size_t> found;
    for (std::size_t i = 0; i < table_.size(); ++i) {
      const auto& irr = table_[i];
      G2Irrep name;
      if (irr.dimension == 1) {
        const bool minus0 = generator_value(i, 0) < 0;
        const bool minus3 = generator_value(i, 1) < 0;
        name = minus0 ? (minus3 ? G2Irrep::sign : G2Irrep::eps)
                      : (minus3 ? G2Irrep::eps_prime : G2Irrep::one);
      } else if (irr.dimension == 2 && (irr.b == 1 || irr.b == 2)) {
        name = irr.b == 1 ? G2Irrep::rho : G2Irrep::rho_prime;
      } else {
        throw Error(ErrorKind::invalid_input, "unexpected irreducible " + irr.label);
      }
      if (!found.emplace(name, i).second)
        throw Error(ErrorKind::invalid_input, "two irreducibles named " + irrep_name(name));
    }
    for (auto e : kG2Irreps) index_[static_cast<std::size_t>(e)] = found.at(e);
  }

  const GroupPtr& group() const noexcept { return group_; }
  const CharacterTable& table() const noexcept { return table_; }
  const ClassFunction& character(G2Irrep e) const {
    return table_[index_[static_cast<std::size_t>(e)]].character;
  }
  /// Value of irreducible `e` on the generator playing sigma_0 (gen 0) or sigma_3 (gen 1).
  Integer trace(G2Irrep e, int gen) const {
    return numerator(character(e)[static_cast<std::size_t>(group_->class_of(group_->generator(gen)))]);
  }
  LaurentPoly gamma(G2Irrep e) const { return table_[index_[static_cast<std::size_t>(e)]].gamma; }

 private:
  Rational generator_value(std::size_t irr, int gen) const {
    return table_[irr].character[static_cast<std::size_t>(group_->class_of(group_->generator(gen)))];
  }

  GroupPtr group_;
  CharacterTable table_;
  std::array<std::size_t, 6> index_{};
};

/// (q^{-h-h'} Gamma_{E_h tensor E_h'}) over H x H.
inline SymMatrix block_matrix(const RelativeWeylGroup& w, const BlockScenario& s) {
  const std::size_t n = s.H.size();
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto chi = tensor(w.character(s.assignment[i]), w.character(s.assignment[j]));
      m(i, j) = RatFunc(gamma_poly(chi).shifted(-s.H[i] - s.H[j]));
    }
  return SymMatrix(s.H, std::move(m));
}

/// The factorization M = tPi A Pi together with the certified entries
/// Pi_{h',h} = (h,h') entry of tPi, for h <= h'.
struct IcMultiplicities {
  std::vector<int> H;
  UduFactors factors;

  LaurentPoly pi(int h_big, int h_small) const {
    const std::size_t r = position(h_small), c = position(h_big);
    if (r > c) return LaurentPoly();
    return factors.upper(r, c).numerator();
  }
  /// Pi^k_{h',h}: the coefficient of q^k.
  Integer coefficient(int h_big, int h_small, int k) const { return pi(h_big, h_small).coefficient(k); }

 private:
  std::size_t position(int h) const {
    for (std::size_t i = 0; i < H.size(); ++i)
      if (H[i] == h) return i;
    throw Error(ErrorKind::invalid_input, "h=" + std::to_string(h) + " is not in the block");
  }
};

inline IcMultiplicities ic_multiplicities(const SymMatrix& m) {
  IcMultiplicities out{m.index(), symmetric_udu(m)};
  const std::size_t n = m.size();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c)
      if (!certify_ring(out.factors.upper(r, c), CoefficientRing::natural_poly))
        throw Error(ErrorKind::negativity,
                    "Pi entry (" + std::to_string(m.index()[c]) + "," + std::to_string(m.index()[r]) +
                        ") = " + out.factors.upper(r, c).to_string() + " is not in N[q]");
  return out;
}

/// degree j -> multiplicities of the irreducibles in H^{2j}_c.
struct GradedModule {
  std::map<int, std::map<G2Irrep, Integer>> degrees;

  Integer multiplicity(int j, G2Irrep e) const {
    auto it = degrees.find(j);
    if (it == degrees.end()) return 0;
    auto jt = it->second.find(e);
    return jt == it->second.end() ? Integer(0) : jt->second;
  }
  /// `rho`, `1+eps`, `2*rho'`, or `0`.
  std::string describe(int j) const {
    auto it = degrees.find(j);
    if (it == degrees.end()) return "0";
    std::string s;
    for (const auto& [e, m] : it->second) {
      if (!s.empty()) s += '+';
      if (m != 1) s += m.str() + "*";
      s += irrep_name(e);
    }
    return s;
  }
};

/// Cohomology of the fibre over u in C_h. For h' <= h the graded
/// multiplicity of E_{h'} is Pi_{h,h'} q^{h'}; only h = 3 is supported.
inline GradedModule springer_fiber_cohomology(const BlockScenario& s, const IcMultiplicities& ic,
                                              int h) {
  if (h != 3) throw Error(ErrorKind::unsupported, "unsupported h=" + std::to_string(h));
  GradedModule g;
  for (int hp : s.H) {
    if (hp > h) continue;
    const LaurentPoly poly = ic.pi(h, hp).shifted(hp);
    for (const auto& [j, c] : poly.terms())
      if (c != 0) g.degrees[j][s.irrep(hp)] += c;
  }
  return g;
}

/// sum_j (-1)^j tr(sigma, H^j_c); the module only lives in even degrees 2j.
inline Integer lefschetz_trace(const RelativeWeylGroup& w, const GradedModule& g, int gen) {
  Integer t = 0;
  for (const auto& [j, parts] : g.degrees)
    for (const auto& [e, m] : parts) t += m * w.trace(e, gen);
  return t;
}

inline bool in_trace_constraint(const Integer& t) { return t >= 0 && t <= 2; }

/// The unique scenario whose trace lies in {0,1,2}.
inline char decide_from_traces(const std::vector<std::pair<char, Integer>>& traces) {
  std::optional<char> pick;
  for (const auto& [v, t] : traces) {
    if (!in_trace_constraint(t)) continue;
    if (pick) throw Error(ErrorKind::ambiguous, "ambiguous: more than one scenario satisfies {0,1,2}");
    pick = v;
  }
  if (!pick) throw Error(ErrorKind::ambiguous, "ambiguous: no scenario satisfies {0,1,2}");
  return *pick;
}

/// Everything computed for one scenario.
struct ScenarioResult {
  BlockScenario scenario;
  SymMatrix matrix;
  IcMultiplicities ic;
  GradedModule cohomology;
  Integer trace;
};

inline ScenarioResult evaluate_scenario(const RelativeWeylGroup& w, const BlockRoot& root,
                                        char variant) {
  auto s = make_scenario(root, variant);
  auto m = block_matrix(w, s);
  auto ic = ic_multiplicities(m);
  auto g = springer_fiber_cohomology(s, ic, 3);
  auto t = lefschetz_trace(w, g, 0);
  return {std::move(s), std::move(m), std::move(ic), std::move(g), std::move(t)};
}

struct Verdict {
  char scenario = 'a';
  Integer trace;
  bool conjectural = false;

  std::string line() const {
    return std::string("scenario=") + scenario + " trace=" + trace.str() +
           " constraint={0,1,2} status=" + (conjectural ? "conjectural" : "proved");
  }
};

inline Verdict decide_scenario(const std::vector<ScenarioResult>& results, const BlockRoot& root) {
  std::vector<std::pair<char, Integer>> traces;
  for (const auto& r : results) traces.emplace_back(r.scenario.variant, r.trace);
  const char v = decide_from_traces(traces);
  for (const auto& r : results)
    if (r.scenario.variant == v) return {v, r.trace, root.conjectural};
  throw Error(ErrorKind::ambiguous, "ambiguous");
}

inline Verdict decide_scenario(const BlockRoot& root) {
  const RelativeWeylGroup w(root);
  return decide_scenario({evaluate_scenario(w, root, 'a'), evaluate_scenario(w, root, 'b')}, root);
}

/// TSV report: a header, then per scenario the assignment with Gamma, the
/// matrices M, tPi and the diagonal of A, the graded module and its trace.
inline void write_block_report(std::ostream& os, const BlockRoot& root, const RelativeWeylGroup& w,
                               const std::vector<ScenarioResult>& results,
                               const std::optional<Verdict>& verdict) {
  os << "# root\t" << root.root << '\n';
  os << "# sigma0\t" << root.sigma0 << "\n# sigma3\t" << root.sigma3 << '\n';
  if (root.conjectural)
    os << "# tables\treconstructed from the G2 data under the relabelling sigma0=" << root.sigma0
       << " sigma3=" << root.sigma3 << '\n';
  for (const auto& r : results) {
    const auto& s = r.scenario;
    os << "\n[scenario " << s.variant << "]\n";
    os << "h\tclass\tE_h\tGamma\n";
    for (std::size_t i = 0; i < s.H.size(); ++i)
      os << s.H[i] << '\t' << root.class_names[i] << '\t' << irrep_name(s.assignment[i]) << '\t'
         << w.gamma(s.assignment[i]).to_string() << '\n';
    os << "\n[M " << s.variant << "]\n";
    write_matrix_tsv(os, s.H, r.matrix.entries());
    os << "\n[tPi " << s.variant << "]\n";
    write_matrix_tsv(os, s.H, r.ic.factors.upper);
    os << "\n[A " << s.variant << "]\n";
    os << "h\tA\n";
    for (std::size_t i = 0; i < s.H.size(); ++i)
      os << s.H[i] << '\t' << r.ic.factors.diagonal[i].to_string() << '\n';
    os << "\n[H_c u in C3 " << s.variant << "]\n";
    os << "degree\tmodule\n";
    const int top = r.cohomology.degrees.empty() ? 0 : r.cohomology.degrees.rbegin()->first;
    for (int j = 0; j <= top; ++j) os << 2 * j << '\t' << r.cohomology.describe(j) << '\n';
    os << "trace=" << r.trace.str() << '\n';
  }
  if (verdict) os << '\n' << verdict->line() << '\n';
}

}  // namespace gsc

#endif  // GSC_SPRINGER_BLOCK_HPP
