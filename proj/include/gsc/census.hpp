#ifndef GSC_CENSUS_HPP
#define GSC_CENSUS_HPP

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gsc/cartan.hpp"
#include "gsc/characters.hpp"
#include "gsc/coxeter_group.hpp"
#include "gsc/error.hpp"
#include "gsc/parabolic.hpp"

namespace gsc {

/// rho_u given as a sum of irreducibles, each named by (dimension, b).
struct SpringerRepSpec {
  std::string group;
  std::vector<std::pair<int, int>> constituents;
  std::vector<std::size_t> irreducibles;  // resolved table indices
  ClassFunction resolved;
};

/// Every (dim, b) must pick out exactly one irreducible.
inline SpringerRepSpec resolve_springer_rep(const CharacterTable& table,
                                            std::vector<std::pair<int, int>> constituents) {
  if (constituents.empty()) throw Error(ErrorKind::invalid_input, "no constituents given");
  SpringerRepSpec s;
  s.group = table.group()->spec().label;
  s.constituents = std::move(constituents);
  std::vector<Rational> sum(table.group()->class_count(), Rational(0));
  for (const auto& [d, b] : s.constituents) {
    const auto hits = table.identify(d, b);
    const std::string tag = "(" + std::to_string(d) + ",b=" + std::to_string(b) + ")";
    if (hits.empty())
      throw Error(ErrorKind::invalid_input, "no irreducible " + tag + " in " + s.group);
    if (hits.size() > 1)
      throw Error(ErrorKind::ambiguous,
                  std::to_string(hits.size()) + " irreducibles match " + tag + " in " + s.group);
    s.irreducibles.push_back(hits.front());
    const auto& v = table[hits.front()].character.values();
    for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += v[c];
  }
  s.resolved = ClassFunction(table.group(), std::move(sum));
  return s;
}

/// Orders subsets by size, then lexicographically.
struct NodeSetLess {
  bool operator()(const NodeSet& a, const NodeSet& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using CensusCounts = std::map<NodeSet, Integer, NodeSetLess>;

struct CensusResult {
  CensusCounts counts;       // J -> #(components X with J_X = J)
  CensusCounts restriction;  // J -> (eps_J : rho|W_J)

  Integer count(const NodeSet& j) const {
    auto it = counts.find(j);
    return it == counts.end() ? Integer(0) : it->second;
  }
  Integer total() const {
    Integer t = 0;
    for (const auto& [j, c] : counts) t += c;
    return t;
  }
};

namespace detail {
inline std::vector<NodeSet> all_subsets(int n) {
  std::vector<NodeSet> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    NodeSet s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), NodeSetLess{});
  return out;
}

inline bool is_subset(const NodeSet& a, const NodeSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}
}  // namespace detail

/// #(components with J_X = J) = sum over J' containing J of
/// (-1)^{|J'|-|J|} (eps_J' : rho|W_J').
inline CensusResult census(const GroupPtr& g, const ClassFunction& rho) {
  if (rho.group() != g) throw Error(ErrorKind::group_mismatch, "rho lives on another group");
  const int n = g->rank();
  if (n > 16) throw Error(ErrorKind::too_large, "rank too large for a full subset census");
  CensusResult r;
  const auto subsets = detail::all_subsets(n);
  for (const auto& j : subsets) {
    const auto p = parabolic(g, j);
    r.restriction[j] = restriction_multiplicity(rho, p, sign_character(p));
  }
  for (const auto& j : subsets) {
    Integer c = 0;
    for (const auto& [jp, m] : r.restriction)
      if (detail::is_subset(j, jp)) c += ((jp.size() - j.size()) % 2 ? -m : m);
    if (c < 0)
      throw Error(ErrorKind::invalid_input,
                  "negative component count at " + g->spec().format_nodes(j) + "; inconsistent rho");
    if (c != 0) r.counts[j] = c;
  }
  return r;
}

struct CensusDiff {
  NodeSet nodes;
  Integer expected;
  Integer actual;
};

/// Exact comparison; empty means agreement. With `unlisted_zero` every
/// subset missing from `expected` must have count 0, otherwise only the
/// listed subsets are compared.
inline std::vector<CensusDiff> census_check(const CensusResult& result, const CensusCounts& expected,
                                            bool unlisted_zero = true) {
  std::vector<CensusDiff> out;
  CensusCounts keys = expected;
  if (unlisted_zero)
    for (const auto& [j, c] : result.counts) keys.emplace(j, 0);
  for (const auto& [j, unused] : keys) {
    auto it = expected.find(j);
    const Integer e = it == expected.end() ? Integer(0) : it->second;
    const Integer a = result.count(j);
    if (e != a) out.push_back({j, e, a});
  }
  return out;
}

/// Census preset file:
///
///     group E6
///     constituent 30 3
///     expect {3} 2
///     complete
///
/// Subsets use node names. `complete` declares that unlisted subsets have
/// count 0; without it only the listed subsets are checked.
struct CensusPreset {
  std::string name;
  std::string group;
  bool complete = false;
  std::vector<std::pair<int, int>> constituents;
  std::vector<std::pair<std::vector<std::string>, Integer>> expected;  // by node name
};

inline CensusPreset parse_census_preset(std::string_view text, std::string name) {
  CensusPreset p;
  p.name = std::move(name);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorKind::parse, p.name + " line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "group") {
      if (!(ls >> p.group)) fail("missing group label");
    } else if (key == "complete") {
      p.complete = true;
    } else if (key == "constituent") {
      int d = 0, b = 0;
      if (!(ls >> d >> b)) fail("expected 'constituent <dim> <b>'");
      p.constituents.emplace_back(d, b);
    } else if (key == "expect") {
      std::string set;
      long long count = 0;
      if (!(ls >> set >> count) || set.size() < 2 || set.front() != '{' || set.back() != '}')
        fail("expected 'expect {a,b,...} <count>'");
      std::vector<std::string> names;
      std::istringstream ss(set.substr(1, set.size() - 2));
      for (std::string tok; std::getline(ss, tok, ',');)
        if (!tok.empty()) names.push_back(tok);
      p.expected.emplace_back(std::move(names), Integer(count));
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (p.group.empty()) fail("no group given");
  return p;
}

inline CensusPreset load_census_preset(const std::filesystem::path& dir, std::string_view name) {
  const auto path = dir / (std::string(name) + ".census");
  if (!std::filesystem::exists(path))
    throw Error(ErrorKind::usage, "unknown census preset '" + std::string(name) + "'");
  return parse_census_preset(read_text_file(path), std::string(name));
}

inline CensusCounts expected_counts(const CensusPreset& p, const CartanSpec& spec) {
  CensusCounts out;
  for (const auto& [names, c] : p.expected) out[spec.nodes_named(names)] = c;
  return out;
}

/// `J<TAB>count` for every nonzero count, then the total.
inline void write_census_tsv(std::ostream& os, const CartanSpec& spec, const SpringerRepSpec& rho,
                             const CensusResult& r) {
  os << "# group\t" << spec.label << '\n';
  for (std::size_t i = 0; i < rho.constituents.size(); ++i)
    os << "# constituent\t" << rho.constituents[i].first << '\t' << rho.constituents[i].second
       << '\n';
  os << "J\tcount\n";
  for (const auto& [j, c] : r.counts) os << spec.format_nodes(j) << '\t' << c << '\n';
  os << "total\t" << r.total() << '\n';
}

}  // namespace gsc

#endif  // GSC_CENSUS_HPP
