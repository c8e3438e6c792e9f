#ifndef GSC_CARTAN_HPP
#define GSC_CARTAN_HPP

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gsc/error.hpp"

namespace gsc {

/// Index subset of the nodes, kept sorted.
using NodeSet = std::vector<int>;

struct CartanSpec {
  std::string label;
  std::vector<std::vector<int>> cartan;
  std::vector<std::string> node_names;

  int rank() const noexcept { return static_cast<int>(cartan.size()); }

  int node_index(std::string_view name) const {
    for (std::size_t i = 0; i < node_names.size(); ++i)
      if (node_names[i] == name) return static_cast<int>(i);
    throw Error(ErrorKind::invalid_input,
                "unknown node '" + std::string(name) + "' in " + label);
  }

  NodeSet nodes_named(const std::vector<std::string>& names) const {
    NodeSet out;
    for (const auto& n : names) out.push_back(node_index(n));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// `{0,3}` style rendering with the node names; `{}` for the empty set.
  std::string format_nodes(const NodeSet& nodes) const {
    std::string s = "{";
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (k) s += ',';
      s += node_names.at(static_cast<std::size_t>(nodes[k]));
    }
    return s + "}";
  }

  /// Cartan data of the parabolic subsystem on `nodes`.
  CartanSpec restricted(const NodeSet& nodes) const {
    CartanSpec sub;
    sub.label = label + format_nodes(nodes);
    for (int i : nodes) {
      sub.node_names.push_back(node_names.at(static_cast<std::size_t>(i)));
      std::vector<int> row;
      for (int j : nodes) row.push_back(cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      sub.cartan.push_back(std::move(row));
    }
    return sub;
  }

  friend bool operator==(const CartanSpec&, const CartanSpec&) = default;
};

/// Checks the shape invariants. Finiteness is checked later by enumeration.
inline void validate(const CartanSpec& spec) {
  const std::size_t n = spec.cartan.size();
  if (spec.node_names.size() != n)
    throw Error(ErrorKind::invalid_input, spec.label + ": node name count differs from rank");
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.cartan[i].size() != n)
      throw Error(ErrorKind::invalid_input, spec.label + ": Cartan matrix is not square");
    for (std::size_t j = i + 1; j < n; ++j)
      if (spec.node_names[i] == spec.node_names[j])
        throw Error(ErrorKind::invalid_input, spec.label + ": duplicate node name");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int a = spec.cartan[i][j];
      if (i == j && a != 2)
        throw Error(ErrorKind::invalid_input, spec.label + ": diagonal entries must be 2");
      if (i != j && a > 0)
        throw Error(ErrorKind::invalid_input, spec.label + ": off-diagonal entries must be <= 0");
      if (i != j && (a == 0) != (spec.cartan[j][i] == 0))
        throw Error(ErrorKind::invalid_input, spec.label + ": zero pattern is not symmetric");
    }
}

/// Parses the preset text format:
///
///     # comment
///     label E6
///     nodes 0 1 2 3 4 5
///     row 2 0 0 -1 0 0
///     ...
inline CartanSpec parse_cartan_spec(std::string_view text) {
  CartanSpec spec;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "label") {
      ls >> spec.label;
    } else if (key == "nodes") {
      for (std::string name; ls >> name;) spec.node_names.push_back(name);
    } else if (key == "row") {
      std::vector<int> row;
      for (int v; ls >> v;) row.push_back(v);
      if (!ls.eof())
        throw Error(ErrorKind::parse, "cartan line " + std::to_string(line_no) + ": bad integer");
      spec.cartan.push_back(std::move(row));
    } else {
      throw Error(ErrorKind::parse,
                  "cartan line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (spec.label.empty()) throw Error(ErrorKind::parse, "cartan spec has no label");
  validate(spec);
  return spec;
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::not_found, "file not found: " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline CartanSpec load_cartan_spec(const std::filesystem::path& path) {
  return parse_cartan_spec(read_text_file(path));
}

/// Looks up `<dir>/<label>.cartan`.
inline CartanSpec load_cartan_preset(const std::filesystem::path& dir, std::string_view label) {
  const auto path = dir / (std::string(label) + ".cartan");
  if (!std::filesystem::exists(path))
    throw Error(ErrorKind::usage, "unknown group '" + std::string(label) + "'");
  return load_cartan_spec(path);
}

}  // namespace gsc

#endif  // GSC_CARTAN_HPP
