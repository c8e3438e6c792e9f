#ifndef GSC_PARABOLIC_HPP
#define GSC_PARABOLIC_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gsc/cartan.hpp"
#include "gsc/characters.hpp"
#include "gsc/coxeter_group.hpp"
#include "gsc/error.hpp"

namespace gsc {

/// W_J inside W. The subgroup is enumerated on its own from the restricted
/// Cartan data and then embedded by replaying reduced words in the parent.
struct ParabolicSubgroup {
  GroupPtr parent;
  NodeSet nodes;
  GroupPtr group;
  std::vector<ElementId> embedding;  // subgroup id -> parent id
  std::vector<int> class_fusion;     // subgroup class -> parent class

  std::size_t order() const { return group->order(); }
};

inline ParabolicSubgroup parabolic(const GroupPtr& g, NodeSet nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  for (int i : nodes)
    if (i < 0 || i >= g->rank())
      throw Error(ErrorKind::invalid_input, "node index " + std::to_string(i) + " out of range");

  ParabolicSubgroup p;
  p.parent = g;
  p.nodes = nodes;
  p.group = build_group(g->spec().restricted(nodes));
  const auto& sub = *p.group;
  p.embedding.resize(sub.order());
  for (ElementId e = 0; e < sub.order(); ++e) {
    const auto word = sub.reduced_word(e);
    ElementId x = g->identity();
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      x = g->left_mul(nodes[static_cast<std::size_t>(*it)], x);
    p.embedding[e] = x;
  }
  for (const auto& c : sub.classes()) p.class_fusion.push_back(g->class_of(p.embedding[c.representative]));
  return p;
}

/// Restriction of a class function on the parent to W_J.
inline ClassFunction restrict_to(const ParabolicSubgroup& p, const ClassFunction& chi) {
  if (chi.group() != p.parent)
    throw Error(ErrorKind::group_mismatch, "character does not live on the parent group");
  std::vector<Rational> v;
  for (int c : p.class_fusion) v.push_back(chi[static_cast<std::size_t>(c)]);
  return ClassFunction(p.group, std::move(v));
}

/// (eta : chi|_{W_J}) = 1/|W_J| sum_{h in W_J} eta(h) chi(h), for real-valued eta.
inline Integer restriction_multiplicity(const ClassFunction& chi, const ParabolicSubgroup& p,
                                        const ClassFunction& eta) {
  if (eta.group() != p.group)
    throw Error(ErrorKind::group_mismatch, "eta does not live on the parabolic subgroup");
  const Rational m = inner_product(restrict_to(p, chi), eta);
  if (denominator(m) != 1)
    throw Error(ErrorKind::not_virtual_character,
                "non-integral restriction multiplicity; invalid input character");
  return numerator(m);
}

/// epsilon_J, the sign character of W_J.
inline ClassFunction sign_character(const ParabolicSubgroup& p) { return sign_character(p.group); }

}  // namespace gsc

#endif  // GSC_PARABOLIC_HPP
