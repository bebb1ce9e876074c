#pragma once

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parind/membership.hpp"

namespace parind {

/// One step of a decomposition following the case analysis of the induction theorem.
///
/// `value` lives on `context` and equals the weighted sum of the children (lifted through
/// induction or inflation for "Induced" / "Inflated" nodes), or unit * multiplicity for a leaf.
struct DecompositionNode {
  enum class LeafType { None, Type1, Type2 };

  std::string kind;  // "Leaf", "Lemma2.3", "Thm2.8.case2", ...
  std::string detail;
  ContextPtr context;
  GenChar value;

  LeafType leaf = LeafType::None;
  std::string generator;
  std::size_t irreducible = 0;  // Type1 leaves
  GenChar unit;
  Integer multiplicity;

  /// Subgroup (Induced) or kernel (Inflated) in the indexing of `context`.
  ElementSet link;
  /// Children found by a solve against a small lemma-prescribed generator set.
  bool lemma_scoped = false;
  std::vector<std::pair<Integer, std::shared_ptr<DecompositionNode>>> children;
};

using NodePtr = std::shared_ptr<DecompositionNode>;

class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws std::invalid_argument unless rho is in S_G, StructuralError if a case of the recursion
/// fails to produce a verified identity.
NodePtr decompose_structural(const ContextPtr& ctx, const GenChar& rho);

/// Every node's value equals the weighted sum of its children.
bool check_tree(const DecompositionNode& root);

/// Lifts every leaf to the root group and writes it in terms of `family` (a thm12
/// family of the root's group). nullopt if some lifted leaf is not a family generator.
std::optional<MembershipCertificate> flatten(const DecompositionNode& root, const GeneratorFamily& family);

std::set<std::string> node_kinds(const DecompositionNode& root);
std::size_t node_count(const DecompositionNode& root);

}  // namespace parind

namespace parind {

/// Indented text rendering, one node per line.
std::string render_tree(const DecompositionNode& root);

}  // namespace parind
