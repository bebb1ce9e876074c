#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parind/generators.hpp"

namespace parind {

struct MembershipCertificate {
  GenChar target;
  /// (generator index in the family, coefficient), sorted by index, no zero coefficients.
  std::vector<std::pair<std::size_t, Integer>> terms;
};

/// Integer combination of the family's expansions equal to `target`, or nullopt when the
/// target lies outside their lattice. Throws std::invalid_argument if `target` lives on a
/// different table.
std::optional<MembershipCertificate> membership_solve(const GeneratorFamily& family, const GenChar& target);

/// Signed sum of the referenced expansions.
GenChar expand_terms(const GeneratorFamily& family, const std::vector<std::pair<std::size_t, Integer>>& terms);

/// Recomputes the sum from the generator expansions and compares it with the target.
bool verify_certificate(const GeneratorFamily& family, const MembershipCertificate& cert);

struct TargetStatus {
  std::string label;
  bool certified = false;
  std::size_t terms = 0;
};

struct SpanReport {
  std::string group;
  Flavor flavor = Flavor::Theorem12;
  std::size_t generators = 0;
  std::vector<TargetStatus> subgroup_targets;
  std::vector<TargetStatus> samples;
  /// Number of certificate terms per generator category ("Type1", "C2xC2", "D8", "D6", ...).
  std::map<std::string, std::size_t> usage;
  double seconds = 0;

  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
};

/// Category used in usage statistics: "Type1", the quotient tag name for Type2 and
/// DihedralBasis generators, "Cyclic" for CyclicPair.
std::string generator_category(const GeneratorDesc& g);

/// Certifies rho_H for every subgroup class and `samples` random elements of S_G drawn with
/// seeds seed, seed+1, ...
SpanReport span_report(const GeneratorFamily& family, std::size_t samples, std::uint64_t seed,
                       std::uint64_t sample_bound = 3);

}  // namespace parind
