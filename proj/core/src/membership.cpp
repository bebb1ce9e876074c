#include "parind/membership.hpp"

#include <chrono>
#include <stdexcept>

#include "parind/s_group.hpp"

namespace parind {

std::optional<MembershipCertificate> membership_solve(const GeneratorFamily& family, const GenChar& target) {
  if (target.table_ptr() != family.context().table())
    throw std::invalid_argument("target is not a character of the family's group");
  auto x = family.lattice().solve(target.coeffs());
  if (!x) return std::nullopt;
  MembershipCertificate cert{target, {}};
  for (std::size_t i = 0; i < x->size(); ++i)
    if ((*x)[i] != 0) cert.terms.emplace_back(i, (*x)[i]);
  return cert;
}

GenChar expand_terms(const GeneratorFamily& family, const std::vector<std::pair<std::size_t, Integer>>& terms) {
  GenChar sum = family.context().zero();
  for (const auto& [i, c] : terms) {
    if (i >= family.size()) throw std::out_of_range("certificate references generator " + std::to_string(i));
    sum += family.at(i).expansion * c;
  }
  return sum;
}

bool verify_certificate(const GeneratorFamily& family, const MembershipCertificate& cert) {
  if (cert.target.table_ptr() != family.context().table()) return false;
  for (const auto& [i, c] : cert.terms)
    if (i >= family.size()) return false;
  return expand_terms(family, cert.terms) == cert.target;
}

std::size_t SpanReport::failed() const {
  std::size_t n = 0;
  for (const auto& t : subgroup_targets) n += !t.certified;
  for (const auto& t : samples) n += !t.certified;
  return n;
}

std::string generator_category(const GeneratorDesc& g) {
  switch (g.kind) {
    case GeneratorDesc::Kind::Type1:
      return "Type1";
    case GeneratorDesc::Kind::CyclicPair:
      return "Cyclic";
    default:
      return g.tag.name();
  }
}

SpanReport span_report(const GeneratorFamily& family, std::size_t samples, std::uint64_t seed,
                       std::uint64_t sample_bound) {
  const auto start = std::chrono::steady_clock::now();
  const GroupContext& ctx = family.context();
  SpanReport report;
  report.group = ctx.name();
  report.flavor = family.flavor();
  report.generators = family.size();
  auto attempt = [&](const std::string& label, const GenChar& target) {
    TargetStatus st{label, false, 0};
    if (auto cert = membership_solve(family, target); cert && verify_certificate(family, *cert)) {
      st.certified = true;
      st.terms = cert->terms.size();
      for (const auto& [i, c] : cert->terms) ++report.usage[generator_category(family.at(i))];
    }
    return st;
  };
  const auto& lat = ctx.lattice();
  for (std::size_t id = 0; id < lat.size(); ++id)
    report.subgroup_targets.push_back(attempt("rho_H" + std::to_string(id), ctx.rho(lat.at(id).elements)));
  for (std::size_t i = 0; i < samples; ++i) {
    const GenChar s = random_S_element(ctx, seed + i, sample_bound);
    report.samples.push_back(attempt("sample" + std::to_string(i + 1), s));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace parind
