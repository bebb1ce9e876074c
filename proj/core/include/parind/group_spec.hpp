#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "parind/perm_group.hpp"

namespace parind {

/// Malformed group spec or catalog record.
class GroupSpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses either comma-separated cycle products ("(1 2 3)(4 5), (1 2)") or a named token:
/// C<n>, D<2n>, S<n>, A<n>, Q8, F<p>:<k>, joined by 'x' for direct products (C2xC2) and
/// with an optional power suffix (C2^3).
GroupPtr parse_group_spec(std::string_view text);

struct CatalogEntry {
  std::string name;
  GroupPtr group;
};

/// One JSON object per line: {"name", "degree", "generators": [cycle strings], "order"?}.
/// Blank lines are skipped. Errors carry the 1-based line number.
std::vector<CatalogEntry> parse_catalog(std::istream& in);
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path);

}  // namespace parind
