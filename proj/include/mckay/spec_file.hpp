#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mckay/group.hpp"

namespace mckay {

/// A group given by explicit generator matrices. See docs/group-spec.md for
/// the file format.
struct GroupSpecFile {
  std::string name;
  unsigned conductor = 1;
  std::size_t dim = 0;
  /// Symplectic form as written in the file; nullopt when the file omits it.
  std::optional<CycMatrix> omega;
  /// The file asked for no symplectic form at all ("omega": null).
  bool omega_disabled = false;
  std::vector<CycMatrix> generators;
  GroupCaps caps;

  /// The form used for closure: the explicit one, else the standard 2x2
  /// blocks when dim is even, else none.
  std::optional<CycMatrix> effective_omega() const;
};

/// Parses one cyclotomic entry token: integers, rationals "p/q", "z" and
/// "z^k" (zeta_conductor^k), combined with +, -, * and parentheses.
CycNum parse_cyc_token(std::string_view token, unsigned conductor);

/// Parses and validates a JSON group-spec document. Errors carry the JSON
/// path (or line:column for syntax errors) of the offending item.
GroupSpecFile parse_group_spec(std::string_view text);

FiniteMatrixGroup build_group(const GroupSpecFile& spec);

}  // namespace mckay
