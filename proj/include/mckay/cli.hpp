#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mckay/families.hpp"
#include "mckay/orbifold.hpp"
#include "mckay/spec_file.hpp"

namespace mckay {

enum class Command { betti, ring, classes, reflections, verify, report };
enum class OutputFormat { text, machine };

std::optional<Command> parse_command(std::string_view name);
std::string command_name(Command c);

/// Names accepted by `--skip`.
inline const std::set<std::string> kCheckNames = {
    "age-codim", "class-invariance", "trans-lemma", "associativity",
    "betti-paths", "filtration",     "hilbert-match"};

/// Either a built-in family or a parsed group-spec file.
struct Target {
  std::optional<FamilySpec> family;
  std::optional<GroupSpecFile> spec;
};

struct RunOptions {
  std::optional<std::size_t> max_group_order;
  std::optional<std::size_t> max_element_order;
  AssocMode assoc_mode = AssocMode::automatic;
  std::set<std::string> skip;
  bool timing = false;
  bool allow_large = false;
};

struct GroupSummary {
  std::string label;
  std::size_t order = 0;
  std::size_t dim = 0;
  unsigned exponent = 1;
  unsigned conductor = 1;
  unsigned base_conductor = 1;
  bool in_SL = false;
  bool in_Sp = false;
  std::size_t class_count = 0;
};

struct ClassRow {
  std::size_t index = 0;
  std::size_t representative = 0;
  std::size_t size = 0;
  unsigned order = 1;
  unsigned age = 0;
  unsigned codim = 0;
  std::vector<std::size_t> multiplicities;
};

struct ReflectionSection {
  std::vector<std::size_t> classes;
  std::vector<std::vector<std::size_t>> members;
};

/// Everything a command produced. Sections a command does not compute stay empty.
struct Report {
  Command command = Command::report;
  GroupSummary group;
  std::vector<ClassRow> classes;
  bool has_classes = false;
  std::optional<DegreeTable> orbifold_betti;
  std::optional<DegreeTable> hochschild;
  std::optional<GradedRing> ring;
  std::optional<ReflectionSection> reflections;
  std::vector<CheckReport> checks;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, double>> timing;  // filled only with RunOptions::timing

  bool all_passed() const;
};

/// Builds the target group and runs one command. Throws on invalid targets,
/// cap overruns and symplectic-only commands on non-symplectic groups.
Report run_command(Command command, const Target& target, const RunOptions& options);

std::string render(const Report& report, OutputFormat format);

/// 0 when every check passed, 1 otherwise.
int exit_code(const Report& report);

}  // namespace mckay
