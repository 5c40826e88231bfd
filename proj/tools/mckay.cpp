// Command-line front end: mckay <command> (--family NAME ... | --spec FILE) [flags]

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "mckay/cli.hpp"
#include "mckay/error.hpp"

namespace {

std::optional<mckay::FamilyKind> family_kind(const std::string& name) {
  using mckay::FamilyKind;
  if (name == "cyclic" || name == "cyclic_sl2") return FamilyKind::cyclic_sl2;
  if (name == "binary_dihedral" || name == "bd") return FamilyKind::binary_dihedral;
  if (name == "symmetric") return FamilyKind::symmetric;
  if (name == "wreath") return FamilyKind::wreath;
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbifold cohomology of symplectic quotient singularities V/G"};
  app.require_subcommand(1, 1);

  std::string family;
  std::string inner = "cyclic";
  unsigned m = 0;
  unsigned n = 0;
  std::string spec_path;
  std::string format = "text";
  std::size_t max_group_order = 0;
  std::size_t max_element_order = 0;
  std::string assoc_mode = "auto";
  std::vector<std::string> skip;
  bool timing = false;
  bool allow_large = false;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"betti", "orbifold and Hochschild Betti tables"},
      {"ring", "structure constants of gr^F Z(G)"},
      {"classes", "conjugacy classes with ages and codimensions"},
      {"reflections", "age-1 classes (symplectic reflections)"},
      {"verify", "run every exhaustive verification sweep"},
      {"report", "all of the above"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    auto* fam = sub->add_option("--family", family, "cyclic | binary_dihedral | symmetric | wreath");
    auto* spec = sub->add_option("--spec", spec_path, "group-spec JSON file")->check(CLI::ExistingFile);
    fam->excludes(spec);
    sub->add_option("--m", m, "order parameter of cyclic / binary dihedral (also wreath inner)");
    sub->add_option("--n", n, "degree of the symmetric or wreath family");
    sub->add_option("--inner", inner, "wreath inner family: cyclic | binary_dihedral");
    sub->add_option("--format", format, "text | machine")->check(CLI::IsMember({"text", "machine"}));
    sub->add_option("--max-group-order", max_group_order, "closure cap");
    sub->add_option("--max-element-order", max_element_order, "element order cap");
    sub->add_option("--assoc-mode", assoc_mode, "auto | elements | classes")
        ->check(CLI::IsMember({"auto", "elements", "classes"}));
    sub->add_option("--skip", skip, "check to skip (repeatable)");
    sub->add_flag("--timing", timing, "append per-phase wall-clock times (output no longer byte-stable)");
    sub->add_flag("--allow-large", allow_large, "permit symmetric groups above degree 6");
  }

  CLI11_PARSE(app, argc, argv);

  const auto* chosen = app.get_subcommands().front();
  const mckay::Command command = *mckay::parse_command(chosen->get_name());

  try {
    mckay::Target target;
    if (!family.empty()) {
      auto kind = family_kind(family);
      if (!kind) {
        std::cerr << "error: unknown family '" << family << "'\n";
        return 2;
      }
      mckay::FamilySpec fs;
      fs.kind = *kind;
      fs.m = m;
      fs.n = n;
      if (*kind == mckay::FamilyKind::wreath) {
        auto in = family_kind(inner);
        if (!in) {
          std::cerr << "error: unknown inner family '" << inner << "'\n";
          return 2;
        }
        fs.inner = *in;
      }
      if ((*kind == mckay::FamilyKind::symmetric || *kind == mckay::FamilyKind::wreath) && n == 0) {
        std::cerr << "error: family " << family << " needs --n\n";
        return 2;
      }
      if (*kind != mckay::FamilyKind::symmetric && m == 0) {
        std::cerr << "error: family " << family << " needs --m\n";
        return 2;
      }
      target.family = fs;
    } else if (!spec_path.empty()) {
      std::ifstream in(spec_path);
      std::stringstream buffer;
      buffer << in.rdbuf();
      target.spec = mckay::parse_group_spec(buffer.str());
    } else {
      std::cerr << "error: give --family or --spec\n";
      return 2;
    }

    mckay::RunOptions options;
    if (max_group_order != 0) options.max_group_order = max_group_order;
    if (max_element_order != 0) options.max_element_order = max_element_order;
    if (assoc_mode == "elements") options.assoc_mode = mckay::AssocMode::elements;
    if (assoc_mode == "classes") options.assoc_mode = mckay::AssocMode::classes;
    options.skip.insert(skip.begin(), skip.end());
    options.timing = timing;
    options.allow_large = allow_large;

    const mckay::Report report = mckay::run_command(command, target, options);
    std::cout << mckay::render(report, format == "machine" ? mckay::OutputFormat::machine
                                                           : mckay::OutputFormat::text);
    return mckay::exit_code(report);
  } catch (const mckay::CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (stopped after " << e.partial() << ")\n";
    return 3;
  } catch (const mckay::ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return 1;
  } catch (const mckay::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
