#include "mckay/cli.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "mckay/error.hpp"

namespace mckay {

namespace {

using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  Stopwatch(Report& report, bool enabled) : report_(report), enabled_(enabled) {}

  template <typename F>
  auto time(const std::string& phase, F&& f) {
    const auto start = Clock::now();
    auto result = f();
    if (enabled_) {
      const std::chrono::duration<double> elapsed = Clock::now() - start;
      report_.timing.emplace_back(phase, elapsed.count());
    }
    return result;
  }

 private:
  Report& report_;
  bool enabled_;
};

GroupCaps effective_caps(const Target& target, const RunOptions& options) {
  GroupCaps caps = target.spec ? target.spec->caps : GroupCaps{};
  if (options.max_group_order) caps.max_group_order = *options.max_group_order;
  if (options.max_element_order) caps.max_element_order = *options.max_element_order;
  return caps;
}

std::string target_label(const Target& target) {
  if (target.family) return target.family->name();
  if (target.spec && !target.spec->name.empty()) return target.spec->name;
  return "group-spec";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string table_json_key(unsigned degree) { return std::to_string(degree); }

ordered_json table_to_json(const DegreeTable& t) {
  ordered_json out = ordered_json::object();
  for (const auto& [deg, n] : t) out[table_json_key(deg)] = n;
  return out;
}

std::string class_label(std::size_t c) { return "c" + std::to_string(c); }

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  if (name == "betti") return Command::betti;
  if (name == "ring") return Command::ring;
  if (name == "classes") return Command::classes;
  if (name == "reflections") return Command::reflections;
  if (name == "verify") return Command::verify;
  if (name == "report") return Command::report;
  return std::nullopt;
}

std::string command_name(Command c) {
  switch (c) {
    case Command::betti: return "betti";
    case Command::ring: return "ring";
    case Command::classes: return "classes";
    case Command::reflections: return "reflections";
    case Command::verify: return "verify";
    case Command::report: return "report";
  }
  return "?";
}

bool Report::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

int exit_code(const Report& report) { return report.all_passed() ? 0 : 1; }

Report run_command(Command command, const Target& target, const RunOptions& options) {
  if (target.family.has_value() == target.spec.has_value()) {
    throw PreconditionError("exactly one of a family or a group-spec file must be given");
  }
  for (const auto& name : options.skip) {
    if (!kCheckNames.contains(name)) throw PreconditionError("unknown check '" + name + "'");
  }

  Report report;
  report.command = command;
  Stopwatch watch(report, options.timing);
  const GroupCaps caps = effective_caps(target, options);

  const FiniteMatrixGroup group = watch.time("closure", [&] {
    if (target.family) return build_family(*target.family, caps, options.allow_large);
    GroupSpecFile spec = *target.spec;
    spec.caps = caps;
    return build_group(spec);
  });

  report.group.label = target_label(target);
  report.group.order = group.order();
  report.group.dim = group.dim();
  report.group.exponent = group.exponent();
  report.group.conductor = group.conductor();
  report.group.base_conductor = group.base_conductor();
  report.group.in_SL = group.in_SL();
  report.group.in_Sp = group.in_Sp();

  const OrbifoldAnalysis analysis = watch.time("ages", [&] { return OrbifoldAnalysis(group); });
  report.group.class_count = analysis.classes().size();

  const bool want_all = command == Command::report;
  if (command == Command::verify || want_all) analysis.require_symplectic(command_name(command).c_str());

  if (command == Command::classes || want_all) {
    report.has_classes = true;
    for (std::size_t c = 0; c < analysis.classes().size(); ++c) {
      const auto& cls = analysis.classes()[c];
      const AgeData& d = analysis.age_data(cls.representative);
      report.classes.push_back(
          {c, cls.representative, cls.size(), d.order, *cls.age, *cls.codim, d.multiplicities});
    }
  }

  if (command == Command::betti || want_all) {
    report.orbifold_betti = orbifold_betti(analysis).dims;
    if (group.in_Sp()) {
      report.hochschild = hochschild_dims(analysis);
    } else {
      report.notes.push_back("no symplectic form preserved: Hochschild grading not computed");
    }
  }

  if (command == Command::ring || want_all) {
    report.ring = watch.time("ring", [&] { return gr_center_ring(analysis); });
  }

  if (command == Command::reflections || want_all) {
    ReflectionSection section;
    section.classes = symplectic_reflections(analysis);
    for (std::size_t c : section.classes) section.members.push_back(analysis.classes()[c].members);
    report.reflections = std::move(section);
  }

  if (command == Command::verify || want_all) {
    const auto run = [&](const std::string& name, auto&& check) {
      if (options.skip.contains(name)) {
        report.notes.push_back("skipped " + name);
        return;
      }
      report.checks.push_back(watch.time(name, check));
    };
    run("age-codim", [&] { return verify_age_codim(analysis); });
    run("class-invariance", [&] { return verify_class_invariance(analysis); });
    run("filtration", [&] { return verify_filtration(analysis); });
    run("trans-lemma", [&] { return verify_trans_lemma(analysis); });
    run("associativity", [&] { return verify_associativity(analysis, options.assoc_mode); });
    run("betti-paths", [&] { return verify_betti_paths(analysis); });
    if (target.family && target.family->kind == FamilyKind::symmetric) {
      run("hilbert-match", [&] {
        CheckReport r{"hilbert-match"};
        r.cases = 1;
        const DegreeTable orb = orbifold_betti(analysis).dims;
        const DegreeTable hilb = hilbert_betti(target.family->n);
        r.note = "orbifold Betti numbers vs partition counts of Hilb^n(C^2)";
        if (orb != hilb) r.fail({{}, "orbifold and Hilbert-scheme tables differ"});
        return r;
      });
    }
  }
  return report;
}

namespace {

std::string render_machine(const Report& report) {
  ordered_json doc;
  doc["schema"] = "mckay-report/1";
  doc["command"] = command_name(report.command);
  const auto& g = report.group;
  doc["group"] = {{"label", g.label},
                  {"order", g.order},
                  {"dim", g.dim},
                  {"exponent", g.exponent},
                  {"conductor", g.conductor},
                  {"base_conductor", g.base_conductor},
                  {"in_SL", g.in_SL},
                  {"in_Sp", g.in_Sp},
                  {"classes", g.class_count}};
  if (report.has_classes) {
    ordered_json rows = ordered_json::array();
    for (const auto& c : report.classes) {
      rows.push_back({{"index", c.index},
                      {"representative", c.representative},
                      {"size", c.size},
                      {"order", c.order},
                      {"age", c.age},
                      {"codim", c.codim},
                      {"multiplicities", c.multiplicities}});
    }
    doc["classes"] = rows;
  }
  if (report.orbifold_betti) {
    doc["betti"] = {{"orbifold", table_to_json(*report.orbifold_betti)},
                    {"hochschild", report.hochschild ? table_to_json(*report.hochschild)
                                                     : ordered_json(nullptr)},
                    {"identification", "orbifold degree 2*age = Hochschild degree codim V^g"}};
  }
  if (report.ring) {
    ordered_json basis = ordered_json::array();
    for (const auto& b : report.ring->basis) basis.push_back({{"class", b.class_index}, {"degree", b.degree}});
    ordered_json constants = ordered_json::array();
    for (const auto& [ij, row] : report.ring->constants) {
      for (const auto& [k, c] : row) {
        constants.push_back({{"i", ij.first}, {"j", ij.second}, {"k", k}, {"value", c.get_str()}});
      }
    }
    doc["ring"] = {{"basis", basis}, {"constants", constants}};
  }
  if (report.reflections) {
    doc["reflections"] = {{"classes", report.reflections->classes},
                          {"count", report.reflections->classes.size()},
                          {"members", report.reflections->members}};
  }
  if (report.command == Command::verify || report.command == Command::report) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
      ordered_json ces = ordered_json::array();
      for (const auto& ce : c.counterexamples) ces.push_back({{"elements", ce.elements}, {"detail", ce.detail}});
      checks.push_back({{"name", c.name},
                        {"passed", c.passed},
                        {"cases", c.cases},
                        {"violations", c.violations},
                        {"note", c.note},
                        {"counterexamples", ces}});
    }
    doc["checks"] = checks;
  }
  doc["notes"] = report.notes;
  doc["passed"] = report.all_passed();
  if (!report.timing.empty()) {
    ordered_json t = ordered_json::object();
    for (const auto& [phase, seconds] : report.timing) t[phase] = seconds;
    doc["timing_seconds"] = t;
  }
  return doc.dump(2) + "\n";
}

std::string render_text(const Report& report) {
  std::ostringstream os;
  const auto& g = report.group;
  os << "group           " << g.label << '\n'
     << "order           " << g.order << '\n'
     << "dim V           " << g.dim << '\n'
     << "exponent        " << g.exponent << '\n'
     << "conductor       " << g.conductor << " (entries in Q(zeta_" << g.base_conductor << "))\n"
     << "in SL(V)        " << yes_no(g.in_SL) << '\n'
     << "in Sp(V)        " << yes_no(g.in_Sp) << '\n'
     << "classes         " << g.class_count << '\n';

  if (report.has_classes) {
    os << "\nconjugacy classes\n";
    os << std::setw(7) << "class" << std::setw(7) << "rep" << std::setw(7) << "size"
       << std::setw(7) << "order" << std::setw(6) << "age" << std::setw(7) << "codim"
       << "  multiplicities\n";
    for (const auto& c : report.classes) {
      os << std::setw(7) << class_label(c.index) << std::setw(7) << c.representative
         << std::setw(7) << c.size << std::setw(7) << c.order << std::setw(6) << c.age
         << std::setw(7) << c.codim << "  [";
      for (std::size_t j = 0; j < c.multiplicities.size(); ++j)
        os << (j ? " " : "") << c.multiplicities[j];
      os << "]\n";
    }
  }

  if (report.orbifold_betti) {
    os << "\nBetti numbers (orbifold degree 2*age = Hochschild degree codim V^g)\n";
    os << std::setw(8) << "degree" << std::setw(11) << "orbifold" << std::setw(13)
       << "hochschild" << '\n';
    DegreeTable degrees = *report.orbifold_betti;
    if (report.hochschild)
      for (const auto& [d, n] : *report.hochschild) degrees.try_emplace(d, 0);
    for (const auto& [d, _] : degrees) {
      const auto lookup = [d = d](const std::optional<DegreeTable>& t) -> std::string {
        if (!t) return "-";
        auto it = t->find(d);
        return std::to_string(it == t->end() ? 0 : it->second);
      };
      os << std::setw(8) << d << std::setw(11) << lookup(report.orbifold_betti) << std::setw(13)
         << lookup(report.hochschild) << '\n';
    }
  }

  if (report.ring) {
    os << "\ngr^F Z(G) on class sums\n  basis:";
    for (const auto& b : report.ring->basis) os << ' ' << class_label(b.class_index) << "(deg " << b.degree << ')';
    os << '\n';
    for (const auto& [ij, row] : report.ring->constants) {
      if (ij.first == 0 || ij.second == 0) continue;  // unit products
      os << "  " << class_label(ij.first) << " * " << class_label(ij.second) << " =";
      bool first = true;
      for (const auto& [k, c] : row) {
        os << (first ? " " : " + ");
        first = false;
        if (c != 1) os << c.get_str() << ' ';
        os << class_label(k);
      }
      os << '\n';
    }
    os << "  (products with c0 = identity omitted; unlisted products vanish)\n";
  }

  if (report.reflections) {
    os << "\nsymplectic reflections (age-1 classes): " << report.reflections->classes.size()
       << " = dim H^2_orb = number of deformation parameters\n";
    for (std::size_t i = 0; i < report.reflections->classes.size(); ++i) {
      os << "  " << class_label(report.reflections->classes[i]) << ": "
         << report.reflections->members[i].size() << " elements\n";
    }
  }

  if (!report.checks.empty()) {
    os << "\nchecks\n";
    for (const auto& c : report.checks) {
      os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << std::left << std::setw(18) << c.name
         << std::right << c.cases << " cases";
      if (!c.note.empty()) os << "  (" << c.note << ')';
      os << '\n';
      for (const auto& ce : c.counterexamples) {
        os << "         counterexample (";
        for (std::size_t i = 0; i < ce.elements.size(); ++i) os << (i ? ", " : "") << ce.elements[i];
        os << "): " << ce.detail << '\n';
      }
      if (c.violations > c.counterexamples.size()) {
        os << "         ... " << c.violations - c.counterexamples.size() << " more\n";
      }
    }
    os << "result: " << (report.all_passed() ? "all checks passed" : "VERIFICATION FAILED") << '\n';
  }

  for (const auto& note : report.notes) os << "note: " << note << '\n';

  if (!report.timing.empty()) {
    os << "\ntiming\n";
    for (const auto& [phase, seconds] : report.timing)
      os << "  " << std::left << std::setw(18) << phase << std::right << std::fixed
         << std::setprecision(3) << seconds << " s\n";
  }
  return os.str();
}

}  // namespace

std::string render(const Report& report, OutputFormat format) {
  return format == OutputFormat::machine ? render_machine(report) : render_text(report);
}

}  // namespace mckay
