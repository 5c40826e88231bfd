#include "mckay/orbifold.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "mckay/error.hpp"

namespace mckay {

namespace {

std::string describe_pair(std::size_t g1, std::size_t g2) {
  return "(" + std::to_string(g1) + ", " + std::to_string(g2) + ")";
}

std::string render_table(const DegreeTable& t) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [deg, n] : t) {
    if (!first) os << ", ";
    first = false;
    os << deg << ": " << n;
  }
  os << '}';
  return os.str();
}

}  // namespace

void CheckReport::fail(Counterexample c) {
  passed = false;
  ++violations;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(std::move(c));
}

AgeData age(const FiniteMatrixGroup& g, std::size_t element) {
  if (!g.in_SL()) {
    throw PreconditionError("ages are only integral for groups inside SL(V)");
  }
  AgeData out;
  out.element = element;
  out.order = g.element_order(element);
  out.multiplicities = eigen_multiplicities(g.base_element(element), out.order);
  std::size_t weighted = 0;
  for (std::size_t j = 0; j < out.multiplicities.size(); ++j) weighted += j * out.multiplicities[j];
  if (weighted % out.order != 0) {
    throw ConsistencyError("element " + std::to_string(element) + " of SL(V) has fractional age " +
                           std::to_string(weighted) + "/" + std::to_string(out.order));
  }
  out.age = static_cast<unsigned>(weighted / out.order);
  out.codim = static_cast<unsigned>(g.dim() - out.multiplicities[0]);
  return out;
}

OrbifoldAnalysis::OrbifoldAnalysis(const FiniteMatrixGroup& g) : group_(&g) {
  if (!g.in_SL()) {
    throw PreconditionError("orbifold cohomology needs a group inside SL(V)");
  }
  const std::size_t n = g.order();
  ages_.reserve(n);
  fixed_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ages_.push_back(mckay::age(g, i));
    fixed_.push_back(fixed_space(g.base_element(i)));
  }

  classes_ = conjugacy_classes(g);
  for (auto& cls : classes_) {
    const std::size_t rep = cls.representative;
    cls.age = ages_[rep].age;
    cls.codim = static_cast<unsigned>(fixed_[rep].codim());
    for (std::size_t x : cls.members) {
      if (ages_[x].age != *cls.age || fixed_[x].codim() != *cls.codim ||
          ages_[x].codim != *cls.codim) {
        class_variance_.push_back(x);
      }
    }
  }
  std::sort(classes_.begin(), classes_.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    return std::tie(*a.age, *a.codim, a.representative) <
           std::tie(*b.age, *b.codim, b.representative);
  });
  class_of_ = class_lookup(classes_, n);
}

void OrbifoldAnalysis::require_symplectic(const char* operation) const {
  if (!group_->in_Sp()) {
    throw PreconditionError(std::string(operation) +
                            " needs a group preserving a symplectic form");
  }
}

Rational GradedRing::coefficient(std::size_t i, std::size_t j, std::size_t k) const {
  auto it = constants.find({i, j});
  if (it == constants.end()) return 0;
  auto jt = it->second.find(k);
  return jt == it->second.end() ? Rational(0) : jt->second;
}

CheckReport verify_age_codim(const OrbifoldAnalysis& a) {
  a.require_symplectic("age-codim check");
  CheckReport report{"age-codim"};
  const auto& g = a.group();
  for (std::size_t x = 0; x < g.order(); ++x) {
    ++report.cases;
    const AgeData& d = a.age_data(x);
    const std::size_t codim = a.fixed_codim(x);
    if (2 * static_cast<std::size_t>(d.age) != codim || d.codim != codim) {
      report.fail({{x}, "age " + std::to_string(d.age) + " but codim V^g = " +
                            std::to_string(codim)});
      continue;
    }
    for (std::size_t j = 1; j < d.order; ++j) {
      if (d.multiplicities[j] != d.multiplicities[d.order - j]) {
        report.fail({{x}, "m_" + std::to_string(j) + " = " + std::to_string(d.multiplicities[j]) +
                              " but m_" + std::to_string(d.order - j) + " = " +
                              std::to_string(d.multiplicities[d.order - j])});
        break;
      }
    }
  }
  return report;
}

CheckReport verify_class_invariance(const OrbifoldAnalysis& a) {
  CheckReport report{"class-invariance"};
  report.cases = a.group().order();
  for (std::size_t x : a.class_variance()) {
    const auto& cls = a.classes()[a.class_of(x)];
    report.fail({{x, cls.representative},
                 "age/codim differ from class representative " + std::to_string(cls.representative)});
  }
  return report;
}

OrbifoldBetti orbifold_betti(const OrbifoldAnalysis& a) {
  OrbifoldBetti out;
  for (const auto& cls : a.classes()) ++out.dims[2 * *cls.age];
  return out;
}

int structure_constant_age(const OrbifoldAnalysis& a, std::size_t g1, std::size_t g2) {
  return a.age(g1) + a.age(g2) == a.age(a.group().product(g1, g2)) ? 1 : 0;
}

int structure_constant_transversal(const OrbifoldAnalysis& a, std::size_t g1, std::size_t g2) {
  a.require_symplectic("transversality structure constant");
  return transversal(a.fixed(g1), a.fixed(g2)) ? 1 : 0;
}

CheckReport verify_trans_lemma(const OrbifoldAnalysis& a, PairSweep sweep) {
  a.require_symplectic("transversality lemma check");
  const auto& g = a.group();
  if (sweep == PairSweep::automatic) {
    sweep = g.order() <= kAllPairsLimit ? PairSweep::all_pairs : PairSweep::class_representatives;
  }
  CheckReport report{"trans-lemma"};
  std::vector<std::size_t> firsts;
  if (sweep == PairSweep::all_pairs) {
    for (std::size_t x = 0; x < g.order(); ++x) firsts.push_back(x);
    report.note = "all ordered pairs";
  } else {
    for (const auto& cls : a.classes()) firsts.push_back(cls.representative);
    std::sort(firsts.begin(), firsts.end());
    report.note = "g1 over class representatives (all pairs up to simultaneous conjugation)";
  }
  std::size_t transversal_pairs = 0;
  for (std::size_t g1 : firsts) {
    for (std::size_t g2 = 0; g2 < g.order(); ++g2) {
      ++report.cases;
      const int by_age = structure_constant_age(a, g1, g2);
      const int by_trans = structure_constant_transversal(a, g1, g2);
      if (by_age != by_trans) {
        report.fail({{g1, g2}, "age constant " + std::to_string(by_age) +
                                   " but transversality constant " + std::to_string(by_trans)});
      }
      if (by_trans == 0) continue;
      ++transversal_pairs;
      const Subspace meet = subspace_intersection(a.fixed(g1), a.fixed(g2));
      if (!same_subspace(a.fixed(g.product(g1, g2)), meet)) {
        report.fail({{g1, g2}, "V^(g1 g2) differs from V^g1 cap V^g2 on transversal pair " +
                                   describe_pair(g1, g2)});
      }
    }
  }
  report.note += "; " + std::to_string(transversal_pairs) + " transversal";
  return report;
}

CheckReport verify_filtration(const OrbifoldAnalysis& a) {
  CheckReport report{"filtration"};
  const auto& g = a.group();
  for (std::size_t g1 = 0; g1 < g.order(); ++g1) {
    for (std::size_t g2 = 0; g2 < g.order(); ++g2) {
      ++report.cases;
      const std::size_t lhs = a.fixed_codim(g.product(g1, g2));
      const std::size_t rhs = a.fixed_codim(g1) + a.fixed_codim(g2);
      if (lhs > rhs) {
        report.fail({{g1, g2}, "codim V^(g1 g2) = " + std::to_string(lhs) + " exceeds " +
                                   std::to_string(rhs)});
      }
    }
  }
  return report;
}

GradedRing gr_center_ring(const OrbifoldAnalysis& a) {
  const auto& g = a.group();
  const auto& classes = a.classes();
  GradedRing ring;
  for (std::size_t c = 0; c < classes.size(); ++c) ring.basis.push_back({c, 2 * *classes[c].age});
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = 0; j < classes.size(); ++j) {
      const auto counts = class_sum_product(g, classes, a.class_of(), i, j);
      std::size_t hits = 0;
      for (const auto& [k, n] : counts) hits += n * classes[k].size();
      if (hits != classes[i].size() * classes[j].size()) {
        throw ConsistencyError("class-sum constants for (" + std::to_string(i) + ", " +
                               std::to_string(j) + ") do not account for every product");
      }
      std::map<std::size_t, Rational> kept;
      for (const auto& [k, n] : counts) {
        if (*classes[k].age == *classes[i].age + *classes[j].age) kept.emplace(k, Rational(n));
      }
      if (!kept.empty()) ring.constants.emplace(std::make_pair(i, j), std::move(kept));
    }
  }
  for (const auto& [ij, row] : ring.constants) {
    for (const auto& [k, c] : row) {
      if (c.get_den() != 1) throw ConsistencyError("non-integral class-sum constant");
    }
  }
  return ring;
}

namespace {

CheckReport associativity_elements(const OrbifoldAnalysis& a) {
  const auto& g = a.group();
  if (!g.has_cayley_table()) {
    throw PreconditionError("element-level associativity needs a Cayley table (order <= " +
                            std::to_string(kCayleyTableLimit) + ")");
  }
  CheckReport report{"associativity"};
  report.note = "elements mode";
  const std::size_t n = g.order();
  std::vector<unsigned> ages(n);
  for (std::size_t x = 0; x < n; ++x) ages[x] = a.age(x);
  std::vector<std::size_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = g.product(x, y);
  const auto c = [&](std::size_t x, std::size_t y, std::size_t xy) {
    return ages[x] + ages[y] == ages[xy];
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xy = table[x * n + y];
      const bool c_xy = c(x, y, xy);
      for (std::size_t z = 0; z < n; ++z) {
        ++report.cases;
        const std::size_t yz = table[y * n + z];
        const std::size_t left = table[xy * n + z];
        const std::size_t right = table[x * n + yz];
        if (left != right) {
          report.fail({{x, y, z}, "group multiplication is not associative"});
          continue;
        }
        const bool lhs = c_xy && c(xy, z, left);
        const bool rhs = c(y, z, yz) && c(x, yz, right);
        if (lhs != rhs) {
          report.fail({{x, y, z}, "(g1.g2).g3 has coefficient " + std::to_string(lhs) +
                                      " but g1.(g2.g3) has " + std::to_string(rhs)});
        }
      }
    }
  }
  return report;
}

CheckReport associativity_classes(const OrbifoldAnalysis& a) {
  const GradedRing ring = gr_center_ring(a);
  const std::size_t k = a.classes().size();
  CheckReport report{"associativity"};
  report.note = "classes mode";
  // Sparse rows: row(i, j) lists the (k, c) with nonzero C_i C_j coefficient.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> row(k * k);
  for (const auto& [ij, entries] : ring.constants)
    for (const auto& [t, c] : entries) row[ij.first * k + ij.second].emplace_back(t, c);
  std::vector<Rational> lhs(k);
  std::vector<Rational> rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (const auto& [t, c1] : row[i * k + j])
          for (const auto& [m, c2] : row[t * k + l]) lhs[m] += c1 * c2;
        for (const auto& [t, c1] : row[j * k + l])
          for (const auto& [m, c2] : row[i * k + t]) rhs[m] += c1 * c2;
        for (std::size_t m = 0; m < k; ++m) {
          ++report.cases;
          if (lhs[m] != rhs[m]) {
            report.fail({{i, j, l, m}, "(C_i C_j) C_l has " + lhs[m].get_str() +
                                           " C_m but C_i (C_j C_l) has " + rhs[m].get_str()});
          }
        }
      }
    }
  }
  return report;
}

}  // namespace

CheckReport verify_associativity(const OrbifoldAnalysis& a, AssocMode mode) {
  if (mode == AssocMode::automatic) {
    mode = a.group().order() <= kElementAssocLimit ? AssocMode::elements : AssocMode::classes;
  }
  return mode == AssocMode::elements ? associativity_elements(a) : associativity_classes(a);
}

std::vector<std::size_t> symplectic_reflections(const OrbifoldAnalysis& a) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < a.classes().size(); ++c)
    if (*a.classes()[c].age == 1) out.push_back(c);
  return out;
}

namespace {

DegreeTable codim_table(const OrbifoldAnalysis& a) {
  DegreeTable dims;
  for (const auto& cls : a.classes()) ++dims[static_cast<unsigned>(a.fixed_codim(cls.representative))];
  return dims;
}

}  // namespace

DegreeTable hochschild_dims(const OrbifoldAnalysis& a) {
  a.require_symplectic("Hochschild class count");
  DegreeTable dims = codim_table(a);
  const DegreeTable orb = orbifold_betti(a).dims;
  if (dims != orb) {
    throw ConsistencyError("Hochschild table " + render_table(dims) +
                           " differs from orbifold table " + render_table(orb));
  }
  return dims;
}

CheckReport verify_betti_paths(const OrbifoldAnalysis& a) {
  a.require_symplectic("Betti two-path check");
  CheckReport report{"betti-paths"};
  const DegreeTable hh = codim_table(a);
  const DegreeTable orb = orbifold_betti(a).dims;
  report.cases = a.classes().size();
  if (hh != orb) {
    report.fail({{}, "codim table " + render_table(hh) + " vs 2*age table " + render_table(orb)});
  }
  return report;
}

}  // namespace mckay
