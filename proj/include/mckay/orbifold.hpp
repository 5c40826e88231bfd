#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mckay/group.hpp"

namespace mckay {

/// Eigenvalue data of one group element g of order r: g has eigenvalue
/// zeta_r^j with multiplicity multiplicities[j], and
/// age g = sum_j j * m_j / r.
struct AgeData {
  std::size_t element = 0;
  unsigned order = 1;
  std::vector<std::size_t> multiplicities;
  unsigned age = 0;
  unsigned codim = 0;  // dim V - m_0
};

/// Age of a single element from the exact kernel dimensions of g - zeta^j I.
/// Throws PreconditionError on a group outside SL(V) and ConsistencyError if
/// the age of an SL element comes out fractional.
AgeData age(const FiniteMatrixGroup& g, std::size_t element);

/// Everything the orbifold computations share: per-element ages and fixed
/// spaces, plus conjugacy classes sorted by (age, codim, smallest member).
/// Requires G in SL(V).
class OrbifoldAnalysis {
 public:
  explicit OrbifoldAnalysis(const FiniteMatrixGroup& g);

  const FiniteMatrixGroup& group() const noexcept { return *group_; }
  const AgeData& age_data(std::size_t element) const { return ages_.at(element); }
  unsigned age(std::size_t element) const { return ages_.at(element).age; }
  /// Fixed subspace V^g at the base conductor.
  const Subspace& fixed(std::size_t element) const { return fixed_.at(element); }
  /// codim V^g from the fixed-space rank (independent of the multiplicities).
  std::size_t fixed_codim(std::size_t element) const { return fixed_.at(element).codim(); }

  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  std::size_t class_of(std::size_t element) const { return class_of_.at(element); }
  std::span<const std::size_t> class_of() const noexcept { return class_of_; }

  /// Members whose age or codim differs from their class representative.
  const std::vector<std::size_t>& class_variance() const noexcept { return class_variance_; }

  void require_symplectic(const char* operation) const;

 private:
  const FiniteMatrixGroup* group_;
  std::vector<AgeData> ages_;
  std::vector<Subspace> fixed_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> class_variance_;
};

struct Counterexample {
  std::vector<std::size_t> elements;
  std::string detail;
};

/// Outcome of one exhaustive sweep.
struct CheckReport {
  explicit CheckReport(std::string check_name = {}) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::vector<Counterexample> counterexamples;  // first few, in sweep order
  std::string note;

  void fail(Counterexample c);
};

inline constexpr std::size_t kMaxCounterexamples = 16;

/// Degree (2 * age or codim) -> number of conjugacy classes.
using DegreeTable = std::map<unsigned, std::size_t>;

struct OrbifoldBetti {
  DegreeTable dims;
};

struct GradedBasisElement {
  std::size_t class_index = 0;
  unsigned degree = 0;  // 2 * age
};

/// gr^F Z(G) on the class-sum basis.
struct GradedRing {
  std::vector<GradedBasisElement> basis;
  /// (i, j) -> {k -> c} with C_i * C_j = sum_k c C_k; zero entries omitted.
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Rational>> constants;

  Rational coefficient(std::size_t i, std::size_t j, std::size_t k) const;
};

enum class AssocMode { automatic, elements, classes };

/// Groups up to this order get the element-level triple sweep by default.
inline constexpr std::size_t kElementAssocLimit = 400;

enum class PairSweep { automatic, all_pairs, class_representatives };

/// Groups up to this order get every ordered pair in the transversality
/// sweep by default; larger ones take g1 from class representatives, which
/// covers every pair up to simultaneous conjugation.
inline constexpr std::size_t kAllPairsLimit = 400;

/// Checks 2 age g = codim V^g and m_j = m_{r-j} for every element.
CheckReport verify_age_codim(const OrbifoldAnalysis& a);

/// Age and codim are constant on every conjugacy class.
CheckReport verify_class_invariance(const OrbifoldAnalysis& a);

OrbifoldBetti orbifold_betti(const OrbifoldAnalysis& a);

/// c(g1, g2) = 1 iff age g1 + age g2 = age g1 g2.
int structure_constant_age(const OrbifoldAnalysis& a, std::size_t g1, std::size_t g2);

/// 1 iff V^g1 and V^g2 are transversal. Symplectic groups only.
int structure_constant_transversal(const OrbifoldAnalysis& a, std::size_t g1, std::size_t g2);

/// For transversal pairs, V^{g1 g2} = V^g1 cap V^g2; and on every pair the
/// age-additivity and transversality structure constants agree.
CheckReport verify_trans_lemma(const OrbifoldAnalysis& a, PairSweep sweep = PairSweep::automatic);

/// codim V^{g1 g2} <= codim V^g1 + codim V^g2 on all pairs.
CheckReport verify_filtration(const OrbifoldAnalysis& a);

GradedRing gr_center_ring(const OrbifoldAnalysis& a);

/// Associativity of the orbifold product, either on all |G|^3 basis triples
/// of H_G(V) or on the class-sum constants of gr^F Z(G).
CheckReport verify_associativity(const OrbifoldAnalysis& a, AssocMode mode = AssocMode::automatic);

/// Indices (into a.classes()) of the age-1 classes.
std::vector<std::size_t> symplectic_reflections(const OrbifoldAnalysis& a);

/// Classes counted by codim V^g from fixed-space ranks. Symplectic groups
/// only; throws ConsistencyError if it disagrees with orbifold_betti.
DegreeTable hochschild_dims(const OrbifoldAnalysis& a);

/// The two Betti computations agree under 2 age = codim.
CheckReport verify_betti_paths(const OrbifoldAnalysis& a);

}  // namespace mckay
