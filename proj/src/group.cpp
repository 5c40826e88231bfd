#include "mckay/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "mckay/error.hpp"

namespace mckay {

namespace {

bool preserves(const CycMatrix& g, const CycMatrix& omega) {
  return g.transpose() * omega * g == omega;
}

}  // namespace

std::optional<CycMatrix> FiniteMatrixGroup::omega() const {
  if (!omega_) return std::nullopt;
  return omega_->embed(conductor_);
}

std::size_t FiniteMatrixGroup::product(std::size_t i, std::size_t j) const {
  const std::size_t n = order();
  if (i >= n || j >= n) throw DimensionError("element index out of range");
  if (!cayley_.empty()) return cayley_[i * n + j];
  auto it = lookup_.find(base_elements_[i] * base_elements_[j]);
  if (it == lookup_.end()) throw ConsistencyError("group is not closed under multiplication");
  return it->second;
}

std::optional<std::size_t> FiniteMatrixGroup::index_of(const CycMatrix& g) const {
  if (g.rows() != dim_ || g.cols() != dim_) return std::nullopt;
  const unsigned common = std::lcm(g.conductor(), base_conductor_);
  auto restricted = g.embed(common).restrict_to(base_conductor_);
  if (!restricted) return std::nullopt;
  auto it = lookup_.find(*restricted);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

unsigned element_order(const CycMatrix& g, std::size_t cap) {
  if (!g.is_square()) throw DimensionError("order of a non-square matrix");
  CycMatrix power = g;
  for (std::size_t r = 1; r <= cap; ++r) {
    if (power.is_identity()) return static_cast<unsigned>(r);
    power = power * g;
  }
  throw CapExceeded("element order exceeds " + std::to_string(cap), cap);
}

FiniteMatrixGroup close_generators(std::span<const CycMatrix> gens,
                                   const std::optional<CycMatrix>& omega, const GroupCaps& caps) {
  if (caps.max_group_order < 1) throw PreconditionError("closure cap must be at least 1");
  std::size_t n = 0;
  if (!gens.empty()) {
    n = gens.front().rows();
  } else if (omega) {
    n = omega->rows();
  }
  for (std::size_t s = 0; s < gens.size(); ++s) {
    if (!gens[s].is_square() || gens[s].rows() != n) {
      throw DimensionError("generator " + std::to_string(s) + " is " +
                           std::to_string(gens[s].rows()) + "x" + std::to_string(gens[s].cols()) +
                           ", expected " + std::to_string(n) + "x" + std::to_string(n));
    }
  }
  if (omega) {
    if (omega->rows() != n) {
      throw DimensionError("omega is " + std::to_string(omega->rows()) + "x" +
                           std::to_string(omega->cols()) + " but generators act on dimension " +
                           std::to_string(n));
    }
    validate_symplectic_form(*omega);
  }

  // Smallest field holding every input entry: closure never leaves it.
  std::vector<CycNum> values;
  unsigned common = 1;
  for (const auto& g : gens) {
    values.insert(values.end(), g.entries().begin(), g.entries().end());
    common = std::lcm(common, g.conductor());
  }
  if (omega) {
    values.insert(values.end(), omega->entries().begin(), omega->entries().end());
    common = std::lcm(common, omega->conductor());
  }
  const unsigned base = minimal_conductor(values);
  const auto to_base = [&](const CycMatrix& m) { return *m.embed(common).restrict_to(base); };

  std::vector<CycMatrix> base_gens;
  for (std::size_t s = 0; s < gens.size(); ++s) {
    base_gens.push_back(to_base(gens[s]));
    if (determinant(base_gens.back()).is_zero()) {
      throw PreconditionError("generator " + std::to_string(s) + " is not invertible");
    }
    element_order(base_gens.back(), caps.max_element_order);
  }

  FiniteMatrixGroup G;
  G.dim_ = n;
  G.base_conductor_ = base;
  if (omega) G.omega_ = to_base(*omega);

  const std::size_t k = base_gens.size();
  std::vector<std::uint32_t> right;  // right[x * k + s] = index of x * gen_s
  std::vector<std::uint32_t> parent{0};
  std::vector<std::uint32_t> parent_gen{0};
  G.base_elements_.push_back(CycMatrix::identity(n, base));
  G.lookup_.emplace(G.base_elements_.front(), 0);
  for (std::size_t x = 0; x < G.base_elements_.size(); ++x) {
    for (std::size_t s = 0; s < k; ++s) {
      CycMatrix next = G.base_elements_[x] * base_gens[s];
      auto [it, inserted] =
          G.lookup_.try_emplace(std::move(next), static_cast<std::uint32_t>(G.base_elements_.size()));
      if (inserted) {
        if (G.base_elements_.size() >= caps.max_group_order) {
          throw CapExceeded("closure exceeded " + std::to_string(caps.max_group_order) +
                                " elements",
                            G.base_elements_.size());
        }
        G.base_elements_.push_back(it->first);
        parent.push_back(static_cast<std::uint32_t>(x));
        parent_gen.push_back(static_cast<std::uint32_t>(s));
      }
      right.push_back(it->second);
    }
  }
  const std::size_t order = G.base_elements_.size();

  for (std::size_t s = 0; s < k; ++s) G.generator_indices_.push_back(right[s]);

  if (order <= kCayleyTableLimit) {
    // Every element j > 0 is parent[j] * gen, so x * j = (x * parent[j]) * gen.
    G.cayley_.resize(order * order);
    for (std::size_t x = 0; x < order; ++x) {
      std::uint32_t* row = &G.cayley_[x * order];
      row[0] = static_cast<std::uint32_t>(x);
      for (std::size_t j = 1; j < order; ++j) row[j] = right[row[parent[j]] * k + parent_gen[j]];
    }
  }

  G.orders_.assign(order, 1);
  G.inverses_.assign(order, 0);
  for (std::size_t i = 1; i < order; ++i) {
    std::size_t power = i;
    unsigned r = 1;
    for (;;) {
      const std::size_t next = G.product(power, i);
      ++r;
      if (next == 0) break;
      if (r > caps.max_element_order) {
        throw CapExceeded("element order exceeds " + std::to_string(caps.max_element_order), r);
      }
      power = next;
    }
    G.orders_[i] = r;
    G.inverses_[i] = power;
  }

  G.exponent_ = std::accumulate(G.orders_.begin(), G.orders_.end(), 1u,
                                [](unsigned a, unsigned b) { return std::lcm(a, b); });
  G.conductor_ = std::lcm(G.exponent_, base);

  const Membership flags = check_membership(G);
  G.in_sl_ = flags.in_SL;
  G.in_sp_ = flags.in_Sp;
  return G;
}

Membership check_membership(const FiniteMatrixGroup& g) {
  Membership out{true, g.base_omega().has_value()};
  for (std::size_t i = 0; i < g.order() && (out.in_SL || out.in_Sp); ++i) {
    const CycMatrix& x = g.base_element(i);
    if (out.in_SL && !determinant(x).is_one()) out.in_SL = false;
    if (out.in_Sp && !preserves(x, *g.base_omega())) out.in_Sp = false;
  }
  return out;
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteMatrixGroup& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<ConjugacyClass> classes;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ConjugacyClass cls;
    cls.representative = start;
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      cls.members.push_back(x);
      for (std::size_t s : g.generator_indices()) {
        const std::size_t y = g.product(g.product(g.inverse(s), x), s);
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<std::size_t> class_lookup(std::span<const ConjugacyClass> classes,
                                      std::size_t group_order) {
  std::vector<std::size_t> class_of(group_order, classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t x : classes[c].members) class_of.at(x) = c;
  if (std::find(class_of.begin(), class_of.end(), classes.size()) != class_of.end()) {
    throw ConsistencyError("conjugacy classes do not cover the group");
  }
  return class_of;
}

std::map<std::size_t, std::size_t> class_sum_product(const FiniteMatrixGroup& g,
                                                     std::span<const ConjugacyClass> classes,
                                                     std::span<const std::size_t> class_of,
                                                     std::size_t i, std::size_t j) {
  if (i >= classes.size() || j >= classes.size()) throw DimensionError("class index out of range");
  std::map<std::size_t, std::size_t> out;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const std::size_t z = classes[k].representative;
    std::size_t count = 0;
    for (std::size_t x : classes[i].members) {
      if (class_of[g.product(g.inverse(x), z)] == j) ++count;
    }
    if (count != 0) out.emplace(k, count);
  }
  return out;
}

}  // namespace mckay
