#include "stylic/algebra.hpp"

#include <cassert>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace stylic {

AlgebraElement AlgebraElement::of(const StylMonoid& m, ElementId x, const Rat& coeff) {
  AlgebraElement out(m);
  if (coeff != 0) out.terms_.emplace(x, coeff);
  return out;
}

Rat AlgebraElement::coeff(ElementId x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? Rat(0) : it->second;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  assert(monoid_ == rhs.monoid_);
  for (const auto& [x, c] : rhs.terms_) {
    Rat& slot = terms_[x];
    slot += c;
    if (slot == 0) terms_.erase(x);
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  assert(monoid_ == rhs.monoid_);
  for (const auto& [x, c] : rhs.terms_) {
    Rat& slot = terms_[x];
    slot -= c;
    if (slot == 0) terms_.erase(x);
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [x, c] : terms_) c *= scalar;
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out(*monoid_);
  for (const auto& [x, c] : terms_) out.terms_.emplace(x, -c);
  return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  assert(a.monoid_ == b.monoid_);
  AlgebraElement out(*a.monoid_);
  for (const auto& [x, cx] : a.terms_) {
    for (const auto& [y, cy] : b.terms_) {
      StylMonoid::ElementId xy = a.monoid_->multiply(x, y);
      Rat& slot = out.terms_[xy];
      slot += cx * cy;
      if (slot == 0) out.terms_.erase(xy);
    }
  }
  return out;
}

std::vector<Rat> AlgebraElement::to_dense() const {
  std::vector<Rat> v(monoid_->size());
  for (const auto& [x, c] : terms_) v[x] = c;
  return v;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  const Alphabet& alpha = monoid_->alphabet();
  std::string out;
  for (const auto& [x, c] : terms_) {
    std::string name = x == monoid_->identity() ? "1" : alpha.format(monoid_->rep_word(x));
    if (!out.empty()) out += " + ";
    out += c.get_str() + "*" + name;
  }
  return out;
}

AlgebraElement idempotent(const StylMonoid& m, Column gamma) {
  AlgebraElement e = AlgebraElement::unit(m);
  for (int i = 1; i <= m.n(); ++i) {
    Letter a(i);
    if (gamma.contains(a)) continue;
    e = e * (AlgebraElement::unit(m) - AlgebraElement::of(m, m.generator(a)));
  }
  if (!gamma.empty()) e = e * AlgebraElement::of(m, m.element_of_word(gamma.as_word()));
  return e;
}

IdempotentSystem::IdempotentSystem(const StylMonoid& m) : monoid_(&m) {
  idempotents_.reserve(m.alphabet().num_columns());
  for (Column g : m.alphabet().columns()) idempotents_.push_back(idempotent(m, g));
}

std::size_t corner_dimension_with(const std::vector<AlgebraElement>& left_products,
                                  const AlgebraElement& e_delta) {
  RowSpace space(e_delta.monoid().size());
  for (const AlgebraElement& ly : left_products) {
    AlgebraElement v = ly * e_delta;
    if (!v.is_zero()) space.insert(v.to_dense());
  }
  return space.rank();
}

std::vector<AlgebraElement> corner_left_products(const StylMonoid& m, const IdempotentSystem& sys,
                                                 Column gamma) {
  const AlgebraElement& e = sys.at(gamma);
  StylMonoid::ElementId g = gamma.empty() ? m.identity() : m.element_of_word(gamma.as_word());
  std::vector<bool> seen(m.size(), false);
  std::vector<AlgebraElement> out;
  for (StylMonoid::ElementId x = 0; x < m.size(); ++x) {
    StylMonoid::ElementId y = m.multiply(g, x);
    if (seen[y]) continue;
    seen[y] = true;
    out.push_back(e * AlgebraElement::of(m, y));
  }
  return out;
}

std::size_t corner_dimension(const StylMonoid& m, const IdempotentSystem& sys, Column gamma,
                             Column delta) {
  return corner_dimension_with(corner_left_products(m, sys, gamma), sys.at(delta));
}

SystemReport verify_idempotent_system(const StylMonoid& m, const IdempotentSystem& sys) {
  const Alphabet& alpha = m.alphabet();
  SystemReport report;

  report.orthogonality_ok = true;
  for (Column g : alpha.columns()) {
    for (Column d : alpha.columns()) {
      AlgebraElement prod = sys.at(g) * sys.at(d);
      const AlgebraElement& expect = (g == d) ? sys.at(g) : AlgebraElement(m);
      if (!(prod == expect)) {
        report.orthogonality_ok = false;
        report.failures.push_back("e_" + alpha.column_name(g) + " * e_" + alpha.column_name(d) +
                                  " = " + prod.to_string());
      }
    }
  }

  AlgebraElement sum(m);
  for (Column g : alpha.columns()) sum += sys.at(g);
  report.sum_ok = sum == AlgebraElement::unit(m);
  if (!report.sum_ok) report.failures.push_back("sum of idempotents = " + sum.to_string());

  report.primitivity_ok = true;
  for (Column g : alpha.columns()) {
    std::size_t dim = corner_dimension(m, sys, g, g);
    if (dim != 1) {
      report.primitivity_ok = false;
      report.failures.push_back("corner dimension at " + alpha.column_name(g) + " is " +
                                std::to_string(dim));
    }
  }

  report.nonzero_ok = true;
  for (Column g : alpha.columns()) {
    if (sys.at(g).is_zero()) {
      report.nonzero_ok = false;
      report.failures.push_back("e_" + alpha.column_name(g) + " = 0");
    }
  }

  return report;
}

TriangularBasis triangular_basis(const StylMonoid& m, const IdempotentSystem& sys) {
  TriangularBasis basis;
  basis.elements.reserve(m.size());
  basis.j_order = m.j_linear_extension();

  RowSpace space(m.size());
  for (StylMonoid::ElementId x = 0; x < m.size(); ++x) {
    AlgebraElement b = sys.at(m.eta(x)) * AlgebraElement::of(m, x);
    if (b.coeff(x) != 1)
      throw std::runtime_error("triangular basis: coefficient of x in e_eta(x)*x is not 1 at id " +
                               std::to_string(x));
    for (const auto& [y, c] : b.terms()) {
      if (c.get_den() != 1)
        throw std::runtime_error("triangular basis: non-integer coefficient at id " +
                                 std::to_string(x));
      if (y != x && (!m.j_leq(y, x) || m.j_leq(x, y)))
        throw std::runtime_error("triangular basis: term not strictly below x in the J-order at id " +
                                 std::to_string(x));
    }
    if (!space.insert(b.to_dense()))
      throw std::runtime_error("triangular basis: rank deficiency at id " + std::to_string(x));
    basis.elements.push_back(std::move(b));
  }
  // lower unitriangular in the J-linear extension, so the change of basis
  // from the monoid basis has determinant +-1 over Z
  return basis;
}

nlohmann::json idempotents_to_json(const StylMonoid& m, const IdempotentSystem& sys) {
  nlohmann::json items = nlohmann::json::array();
  for (Column g : m.alphabet().columns()) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [x, c] : sys.at(g).terms())
      terms.push_back({{"element_id", x},
                       {"coeff_numerator", c.get_num().get_str()},
                       {"coeff_denominator", c.get_den().get_str()}});
    items.push_back({{"gamma", g.bits()}, {"terms", std::move(terms)}});
  }
  return {{"n", m.n()}, {"idempotents", std::move(items)}};
}

}  // namespace stylic
