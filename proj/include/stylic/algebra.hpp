#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "stylic/exact.hpp"
#include "stylic/monoid.hpp"

namespace stylic {

// An element of the monoid algebra: a finitely supported map from monoid
// element ids to exact rationals (integer-valued throughout the idempotent
// construction). No zero coefficients are stored. Elements carry their
// monoid context; mixing contexts is a programming error.
class AlgebraElement {
 public:
  using ElementId = StylMonoid::ElementId;

  explicit AlgebraElement(const StylMonoid& m) : monoid_(&m) {}
  static AlgebraElement unit(const StylMonoid& m) { return of(m, m.identity()); }
  static AlgebraElement of(const StylMonoid& m, ElementId x, const Rat& coeff = 1);

  const StylMonoid& monoid() const { return *monoid_; }
  const std::map<ElementId, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  Rat coeff(ElementId x) const;

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  AlgebraElement& operator*=(const Rat& scalar);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Rat& s) { return a *= s; }
  friend AlgebraElement operator*(const Rat& s, AlgebraElement a) { return a *= s; }
  AlgebraElement operator-() const;
  // convolution product through the monoid multiplication
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.terms_ == b.terms_;
  }

  std::vector<Rat> to_dense() const;  // coefficient vector over all of M
  std::string to_string() const;      // rep-word form, for diagnostics

 private:
  const StylMonoid* monoid_;
  std::map<ElementId, Rat> terms_;
};

// e_gamma: the product, in increasing letter order, of (1 - a) over the
// letters a outside gamma, times the image of gamma read as a decreasing
// word. These form a complete system of primitive orthogonal idempotents.
AlgebraElement idempotent(const StylMonoid& m, Column gamma);

// All 2^n idempotents e_gamma, indexed by column bitmask, built once.
class IdempotentSystem {
 public:
  explicit IdempotentSystem(const StylMonoid& m);
  const StylMonoid& monoid() const { return *monoid_; }
  const AlgebraElement& at(Column gamma) const { return idempotents_[gamma.bits()]; }
  std::size_t count() const { return idempotents_.size(); }

 private:
  const StylMonoid* monoid_;
  std::vector<AlgebraElement> idempotents_;
};

// Exact verification of the complete-system theorem: orthogonal idempotents
// (e_gamma e_delta = 0 for gamma != delta, e_gamma^2 = e_gamma), sum equal
// to 1, primitivity via one-dimensional diagonal corners, and nonzeroness.
struct SystemReport {
  bool orthogonality_ok = false;
  bool sum_ok = false;
  bool primitivity_ok = false;
  bool nonzero_ok = false;
  std::vector<std::string> failures;  // witnesses, empty on success
  bool pass() const { return orthogonality_ok && sum_ok && primitivity_ok && nonzero_ok; }
};
SystemReport verify_idempotent_system(const StylMonoid& m, const IdempotentSystem& sys);

// dim over Q of e_gamma * K Styl(A) * e_delta, as the rank of the products
// e_gamma x e_delta over all monoid elements x
std::size_t corner_dimension(const StylMonoid& m, const IdempotentSystem& sys, Column gamma,
                             Column delta);

// The distinct left products e_gamma x. Since e_gamma mu(gamma) = e_gamma,
// the product depends on x only through mu(gamma) x, so one list serves
// every corner (gamma, -); corner_dimension_with finishes one corner.
std::vector<AlgebraElement> corner_left_products(const StylMonoid& m, const IdempotentSystem& sys,
                                                 Column gamma);
std::size_t corner_dimension_with(const std::vector<AlgebraElement>& left_products,
                                  const AlgebraElement& e_delta);

// The unitriangular basis { e_eta(x) * x : x in Styl(A) } of the integer
// monoid algebra. Each member equals x plus an integer combination of
// elements strictly below x in the J-order; verified on construction
// together with full rank over Q. Throws std::runtime_error on violation.
struct TriangularBasis {
  std::vector<AlgebraElement> elements;          // indexed by element id
  std::vector<StylMonoid::ElementId> j_order;    // linear extension used
};
TriangularBasis triangular_basis(const StylMonoid& m, const IdempotentSystem& sys);

nlohmann::json idempotents_to_json(const StylMonoid& m, const IdempotentSystem& sys);

}  // namespace stylic
