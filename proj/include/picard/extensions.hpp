#pragma once

#include "picard/derived.hpp"

#include <array>
#include <memory>
#include <string>

namespace picard {

/// K --i--> L --j--> M with j i = 0 on the nose, satisfying the extension
/// conditions. Only validate_extension constructs these.
class Extension {
 public:
  const TwoTermComplex& k() const { return k_; }
  const TwoTermComplex& l() const { return l_; }
  const TwoTermComplex& m() const { return m_; }
  const ChainMap& i() const { return i_; }
  const ChainMap& j() const { return j_; }

 private:
  friend Extension validate_extension(const ChainMap& i, const ChainMap& j);
  Extension(ChainMap i, ChainMap j);

  TwoTermComplex k_, l_, m_;
  ChainMap i_, j_;
};

struct ExtensionCheck {
  bool composite_zero = false;
  /// H^0(j) onto and K -> tau<=0 (MC(j)[-1]) a quasi-isomorphism.
  bool condition_a = false;
  /// H^{-1}(i) injective and tau>=-1 MC(i) -> M a quasi-isomorphism.
  bool condition_b = false;
  std::string reason;

  bool valid() const { return composite_zero && condition_a && condition_b; }
};

/// Evaluates both conditions without throwing on mathematical failure.
ExtensionCheck check_extension(const ChainMap& i, const ChainMap& j);
/// Throws NotAnExtension with the failing condition; InvariantViolation if (a) and (b) disagree.
Extension validate_extension(const ChainMap& i, const ChainMap& j);

/// An element of Ext^1(M, K) = Hom_D(M, K[1]) in a fixed presentation.
class ExtClass {
 public:
  ExtClass(std::shared_ptr<const DerivedHomGroup> ambient, Vector coords);

  const DerivedHomGroup& ambient() const { return *ambient_; }
  const std::shared_ptr<const DerivedHomGroup>& ambient_ptr() const { return ambient_; }
  /// Canonical representative modulo the relations of the ambient group.
  const Vector& coords() const { return coords_; }
  bool is_zero() const { return ambient_->group().is_zero_element(coords_); }

  /// Throws AmbientMismatch for classes in different presentations.
  friend bool operator==(const ExtClass& a, const ExtClass& b);
  friend ExtClass operator+(const ExtClass& a, const ExtClass& b);
  friend ExtClass operator-(const ExtClass& a, const ExtClass& b);
  friend ExtClass operator*(const Integer& c, const ExtClass& a);

 private:
  std::shared_ptr<const DerivedHomGroup> ambient_;
  Vector coords_;
};

/// Ext^1(M, K) in the presentation used by theta and psi.
std::shared_ptr<const DerivedHomGroup> ext1_ambient(const TwoTermComplex& m, const TwoTermComplex& k);

ExtClass theta(const Extension& e);
Extension psi(const ExtClass& x);

Extension neutral_extension(const TwoTermComplex& m, const TwoTermComplex& k);
/// E x_M M' along f: M' -> M.
Extension pullback_extension(const Extension& e, const ChainMap& f);
/// E +_K K' along g: K -> K'.
Extension pushdown_extension(const Extension& e, const ChainMap& g);
Extension product_extension(const Extension& e, const Extension& e2);
/// Pullback along the diagonal of M, then pushdown along the sum map of K.
Extension baer_sum(const Extension& e, const Extension& e2);

bool is_split(const Extension& e);
bool are_equivalent(const Extension& e, const Extension& e2);

/// 0 -> pi1 K -> pi1 L -> pi1 M -> pi0 K -> pi0 L -> pi0 M -> 0
struct LongExactSequence {
  Cohomology h1k, h1l, h1m, h0k, h0l, h0m;
  GroupHom pi1_i, pi1_j, delta, pi0_i, pi0_j;
  /// At pi1 K, pi1 L, pi1 M, pi0 K, pi0 L, pi0 M.
  std::array<bool, 6> exact_at{};

  bool exact() const;
};

LongExactSequence long_exact_sequence(const Extension& e);

}  // namespace picard
