#pragma once

// Finitely generated abelian groups and their homomorphisms.
//
// A group is stored as its invariant factors d₁ | d₂ | … | d_k followed by
// zeros, each 0 standing for a copy of Z; the empty list is the zero group.
// A homomorphism A → B is the integer matrix sending generator i of A to
// column i, with entry (j, i) reduced into [0, e_j) when e_j > 0.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "abelcat/category.hpp"
#include "abelcat/errors.hpp"
#include "abelcat/intlin.hpp"

namespace abelcat::fgab {

using intlin::BigInt;
using intlin::IntMatrix;

class FgGroup {
 public:
  FgGroup() = default;

  /// Throws InputError unless `factors` is already canonical.
  static FgGroup from_canonical(std::vector<BigInt> factors);

  const std::vector<BigInt>& invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  bool is_zero() const { return factors_.empty(); }
  bool is_finite() const;
  /// Group order; empty for infinite groups.
  std::optional<BigInt> order() const;

  std::string to_string() const;

  friend bool operator==(const FgGroup&, const FgGroup&) = default;

 private:
  std::vector<BigInt> factors_;
};

/// Canonical form plus the witnessing isomorphism between the presentation
/// ⊕ Z/n_i of the input and the canonical group.
struct Normalization {
  FgGroup group;
  IntMatrix to_canonical;    // rank(group) × inputs
  IntMatrix from_canonical;  // inputs × rank(group)
};

Normalization normalize_with_iso(const std::vector<BigInt>& factors);
FgGroup normalize_object(const std::vector<BigInt>& factors);

/// Thrown by make_hom when a generator's image violates its order relation.
class NotAHomomorphism : public InputError {
 public:
  NotAHomomorphism(const std::string& what, std::size_t row, std::size_t col)
      : InputError(what), row_(row), col_(col) {}
  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

class GroupHom {
 public:
  /// The zero map between zero groups.
  GroupHom() = default;

  const FgGroup& src() const { return src_; }
  const FgGroup& dst() const { return dst_; }
  const IntMatrix& matrix() const { return matrix_; }

  friend bool operator==(const GroupHom&, const GroupHom&) = default;

 private:
  friend GroupHom make_hom(const FgGroup&, const FgGroup&, const IntMatrix&);
  GroupHom(FgGroup src, FgGroup dst, IntMatrix m) : src_(std::move(src)), dst_(std::move(dst)), matrix_(std::move(m)) {}

  FgGroup src_;
  FgGroup dst_;
  IntMatrix matrix_;
};

/// Validates M_{ji}·d_i ≡ 0 (mod e_j) for every entry and reduces entries.
/// Throws InputError on a shape mismatch and NotAHomomorphism on a
/// congruence violation.
GroupHom make_hom(const FgGroup& src, const FgGroup& dst, const IntMatrix& matrix);

GroupHom identity(const FgGroup& a);
GroupHom zero_hom(const FgGroup& a, const FgGroup& b);
GroupHom compose(const GroupHom& g, const GroupHom& f);
GroupHom add(const GroupHom& f, const GroupHom& g);
GroupHom negate(const GroupHom& f);

using KernelData = abelcat::KernelData<FgGroup, GroupHom>;
using CokernelData = abelcat::CokernelData<FgGroup, GroupHom>;
using DirectSumData = abelcat::DirectSumData<FgGroup, GroupHom>;

KernelData kernel(const GroupHom& f);
CokernelData cokernel(const GroupHom& f);
GroupHom factor_through_kernel(const GroupHom& f, const GroupHom& g);
GroupHom factor_through_cokernel(const GroupHom& f, const GroupHom& g);
GroupHom factor_through_mono(const GroupHom& m, const GroupHom& x);
GroupHom factor_through_epi(const GroupHom& e, const GroupHom& x);
DirectSumData direct_sum(const FgGroup& a, const FgGroup& b);

std::string describe(const GroupHom& f);

/// The category of finitely generated abelian groups as a contract instance.
class FgAb {
 public:
  using Object = FgGroup;
  using Morphism = GroupHom;

  const FgGroup& source(const GroupHom& f) const { return f.src(); }
  const FgGroup& target(const GroupHom& f) const { return f.dst(); }
  bool object_equal(const FgGroup& a, const FgGroup& b) const { return a == b; }
  bool is_zero_object(const FgGroup& a) const { return a.is_zero(); }
  FgGroup zero_object() const { return {}; }
  GroupHom identity(const FgGroup& a) const { return fgab::identity(a); }
  GroupHom compose(const GroupHom& g, const GroupHom& f) const { return fgab::compose(g, f); }
  GroupHom add(const GroupHom& f, const GroupHom& g) const { return fgab::add(f, g); }
  GroupHom negate(const GroupHom& f) const { return fgab::negate(f); }
  GroupHom zero_morphism(const FgGroup& a, const FgGroup& b) const { return zero_hom(a, b); }
  bool morphism_equal(const GroupHom& f, const GroupHom& g) const { return f == g; }
  DirectSumData direct_sum(const FgGroup& a, const FgGroup& b) const { return fgab::direct_sum(a, b); }
  KernelData kernel(const GroupHom& f) const { return fgab::kernel(f); }
  CokernelData cokernel(const GroupHom& f) const { return fgab::cokernel(f); }
  GroupHom factor_through_kernel(const GroupHom& f, const GroupHom& g) const {
    return fgab::factor_through_kernel(f, g);
  }
  GroupHom factor_through_cokernel(const GroupHom& f, const GroupHom& g) const {
    return fgab::factor_through_cokernel(f, g);
  }
  GroupHom factor_through_mono(const GroupHom& m, const GroupHom& x) const { return fgab::factor_through_mono(m, x); }
  GroupHom factor_through_epi(const GroupHom& e, const GroupHom& x) const { return fgab::factor_through_epi(e, x); }
  std::string describe(const FgGroup& a) const { return a.to_string(); }
  std::string describe(const GroupHom& f) const { return fgab::describe(f); }
};

static_assert(AbelianCategory<FgAb>);

}  // namespace abelcat::fgab
