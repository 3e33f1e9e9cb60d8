#pragma once

// Brute-force element semantics for finite abelian groups. This reads only
// the raw data of groups and homomorphisms (moduli and integer matrices) and
// answers every question by enumerating elements, with its own 64-bit
// arithmetic. It shares no code with the Smith-form machinery, so agreement
// with the categorical constructions is independent evidence.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "abelcat/diagram.hpp"
#include "abelcat/errors.hpp"
#include "abelcat/fgab.hpp"

namespace abelcat::oracle {

class OracleInapplicable : public InputError {
 public:
  using InputError::InputError;
};

using Element = std::vector<std::int64_t>;

/// All elements of ⊕ Z/m_i in lexicographic order.
class ElementTable {
 public:
  /// Throws OracleInapplicable for infinite groups or order above `limit`.
  explicit ElementTable(const fgab::FgGroup& group, std::size_t limit = 1 << 16);

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::size_t size() const { return size_; }
  Element element(std::size_t index) const;
  std::size_t index(const Element& x) const;

  std::size_t add(std::size_t x, std::size_t y) const;
  std::size_t multiple(std::size_t x, std::int64_t k) const;

 private:
  std::vector<std::int64_t> moduli_;
  std::size_t size_ = 1;
};

/// A homomorphism tabulated on every source element.
class HomTable {
 public:
  HomTable(const fgab::GroupHom& f, std::size_t limit = 1 << 16);

  const ElementTable& src() const { return src_; }
  const ElementTable& dst() const { return dst_; }
  std::size_t operator()(std::size_t x) const { return values_[x]; }
  const std::vector<std::size_t>& values() const { return values_; }

  bool injective() const;
  bool surjective() const;
  /// Sorted element indices.
  std::vector<std::size_t> kernel() const;
  std::vector<std::size_t> image() const;

 private:
  ElementTable src_;
  ElementTable dst_;
  std::vector<std::size_t> values_;
};

/// Invariant factors of a subgroup given as a set of element indices.
std::vector<std::int64_t> subgroup_invariants(const ElementTable& g, const std::vector<std::size_t>& subgroup);
/// Invariant factors of the quotient g / subgroup.
std::vector<std::int64_t> quotient_invariants(const ElementTable& g, const std::vector<std::size_t>& subgroup);

/// Img f = Ker g as element sets (g∘f = 0 included).
bool exact_at(const HomTable& f, const HomTable& g);
/// f injective, g surjective, exact in the middle.
bool short_exact(const HomTable& f, const HomTable& g);
/// p∘q = r∘s on every element.
bool square_commutes(const HomTable& p, const HomTable& q, const HomTable& r, const HomTable& s);

struct LadderVerdict {
  bool hypotheses = false;
  bool conclusion = false;  // meaningful only when hypotheses hold
};

/// The short five lemma read element-wise: rows exact, squares commuting,
/// α and γ with the property; conclusion: β with the property.
LadderVerdict check_ladder(const SesLadder<fgab::GroupHom>& l, ShortFiveMode mode, std::size_t limit = 1 << 16);

/// The nine lemma read element-wise.
LadderVerdict check_grid(const NineGrid<fgab::GroupHom>& grid, NineDirection dir, std::size_t limit = 1 << 16);

}  // namespace abelcat::oracle
