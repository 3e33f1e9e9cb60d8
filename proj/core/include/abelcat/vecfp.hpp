#pragma once

// Finite-dimensional vector spaces over a prime field F_p.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abelcat/category.hpp"
#include "abelcat/errors.hpp"

namespace abelcat::vecfp {

using Scalar = std::uint64_t;

bool is_prime(Scalar n);

/// Dense row-major matrix with entries in [0, p).
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  FpMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static FpMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& entries() const { return data_; }
  bool is_zero() const;

  FpMatrix columns_range(std::size_t begin, std::size_t end) const;
  FpMatrix rows_range(std::size_t begin, std::size_t end) const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

FpMatrix multiply(const FpMatrix& a, const FpMatrix& b, Scalar p);
std::string to_string(const FpMatrix& m);

struct Elimination {
  FpMatrix reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, ascending
};

/// Leftmost-pivot Gauss–Jordan elimination.
Elimination row_reduce(const FpMatrix& m, Scalar p);
std::size_t rank(const FpMatrix& m, Scalar p);
/// Some X with A·X = B, or nothing when B's columns leave A's column space.
std::optional<FpMatrix> solve(const FpMatrix& a, const FpMatrix& b, Scalar p);

struct FpSpace {
  Scalar prime = 2;
  std::size_t dim = 0;

  std::string to_string() const;
  friend bool operator==(const FpSpace&, const FpSpace&) = default;
};

/// Throws InputError unless `prime` is prime.
FpSpace make_space(Scalar prime, std::size_t dim);

class FpMap {
 public:
  FpMap() = default;

  const FpSpace& src() const { return src_; }
  const FpSpace& dst() const { return dst_; }
  const FpMatrix& matrix() const { return matrix_; }
  Scalar prime() const { return src_.prime; }

  friend bool operator==(const FpMap&, const FpMap&) = default;

 private:
  friend FpMap make_map(const FpSpace&, const FpSpace&, const FpMatrix&);
  FpMap(FpSpace s, FpSpace d, FpMatrix m) : src_(s), dst_(d), matrix_(std::move(m)) {}

  FpSpace src_;
  FpSpace dst_;
  FpMatrix matrix_;
};

/// Entries are reduced mod p. Throws InputError on prime or shape mismatch.
FpMap make_map(const FpSpace& src, const FpSpace& dst, const FpMatrix& matrix);

using KernelData = abelcat::KernelData<FpSpace, FpMap>;
using CokernelData = abelcat::CokernelData<FpSpace, FpMap>;
using DirectSumData = abelcat::DirectSumData<FpSpace, FpMap>;

FpMap identity(const FpSpace& a);
FpMap zero_map(const FpSpace& a, const FpSpace& b);
FpMap compose(const FpMap& g, const FpMap& f);
FpMap add(const FpMap& f, const FpMap& g);
FpMap negate(const FpMap& f);

/// Null space with the canonical basis read off the free columns.
KernelData fp_kernel(const FpMap& f);
/// Column space completed by standard vectors; the projection reads the
/// complement coordinates.
CokernelData fp_cokernel(const FpMap& f);
FpMap factor_through_kernel(const FpMap& f, const FpMap& g);
FpMap factor_through_cokernel(const FpMap& f, const FpMap& g);
FpMap factor_through_mono(const FpMap& m, const FpMap& x);
FpMap factor_through_epi(const FpMap& e, const FpMap& x);
DirectSumData direct_sum(const FpSpace& a, const FpSpace& b);

std::string describe(const FpMap& f);

class FpVect {
 public:
  using Object = FpSpace;
  using Morphism = FpMap;

  explicit FpVect(Scalar prime);

  Scalar prime() const { return prime_; }

  const FpSpace& source(const FpMap& f) const { return f.src(); }
  const FpSpace& target(const FpMap& f) const { return f.dst(); }
  bool object_equal(const FpSpace& a, const FpSpace& b) const { return a == b; }
  bool is_zero_object(const FpSpace& a) const { return a.dim == 0; }
  FpSpace zero_object() const { return {prime_, 0}; }
  FpMap identity(const FpSpace& a) const { return vecfp::identity(a); }
  FpMap compose(const FpMap& g, const FpMap& f) const { return vecfp::compose(g, f); }
  FpMap add(const FpMap& f, const FpMap& g) const { return vecfp::add(f, g); }
  FpMap negate(const FpMap& f) const { return vecfp::negate(f); }
  FpMap zero_morphism(const FpSpace& a, const FpSpace& b) const { return zero_map(a, b); }
  bool morphism_equal(const FpMap& f, const FpMap& g) const { return f == g; }
  DirectSumData direct_sum(const FpSpace& a, const FpSpace& b) const { return vecfp::direct_sum(a, b); }
  KernelData kernel(const FpMap& f) const { return fp_kernel(f); }
  CokernelData cokernel(const FpMap& f) const { return fp_cokernel(f); }
  FpMap factor_through_kernel(const FpMap& f, const FpMap& g) const { return vecfp::factor_through_kernel(f, g); }
  FpMap factor_through_cokernel(const FpMap& f, const FpMap& g) const {
    return vecfp::factor_through_cokernel(f, g);
  }
  FpMap factor_through_mono(const FpMap& m, const FpMap& x) const { return vecfp::factor_through_mono(m, x); }
  FpMap factor_through_epi(const FpMap& e, const FpMap& x) const { return vecfp::factor_through_epi(e, x); }
  std::string describe(const FpSpace& a) const { return a.to_string(); }
  std::string describe(const FpMap& f) const { return vecfp::describe(f); }

 private:
  Scalar prime_;
};

static_assert(AbelianCategory<FpVect>);

}  // namespace abelcat::vecfp
