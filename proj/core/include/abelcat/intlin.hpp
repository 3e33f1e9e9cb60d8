#pragma once

// Exact integer linear algebra over Z: dense matrices of arbitrary-precision
// integers, Smith normal form, integer kernels and lattice solving.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace abelcat::intlin {

using BigInt = boost::multiprecision::cpp_int;
using IntVector = std::vector<BigInt>;

/// Dense row-major matrix over Z. Zero-row and zero-column shapes are valid
/// and stand for maps to or from the zero module.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::size_t rows, std::size_t cols, const IntVector& diag);
  static IntMatrix diagonal(const IntVector& diag) { return diagonal(diag.size(), diag.size(), diag); }
  /// `cols` is only consulted when `rows` is empty.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols = 0);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<BigInt>& entries() const { return data_; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntMatrix rows_range(std::size_t begin, std::size_t end) const;
  IntMatrix columns_range(std::size_t begin, std::size_t end) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  // Elementary operations, used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  /// col[dst] += factor * col[src]
  void add_column_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void negate_row(std::size_t r);
  void negate_column(std::size_t c);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);

IntMatrix hstack(const IntMatrix& left, const IntMatrix& right);
IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);
std::string to_string(const IntMatrix& m);

/// Least nonnegative residue for m > 0; the identity for m == 0 (so that
/// "mod 0" means equality in Z).
BigInt floor_mod(const BigInt& a, const BigInt& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& a);

/// U·A·V = D with U, V unimodular and D diagonal. The inverses of U and V are
/// carried along because every presentation change needs both directions.
struct SmithDecomposition {
  IntMatrix u;      // rows × rows
  IntMatrix d;      // rows × cols
  IntMatrix v;      // cols × cols
  IntMatrix u_inv;  // U⁻¹
  IntMatrix v_inv;  // V⁻¹

  /// Number of nonzero diagonal entries.
  std::size_t rank() const;
  /// Diagonal of D, length min(rows, cols).
  IntVector diagonal() const;
};

/// Smallest-absolute-value pivoting, ties broken by lowest (row, col);
/// diagonal normalized nonnegative with d₁ | d₂ | … and trailing zeros.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// A basis of the saturated lattice {x ∈ Zⁿ : A·x = 0}. Each vector has a
/// positive leading nonzero entry.
std::vector<IntVector> integer_kernel_basis(const IntMatrix& a);

struct LinearSolveResult {
  std::optional<IntVector> particular;
  std::vector<IntVector> homogeneous_basis;
};

/// Integer solutions of A·x = b. An absent particular solution means b is not
/// in the column lattice of A.
LinearSolveResult solve_integer_system(const IntMatrix& a, const IntVector& b);

/// Reusable solver for many right-hand sides against one matrix; the Smith
/// decomposition is computed once.
class IntegerSolver {
 public:
  explicit IntegerSolver(const IntMatrix& a);

  std::optional<IntVector> particular(const IntVector& b) const;
  const SmithDecomposition& decomposition() const { return snf_; }

 private:
  IntMatrix a_;
  SmithDecomposition snf_;
  std::size_t rank_ = 0;
};

/// Columns forming a Z-basis of the lattice spanned by the columns of `g`.
IntMatrix column_lattice_basis(const IntMatrix& g);

}  // namespace abelcat::intlin
