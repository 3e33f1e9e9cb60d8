#include "abelcat/intlin.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace abelcat::intlin {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw std::invalid_argument("IntMatrix: entry count does not match shape");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::size_t rows, std::size_t cols, const IntVector& diag) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < diag.size() && i < rows && i < cols; ++i) m(i, i) = diag[i];
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("IntMatrix: ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::rows_range(std::size_t begin, std::size_t end) const {
  IntMatrix m(end - begin, cols_);
  for (std::size_t r = begin; r < end; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r - begin, c) = (*this)(r, c);
  return m;
}

IntMatrix IntMatrix::columns_range(std::size_t begin, std::size_t end) const {
  IntMatrix m(rows_, end - begin);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = begin; c < end; ++c) m(r, c - begin) = (*this)(r, c);
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x.is_zero(); });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor.is_zero()) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    const BigInt& s = (*this)(src, c);
    if (!s.is_zero()) (*this)(dst, c) += factor * s;
  }
}

void IntMatrix::add_column_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor.is_zero()) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const BigInt& s = (*this)(r, src);
    if (!s.is_zero()) (*this)(r, dst) += factor * s;
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_column(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix: product shape mismatch");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const BigInt& bkj = b(k, j);
        if (!bkj.is_zero()) p(i, j) += aik * bkj;
      }
    }
  }
  return p;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("IntMatrix: vector shape mismatch");
  IntVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!x[k].is_zero()) y[i] += a(i, k) * x[k];
  return y;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("IntMatrix: sum shape mismatch");
  std::vector<BigInt> e(a.entries());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries()[i];
  return IntMatrix(a.rows(), a.cols(), std::move(e));
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-b); }

IntMatrix operator-(const IntMatrix& a) {
  std::vector<BigInt> e(a.entries());
  for (auto& x : e) x = -x;
  return IntMatrix(a.rows(), a.cols(), std::move(e));
}

IntMatrix hstack(const IntMatrix& left, const IntMatrix& right) {
  if (left.rows() != right.rows()) throw std::invalid_argument("hstack: row mismatch");
  IntMatrix m(left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c) m(r, c) = left(r, c);
    for (std::size_t c = 0; c < right.cols(); ++c) m(r, left.cols() + c) = right(r, c);
  }
  return m;
}

IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack: column mismatch");
  IntMatrix m(top.rows() + bottom.rows(), top.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < top.rows(); ++r) m(r, c) = top(r, c);
    for (std::size_t r = 0; r < bottom.rows(); ++r) m(top.rows() + r, c) = bottom(r, c);
  }
  return m;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << m(r, c);
    }
    os << ']';
  }
  return os << ']';
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

BigInt floor_mod(const BigInt& a, const BigInt& m) {
  if (m.is_zero()) return a;
  BigInt r = a % m;
  if (r.sign() < 0) r += m;
  return r;
}

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m(swap_with, k).is_zero()) ++swap_with;
      if (swap_with == n) return 0;
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(d.rows(), d.cols());
  while (r < n && !d(r, r).is_zero()) ++r;
  return r;
}

IntVector SmithDecomposition::diagonal() const {
  const std::size_t n = std::min(d.rows(), d.cols());
  IntVector diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = d(i, i);
  return diag;
}

namespace {

// Row and column operations are mirrored on U, V and their inverses so that
// U·A·V = D and U·U⁻¹ = V·V⁻¹ = I hold after every step.
class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& a)
      : d_(a),
        u_(IntMatrix::identity(a.rows())),
        u_inv_(IntMatrix::identity(a.rows())),
        v_(IntMatrix::identity(a.cols())),
        v_inv_(IntMatrix::identity(a.cols())) {}

  SmithDecomposition run() {
    const std::size_t n = std::min(d_.rows(), d_.cols());
    for (std::size_t t = 0; t < n; ++t) {
      if (!reduce_at(t)) break;
      if (d_(t, t).sign() < 0) negate_row(t);
    }
    return {std::move(u_), std::move(d_), std::move(v_), std::move(u_inv_), std::move(v_inv_)};
  }

 private:
  // Returns false when the trailing block is entirely zero.
  bool reduce_at(std::size_t t) {
    for (;;) {
      std::size_t pr = 0, pc = 0;
      if (!find_pivot(t, pr, pc)) return false;
      swap_rows(t, pr);
      swap_columns(t, pc);

      bool clean = true;
      const BigInt pivot = d_(t, t);
      for (std::size_t i = t + 1; i < d_.rows(); ++i) {
        if (d_(i, t).is_zero()) continue;
        add_row_multiple(i, t, -(d_(i, t) / pivot));
        if (!d_(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < d_.cols(); ++j) {
        if (d_(t, j).is_zero()) continue;
        add_column_multiple(j, t, -(d_(t, j) / pivot));
        if (!d_(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;

      // Enforce d_t | every remaining entry.
      bool divisible = true;
      for (std::size_t i = t + 1; i < d_.rows() && divisible; ++i) {
        for (std::size_t j = t + 1; j < d_.cols(); ++j) {
          if (!BigInt(d_(i, j) % pivot).is_zero()) {
            add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) return true;
    }
  }

  bool find_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < d_.rows(); ++i) {
      for (std::size_t j = t; j < d_.cols(); ++j) {
        const BigInt& x = d_(i, j);
        if (x.is_zero()) continue;
        BigInt ax = abs(x);
        if (!found || ax < best) {
          best = std::move(ax);
          pr = i;
          pc = j;
          found = true;
        }
      }
    }
    return found;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    d_.swap_rows(a, b);
    u_.swap_rows(a, b);
    u_inv_.swap_columns(a, b);
  }
  void swap_columns(std::size_t a, std::size_t b) {
    if (a == b) return;
    d_.swap_columns(a, b);
    v_.swap_columns(a, b);
    v_inv_.swap_rows(a, b);
  }
  // row[dst] += q·row[src]; inverse: col[src] of U⁻¹ -= q·col[dst]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& q) {
    if (q.is_zero()) return;
    d_.add_row_multiple(dst, src, q);
    u_.add_row_multiple(dst, src, q);
    u_inv_.add_column_multiple(src, dst, -q);
  }
  // col[dst] += q·col[src]; inverse: row[src] of V⁻¹ -= q·row[dst]
  void add_column_multiple(std::size_t dst, std::size_t src, const BigInt& q) {
    if (q.is_zero()) return;
    d_.add_column_multiple(dst, src, q);
    v_.add_column_multiple(dst, src, q);
    v_inv_.add_row_multiple(src, dst, -q);
  }
  void negate_row(std::size_t r) {
    d_.negate_row(r);
    u_.negate_row(r);
    u_inv_.negate_column(r);
  }

  IntMatrix d_, u_, u_inv_, v_, v_inv_;
};

void normalize_leading_sign(IntVector& v) {
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    if (x.sign() < 0)
      for (auto& y : v) y = -y;
    return;
  }
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) { return SmithReducer(a).run(); }

std::vector<IntVector> integer_kernel_basis(const IntMatrix& a) {
  const SmithDecomposition snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  std::vector<IntVector> basis;
  basis.reserve(a.cols() - r);
  for (std::size_t c = r; c < a.cols(); ++c) {
    IntVector v = snf.v.column(c);
    normalize_leading_sign(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

IntegerSolver::IntegerSolver(const IntMatrix& a) : a_(a), snf_(smith_normal_form(a)) {
  rank_ = snf_.rank();
}

std::optional<IntVector> IntegerSolver::particular(const IntVector& b) const {
  if (b.size() != a_.rows()) throw std::invalid_argument("solve_integer_system: dimension mismatch");
  // A = U⁻¹·D·V⁻¹, so A·x = b  ⟺  D·y = U·b with x = V·y.
  const IntVector c = snf_.u * b;
  IntVector y(a_.cols());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k < rank_) {
      const BigInt& dk = snf_.d(k, k);
      if (!BigInt(c[k] % dk).is_zero()) return std::nullopt;
      y[k] = c[k] / dk;
    } else if (!c[k].is_zero()) {
      return std::nullopt;
    }
  }
  return snf_.v * y;
}

LinearSolveResult solve_integer_system(const IntMatrix& a, const IntVector& b) {
  IntegerSolver solver(a);
  LinearSolveResult result;
  result.particular = solver.particular(b);
  const auto& snf = solver.decomposition();
  for (std::size_t c = snf.rank(); c < a.cols(); ++c) {
    IntVector v = snf.v.column(c);
    normalize_leading_sign(v);
    result.homogeneous_basis.push_back(std::move(v));
  }
  return result;
}

IntMatrix column_lattice_basis(const IntMatrix& g) {
  const SmithDecomposition snf = smith_normal_form(g);
  // G·V = U⁻¹·D, whose first rank columns are independent and span G's lattice.
  return (g * snf.v).columns_range(0, snf.rank());
}

}  // namespace abelcat::intlin
