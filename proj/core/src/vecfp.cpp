#include "abelcat/vecfp.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace abelcat::vecfp {

namespace {

Scalar mul_mod(Scalar a, Scalar b, Scalar p) {
  return static_cast<Scalar>((static_cast<unsigned __int128>(a) * b) % p);
}

Scalar add_mod(Scalar a, Scalar b, Scalar p) {
  const Scalar s = a + b;
  return (s >= p || s < a) ? s - p : s;
}

Scalar neg_mod(Scalar a, Scalar p) { return a == 0 ? 0 : p - a; }

Scalar pow_mod(Scalar base, Scalar exp, Scalar p) {
  Scalar result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

Scalar inv_mod(Scalar a, Scalar p) { return pow_mod(a, p - 2, p); }

void require_same_prime(const FpSpace& a, const FpSpace& b, const char* what) {
  if (a.prime != b.prime) throw InputError(std::string(what) + ": spaces over different primes");
}

}  // namespace

bool is_prime(Scalar n) {
  if (n < 2) return false;
  for (Scalar small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  Scalar d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all 64-bit integers.
  for (Scalar a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    Scalar x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) throw std::invalid_argument("FpMatrix: entry count does not match shape");
}

FpMatrix FpMatrix::identity(std::size_t n) {
  FpMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool FpMatrix::is_zero() const {
  for (Scalar x : data_)
    if (x) return false;
  return true;
}

FpMatrix FpMatrix::columns_range(std::size_t begin, std::size_t end) const {
  FpMatrix m(rows_, end - begin);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = begin; c < end; ++c) m(r, c - begin) = (*this)(r, c);
  return m;
}

FpMatrix FpMatrix::rows_range(std::size_t begin, std::size_t end) const {
  FpMatrix m(end - begin, cols_);
  for (std::size_t r = begin; r < end; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r - begin, c) = (*this)(r, c);
  return m;
}

FpMatrix multiply(const FpMatrix& a, const FpMatrix& b, Scalar p) {
  if (a.cols() != b.rows()) throw std::invalid_argument("FpMatrix: product shape mismatch");
  FpMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar aik = a(i, k);
      if (!aik) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = add_mod(c(i, j), mul_mod(aik, b(k, j), p), p);
    }
  return c;
}

std::string to_string(const FpMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

Elimination row_reduce(const FpMatrix& m, Scalar p) {
  Elimination e{m, {}};
  FpMatrix& a = e.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(row, c), a(pivot, c));
    const Scalar inv = inv_mod(a(row, col), p);
    for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) = mul_mod(a(row, c), inv, p);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Scalar factor = a(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c)
        a(r, c) = add_mod(a(r, c), neg_mod(mul_mod(factor, a(row, c), p), p), p);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

std::size_t rank(const FpMatrix& m, Scalar p) { return row_reduce(m, p).pivots.size(); }

std::optional<FpMatrix> solve(const FpMatrix& a, const FpMatrix& b, Scalar p) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  FpMatrix aug(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, a.cols() + c) = b(r, c);
  }
  const auto e = row_reduce(aug, p);
  FpMatrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    const std::size_t pc = e.pivots[i];
    if (pc >= a.cols()) return std::nullopt;  // inconsistent row
    for (std::size_t c = 0; c < b.cols(); ++c) x(pc, c) = e.reduced(i, a.cols() + c);
  }
  return x;
}

std::string FpSpace::to_string() const {
  return "F" + std::to_string(prime) + "^" + std::to_string(dim);
}

FpSpace make_space(Scalar prime, std::size_t dim) {
  if (!is_prime(prime)) throw InputError("vecfp: " + std::to_string(prime) + " is not prime");
  return {prime, dim};
}

FpMap make_map(const FpSpace& src, const FpSpace& dst, const FpMatrix& matrix) {
  require_same_prime(src, dst, "make_map");
  if (matrix.rows() != dst.dim || matrix.cols() != src.dim) {
    std::ostringstream os;
    os << "map matrix is " << matrix.rows() << "×" << matrix.cols() << ", expected " << dst.dim << "×" << src.dim;
    throw InputError(os.str());
  }
  FpMatrix m = matrix;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) %= src.prime;
  return FpMap(src, dst, std::move(m));
}

FpMap identity(const FpSpace& a) { return make_map(a, a, FpMatrix::identity(a.dim)); }

FpMap zero_map(const FpSpace& a, const FpSpace& b) { return make_map(a, b, FpMatrix(b.dim, a.dim)); }

FpMap compose(const FpMap& g, const FpMap& f) {
  if (!(f.dst() == g.src())) throw InputError("compose: " + describe(g) + " ∘ " + describe(f) + " is not composable");
  return make_map(f.src(), g.dst(), multiply(g.matrix(), f.matrix(), f.prime()));
}

FpMap add(const FpMap& f, const FpMap& g) {
  if (!(f.src() == g.src()) || !(f.dst() == g.dst())) throw InputError("add: maps in different hom-sets");
  FpMatrix m = f.matrix();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = add_mod(m(r, c), g.matrix()(r, c), f.prime());
  return make_map(f.src(), f.dst(), m);
}

FpMap negate(const FpMap& f) {
  FpMatrix m = f.matrix();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = neg_mod(m(r, c), f.prime());
  return make_map(f.src(), f.dst(), m);
}

KernelData fp_kernel(const FpMap& f) {
  const Scalar p = f.prime();
  const auto e = row_reduce(f.matrix(), p);
  const std::size_t n = f.src().dim;
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  FpMatrix basis(n, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t fc = free_cols[k];
    basis(fc, k) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) basis(e.pivots[i], k) = neg_mod(e.reduced(i, fc), p);
  }
  const FpSpace k{p, free_cols.size()};
  return {k, make_map(k, f.src(), basis)};
}

namespace {

// [column-space basis | standard completion], square and invertible.
struct CokernelFrame {
  std::size_t rank = 0;
  FpMatrix frame;
  FpMatrix frame_inv;
};

CokernelFrame cokernel_frame(const FpMap& f) {
  const Scalar p = f.prime();
  const std::size_t n = f.dst().dim;
  const auto e = row_reduce(f.matrix(), p);
  std::vector<std::vector<Scalar>> cols;
  for (auto c : e.pivots) {
    std::vector<Scalar> v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = f.matrix()(r, c);
    cols.push_back(std::move(v));
  }
  const std::size_t r = cols.size();
  for (std::size_t k = 0; k < n && cols.size() < n; ++k) {
    FpMatrix trial(n, cols.size() + 1);
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t i = 0; i < n; ++i) trial(i, c) = cols[c][i];
    trial(k, cols.size()) = 1;
    if (rank(trial, p) == cols.size() + 1) {
      std::vector<Scalar> v(n);
      v[k] = 1;
      cols.push_back(std::move(v));
    }
  }
  FpMatrix frame(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < n; ++i) frame(i, c) = cols[c][i];
  auto inv = solve(frame, FpMatrix::identity(n), p);
  if (!inv) throw std::logic_error("fp_cokernel: completed frame is singular");
  return {r, std::move(frame), std::move(*inv)};
}

}  // namespace

CokernelData fp_cokernel(const FpMap& f) {
  const auto fr = cokernel_frame(f);
  const std::size_t n = f.dst().dim;
  const FpSpace c{f.prime(), n - fr.rank};
  return {c, make_map(f.dst(), c, fr.frame_inv.rows_range(fr.rank, n))};
}

FpMap factor_through_kernel(const FpMap& f, const FpMap& g) {
  if (!(g.dst() == f.src())) throw InputError("factor_through_kernel: g does not land in the domain of f");
  if (!compose(f, g).matrix().is_zero()) throw PreconditionError("factor_through_kernel: f∘g ≠ 0");
  const auto k = fp_kernel(f);
  auto h = solve(k.inclusion.matrix(), g.matrix(), f.prime());
  if (!h) throw std::logic_error("factor_through_kernel: g leaves the null space");
  return make_map(g.src(), k.object, *h);
}

FpMap factor_through_cokernel(const FpMap& f, const FpMap& g) {
  if (!(g.src() == f.dst())) throw InputError("factor_through_cokernel: g does not start at the codomain of f");
  if (!compose(g, f).matrix().is_zero()) throw PreconditionError("factor_through_cokernel: g∘f ≠ 0");
  const auto fr = cokernel_frame(f);
  const std::size_t n = f.dst().dim;
  const FpSpace c{f.prime(), n - fr.rank};
  return make_map(c, g.dst(), multiply(g.matrix(), fr.frame.columns_range(fr.rank, n), f.prime()));
}

FpMap factor_through_mono(const FpMap& m, const FpMap& x) {
  if (!(x.dst() == m.dst())) throw InputError("factor_through_mono: codomains differ");
  if (rank(m.matrix(), m.prime()) != m.src().dim) throw PreconditionError("factor_through_mono: map is not monic");
  auto y = solve(m.matrix(), x.matrix(), m.prime());
  if (!y) throw PreconditionError("factor_through_mono: image not contained in the subspace");
  return make_map(x.src(), m.src(), *y);
}

FpMap factor_through_epi(const FpMap& e, const FpMap& x) {
  if (!(x.src() == e.src())) throw InputError("factor_through_epi: domains differ");
  if (rank(e.matrix(), e.prime()) != e.dst().dim) throw PreconditionError("factor_through_epi: map is not epic");
  if (!compose(x, fp_kernel(e).inclusion).matrix().is_zero()) {
    throw PreconditionError("factor_through_epi: x does not vanish on the kernel");
  }
  auto section = solve(e.matrix(), FpMatrix::identity(e.dst().dim), e.prime());
  if (!section) throw std::logic_error("factor_through_epi: no section");
  return make_map(e.dst(), x.dst(), multiply(x.matrix(), *section, e.prime()));
}

DirectSumData direct_sum(const FpSpace& a, const FpSpace& b) {
  require_same_prime(a, b, "direct_sum");
  const FpSpace s{a.prime, a.dim + b.dim};
  FpMatrix ia(s.dim, a.dim), ib(s.dim, b.dim), pa(a.dim, s.dim), pb(b.dim, s.dim);
  for (std::size_t i = 0; i < a.dim; ++i) ia(i, i) = pa(i, i) = 1;
  for (std::size_t i = 0; i < b.dim; ++i) ib(a.dim + i, i) = pb(i, a.dim + i) = 1;
  return {s, make_map(a, s, ia), make_map(b, s, ib), make_map(s, a, pa), make_map(s, b, pb)};
}

std::string describe(const FpMap& f) { return f.src().to_string() + "→" + f.dst().to_string() + " " + to_string(f.matrix()); }

FpVect::FpVect(Scalar prime) : prime_(prime) {
  if (!is_prime(prime)) throw InputError("vecfp: " + std::to_string(prime) + " is not prime");
}

}  // namespace abelcat::vecfp
