#include "abelcat/fgab.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace abelcat::fgab {

using intlin::floor_mod;
using intlin::IntegerSolver;
using intlin::IntVector;
using intlin::smith_normal_form;

FgGroup FgGroup::from_canonical(std::vector<BigInt> factors) {
  bool seen_zero = false;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const BigInt& d = factors[i];
    if (d.sign() < 0) throw InputError("invariant factor is negative: " + d.str());
    if (d == 1) throw InputError("invariant factor 1 is not canonical");
    if (d.is_zero()) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) throw InputError("finite invariant factor after a free summand");
    if (i > 0 && !BigInt(d % factors[i - 1]).is_zero()) {
      throw InputError("invariant factors do not form a divisibility chain");
    }
  }
  FgGroup g;
  g.factors_ = std::move(factors);
  return g;
}

bool FgGroup::is_finite() const {
  for (const auto& d : factors_)
    if (d.is_zero()) return false;
  return true;
}

std::optional<BigInt> FgGroup::order() const {
  if (!is_finite()) return std::nullopt;
  BigInt n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

std::string FgGroup::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? "," : "") << factors_[i];
  os << ']';
  return os.str();
}

namespace {

// Z^n / R·Z^m rewritten as a canonical group, with mutually inverse maps
// between old coordinates and canonical generators.
struct Presentation {
  FgGroup group;
  IntMatrix to_group;    // rank(group) × n, entries reduced
  IntMatrix from_group;  // n × rank(group)
};

Presentation present(const IntMatrix& relations) {
  const std::size_t n = relations.rows();
  const auto snf = smith_normal_form(relations);
  const std::size_t diag_len = std::min(relations.rows(), relations.cols());

  std::vector<BigInt> factors;
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < n; ++k) {
    BigInt dk = k < diag_len ? snf.d(k, k) : BigInt(0);
    if (dk == 1) continue;
    kept.push_back(k);
    factors.push_back(std::move(dk));
  }

  IntMatrix to_group(kept.size(), n);
  IntMatrix from_group(n, kept.size());
  for (std::size_t r = 0; r < kept.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      to_group(r, c) = floor_mod(snf.u(kept[r], c), factors[r]);
      from_group(c, r) = snf.u_inv(c, kept[r]);
    }
  }
  return {FgGroup::from_canonical(std::move(factors)), std::move(to_group), std::move(from_group)};
}

IntMatrix factor_diagonal(const FgGroup& g) { return IntMatrix::diagonal(g.invariant_factors()); }

void reduce_into(IntMatrix& m, const FgGroup& target) {
  const auto& e = target.invariant_factors();
  for (std::size_t j = 0; j < m.rows(); ++j) {
    if (e[j].is_zero()) continue;
    for (std::size_t i = 0; i < m.cols(); ++i) m(j, i) = floor_mod(m(j, i), e[j]);
  }
}

// Kernel of f as the lattice L = {x : M·x ∈ E·Z^nb} modulo D·Z^na.
struct KernelLattice {
  IntMatrix basis;  // na × r, Z-basis of L
  Presentation pres;  // L / D·Z^na in L-coordinates
};

KernelLattice kernel_lattice(const GroupHom& f) {
  const std::size_t na = f.src().rank();
  const auto& d = f.src().invariant_factors();
  const IntMatrix w = intlin::hstack(f.matrix(), factor_diagonal(f.dst()));
  const auto kb = intlin::integer_kernel_basis(w);

  IntMatrix generators(na, kb.size());
  for (std::size_t c = 0; c < kb.size(); ++c)
    for (std::size_t r = 0; r < na; ++r) generators(r, c) = kb[c][r];
  IntMatrix basis = intlin::column_lattice_basis(generators);

  // Express the source relations d_i·e_i in the L-basis.
  const std::size_t rank = basis.cols();
  IntMatrix relations(rank, na);
  const IntegerSolver solver(basis);
  for (std::size_t i = 0; i < na; ++i) {
    if (d[i].is_zero()) continue;
    IntVector v(na);
    v[i] = d[i];
    auto c = solver.particular(v);
    if (!c) throw std::logic_error("kernel: source relation outside kernel lattice");
    for (std::size_t k = 0; k < rank; ++k) relations(k, i) = (*c)[k];
  }
  return {std::move(basis), present(relations)};
}

Presentation cokernel_presentation(const GroupHom& f) {
  return present(intlin::hstack(f.matrix(), factor_diagonal(f.dst())));
}

bool is_zero_map(const GroupHom& f) { return f.matrix().is_zero(); }

IntVector unit_vector(std::size_t n, std::size_t k) {
  IntVector v(n);
  v[k] = 1;
  return v;
}

}  // namespace

Normalization normalize_with_iso(const std::vector<BigInt>& factors) {
  for (const auto& x : factors)
    if (x.sign() < 0) throw InputError("normalize_object: negative cyclic order " + x.str());
  auto pres = present(IntMatrix::diagonal(factors));
  return {std::move(pres.group), std::move(pres.to_group), std::move(pres.from_group)};
}

FgGroup normalize_object(const std::vector<BigInt>& factors) { return normalize_with_iso(factors).group; }

GroupHom make_hom(const FgGroup& src, const FgGroup& dst, const IntMatrix& matrix) {
  if (matrix.rows() != dst.rank() || matrix.cols() != src.rank()) {
    std::ostringstream os;
    os << "hom matrix is " << matrix.rows() << "×" << matrix.cols() << ", expected " << dst.rank() << "×"
       << src.rank() << " for " << src.to_string() << " → " << dst.to_string();
    throw InputError(os.str());
  }
  const auto& d = src.invariant_factors();
  const auto& e = dst.invariant_factors();
  IntMatrix m = matrix;
  for (std::size_t j = 0; j < m.rows(); ++j) {
    for (std::size_t i = 0; i < m.cols(); ++i) {
      const BigInt image_of_relation = m(j, i) * d[i];
      if (!floor_mod(image_of_relation, e[j]).is_zero()) {
        std::ostringstream os;
        os << "not a homomorphism: entry (" << j << "," << i << ") = " << m(j, i) << " gives " << m(j, i) << "·"
           << d[i] << " = " << image_of_relation;
        if (e[j].is_zero())
          os << " ≠ 0 in Z";
        else
          os << " ≢ 0 (mod " << e[j] << ")";
        throw NotAHomomorphism(os.str(), j, i);
      }
    }
  }
  reduce_into(m, dst);
  return GroupHom(src, dst, std::move(m));
}

GroupHom identity(const FgGroup& a) { return make_hom(a, a, IntMatrix::identity(a.rank())); }

GroupHom zero_hom(const FgGroup& a, const FgGroup& b) { return make_hom(a, b, IntMatrix(b.rank(), a.rank())); }

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (f.dst() != g.src()) {
    throw InputError("compose: " + describe(g) + " ∘ " + describe(f) + " is not composable");
  }
  return make_hom(f.src(), g.dst(), g.matrix() * f.matrix());
}

GroupHom add(const GroupHom& f, const GroupHom& g) {
  if (f.src() != g.src() || f.dst() != g.dst()) throw InputError("add: morphisms in different hom-sets");
  return make_hom(f.src(), f.dst(), f.matrix() + g.matrix());
}

GroupHom negate(const GroupHom& f) { return make_hom(f.src(), f.dst(), -f.matrix()); }

KernelData kernel(const GroupHom& f) {
  const auto lattice = kernel_lattice(f);
  const FgGroup& k = lattice.pres.group;
  return {k, make_hom(k, f.src(), lattice.basis * lattice.pres.from_group)};
}

CokernelData cokernel(const GroupHom& f) {
  auto pres = cokernel_presentation(f);
  return {pres.group, make_hom(f.dst(), pres.group, pres.to_group)};
}

GroupHom factor_through_kernel(const GroupHom& f, const GroupHom& g) {
  if (g.dst() != f.src()) throw InputError("factor_through_kernel: g does not land in the domain of f");
  if (!is_zero_map(compose(f, g))) throw PreconditionError("factor_through_kernel: f∘g ≠ 0");
  const auto lattice = kernel_lattice(f);
  const IntegerSolver solver(lattice.basis);
  const std::size_t rank = lattice.basis.cols();
  IntMatrix coords(rank, g.src().rank());
  for (std::size_t c = 0; c < g.src().rank(); ++c) {
    auto sol = solver.particular(g.matrix().column(c));
    if (!sol) throw std::logic_error("factor_through_kernel: column outside kernel lattice");
    for (std::size_t k = 0; k < rank; ++k) coords(k, c) = (*sol)[k];
  }
  return make_hom(g.src(), lattice.pres.group, lattice.pres.to_group * coords);
}

GroupHom factor_through_cokernel(const GroupHom& f, const GroupHom& g) {
  if (g.src() != f.dst()) throw InputError("factor_through_cokernel: g does not start at the codomain of f");
  if (!is_zero_map(compose(g, f))) throw PreconditionError("factor_through_cokernel: g∘f ≠ 0");
  const auto pres = cokernel_presentation(f);
  return make_hom(pres.group, g.dst(), g.matrix() * pres.from_group);
}

GroupHom factor_through_mono(const GroupHom& m, const GroupHom& x) {
  if (x.dst() != m.dst()) throw InputError("factor_through_mono: codomains differ");
  if (!kernel(m).object.is_zero()) throw PreconditionError("factor_through_mono: morphism is not monic");
  const std::size_t nc = m.src().rank();
  const IntegerSolver solver(intlin::hstack(m.matrix(), factor_diagonal(m.dst())));
  IntMatrix y(nc, x.src().rank());
  for (std::size_t c = 0; c < x.src().rank(); ++c) {
    auto sol = solver.particular(x.matrix().column(c));
    if (!sol) throw PreconditionError("factor_through_mono: image not contained in the subobject");
    for (std::size_t k = 0; k < nc; ++k) y(k, c) = (*sol)[k];
  }
  return make_hom(x.src(), m.src(), y);
}

GroupHom factor_through_epi(const GroupHom& e, const GroupHom& x) {
  if (x.src() != e.src()) throw InputError("factor_through_epi: domains differ");
  if (!cokernel(e).object.is_zero()) throw PreconditionError("factor_through_epi: morphism is not epic");
  if (!is_zero_map(compose(x, kernel(e).inclusion))) {
    throw PreconditionError("factor_through_epi: x does not vanish on the kernel");
  }
  const std::size_t nb = e.src().rank();
  const std::size_t nc = e.dst().rank();
  const IntegerSolver solver(intlin::hstack(e.matrix(), factor_diagonal(e.dst())));
  // Preimages of the target generators.
  IntMatrix section(nb, nc);
  for (std::size_t k = 0; k < nc; ++k) {
    auto sol = solver.particular(unit_vector(nc, k));
    if (!sol) throw std::logic_error("factor_through_epi: generator without preimage");
    for (std::size_t r = 0; r < nb; ++r) section(r, k) = (*sol)[r];
  }
  return make_hom(e.dst(), x.dst(), x.matrix() * section);
}

DirectSumData direct_sum(const FgGroup& a, const FgGroup& b) {
  std::vector<BigInt> all = a.invariant_factors();
  all.insert(all.end(), b.invariant_factors().begin(), b.invariant_factors().end());
  const auto norm = normalize_with_iso(all);
  const std::size_t na = a.rank();
  const std::size_t nb = b.rank();
  const FgGroup& s = norm.group;
  return {s,
          make_hom(a, s, norm.to_canonical.columns_range(0, na)),
          make_hom(b, s, norm.to_canonical.columns_range(na, na + nb)),
          make_hom(s, a, norm.from_canonical.rows_range(0, na)),
          make_hom(s, b, norm.from_canonical.rows_range(na, na + nb))};
}

std::string describe(const GroupHom& f) {
  return f.src().to_string() + "→" + f.dst().to_string() + " " + intlin::to_string(f.matrix());
}

}  // namespace abelcat::fgab
