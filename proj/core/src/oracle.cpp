#include "abelcat/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace abelcat::oracle {

namespace {

std::int64_t mod(__int128 x, std::int64_t m) {
  __int128 r = x % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// For a finite abelian group H of order `order`, torsion(p, k) must return
// |{x ∈ H : p^k·x = 0}|. The cyclic p-power summands of exponent ≥ k number
// log_p(torsion(p, k) / torsion(p, k − 1)).
std::vector<std::int64_t> invariants_from_torsion(std::int64_t order,
                                                   const std::function<std::int64_t(std::int64_t, int)>& torsion) {
  std::map<std::int64_t, std::vector<int>> exponents;  // prime → exponents, descending
  std::size_t longest = 0;
  for (std::int64_t p : prime_factors(order)) {
    std::int64_t sylow = 1;
    for (std::int64_t n = order; n % p == 0; n /= p) sylow *= p;
    std::vector<int> at_least;  // at_least[k-1] = #summands with exponent ≥ k
    std::int64_t prev = 1;
    for (int k = 1; prev < sylow; ++k) {
      const std::int64_t cur = torsion(p, k);
      int r = 0;
      for (std::int64_t q = cur / prev; q > 1; q /= p) ++r;
      at_least.push_back(r);
      prev = cur;
    }
    std::vector<int> exps;
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      const int next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
      for (int c = 0; c < at_least[k] - next; ++c) exps.push_back(static_cast<int>(k + 1));
    }
    std::sort(exps.rbegin(), exps.rend());
    longest = std::max(longest, exps.size());
    exponents[p] = std::move(exps);
  }
  std::vector<std::int64_t> factors(longest, 1);
  for (const auto& [p, exps] : exponents)
    for (std::size_t t = 0; t < exps.size(); ++t)
      for (int e = 0; e < exps[t]; ++e) factors[t] *= p;
  std::sort(factors.begin(), factors.end());
  return factors;
}

// cur[x] ↦ p·cur[x], applied k times to the identity gives p^k·x.
std::vector<std::size_t> scale_all(const ElementTable& g, const std::vector<std::size_t>& xs, std::int64_t p) {
  std::vector<std::size_t> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = g.multiple(xs[i], p);
  return out;
}

}  // namespace

ElementTable::ElementTable(const fgab::FgGroup& group, std::size_t limit) {
  for (const auto& d : group.invariant_factors()) {
    if (d == 0) throw OracleInapplicable("oracle inapplicable: infinite group " + group.to_string());
    if (d > limit) throw OracleInapplicable("oracle inapplicable: group too large " + group.to_string());
    moduli_.push_back(static_cast<std::int64_t>(d));
    size_ *= static_cast<std::size_t>(moduli_.back());
    if (size_ > limit) throw OracleInapplicable("oracle inapplicable: group too large " + group.to_string());
  }
}

Element ElementTable::element(std::size_t index) const {
  Element x(moduli_.size());
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    x[i] = static_cast<std::int64_t>(index % moduli_[i]);
    index /= moduli_[i];
  }
  return x;
}

std::size_t ElementTable::index(const Element& x) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) idx = idx * moduli_[i] + static_cast<std::size_t>(mod(x[i], moduli_[i]));
  return idx;
}

std::size_t ElementTable::add(std::size_t x, std::size_t y) const {
  Element a = element(x);
  const Element b = element(y);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = mod(static_cast<__int128>(a[i]) + b[i], moduli_[i]);
  return index(a);
}

std::size_t ElementTable::multiple(std::size_t x, std::int64_t k) const {
  Element a = element(x);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = mod(static_cast<__int128>(a[i]) * k, moduli_[i]);
  return index(a);
}

HomTable::HomTable(const fgab::GroupHom& f, std::size_t limit)
    : src_(f.src(), limit), dst_(f.dst(), limit), values_(src_.size()) {
  const auto& m = f.matrix();
  const std::size_t rows = dst_.moduli().size();
  const std::size_t cols = src_.moduli().size();
  std::vector<std::vector<std::int64_t>> entries(rows, std::vector<std::int64_t>(cols));
  for (std::size_t j = 0; j < rows; ++j)
    for (std::size_t i = 0; i < cols; ++i) {
      fgab::BigInt e = m(j, i) % dst_.moduli()[j];
      if (e < 0) e += dst_.moduli()[j];
      entries[j][i] = static_cast<std::int64_t>(e);
    }
  for (std::size_t x = 0; x < src_.size(); ++x) {
    const Element a = src_.element(x);
    Element b(rows, 0);
    for (std::size_t j = 0; j < rows; ++j) {
      __int128 acc = 0;
      for (std::size_t i = 0; i < cols; ++i) acc += static_cast<__int128>(entries[j][i]) * a[i];
      b[j] = mod(acc, dst_.moduli()[j]);
    }
    values_[x] = dst_.index(b);
  }
}

bool HomTable::injective() const { return kernel().size() == 1; }

bool HomTable::surjective() const { return image().size() == dst_.size(); }

std::vector<std::size_t> HomTable::kernel() const {
  std::vector<std::size_t> k;
  for (std::size_t x = 0; x < values_.size(); ++x)
    if (values_[x] == 0) k.push_back(x);
  return k;
}

std::vector<std::size_t> HomTable::image() const {
  std::vector<std::size_t> im = values_;
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

std::vector<std::int64_t> subgroup_invariants(const ElementTable& g, const std::vector<std::size_t>& subgroup) {
  const auto order = static_cast<std::int64_t>(subgroup.size());
  return invariants_from_torsion(order, [&](std::int64_t p, int k) {
    std::vector<std::size_t> xs = subgroup;
    for (int i = 0; i < k; ++i) xs = scale_all(g, xs, p);
    return static_cast<std::int64_t>(std::count(xs.begin(), xs.end(), std::size_t{0}));
  });
}

std::vector<std::int64_t> quotient_invariants(const ElementTable& g, const std::vector<std::size_t>& subgroup) {
  std::vector<char> in_sub(g.size(), 0);
  for (auto x : subgroup) in_sub[x] = 1;
  std::vector<std::size_t> all(g.size());
  for (std::size_t x = 0; x < all.size(); ++x) all[x] = x;
  const auto order = static_cast<std::int64_t>(g.size() / subgroup.size());
  return invariants_from_torsion(order, [&](std::int64_t p, int k) {
    std::vector<std::size_t> xs = all;
    for (int i = 0; i < k; ++i) xs = scale_all(g, xs, p);
    std::int64_t hits = 0;
    for (auto x : xs) hits += in_sub[x];
    return hits / static_cast<std::int64_t>(subgroup.size());  // cosets killed by p^k
  });
}

namespace {

void require_same(const ElementTable& a, const ElementTable& b, const char* what) {
  if (a.moduli() != b.moduli()) throw InputError(std::string("oracle: ") + what + ": groups do not match");
}

}  // namespace

bool exact_at(const HomTable& f, const HomTable& g) {
  require_same(f.dst(), g.src(), "exact_at");
  return f.image() == g.kernel();
}

bool short_exact(const HomTable& f, const HomTable& g) { return f.injective() && g.surjective() && exact_at(f, g); }

bool square_commutes(const HomTable& p, const HomTable& q, const HomTable& r, const HomTable& s) {
  require_same(q.src(), s.src(), "square_commutes");
  for (std::size_t x = 0; x < q.src().size(); ++x)
    if (p(q(x)) != r(s(x))) return false;
  return true;
}

namespace {

bool holds(const HomTable& m, ShortFiveMode mode) {
  switch (mode) {
    case ShortFiveMode::Monic:
      return m.injective();
    case ShortFiveMode::Epic:
      return m.surjective();
    case ShortFiveMode::Iso:
      return m.injective() && m.surjective();
  }
  return false;
}

}  // namespace

LadderVerdict check_ladder(const SesLadder<fgab::GroupHom>& l, ShortFiveMode mode, std::size_t limit) {
  const HomTable f(l.f, limit), g(l.g, limit), fp(l.f_prime, limit), gp(l.g_prime, limit);
  const HomTable alpha(l.alpha, limit), beta(l.beta, limit), gamma(l.gamma, limit);
  LadderVerdict v;
  v.hypotheses = short_exact(f, g) && short_exact(fp, gp) && square_commutes(fp, alpha, beta, f) &&
                 square_commutes(gp, beta, gamma, g) && holds(alpha, mode) && holds(gamma, mode);
  v.conclusion = holds(beta, mode);
  return v;
}

LadderVerdict check_grid(const NineGrid<fgab::GroupHom>& grid, NineDirection dir, std::size_t limit) {
  auto table = [&](const fgab::GroupHom& m) { return HomTable(m, limit); };
  std::vector<HomTable> f, g, a, b, c;
  for (std::size_t i = 0; i < 3; ++i) {
    f.push_back(table(grid.f[i]));
    g.push_back(table(grid.g[i]));
  }
  for (std::size_t i = 0; i < 2; ++i) {
    a.push_back(table(grid.alpha[i]));
    b.push_back(table(grid.beta[i]));
    c.push_back(table(grid.gamma[i]));
  }
  LadderVerdict v;
  v.hypotheses = short_exact(a[0], a[1]) && short_exact(b[0], b[1]) && short_exact(c[0], c[1]);
  for (std::size_t i = 0; i < 2; ++i) {
    v.hypotheses = v.hypotheses && square_commutes(b[i], f[i], f[i + 1], a[i]) &&
                   square_commutes(c[i], g[i], g[i + 1], b[i]);
  }
  const std::size_t r1 = dir == NineDirection::BottomFromTop ? 0 : 1;
  const std::size_t concluded = dir == NineDirection::BottomFromTop ? 2 : 0;
  v.hypotheses = v.hypotheses && short_exact(f[r1], g[r1]) && short_exact(f[r1 + 1], g[r1 + 1]);
  v.conclusion = short_exact(f[concluded], g[concluded]);
  return v;
}

}  // namespace abelcat::oracle
