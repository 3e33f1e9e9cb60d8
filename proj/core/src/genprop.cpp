#include "abelcat/genprop.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/integer/common_factor_rt.hpp>

#include "abelcat/abcat.hpp"

namespace abelcat::genprop {

using fgab::FgAb;
using intlin::IntMatrix;

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::SplitSplit:
      return "split_split";
    case Scheme::EpiKernelTopSplitBottom:
      return "epi_kernel_top_split_bottom";
    case Scheme::Conjugated:
      return "conjugated";
  }
  return "unknown";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "split_split") return Scheme::SplitSplit;
  if (name == "epi_kernel_top_split_bottom") return Scheme::EpiKernelTopSplitBottom;
  if (name == "conjugated") return Scheme::Conjugated;
  throw InputError("unknown generator scheme '" + std::string(name) + "'");
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: empty range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool Rng::chance(double p) {
  if (p <= 0) return false;
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
}

namespace {

const FgAb kCat;

std::size_t free_rank(const FgGroup& g) {
  return static_cast<std::size_t>(
      std::count(g.invariant_factors().begin(), g.invariant_factors().end(), BigInt(0)));
}

BigInt torsion_order(const FgGroup& g) {
  BigInt n = 1;
  for (const auto& d : g.invariant_factors())
    if (d != 0) n *= d;
  return n;
}

// Cheap necessary conditions, so rejection sampling is skipped when hopeless.
bool monic_possible(const FgGroup& a, const FgGroup& b) {
  if (free_rank(a) > free_rank(b)) return false;
  if (free_rank(b) == 0 && torsion_order(a) > torsion_order(b)) return false;
  return true;
}

bool epic_possible(const FgGroup& a, const FgGroup& b) {
  if (free_rank(b) > free_rank(a)) return false;
  if (free_rank(a) == 0 && torsion_order(a) % torsion_order(b) != 0) return false;
  return true;
}

std::uint64_t to_u64(const BigInt& x) {
  if (x < 0 || x > std::numeric_limits<std::uint64_t>::max()) throw std::out_of_range("generator modulus too large");
  return static_cast<std::uint64_t>(x);
}

// prime → exponents of the cyclic p-power summands
struct PrimaryParts {
  std::map<BigInt, std::vector<unsigned>> exponents;
  std::size_t free = 0;
};

PrimaryParts primary_parts(const FgGroup& g) {
  PrimaryParts parts;
  for (BigInt d : g.invariant_factors()) {
    if (d == 0) {
      ++parts.free;
      continue;
    }
    for (BigInt p = 2; p * p <= d; ++p) {
      unsigned k = 0;
      while (d % p == 0) {
        d /= p;
        ++k;
      }
      if (k) parts.exponents[p].push_back(k);
    }
    if (d > 1) parts.exponents[d].push_back(1);
  }
  return parts;
}

GroupHom conjugate(const GroupHom& m, const GroupHom& src_inverse, const GroupHom& dst_auto) {
  return fgab::compose(dst_auto, fgab::compose(m, src_inverse));
}

struct Automorphism {
  GroupHom forward;
  GroupHom inverse;
};

Automorphism random_automorphism_pair(const FgGroup& a, Rng& rng, std::size_t retries) {
  auto u = random_automorphism(a, rng, retries);
  auto cls = classify_morphism(kCat, u);
  return {u, *cls.inverse};
}

// α or γ for a given mode; the target is chosen here.
GroupHom draw_vertical(const GenConfig& cfg, ShortFiveMode mode, const FgGroup& src, Rng& rng) {
  switch (mode) {
    case ShortFiveMode::Monic: {
      const FgGroup t = random_object(cfg, rng);
      if (auto m = try_random_monic(src, t, rng, cfg.retry_bound)) return *m;
      const auto sum = fgab::direct_sum(src, random_object(cfg, rng));
      return sum.inj_a;
    }
    case ShortFiveMode::Epic: {
      const FgGroup t = random_object(cfg, rng);
      if (auto e = try_random_epic(src, t, rng, cfg.retry_bound)) return *e;
      const FgGroup y = random_object(cfg, rng);
      return fgab::cokernel(random_hom(y, src, rng)).projection;
    }
    case ShortFiveMode::Iso:
      return random_automorphism(src, rng, cfg.retry_bound);
  }
  throw std::logic_error("draw_vertical: bad mode");
}

bool has_property(const GroupHom& m, ShortFiveMode mode) {
  switch (mode) {
    case ShortFiveMode::Monic:
      return is_monic(kCat, m);
    case ShortFiveMode::Epic:
      return is_epic(kCat, m);
    case ShortFiveMode::Iso:
      return is_monic(kCat, m) && is_epic(kCat, m);
  }
  return false;
}

SesLadder<GroupHom> gen_split_split(const GenConfig& cfg, ShortFiveMode mode, Rng& rng) {
  const FgGroup a = random_object(cfg, rng);
  const FgGroup c = random_object(cfg, rng);
  GroupHom alpha = draw_vertical(cfg, mode, a, rng);
  GroupHom gamma = draw_vertical(cfg, mode, c, rng);
  if (rng.chance(cfg.perturb_probability)) {
    if (rng.below(2) == 0) {
      alpha = random_hom(a, alpha.dst(), rng);
    } else {
      gamma = random_hom(c, gamma.dst(), rng);
    }
  }
  const GroupHom h = random_hom(c, alpha.dst(), rng);
  return split_ladder(alpha, gamma, h);
}

SesLadder<GroupHom> gen_epi_kernel(const GenConfig& cfg, ShortFiveMode mode, Rng& rng) {
  auto top = random_ses(cfg, rng);
  const FgGroup c = top.g.dst();
  GroupHom gamma = draw_vertical(cfg, mode, c, rng);

  std::optional<GroupHom> beta1;
  const FgGroup b = top.f.dst();
  const FgGroup a = top.f.src();
  switch (mode) {
    case ShortFiveMode::Monic: {
      const FgGroup target = random_object(cfg, rng);
      if (monic_possible(a, target)) {
        for (std::size_t k = 0; k < cfg.retry_bound && !beta1; ++k) {
          auto cand = random_hom(b, target, rng);
          if (is_monic(kCat, fgab::compose(cand, top.f))) beta1 = cand;
        }
      }
      if (!beta1) beta1 = fgab::direct_sum(b, random_object(cfg, rng)).inj_a;
      break;
    }
    case ShortFiveMode::Epic: {
      const FgGroup target = random_object(cfg, rng);
      if (epic_possible(a, target)) {
        for (std::size_t k = 0; k < cfg.retry_bound && !beta1; ++k) {
          auto cand = random_hom(b, target, rng);
          if (is_epic(kCat, fgab::compose(cand, top.f))) beta1 = cand;
        }
      }
      if (!beta1) beta1 = fgab::zero_hom(b, FgGroup{});
      break;
    }
    case ShortFiveMode::Iso: {
      for (std::size_t k = 0; k < cfg.retry_bound && !beta1; ++k) {
        auto cand = random_hom(b, a, rng);
        if (has_property(fgab::compose(cand, top.f), ShortFiveMode::Iso)) beta1 = cand;
      }
      if (!beta1) {
        // The top row does not split; replace it by a split one.
        const auto sum = fgab::direct_sum(a, c);
        top = {sum.inj_a, sum.proj_b};
        beta1 = fgab::compose(random_automorphism(a, rng, cfg.retry_bound), sum.proj_a);
      }
      break;
    }
  }
  if (rng.chance(cfg.perturb_probability)) {
    if (rng.below(2) == 0) {
      beta1 = random_hom(top.f.dst(), beta1->dst(), rng);
    } else {
      gamma = random_hom(c, gamma.dst(), rng);
    }
  }

  const auto bottom = fgab::direct_sum(beta1->dst(), gamma.dst());
  SesLadder<GroupHom> l;
  l.f = top.f;
  l.g = top.g;
  l.f_prime = bottom.inj_a;
  l.g_prime = bottom.proj_b;
  l.alpha = fgab::compose(*beta1, top.f);
  l.gamma = gamma;
  l.beta = fgab::add(fgab::compose(bottom.inj_a, *beta1),
                     fgab::compose(bottom.inj_b, fgab::compose(gamma, top.g)));
  return l;
}

SesLadder<GroupHom> conjugate_ladder(const SesLadder<GroupHom>& l, const GenConfig& cfg, Rng& rng) {
  const auto ua = random_automorphism_pair(l.f.src(), rng, cfg.retry_bound);
  const auto ub = random_automorphism_pair(l.f.dst(), rng, cfg.retry_bound);
  const auto uc = random_automorphism_pair(l.g.dst(), rng, cfg.retry_bound);
  const auto ua2 = random_automorphism_pair(l.f_prime.src(), rng, cfg.retry_bound);
  const auto ub2 = random_automorphism_pair(l.f_prime.dst(), rng, cfg.retry_bound);
  const auto uc2 = random_automorphism_pair(l.g_prime.dst(), rng, cfg.retry_bound);
  SesLadder<GroupHom> out;
  out.f = conjugate(l.f, ua.inverse, ub.forward);
  out.g = conjugate(l.g, ub.inverse, uc.forward);
  out.f_prime = conjugate(l.f_prime, ua2.inverse, ub2.forward);
  out.g_prime = conjugate(l.g_prime, ub2.inverse, uc2.forward);
  out.alpha = conjugate(l.alpha, ua.inverse, ua2.forward);
  out.beta = conjugate(l.beta, ub.inverse, ub2.forward);
  out.gamma = conjugate(l.gamma, uc.inverse, uc2.forward);
  return out;
}

}  // namespace

FgGroup random_object(const GenConfig& cfg, Rng& rng) {
  if (cfg.factor_pool.empty()) return {};
  for (std::size_t attempt = 0; attempt < std::max<std::size_t>(cfg.retry_bound, 1); ++attempt) {
    const std::size_t r = static_cast<std::size_t>(rng.below(cfg.max_rank + 1));
    std::vector<BigInt> factors;
    for (std::size_t i = 0; i < r; ++i) factors.push_back(cfg.factor_pool[rng.below(cfg.factor_pool.size())]);
    FgGroup g = fgab::normalize_object(factors);
    if (cfg.max_order == 0 || !g.is_finite() || *g.order() <= cfg.max_order) return g;
  }
  return {};
}

GroupHom random_hom(const FgGroup& a, const FgGroup& b, Rng& rng) {
  const auto& d = a.invariant_factors();
  const auto& e = b.invariant_factors();
  IntMatrix m(e.size(), d.size());
  for (std::size_t j = 0; j < e.size(); ++j) {
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (e[j] != 0) {
        const BigInt g = boost::integer::gcd(d[i], e[j]);
        const BigInt step = e[j] / g;
        m(j, i) = step * BigInt(rng.below(to_u64(g)));
      } else if (d[i] == 0) {
        m(j, i) = rng.between(-3, 3);
      }
    }
  }
  return fgab::make_hom(a, b, m);
}

std::optional<GroupHom> try_random_monic(const FgGroup& a, const FgGroup& b, Rng& rng, std::size_t retries) {
  if (a.is_zero()) return fgab::zero_hom(a, b);
  if (!monic_possible(a, b)) return std::nullopt;
  for (std::size_t k = 0; k < retries; ++k) {
    auto h = random_hom(a, b, rng);
    if (is_monic(kCat, h)) return h;
  }
  return std::nullopt;
}

std::optional<GroupHom> try_random_epic(const FgGroup& a, const FgGroup& b, Rng& rng, std::size_t retries) {
  if (b.is_zero()) return fgab::zero_hom(a, b);
  if (!epic_possible(a, b)) return std::nullopt;
  for (std::size_t k = 0; k < retries; ++k) {
    auto h = random_hom(a, b, rng);
    if (is_epic(kCat, h)) return h;
  }
  return std::nullopt;
}

std::optional<FgGroup> split_complement(const FgGroup& whole, const FgGroup& part) {
  auto w = primary_parts(whole);
  const auto p = primary_parts(part);
  if (p.free > w.free) return std::nullopt;
  for (const auto& [prime, exps] : p.exponents) {
    auto it = w.exponents.find(prime);
    if (it == w.exponents.end()) return std::nullopt;
    for (unsigned k : exps) {
      auto pos = std::find(it->second.begin(), it->second.end(), k);
      if (pos == it->second.end()) return std::nullopt;
      it->second.erase(pos);
    }
  }
  std::vector<BigInt> rest;
  for (const auto& [prime, exps] : w.exponents)
    for (unsigned k : exps) rest.push_back(boost::multiprecision::pow(prime, k));
  rest.insert(rest.end(), w.free - p.free, BigInt(0));
  return fgab::normalize_object(rest);
}

GroupHom random_monic(const FgGroup& a, const FgGroup& b, Rng& rng, std::size_t retries) {
  if (auto m = try_random_monic(a, b, rng, retries)) return *m;
  if (auto x = split_complement(b, a)) {
    auto sum = fgab::direct_sum(a, *x);
    if (!(sum.sum_object == b)) throw std::logic_error("random_monic: complement does not rebuild the target");
    return sum.inj_a;
  }
  throw PreconditionError("random_monic: no monomorphism " + a.to_string() + " → " + b.to_string() + " found");
}

GroupHom random_epic(const FgGroup& a, const FgGroup& b, Rng& rng, std::size_t retries) {
  if (auto e = try_random_epic(a, b, rng, retries)) return *e;
  if (auto x = split_complement(a, b)) {
    auto sum = fgab::direct_sum(b, *x);
    if (!(sum.sum_object == a)) throw std::logic_error("random_epic: complement does not rebuild the source");
    return sum.proj_a;
  }
  throw PreconditionError("random_epic: no epimorphism " + a.to_string() + " → " + b.to_string() + " found");
}

GroupHom random_automorphism(const FgGroup& a, Rng& rng, std::size_t retries) {
  if (a.is_zero()) return fgab::identity(a);
  // Random endomorphisms of a free part are almost never invertible.
  const std::size_t tries = free_rank(a) == 0 ? retries : std::min<std::size_t>(retries, 4);
  for (std::size_t k = 0; k < tries; ++k) {
    auto u = random_hom(a, a, rng);
    if (has_property(u, ShortFiveMode::Iso)) return u;
  }
  // Product of elementary automorphisms: x_i ↦ x_i + k·x_j and unit scalings.
  const auto& d = a.invariant_factors();
  const std::size_t n = d.size();
  GroupHom u = fgab::identity(a);
  for (std::size_t step = 0; step < 2 * n; ++step) {
    IntMatrix m = IntMatrix::identity(n);
    const std::size_t i = rng.below(n);
    const std::size_t j = rng.below(n);
    if (i != j) {
      // x_i ↦ x_i + k·x_j needs k·d_i ≡ 0 (mod d_j).
      BigInt k = rng.between(-2, 2);
      if (d[j] != 0) {
        k *= d[j] / boost::integer::gcd(d[i], d[j]);
      } else if (d[i] != 0) {
        k = 0;
      }
      m(j, i) = k;
    } else if (d[i] == 0) {
      m(i, i) = rng.below(2) ? 1 : -1;
    } else {
      BigInt s = rng.between(1, 12);
      while (boost::integer::gcd(s, d[i]) != 1) ++s;
      m(i, i) = s;
    }
    u = fgab::compose(fgab::make_hom(a, a, m), u);
  }
  return u;
}

SesLadder<GroupHom> split_ladder(const GroupHom& alpha, const GroupHom& gamma, const GroupHom& h) {
  const auto top = fgab::direct_sum(alpha.src(), gamma.src());
  const auto bottom = fgab::direct_sum(alpha.dst(), gamma.dst());
  SesLadder<GroupHom> l;
  l.f = top.inj_a;
  l.g = top.proj_b;
  l.f_prime = bottom.inj_a;
  l.g_prime = bottom.proj_b;
  l.alpha = alpha;
  l.gamma = gamma;
  const GroupHom upper = fgab::add(fgab::compose(alpha, top.proj_a), fgab::compose(h, top.proj_b));
  l.beta = fgab::add(fgab::compose(bottom.inj_a, upper),
                     fgab::compose(bottom.inj_b, fgab::compose(gamma, top.proj_b)));
  return l;
}

ShortExactPair random_ses(const GenConfig& cfg, Rng& rng) {
  const FgGroup b = random_object(cfg, rng);
  const FgGroup y = rng.below(2) ? b : random_object(cfg, rng);
  const GroupHom h = random_hom(b, y, rng);
  const auto image = image_factorization(kCat, h);
  const auto ker = fgab::kernel(image.canonical_epi);
  return {ker.inclusion, image.canonical_epi};
}

SesLadder<GroupHom> gen_ladder(const GenConfig& cfg, ShortFiveMode mode, Rng& rng) {
  switch (cfg.scheme) {
    case Scheme::SplitSplit:
      return gen_split_split(cfg, mode, rng);
    case Scheme::EpiKernelTopSplitBottom:
      return gen_epi_kernel(cfg, mode, rng);
    case Scheme::Conjugated: {
      auto base = rng.below(2) ? gen_split_split(cfg, mode, rng) : gen_epi_kernel(cfg, mode, rng);
      return conjugate_ladder(base, cfg, rng);
    }
  }
  throw std::logic_error("gen_ladder: bad scheme");
}

NineGrid<GroupHom> gen_nine_grid(const GenConfig& cfg, Rng& rng) {
  GenConfig clean = cfg;
  clean.perturb_probability = 0;
  auto l = gen_split_split(clean, ShortFiveMode::Monic, rng);
  if (cfg.scheme == Scheme::Conjugated) l = conjugate_ladder(l, cfg, rng);

  NineGrid<GroupHom> grid;
  grid.f[0] = l.f;
  grid.g[0] = l.g;
  grid.f[1] = l.f_prime;
  grid.g[1] = l.g_prime;
  grid.alpha[0] = l.alpha;
  grid.beta[0] = l.beta;
  grid.gamma[0] = l.gamma;
  grid.alpha[1] = fgab::cokernel(l.alpha).projection;
  grid.beta[1] = fgab::cokernel(l.beta).projection;
  grid.gamma[1] = fgab::cokernel(l.gamma).projection;
  grid.f[2] = fgab::factor_through_cokernel(l.alpha, fgab::compose(grid.beta[1], l.f_prime));
  grid.g[2] = fgab::factor_through_cokernel(l.beta, fgab::compose(grid.gamma[1], l.g_prime));
  return grid;
}

vecfp::FpSpace random_space(vecfp::Scalar prime, std::size_t max_dim, Rng& rng) {
  return vecfp::make_space(prime, static_cast<std::size_t>(rng.below(max_dim + 1)));
}

vecfp::FpMap random_map(const vecfp::FpSpace& a, const vecfp::FpSpace& b, Rng& rng) {
  vecfp::FpMatrix m(b.dim, a.dim);
  for (std::size_t r = 0; r < b.dim; ++r)
    for (std::size_t c = 0; c < a.dim; ++c) m(r, c) = rng.below(a.prime);
  return vecfp::make_map(a, b, m);
}

}  // namespace abelcat::genprop
