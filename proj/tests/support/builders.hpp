#pragma once

// Terse constructors for test fixtures.

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "abelcat/fgab.hpp"
#include "abelcat/genprop.hpp"
#include "abelcat/vecfp.hpp"
#include "contract_suite.hpp"

namespace abelcat::test_support {

inline intlin::IntMatrix mat(std::initializer_list<std::initializer_list<long long>> rows, std::size_t cols = 0) {
  std::vector<intlin::IntVector> r;
  for (const auto& row : rows) {
    intlin::IntVector v;
    for (auto x : row) v.emplace_back(x);
    r.push_back(std::move(v));
  }
  return intlin::IntMatrix::from_rows(r, cols);
}

inline intlin::IntVector vec(std::initializer_list<long long> xs) {
  intlin::IntVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

inline fgab::FgGroup grp(std::initializer_list<long long> factors) {
  std::vector<intlin::BigInt> f;
  for (auto x : factors) f.emplace_back(x);
  return fgab::FgGroup::from_canonical(f);
}

/// Matrix rows are the target's coordinates.
inline fgab::GroupHom hom(const fgab::FgGroup& a, const fgab::FgGroup& b,
                          std::initializer_list<std::initializer_list<long long>> rows) {
  return fgab::make_hom(a, b, mat(rows, a.rank()));
}

inline std::vector<long long> factors_of(const fgab::FgGroup& g) {
  std::vector<long long> out;
  for (const auto& d : g.invariant_factors()) out.push_back(static_cast<long long>(d));
  return out;
}

inline vecfp::FpMap fpmap(vecfp::Scalar p, std::size_t src, std::size_t dst, std::vector<vecfp::Scalar> entries) {
  return vecfp::make_map(vecfp::make_space(p, src), vecfp::make_space(p, dst),
                         vecfp::FpMatrix(dst, src, std::move(entries)));
}

inline Draws<fgab::FgAb> fgab_draws(const genprop::GenConfig& cfg, genprop::Rng& rng) {
  return {[cfg, &rng] { return genprop::random_object(cfg, rng); },
          [&rng](const fgab::FgGroup& a, const fgab::FgGroup& b) { return genprop::random_hom(a, b, rng); }};
}

inline Draws<vecfp::FpVect> vecfp_draws(vecfp::Scalar p, std::size_t max_dim, genprop::Rng& rng) {
  return {[p, max_dim, &rng] { return genprop::random_space(p, max_dim, rng); },
          [&rng](const vecfp::FpSpace& a, const vecfp::FpSpace& b) { return genprop::random_map(a, b, rng); }};
}

/// Hom(a, b) in the opposite category is Hom(b, a) below.
template <AbelianCategory C>
Draws<Opposite<C>> opposite_draws(Draws<C> d) {
  return {d.object, [hom = d.hom](const typename C::Object& a, const typename C::Object& b) { return hom(b, a); }};
}

}  // namespace abelcat::test_support
