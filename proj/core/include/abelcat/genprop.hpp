#pragma once

// Seeded instance generators for property testing. Every generator takes an
// explicit Rng, so a fixed seed reproduces the same stream on any platform.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "abelcat/diagram.hpp"
#include "abelcat/fgab.hpp"
#include "abelcat/vecfp.hpp"

namespace abelcat::genprop {

using fgab::BigInt;
using fgab::FgGroup;
using fgab::GroupHom;

enum class Scheme { SplitSplit, EpiKernelTopSplitBottom, Conjugated };

std::string_view to_string(Scheme s);
/// Accepts split_split, epi_kernel_top_split_bottom, conjugated.
Scheme parse_scheme(std::string_view name);

struct GenConfig {
  std::uint64_t seed = 1;
  std::size_t max_rank = 2;
  std::vector<BigInt> factor_pool{2, 3, 4, 8, 9, 0};
  /// Finite draws above this order are redrawn (0 disables the bound).
  BigInt max_order = 64;
  Scheme scheme = Scheme::SplitSplit;
  std::size_t retry_bound = 64;
  /// Chance that a ladder's α or γ is drawn without the mode property, so
  /// failing hypotheses are exercised too.
  double perturb_probability = 0.0;
};

/// mt19937_64 plus portable bounded draws (the standard distributions are
/// implementation-defined, which would break cross-platform determinism).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  bool chance(double p);

 private:
  std::mt19937_64 engine_;
};

FgGroup random_object(const GenConfig& cfg, Rng& rng);
GroupHom random_hom(const FgGroup& a, const FgGroup& b, Rng& rng);

std::optional<GroupHom> try_random_monic(const FgGroup& a, const FgGroup& b, Rng& rng, std::size_t retries);
std::optional<GroupHom> try_random_epic(const FgGroup& a, const FgGroup& b, Rng& rng, std::size_t retries);
/// Rejection sampling, then the split embedding when b ≅ a ⊕ x. Throws
/// PreconditionError when neither yields a monomorphism.
GroupHom random_monic(const FgGroup& a, const FgGroup& b, Rng& rng, std::size_t retries = 64);
/// Rejection sampling, then the split projection when a ≅ b ⊕ x.
GroupHom random_epic(const FgGroup& a, const FgGroup& b, Rng& rng, std::size_t retries = 64);
/// Random endomorphism accepted when invertible; falls back to a product of
/// elementary automorphisms.
GroupHom random_automorphism(const FgGroup& a, Rng& rng, std::size_t retries = 64);

/// The complement x with whole ≅ part ⊕ x, when one exists.
std::optional<FgGroup> split_complement(const FgGroup& whole, const FgGroup& part);

struct ShortExactPair {
  GroupHom f;
  GroupHom g;
};

ShortExactPair random_ses(const GenConfig& cfg, Rng& rng);

SesLadder<GroupHom> gen_ladder(const GenConfig& cfg, ShortFiveMode mode, Rng& rng);
NineGrid<GroupHom> gen_nine_grid(const GenConfig& cfg, Rng& rng);

/// Split rows with arbitrary verticals β = ι(α∘ρ + h∘ρ) + ι(γ∘ρ).
SesLadder<GroupHom> split_ladder(const GroupHom& alpha, const GroupHom& gamma, const GroupHom& h);

vecfp::FpSpace random_space(vecfp::Scalar prime, std::size_t max_dim, Rng& rng);
vecfp::FpMap random_map(const vecfp::FpSpace& a, const vecfp::FpSpace& b, Rng& rng);

}  // namespace abelcat::genprop
