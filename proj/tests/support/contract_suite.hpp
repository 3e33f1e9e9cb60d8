#pragma once

// The invariant suite every contract instance must pass, run on one
// morphism at a time. Failures come back as readable strings so that a
// property run can report the first few offenders.

#include <functional>
#include <string>
#include <vector>

#include "abelcat/abcat.hpp"

namespace abelcat::test_support {

template <AbelianCategory C>
struct Draws {
  std::function<typename C::Object()> object;
  std::function<typename C::Morphism(const typename C::Object&, const typename C::Object&)> hom;
};

template <AbelianCategory C>
class ContractSuite {
 public:
  using Object = typename C::Object;
  using Morphism = typename C::Morphism;

  ContractSuite(C cat, Draws<C> draws, std::size_t competitors)
      : cat_(std::move(cat)), draws_(std::move(draws)), competitors_(competitors) {}

  std::vector<std::string> run(const Morphism& f) {
    failures_.clear();
    subject_ = cat_.describe(f);
    kernels(f);
    classification(f);
    universal_kernel(f);
    universal_cokernel(f);
    direct_sums(cat_.source(f), cat_.target(f));
    hom_group(f);
    duality(f);
    return failures_;
  }

 private:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(subject_ + ": " + what);
  }
  bool eq(const Morphism& a, const Morphism& b) const { return cat_.morphism_equal(a, b); }
  Morphism o(const Morphism& g, const Morphism& f) const { return cat_.compose(g, f); }
  Morphism plus(const Morphism& f, const Morphism& g) const { return cat_.add(f, g); }

  void kernels(const Morphism& f) {
    const auto ker = cat_.kernel(f);
    const auto cok = cat_.cokernel(f);
    expect(is_zero_morphism(cat_, o(f, ker.inclusion)), "f∘ker f ≠ 0");
    expect(is_zero_morphism(cat_, o(cok.projection, f)), "(cok f)∘f ≠ 0");
    expect(classify_morphism(cat_, ker.inclusion).monic, "ker f is not monic");
    expect(classify_morphism(cat_, cok.projection).epic, "cok f is not epic");
  }

  void classification(const Morphism& f) {
    const auto cls = classify_morphism(cat_, f);
    expect(cls.monic == cat_.is_zero_object(cat_.kernel(f).object), "monic disagrees with ker f = 0");
    expect(cls.epic == cat_.is_zero_object(cat_.cokernel(f).object), "epic disagrees with cok f = 0");
    expect(cls.iso == (cls.monic && cls.epic), "iso is not monic and epic");
    if (cls.monic) {
      const auto img = cat_.kernel(cat_.cokernel(f).projection).inclusion;
      expect(subobjects_equal(cat_, f, img), "mono is not the kernel of its cokernel");
    }
    if (cls.epic) {
      const auto coim = cat_.cokernel(cat_.kernel(f).inclusion).projection;
      expect(quotients_equal(cat_, f, coim), "epi is not the cokernel of its kernel");
    }
    if (cls.iso) {
      expect(cls.inverse.has_value(), "iso without inverse");
      if (cls.inverse) {
        expect(eq(o(f, *cls.inverse), cat_.identity(cat_.target(f))), "f∘f⁻¹ ≠ id");
        expect(eq(o(*cls.inverse, f), cat_.identity(cat_.source(f))), "f⁻¹∘f ≠ id");
      }
    } else {
      expect(!cls.inverse.has_value(), "inverse reported for a non-iso");
    }
    const auto image = image_factorization(cat_, f);
    expect(eq(o(image.image_mono, image.canonical_epi), f), "img f∘φ ≠ f");
    expect(is_monic(cat_, image.image_mono), "img f is not monic");
    expect(is_epic(cat_, image.canonical_epi), "φ is not epic");
  }

  void universal_kernel(const Morphism& f) {
    const auto ker = cat_.kernel(f);
    for (std::size_t i = 0; i < competitors_; ++i) {
      const auto d = draws_.object();
      const auto u = draws_.hom(d, ker.object);
      const auto h = cat_.factor_through_kernel(f, o(ker.inclusion, u));
      expect(eq(h, u), "kernel mediator is not unique");
    }
  }

  void universal_cokernel(const Morphism& f) {
    const auto cok = cat_.cokernel(f);
    for (std::size_t i = 0; i < competitors_; ++i) {
      const auto d = draws_.object();
      const auto v = draws_.hom(cok.object, d);
      const auto h = cat_.factor_through_cokernel(f, o(v, cok.projection));
      expect(eq(h, v), "cokernel mediator is not unique");
    }
  }

  void direct_sums(const Object& a, const Object& b) {
    const auto s = cat_.direct_sum(a, b);
    expect(eq(o(s.proj_a, s.inj_a), cat_.identity(a)), "ρ_A∘ι_A ≠ id");
    expect(eq(o(s.proj_b, s.inj_b), cat_.identity(b)), "ρ_B∘ι_B ≠ id");
    expect(is_zero_morphism(cat_, o(s.proj_a, s.inj_b)), "ρ_A∘ι_B ≠ 0");
    expect(is_zero_morphism(cat_, o(s.proj_b, s.inj_a)), "ρ_B∘ι_A ≠ 0");
    expect(eq(plus(o(s.inj_a, s.proj_a), o(s.inj_b, s.proj_b)), cat_.identity(s.sum_object)),
           "ι_A∘ρ_A + ι_B∘ρ_B ≠ id");
    for (std::size_t i = 0; i < competitors_; ++i) {
      const auto d = draws_.object();
      // Product: the mediator of (φ, ψ) out of D.
      const auto phi = draws_.hom(d, a);
      const auto psi = draws_.hom(d, b);
      const auto h = plus(o(s.inj_a, phi), o(s.inj_b, psi));
      expect(eq(o(s.proj_a, h), phi) && eq(o(s.proj_b, h), psi), "product mediator misses a leg");
      const auto u = plus(h, draws_.hom(d, s.sum_object));
      if (eq(o(s.proj_a, u), phi) && eq(o(s.proj_b, u), psi)) expect(eq(u, h), "product mediator is not unique");
      // Coproduct: the mediator of (φ′, ψ′) into D.
      const auto phi2 = draws_.hom(a, d);
      const auto psi2 = draws_.hom(b, d);
      const auto k = plus(o(phi2, s.proj_a), o(psi2, s.proj_b));
      expect(eq(o(k, s.inj_a), phi2) && eq(o(k, s.inj_b), psi2), "coproduct mediator misses a leg");
      const auto w = plus(k, draws_.hom(s.sum_object, d));
      if (eq(o(w, s.inj_a), phi2) && eq(o(w, s.inj_b), psi2)) expect(eq(w, k), "coproduct mediator is not unique");
    }
  }

  void hom_group(const Morphism& f) {
    const auto a = cat_.source(f);
    const auto b = cat_.target(f);
    const auto g = draws_.hom(a, b);
    const auto h = draws_.hom(a, b);
    const auto zero = cat_.zero_morphism(a, b);
    expect(eq(plus(plus(f, g), h), plus(f, plus(g, h))), "addition is not associative");
    expect(eq(plus(f, g), plus(g, f)), "addition is not commutative");
    expect(eq(plus(f, zero), f), "f + 0 ≠ f");
    expect(is_zero_morphism(cat_, plus(f, cat_.negate(f))), "f + (−f) ≠ 0");
    const auto e = draws_.object();
    const auto post = draws_.hom(b, e);
    const auto pre = draws_.hom(e, a);
    expect(eq(o(post, plus(f, g)), plus(o(post, f), o(post, g))), "left distributivity fails");
    expect(eq(o(plus(f, g), pre), plus(o(f, pre), o(g, pre))), "right distributivity fails");
    expect(eq(o(o(post, f), pre), o(post, o(f, pre))), "composition is not associative");
    expect(eq(o(f, cat_.identity(a)), f) && eq(o(cat_.identity(b), f), f), "identity law fails");
  }

  void duality(const Morphism& f) {
    const auto op = opposite_instance(cat_);
    const auto here = classify_morphism(cat_, f);
    const auto there = classify_morphism(op, f);
    expect(there.monic == here.epic && there.epic == here.monic, "opposite does not swap monic and epic");
    const auto back = classify_morphism(opposite_instance(op), f);
    expect(back.monic == here.monic && back.epic == here.epic, "double opposite changes verdicts");
  }

  C cat_;
  Draws<C> draws_;
  std::size_t competitors_;
  std::string subject_;
  std::vector<std::string> failures_;
};

}  // namespace abelcat::test_support
