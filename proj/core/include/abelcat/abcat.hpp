#pragma once

// Category-generic derived constructions: classification of morphisms, image
// factorization, pullbacks and pushouts, subobject comparison and exactness.
// Nothing here knows about a concrete instance; every result is built from
// the capabilities listed in `AbelianCategory`.

#include <optional>
#include <stdexcept>
#include <string>

#include "abelcat/category.hpp"
#include "abelcat/errors.hpp"

namespace abelcat {

template <AbelianCategory C>
bool is_zero_morphism(const C& cat, const typename C::Morphism& f) {
  return cat.morphism_equal(f, cat.zero_morphism(cat.source(f), cat.target(f)));
}

template <AbelianCategory C>
typename C::Morphism subtract(const C& cat, const typename C::Morphism& f, const typename C::Morphism& g) {
  return cat.add(f, cat.negate(g));
}

/// f monic ⟺ its kernel object is zero.
template <AbelianCategory C>
bool is_monic(const C& cat, const typename C::Morphism& f) {
  return cat.is_zero_object(cat.kernel(f).object);
}

/// f epic ⟺ its cokernel object is zero.
template <AbelianCategory C>
bool is_epic(const C& cat, const typename C::Morphism& f) {
  return cat.is_zero_object(cat.cokernel(f).object);
}

template <AbelianCategory C>
void require_composable(const C& cat, const typename C::Morphism& f, const typename C::Morphism& g,
                        const char* what) {
  if (!cat.object_equal(cat.target(f), cat.source(g))) {
    throw InputError(std::string(what) + ": codomain of " + cat.describe(f) + " is not the domain of " +
                     cat.describe(g));
  }
}

template <class Morphism>
struct MorphismClassification {
  bool monic = false;
  bool epic = false;
  bool iso = false;
  std::optional<Morphism> inverse;
};

template <class Object, class Morphism>
struct ImageFactorization {
  Object image_object;     // I_f
  Morphism image_mono;     // img f = ker(cok f) : I_f → B
  Morphism canonical_epi;  // φ : A → I_f with (img f)∘φ = f
  Object coimage_object;
  Morphism coimage_epi;    // coim f = cok(ker f) : A → Coim f
};

/// img f = ker(cok f), φ the induced map from the kernel universal property,
/// and the dual coimage.
template <AbelianCategory C>
ImageFactorization<typename C::Object, typename C::Morphism> image_factorization(
    const C& cat, const typename C::Morphism& f) {
  auto cok = cat.cokernel(f);
  auto img = cat.kernel(cok.projection);
  auto phi = cat.factor_through_kernel(cok.projection, f);
  auto ker = cat.kernel(f);
  auto coim = cat.cokernel(ker.inclusion);
  return {std::move(img.object), std::move(img.inclusion), std::move(phi), std::move(coim.object),
          std::move(coim.projection)};
}

/// Given h monic with h∘g = f, the unique ψ : I_f → C with h∘ψ = img f (and
/// then ψ∘φ = g).
template <AbelianCategory C>
typename C::Morphism factor_through_image(const C& cat, const typename C::Morphism& f,
                                          const typename C::Morphism& g, const typename C::Morphism& h) {
  if (!cat.object_equal(cat.source(g), cat.source(f)) || !cat.object_equal(cat.target(h), cat.target(f))) {
    throw InputError("factor_through_image: g and h do not frame f");
  }
  require_composable(cat, g, h, "factor_through_image");
  if (!is_monic(cat, h)) throw PreconditionError("factor_through_image: h is not monic");
  if (!cat.morphism_equal(cat.compose(h, g), f)) throw PreconditionError("factor_through_image: h∘g ≠ f");
  auto img = cat.kernel(cat.cokernel(f).projection);
  return cat.factor_through_mono(h, img.inclusion);
}

/// Monic iff ker f = 0, epic iff cok f = 0. For an isomorphism the inverse
/// is assembled from universal properties alone: h : B → I_f from
/// (img f)∘h = id_B, v : I_f → A from f∘v = img f, inverse = v∘h.
template <AbelianCategory C>
MorphismClassification<typename C::Morphism> classify_morphism(const C& cat, const typename C::Morphism& f) {
  MorphismClassification<typename C::Morphism> result;
  result.monic = is_monic(cat, f);
  result.epic = is_epic(cat, f);
  result.iso = result.monic && result.epic;
  if (result.iso) {
    const auto a = cat.source(f);
    const auto b = cat.target(f);
    auto cok = cat.cokernel(f);
    auto h = cat.factor_through_kernel(cok.projection, cat.identity(b));
    auto v = factor_through_image(cat, f, cat.identity(a), f);
    result.inverse = cat.compose(v, h);
  }
  return result;
}

template <class Object, class Morphism>
struct PullbackData {
  Object pb_object;        // A ×_C B = K_ω
  Morphism proj_a;         // π_A = ρ_A∘ker ω
  Morphism proj_b;         // π_B = ρ_B∘ker ω
  Morphism witness_omega;  // ω = φ∘ρ_A − ψ∘ρ_B : A ⊕ B → C
  Morphism omega_kernel;   // ker ω
  DirectSumData<Object, Morphism> sum;
  Morphism phi;
  Morphism psi;
};

/// Pullback of φ : A → C and ψ : B → C as the kernel of φρ_A − ψρ_B.
template <AbelianCategory C>
PullbackData<typename C::Object, typename C::Morphism> pullback(const C& cat, const typename C::Morphism& phi,
                                                                const typename C::Morphism& psi) {
  if (!cat.object_equal(cat.target(phi), cat.target(psi))) {
    throw InputError("pullback: " + cat.describe(phi) + " and " + cat.describe(psi) + " have different codomains");
  }
  auto sum = cat.direct_sum(cat.source(phi), cat.source(psi));
  auto omega = subtract(cat, cat.compose(phi, sum.proj_a), cat.compose(psi, sum.proj_b));
  auto ker = cat.kernel(omega);
  auto pa = cat.compose(sum.proj_a, ker.inclusion);
  auto pb = cat.compose(sum.proj_b, ker.inclusion);
  return {std::move(ker.object), std::move(pa),  std::move(pb), std::move(omega),
          std::move(ker.inclusion), std::move(sum), phi, psi};
}

/// The unique h : D → P with π_A∘h = f and π_B∘h = g.
template <AbelianCategory C>
typename C::Morphism pullback_mediator(const C& cat,
                                       const PullbackData<typename C::Object, typename C::Morphism>& pb,
                                       const typename C::Morphism& f, const typename C::Morphism& g) {
  if (!cat.object_equal(cat.source(f), cat.source(g)) || !cat.object_equal(cat.target(f), cat.source(pb.phi)) ||
      !cat.object_equal(cat.target(g), cat.source(pb.psi))) {
    throw InputError("pullback_mediator: competing square has wrong endpoints");
  }
  if (!cat.morphism_equal(cat.compose(pb.phi, f), cat.compose(pb.psi, g))) {
    throw PreconditionError("pullback_mediator: competing square does not commute");
  }
  auto into_sum = cat.add(cat.compose(pb.sum.inj_a, f), cat.compose(pb.sum.inj_b, g));
  return cat.factor_through_kernel(pb.witness_omega, into_sum);
}

template <class Object, class Morphism>
struct PushoutData {
  Object po_object;       // A ⨿_C B = C_θ
  Morphism inj_a;         // μ_A
  Morphism inj_b;         // μ_B
  Morphism witness;       // θ = ι_A∘φ′ − ι_B∘ψ′ : C → A ⊕ B
  Morphism witness_cokernel;
  DirectSumData<Object, Morphism> sum;
  Morphism phi;
  Morphism psi;
};

/// Pushout of φ′ : C → A and ψ′ : C → B as the cokernel of ι_Aφ′ − ι_Bψ′.
template <AbelianCategory C>
PushoutData<typename C::Object, typename C::Morphism> pushout(const C& cat, const typename C::Morphism& phi,
                                                              const typename C::Morphism& psi) {
  if (!cat.object_equal(cat.source(phi), cat.source(psi))) {
    throw InputError("pushout: " + cat.describe(phi) + " and " + cat.describe(psi) + " have different domains");
  }
  auto sum = cat.direct_sum(cat.target(phi), cat.target(psi));
  auto theta = subtract(cat, cat.compose(sum.inj_a, phi), cat.compose(sum.inj_b, psi));
  auto cok = cat.cokernel(theta);
  auto ma = cat.compose(cok.projection, sum.inj_a);
  auto mb = cat.compose(cok.projection, sum.inj_b);
  return {std::move(cok.object), std::move(ma), std::move(mb), std::move(theta),
          std::move(cok.projection), std::move(sum), phi, psi};
}

/// The unique h : P → D with h∘μ_A = f and h∘μ_B = g.
template <AbelianCategory C>
typename C::Morphism pushout_mediator(const C& cat, const PushoutData<typename C::Object, typename C::Morphism>& po,
                                      const typename C::Morphism& f, const typename C::Morphism& g) {
  if (!cat.object_equal(cat.target(f), cat.target(g)) || !cat.object_equal(cat.source(f), cat.target(po.phi)) ||
      !cat.object_equal(cat.source(g), cat.target(po.psi))) {
    throw InputError("pushout_mediator: competing square has wrong endpoints");
  }
  if (!cat.morphism_equal(cat.compose(f, po.phi), cat.compose(g, po.psi))) {
    throw PreconditionError("pushout_mediator: competing square does not commute");
  }
  auto out_of_sum = cat.add(cat.compose(f, po.sum.proj_a), cat.compose(g, po.sum.proj_b));
  return cat.factor_through_cokernel(po.witness, out_of_sum);
}

/// Monos m, n into the same object name the same subobject iff each factors
/// through the other, i.e. cok(n)∘m = 0 and cok(m)∘n = 0.
template <AbelianCategory C>
bool subobjects_equal(const C& cat, const typename C::Morphism& m, const typename C::Morphism& n) {
  if (!cat.object_equal(cat.target(m), cat.target(n))) {
    throw InputError("subobjects_equal: monos have different codomains");
  }
  if (!is_monic(cat, m) || !is_monic(cat, n)) throw PreconditionError("subobjects_equal: argument is not monic");
  return is_zero_morphism(cat, cat.compose(cat.cokernel(n).projection, m)) &&
         is_zero_morphism(cat, cat.compose(cat.cokernel(m).projection, n));
}

/// Dual of subobjects_equal: epis p, q out of the same object name the same
/// quotient iff p∘ker(q) = 0 and q∘ker(p) = 0.
template <AbelianCategory C>
bool quotients_equal(const C& cat, const typename C::Morphism& p, const typename C::Morphism& q) {
  if (!cat.object_equal(cat.source(p), cat.source(q))) {
    throw InputError("quotients_equal: epis have different domains");
  }
  if (!is_epic(cat, p) || !is_epic(cat, q)) throw PreconditionError("quotients_equal: argument is not epic");
  return is_zero_morphism(cat, cat.compose(p, cat.kernel(q).inclusion)) &&
         is_zero_morphism(cat, cat.compose(q, cat.kernel(p).inclusion));
}

/// Exactness of A → B → C at B read as g∘f = 0 and img f = ker g. The
/// clause form g∘f = 0, (cok f)∘(ker g) = 0 is evaluated too; a disagreement
/// is an instance bug and throws std::logic_error.
template <AbelianCategory C>
bool is_exact_at(const C& cat, const typename C::Morphism& f, const typename C::Morphism& g) {
  require_composable(cat, f, g, "is_exact_at");
  const bool composite_zero = is_zero_morphism(cat, cat.compose(g, f));
  auto cok_f = cat.cokernel(f).projection;
  auto ker_g = cat.kernel(g).inclusion;
  const bool clause_form = composite_zero && is_zero_morphism(cat, cat.compose(cok_f, ker_g));
  const bool image_form = composite_zero && subobjects_equal(cat, cat.kernel(cok_f).inclusion, ker_g);
  if (clause_form != image_form) throw std::logic_error("is_exact_at: exactness forms disagree");
  return image_form;
}

/// The three equivalent readings of "0 → A → B → C → 0 is exact".
struct ExactnessForms {
  bool f_monic = false;
  bool g_epic = false;
  bool composite_zero = false;
  bool cok_ker_zero = false;
  bool clause_form = false;  // f monic, g epic, g∘f = 0, (cok f)∘(ker g) = 0
  bool kernel_cokernel_form = false;  // f ≅ ker g as subobjects, g ≅ cok f as quotients
  bool image_form = false;  // f monic, g epic, img f = ker g

  bool agree() const { return clause_form == kernel_cokernel_form && clause_form == image_form; }
};

template <AbelianCategory C>
ExactnessForms exactness_forms(const C& cat, const typename C::Morphism& f, const typename C::Morphism& g) {
  require_composable(cat, f, g, "exactness_forms");
  ExactnessForms forms;
  forms.f_monic = is_monic(cat, f);
  forms.g_epic = is_epic(cat, g);
  forms.composite_zero = is_zero_morphism(cat, cat.compose(g, f));
  auto cok_f = cat.cokernel(f).projection;
  auto ker_g = cat.kernel(g).inclusion;
  forms.cok_ker_zero = is_zero_morphism(cat, cat.compose(cok_f, ker_g));
  forms.clause_form = forms.f_monic && forms.g_epic && forms.composite_zero && forms.cok_ker_zero;
  if (forms.f_monic && forms.g_epic) {
    forms.kernel_cokernel_form = subobjects_equal(cat, f, ker_g) && quotients_equal(cat, g, cok_f);
    forms.image_form = subobjects_equal(cat, cat.kernel(cok_f).inclusion, ker_g);
  }
  return forms;
}

struct ShortExactResult {
  bool exact = false;
  std::string diagnostic;  // first failing clause, empty when exact
  ExactnessForms forms;
};

/// Short exactness with the first failing clause named. The clause form is
/// cross-checked against the kernel/cokernel and image characterizations.
template <AbelianCategory C>
ShortExactResult is_short_exact(const C& cat, const typename C::Morphism& f, const typename C::Morphism& g) {
  ShortExactResult result;
  result.forms = exactness_forms(cat, f, g);
  if (!result.forms.agree()) throw std::logic_error("is_short_exact: exactness forms disagree");
  const auto& fm = result.forms;
  if (!fm.f_monic) {
    result.diagnostic = "f not monic";
  } else if (!fm.g_epic) {
    result.diagnostic = "g not epic";
  } else if (!fm.composite_zero) {
    result.diagnostic = "g∘f ≠ 0";
  } else if (!fm.cok_ker_zero) {
    result.diagnostic = "(cok f)∘(ker g) ≠ 0";
  }
  result.exact = fm.clause_form;
  return result;
}

}  // namespace abelcat
