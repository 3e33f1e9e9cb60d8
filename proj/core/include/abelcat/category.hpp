#pragma once

// The abelian-category contract. A concrete instance is any copyable value
// type satisfying `AbelianCategory`; everything in abcat.hpp is written
// against this contract only.

#include <concepts>
#include <string>
#include <utility>

namespace abelcat {

template <class Object, class Morphism>
struct DirectSumData {
  Object sum_object;
  Morphism inj_a;   // ι_A
  Morphism inj_b;   // ι_B
  Morphism proj_a;  // ρ_A
  Morphism proj_b;  // ρ_B
};

template <class Object, class Morphism>
struct KernelData {
  Object object;       // K_f
  Morphism inclusion;  // ker f : K_f → A
};

template <class Object, class Morphism>
struct CokernelData {
  Object object;        // C_f
  Morphism projection;  // cok f : B → C_f
};

// clang-format off
template <class C>
concept AbelianCategory =
    std::copy_constructible<C> &&
    requires(const C& cat, const typename C::Object& a, const typename C::Morphism& f) {
      typename C::Object;
      typename C::Morphism;
      { cat.source(f) } -> std::convertible_to<typename C::Object>;
      { cat.target(f) } -> std::convertible_to<typename C::Object>;
      { cat.object_equal(a, a) } -> std::same_as<bool>;
      { cat.is_zero_object(a) } -> std::same_as<bool>;
      { cat.zero_object() } -> std::convertible_to<typename C::Object>;
      { cat.identity(a) } -> std::same_as<typename C::Morphism>;
      // compose(g, f) is g∘f.
      { cat.compose(f, f) } -> std::same_as<typename C::Morphism>;
      { cat.add(f, f) } -> std::same_as<typename C::Morphism>;
      { cat.negate(f) } -> std::same_as<typename C::Morphism>;
      { cat.zero_morphism(a, a) } -> std::same_as<typename C::Morphism>;
      { cat.morphism_equal(f, f) } -> std::same_as<bool>;
      { cat.direct_sum(a, a) } -> std::same_as<DirectSumData<typename C::Object, typename C::Morphism>>;
      { cat.kernel(f) } -> std::same_as<KernelData<typename C::Object, typename C::Morphism>>;
      { cat.cokernel(f) } -> std::same_as<CokernelData<typename C::Object, typename C::Morphism>>;
      // The unique h with (ker f)∘h = g, given f∘g = 0.
      { cat.factor_through_kernel(f, f) } -> std::same_as<typename C::Morphism>;
      // The unique h with h∘(cok f) = g, given g∘f = 0.
      { cat.factor_through_cokernel(f, f) } -> std::same_as<typename C::Morphism>;
      // Every mono is a kernel: the unique y with m∘y = x, given m monic and
      // (cok m)∘x = 0.
      { cat.factor_through_mono(f, f) } -> std::same_as<typename C::Morphism>;
      // Every epi is a cokernel: the unique y with y∘e = x, given e epic and
      // x∘(ker e) = 0.
      { cat.factor_through_epi(f, f) } -> std::same_as<typename C::Morphism>;
      { cat.describe(a) } -> std::convertible_to<std::string>;
      { cat.describe(f) } -> std::convertible_to<std::string>;
    };
// clang-format on

/// C^op: same objects, arrows reversed. Composition flips, kernels and
/// cokernels trade places, and so do injections and projections.
template <AbelianCategory C>
class Opposite {
 public:
  using Object = typename C::Object;
  using Morphism = typename C::Morphism;
  using Base = C;

  explicit Opposite(C base) : base_(std::move(base)) {}

  const C& base() const { return base_; }

  Object source(const Morphism& f) const { return base_.target(f); }
  Object target(const Morphism& f) const { return base_.source(f); }
  bool object_equal(const Object& a, const Object& b) const { return base_.object_equal(a, b); }
  bool is_zero_object(const Object& a) const { return base_.is_zero_object(a); }
  Object zero_object() const { return base_.zero_object(); }
  Morphism identity(const Object& a) const { return base_.identity(a); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return base_.compose(f, g); }
  Morphism add(const Morphism& f, const Morphism& g) const { return base_.add(f, g); }
  Morphism negate(const Morphism& f) const { return base_.negate(f); }
  Morphism zero_morphism(const Object& a, const Object& b) const { return base_.zero_morphism(b, a); }
  bool morphism_equal(const Morphism& f, const Morphism& g) const { return base_.morphism_equal(f, g); }

  DirectSumData<Object, Morphism> direct_sum(const Object& a, const Object& b) const {
    auto s = base_.direct_sum(a, b);
    return {std::move(s.sum_object), std::move(s.proj_a), std::move(s.proj_b), std::move(s.inj_a),
            std::move(s.inj_b)};
  }
  KernelData<Object, Morphism> kernel(const Morphism& f) const {
    auto c = base_.cokernel(f);
    return {std::move(c.object), std::move(c.projection)};
  }
  CokernelData<Object, Morphism> cokernel(const Morphism& f) const {
    auto k = base_.kernel(f);
    return {std::move(k.object), std::move(k.inclusion)};
  }
  Morphism factor_through_kernel(const Morphism& f, const Morphism& g) const {
    return base_.factor_through_cokernel(f, g);
  }
  Morphism factor_through_cokernel(const Morphism& f, const Morphism& g) const {
    return base_.factor_through_kernel(f, g);
  }
  Morphism factor_through_mono(const Morphism& m, const Morphism& x) const {
    return base_.factor_through_epi(m, x);
  }
  Morphism factor_through_epi(const Morphism& e, const Morphism& x) const {
    return base_.factor_through_mono(e, x);
  }

  std::string describe(const Object& a) const { return base_.describe(a); }
  std::string describe(const Morphism& f) const { return "op(" + base_.describe(f) + ")"; }

 private:
  C base_;
};

template <AbelianCategory C>
Opposite<C> opposite_instance(const C& cat) {
  return Opposite<C>(cat);
}

}  // namespace abelcat
