#pragma once

#include <complex>
#include <vector>

#include "normcoset/errors.hpp"
#include "normcoset/finite.hpp"

namespace normcoset {

/// Element of the complex group algebra of a finite group, as a dense
/// coefficient vector indexed by group element.
struct AlgebraElement {
  std::vector<std::complex<double>> coeff;

  std::size_t size() const noexcept { return coeff.size(); }
};

inline AlgebraElement algebra_zero(const FiniteView& g) {
  return AlgebraElement{std::vector<std::complex<double>>(g.order())};
}

inline AlgebraElement delta(const FiniteView& g, std::uint32_t x) {
  AlgebraElement a = algebra_zero(g);
  a.coeff[x] = 1.0;
  return a;
}

inline AlgebraElement algebra_one(const FiniteView& g) {
  return delta(g, g.identity());
}

namespace detail {

inline void require_size(const FiniteView& g, const AlgebraElement& a) {
  if (a.size() != g.order()) {
    throw ValidationError("algebra element size does not match group order");
  }
}

}  // namespace detail

/// Convolution product: (a·b)(g) = sum_h a(h) b(h^-1 g).
inline AlgebraElement convolve(const FiniteView& g, const AlgebraElement& a,
                               const AlgebraElement& b) {
  detail::require_size(g, a);
  detail::require_size(g, b);
  AlgebraElement out = algebra_zero(g);
  const std::uint32_t n = static_cast<std::uint32_t>(g.order());
  for (std::uint32_t h = 0; h < n; ++h) {
    if (a.coeff[h] == std::complex<double>{}) continue;
    for (std::uint32_t k = 0; k < n; ++k) {
      if (b.coeff[k] == std::complex<double>{}) continue;
      out.coeff[g.mul(h, k)] += a.coeff[h] * b.coeff[k];
    }
  }
  return out;
}

/// Star operation a*(g) = conj(a(g^-1)); an involutive anti-homomorphism.
inline AlgebraElement star(const FiniteView& g, const AlgebraElement& a) {
  detail::require_size(g, a);
  AlgebraElement out = algebra_zero(g);
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    out.coeff[g.inv(x)] = std::conj(a.coeff[x]);
  }
  return out;
}

/// The canonical semifinite trace restricted to the group algebra:
/// Tr(a) = |G| a(e), so Tr(u_g) = 0 for g != e and Tr(1) = |G|.
inline std::complex<double> trace(const FiniteView& g,
                                  const AlgebraElement& a) {
  detail::require_size(g, a);
  return double(g.order()) * a.coeff[g.identity()];
}

inline AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out = a;
  for (std::size_t i = 0; i < out.coeff.size(); ++i) out.coeff[i] += b.coeff[i];
  return out;
}

inline AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out = a;
  for (std::size_t i = 0; i < out.coeff.size(); ++i) out.coeff[i] -= b.coeff[i];
  return out;
}

inline AlgebraElement scale(const AlgebraElement& a, std::complex<double> c) {
  AlgebraElement out = a;
  for (auto& v : out.coeff) v *= c;
  return out;
}

inline double max_norm(const AlgebraElement& a) {
  double m = 0.0;
  for (const auto& v : a.coeff) m = std::max(m, std::abs(v));
  return m;
}

/// The averaging projection (1/|G|) sum_g u_g; it has trace 1 and absorbs
/// every group translate.
inline AlgebraElement averaging_projection(const FiniteView& g) {
  AlgebraElement a = algebra_zero(g);
  const double w = 1.0 / double(g.order());
  for (auto& v : a.coeff) v = w;
  return a;
}

}  // namespace normcoset
