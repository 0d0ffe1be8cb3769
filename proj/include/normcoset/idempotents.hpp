#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "normcoset/group_algebra.hpp"

namespace normcoset {

struct ConjugacyClasses {
  std::vector<std::vector<std::uint32_t>> classes;  // sorted member lists
  std::vector<std::uint32_t> class_of;
  std::vector<std::uint32_t> inverse_class;
  std::uint32_t identity_class = 0;

  std::size_t count() const noexcept { return classes.size(); }
};

/// Orbit partition under conjugation. Classes are indexed by their smallest
/// member, in increasing order, so the numbering is canonical.
inline ConjugacyClasses conjugacy_classes(const FiniteView& g) {
  const auto n = static_cast<std::uint32_t>(g.order());
  ConjugacyClasses out;
  out.class_of.assign(n, n);
  std::vector<std::uint32_t> gens = g.generators();
  for (std::uint32_t x = 0; x < n; ++x) {
    if (out.class_of[x] != n) continue;
    const auto cls = static_cast<std::uint32_t>(out.classes.size());
    std::vector<std::uint32_t> orbit{x};
    out.class_of[x] = cls;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (auto s : gens) {
        std::uint32_t y = g.mul(g.mul(s, orbit[head]), g.inv(s));
        if (out.class_of[y] == n) {
          out.class_of[y] = cls;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.classes.push_back(std::move(orbit));
  }
  out.identity_class = out.class_of[g.identity()];
  out.inverse_class.resize(out.classes.size());
  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    out.inverse_class[c] = out.class_of[g.inv(out.classes[c][0])];
  }
  return out;
}

/// Multiplication data of the center of the group algebra in the class-sum
/// basis: K_j K_l = sum_m a(j,l,m) K_m. Computed with the representative
/// trick a(j,l,m) = #{u in C_j : u^-1 x_m in C_l} in O(k |G|).
struct CenterStructure {
  std::size_t k = 0;
  std::vector<double> a;  // a[(j*k + l)*k + m]
  std::vector<double> class_size;

  double at(std::size_t j, std::size_t l, std::size_t m) const {
    return a[(j * k + l) * k + m];
  }
};

inline CenterStructure center_structure(const FiniteView& g,
                                        const ConjugacyClasses& cc) {
  CenterStructure s;
  s.k = cc.count();
  s.a.assign(s.k * s.k * s.k, 0.0);
  s.class_size.resize(s.k);
  for (std::size_t c = 0; c < s.k; ++c) {
    s.class_size[c] = double(cc.classes[c].size());
  }
  for (std::size_t m = 0; m < s.k; ++m) {
    const std::uint32_t xm = cc.classes[m][0];
    for (std::uint32_t u = 0; u < g.order(); ++u) {
      const std::uint32_t j = cc.class_of[u];
      const std::uint32_t l = cc.class_of[g.mul(g.inv(u), xm)];
      s.a[(std::size_t(j) * s.k + l) * s.k + m] += 1.0;
    }
  }
  return s;
}

/// Product of two central elements given by class-sum coordinates.
inline std::vector<std::complex<double>> central_convolve(
    const CenterStructure& s, const std::vector<std::complex<double>>& za,
    const std::vector<std::complex<double>>& zb) {
  std::vector<std::complex<double>> out(s.k);
  for (std::size_t j = 0; j < s.k; ++j) {
    if (za[j] == std::complex<double>{}) continue;
    for (std::size_t l = 0; l < s.k; ++l) {
      if (zb[l] == std::complex<double>{}) continue;
      const std::complex<double> w = za[j] * zb[l];
      for (std::size_t m = 0; m < s.k; ++m) {
        out[m] += w * s.at(j, l, m);
      }
    }
  }
  return out;
}

namespace detail {

using CMatrix = std::vector<std::vector<std::complex<double>>>;

inline CMatrix cidentity(std::size_t n) {
  CMatrix m(n, std::vector<std::complex<double>>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

/// Cyclic Jacobi for Hermitian matrices: diagonalizes a in place and
/// accumulates the unitary into v (columns are eigenvectors). Adequate for
/// the small center matrices this library needs.
inline void jacobi_hermitian(CMatrix& a, CMatrix& v) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a[p][q]);
    }
    if (off < 1e-26) return;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = std::abs(a[p][q]);
        if (apq < 1e-300) continue;
        const std::complex<double> u = a[p][q] / apq;  // phase
        const double app = a[p][p].real();
        const double aqq = a[q][q].real();
        const double tau = (aqq - app) / (2.0 * apq);
        const double t =
            (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const std::complex<double> su = s * u;

        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const std::complex<double> aip = a[i][p];
          const std::complex<double> aiq = a[i][q];
          a[i][p] = c * aip - std::conj(su) * aiq;
          a[i][q] = su * aip + c * aiq;
          a[p][i] = std::conj(a[i][p]);
          a[q][i] = std::conj(a[i][q]);
        }
        const double shift = 2.0 * c * s * apq;
        a[p][p] = c * c * app + s * s * aqq - shift;
        a[q][q] = s * s * app + c * c * aqq + shift;
        a[p][q] = 0.0;
        a[q][p] = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          const std::complex<double> vip = v[i][p];
          const std::complex<double> viq = v[i][q];
          v[i][p] = c * vip - std::conj(su) * viq;
          v[i][q] = su * vip + c * viq;
        }
      }
    }
  }
}

}  // namespace detail

/// A verified minimal central idempotent of the group algebra, stored by
/// class-sum coordinates (its group coefficients are constant on classes).
/// The trace equals d^2 for the dimension d of the matching irreducible
/// representation.
struct CentralIdempotent {
  std::vector<std::complex<double>> class_coeff;
  double trace = 0.0;
  int dimension = 0;
};

struct IdempotentOptions {
  std::uint64_t seed = 1;
  double gap = 1e-7;       // eigenvalue grouping threshold
  double idem_tol = 1e-9;  // idempotency / orthogonality / star residuals
  double dim_tol = 1e-6;   // |trace - d^2| rounding tolerance
  int max_retries = 5;
};

struct CentralDecomposition {
  ConjugacyClasses classes;
  CenterStructure structure;
  std::vector<CentralIdempotent> idempotents;
};

inline AlgebraElement expand(const FiniteView& g, const ConjugacyClasses& cc,
                             const CentralIdempotent& e) {
  AlgebraElement a = algebra_zero(g);
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    a.coeff[x] = e.class_coeff[cc.class_of[x]];
  }
  return a;
}

namespace detail {

/// One splitting attempt. The first operator is multiplication by a random
/// self-adjoint central element; because that can never separate an
/// irreducible representation from its complex conjugate (their central
/// characters agree on every self-adjoint element), the remaining blocks are
/// refined by the Hermitian and skew parts of the individual class-sum
/// operators, which together separate everything.
inline std::vector<std::vector<std::complex<double>>> split_center(
    const CenterStructure& s, const ConjugacyClasses& cc,
    const IdempotentOptions& opt, std::uint64_t seed) {
  const std::size_t k = s.k;
  // Multiplication matrix of K_j on the center in the orthonormal basis
  // K_l / sqrt(|C_l|).
  auto mult_matrix = [&](std::size_t j) {
    CMatrix m(k, std::vector<std::complex<double>>(k));
    for (std::size_t l = 0; l < k; ++l) {
      for (std::size_t row = 0; row < k; ++row) {
        m[row][l] = s.at(j, l, row) *
                    std::sqrt(s.class_size[row] / s.class_size[l]);
      }
    }
    return m;
  };

  std::vector<CMatrix> ops;
  {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> r(k, 0.0);
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t jstar = cc.inverse_class[j];
      if (j <= jstar) {
        double val = dist(rng);
        r[j] = val;
        r[jstar] = val;  // self-adjointness
      }
    }
    CMatrix rand_op(k, std::vector<std::complex<double>>(k));
    for (std::size_t j = 0; j < k; ++j) {
      CMatrix mj = mult_matrix(j);
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) rand_op[a][b] += r[j] * mj[a][b];
      }
    }
    // Symmetrize away rounding noise.
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a; b < k; ++b) {
        auto avg = 0.5 * (rand_op[a][b] + std::conj(rand_op[b][a]));
        rand_op[a][b] = avg;
        rand_op[b][a] = std::conj(avg);
      }
    }
    ops.push_back(std::move(rand_op));
  }
  for (std::size_t j = 0; j < k; ++j) {
    CMatrix mj = mult_matrix(j);
    CMatrix herm(k, std::vector<std::complex<double>>(k));
    CMatrix skew(k, std::vector<std::complex<double>>(k));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        herm[a][b] = 0.5 * (mj[a][b] + mj[b][a]);
        skew[a][b] = std::complex<double>(0.0, -0.5) * (mj[a][b] - mj[b][a]);
      }
    }
    ops.push_back(std::move(herm));
    ops.push_back(std::move(skew));
  }

  CMatrix basis = cidentity(k);  // columns: current orthonormal basis
  std::vector<std::pair<std::size_t, std::size_t>> blocks{{0, k}};

  for (const auto& op : ops) {
    bool all_single = true;
    for (const auto& b : blocks) all_single = all_single && b.second == 1;
    if (all_single) break;

    std::vector<std::pair<std::size_t, std::size_t>> new_blocks;
    for (const auto& [begin, len] : blocks) {
      if (len == 1) {
        new_blocks.emplace_back(begin, len);
        continue;
      }
      // Project the operator onto the block: (basis^H op basis) restricted.
      CMatrix proj(len, std::vector<std::complex<double>>(len));
      for (std::size_t a = 0; a < len; ++a) {
        for (std::size_t b = 0; b < len; ++b) {
          std::complex<double> sum = 0.0;
          for (std::size_t r = 0; r < k; ++r) {
            std::complex<double> tmp = 0.0;
            for (std::size_t c = 0; c < k; ++c) {
              tmp += op[r][c] * basis[c][begin + b];
            }
            sum += std::conj(basis[r][begin + a]) * tmp;
          }
          proj[a][b] = sum;
        }
      }
      CMatrix vecs = cidentity(len);
      jacobi_hermitian(proj, vecs);

      std::vector<double> eig(len);
      for (std::size_t a = 0; a < len; ++a) eig[a] = proj[a][a].real();
      std::vector<std::size_t> order(len);
      for (std::size_t a = 0; a < len; ++a) order[a] = a;
      std::sort(order.begin(), order.end(),
                [&](std::size_t x, std::size_t y) { return eig[x] < eig[y]; });

      // Rotate the block columns to the sorted eigenvectors.
      CMatrix rotated(k, std::vector<std::complex<double>>(len));
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t a = 0; a < len; ++a) {
          std::complex<double> sum = 0.0;
          for (std::size_t b = 0; b < len; ++b) {
            sum += basis[r][begin + b] * vecs[b][order[a]];
          }
          rotated[r][a] = sum;
        }
      }
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t a = 0; a < len; ++a) {
          basis[r][begin + a] = rotated[r][a];
        }
      }

      // Split by eigenvalue gaps.
      std::size_t run_begin = 0;
      for (std::size_t a = 1; a <= len; ++a) {
        if (a == len || eig[order[a]] - eig[order[a - 1]] > opt.gap) {
          new_blocks.emplace_back(begin + run_begin, a - run_begin);
          run_begin = a;
        }
      }
    }
    blocks = std::move(new_blocks);
  }

  for (const auto& b : blocks) {
    if (b.second != 1) {
      return {};  // splitting failed; caller retries with a new seed
    }
  }

  // Convert each basis column to class-sum coordinates.
  std::vector<std::vector<std::complex<double>>> out;
  out.reserve(k);
  for (std::size_t col = 0; col < k; ++col) {
    std::vector<std::complex<double>> z(k);
    for (std::size_t l = 0; l < k; ++l) {
      z[l] = basis[l][col] / std::sqrt(s.class_size[l]);
    }
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace detail

/// Computes the complete family of minimal central idempotents of the group
/// algebra: pairwise orthogonal, self-adjoint, summing to 1, one per
/// irreducible representation, with Tr(e) = d^2. Throws after max_retries
/// reseeded attempts if the numerical splitting or the integer-dimension
/// rounding fails.
inline CentralDecomposition minimal_central_idempotents(
    const FiniteView& g, IdempotentOptions opt = {}) {
  CentralDecomposition out;
  out.classes = conjugacy_classes(g);
  out.structure = center_structure(g, out.classes);
  const CenterStructure& s = out.structure;
  const std::size_t k = s.k;
  const double n = double(g.order());

  std::string failure;
  for (int attempt = 0; attempt <= opt.max_retries; ++attempt) {
    failure.clear();
    auto vectors =
        detail::split_center(s, out.classes, opt, opt.seed + attempt);
    if (vectors.empty()) {
      failure = "eigenvalue splitting left a block unresolved";
      continue;
    }

    std::vector<CentralIdempotent> idems;
    for (auto& z : vectors) {
      // z spans C e for a minimal central idempotent e; rescale via z z = c z.
      auto zz = central_convolve(s, z, z);
      std::size_t best = 0;
      for (std::size_t l = 1; l < k; ++l) {
        if (std::abs(z[l]) > std::abs(z[best])) best = l;
      }
      const std::complex<double> c = zz[best] / z[best];
      if (std::abs(c) < 1e-12) {
        failure = "degenerate eigenvector scaling";
        break;
      }
      CentralIdempotent e;
      e.class_coeff.resize(k);
      for (std::size_t l = 0; l < k; ++l) e.class_coeff[l] = z[l] / c;

      // Verify e e = e and e* = e in class coordinates; the max over class
      // coefficients is exactly the max-norm over group coefficients.
      auto ee = central_convolve(s, e.class_coeff, e.class_coeff);
      double residual = 0.0;
      for (std::size_t l = 0; l < k; ++l) {
        residual = std::max(residual, std::abs(ee[l] - e.class_coeff[l]));
        residual = std::max(
            residual, std::abs(std::conj(e.class_coeff[out.classes
                                                            .inverse_class[l]]) -
                               e.class_coeff[l]));
      }
      if (residual > opt.idem_tol) {
        failure = "idempotency residual above tolerance";
        break;
      }

      const std::complex<double> tr = n * e.class_coeff[out.classes.identity_class];
      if (std::abs(tr.imag()) > opt.dim_tol) {
        failure = "nonreal trace";
        break;
      }
      e.trace = tr.real();
      const double d = std::sqrt(std::max(e.trace, 0.0));
      e.dimension = int(std::llround(d));
      if (e.dimension < 1 ||
          std::abs(e.trace - double(e.dimension) * e.dimension) > opt.dim_tol) {
        failure = "trace does not round to a square integer";
        break;
      }
      idems.push_back(std::move(e));
    }
    if (!failure.empty()) continue;

    // Family-level checks: completeness, orthogonality, dimension count.
    if (idems.size() != k) {
      failure = "wrong number of idempotents";
      continue;
    }
    std::vector<std::complex<double>> total(k);
    long long dim_sq_sum = 0;
    for (const auto& e : idems) {
      for (std::size_t l = 0; l < k; ++l) total[l] += e.class_coeff[l];
      dim_sq_sum += (long long)(e.dimension) * e.dimension;
    }
    total[out.classes.identity_class] -= 1.0;
    double completeness = 0.0;
    for (const auto& v : total) completeness = std::max(completeness, std::abs(v));
    if (completeness > opt.idem_tol || dim_sq_sum != (long long)g.order()) {
      failure = "idempotents do not resolve the identity";
      continue;
    }
    double ortho = 0.0;
    for (std::size_t i = 0; i < idems.size(); ++i) {
      for (std::size_t j = i + 1; j < idems.size(); ++j) {
        auto p = central_convolve(s, idems[i].class_coeff, idems[j].class_coeff);
        for (const auto& v : p) ortho = std::max(ortho, std::abs(v));
      }
    }
    if (ortho > opt.idem_tol) {
      failure = "orthogonality residual above tolerance";
      continue;
    }

    std::sort(idems.begin(), idems.end(),
              [](const CentralIdempotent& a, const CentralIdempotent& b) {
                if (a.trace != b.trace) return a.trace < b.trace;
                for (std::size_t l = 0; l < a.class_coeff.size(); ++l) {
                  const auto &x = a.class_coeff[l], &y = b.class_coeff[l];
                  if (x.real() != y.real()) return x.real() < y.real();
                  if (x.imag() != y.imag()) return x.imag() < y.imag();
                }
                return false;
              });
    out.idempotents = std::move(idems);
    return out;
  }
  throw Error("central idempotent computation failed: " + failure);
}

}  // namespace normcoset
