#pragma once

#include <complex>
#include <map>
#include <vector>

#include "verlinde/center.hpp"
#include "verlinde/root_datum.hpp"
#include "verlinde/weyl.hpp"

namespace verlinde {

using Complex = std::complex<double>;

struct LevelWeight {
  std::vector<long long> labels;

  bool operator==(const LevelWeight&) const = default;
  bool operator<(const LevelWeight& o) const { return labels < o.labels; }
};

// All dominant integral weights of level <= k, ordered lexicographically by
// labels, with their alcove points zeta = (mu + rho) / (k + h_check) on the
// coweight side. Tables and matrices here are immutable once built, and all
// sums are accumulated in a fixed order, so repeated runs are bit-identical.
class LevelWeightTable {
 public:
  long long k = 0;
  std::vector<LevelWeight> weights;
  std::vector<RatVec> weight_vectors;  // t*-side vectors
  std::vector<RatVec> zetas;           // t-side alcove points

  long long size() const { return static_cast<long long>(weights.size()); }
  int index_of(const LevelWeight& w) const;  // -1 when absent

 private:
  friend LevelWeightTable level_weights(const RootDatum& rd, long long k);
  std::map<std::vector<long long>, int> index_;
};

LevelWeightTable level_weights(const RootDatum& rd, long long k);

// J(exp 2 pi i zeta) = sum_w sign(w) e^{2 pi i <w rho, zeta>}.
Complex weyl_denominator(const RootDatum& rd, const WeylGroup& W,
                         const RatVec& zeta);

// Product form over positive roots; an independent route to the same value.
Complex weyl_denominator_product(const RootDatum& rd, const RatVec& zeta);

// Exact regularity test: zeta is on an affine wall iff <alpha, zeta> is an
// integer for some root alpha.
bool is_regular(const RootDatum& rd, const RatVec& zeta);

// Weyl character formula at exp(2 pi i zeta); requires zeta regular.
Complex character(const RootDatum& rd, const WeylGroup& W, const RatVec& mu,
                  const RatVec& zeta);

struct SMatrix {
  long long k = 0;
  int n = 0;
  std::vector<Complex> entries;  // row-major, indexed by the weight table
  Int torus_order = 0;           // #T_{k+h_check}
  double max_unitarity_defect = 0;
  double max_symmetry_defect = 0;

  Complex operator()(int i, int j) const {
    return entries[static_cast<size_t>(i) * n + j];
  }

  // Debug view with the global sign flipped so the vacuum row is positive.
  // Every downstream formula is invariant under this flip.
  SMatrix sign_normalized() const;
};

SMatrix s_matrix(const RootDatum& rd, const WeylGroup& W,
                 const LevelWeightTable& table);

struct FusionVector {
  std::vector<long long> coefficients;  // over the weight table
};

// Product in the fusion ring: evaluate at the alcove points, multiply, and
// change basis back through S; coefficients must round to integers within
// tol or a residual_error is thrown.
FusionVector fusion_product(const SMatrix& S, const std::vector<int>& dual_index,
                            const FusionVector& x, const FusionVector& y,
                            double tol = 1e-6);

// Index map mu -> index of -w0(mu) in the table.
std::vector<int> dual_index_map(const RootDatum& rd, const LevelWeightTable& table);

// The center action c .k mu = w_c(mu - k zeta_{c^{-1}}) on the level-k
// weights, tabulated as one permutation per element of Z.
class CenterActionOnWeights {
 public:
  static CenterActionOnWeights build(const RootDatum& rd, const WeylGroup& W,
                                     const CenterSubgroup& Z,
                                     const LevelWeightTable& table);

  int apply(int elem_idx, int weight_idx) const {
    return perms_[elem_idx][weight_idx];
  }
  const std::vector<int>& permutation(int elem_idx) const {
    return perms_[elem_idx];
  }
  // Weights fixed by every listed element.
  std::vector<int> common_fixed(const std::vector<int>& elems) const;
  bool has_fixed_point(int elem_idx) const;

 private:
  std::vector<std::vector<int>> perms_;
};

LevelWeight center_act_on_Pk(const RootDatum& rd, const WeylElement& w_c,
                             const RatVec& zeta_c_inv, long long k,
                             const LevelWeight& lam);

// chi_mu at the principal element, by two routes that must agree: numeric
// evaluation (rounded with a residual guard) and the alternating-sum
// criterion w(mu+rho) - rho in h*Q. Restricted to simply laced types.
int epsilon(const RootDatum& rd, const WeylGroup& W, const RatVec& mu,
            double tol = 1e-6);

FusionVector tau_natural(const RootDatum& rd, const WeylGroup& W,
                         const LevelWeightTable& table, double tol = 1e-6);

}  // namespace verlinde
