#pragma once

#include <string>
#include <vector>

#include "verlinde/linalg.hpp"

namespace verlinde {

enum class Family { A, B, C, D, E, F, G };

struct LieType {
  Family family;
  int rank;

  std::string name() const;
  static LieType parse(const std::string& s);  // "A3", "D4", ...
  bool operator==(const LieType&) const = default;
};

// Exact root-system data for one simple type, realized in the standard
// orthonormal ambient coordinates (A_l inside the sum-zero hyperplane of
// R^{l+1}; B/C/D in R^l; E inside R^8; F in R^4; G in the sum-zero
// hyperplane of R^3).
//
// Conventions for the two dual spaces: roots and weights live in t*,
// coroots and coweights in t, both realized in the same ambient
// coordinates with the canonical pairing <.,.> given by the standard dot
// product. The basic inner product on t is metric_scale * dot (the unique
// normalization with B(theta_check, theta_check) = 2), so the isomorphism
// t -> t* it induces is multiplication of coordinates by metric_scale, and
// its inverse divides by it. Weight-side vectors are converted with
// weight_to_coweight / coweight_to_weight before being mixed with t-side
// vectors; the fusion code stores alcove points on the t side throughout.
//
// Immutable after construction; concurrent shared reads are safe.
class RootDatum {
 public:
  LieType type;
  int rank = 0;
  int ambient = 0;

  std::vector<RatVec> simple_roots;     // alpha_i, t*
  std::vector<RatVec> simple_coroots;   // alpha_i_check, t
  std::vector<RatVec> fund_weights;     // varpi_i, t*
  std::vector<RatVec> fund_coweights;   // varpi_i_check, t
  RatVec rho, rho_check;
  RatVec theta, theta_check;            // highest root and its coroot
  std::vector<long long> marks;         // theta = sum marks_i alpha_i
  std::vector<long long> comarks;       // <varpi_i, theta_check>
  long long coxeter_number = 0;
  long long dual_coxeter_number = 0;
  Rat metric_scale;                     // gram = metric_scale * I
  RatMat gram;                          // basic inner product on ambient coords
  std::vector<RatVec> positive_roots;   // ordered by height

  Rat pairing(const RatVec& weight_side, const RatVec& coweight_side) const;
  Rat basic(const RatVec& x, const RatVec& y) const;       // t x t
  Rat basic_dual(const RatVec& x, const RatVec& y) const;  // t* x t*
  RatVec weight_to_coweight(const RatVec& lam) const;
  RatVec coweight_to_weight(const RatVec& xi) const;

  bool is_simply_laced() const;
  long long num_positive_roots() const {
    return static_cast<long long>(positive_roots.size());
  }

  // {0} together with varpi_i_check / marks_i, i = 1..rank. The subset
  // lying in the coweight lattice represents the center.
  std::vector<RatVec> alcove_vertices() const;
  // Indices i (1-based; 0 = origin) of the vertices lying in P_check.
  std::vector<int> center_vertex_indices() const;

  Lattice coroot_lattice() const;    // Q_check, t
  Lattice coweight_lattice() const;  // P_check, t
  Lattice root_lattice() const;      // Q, t*
  Lattice weight_lattice() const;    // P, t*

  RatVec weight_from_labels(const std::vector<long long>& labels) const;
  std::vector<long long> labels_from_weight(const RatVec& mu) const;

  // rho_check / h, the regular point whose exponential has adjoint action
  // of minimal order.
  RatVec principal_point() const;
};

Rat pairing_basic(const RootDatum& rd, const RatVec& x, const RatVec& y);

RootDatum build_root_datum(LieType type);

}  // namespace verlinde
