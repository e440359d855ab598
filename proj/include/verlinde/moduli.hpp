#pragma once

#include <optional>
#include <string>
#include <vector>

#include "verlinde/fusion.hpp"
#include "verlinde/phases.hpp"

namespace verlinde {

// Everything reusable for one (type, level): weight table, S-matrix and the
// dual-weight permutation. Immutable once built.
struct VerlindeContext {
  RootDatum rd;
  WeylGroup W;
  LevelWeightTable table;
  SMatrix S;
  std::vector<int> dual;  // index of -w0(mu)

  static VerlindeContext build(LieType type, long long k,
                               long long weyl_budget = 1000000);
};

struct Tolerances {
  double integrality = 1e-6;
  double unitarity = 1e-9;
};

// A moduli-space quantization request: genus, level, center subgroup, a
// 2g-tuple of characters of Z, and the boundary weight.
struct ModuliSpec {
  int genus = 1;
  long long k = 1;
  const CenterSubgroup* Z = nullptr;
  std::vector<CenterCharacter> phi;  // length 2*genus
  LevelWeight mu;
};

// Simply connected surface sum: sum_lam S_{lam,0}^{1-2g} S_{lam,*mu}.
long long verlinde_sc(const VerlindeContext& ctx, int genus, int mu_idx,
                      double tol = 1e-6);

struct QuantizationResult {
  long long value = 0;
  double residual = 0;   // distance of the raw sum from the returned integer
  double leading = 0;    // identity-tuple term, verlinde_sc / #Z^{2g}
  double correction = 0; // value - leading
};

// Full tuple sum over Z^{2g} with character twists and phase factors; the
// tuple sum is restricted to tuples whose common fixed-point set on the
// level-k weights is nonempty. The result must round to a nonnegative
// integer within tol.
QuantizationResult verlinde_nsc(const VerlindeContext& ctx,
                                const CenterActionOnWeights& action,
                                const ModuliSpec& spec, double tol = 1e-6);

// Batched tuple sum over every boundary weight and every character 2g-tuple
// at once (the per-tuple restricted weight sums are shared). phis lists the
// enumerated tuples in a fixed order; values[p][mu] is the integer for
// phis[p] and the mu-th weight. Residuals are tracked across the whole sweep.
struct NscSweep {
  std::vector<std::vector<CenterCharacter>> phis;
  std::vector<std::vector<long long>> values;
  double max_residual = 0;
};
NscSweep verlinde_nsc_sweep(const VerlindeContext& ctx, const CenterSubgroup& Z,
                            const CenterActionOnWeights& action, int genus,
                            double tol = 1e-6);

// Closed form for the projective unitary family with n an odd prime, full
// center, n | k: combines verlinde_sc with the principal character value.
// `twisted` selects the branch where some character is nontrivial.
long long pu_n_prime(const VerlindeContext& ctx, long long n, int genus,
                     bool twisted, int mu_idx, double tol = 1e-6);

struct CongruenceReport {
  bool pass = true;
  long long modulus = 0;
  struct Entry {
    std::vector<long long> labels;
    long long verlinde = 0;
    long long target = 0;
    bool ok = true;
  };
  std::vector<Entry> entries;
};

// N(mu) ≡ (k/n+1)^{(n-1)(g-1)} eps(mu) mod n^{2g} for every level-k weight.
CongruenceReport congruence_check(const VerlindeContext& ctx, long long n,
                                  int genus, double tol = 1e-6);

struct StabilizerReport {
  bool applicable = true;
  bool free_action = true;
  std::vector<std::pair<std::string, long long>> fixed_counts;  // per nontrivial c
  bool divisibility_ok = true;  // #Z^{2g} | N(mu) for all mu (checked at genus g)
  int genus = 1;
};

// For the A_l family with Z of prime order m, m^2 | l+1 and k not a multiple
// of m: every nontrivial center element must act freely on the level-k
// weights, so only the identity tuple contributes.
StabilizerReport trivial_stabilizer_check(const VerlindeContext& ctx,
                                          long long m, int genus = 1,
                                          double tol = 1e-6);

}  // namespace verlinde
