#pragma once

#include <optional>
#include <vector>

#include "verlinde/phase_value.hpp"
#include "verlinde/root_datum.hpp"
#include "verlinde/weyl.hpp"

namespace verlinde {

// One element of P_check / Q_check. The representative is the unique alcove
// vertex in its class; `canon` is the vector of fractional coordinates over
// the simple coroots (equal iff the classes agree).
struct CenterElement {
  RatVec rep;
  RatVec canon;
  int vertex_index = 0;  // 0 = origin, else the 1-based node index
};

// A subgroup Z of the full center, with its lattice Lambda_Z = exp^{-1}(Z)
// and invariant-factor presentation. Immutable once built.
class CenterSubgroup {
 public:
  std::vector<CenterElement> elements;  // identity first
  Lattice lambda;                       // Q_check ⊆ lambda ⊆ P_check
  std::vector<long long> invariant_factors;      // d_i > 1
  std::vector<int> generator_indices;            // into `elements`
  std::vector<std::vector<long long>> exponents;  // per element, over generators

  long long size() const { return static_cast<long long>(elements.size()); }
  int identity() const { return 0; }
  int mul(int a, int b) const;
  int inv(int a) const;
  int index_of(const CenterElement& c) const;  // -1 when absent
  std::string element_name(int a) const;

  // tables built by the constructors below
  std::vector<std::vector<int>> mul_table;
};

// Class of an arbitrary coweight-lattice vector inside the full center.
CenterElement element_from_coweight(const RootDatum& rd, const RatVec& v);

// The full center P_check / Q_check.
CenterSubgroup center_group(const RootDatum& rd);

// Subgroup generated by the given elements; empty list gives the trivial
// subgroup with lambda = Q_check.
CenterSubgroup subgroup_from_generators(const RootDatum& rd,
                                        const std::vector<CenterElement>& gens);

// All subgroups of the full center (small groups; enumerated by generated
// closures, deduplicated).
std::vector<CenterSubgroup> all_subgroups(const RootDatum& rd);

// (k0, k1): smallest k with k * Lambda_Z . Lambda_Z ⊂ Z, respectively
// k * Lambda_Z . P_check ⊂ Z, under the basic inner product. k0 | k1.
std::pair<long long, long long> levels(const RootDatum& rd,
                                       const CenterSubgroup& Z);

// The Weyl element w_c with w_c(zeta* - zeta_{c^{-1}}) = zeta*, plus the
// alcove vertex zeta_c of c. Requires an enumerated Weyl group.
struct CenterWeylPair {
  WeylElement w;
  RatVec zeta;
};
CenterWeylPair center_weyl_map(const RootDatum& rd, const WeylGroup& W,
                               const CenterSubgroup& ZG, const CenterElement& c);

// The fixed subgroup of the Coxeter action on T/Z, realized as
// ((1-w)^{-1} Lambda_Z) / Lambda_Z, with the two maps of the exact sequence
//   1 -> Z(G)/Z -> fixed -> Z -> 1.
struct CoxeterFixedGroup {
  Int order;
  std::vector<Int> invariant_factors;
  std::vector<RatVec> element_reps;  // vectors in (1-w)^{-1} Lambda_Z
  std::vector<int> projection_to_Z;  // element -> index in Z
  std::vector<int> projection_kernel;  // element indices mapping to identity
  bool exact = false;                // ker(projection) == im(inclusion)
  bool projection_surjective = false;
  long long inclusion_image_size = 0;
};
CoxeterFixedGroup coxeter_fixed_subgroup(const RootDatum& rd,
                                         const WeylElement& coxeter,
                                         const CenterSubgroup& Z);

// Index of sub in sup (thin wrapper so callers need only this header).
Int lattice_quotient_order(const Lattice& sup, const Lattice& sub);

// Character of Z given by exponents over the invariant-factor generators:
// value on an element with exponents a_i is e^{2 pi i sum e_i a_i / d_i}.
struct CenterCharacter {
  std::vector<long long> exponents;

  PhaseValue eval(const CenterSubgroup& Z, int elem_idx) const;
  bool is_trivial(const CenterSubgroup& Z) const;
};

// All #Z characters, trivial first, in lexicographic exponent order.
std::vector<CenterCharacter> all_characters(const CenterSubgroup& Z);

}  // namespace verlinde
