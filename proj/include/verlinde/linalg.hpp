#pragma once

#include <optional>
#include <vector>

#include "verlinde/rational.hpp"

namespace verlinde {

using RatVec = std::vector<Rat>;

RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rat& c, const RatVec& a);
Rat vec_dot(const RatVec& a, const RatVec& b);
bool vec_is_zero(const RatVec& a);

struct RatMat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Rat& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& operator()(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  static RatMat identity(int n);
  RatMat operator*(const RatMat& o) const;
  RatVec operator*(const RatVec& v) const;
  RatMat operator+(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  RatMat transposed() const;
  RatVec col(int j) const;

  bool operator==(const RatMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

// Exact solve of A x = b by fraction-free (Bareiss) elimination on the
// integerized augmented matrix. Returns nullopt when the system is
// inconsistent or the solution is not unique (rank < cols).
std::optional<RatVec> solve_exact(const RatMat& A, const RatVec& b);

// Determinant of a square rational matrix, exact.
Rat det(const RatMat& A);

// Inverse of a square rational matrix; throws on singular input.
RatMat inverse(const RatMat& A);

struct IntMat {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Int& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& operator()(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }
};

// Row-style Hermite normal form: returns the canonical basis of the row span
// (zero rows dropped). Pivots positive, entries above each pivot reduced.
IntMat hermite_row_basis(const IntMat& M);

// Smith normal form U*M*V = D with U, V unimodular, diagonal entries
// nonnegative and d1 | d2 | ... .
struct SmithResult {
  IntMat D, U, V;
};
SmithResult smith_normal_form(const IntMat& M);

// A full-column-rank lattice basis in ambient rational coordinates.
class Lattice {
 public:
  Lattice() = default;

  // Trusted basis: columns are independent generators.
  static Lattice from_basis(RatMat basis);

  // Canonical basis of the Z-span of arbitrary generators (HNF-reduced).
  static Lattice from_generators(int ambient_dim,
                                 const std::vector<RatVec>& gens);

  int ambient() const { return basis_.rows; }
  int rank() const { return basis_.cols; }
  const RatMat& basis() const { return basis_; }
  RatVec basis_vector(int j) const { return basis_.col(j); }

  // Exact coordinates of x in this basis; nullopt if x is outside the span.
  std::optional<RatVec> coords(const RatVec& x) const;
  bool contains(const RatVec& x) const;

  // Fractional parts of the coordinates; canonical representative data of
  // x mod this lattice. Throws if x is outside the span.
  RatVec frac_coords(const RatVec& x) const;

 private:
  RatMat basis_;
};

// Index [sup : sub]; requires sub to be a finite-index sublattice of sup.
// Throws precondition_error when sub is not contained in sup.
Int lattice_index(const Lattice& sup, const Lattice& sub);

// Structure of the finite abelian group sup/sub.
struct FiniteQuotient {
  Int order = 1;
  std::vector<Int> factors;        // invariant factors > 1
  std::vector<RatVec> generators;  // ambient vectors; classes generate sup/sub
};
FiniteQuotient lattice_quotient(const Lattice& sup, const Lattice& sub);

}  // namespace verlinde
