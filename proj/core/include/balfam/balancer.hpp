#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "balfam/family.hpp"
#include "balfam/matrix.hpp"

namespace balfam {

// (x_1, y_1, ..., x_n, y_n): x_i indicates membership of i in the set,
// y_i = 1 - x_i membership in its complement. Coordinates sum to n.
struct ExtendedIncidenceVector {
  std::vector<int> coords;

  std::size_t size() const noexcept { return coords.size(); }
  bool operator==(const ExtendedIncidenceVector&) const = default;
};

// The n x 2n matrix whose kernel is the space V of vectors with
// x_i + y_i = x_j + y_j for all i, j and (n-k) sum(x) = k sum(y).
// An extended incidence vector lies in V exactly when its set has k
// elements. rank is always n, so dim V = n.
struct ConstraintMatrixT {
  int n;
  int k;
  RationalMatrix matrix;
};

enum class CertificateMode { Balanced, Union };

// A checkable splitting: two disjoint nonempty member-index sets whose
// selected unions agree (and, in balanced mode, whose intersections agree).
// Indices are 0-based positions into the family's member order, ascending.
struct BalanceCertificate {
  CertificateMode mode = CertificateMode::Balanced;
  std::vector<int> i1;
  std::vector<int> i2;
  SubsetMask witnessed_union = 0;
  std::optional<SubsetMask> witnessed_intersection;  // absent in union mode

  bool operator==(const BalanceCertificate&) const = default;
};

// One rational coefficient per family member; not all zero.
using KernelCoefficients = std::vector<BigRational>;

ExtendedIncidenceVector extended_incidence(SubsetMask a, int n);

ConstraintMatrixT build_T(int n, int k);

// True iff build_T(n, k).matrix . v = 0 exactly.
bool in_subspace_V(const ExtendedIncidenceVector& v, int n, int k);

// Indices with positive coefficient and indices with negative coefficient,
// both ascending; zeros belong to neither. Throws OneSidedRelation when
// either side comes out empty.
std::pair<std::vector<int>, std::vector<int>> sign_split(
    const KernelCoefficients& coeffs);

// Balanced splitting of a k-uniform family with at least n+1 distinct
// members: kernel of the 2n x m extended incidence matrix, sign-split,
// certificate. Deterministic.
BalanceCertificate find_balanced_uniform(const SetFamily& family);

// Balanced splitting of any family with at least n+2 distinct members; the
// same pipeline without the uniformity constraint.
BalanceCertificate find_balanced_general(const SetFamily& family);

// Union-only splitting of a family of at least n+1 distinct nonempty
// members, via the kernel of the n x m plain incidence matrix.
BalanceCertificate find_union_balanced(const SetFamily& family);

// Recomputes everything from the family; malformed certificates yield
// false, never an exception.
bool verify_certificate(const SetFamily& family,
                        const BalanceCertificate& cert) noexcept;

// {"mode":"balanced"|"union","i1":[...],"i2":[...],"union":[...],
//  "intersection":[...]|null} with 0-based indices and 1-based elements.
std::string certificate_to_json(const BalanceCertificate& cert);

// nullopt when the text is not a certificate of the documented shape.
std::optional<BalanceCertificate> certificate_from_json(std::string_view text);

}  // namespace balfam
