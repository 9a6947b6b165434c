#include "balfam/balancer.hpp"

#include <algorithm>
#include <unordered_set>

#include "json.hpp"
#include "json_detail.hpp"

namespace balfam {

namespace {

void require_distinct_members(const SetFamily& family) {
  std::unordered_set<SubsetMask> seen;
  for (SubsetMask m : family.members()) {
    if (!seen.insert(m).second) {
      throw Error(ErrorKind::DuplicateMember,
                  "finders need pairwise distinct members");
    }
  }
}

// Columns are the extended incidence vectors of the members: 2n x m.
RationalMatrix extended_incidence_matrix(const SetFamily& family) {
  const int n = family.n();
  RationalMatrix m(2 * static_cast<std::size_t>(n), family.size());
  for (std::size_t col = 0; col < family.size(); ++col) {
    const SubsetMask a = family.member(col);
    for (int p = 1; p <= n; ++p) {
      const int x = mask_contains(a, p) ? 1 : 0;
      m.at(2 * static_cast<std::size_t>(p - 1), col) = x;
      m.at(2 * static_cast<std::size_t>(p - 1) + 1, col) = 1 - x;
    }
  }
  return m;
}

// Columns are the plain 0/1 incidence vectors: n x m.
RationalMatrix incidence_matrix(const SetFamily& family) {
  const int n = family.n();
  RationalMatrix m(static_cast<std::size_t>(n), family.size());
  for (std::size_t col = 0; col < family.size(); ++col) {
    const SubsetMask a = family.member(col);
    for (int p = 1; p <= n; ++p) {
      m.at(static_cast<std::size_t>(p - 1), col) = mask_contains(a, p) ? 1 : 0;
    }
  }
  return m;
}

BalanceCertificate certificate_from_split(const SetFamily& family,
                                          CertificateMode mode,
                                          std::vector<int> i1,
                                          std::vector<int> i2) {
  BalanceCertificate cert;
  cert.mode = mode;
  cert.i1 = std::move(i1);
  cert.i2 = std::move(i2);
  cert.witnessed_union = aggregate(family, cert.i1, AggregateMode::Union);
  if (mode == CertificateMode::Balanced) {
    cert.witnessed_intersection =
        aggregate(family, cert.i1, AggregateMode::Intersection);
  }
  if (!verify_certificate(family, cert)) {
    throw std::logic_error("finder produced a certificate that fails verification");
  }
  return cert;
}

BalanceCertificate run_extended_pipeline(const SetFamily& family,
                                         const RationalMatrix& columns,
                                         CertificateMode mode) {
  const auto coeffs = kernel_vector(columns);
  if (!coeffs) {
    // The size preconditions force m > rank, so a kernel always exists.
    throw std::logic_error("no kernel vector despite m exceeding the rank bound");
  }
  auto [i1, i2] = sign_split(*coeffs);
  return certificate_from_split(family, mode, std::move(i1), std::move(i2));
}

bool strictly_ascending(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1] >= v[i]) return false;
  }
  return true;
}

}  // namespace

ExtendedIncidenceVector extended_incidence(SubsetMask a, int n) {
  if (n < 1 || n > kMaxGroundSetSize) {
    throw Error(ErrorKind::ElementOutOfRange,
                "ground set size " + std::to_string(n));
  }
  if ((a & ~full_mask(n)) != 0) {
    throw Error(ErrorKind::ElementOutOfRange,
                "set has elements beyond n = " + std::to_string(n));
  }
  ExtendedIncidenceVector v;
  v.coords.resize(2 * static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) {
    const int x = mask_contains(a, p) ? 1 : 0;
    v.coords[2 * static_cast<std::size_t>(p - 1)] = x;
    v.coords[2 * static_cast<std::size_t>(p - 1) + 1] = 1 - x;
  }
  return v;
}

ConstraintMatrixT build_T(int n, int k) {
  if (n < 1) {
    throw Error(ErrorKind::GroundSetTooSmall,
                "need n >= 1, got " + std::to_string(n));
  }
  if (k < 1 || k > n) {
    throw Error(ErrorKind::InvalidUniformity,
                "k = " + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
  RationalMatrix m(static_cast<std::size_t>(n), 2 * static_cast<std::size_t>(n));
  // Row j (1-based j < n): x_1 + y_1 - x_{j+1} - y_{j+1} = 0.
  for (int j = 0; j + 1 < n; ++j) {
    m.at(j, 0) = 1;
    m.at(j, 1) = 1;
    m.at(j, 2 * static_cast<std::size_t>(j + 1)) = -1;
    m.at(j, 2 * static_cast<std::size_t>(j + 1) + 1) = -1;
  }
  // Last row: (n-k) sum(x) - k sum(y) = 0.
  for (int p = 0; p < n; ++p) {
    m.at(n - 1, 2 * static_cast<std::size_t>(p)) = n - k;
    m.at(n - 1, 2 * static_cast<std::size_t>(p) + 1) = -k;
  }
  return ConstraintMatrixT{n, k, std::move(m)};
}

bool in_subspace_V(const ExtendedIncidenceVector& v, int n, int k) {
  const ConstraintMatrixT t = build_T(n, k);
  if (v.size() != t.matrix.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                "vector length " + std::to_string(v.size()) + " against 2n = " +
                    std::to_string(t.matrix.cols()));
  }
  std::vector<BigRational> rational(v.coords.begin(), v.coords.end());
  for (const BigRational& entry : multiply(t.matrix, rational)) {
    if (entry != 0) return false;
  }
  return true;
}

std::pair<std::vector<int>, std::vector<int>> sign_split(
    const KernelCoefficients& coeffs) {
  std::vector<int> positive;
  std::vector<int> negative;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const int s = sign_of(coeffs[i]);
    if (s > 0) positive.push_back(static_cast<int>(i));
    if (s < 0) negative.push_back(static_cast<int>(i));
  }
  if (positive.empty() || negative.empty()) {
    throw Error(ErrorKind::OneSidedRelation,
                "coefficients do not carry both signs");
  }
  return {std::move(positive), std::move(negative)};
}

BalanceCertificate find_balanced_uniform(const SetFamily& family) {
  require_distinct_members(family);
  const std::size_t threshold = static_cast<std::size_t>(family.n()) + 1;
  if (family.size() < threshold) {
    throw Error(ErrorKind::InsufficientFamily,
                "need at least n+1 = " + std::to_string(threshold) +
                    " members, got " + std::to_string(family.size()));
  }
  const auto k = is_uniform(family);
  if (!k) {
    throw Error(ErrorKind::NotUniform, "members have mixed cardinalities");
  }
  if (*k == 0) {
    throw Error(ErrorKind::EmptyUniformity, "k = 0 admits only the empty set");
  }
  return run_extended_pipeline(family, extended_incidence_matrix(family),
                               CertificateMode::Balanced);
}

BalanceCertificate find_balanced_general(const SetFamily& family) {
  require_distinct_members(family);
  const std::size_t threshold = static_cast<std::size_t>(family.n()) + 2;
  if (family.size() < threshold) {
    throw Error(ErrorKind::InsufficientFamily,
                "need at least n+2 = " + std::to_string(threshold) +
                    " members, got " + std::to_string(family.size()));
  }
  return run_extended_pipeline(family, extended_incidence_matrix(family),
                               CertificateMode::Balanced);
}

BalanceCertificate find_union_balanced(const SetFamily& family) {
  require_distinct_members(family);
  for (SubsetMask m : family.members()) {
    if (m == 0) {
      throw Error(ErrorKind::EmptySetMember,
                  "union-balanced finding excludes the empty set");
    }
  }
  const std::size_t threshold = static_cast<std::size_t>(family.n()) + 1;
  if (family.size() < threshold) {
    throw Error(ErrorKind::InsufficientFamily,
                "need at least n+1 = " + std::to_string(threshold) +
                    " members, got " + std::to_string(family.size()));
  }
  return run_extended_pipeline(family, incidence_matrix(family),
                               CertificateMode::Union);
}

bool verify_certificate(const SetFamily& family,
                        const BalanceCertificate& cert) noexcept {
  try {
    if (cert.i1.empty() || cert.i2.empty()) return false;
    if (!strictly_ascending(cert.i1) || !strictly_ascending(cert.i2)) {
      return false;
    }
    for (int i : cert.i1) {
      if (i < 0 || static_cast<std::size_t>(i) >= family.size()) return false;
    }
    for (int i : cert.i2) {
      if (i < 0 || static_cast<std::size_t>(i) >= family.size()) return false;
    }
    for (int i : cert.i1) {
      if (std::binary_search(cert.i2.begin(), cert.i2.end(), i)) return false;
    }

    const SubsetMask u1 = aggregate(family, cert.i1, AggregateMode::Union);
    const SubsetMask u2 = aggregate(family, cert.i2, AggregateMode::Union);
    if (u1 != u2 || u1 != cert.witnessed_union) return false;

    if (cert.mode == CertificateMode::Union) {
      return !cert.witnessed_intersection.has_value();
    }
    if (!cert.witnessed_intersection.has_value()) return false;
    const SubsetMask x1 = aggregate(family, cert.i1, AggregateMode::Intersection);
    const SubsetMask x2 = aggregate(family, cert.i2, AggregateMode::Intersection);
    return x1 == x2 && x1 == *cert.witnessed_intersection;
  } catch (...) {
    return false;
  }
}

std::string certificate_to_json(const BalanceCertificate& cert) {
  return detail::certificate_to_json_object(cert).dump();
}

std::optional<BalanceCertificate> certificate_from_json(std::string_view text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
  if (!doc.contains("mode") || !doc.contains("i1") || !doc.contains("i2") ||
      !doc.contains("union") || !doc.contains("intersection")) {
    return std::nullopt;
  }

  BalanceCertificate cert;
  if (doc["mode"] == "balanced") {
    cert.mode = CertificateMode::Balanced;
  } else if (doc["mode"] == "union") {
    cert.mode = CertificateMode::Union;
  } else {
    return std::nullopt;
  }

  auto read_indices = [](const nlohmann::json& arr,
                         std::vector<int>& out) -> bool {
    if (!arr.is_array()) return false;
    for (const auto& item : arr) {
      if (!item.is_number_integer()) return false;
      const long long value = item.get<long long>();
      if (value < -(1LL << 31) || value >= (1LL << 31)) return false;
      out.push_back(static_cast<int>(value));
    }
    return true;
  };
  auto read_elements = [](const nlohmann::json& arr,
                          SubsetMask& out) -> bool {
    if (!arr.is_array()) return false;
    out = 0;
    long long previous = 0;
    for (const auto& item : arr) {
      if (!item.is_number_integer()) return false;
      const long long e = item.get<long long>();
      if (e < 1 || e > kMaxGroundSetSize || e <= previous) return false;
      out |= SubsetMask{1} << (e - 1);
      previous = e;
    }
    return true;
  };

  if (!read_indices(doc["i1"], cert.i1)) return std::nullopt;
  if (!read_indices(doc["i2"], cert.i2)) return std::nullopt;
  if (!read_elements(doc["union"], cert.witnessed_union)) return std::nullopt;
  if (doc["intersection"].is_null()) {
    cert.witnessed_intersection.reset();
  } else {
    SubsetMask intersection = 0;
    if (!read_elements(doc["intersection"], intersection)) return std::nullopt;
    cert.witnessed_intersection = intersection;
  }
  return cert;
}

}  // namespace balfam
