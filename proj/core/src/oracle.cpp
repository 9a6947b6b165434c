#include "balfam/oracle.hpp"

#include <array>

#include "json.hpp"
#include "json_detail.hpp"

namespace balfam {

namespace {

constexpr std::uint64_t pow3(std::size_t e) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < e; ++i) v *= 3;
  return v;
}

struct Assignment {
  // digit per index: 0 = neither, 1 = I1, 2 = I2
  std::array<std::uint8_t, kMaxOracleFamilySize> digits{};
  std::size_t m = 0;

  void decode(std::uint64_t code) {
    for (std::size_t i = 0; i < m; ++i) {
      digits[i] = static_cast<std::uint8_t>(code % 3);
      code /= 3;
    }
  }
};

BalanceCertificate build_certificate(const SetFamily& family,
                                     CertificateMode mode,
                                     const Assignment& a) {
  std::vector<int> i1;
  std::vector<int> i2;
  for (std::size_t i = 0; i < a.m; ++i) {
    if (a.digits[i] == 1) i1.push_back(static_cast<int>(i));
    if (a.digits[i] == 2) i2.push_back(static_cast<int>(i));
  }
  BalanceCertificate cert;
  cert.mode = mode;
  cert.i1 = std::move(i1);
  cert.i2 = std::move(i2);
  cert.witnessed_union = aggregate(family, cert.i1, AggregateMode::Union);
  if (mode == CertificateMode::Balanced) {
    cert.witnessed_intersection =
        aggregate(family, cert.i1, AggregateMode::Intersection);
  }
  return cert;
}

}  // namespace

OracleResult brute_force_find(const SetFamily& family, CertificateMode mode,
                              bool minimal) {
  const std::size_t m = family.size();
  if (m > kMaxOracleFamilySize) {
    throw Error(ErrorKind::FamilyTooLarge,
                std::to_string(m) + " members is past the 3^m search guard of " +
                    std::to_string(kMaxOracleFamilySize));
  }

  OracleResult result;
  if (m == 0) return result;

  const std::uint64_t total = pow3(m);
  Assignment a;
  a.m = m;
  std::optional<std::uint64_t> best_code;
  std::size_t best_size = 0;

  for (std::uint64_t code = 1; code < total; ++code) {
    a.decode(code);

    // Canonical form: the smallest assigned index sits in I1. The swapped
    // assignment witnesses the same splitting.
    std::size_t first_assigned = 0;
    while (a.digits[first_assigned] == 0) ++first_assigned;
    if (a.digits[first_assigned] != 1) continue;

    SubsetMask u1 = 0, u2 = 0;
    SubsetMask x1 = ~SubsetMask{0}, x2 = ~SubsetMask{0};
    std::size_t size1 = 0, size2 = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (a.digits[i] == 1) {
        u1 |= family.member(i);
        x1 &= family.member(i);
        ++size1;
      } else if (a.digits[i] == 2) {
        u2 |= family.member(i);
        x2 &= family.member(i);
        ++size2;
      }
    }
    if (size1 == 0 || size2 == 0) continue;

    ++result.pairs_examined;
    const bool hit =
        u1 == u2 && (mode == CertificateMode::Union || x1 == x2);
    if (!hit) continue;

    if (!minimal) {
      result.found = build_certificate(family, mode, a);
      return result;
    }
    if (!best_code || size1 + size2 < best_size) {
      best_code = code;
      best_size = size1 + size2;
    }
  }

  if (best_code) {
    a.decode(*best_code);
    result.found = build_certificate(family, mode, a);
  }
  return result;
}

bool is_balanced(const SetFamily& family) {
  return brute_force_find(family, CertificateMode::Balanced, false)
      .found.has_value();
}

std::string oracle_result_to_json(const OracleResult& result) {
  nlohmann::ordered_json doc;
  if (result.found) {
    doc["found"] = detail::certificate_to_json_object(*result.found);
  } else {
    doc["found"] = nullptr;
  }
  doc["pairs_examined"] = result.pairs_examined;
  return doc.dump();
}

}  // namespace balfam
