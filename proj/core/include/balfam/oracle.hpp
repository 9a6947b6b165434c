#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "balfam/balancer.hpp"
#include "balfam/family.hpp"

namespace balfam {

// Hard cap on brute-force enumeration: 3^20 assignments is already past
// desk scale.
inline constexpr std::size_t kMaxOracleFamilySize = 20;

struct OracleResult {
  std::optional<BalanceCertificate> found;
  std::uint64_t pairs_examined = 0;
};

// Ground truth by exhaustion: every assignment of each member index to
// {I1, I2, neither}, canonicalized so the smallest assigned index lies in
// I1. Returns the first hit in enumeration order; with minimal=true, a hit
// minimizing |I1|+|I2| (ties broken by enumeration order). An absent result
// means no splitting of the requested mode exists.
OracleResult brute_force_find(const SetFamily& family, CertificateMode mode,
                              bool minimal);

bool is_balanced(const SetFamily& family);

// {"found":certificate|null,"pairs_examined":int}
std::string oracle_result_to_json(const OracleResult& result);

}  // namespace balfam
