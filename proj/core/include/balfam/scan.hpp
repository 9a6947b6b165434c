#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "balfam/family.hpp"

namespace balfam {

enum class ScanKind { Theorem1, Theorem2, Theorem3, Conjecture };

const char* to_string(ScanKind kind) noexcept;
std::optional<ScanKind> scan_kind_from_string(std::string_view name);

inline constexpr int kMaxAntichainGroundSet = 6;
inline constexpr int kMaxTheoremScanGroundSet = 5;

// Result of an exhaustive sweep. Theorem scans must come back with zero
// counterexamples; a conjecture scan that stays empty is evidence only,
// not a proof.
struct ScanReport {
  ScanKind kind = ScanKind::Conjecture;
  int n = 0;
  std::uint64_t families_checked = 0;
  std::vector<SetFamily> counterexamples;
  std::chrono::milliseconds elapsed{0};
};

// Visits every Sperner family of exactly `size` distinct subsets of [n],
// members sorted ascending by bitmask value, each family once. Backtracking
// extends only with bitmask-larger subsets incomparable to all chosen
// members. Return false from the visitor to stop.
void enumerate_antichains(int n, int size,
                          const std::function<bool(const SetFamily&)>& visit);

struct ScanOptions {
  // Chunks (split by first-member bitmask value) may run concurrently;
  // reports merge in chunk order, so output is independent of thread count.
  unsigned threads = 1;
  // Called with the cumulative families_checked after each merged chunk.
  std::function<void(std::uint64_t)> progress;
};

// Runs is_balanced over every Sperner family of size exactly n+1 on [n].
// Size n+1 suffices for all sizes >= n+1: a larger Sperner family contains
// a size-(n+1) Sperner subfamily and balancedness survives adding members.
ScanReport scan_conjecture(int n, const ScanOptions& options = {});

// Enumerates every family at the theorem's threshold size, runs the
// matching finder and the brute-force oracle on each, and records any
// family where the finder errs, its certificate fails verification, or the
// oracle disagrees.
ScanReport scan_theorem(ScanKind kind, int n, std::optional<int> k,
                        const ScanOptions& options = {});

// {"kind":...,"n":...,"families_checked":...,"counterexamples":[...],
//  "elapsed_ms":...}; with include_timing false, elapsed_ms is emitted as 0
// so byte-identical output is possible across runs.
std::string scan_report_to_json(const ScanReport& report,
                                bool include_timing = true);

}  // namespace balfam
