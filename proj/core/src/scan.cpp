#include "balfam/scan.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>
#include <utility>

#include "json.hpp"
#include "json_detail.hpp"

#include "balfam/balancer.hpp"
#include "balfam/oracle.hpp"

namespace balfam {

namespace {

bool incomparable_with_all(SubsetMask candidate,
                           const std::vector<SubsetMask>& chosen) {
  for (SubsetMask m : chosen) {
    if ((m & ~candidate) == 0 || (candidate & ~m) == 0) return false;
  }
  return true;
}

// Extends `chosen` with bitmask-larger incomparable subsets until `size`
// members are placed. Returns false when the visitor stopped the walk.
bool extend_antichains(int n, std::size_t size, std::vector<SubsetMask>& chosen,
                       SubsetMask from,
                       const std::function<bool(const SetFamily&)>& visit) {
  if (chosen.size() == size) {
    return visit(SetFamily(n, chosen));
  }
  const SubsetMask limit = full_mask(n);
  for (SubsetMask candidate = from; candidate <= limit; ++candidate) {
    if (limit - candidate + 1 < size - chosen.size()) break;
    if (!incomparable_with_all(candidate, chosen)) continue;
    chosen.push_back(candidate);
    const bool keep_going = extend_antichains(n, size, chosen, candidate + 1, visit);
    chosen.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

struct ChunkResult {
  std::uint64_t checked = 0;
  std::vector<SetFamily> counterexamples;
};

// Runs one job per chunk (possibly concurrently) and merges the results in
// chunk order, so the report never depends on the thread count.
ScanReport merge_chunks(ScanKind kind, int n, std::size_t chunk_count,
                        const ScanOptions& options,
                        const std::function<ChunkResult(std::size_t)>& job) {
  const auto start = std::chrono::steady_clock::now();
  ScanReport report;
  report.kind = kind;
  report.n = n;

  auto absorb = [&report, &options](ChunkResult&& chunk) {
    report.families_checked += chunk.checked;
    for (auto& family : chunk.counterexamples) {
      report.counterexamples.push_back(std::move(family));
    }
    if (options.progress) options.progress(report.families_checked);
  };

  if (options.threads <= 1 || chunk_count <= 1) {
    for (std::size_t i = 0; i < chunk_count; ++i) absorb(job(i));
  } else {
    std::vector<ChunkResult> results(chunk_count);
    std::atomic<std::size_t> next{0};
    const std::size_t workers =
        std::min<std::size_t>(options.threads, chunk_count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&results, &next, &job, chunk_count] {
        for (std::size_t i = next.fetch_add(1); i < chunk_count;
             i = next.fetch_add(1)) {
          results[i] = job(i);
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& chunk : results) absorb(std::move(chunk));
  }

  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

// Ascending index combinations from `pool`, extending `chosen`.
bool combinations_from(const std::vector<SubsetMask>& pool, std::size_t size,
                       std::vector<SubsetMask>& chosen, std::size_t next,
                       const std::function<bool(const std::vector<SubsetMask>&)>& visit) {
  if (chosen.size() == size) return visit(chosen);
  for (std::size_t i = next; i < pool.size(); ++i) {
    if (pool.size() - i < size - chosen.size()) break;
    chosen.push_back(pool[i]);
    const bool keep_going = combinations_from(pool, size, chosen, i + 1, visit);
    chosen.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

bool family_upholds_theorem(ScanKind kind, const SetFamily& family) {
  try {
    BalanceCertificate cert;
    CertificateMode mode = CertificateMode::Balanced;
    switch (kind) {
      case ScanKind::Theorem1:
        cert = find_union_balanced(family);
        mode = CertificateMode::Union;
        break;
      case ScanKind::Theorem2:
        cert = find_balanced_general(family);
        break;
      case ScanKind::Theorem3:
        cert = find_balanced_uniform(family);
        break;
      case ScanKind::Conjecture:
        return false;
    }
    if (!verify_certificate(family, cert)) return false;
    return brute_force_find(family, mode, false).found.has_value();
  } catch (...) {
    return false;
  }
}

}  // namespace

const char* to_string(ScanKind kind) noexcept {
  switch (kind) {
    case ScanKind::Theorem1: return "theorem1";
    case ScanKind::Theorem2: return "theorem2";
    case ScanKind::Theorem3: return "theorem3";
    case ScanKind::Conjecture: return "conjecture";
  }
  return "unknown";
}

std::optional<ScanKind> scan_kind_from_string(std::string_view name) {
  if (name == "theorem1") return ScanKind::Theorem1;
  if (name == "theorem2") return ScanKind::Theorem2;
  if (name == "theorem3") return ScanKind::Theorem3;
  if (name == "conjecture") return ScanKind::Conjecture;
  return std::nullopt;
}

void enumerate_antichains(int n, int size,
                          const std::function<bool(const SetFamily&)>& visit) {
  if (n < 1) {
    throw Error(ErrorKind::GroundSetTooSmall,
                "need n >= 1, got " + std::to_string(n));
  }
  if (n > kMaxAntichainGroundSet) {
    throw Error(ErrorKind::GroundSetTooLarge,
                "antichain enumeration is guarded at n <= " +
                    std::to_string(kMaxAntichainGroundSet));
  }
  if (size < 1) {
    throw Error(ErrorKind::MalformedInput, "family size must be >= 1");
  }
  std::vector<SubsetMask> chosen;
  chosen.reserve(static_cast<std::size_t>(size));
  extend_antichains(n, static_cast<std::size_t>(size), chosen, 0, visit);
}

ScanReport scan_conjecture(int n, const ScanOptions& options) {
  if (n < 2) {
    throw Error(ErrorKind::GroundSetTooSmall,
                "need n >= 2, got " + std::to_string(n));
  }
  if (n > kMaxAntichainGroundSet) {
    throw Error(ErrorKind::GroundSetTooLarge,
                "conjecture scan is guarded at n <= " +
                    std::to_string(kMaxAntichainGroundSet));
  }

  const std::size_t size = static_cast<std::size_t>(n) + 1;
  const std::size_t chunk_count = std::size_t{1} << n;  // one per first member

  auto job = [n, size](std::size_t first) -> ChunkResult {
    ChunkResult chunk;
    std::vector<SubsetMask> chosen{static_cast<SubsetMask>(first)};
    extend_antichains(n, size, chosen, static_cast<SubsetMask>(first) + 1,
                      [&chunk](const SetFamily& family) {
                        ++chunk.checked;
                        if (!is_balanced(family)) {
                          chunk.counterexamples.push_back(family);
                        }
                        return true;
                      });
    return chunk;
  };
  return merge_chunks(ScanKind::Conjecture, n, chunk_count, options, job);
}

ScanReport scan_theorem(ScanKind kind, int n, std::optional<int> k,
                        const ScanOptions& options) {
  if (kind == ScanKind::Conjecture) {
    throw std::invalid_argument("scan_theorem does not handle the conjecture");
  }
  if (n < 1) {
    throw Error(ErrorKind::GroundSetTooSmall,
                "need n >= 1, got " + std::to_string(n));
  }
  if (n > kMaxTheoremScanGroundSet) {
    throw Error(ErrorKind::GroundSetTooLarge,
                "theorem scans are guarded at n <= " +
                    std::to_string(kMaxTheoremScanGroundSet));
  }

  std::vector<SubsetMask> pool;
  std::size_t size = 0;
  switch (kind) {
    case ScanKind::Theorem1:
      if (k) {
        throw Error(ErrorKind::InvalidUniformity, "k applies to theorem3 only");
      }
      for (SubsetMask m = 1; m <= full_mask(n); ++m) pool.push_back(m);
      size = static_cast<std::size_t>(n) + 1;
      break;
    case ScanKind::Theorem2:
      if (k) {
        throw Error(ErrorKind::InvalidUniformity, "k applies to theorem3 only");
      }
      for (SubsetMask m = 0; m <= full_mask(n); ++m) pool.push_back(m);
      size = static_cast<std::size_t>(n) + 2;
      break;
    case ScanKind::Theorem3: {
      if (!k || *k < 1 || *k > n - 1) {
        throw Error(ErrorKind::InvalidUniformity,
                    "theorem3 needs k with 1 <= k <= n-1");
      }
      for (SubsetMask m = 0; m <= full_mask(n); ++m) {
        if (mask_cardinality(m) == *k) pool.push_back(m);
      }
      size = static_cast<std::size_t>(n) + 1;
      if (pool.size() < size) {
        throw Error(ErrorKind::InvalidUniformity,
                    "C(n,k) = " + std::to_string(pool.size()) +
                        " is below the threshold size " + std::to_string(size));
      }
      break;
    }
    case ScanKind::Conjecture:
      break;
  }

  const std::size_t chunk_count =
      pool.size() >= size ? pool.size() - size + 1 : 0;

  auto job = [&pool, size, kind, n](std::size_t i0) -> ChunkResult {
    ChunkResult chunk;
    std::vector<SubsetMask> chosen{pool[i0]};
    combinations_from(pool, size, chosen, i0 + 1,
                      [&chunk, kind, n](const std::vector<SubsetMask>& members) {
                        const SetFamily family(n, members);
                        ++chunk.checked;
                        if (!family_upholds_theorem(kind, family)) {
                          chunk.counterexamples.push_back(family);
                        }
                        return true;
                      });
    return chunk;
  };
  return merge_chunks(kind, n, chunk_count, options, job);
}

std::string scan_report_to_json(const ScanReport& report, bool include_timing) {
  nlohmann::ordered_json doc;
  doc["kind"] = to_string(report.kind);
  doc["n"] = report.n;
  doc["families_checked"] = report.families_checked;
  auto counterexamples = nlohmann::ordered_json::array();
  for (const SetFamily& family : report.counterexamples) {
    counterexamples.push_back(detail::family_to_json_object(family));
  }
  doc["counterexamples"] = std::move(counterexamples);
  doc["elapsed_ms"] = include_timing ? report.elapsed.count() : 0;
  return doc.dump();
}

}  // namespace balfam
