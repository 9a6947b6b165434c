#include "balfam/family.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "json.hpp"
#include "json_detail.hpp"

namespace balfam {

namespace {

void check_ground_set_size(int n) {
  if (n < 1) {
    throw Error(ErrorKind::MalformedInput, "ground set size must be positive");
  }
  if (n > kMaxGroundSetSize) {
    throw Error(ErrorKind::GroundSetTooLarge,
                "n = " + std::to_string(n) + " exceeds the cap of " +
                    std::to_string(kMaxGroundSetSize));
  }
}

std::string describe_mask(SubsetMask mask) {
  std::string out = "{";
  for (int e : mask_elements(mask)) {
    if (out.size() > 1) out += ',';
    out += std::to_string(e);
  }
  return out + "}";
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

int parse_int(std::string_view token, const std::string& context) {
  token = trim(token);
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || token.empty()) {
    throw Error(ErrorKind::MalformedInput,
                "expected an integer in " + context + ", got '" +
                    std::string(token) + "'");
  }
  return value;
}

struct RawSet {
  std::vector<int> elements;  // validated 1-based, distinct, unsorted
};

SetFamily finish_family(std::optional<int> declared_n, bool allow_duplicates,
                        const std::vector<RawSet>& raw_sets) {
  int n;
  if (declared_n) {
    n = *declared_n;
  } else {
    int largest = 0;
    for (const auto& s : raw_sets) {
      for (int e : s.elements) largest = std::max(largest, e);
    }
    if (largest == 0) {
      throw Error(ErrorKind::MalformedInput,
                  "cannot infer ground set size: no header and no elements");
    }
    n = largest;
  }
  check_ground_set_size(n);

  std::vector<SubsetMask> members;
  members.reserve(raw_sets.size());
  for (const auto& s : raw_sets) {
    members.push_back(mask_from_elements(s.elements, n));
  }
  return SetFamily(n, std::move(members), allow_duplicates);
}

RawSet parse_set_elements(const std::vector<int>& values) {
  RawSet set;
  for (int e : values) {
    if (e < 1 || e > kMaxGroundSetSize) {
      throw Error(ErrorKind::ElementOutOfRange,
                  "element " + std::to_string(e) + " outside 1.." +
                      std::to_string(kMaxGroundSetSize));
    }
    if (std::find(set.elements.begin(), set.elements.end(), e) !=
        set.elements.end()) {
      throw Error(ErrorKind::MalformedInput,
                  "element " + std::to_string(e) + " listed twice in one set");
    }
    set.elements.push_back(e);
  }
  return set;
}

SetFamily parse_family_text(std::string_view input) {
  std::optional<int> declared_n;
  bool allow_duplicates = false;
  bool seen_set = false;
  std::vector<RawSet> raw_sets;

  std::size_t pos = 0;
  while (pos <= input.size()) {
    std::size_t eol = input.find('\n', pos);
    std::string_view line =
        input.substr(pos, eol == std::string_view::npos ? input.size() - pos
                                                        : eol - pos);
    pos = eol == std::string_view::npos ? input.size() + 1 : eol + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (!seen_set && !declared_n && line.size() > 1 && line[0] == 'n' &&
        (line[1] == ' ' || line[1] == '\t')) {
      int n = parse_int(line.substr(1), "the 'n' header");
      if (n < 1) {
        throw Error(ErrorKind::MalformedInput, "header 'n' must be positive");
      }
      if (n > kMaxGroundSetSize) {
        throw Error(ErrorKind::GroundSetTooLarge,
                    "header n = " + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(kMaxGroundSetSize));
      }
      declared_n = n;
      continue;
    }
    if (!seen_set && line == "allow_duplicates") {
      allow_duplicates = true;
      continue;
    }

    seen_set = true;
    if (line == "-") {
      raw_sets.push_back(RawSet{});
      continue;
    }
    std::vector<int> values;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      std::string_view token =
          line.substr(start, comma == std::string_view::npos
                                 ? line.size() - start
                                 : comma - start);
      values.push_back(parse_int(token, "a set line"));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    RawSet set = parse_set_elements(values);
    if (declared_n) {
      for (int e : set.elements) {
        if (e > *declared_n) {
          throw Error(ErrorKind::ElementOutOfRange,
                      "element " + std::to_string(e) + " exceeds n = " +
                          std::to_string(*declared_n));
        }
      }
    }
    raw_sets.push_back(std::move(set));
  }

  return finish_family(declared_n, allow_duplicates, raw_sets);
}

SetFamily parse_family_json(std::string_view input) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(input);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedInput, std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorKind::MalformedInput, "family JSON must be an object");
  }
  for (const auto& item : doc.items()) {
    if (item.key() != "n" && item.key() != "sets" &&
        item.key() != "allow_duplicates") {
      throw Error(ErrorKind::MalformedInput,
                  "unknown key '" + item.key() + "' in family JSON");
    }
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw Error(ErrorKind::MalformedInput, "family JSON needs an integer 'n'");
  }
  if (!doc.contains("sets") || !doc["sets"].is_array()) {
    throw Error(ErrorKind::MalformedInput, "family JSON needs a 'sets' array");
  }
  bool allow_duplicates = false;
  if (doc.contains("allow_duplicates")) {
    if (!doc["allow_duplicates"].is_boolean()) {
      throw Error(ErrorKind::MalformedInput,
                  "'allow_duplicates' must be a boolean");
    }
    allow_duplicates = doc["allow_duplicates"].get<bool>();
  }

  const long long n_value = doc["n"].get<long long>();
  if (n_value < 1) {
    throw Error(ErrorKind::MalformedInput, "'n' must be positive");
  }
  if (n_value > kMaxGroundSetSize) {
    throw Error(ErrorKind::GroundSetTooLarge,
                "n = " + std::to_string(n_value) + " exceeds the cap of " +
                    std::to_string(kMaxGroundSetSize));
  }
  const int n = static_cast<int>(n_value);

  std::vector<RawSet> raw_sets;
  for (const auto& set_json : doc["sets"]) {
    if (!set_json.is_array()) {
      throw Error(ErrorKind::MalformedInput, "each set must be an array");
    }
    std::vector<int> values;
    for (const auto& elem : set_json) {
      if (!elem.is_number_integer()) {
        throw Error(ErrorKind::MalformedInput, "set elements must be integers");
      }
      const long long e = elem.get<long long>();
      if (e < 1 || e > n) {
        throw Error(ErrorKind::ElementOutOfRange,
                    "element " + std::to_string(e) + " outside 1.." +
                        std::to_string(n));
      }
      values.push_back(static_cast<int>(e));
    }
    raw_sets.push_back(parse_set_elements(values));
  }
  return finish_family(n, allow_duplicates, raw_sets);
}

}  // namespace

SubsetMask mask_from_elements(std::span<const int> elements, int n) {
  check_ground_set_size(n);
  SubsetMask mask = 0;
  for (int e : elements) {
    if (e < 1 || e > n) {
      throw Error(ErrorKind::ElementOutOfRange,
                  "element " + std::to_string(e) + " outside 1.." +
                      std::to_string(n));
    }
    mask |= SubsetMask{1} << (e - 1);
  }
  return mask;
}

std::vector<int> mask_elements(SubsetMask a) {
  std::vector<int> elements;
  elements.reserve(static_cast<std::size_t>(std::popcount(a)));
  while (a != 0) {
    const int bit = std::countr_zero(a);
    elements.push_back(bit + 1);
    a &= a - 1;
  }
  return elements;
}

SetFamily::SetFamily(int n, std::vector<SubsetMask> members,
                     bool allow_duplicates)
    : n_(n), members_(std::move(members)), allow_duplicates_(allow_duplicates) {
  check_ground_set_size(n_);
  const SubsetMask universe = full_mask(n_);
  for (SubsetMask m : members_) {
    if ((m & ~universe) != 0) {
      throw Error(ErrorKind::ElementOutOfRange,
                  "member has elements beyond n = " + std::to_string(n_));
    }
  }
  if (!allow_duplicates_) {
    std::unordered_set<SubsetMask> seen;
    for (SubsetMask m : members_) {
      if (!seen.insert(m).second) {
        throw Error(ErrorKind::DuplicateMember,
                    "member " + describe_mask(m) + " appears more than once");
      }
    }
  }
}

SetFamily parse_family(std::string_view input, FamilyFormat format) {
  return format == FamilyFormat::Text ? parse_family_text(input)
                                      : parse_family_json(input);
}

std::string format_family(const SetFamily& family, FamilyFormat format) {
  if (format == FamilyFormat::Text) {
    std::ostringstream out;
    out << "n " << family.n() << '\n';
    if (family.allow_duplicates()) out << "allow_duplicates\n";
    for (SubsetMask m : family.members()) {
      if (m == 0) {
        out << "-\n";
        continue;
      }
      const auto elements = mask_elements(m);
      for (std::size_t i = 0; i < elements.size(); ++i) {
        if (i > 0) out << ',';
        out << elements[i];
      }
      out << '\n';
    }
    return out.str();
  }

  return detail::family_to_json_object(family).dump();
}

std::optional<int> is_uniform(const SetFamily& family) {
  if (family.size() == 0) {
    throw Error(ErrorKind::EmptyFamily, "uniformity of an empty family");
  }
  const int k = mask_cardinality(family.member(0));
  for (SubsetMask m : family.members()) {
    if (mask_cardinality(m) != k) return std::nullopt;
  }
  return k;
}

bool is_sperner(const SetFamily& family) {
  const auto& members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i == j) continue;
      if ((members[i] & ~members[j]) == 0) return false;  // members[i] subset
    }
  }
  return true;
}

SubsetMask aggregate(const SetFamily& family, std::span<const int> indices,
                     AggregateMode mode) {
  if (indices.empty()) {
    throw Error(ErrorKind::EmptyIndexSet, "aggregate over no indices");
  }
  for (int i : indices) {
    if (i < 0 || static_cast<std::size_t>(i) >= family.size()) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "index " + std::to_string(i) + " outside 0.." +
                      std::to_string(family.size() ? family.size() - 1 : 0));
    }
  }
  SubsetMask result = family.member(static_cast<std::size_t>(indices[0]));
  for (std::size_t pos = 1; pos < indices.size(); ++pos) {
    const SubsetMask m = family.member(static_cast<std::size_t>(indices[pos]));
    result = mode == AggregateMode::Union ? (result | m) : (result & m);
  }
  return result;
}

SetFamily gen_nonuniform_sharp(int n) {
  if (n < 2) {
    throw Error(ErrorKind::GroundSetTooSmall,
                "need n >= 2, got " + std::to_string(n));
  }
  check_ground_set_size(n);
  std::vector<SubsetMask> members;
  members.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) members.push_back(SubsetMask{1} << (i - 1));
  members.push_back(full_mask(n));
  return SetFamily(n, std::move(members));
}

SetFamily gen_uniform_sharp(int n) {
  if (n < 3) {
    throw Error(ErrorKind::GroundSetTooSmall,
                "need n >= 3, got " + std::to_string(n));
  }
  check_ground_set_size(n);
  std::vector<SubsetMask> members;
  members.reserve(static_cast<std::size_t>(n));
  members.push_back((SubsetMask{1} << 1) | (SubsetMask{1} << 2));  // {2,3}
  for (int i = 2; i <= n; ++i) {
    members.push_back(SubsetMask{1} | (SubsetMask{1} << (i - 1)));  // {1,i}
  }
  return SetFamily(n, std::move(members));
}

}  // namespace balfam
