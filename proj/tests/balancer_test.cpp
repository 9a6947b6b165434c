#include "doctest.h"

#include <random>

#include "balfam/balancer.hpp"
#include "balfam/oracle.hpp"

#include "test_util.hpp"

using namespace balfam;
using namespace balfam::testutil;

namespace {

ExtendedIncidenceVector vec(std::initializer_list<int> coords) {
  return ExtendedIncidenceVector{std::vector<int>(coords)};
}

// Union of complements computed from the y-coordinates of the extended
// incidence vectors; its complement must equal the direct intersection.
SubsetMask intersection_via_y_route(const SetFamily& family,
                                    const std::vector<int>& indices) {
  const int n = family.n();
  SubsetMask complement_union = 0;
  for (int i : indices) {
    const auto v = extended_incidence(family.member(static_cast<std::size_t>(i)), n);
    for (int p = 1; p <= n; ++p) {
      if (v.coords[2 * static_cast<std::size_t>(p - 1) + 1] == 1) {
        complement_union |= SubsetMask{1} << (p - 1);
      }
    }
  }
  return complement_mask(complement_union, n);
}

}  // namespace

TEST_CASE("extended incidence interleaves set and complement indicators") {
  CHECK(extended_incidence(mask_of({1, 3}, 3), 3) == vec({1, 0, 0, 1, 1, 0}));
  CHECK(extended_incidence(0, 2) == vec({0, 1, 0, 1}));
  CHECK(extended_incidence(full_mask(2), 2) == vec({1, 0, 1, 0}));
  CHECK(error_kind_of([] { extended_incidence(SubsetMask{1} << 3, 2); }) ==
        ErrorKind::ElementOutOfRange);
}

TEST_CASE("extended incidence coordinates pair to one and sum to n") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 64)(rng);
    const SubsetMask a =
        std::uniform_int_distribution<SubsetMask>(0, full_mask(n))(rng);
    const auto v = extended_incidence(a, n);
    REQUIRE(v.size() == 2 * static_cast<std::size_t>(n));
    int total = 0;
    for (int p = 0; p < n; ++p) {
      CHECK(v.coords[2 * static_cast<std::size_t>(p)] +
                v.coords[2 * static_cast<std::size_t>(p) + 1] ==
            1);
      total += v.coords[2 * static_cast<std::size_t>(p)] +
               v.coords[2 * static_cast<std::size_t>(p) + 1];
    }
    CHECK(total == n);
  }
}

TEST_CASE("build_T matches the displayed matrix") {
  CHECK(build_T(2, 1).matrix ==
        RationalMatrix::from_rows({{1, 1, -1, -1}, {1, -1, 1, -1}}));
  CHECK(build_T(3, 2).matrix ==
        RationalMatrix::from_rows({{1, 1, -1, -1, 0, 0},
                                   {1, 1, 0, 0, -1, -1},
                                   {1, -2, 1, -2, 1, -2}}));
  CHECK(error_kind_of([] { build_T(2, 3); }) == ErrorKind::InvalidUniformity);
  CHECK(error_kind_of([] { build_T(2, 0); }) == ErrorKind::InvalidUniformity);
}

TEST_CASE("T has full row rank, so its kernel has dimension n") {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto t = build_T(n, k);
      CHECK(rank(t.matrix) == static_cast<std::size_t>(n));
      CHECK(kernel_dimension(t.matrix) == static_cast<std::size_t>(n));
    }
  }
}

TEST_CASE("V membership is exactly |A| = k") {
  CHECK(in_subspace_V(extended_incidence(mask_of({1}, 2), 2), 2, 1));
  CHECK_FALSE(in_subspace_V(extended_incidence(mask_of({1, 2}, 2), 2), 2, 1));
  CHECK(in_subspace_V(extended_incidence(mask_of({2, 3}, 4), 4), 4, 2));

  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (SubsetMask a = 0; a <= full_mask(n); ++a) {
        CHECK(in_subspace_V(extended_incidence(a, n), n, k) ==
              (mask_cardinality(a) == k));
      }
    }
  }

  CHECK(error_kind_of([] { in_subspace_V(vec({1, 0}), 2, 1); }) ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("sign_split partitions by sign and drops zeros") {
  const auto [p1, n1] = sign_split({BigRational(1), BigRational(-1, 2), BigRational(2)});
  CHECK(p1 == std::vector<int>{0, 2});
  CHECK(n1 == std::vector<int>{1});

  const auto [p2, n2] = sign_split({BigRational(0), BigRational(3), BigRational(-1)});
  CHECK(p2 == std::vector<int>{1});
  CHECK(n2 == std::vector<int>{2});

  CHECK(error_kind_of([] {
          sign_split({BigRational(1), BigRational(2), BigRational(0)});
        }) == ErrorKind::OneSidedRelation);
  CHECK(error_kind_of([] { sign_split({BigRational(0)}); }) ==
        ErrorKind::OneSidedRelation);
}

TEST_CASE("find_balanced_uniform returns a verified certificate") {
  const SetFamily family =
      make_family(4, {{1, 2}, {3, 4}, {1, 3}, {2, 4}, {1, 4}});
  const BalanceCertificate cert = find_balanced_uniform(family);
  CHECK(cert.mode == CertificateMode::Balanced);
  CHECK_FALSE(cert.i1.empty());
  CHECK_FALSE(cert.i2.empty());
  CHECK(verify_certificate(family, cert));
  CHECK(is_balanced(family));
  CHECK(find_balanced_uniform(family) == cert);  // deterministic

  const SetFamily all_pairs =
      make_family(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(verify_certificate(all_pairs, find_balanced_uniform(all_pairs)));
  CHECK(is_balanced(all_pairs));
}

TEST_CASE("find_balanced_uniform rejects unusable families") {
  CHECK(error_kind_of([] { find_balanced_uniform(gen_uniform_sharp(5)); }) ==
        ErrorKind::InsufficientFamily);
  CHECK(error_kind_of([] {
          find_balanced_uniform(make_family(2, {{}, {1}, {2}, {1, 2}}));
        }) == ErrorKind::NotUniform);
  CHECK(error_kind_of([] {
          find_balanced_uniform(SetFamily(2, {1, 1, 2, 3}, true));
        }) == ErrorKind::DuplicateMember);
}

TEST_CASE("find_balanced_general splits any big enough family") {
  // Deterministic pipeline on {∅,{1},{2},{1,2}}: kernel (1,-1,-1,1).
  const SetFamily family = make_family(2, {{}, {1}, {2}, {1, 2}});
  const BalanceCertificate cert = find_balanced_general(family);
  CHECK(cert.i1 == std::vector<int>{0, 3});
  CHECK(cert.i2 == std::vector<int>{1, 2});
  CHECK(cert.witnessed_union == mask_of({1, 2}, 2));
  CHECK(cert.witnessed_intersection == SubsetMask{0});
  CHECK(verify_certificate(family, cert));
  CHECK(is_balanced(family));

  const SetFamily bigger = make_family(3, {{1}, {2}, {3}, {1, 2}, {1, 2, 3}});
  CHECK(verify_certificate(bigger, find_balanced_general(bigger)));
  CHECK(is_balanced(bigger));

  CHECK(error_kind_of([] { find_balanced_general(gen_nonuniform_sharp(3)); }) ==
        ErrorKind::InsufficientFamily);
}

TEST_CASE("find_union_balanced follows the plain incidence pipeline") {
  // Kernel of the 3x4 incidence matrix of the singletons-plus-full family
  // under the deterministic free-variable rule is (-1,-1,-1,1).
  const BalanceCertificate cert = find_union_balanced(gen_nonuniform_sharp(3));
  CHECK(cert.mode == CertificateMode::Union);
  CHECK(cert.i1 == std::vector<int>{3});
  CHECK(cert.i2 == std::vector<int>{0, 1, 2});
  CHECK(cert.witnessed_union == full_mask(3));
  CHECK_FALSE(cert.witnessed_intersection.has_value());

  const SetFamily f = make_family(2, {{1}, {2}, {1, 2}});
  const BalanceCertificate c2 = find_union_balanced(f);
  CHECK(c2.i1 == std::vector<int>{2});
  CHECK(c2.i2 == std::vector<int>{0, 1});
  CHECK(verify_certificate(f, c2));

  CHECK(error_kind_of([] {
          find_union_balanced(make_family(3, {{1}, {2}, {3}}));
        }) == ErrorKind::InsufficientFamily);
  CHECK(error_kind_of([] {
          find_union_balanced(make_family(2, {{}, {1}, {2}, {1, 2}}));
        }) == ErrorKind::EmptySetMember);
}

TEST_CASE("verify_certificate recomputes everything") {
  const SetFamily f = make_family(2, {{1}, {2}, {1, 2}});

  BalanceCertificate union_cert{CertificateMode::Union, {2}, {0, 1},
                                mask_of({1, 2}, 2), std::nullopt};
  CHECK(verify_certificate(f, union_cert));

  BalanceCertificate balanced_cert{CertificateMode::Balanced, {2}, {0, 1},
                                   mask_of({1, 2}, 2), SubsetMask{0}};
  CHECK_FALSE(verify_certificate(f, balanced_cert));  // intersections differ

  BalanceCertificate overlapping{CertificateMode::Union, {0}, {0},
                                 mask_of({1}, 2), std::nullopt};
  CHECK_FALSE(verify_certificate(f, overlapping));

  BalanceCertificate empty_side{CertificateMode::Union, {}, {0}, 0, std::nullopt};
  CHECK_FALSE(verify_certificate(f, empty_side));

  BalanceCertificate out_of_range{CertificateMode::Union, {2}, {0, 5},
                                  mask_of({1, 2}, 2), std::nullopt};
  CHECK_FALSE(verify_certificate(f, out_of_range));

  BalanceCertificate unsorted{CertificateMode::Union, {2}, {1, 0},
                              mask_of({1, 2}, 2), std::nullopt};
  CHECK_FALSE(verify_certificate(f, unsorted));

  BalanceCertificate wrong_union{CertificateMode::Union, {2}, {0, 1},
                                 mask_of({1}, 2), std::nullopt};
  CHECK_FALSE(verify_certificate(f, wrong_union));

  BalanceCertificate union_with_intersection{CertificateMode::Union, {2}, {0, 1},
                                             mask_of({1, 2}, 2), SubsetMask{0}};
  CHECK_FALSE(verify_certificate(f, union_with_intersection));
}

TEST_CASE("kernels of extended incidence columns always carry both signs") {
  std::mt19937_64 rng(20240813);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 8)(rng);
    const std::size_t m = static_cast<std::size_t>(n) + 2;
    const SetFamily family(n, random_distinct_masks(rng, n, m, true));
    RationalMatrix columns(2 * static_cast<std::size_t>(n), m);
    for (std::size_t col = 0; col < m; ++col) {
      const auto v = extended_incidence(family.member(col), n);
      for (std::size_t row = 0; row < v.size(); ++row) {
        columns.at(row, col) = v.coords[row];
      }
    }
    const auto coeffs = kernel_vector(columns);
    REQUIRE(coeffs.has_value());
    bool has_positive = false;
    bool has_negative = false;
    for (const BigRational& c : *coeffs) {
      if (c > 0) has_positive = true;
      if (c < 0) has_negative = true;
    }
    CHECK(has_positive);
    CHECK(has_negative);
  }
}

TEST_CASE("finders agree with the oracle and the y-route intersection") {
  std::mt19937_64 rng(20240814);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 9)(rng);

    // general finder on n+2 arbitrary distinct subsets
    const SetFamily general(n, random_distinct_masks(
                                   rng, n, static_cast<std::size_t>(n) + 2, true));
    const BalanceCertificate cert = find_balanced_general(general);
    CHECK(verify_certificate(general, cert));
    CHECK(find_balanced_general(general) == cert);
    CHECK(is_balanced(general));
    CHECK(intersection_via_y_route(general, cert.i1) ==
          *cert.witnessed_intersection);
    CHECK(intersection_via_y_route(general, cert.i2) ==
          *cert.witnessed_intersection);

    // uniform finder on n+1 distinct k-subsets when enough exist
    const int k = std::uniform_int_distribution<int>(1, n - 1)(rng);
    std::uint64_t pool = 1;
    for (int i = 0; i < k; ++i) pool = pool * (n - i) / (i + 1);
    if (pool >= static_cast<std::uint64_t>(n) + 1) {
      const SetFamily uniform(
          n, random_distinct_k_subsets(rng, n, k, static_cast<std::size_t>(n) + 1));
      const BalanceCertificate u = find_balanced_uniform(uniform);
      CHECK(verify_certificate(uniform, u));
      CHECK(is_balanced(uniform));
      CHECK(intersection_via_y_route(uniform, u.i1) == *u.witnessed_intersection);
    }

    // union finder on n+1 nonempty distinct subsets
    const SetFamily nonempty(
        n, random_distinct_masks(rng, n, static_cast<std::size_t>(n) + 1, false));
    const BalanceCertificate w = find_union_balanced(nonempty);
    CHECK(verify_certificate(nonempty, w));
    CHECK(brute_force_find(nonempty, CertificateMode::Union, false).found.has_value());
  }
}

TEST_CASE("certificate JSON shape is bit-exact and round-trips") {
  BalanceCertificate cert{CertificateMode::Balanced, {0, 1}, {2, 3},
                          mask_of({1, 2, 3, 4}, 4), SubsetMask{0}};
  const std::string text = certificate_to_json(cert);
  CHECK(text ==
        R"({"mode":"balanced","i1":[0,1],"i2":[2,3],"union":[1,2,3,4],"intersection":[]})");
  CHECK(certificate_from_json(text) == cert);

  BalanceCertificate union_cert{CertificateMode::Union, {3}, {0, 1, 2},
                                full_mask(3), std::nullopt};
  const std::string union_text = certificate_to_json(union_cert);
  CHECK(union_text ==
        R"({"mode":"union","i1":[3],"i2":[0,1,2],"union":[1,2,3],"intersection":null})");
  CHECK(certificate_from_json(union_text) == union_cert);

  CHECK_FALSE(certificate_from_json("not json").has_value());
  CHECK_FALSE(certificate_from_json(R"({"mode":"balanced"})").has_value());
  CHECK_FALSE(certificate_from_json(
                  R"({"mode":"x","i1":[0],"i2":[1],"union":[],"intersection":null})")
                  .has_value());
  CHECK_FALSE(certificate_from_json(
                  R"({"mode":"union","i1":[0],"i2":[1],"union":[2,1],"intersection":null})")
                  .has_value());  // elements must ascend
  CHECK_FALSE(certificate_from_json(
                  R"({"mode":"union","i1":[0],"i2":[1],"union":[65],"intersection":null})")
                  .has_value());
}
