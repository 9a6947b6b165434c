#pragma once

#include <utility>

#include "json.hpp"

#include "balfam/balancer.hpp"
#include "balfam/family.hpp"

namespace balfam::detail {

inline nlohmann::ordered_json family_to_json_object(const SetFamily& family) {
  nlohmann::ordered_json doc;
  doc["n"] = family.n();
  if (family.allow_duplicates()) doc["allow_duplicates"] = true;
  auto sets = nlohmann::ordered_json::array();
  for (SubsetMask m : family.members()) sets.push_back(mask_elements(m));
  doc["sets"] = std::move(sets);
  return doc;
}

inline nlohmann::ordered_json certificate_to_json_object(
    const BalanceCertificate& cert) {
  nlohmann::ordered_json doc;
  doc["mode"] = cert.mode == CertificateMode::Balanced ? "balanced" : "union";
  doc["i1"] = cert.i1;
  doc["i2"] = cert.i2;
  doc["union"] = mask_elements(cert.witnessed_union);
  if (cert.witnessed_intersection) {
    doc["intersection"] = mask_elements(*cert.witnessed_intersection);
  } else {
    doc["intersection"] = nullptr;
  }
  return doc;
}

}  // namespace balfam::detail
