#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "homtrees/sidorenko.hpp"

namespace homtrees {

// Versioned line-oriented text document. All counts are decimal strings,
// bounds are round-trippable doubles. Line 1 is the schema tag.
inline constexpr std::string_view kCertificateSchema = "homtrees-cert v1";

std::string serialize_certificate(const TransformCertificate& cert);

// Structural parse only; validity is established by check_certificate.
TransformCertificate parse_certificate(std::string_view text);

// Re-derives every recorded count, identity and bound from the recorded
// trees and image, and re-checks the inequality chain.
struct CertificateCheck {
    bool ok = true;
    std::vector<std::string> failures;
};
CertificateCheck check_certificate(const TransformCertificate& cert,
                                   double rel_tol = 1e-9);

} // namespace homtrees
