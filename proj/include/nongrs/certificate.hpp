// SPDX-License-Identifier: Apache-2.0

#ifndef NONGRS_CERTIFICATE_HPP
#define NONGRS_CERTIFICATE_HPP

#include <string>

#include "json.hpp"

namespace nongrs {

enum class Verdict { Pass, Fail, Inconclusive };

enum class CertKind { Mds, NonGrs, Distance, Condition, OMonomial, Parity, CoveringRadius };

std::string to_string(Verdict v);
std::string to_string(CertKind k);
Verdict verdict_from_string(const std::string& s);
CertKind cert_kind_from_string(const std::string& s);

/// Machine-checkable verdict. A Fail always carries a witness that can be
/// re-verified without trusting the code that produced it.
struct Certificate {
    Verdict verdict = Verdict::Inconclusive;
    CertKind kind = CertKind::Mds;
    nlohmann::json witness;  // null unless there is something to show
    nlohmann::json params = nlohmann::json::object();

    bool passed() const { return verdict == Verdict::Pass; }
    bool failed() const { return verdict == Verdict::Fail; }

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

void to_json(nlohmann::json& j, const Certificate& c);
void from_json(const nlohmann::json& j, Certificate& c);

}  // namespace nongrs

#endif
