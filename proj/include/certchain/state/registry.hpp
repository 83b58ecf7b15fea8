/*
   Copyright 2026 The Certchain Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <string>
#include <string_view>

#include <certchain/state/world_state.hpp>

namespace certchain {

// Public projection of a certificate. All four fields are empty when the
// certificate does not exist.
struct PublicCertificate {
    std::string cert_no;
    std::string name;
    std::string programme;
    std::string convo_date;

    [[nodiscard]] bool empty() const { return cert_no.empty() && name.empty() && programme.empty() && convo_date.empty(); }

    friend bool operator==(const PublicCertificate&, const PublicCertificate&) = default;
};

enum class AddOutcome {
    kAdded,
    kNotRegistrar,
    kDuplicate,
    kEmptyStudentId,
};

std::string_view add_outcome_reason(AddOutcome outcome);

// Registrar-only insert. Checks, in order: caller is the registrar, certNo is
// not already stored, studentId is non-empty. State is untouched unless the
// result is kAdded.
AddOutcome add_certificate_checked(WorldState& state, const Address& caller, CertificateRecord rec);

inline bool add_certificate(WorldState& state, const Address& caller, CertificateRecord rec) {
    return add_certificate_checked(state, caller, std::move(rec)) == AddOutcome::kAdded;
}

// An empty studentId is the non-existence sentinel.
PublicCertificate read_certificate_public(const WorldState& state, const std::string& cert_no);

bool is_valid_certificate(const WorldState& state, const std::string& cert_no);

uint64_t get_list_certificate_status(const WorldState& state);

// Builds a record from the seven addCertificate arguments, in call order:
// certNo, name, ic, studentId, programme, convoDate, semesterFinish.
CertificateRecord record_from_args(const std::vector<std::string>& args);
std::vector<std::string> record_to_args(const CertificateRecord& rec);

}  // namespace certchain
