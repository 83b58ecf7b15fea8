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

#include <certchain/state/registry.hpp>

#include <stdexcept>

namespace certchain {

std::string_view add_outcome_reason(AddOutcome outcome) {
    switch (outcome) {
        case AddOutcome::kAdded:
            return "";
        case AddOutcome::kNotRegistrar:
            return "not registrar";
        case AddOutcome::kDuplicate:
            return "duplicate";
        case AddOutcome::kEmptyStudentId:
            return "empty studentId";
    }
    return "unknown";
}

AddOutcome add_certificate_checked(WorldState& state, const Address& caller, CertificateRecord rec) {
    if (caller != state.registrar()) return AddOutcome::kNotRegistrar;
    if (is_valid_certificate(state, rec.cert_no)) return AddOutcome::kDuplicate;
    // A record stored with an empty studentId could never be read back.
    if (rec.student_id.empty()) return AddOutcome::kEmptyStudentId;
    state.insert_certificate(std::move(rec));
    return AddOutcome::kAdded;
}

PublicCertificate read_certificate_public(const WorldState& state, const std::string& cert_no) {
    const CertificateRecord* rec = state.find_certificate(cert_no);
    if (rec == nullptr || rec->student_id.empty()) return {};
    return PublicCertificate{cert_no, rec->name, rec->programme, rec->convo_date};
}

bool is_valid_certificate(const WorldState& state, const std::string& cert_no) {
    return state.find_certificate(cert_no) != nullptr;
}

uint64_t get_list_certificate_status(const WorldState& state) { return state.cert_count(); }

CertificateRecord record_from_args(const std::vector<std::string>& args) {
    if (args.size() != 7) throw std::invalid_argument("addCertificate takes 7 arguments");
    return CertificateRecord{args[0], args[1], args[2], args[3], args[4], args[5], args[6]};
}

std::vector<std::string> record_to_args(const CertificateRecord& rec) {
    return {rec.cert_no, rec.name, rec.ic, rec.student_id, rec.programme, rec.convo_date, rec.semester_finish};
}

}  // namespace certchain
