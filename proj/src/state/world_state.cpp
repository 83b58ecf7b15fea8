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

#include <certchain/state/world_state.hpp>

namespace certchain {

AccountState WorldState::account(const Address& a) const {
    auto it = accounts_.find(a);
    return it == accounts_.end() ? AccountState{} : it->second;
}

const CertificateRecord* WorldState::find_certificate(const std::string& cert_no) const {
    auto it = certificates_.find(cert_no);
    return it == certificates_.end() ? nullptr : it->second.get();
}

bool WorldState::insert_certificate(CertificateRecord rec) {
    std::string key = rec.cert_no;
    auto [it, inserted] = certificates_.try_emplace(std::move(key), nullptr);
    if (!inserted) return false;
    it->second = std::make_shared<const CertificateRecord>(std::move(rec));
    ++cert_count_;
    return true;
}

Amount WorldState::total_balance() const {
    Amount total = 0;
    for (const auto& [addr, acct] : accounts_) total += acct.balance;
    return total;
}

bool operator==(const WorldState& a, const WorldState& b) {
    if (a.accounts_ != b.accounts_ || a.cert_count_ != b.cert_count_ || a.registrar_ != b.registrar_ ||
        a.certificates_.size() != b.certificates_.size()) {
        return false;
    }
    auto it = b.certificates_.begin();
    for (const auto& [key, rec] : a.certificates_) {
        if (key != it->first || *rec != *it->second) return false;
        ++it;
    }
    return true;
}

WorldState genesis_state(const ChainConfig& config) {
    config.validate();
    WorldState state{config.registrar};
    for (const Allocation& alloc : config.allocations) state.mutable_account(alloc.address).balance = alloc.balance;
    return state;
}

Hash32 commit_state(const WorldState& state) {
    Writer w;
    w.raw(as_bytes("certchain/state/v1"));
    w.u64(state.accounts().size());
    for (const auto& [addr, acct] : state.accounts()) {
        w.raw(addr.bytes);
        w.u128(acct.balance);
        w.u64(acct.nonce);
    }
    // std::map<std::string> orders by char_traits<char>::compare, i.e. unsigned bytes.
    w.u64(state.certificates().size());
    for (const auto& [key, rec] : state.certificates()) {
        w.str32(rec->cert_no);
        w.str32(rec->name);
        w.str32(rec->ic);
        w.str32(rec->student_id);
        w.str32(rec->programme);
        w.str32(rec->convo_date);
        w.str32(rec->semester_finish);
    }
    w.u64(state.cert_count());
    w.raw(state.registrar().bytes);
    return keccak256(w.bytes());
}

}  // namespace certchain
