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

#include <certchain/loadgen/dataset.hpp>

#include <array>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include <json.hpp>

namespace certchain::loadgen {

namespace {

    using Json = nlohmann::ordered_json;

    constexpr std::array kGivenNames{"Aisyah", "Ahmad",  "Mei Ling", "Ravi",   "Nurul",   "Daniel", "Siti",
                                     "Jun Wei", "Priya", "Hafiz",    "Li Na",  "Arjun",   "Farah",  "Kumar",
                                     "Wei Jie", "Zara",  "Imran",    "Yee Ting", "Suresh", "Amira"};
    constexpr std::array kFamilyNames{"Abdullah", "Tan",   "Lim",     "Rahman", "Wong",   "Ismail", "Ng",
                                      "Subramaniam", "Lee", "Hassan", "Chong",  "Krishnan", "Yusof", "Ong"};
    constexpr std::array kProgrammes{"Bachelor of Computer Science",
                                     "Bachelor of Information Technology",
                                     "Diploma in Software Engineering",
                                     "Bachelor of Business Administration",
                                     "Master of Data Science",
                                     "Diploma in Multimedia Design",
                                     "Bachelor of Accounting",
                                     "Master of Information Security"};
    constexpr std::array kConvoDates{"2018-10-20", "2019-04-13", "2019-10-19", "2020-11-28", "2021-10-16",
                                     "2022-04-23", "2022-10-22", "2023-10-21", "2024-04-20", "2024-10-19"};

    template <typename Pool>
    const char* pick(std::mt19937_64& rng, const Pool& pool) {
        return pool[rng() % pool.size()];
    }

    std::string digits(std::mt19937_64& rng, int width) {
        std::string s;
        for (int i = 0; i < width; ++i) s.push_back(static_cast<char>('0' + rng() % 10));
        return s;
    }

    std::string two(uint64_t v) { return (v < 10 ? "0" : "") + std::to_string(v); }

}  // namespace

CertificateDataset generate_dataset(size_t n, uint64_t seed) {
    if (n == 0) throw std::invalid_argument{"generate_dataset: n must be at least 1"};
    std::mt19937_64 rng{seed};
    std::ostringstream suffix;
    suffix << std::hex << std::uppercase << std::setw(4) << std::setfill('0') << (rng() & 0xffff);

    CertificateDataset out{seed, {}};
    out.records.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        CertificateRecord r;
        std::ostringstream cert_no;
        cert_no << "CERT-" << std::setw(6) << std::setfill('0') << (i + 1) << "-" << suffix.str();
        r.cert_no = cert_no.str();
        r.name = std::string{pick(rng, kGivenNames)} + " " + pick(rng, kFamilyNames);
        uint64_t year = 95 + rng() % 10;  // born 1995..2004
        r.ic = two(year % 100) + two(1 + rng() % 12) + two(1 + rng() % 28) + "-" + two(1 + rng() % 16) + "-" +
               digits(rng, 4);
        r.student_id = "S" + digits(rng, 8);
        r.programme = pick(rng, kProgrammes);
        r.convo_date = pick(rng, kConvoDates);
        r.semester_finish = std::to_string(2017 + rng() % 8) + "/" + std::to_string(1 + rng() % 2);
        out.records.push_back(std::move(r));
    }
    return out;
}

std::string dataset_to_jsonl(const std::vector<CertificateRecord>& records) {
    std::string out;
    for (const CertificateRecord& r : records) {
        Json j{{"certNo", r.cert_no},       {"name", r.name},           {"ic", r.ic},
               {"studentId", r.student_id}, {"programme", r.programme}, {"convoDate", r.convo_date},
               {"semesterFinish", r.semester_finish}};
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::vector<CertificateRecord> dataset_from_jsonl(const std::string& text) {
    std::vector<CertificateRecord> out;
    std::istringstream in{text};
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            Json j = Json::parse(line);
            out.push_back(CertificateRecord{j.at("certNo").get<std::string>(), j.at("name").get<std::string>(),
                                            j.at("ic").get<std::string>(), j.at("studentId").get<std::string>(),
                                            j.at("programme").get<std::string>(), j.at("convoDate").get<std::string>(),
                                            j.at("semesterFinish").get<std::string>()});
        } catch (const std::exception& e) {
            throw LoadError{"dataset line " + std::to_string(line_no) + ": " + e.what()};
        }
    }
    return out;
}

void write_dataset(const std::vector<CertificateRecord>& records, const std::filesystem::path& path) {
    std::ofstream out{path, std::ios::binary | std::ios::trunc};
    if (!out) throw LoadError{"cannot write " + path.string()};
    out << dataset_to_jsonl(records);
    if (!out.flush()) throw LoadError{"write failed for " + path.string()};
}

std::vector<CertificateRecord> load_dataset(const std::filesystem::path& path) {
    std::ifstream in{path, std::ios::binary};
    if (!in) throw LoadError{"cannot read " + path.string()};
    std::ostringstream text;
    text << in.rdbuf();
    return dataset_from_jsonl(text.str());
}

}  // namespace certchain::loadgen
