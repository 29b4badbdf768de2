#pragma once

#include "hookspecht/relations.hpp"
#include "hookspecht/solver.hpp"
#include "hookspecht/sweep.hpp"

#include "json.hpp"

#include <string>

namespace hookspecht {

inline constexpr const char* kSchema = "hook-specht/1";

inline nlohmann::json to_json(const HomWitness& w) {
    return {{"case", to_string(w.form)},
            {w.form == WitnessCase::III ? "n" : "c", w.c_or_n},
            {"a", w.a},
            {"m", w.m}};
}

inline HomWitness witness_from_json(const nlohmann::json& j) {
    HomWitness w;
    std::string c = j.at("case").get<std::string>();
    w.form = c == "i" ? WitnessCase::I : c == "ii" ? WitnessCase::II : WitnessCase::III;
    w.c_or_n = j.contains("c") ? j.at("c").get<int>() : j.at("n").get<int>();
    w.a = j.at("a").get<std::vector<long>>();
    w.m = j.at("m").get<int>();
    return w;
}

inline nlohmann::json to_json(const HomCertificate& cert) {
    nlohmann::json j{{"schema", kSchema},
                     {"type", "certificate"},
                     {"method", cert.method},
                     {"mu", cert.mu},
                     {"d", cert.d},
                     {"k", cert.k},
                     {"e", cert.e},
                     {"char", cert.characteristic},
                     {"dimension", cert.dimension}};
    if (cert.witness) {
        nlohmann::json w = to_json(*cert.witness);
        for (auto& [key, value] : w.items()) j[key] = value;
    }
    if (!cert.matches.empty()) {
        j["matches"] = nlohmann::json::array();
        for (const HomWitness& w : cert.matches) j["matches"].push_back(to_json(w));
        j["Gc"] = cert.gc;
    }
    if (cert.degree) j["degree"] = *cert.degree;
    if (!cert.sigma.empty()) j["sigma"] = cert.sigma;
    if (cert.agreement) j["agreement"] = *cert.agreement;
    return j;
}

inline HomCertificate certificate_from_json(const nlohmann::json& j) {
    HomCertificate cert;
    cert.method = j.at("method").get<std::string>();
    cert.mu = j.at("mu").get<std::string>();
    cert.d = j.at("d").get<int>();
    cert.k = j.at("k").get<int>();
    cert.e = j.at("e").get<int>();
    cert.characteristic = j.at("char").get<long>();
    cert.dimension = j.at("dimension").get<int>();
    if (j.contains("matches")) {
        for (const auto& w : j.at("matches")) cert.matches.push_back(witness_from_json(w));
        cert.gc = j.at("Gc").get<std::string>();
    }
    if (j.contains("case") && cert.dimension == 1)
        cert.witness = witness_from_json(j);
    if (j.contains("degree")) cert.degree = j.at("degree").get<int>();
    if (j.contains("sigma")) cert.sigma = j.at("sigma").get<std::vector<int>>();
    if (j.contains("agreement")) cert.agreement = j.at("agreement").get<bool>();
    return cert;
}

inline nlohmann::json to_json(const SweepRow& row) {
    nlohmann::json j{{"schema", kSchema},
                     {"type", "row"},
                     {"d", row.d},
                     {"k", row.k},
                     {"e", row.e},
                     {"char", row.characteristic},
                     {"mu", row.mu},
                     {"lambda", row.lambda},
                     {"dim_bruteforce", row.dim_bruteforce},
                     {"dim_classify", row.dim_classify},
                     {"case", row.witness_case},
                     {"Gc", row.gc},
                     {"agreement", row.agreement}};
    if (row.degree) j["degree"] = *row.degree;
    return j;
}

inline std::string csv_header() {
    return "d,k,e,char,mu,lambda,dim_bruteforce,dim_classify,case,Gc,degree,agreement";
}

inline std::string to_csv(const SweepRow& row) {
    std::string out;
    out += std::to_string(row.d) + ',' + std::to_string(row.k) + ',' +
           std::to_string(row.e) + ',' + std::to_string(row.characteristic) + ',';
    out += '"' + row.mu + "\",\"" + row.lambda + "\",";
    out += std::to_string(row.dim_bruteforce) + ',' + std::to_string(row.dim_classify) + ',';
    out += row.witness_case + ',' + (row.gc.empty() ? "" : row.gc) + ',';
    out += (row.degree ? std::to_string(*row.degree) : "") + ',';
    out += row.agreement ? "true" : "false";
    return out;
}

inline nlohmann::json to_json(const RelationReport& report) {
    nlohmann::json families = nlohmann::json::object();
    for (const auto& [family, count] : report.checked) {
        long bad = report.failed.count(family) ? report.failed.at(family) : 0;
        families[family] = {{"checked", count}, {"failed", bad}};
    }
    return {{"schema", kSchema},
            {"type", "relation-report"},
            {"families", families},
            {"ok", report.ok()}};
}

} // namespace hookspecht
