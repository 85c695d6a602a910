// Versioned JSON run records. Numeric payloads are stored as decimal strings
// at round-trip precision (and d always as the exact fraction "p/q"), so
// serialising and re-reading a record is lossless.
#ifndef EIGENROOT_RUN_RECORD_HPP
#define EIGENROOT_RUN_RECORD_HPP

#include <map>
#include <string>

#include <json.hpp>

#include "eigenroot/operator.hpp"
#include "eigenroot/version.hpp"

namespace eigenroot {

using Json = nlohmann::ordered_json;

struct RunRecord {
    int schema_version = 1;
    std::string tool_version = kToolVersion;
    std::string command;
    std::string operator_text;
    std::string kind;
    int j0 = 0;
    std::string d;  // exact fraction "p/q"
    std::vector<int> A;
    int jm = 0;
    std::map<std::string, std::string> parameters;
    Json results = Json::array();
    long timing_ms = 0;
};

inline Json to_json(const RunRecord& rec) {
    Json j;
    j["schema_version"] = rec.schema_version;
    j["tool_version"] = rec.tool_version;
    j["command"] = rec.command;
    j["operator"] = rec.operator_text;
    j["classification"] = {
        {"kind", rec.kind}, {"j0", rec.j0}, {"d", rec.d}, {"A", rec.A}, {"jm", rec.jm}};
    j["parameters"] = rec.parameters;
    j["results"] = rec.results;
    j["timing_ms"] = rec.timing_ms;
    return j;
}

inline RunRecord run_record_from_json(const Json& j) {
    RunRecord rec;
    rec.schema_version = j.at("schema_version").get<int>();
    rec.tool_version = j.at("tool_version").get<std::string>();
    rec.command = j.at("command").get<std::string>();
    rec.operator_text = j.at("operator").get<std::string>();
    const Json& cls = j.at("classification");
    rec.kind = cls.at("kind").get<std::string>();
    rec.j0 = cls.at("j0").get<int>();
    rec.d = cls.at("d").get<std::string>();
    rec.A = cls.at("A").get<std::vector<int>>();
    rec.jm = cls.at("jm").get<int>();
    rec.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
    rec.results = j.at("results");
    rec.timing_ms = j.at("timing_ms").get<long>();
    return rec;
}

inline RunRecord make_run_record(const std::string& command, const std::string& operator_text,
                                 const OperatorClassification& cls) {
    RunRecord rec;
    rec.command = command;
    rec.operator_text = operator_text;
    switch (cls.kind) {
        case OperatorKind::degenerate: rec.kind = "degenerate"; break;
        case OperatorKind::non_degenerate: rec.kind = "non-degenerate"; break;
        case OperatorKind::invalid: rec.kind = "invalid"; break;
    }
    if (cls.kind == OperatorKind::degenerate) {
        rec.j0 = cls.j0;
        rec.d = fraction_string(cls.d);
        rec.A.assign(cls.A.begin(), cls.A.end());
        rec.jm = cls.jm;
    }
    return rec;
}

} // namespace eigenroot

#endif
