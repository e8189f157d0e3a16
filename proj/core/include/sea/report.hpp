#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "sea/effect_algebra.hpp"
#include "sea/suite.hpp"

namespace sea {

using Json = nlohmann::ordered_json;

/// Machine-readable run report with a stable, versioned schema. Deterministic
/// for fixed (inputs, seed): the timestamp is the only varying field and is
/// excluded from the digest.
class Report {
public:
    Report(std::string command, std::vector<std::string> args, std::uint64_t seed);

    void add_input_file(const std::string& path, const std::string& content);
    void add_verdict(const std::string& name, bool pass,
                     const std::string& detail = "");
    void add_suite(const SuiteReport& suite);
    void set_statistic(const std::string& key, const Json& value);

    bool all_pass() const;
    Json to_json() const;
    std::string digest() const;  // FNV-1a over command, args, inputs, seed

private:
    std::string command_;
    std::vector<std::string> args_;
    std::uint64_t seed_;
    std::vector<std::pair<std::string, std::string>> inputs_;
    Json verdicts_ = Json::array();
    Json statistics_ = Json::object();
};

Json axiom_report_json(const AxiomReport& report);
Json sea_report_json(const SeaReport& report);
Json table_json(const FiniteEffectAlgebra& ea, const SeqProductTable& t);

void write_report_file(const Report& report, const std::string& path);

}  // namespace sea
