#include "sea/report.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace sea {

namespace {

constexpr const char* kToolName = "sea-workbench";
constexpr const char* kToolVersion = "0.1.0";

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
    for (const unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%FT%TZ");
    return os.str();
}

}  // namespace

Report::Report(std::string command, std::vector<std::string> args,
               std::uint64_t seed)
    : command_(std::move(command)), args_(std::move(args)), seed_(seed) {}

void Report::add_input_file(const std::string& path, const std::string& content) {
    inputs_.emplace_back(path, content);
}

void Report::add_verdict(const std::string& name, bool pass,
                         const std::string& detail) {
    Json v;
    v["name"] = name;
    v["pass"] = pass;
    if (!detail.empty()) v["detail"] = detail;
    verdicts_.push_back(std::move(v));
}

void Report::add_suite(const SuiteReport& suite) {
    for (const auto& line : suite.lines) {
        Json v;
        v["name"] = suite.suite.empty() ? line.name : suite.suite + ": " + line.name;
        v["pass"] = line.pass;
        if (line.worst > 0) v["worst_residual"] = line.worst;
        if (!line.detail.empty()) v["detail"] = line.detail;
        verdicts_.push_back(std::move(v));
    }
}

void Report::set_statistic(const std::string& key, const Json& value) {
    statistics_[key] = value;
}

bool Report::all_pass() const {
    for (const auto& v : verdicts_)
        if (!v.at("pass").get<bool>()) return false;
    return true;
}

std::string Report::digest() const {
    std::uint64_t h = 14695981039346656037ULL;
    h = fnv1a(h, command_);
    for (const auto& a : args_) h = fnv1a(h, a);
    for (const auto& [path, content] : inputs_) {
        h = fnv1a(h, path);
        h = fnv1a(h, content);
    }
    h = fnv1a(h, std::to_string(seed_));
    std::ostringstream os;
    os << "fnv1a:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

Json Report::to_json() const {
    Json j;
    j["schema"] = 1;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command_;
    j["args"] = args_;
    Json files = Json::array();
    for (const auto& [path, content] : inputs_) files.push_back(path);
    j["inputs"] = Json{{"files", files}, {"digest", digest()}};
    j["seed"] = seed_;
    j["verdicts"] = verdicts_;
    j["statistics"] = statistics_;
    j["pass"] = all_pass();
    j["timestamp"] = timestamp_utc();
    return j;
}

Json axiom_report_json(const AxiomReport& report) {
    Json j = Json::array();
    for (const auto& c : report.checks) {
        Json item;
        item["axiom"] = c.axiom;
        item["pass"] = c.pass;
        if (!c.witness.empty()) item["witness"] = c.witness;
        j.push_back(std::move(item));
    }
    return j;
}

Json sea_report_json(const SeaReport& report) {
    Json j;
    j["checks"] = axiom_report_json(report);
    j["commutative"] = report.commutative;
    return j;
}

Json table_json(const FiniteEffectAlgebra& ea, const SeqProductTable& t) {
    Json rows = Json::array();
    for (ElemId a = 0; a < ea.size(); ++a) {
        Json row = Json::array();
        for (ElemId b = 0; b < ea.size(); ++b)
            row.push_back(ea.element_name(t.at(a, b)));
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_report_file(const Report& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw StructuralError("cannot write report to '" + path + "'");
    out << report.to_json().dump(2) << "\n";
}

}  // namespace sea
