#include "qbrauer/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace qbrauer {

namespace {

constexpr std::pair<Verdict, std::string_view> kVerdicts[] = {
    {Verdict::pass, "pass"},
    {Verdict::fail, "fail"},
    {Verdict::skipped, "skipped"},
    {Verdict::observed, "observed"},
};

}  // namespace

std::string_view verdict_name(Verdict v) {
    for (const auto& [verdict, name] : kVerdicts)
        if (verdict == v) return name;
    return "?";
}

std::optional<Verdict> parse_verdict(std::string_view text) {
    for (const auto& [verdict, name] : kVerdicts)
        if (name == text) return verdict;
    return std::nullopt;
}

bool any_failure(const std::vector<RelationReport>& reports) {
    return std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.verdict == Verdict::fail; });
}

std::string to_text(const std::vector<RelationReport>& reports) {
    std::string out;
    for (const auto& r : reports) {
        out += r.suite + " " + r.relation_id + " n=" + std::to_string(r.n) + " l=" + std::to_string(r.l);
        if (!r.specialization.empty()) out += " " + r.specialization;
        out += " ";
        out += verdict_name(r.verdict);
        out += " residual_nonzeros=" + std::to_string(r.residual_nonzeros);
        if (!r.residual_sample.empty()) out += " sample={" + r.residual_sample + "}";
        if (!r.note.empty()) out += " note=\"" + r.note + "\"";
        out += '\n';
    }
    return out;
}

std::string to_json(const std::vector<RelationReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        arr.push_back({
            {"suite", r.suite},
            {"relation_id", r.relation_id},
            {"n", r.n},
            {"l", r.l},
            {"specialization", r.specialization},
            {"verdict", verdict_name(r.verdict)},
            {"residual_nonzeros", r.residual_nonzeros},
            {"residual_sample", r.residual_sample},
            {"note", r.note},
        });
    }
    return arr.dump(2) + "\n";
}

std::vector<RelationReport> reports_from_json(std::string_view text) {
    std::vector<RelationReport> out;
    try {
        auto arr = nlohmann::json::parse(text);
        if (!arr.is_array()) throw std::invalid_argument("report JSON must be an array");
        for (const auto& obj : arr) {
            RelationReport r;
            r.suite = obj.at("suite").get<std::string>();
            r.relation_id = obj.at("relation_id").get<std::string>();
            r.n = obj.at("n").get<int>();
            r.l = obj.at("l").get<int>();
            r.specialization = obj.value("specialization", "");
            auto v = parse_verdict(obj.at("verdict").get<std::string>());
            if (!v) throw std::invalid_argument("unknown verdict in report JSON");
            r.verdict = *v;
            r.residual_nonzeros = obj.at("residual_nonzeros").get<std::size_t>();
            r.residual_sample = obj.value("residual_sample", "");
            r.note = obj.value("note", "");
            out.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report JSON: ") + e.what());
    }
    return out;
}

}  // namespace qbrauer
