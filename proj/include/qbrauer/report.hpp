#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qbrauer {

/// observed marks a recorded fact that is not a claimed identity (for
/// instance whether two operators happen to commute); it never counts as a
/// failure.
enum class Verdict { pass, fail, skipped, observed };

std::string_view verdict_name(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view text);

/// Outcome of one relation instance. pass holds exactly when the residual
/// has no nonzero entries; skipped reports carry their reason in `note`.
struct RelationReport {
    std::string suite;
    std::string relation_id;
    int n = 0;
    int l = 0;
    std::string specialization;  // e.g. "q=5/3", "eta=symbolic"; empty when symbolic in q
    Verdict verdict = Verdict::pass;
    std::size_t residual_nonzeros = 0;
    std::string residual_sample;
    std::string note;

    friend bool operator==(const RelationReport&, const RelationReport&) = default;
};

bool any_failure(const std::vector<RelationReport>& reports);

/// One line per report:
/// "<suite> <relation_id> n=<n> l=<l> <verdict> residual_nonzeros=<k> [...]".
std::string to_text(const std::vector<RelationReport>& reports);

/// JSON array of objects with keys suite, relation_id, n, l, specialization,
/// verdict, residual_nonzeros, residual_sample, note.
std::string to_json(const std::vector<RelationReport>& reports);
/// Throws std::invalid_argument on malformed input.
std::vector<RelationReport> reports_from_json(std::string_view text);

}  // namespace qbrauer
