#pragma once

#include <cstdint>
#include <istream>
#include <string>

#include "panast/sentiment.hpp"

namespace panast {

/// Mergeable aggregation state: per-sentiment tweet counts plus totals.
struct SentimentCounts {
    PerSentiment<std::uint64_t> per_sentiment{};
    std::uint64_t total_normalized = 0;  // passed the mood filter
    std::uint64_t total_seen = 0;        // raw records read

    std::uint64_t classified() const noexcept;
    bool operator==(const SentimentCounts&) const = default;
};

/// Component-wise sum. Throws Error(Overflow) if any counter would wrap.
SentimentCounts merge_counts(const SentimentCounts& a, const SentimentCounts& b);

struct BaselineTable {
    PerSentiment<double> alpha{};
    std::string provenance;  // "bundled-table3" or "computed:<corpus-id>"
};

/// The reference baselines shipped with the engine.
const BaselineTable& bundled_baseline();

/// alpha[s] = count[s] / total_normalized. Throws EmptyCorpus or
/// DegenerateBaseline.
BaselineTable compute_baseline(const SentimentCounts& counts, std::string provenance = "computed");

/// Parses `<sentiment>\t<alpha>` lines. Throws Error(InvalidBaseline) on any
/// missing or repeated sentiment, non-positive alpha, or sum >= 1.
BaselineTable parse_baseline(std::istream& in, std::string provenance);
BaselineTable load_baseline_file(const std::string& path);

/// Checks every alpha > 0 and sum < 1. Throws Error(InvalidBaseline).
void check_baseline(const BaselineTable& table);

/// Serializes in the bundled file format, 7 decimals per value.
std::string format_baseline(const BaselineTable& table);

/// beta[s] = count[s] / total_normalized. Throws EmptyEvent when the total
/// is zero.
PerSentiment<double> relative_occurrence(const SentimentCounts& counts);

enum class SignConvention {
    // Positive means the sentiment increased relative to the baseline.
    Prose,
    // The formula as typeset: positive when beta <= alpha.
    PrintedEq3,
};

std::string_view name(SignConvention convention) noexcept;

/// Relative change of beta against alpha, in [-1, 1) under the Prose
/// convention. Throws Error(InvalidBaseline) when alpha <= 0.
double panas_score(double alpha, double beta, SignConvention convention = SignConvention::Prose);

struct ScoreComponent {
    double alpha = 0.0;
    double beta = 0.0;
    double p = 0.0;
};

struct ScoreVector {
    PerSentiment<ScoreComponent> scores{};
    std::uint64_t event_size = 0;
    std::string provenance;
    SignConvention convention = SignConvention::Prose;

    const ScoreComponent& operator[](Sentiment s) const { return scores[ordinal(s)]; }
};

ScoreVector score_vector(const BaselineTable& baseline, const SentimentCounts& counts,
                         SignConvention convention = SignConvention::Prose);

}  // namespace panast
