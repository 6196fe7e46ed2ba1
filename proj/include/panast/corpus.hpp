#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "panast/classify.hpp"
#include "panast/line_source.hpp"
#include "panast/normalize.hpp"
#include "panast/score.hpp"

namespace panast {

/// Parses one newline-delimited JSON record with fields id, created_at, text
/// and optional lang, region. nullopt for malformed records: invalid JSON,
/// missing or empty id, unparseable timestamp, text over kMaxTextBytes.
std::optional<TweetRecord> parse_record(std::string_view line);

/// Serializes a record in the same format (used by corpus generators).
std::string format_record(const TweetRecord& record);

/// Lazy, in-order sequence of records. Malformed lines are tallied and
/// skipped; blank lines are ignored entirely.
class RecordReader {
public:
    explicit RecordReader(LineSource& source) : source_(source) {}

    std::optional<TweetRecord> next();

    std::uint64_t seen() const noexcept { return seen_; }
    std::uint64_t parsed() const noexcept { return parsed_; }
    std::uint64_t malformed() const noexcept { return seen_ - parsed_; }

private:
    LineSource& source_;
    std::string line_;
    std::uint64_t seen_ = 0;
    std::uint64_t parsed_ = 0;
};

struct IngestReport {
    std::uint64_t total_seen = 0;
    std::uint64_t total_parsed = 0;
    std::uint64_t total_mood_filtered = 0;
    std::uint64_t total_classified = 0;
    PerSentiment<std::uint64_t> per_sentiment{};
    double elapsed_seconds = 0.0;
    double records_per_second = 0.0;
    std::size_t workers = 1;

    std::uint64_t malformed() const noexcept { return total_seen - total_parsed; }
    double mood_filter_rate() const noexcept;
};

/// Shared read-only inputs for a processing run.
struct Pipeline {
    const StemmedLexicon& lexicon;
    const StopWords& stopwords;
};

struct CountResult {
    SentimentCounts counts;
    IngestReport report;
};

/// Parse, normalize, and classify every line of `source` across `workers`
/// threads. Counts are identical for every worker count.
CountResult count_sentiments(LineSource& source, const Pipeline& pipeline, std::size_t workers);

/// Per-term count of mood-filtered tweets containing the term. A tweet
/// containing several terms increments each once.
struct TermFrequencyTable {
    // Indexed by StemmedLexicon entry index.
    std::vector<std::uint64_t> counts;
    std::uint64_t tweets = 0;  // mood-filtered tweets scanned

    bool operator==(const TermFrequencyTable&) const = default;
};

TermFrequencyTable term_frequencies(LineSource& source, const Pipeline& pipeline,
                                    std::size_t workers = 1);

/// Adds the contribution of one record to `counts`/`report` (no timing).
/// Exposed so other aggregations share the exact per-record logic.
struct RecordOutcome {
    bool parsed = false;
    bool mood = false;
    std::optional<Sentiment> sentiment;
};
RecordOutcome classify_record(const TweetRecord& record, const Pipeline& pipeline);

void tally(SentimentCounts& counts, const RecordOutcome& outcome);
void tally(IngestReport& report, const RecordOutcome& outcome);
void merge_into(IngestReport& into, const IngestReport& from);

}  // namespace panast
