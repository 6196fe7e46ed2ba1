#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "panast/classify.hpp"
#include "panast/corpus.hpp"
#include "panast/events.hpp"
#include "panast/score.hpp"

namespace panast {

/// Rounds to 7 decimal places, the precision of every reported number.
double round7(double v) noexcept;

struct RunInfo {
    std::string event;  // empty for whole-corpus runs
    std::string stemmer;
};

// Score vectors ---------------------------------------------------------

std::string score_table(const ScoreVector& v, const RunInfo& info);
std::string score_csv(const ScoreVector& v);
nlohmann::json score_json(const ScoreVector& v, const RunInfo& info);

/// Inverse of score_json. Throws Error(Config) on schema violations.
ScoreVector score_vector_from_json(const nlohmann::json& doc);

// Time series -----------------------------------------------------------

/// Columns date,sentiment,alpha,beta,p,n; a leading region column when the
/// result was split by region.
std::string timeseries_csv(const TimeSeriesResult& result, bool with_region);
nlohmann::json timeseries_json(const TimeSeriesResult& result, const RunInfo& info, bool with_region);
std::vector<TimeSeries> timeseries_from_json(const nlohmann::json& doc);

// Term frequencies ------------------------------------------------------

struct TermRow {
    Sentiment sentiment{};
    std::string term;
    std::uint64_t count = 0;
};

/// Rows grouped by sentiment (ordinal order), most frequent term first,
/// ties in lexicon order. Zero rows dropped unless include_zero.
std::vector<TermRow> term_rows(const TermFrequencyTable& table, const StemmedLexicon& lexicon,
                               bool include_zero);

std::string termfreq_table(const std::vector<TermRow>& rows);
std::string termfreq_csv(const std::vector<TermRow>& rows);
nlohmann::json termfreq_json(const std::vector<TermRow>& rows, const TermFrequencyTable& table,
                             const RunInfo& info);

// Classification --------------------------------------------------------

nlohmann::json classification_json(std::string_view text, const StopWords& stopwords,
                                   const StemmedLexicon& lexicon);

// Ingest ----------------------------------------------------------------

std::string ingest_summary(const IngestReport& report);
nlohmann::json ingest_json(const IngestReport& report);

}  // namespace panast
