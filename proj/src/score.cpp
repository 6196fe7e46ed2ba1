#include "panast/score.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <fmt/format.h>

#include "bundled_data.hpp"
#include "panast/error.hpp"

namespace panast {
namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw Error(ErrorKind::Overflow, "sentiment counter overflow during merge");
    return out;
}

}  // namespace

std::uint64_t SentimentCounts::classified() const noexcept {
    std::uint64_t n = 0;
    for (auto c : per_sentiment) n += c;
    return n;
}

SentimentCounts merge_counts(const SentimentCounts& a, const SentimentCounts& b) {
    SentimentCounts out;
    for (std::size_t i = 0; i < kSentimentCount; ++i)
        out.per_sentiment[i] = checked_add(a.per_sentiment[i], b.per_sentiment[i]);
    out.total_normalized = checked_add(a.total_normalized, b.total_normalized);
    out.total_seen = checked_add(a.total_seen, b.total_seen);
    return out;
}

void check_baseline(const BaselineTable& table) {
    double sum = 0.0;
    for (Sentiment s : kAllSentiments) {
        const double a = table.alpha[ordinal(s)];
        if (!(a > 0.0) || !std::isfinite(a))
            throw Error(ErrorKind::InvalidBaseline,
                        fmt::format("baseline for {} must be positive, got {}", name(s), a));
        sum += a;
    }
    if (!(sum < 1.0))
        throw Error(ErrorKind::InvalidBaseline,
                    fmt::format("baseline proportions sum to {}, expected < 1", sum));
}

BaselineTable parse_baseline(std::istream& in, std::string provenance) {
    BaselineTable table;
    table.provenance = std::move(provenance);
    PerSentiment<bool> seen{};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw Error(ErrorKind::InvalidBaseline,
                        fmt::format("baseline line {}: expected <sentiment>\\t<alpha>", line_no));
        const auto s = parse_sentiment(line.substr(0, tab));
        if (!s)
            throw Error(ErrorKind::InvalidBaseline,
                        fmt::format("baseline line {}: unknown sentiment '{}'", line_no,
                                    line.substr(0, tab)));
        if (seen[ordinal(*s)])
            throw Error(ErrorKind::InvalidBaseline,
                        fmt::format("baseline line {}: duplicate entry for {}", line_no, name(*s)));
        const std::string value = line.substr(tab + 1);
        std::size_t consumed = 0;
        double alpha = 0.0;
        try {
            alpha = std::stod(value, &consumed);
        } catch (const std::exception&) {
            consumed = 0;
        }
        if (consumed == 0 || consumed != value.size())
            throw Error(ErrorKind::InvalidBaseline,
                        fmt::format("baseline line {}: bad number '{}'", line_no, value));
        table.alpha[ordinal(*s)] = alpha;
        seen[ordinal(*s)] = true;
    }
    for (Sentiment s : kAllSentiments)
        if (!seen[ordinal(s)])
            throw Error(ErrorKind::InvalidBaseline, fmt::format("baseline missing {}", name(s)));
    check_baseline(table);
    return table;
}

BaselineTable load_baseline_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, fmt::format("cannot open baseline file '{}'", path));
    return parse_baseline(in, "file:" + path);
}

const BaselineTable& bundled_baseline() {
    static const BaselineTable table = [] {
        std::istringstream in{std::string(bundled::baseline_tsv())};
        try {
            return parse_baseline(in, "bundled-table3");
        } catch (const Error& e) {
            throw Error(ErrorKind::Config, std::string("bundled baseline: ") + e.what());
        }
    }();
    return table;
}

BaselineTable compute_baseline(const SentimentCounts& counts, std::string provenance) {
    if (counts.total_normalized == 0)
        throw Error(ErrorKind::EmptyCorpus, "baseline corpus has no mood-filtered tweets");
    BaselineTable table;
    table.provenance = std::move(provenance);
    for (Sentiment s : kAllSentiments) {
        const auto n = counts.per_sentiment[ordinal(s)];
        if (n == 0)
            throw Error(ErrorKind::DegenerateBaseline,
                        fmt::format("baseline corpus has no tweets classified as {}", name(s)));
        table.alpha[ordinal(s)] =
            static_cast<double>(n) / static_cast<double>(counts.total_normalized);
    }
    return table;
}

std::string format_baseline(const BaselineTable& table) {
    std::string out;
    for (Sentiment s : kAllSentiments) {
        const double a = table.alpha[ordinal(s)];
        // Values too small for 7 decimals keep 7 significant digits instead.
        if (a < 5e-8)
            out += fmt::format("{}\t{:.6e}\n", name(s), a);
        else
            out += fmt::format("{}\t{:.7f}\n", name(s), a);
    }
    return out;
}

PerSentiment<double> relative_occurrence(const SentimentCounts& counts) {
    if (counts.total_normalized == 0)
        throw Error(ErrorKind::EmptyEvent, "event has no mood-filtered tweets");
    PerSentiment<double> beta{};
    for (std::size_t i = 0; i < kSentimentCount; ++i)
        beta[i] = static_cast<double>(counts.per_sentiment[i]) /
                  static_cast<double>(counts.total_normalized);
    return beta;
}

std::string_view name(SignConvention convention) noexcept {
    return convention == SignConvention::Prose ? "prose" : "printed-eq3";
}

double panas_score(double alpha, double beta, SignConvention convention) {
    if (!(alpha > 0.0))
        throw Error(ErrorKind::InvalidBaseline, fmt::format("baseline must be positive, got {}", alpha));
    if (convention == SignConvention::PrintedEq3) {
        if (beta <= alpha) return (alpha - beta) / alpha;
        return -(beta - alpha) / beta;
    }
    if (beta >= alpha) return beta == alpha ? 0.0 : (beta - alpha) / beta;
    return -(alpha - beta) / alpha;
}

ScoreVector score_vector(const BaselineTable& baseline, const SentimentCounts& counts,
                         SignConvention convention) {
    const auto beta = relative_occurrence(counts);
    ScoreVector v;
    v.event_size = counts.total_normalized;
    v.provenance = baseline.provenance;
    v.convention = convention;
    for (std::size_t i = 0; i < kSentimentCount; ++i) {
        const double a = baseline.alpha[i];
        v.scores[i] = ScoreComponent{a, beta[i], panas_score(a, beta[i], convention)};
    }
    return v;
}

}  // namespace panast
