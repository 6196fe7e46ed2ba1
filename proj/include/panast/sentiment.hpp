#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace panast {

/// The eleven specific affect scales, ordered as in the reference baseline
/// table. The ordinal is stable and used for ordering and tie-breaking.
enum class Sentiment : std::uint8_t {
    Fear = 0,
    Sadness,
    Guilt,
    Hostility,
    Shyness,
    Fatigue,
    Surprise,
    Joviality,
    SelfAssurance,
    Attentiveness,
    Serenity,
};

inline constexpr std::size_t kSentimentCount = 11;

inline constexpr std::array<Sentiment, kSentimentCount> kAllSentiments{
    Sentiment::Fear,     Sentiment::Sadness,       Sentiment::Guilt,
    Sentiment::Hostility, Sentiment::Shyness,      Sentiment::Fatigue,
    Sentiment::Surprise, Sentiment::Joviality,     Sentiment::SelfAssurance,
    Sentiment::Attentiveness, Sentiment::Serenity,
};

constexpr std::size_t ordinal(Sentiment s) noexcept { return static_cast<std::size_t>(s); }

/// Canonical lowercase name, e.g. "self-assurance".
std::string_view name(Sentiment s) noexcept;

/// Display name as used in report headings, e.g. "Self-assurance".
std::string_view display_name(Sentiment s) noexcept;

/// Inverse of name(); also accepts the display spelling case-insensitively.
std::optional<Sentiment> parse_sentiment(std::string_view text) noexcept;

/// Fixed-size map keyed by Sentiment.
template <typename T>
using PerSentiment = std::array<T, kSentimentCount>;

}  // namespace panast
