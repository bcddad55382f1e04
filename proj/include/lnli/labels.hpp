#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "lnli/error.hpp"
#include "lnli/text.hpp"

namespace lnli {

/// The three target classes, in the fixed order used by every matrix, table
/// and tie-break in this library.
enum class Label : int { Entailed = 0, Neutral = 1, Contradict = 2 };

inline constexpr std::size_t kNumLabels = 3;
inline constexpr std::array<Label, kNumLabels> kAllLabels = {Label::Entailed, Label::Neutral,
                                                             Label::Contradict};

inline constexpr std::string_view label_name(Label l) {
  switch (l) {
    case Label::Entailed: return "Entailed";
    case Label::Neutral: return "Neutral";
    case Label::Contradict: return "Contradict";
  }
  return "?";
}

inline constexpr std::size_t label_index(Label l) { return static_cast<std::size_t>(l); }

inline std::optional<Label> try_parse_label(std::string_view raw) {
  const std::string s = to_lower(trim(raw));
  if (s == "entailed") return Label::Entailed;
  if (s == "neutral") return Label::Neutral;
  if (s == "contradict") return Label::Contradict;
  return std::nullopt;
}

inline Label parse_label_string(std::string_view raw) {
  if (auto l = try_parse_label(raw)) return *l;
  throw LabelError("unmappable label string: \"" + std::string(raw) + "\"");
}

enum class Source { NLLP, NLLP_AGGREGATED, SNLI, OTHER };

inline constexpr std::string_view source_name(Source s) {
  switch (s) {
    case Source::NLLP: return "NLLP";
    case Source::NLLP_AGGREGATED: return "NLLP_AGGREGATED";
    case Source::SNLI: return "SNLI";
    case Source::OTHER: return "OTHER";
  }
  return "?";
}

inline Source parse_source(std::string_view raw) {
  const std::string s = to_lower(trim(raw));
  if (s == "nllp") return Source::NLLP;
  if (s == "nllp_aggregated") return Source::NLLP_AGGREGATED;
  if (s == "snli") return Source::SNLI;
  if (s == "other") return Source::OTHER;
  throw SchemaError("unknown source: \"" + std::string(raw) + "\"");
}

}  // namespace lnli
