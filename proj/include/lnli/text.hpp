#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace lnli {

inline bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

inline char lower_ascii(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

inline std::string_view trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = lower_ascii(c);
  return out;
}

/// trim + collapse internal whitespace runs to single spaces + ASCII casefold.
/// This is the key used for content-based deduplication.
inline std::string normalize_content(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : trim(s)) {
    if (is_space(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    out.push_back(lower_ascii(c));
  }
  return out;
}

/// Lowercased alphanumeric word runs, capped at max_tokens (0 = no cap).
inline std::vector<std::string> tokenize_words(std::string_view s, std::size_t max_tokens = 0) {
  std::vector<std::string> tokens;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      tokens.push_back(cur);
      cur.clear();
    }
  };
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c)) != 0) {
      cur.push_back(lower_ascii(c));
    } else {
      flush();
      if (max_tokens != 0 && tokens.size() >= max_tokens) return tokens;
    }
  }
  flush();
  if (max_tokens != 0 && tokens.size() > max_tokens) tokens.resize(max_tokens);
  return tokens;
}

inline bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

}  // namespace lnli
