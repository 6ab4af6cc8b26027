#include "citemetric/model.hpp"

#include "citemetric/error.hpp"

namespace citemetric {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyKey: return "EmptyKey";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::UnknownClass: return "UnknownClass";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::UndefinedIndex: return "UndefinedIndex";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidParams: return "InvalidParams";
  }
  return "Unknown";
}

std::string_view to_string(CitationClass c) noexcept {
  switch (c) {
    case CitationClass::Supporting: return "supporting";
    case CitationClass::Disputing: return "disputing";
    case CitationClass::Mentioning: return "mentioning";
  }
  return "";
}

namespace {

constexpr bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

constexpr char ascii_lower(char c) noexcept {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

constexpr char ascii_upper(char c) noexcept {
  return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c;
}

constexpr bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

bool iequals(std::string_view a, std::string_view b) noexcept {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ascii_lower(a[i]) != ascii_lower(b[i])) return false;
  }
  return true;
}

}  // namespace

std::optional<CitationClass> parse_citation_class(std::string_view label) noexcept {
  if (iequals(label, "supporting")) return CitationClass::Supporting;
  if (iequals(label, "disputing")) return CitationClass::Disputing;
  if (iequals(label, "mentioning")) return CitationClass::Mentioning;
  return std::nullopt;
}

bool is_issn_form(std::string_view s) noexcept {
  if (s.size() != 9 || s[4] != '-') return false;
  for (std::size_t i = 0; i < 8; ++i) {
    const char c = s[i < 4 ? i : i + 1];
    if (!is_digit(c) && !(i == 7 && (c == 'x' || c == 'X'))) return false;
  }
  return true;
}

JournalKey JournalKey::normalize(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (const char c : raw) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(ascii_lower(c));
  }
  if (out.empty()) throw Error(ErrorCode::EmptyKey, "journal key is empty after normalization");
  if (is_issn_form(out)) {
    for (char& c : out) c = ascii_upper(c);
  }
  return JournalKey(std::move(out));
}

void MetricsConfig::validate() const {
  if (min_classified < 1) {
    throw Error(ErrorCode::InvalidConfig,
                "min_classified must be at least 1 (the scite index needs a "
                "supporting or disputing citation)");
  }
}

}  // namespace citemetric
