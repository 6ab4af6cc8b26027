#include "citemetric/ingest.hpp"

#include <json.hpp>

#include "citemetric/error.hpp"

namespace citemetric {

namespace {

constexpr std::string_view kBom = "\xEF\xBB\xBF";

bool is_blank(std::string_view s) noexcept {
  for (const char c : s) {
    if (c != ' ' && c != '\t' && c != '\r' && c != '\f' && c != '\v') return false;
  }
  return true;
}

CitationRecord make_record(std::string citing_id, std::string_view journal,
                           std::string_view label) {
  auto cls = parse_citation_class(label);
  if (!cls) {
    throw Error(ErrorCode::UnknownClass,
                "unknown citation class '" + std::string(label) + "'");
  }
  return CitationRecord{std::move(citing_id), JournalKey::normalize(journal), *cls};
}

CitationRecord parse_csv(std::string_view line) {
  auto fields = split_csv_line(line);
  if (fields.size() != 3) {
    throw Error(ErrorCode::MalformedLine,
                "expected 3 CSV fields, found " + std::to_string(fields.size()));
  }
  return make_record(std::move(fields[0]), fields[1], fields[2]);
}

// Captures the top-level string fields of one JSON object without building
// a DOM; values of other keys (nested or not) are skipped.
class TopLevelFields : public nlohmann::json_sax<nlohmann::json> {
 public:
  enum Field { kCitingId, kJournal, kClass, kOther };

  std::optional<std::string> values[3];
  bool citing_id_null = false;
  bool top_is_object = false;
  std::string type_error;

  bool null() override {
    if (at_value(kCitingId)) citing_id_null = true;
    else scalar();
    return true;
  }
  bool boolean(bool) override { return scalar(); }
  bool number_integer(number_integer_t) override { return scalar(); }
  bool number_unsigned(number_unsigned_t) override { return scalar(); }
  bool number_float(number_float_t, const string_t&) override { return scalar(); }
  bool binary(binary_t&) override { return scalar(); }
  bool string(string_t& val) override {
    if (depth_ == 0) return false;
    if (depth_ == 1 && current_ != kOther) values[current_] = std::move(val);
    return true;
  }
  bool start_object(std::size_t) override {
    if (depth_ == 0) top_is_object = true;
    nested();
    ++depth_;
    return top_is_object;
  }
  bool end_object() override {
    --depth_;
    return true;
  }
  bool start_array(std::size_t) override {
    if (depth_ == 0) return false;
    nested();
    ++depth_;
    return true;
  }
  bool end_array() override {
    --depth_;
    return true;
  }
  bool key(string_t& k) override {
    if (depth_ == 1) {
      current_ = k == "citing_id" ? kCitingId
                 : k == "journal" ? kJournal
                 : k == "class"   ? kClass
                                  : kOther;
    }
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override {
    return false;
  }

 private:
  bool at_value(Field f) const { return depth_ == 1 && current_ == f; }
  bool scalar() {
    if (depth_ == 0) return false;
    if (depth_ == 1 && current_ != kOther) type_error = field_name(current_);
    return true;
  }
  void nested() {
    if (depth_ == 1 && current_ != kOther) type_error = field_name(current_);
  }
  static const char* field_name(Field f) {
    return f == kCitingId ? "citing_id" : f == kJournal ? "journal" : "class";
  }

  int depth_ = 0;
  Field current_ = kOther;
};

CitationRecord parse_jsonl(std::string_view line) {
  TopLevelFields fields;
  const bool ok = nlohmann::json::sax_parse(line.begin(), line.end(), &fields);
  if (!ok) {
    throw Error(ErrorCode::MalformedLine,
                fields.top_is_object ? "invalid JSON" : "line is not a JSON object");
  }
  if (!fields.type_error.empty()) {
    throw Error(ErrorCode::MalformedLine, "'" + fields.type_error + "' is not a string");
  }
  auto& journal = fields.values[TopLevelFields::kJournal];
  auto& cls = fields.values[TopLevelFields::kClass];
  if (!journal) throw Error(ErrorCode::MalformedLine, "missing 'journal'");
  if (!cls) throw Error(ErrorCode::MalformedLine, "missing 'class'");
  auto& citing_id = fields.values[TopLevelFields::kCitingId];
  return make_record(citing_id ? std::move(*citing_id) : std::string(), *journal, *cls);
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) noexcept {
  if (name == "csv") return Format::Csv;
  if (name == "jsonl") return Format::Jsonl;
  return std::nullopt;
}

std::optional<Policy> parse_policy(std::string_view name) noexcept {
  if (name == "strict") return Policy::Strict;
  if (name == "skip") return Policy::Skip;
  return std::nullopt;
}

std::string_view to_string(Format f) noexcept {
  return f == Format::Csv ? "csv" : "jsonl";
}

void IngestReport::record_rejection(std::size_t line, std::string reason) {
  ++rejected;
  if (first_errors.size() < kMaxIssues) first_errors.push_back({line, std::move(reason)});
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string field;
  std::size_t i = 0;
  const std::size_t n = line.size();
  while (true) {
    field.clear();
    if (i < n && line[i] == '"') {
      ++i;
      bool closed = false;
      while (i < n) {
        if (line[i] == '"') {
          if (i + 1 < n && line[i + 1] == '"') {
            field.push_back('"');
            i += 2;
          } else {
            ++i;
            closed = true;
            break;
          }
        } else {
          field.push_back(line[i++]);
        }
      }
      if (!closed) throw Error(ErrorCode::MalformedLine, "unterminated quoted field");
      if (i < n && line[i] != ',') {
        throw Error(ErrorCode::MalformedLine, "unexpected character after closing quote");
      }
    } else {
      while (i < n && line[i] != ',') {
        if (line[i] == '"') throw Error(ErrorCode::MalformedLine, "stray quote in unquoted field");
        field.push_back(line[i++]);
      }
    }
    fields.push_back(field);
    if (i >= n) break;
    ++i;  // comma
  }
  return fields;
}

CitationRecord parse_record(std::string_view line, Format format) {
  return format == Format::Csv ? parse_csv(line) : parse_jsonl(line);
}

std::string csv_quote(std::string_view field) {
  bool needs = false;
  for (const char c : field) {
    if (c == ',' || c == '"' || c == '\n' || c == '\r') {
      needs = true;
      break;
    }
  }
  if (!needs) return std::string(field);
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string json_quote(std::string_view s) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(s.size() + 2);
  out.push_back('"');
  for (const char ch : s) {
    const auto c = static_cast<unsigned char>(ch);
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default:
        if (c < 0x20) {
          out += "\\u00";
          out.push_back(kHex[c >> 4]);
          out.push_back(kHex[c & 0xF]);
        } else {
          out.push_back(ch);
        }
    }
  }
  out.push_back('"');
  return out;
}

std::string to_csv_line(const CitationRecord& record) {
  if (record.citing_id.find_first_of("\r\n") != std::string::npos) {
    throw Error(ErrorCode::MalformedLine, "citing_id contains a line break");
  }
  std::string out = csv_quote(record.citing_id);
  out.push_back(',');
  out += csv_quote(record.journal.str());
  out.push_back(',');
  out += to_string(record.cls);
  return out;
}

std::string to_jsonl_line(const CitationRecord& record) {
  std::string out = "{\"citing_id\":";
  out += json_quote(record.citing_id);
  out += ",\"journal\":";
  out += json_quote(record.journal.str());
  out += ",\"class\":\"";
  out += to_string(record.cls);
  out += "\"}";
  return out;
}

RecordReader::RecordReader(std::istream& in, Format format, Policy policy)
    : in_(in), format_(format), policy_(policy) {}

bool RecordReader::read_line() {
  if (!std::getline(in_, line_)) return false;
  ++line_no_;
  if (line_no_ == 1 && line_.starts_with(kBom)) line_.erase(0, kBom.size());
  if (!line_.empty() && line_.back() == '\r') line_.pop_back();
  return true;
}

void RecordReader::reject(ErrorCode code, std::string reason) {
  if (policy_ == Policy::Strict) throw LineError(code, line_no_, reason);
  report_.record_rejection(line_no_, std::move(reason));
}

std::optional<CitationRecord> RecordReader::next() {
  while (read_line()) {
    if (format_ == Format::Csv && !header_checked_) {
      header_checked_ = true;
      bool ok = false;
      try {
        const auto fields = split_csv_line(line_);
        ok = fields.size() == 3 && fields[0] == "citing_id" && fields[1] == "journal" &&
             fields[2] == "class";
      } catch (const Error&) {
      }
      if (!ok) {
        reject(ErrorCode::MalformedLine,
               "expected CSV header '" + std::string(kCsvHeader) + "'");
      }
      continue;
    }
    if (is_blank(line_)) continue;
    try {
      auto rec = parse_record(line_, format_);
      ++report_.accepted;
      return rec;
    } catch (const LineError&) {
      throw;
    } catch (const Error& e) {
      reject(e.code(), e.what());
    }
  }
  return std::nullopt;
}

IngestResult ingest_all(std::istream& in, Format format, Policy policy) {
  IngestResult result;
  result.report = ingest_stream(in, format, policy, [&](CitationRecord&& rec) {
    result.records.push_back(std::move(rec));
  });
  return result;
}

}  // namespace citemetric
