#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mmroute {

/// Reader for comma separated tables with a header row. Handles quoted
/// fields (including embedded commas, doubled quotes and line breaks), a UTF-8
/// byte order mark, CRLF line ends and blanks around unquoted fields.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in);

  const std::vector<std::string>& header() const noexcept { return header_; }
  std::optional<std::size_t> column(std::string_view name) const;

  /// Next non-empty record; false at end of input. Short records are padded
  /// with empty fields.
  bool next(std::vector<std::string>& fields);
  /// Line on which the last record returned by next() started.
  std::size_t line() const noexcept { return recordLine_; }

 private:
  bool readRecord(std::vector<std::string>& fields);

  std::istream* in_;
  std::vector<std::string> header_;
  std::unordered_map<std::string, std::size_t> columns_;
  std::size_t line_ = 1;
  std::size_t recordLine_ = 0;
};

}  // namespace mmroute
