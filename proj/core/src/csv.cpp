#include "mmroute/ingest/csv.hpp"

namespace mmroute {

namespace {

void trimInPlace(std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) {
    s.clear();
    return;
  }
  s.erase(s.find_last_not_of(" \t") + 1);
  s.erase(0, first);
}

}  // namespace

CsvReader::CsvReader(std::istream& in) : in_(&in) {
  if (in_->peek() == 0xEF) {
    char bom[3];
    in_->read(bom, 3);
    if (!(bom[1] == '\xBB' && bom[2] == '\xBF')) {
      in_->clear();
      in_->seekg(0);
    }
  }
  if (readRecord(header_)) {
    for (std::size_t i = 0; i < header_.size(); ++i) columns_.emplace(header_[i], i);
  }
}

std::optional<std::size_t> CsvReader::column(std::string_view name) const {
  const auto it = columns_.find(std::string(name));
  if (it == columns_.end()) return std::nullopt;
  return it->second;
}

bool CsvReader::next(std::vector<std::string>& fields) {
  while (readRecord(fields)) {
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (fields.size() < header_.size()) fields.resize(header_.size());
    return true;
  }
  return false;
}

bool CsvReader::readRecord(std::vector<std::string>& fields) {
  fields.clear();
  if (in_->peek() == std::char_traits<char>::eof()) return false;
  recordLine_ = line_;
  std::string field;
  bool quoted = false;     // inside quotes
  bool wasQuoted = false;  // current field used quotes
  for (;;) {
    const int ch = in_->get();
    if (ch == std::char_traits<char>::eof()) break;
    const char c = static_cast<char>(ch);
    if (quoted) {
      if (c == '"') {
        if (in_->peek() == '"') {
          field.push_back('"');
          in_->get();
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line_;
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && field.find_first_not_of(" \t") == std::string::npos) {
      field.clear();
      quoted = true;
      wasQuoted = true;
    } else if (c == ',') {
      if (!wasQuoted) trimInPlace(field);
      fields.push_back(std::move(field));
      field.clear();
      wasQuoted = false;
    } else if (c == '\n') {
      ++line_;
      break;
    } else if (c != '\r' && !(wasQuoted && (c == ' ' || c == '\t'))) {
      field.push_back(c);
    }
  }
  if (!wasQuoted) trimInPlace(field);
  fields.push_back(std::move(field));
  return true;
}

}  // namespace mmroute
