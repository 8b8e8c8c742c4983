#include "langsim/csv.hpp"

#include <fstream>
#include <sstream>

#include "langsim/error.hpp"

namespace langsim::csv {

std::vector<Row> parse(const std::string& text) {
  std::vector<Row> rows;
  Row row;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  bool row_started = false;

  auto end_field = [&] {
    row.push_back(field);
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
    row_started = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        field_started = true;
        row_started = true;
        break;
      case ',':
        end_field();
        row_started = true;
        break;
      case '\r':
        break;
      case '\n':
        if (row_started || field_started || !field.empty()) {
          end_row();
        }
        break;
      default:
        field.push_back(c);
        field_started = true;
        row_started = true;
        break;
    }
  }
  if (in_quotes) {
    throw Error(ErrorCode::UnparseableCell, "unterminated quoted field at end of input");
  }
  if (row_started || field_started || !field.empty()) {
    end_row();
  }
  return rows;
}

std::string quote_field(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) {
    return field;
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string join_row(const Row& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out.push_back(',');
    out += quote_field(row[i]);
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoFailure, "cannot open " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorCode::IoFailure, "cannot open " + tmp.string() + " for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
      throw Error(ErrorCode::IoFailure, "short write to " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error(ErrorCode::IoFailure, "rename to " + path.string() + " failed: " + ec.message());
  }
}

MetadataSplit split_metadata(const std::string& text) {
  MetadataSplit out;
  if (text.empty() || text[0] != '#') {
    out.body = text;
    return out;
  }
  std::size_t eol = text.find('\n');
  std::string line = text.substr(0, eol == std::string::npos ? text.size() : eol);
  out.body = eol == std::string::npos ? std::string() : text.substr(eol + 1);
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::istringstream ss(line.substr(1));
  std::string token;
  while (ss >> token) {
    std::size_t eq = token.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::MissingMetadata, "malformed metadata token '" + token + "'");
    }
    std::string key = token.substr(0, eq);
    std::string value = token.substr(eq + 1);
    if (!out.metadata.emplace(key, value).second) {
      throw Error(ErrorCode::MissingMetadata, "duplicate metadata key '" + key + "'");
    }
  }
  return out;
}

std::string format_metadata_line(const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::string line = "#";
  for (const auto& [k, v] : pairs) {
    line += " " + k + "=" + v;
  }
  line.push_back('\n');
  return line;
}

}  // namespace langsim::csv
