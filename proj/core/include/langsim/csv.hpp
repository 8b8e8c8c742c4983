#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace langsim::csv {

using Row = std::vector<std::string>;

/// Parse RFC-4180 text: comma-separated fields, double-quote quoting,
/// embedded quotes doubled, quoted fields may span lines. CRLF and LF both
/// accepted. A trailing newline does not produce an empty record.
std::vector<Row> parse(const std::string& text);

/// Quote a field only when it contains a comma, quote, or newline.
std::string quote_field(const std::string& field);

std::string join_row(const Row& row);

std::string read_file(const std::filesystem::path& path);

/// Write content to a sibling temp file, then atomically rename into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// A leading "# key=value key=value ..." metadata line split off from the
/// CSV body. Files without one yield an empty map.
struct MetadataSplit {
  std::map<std::string, std::string> metadata;
  std::string body;
};

MetadataSplit split_metadata(const std::string& text);

std::string format_metadata_line(const std::vector<std::pair<std::string, std::string>>& pairs);

}  // namespace langsim::csv
