#include "partdist/clustering_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "partdist/errors.hpp"

namespace partdist {

namespace {

[[noreturn]] void fail_at(const std::string& path, std::size_t line, std::size_t column, const std::string& what) {
  throw ValidationError(path + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string basename_of(const std::string& path) {
  const auto slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

void finish(ClusteringFile& file) {
  if (file.entries.empty()) throw ValidationError(file.path + ": no elements");
  file.partition = from_labels(file.entries);
  file.element_names.clear();
  for (const auto& e : file.entries) file.element_names.push_back(e.name);
  std::sort(file.element_names.begin(), file.element_names.end());
}

void parse_labels(std::string_view text, ClusteringFile& file) {
  std::map<std::string, std::size_t> first_line;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::pair<std::string_view, std::size_t>> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_space(line[i])) ++i;
      std::size_t j = i;
      while (j < line.size() && !is_space(line[j])) ++j;
      if (j > i) tokens.emplace_back(line.substr(i, j - i), i + 1);
      i = j;
    }
    if (!tokens.empty()) {
      if (tokens.size() != 2) {
        fail_at(file.path, line_no, tokens.size() == 1 ? line.size() + 1 : tokens[2].second,
                "expected 'element-name cluster-label'");
      }
      std::string name(tokens[0].first);
      auto [it, fresh] = first_line.emplace(name, line_no);
      if (!fresh) {
        fail_at(file.path, line_no, 1, "duplicate element '" + name + "' (first on line " +
                                           std::to_string(it->second) + ")");
      }
      file.entries.push_back({std::move(name), std::string(tokens[1].first)});
    }
    if (end == text.size()) break;
    start = end + 1;
  }
}

std::string json_name(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  return {};
}

void parse_blocks_json(std::string_view text, ClusteringFile& file) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    fail_at(file.path, line, column, "malformed JSON");
  }
  if (!doc.is_array()) fail_at(file.path, 1, 1, "expected an array of blocks");
  std::map<std::string, std::size_t> seen;
  for (std::size_t b = 0; b < doc.size(); ++b) {
    const auto& block = doc[b];
    const std::string where = "block " + std::to_string(b);
    if (!block.is_array()) throw ValidationError(file.path + ": " + where + " is not an array");
    if (block.empty()) throw ValidationError(file.path + ": " + where + " is empty");
    for (std::size_t e = 0; e < block.size(); ++e) {
      std::string name = json_name(block[e]);
      if (name.empty()) {
        throw ValidationError(file.path + ": " + where + " entry " + std::to_string(e) +
                              " is not an element name");
      }
      auto [it, fresh] = seen.emplace(name, b);
      if (!fresh) {
        throw ValidationError(file.path + ": element '" + name + "' appears in block " + std::to_string(it->second) +
                              " and block " + std::to_string(b));
      }
      file.entries.push_back({std::move(name), std::to_string(b)});
    }
  }
}

void parse_literal(std::string_view text, ClusteringFile& file) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  std::optional<std::pair<std::string, std::size_t>> content;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (std::any_of(line.begin(), line.end(), [](char c) { return !is_space(c); })) {
      if (content) fail_at(file.path, line_no, 1, "a literal file holds exactly one partition");
      content.emplace(std::string(line), line_no);
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (!content) throw ValidationError(file.path + ": no partition literal");
  Partition p;
  try {
    p = Partition::parse(content->first);
  } catch (const ValidationError& e) {
    throw ValidationError(file.path + ":" + std::to_string(content->second) + ": " + e.what());
  }
  for (int e = 1; e <= p.n(); ++e) file.entries.push_back({std::to_string(e), std::to_string(p.block_of(e))});
}

}  // namespace

ClusteringFormat parse_clustering_format(std::string_view name) {
  if (name == "labels") return ClusteringFormat::LABELS;
  if (name == "blocks-json") return ClusteringFormat::BLOCKS_JSON;
  if (name == "literal" || name == "partition-literal") return ClusteringFormat::LITERAL;
  throw ValidationError("unknown input format '" + std::string(name) + "' (labels, blocks-json, literal)");
}

std::string_view clustering_format_name(ClusteringFormat format) noexcept {
  switch (format) {
    case ClusteringFormat::LABELS: return "labels";
    case ClusteringFormat::BLOCKS_JSON: return "blocks-json";
    case ClusteringFormat::LITERAL: return "literal";
  }
  return "?";
}

ClusteringFile parse_clustering(std::string_view text, ClusteringFormat format, const std::string& path) {
  ClusteringFile file;
  file.path = path;
  file.name = basename_of(path);
  file.format = format;
  switch (format) {
    case ClusteringFormat::LABELS: parse_labels(text, file); break;
    case ClusteringFormat::BLOCKS_JSON: parse_blocks_json(text, file); break;
    case ClusteringFormat::LITERAL: parse_literal(text, file); break;
  }
  finish(file);
  return file;
}

ClusteringFile load_clustering(const std::string& path, std::optional<ClusteringFormat> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (!format) {
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
      format = ClusteringFormat::BLOCKS_JSON;
    } else {
      std::size_t content_lines = 0;
      bool has_bar = false;
      std::istringstream lines(text);
      for (std::string line; std::getline(lines, line);) {
        line = line.substr(0, line.find('#'));
        if (std::all_of(line.begin(), line.end(), is_space)) continue;
        ++content_lines;
        has_bar = has_bar || line.find('|') != std::string::npos;
      }
      format = content_lines == 1 && has_bar ? ClusteringFormat::LITERAL : ClusteringFormat::LABELS;
    }
  }
  return parse_clustering(text, *format, path);
}

std::string emit_labels(const ClusteringFile& file) {
  std::string out;
  for (std::size_t e = 0; e < file.element_names.size(); ++e) {
    out += file.element_names[e] + ' ' + std::to_string(file.partition.block_of(static_cast<int>(e + 1))) + '\n';
  }
  return out;
}

std::string ground_set_difference(const ClusteringFile& a, const ClusteringFile& b) {
  std::vector<std::string> only_a, only_b;
  std::set_difference(a.element_names.begin(), a.element_names.end(), b.element_names.begin(),
                      b.element_names.end(), std::back_inserter(only_a));
  std::set_difference(b.element_names.begin(), b.element_names.end(), a.element_names.begin(),
                      a.element_names.end(), std::back_inserter(only_b));
  if (only_a.empty() && only_b.empty()) return {};
  auto list = [](const std::vector<std::string>& names) {
    std::string s;
    for (const auto& n : names) s += (s.empty() ? "" : " ") + n;
    return s.empty() ? std::string("(none)") : s;
  };
  return "ground sets differ\n  only in " + a.path + ": " + list(only_a) + "\n  only in " + b.path + ": " +
         list(only_b);
}

}  // namespace partdist
