#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "partdist/partition.hpp"

namespace partdist {

enum class ClusteringFormat { LABELS, BLOCKS_JSON, LITERAL };

/// "labels", "blocks-json" or "literal"; throws ValidationError otherwise.
ClusteringFormat parse_clustering_format(std::string_view name);
std::string_view clustering_format_name(ClusteringFormat format) noexcept;

/// A clustering read from disk. Element names map to 1..n in bytewise order,
/// so two files over the same names share one numbering.
struct ClusteringFile {
  std::string path;
  std::string name;  // basename of path
  ClusteringFormat format = ClusteringFormat::LABELS;
  std::vector<LabeledElement> entries;
  std::vector<std::string> element_names;  // sorted; element e is element_names[e-1]
  Partition partition;
};

/// Errors are ValidationError messages of the form "path:line:column: ...".
ClusteringFile parse_clustering(std::string_view text, ClusteringFormat format, const std::string& path = "<input>");

/// Without an explicit format: ".json" files are blocks-json, a single
/// content line containing '|' is a literal, anything else is labels.
ClusteringFile load_clustering(const std::string& path, std::optional<ClusteringFormat> format = std::nullopt);

/// One "name label" line per element, labels numbered by canonical block.
std::string emit_labels(const ClusteringFile& file);

/// Empty when both files name the same elements; otherwise a human-readable
/// listing of names present on only one side.
std::string ground_set_difference(const ClusteringFile& a, const ClusteringFile& b);

}  // namespace partdist
