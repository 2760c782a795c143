#pragma once

// JSON instance files and CSV tables.

#include "ergo/potential.hpp"
#include "ergo/sub_action.hpp"
#include "ergo/symbolic.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace ergo {

struct Instance {
  SftSystem sft;
  AnyPotential potential;

  /// The potential itself, or the reduction of a two-sided table.
  OneSidedPotential one_sided() const;
};

/// Throws ParseError on malformed JSON or fields, and the validation kinds of
/// SftSystem and the potential constructors on semantic problems.
Instance parse_instance(std::string_view json_text);
Instance load_instance(const std::filesystem::path& path);
std::string instance_to_json(const Instance& instance);

/// Header row "node,<w_1>,...,<w_n>", then one row per node.
std::string matrix_csv(const DeBruijnGraph& graph, const RationalMatrix& m);
RationalMatrix parse_matrix_csv(std::string_view text, const DeBruijnGraph& graph);

/// Header "node,value", then one row per node.
std::string subaction_csv(const DeBruijnGraph& graph, const RationalVector& values);

/// Rows may come in any order but must cover every node of `graph` once.
SubAction parse_subaction_csv(std::string_view text, const DeBruijnGraph& graph);

/// Word length of the first data row of a sub-action CSV.
int subaction_csv_depth(std::string_view text, int alphabet_size);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace ergo
