#pragma once

#include <string>

#include "json.hpp"
#include "zeck/oracle.hpp"
#include "zeck/solver.hpp"

namespace zeck::cli {

enum class Format { text, tsv, json };

/// JSON number when the value fits in 64 bits, decimal string otherwise.
nlohmann::json json_integer(const Integer& v);

nlohmann::json solution_record(const BlockSolution& s);

/// The tree as indented text, one node per line: word, compound form, GBS.
std::string render_tree_text(const TreeNode& root);

std::string render_tree(const TreeNode& root, Format format);

std::string render_report(const VerificationReport& report, Format format);

}  // namespace zeck::cli
