#include "zeckctl/render.hpp"

#include <limits>
#include <sstream>

namespace zeck::cli {
namespace {

const char* const kRootWord = "\xCE\x9B";  // capital lambda

std::string word_label(const BlockSolution& s) { return s.word.empty() ? kRootWord : s.word.str(); }

void walk(const TreeNode& node, std::size_t depth, const auto& visit) {
  visit(node.solution, depth);
  for (const auto& child : node.children) walk(child, depth + 1, visit);
}

}  // namespace

nlohmann::json json_integer(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

nlohmann::json solution_record(const BlockSolution& s) {
  return {
      {"word", s.word.str()},
      {"compound", to_string(s.compound)},
      {"gbs", to_string(s.gbs)},
      {"p", json_integer(s.gbs.p)},
      {"q", json_integer(s.gbs.q)},
      {"r", json_integer(s.gbs.r)},
      {"exceptional", s.kind != SolutionKind::compound},
      {"kind", to_string(s.kind)},
  };
}

std::string render_tree_text(const TreeNode& root) {
  std::ostringstream os;
  walk(root, 0, [&os](const BlockSolution& s, std::size_t depth) {
    os << std::string(2 * depth, ' ') << word_label(s) << "  " << render_compound(s) << "  " << render_gbs(s) << '\n';
  });
  return os.str();
}

std::string render_tree(const TreeNode& root, Format format) {
  if (format == Format::text) return render_tree_text(root);
  std::ostringstream os;
  if (format == Format::tsv) os << "depth\tword\tcompound\tgbs\n";
  walk(root, 0, [&](const BlockSolution& s, std::size_t depth) {
    if (format == Format::tsv) {
      os << depth << '\t' << s.word.str() << '\t' << render_compound(s) << '\t' << render_gbs(s) << '\n';
    } else {
      auto rec = solution_record(s);
      rec["depth"] = depth;
      os << rec.dump() << '\n';
    }
  });
  return os.str();
}

std::string render_report(const VerificationReport& report, Format format) {
  std::ostringstream os;
  if (format == Format::tsv) os << "status\tcheck\tparameters\tcounterexample\n";
  for (const auto& c : report.checks) {
    std::string detail;
    if (c.counterexample) {
      const auto& ce = *c.counterexample;
      detail = "w=" + ce.word + " k=" + std::to_string(ce.k) + " n=" + ce.n.str() + " expected=" + ce.expected +
               " got=" + ce.got;
    }
    switch (format) {
      case Format::text:
        os << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  [" << c.parameters << "]";
        if (!detail.empty()) os << "  " << detail;
        os << '\n';
        break;
      case Format::tsv:
        os << (c.passed ? "pass" : "fail") << '\t' << c.name << '\t' << c.parameters << '\t' << detail << '\n';
        break;
      case Format::json: {
        nlohmann::json rec{{"check", c.name}, {"parameters", c.parameters}, {"passed", c.passed}};
        if (c.counterexample) {
          const auto& ce = *c.counterexample;
          rec["counterexample"] = {{"word", ce.word}, {"k", ce.k}, {"n", json_integer(ce.n)},
                                   {"expected", ce.expected}, {"got", ce.got}};
        }
        os << rec.dump() << '\n';
        break;
      }
    }
  }
  if (format == Format::json) {
    os << nlohmann::json{{"summary", {{"passed", report.passed()}, {"failed", report.failed()}}}}.dump() << '\n';
  } else if (format == Format::text) {
    os << report.passed() << " passed, " << report.failed() << " failed\n";
  }
  return os.str();
}

}  // namespace zeck::cli
