#include "zeckctl/cli.hpp"

#include <map>
#include <regex>

#include "CLI11.hpp"
#include "json.hpp"
#include "zeck/codec.hpp"
#include "zeck/error.hpp"
#include "zeck/oracle.hpp"
#include "zeck/solver.hpp"
#include "zeckctl/render.hpp"

namespace zeck::cli {
namespace {

constexpr const char* kBlockHelp =
    "digit block, most significant digit first: \"100\" means w2 w1 w0 = 1 0 0";

Integer parse_natural(const std::string& text, const char* what) {
  static const std::regex kNatural("[0-9]+");
  if (!std::regex_match(text, kNatural)) {
    throw RangeError(std::string(what) + " must be a non-negative integer, got \"" + text + "\"");
  }
  return Integer(text);
}

std::string join(const std::vector<Integer>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += values[i].str();
  }
  return out;
}

nlohmann::json json_list(const std::vector<Integer>& values) {
  auto arr = nlohmann::json::array();
  for (const auto& v : values) arr.push_back(json_integer(v));
  return arr;
}

void write_terms_tsv(std::ostream& out, const std::vector<Integer>& terms) {
  out << "n\tR(n)\n";
  for (std::size_t i = 0; i < terms.size(); ++i) out << i + 1 << '\t' << terms[i] << '\n';
}

struct Options {
  std::string format = "text";
  std::string number;
  std::string digits;
  std::string block;
  std::size_t k = 0;
  std::size_t terms = 10;
  std::size_t depth = 3;
  CertifyConfig verify;
  std::string verify_bound = "100000";
  bool serial = false;
};

Format format_of(const std::string& name) {
  static const std::map<std::string, Format> kFormats{
      {"text", Format::text}, {"tsv", Format::tsv}, {"json", Format::json}};
  return kFormats.at(name);
}

int cmd_encode(const Options& o, std::ostream& out) {
  const ZeckExpansion z = encode(parse_natural(o.number, "N"));
  switch (format_of(o.format)) {
    case Format::text: out << z.digits() << '\n'; break;
    case Format::tsv: out << z.value() << '\t' << z.digits() << '\n'; break;
    case Format::json: out << nlohmann::json{{"n", json_integer(z.value())}, {"digits", z.digits()}}.dump() << '\n'; break;
  }
  return kExitOk;
}

int cmd_decode(const Options& o, std::ostream& out) {
  const Integer n = decode(o.digits);
  switch (format_of(o.format)) {
    case Format::text: out << n << '\n'; break;
    case Format::tsv: out << o.digits << '\t' << n << '\n'; break;
    case Format::json: out << nlohmann::json{{"digits", o.digits}, {"n", json_integer(n)}}.dump() << '\n'; break;
  }
  return kExitOk;
}

int cmd_block(const Options& o, std::ostream& out) {
  const DigitBlock w = DigitBlock::parse(o.block);
  if (w.empty()) throw RangeError("block needs a non-empty digit block");
  const BlockSolution s = solve_block(w);
  const auto terms = union_enumerate(OccurrenceSet({s.gbs}), o.terms);
  switch (format_of(o.format)) {
    case Format::text:
      out << w.str() << "  " << render_compound(s) << "  " << to_string(s.gbs) << '\n';
      out << "gamma " << s.gamma << "  kind " << to_string(s.kind) << '\n';
      out << "terms " << join(terms, " ") << '\n';
      break;
    case Format::tsv: write_terms_tsv(out, terms); break;
    case Format::json: {
      auto rec = solution_record(s);
      rec["first_terms"] = json_list(terms);
      out << rec.dump() << '\n';
      break;
    }
  }
  return kExitOk;
}

int cmd_position(const Options& o, std::ostream& out) {
  const DigitBlock w = DigitBlock::parse(o.block);
  const OccurrenceSet set = solve_positional(w, o.k);
  const auto terms = union_enumerate(set, o.terms);
  switch (format_of(o.format)) {
    case Format::text:
      out << "branches";
      for (const auto& b : set.branches()) out << "  " << to_string(b);
      out << "\nterms " << join(terms, " ") << '\n';
      break;
    case Format::tsv: write_terms_tsv(out, terms); break;
    case Format::json: {
      auto branches = nlohmann::json::array();
      for (const auto& b : set.branches()) {
        branches.push_back({{"gbs", to_string(b)}, {"p", json_integer(b.p)}, {"q", json_integer(b.q)},
                            {"r", json_integer(b.r)}});
      }
      out << nlohmann::json{{"word", w.str()}, {"k", o.k}, {"branches", branches}, {"first_terms", json_list(terms)}}
                 .dump()
          << '\n';
      break;
    }
  }
  return kExitOk;
}

int cmd_density(const Options& o, std::ostream& out) {
  const DigitBlock w = DigitBlock::parse(o.block);
  const DensityValue d = density(w, o.k);
  const std::string decimal = d.value.to_decimal(15);
  switch (format_of(o.format)) {
    case Format::text:
      out << "F_" << d.coefficient_index << "*phi^" << d.exponent << " = " << d.coefficient << "*phi^" << d.exponent
          << " = " << to_string(d.value) << " ~ " << decimal << '\n';
      break;
    case Format::tsv:
      out << "coeff\texponent\tgolden_a\tgolden_b\tdecimal\n"
          << d.coefficient << '\t' << d.exponent << '\t' << d.value.a() << '\t' << d.value.b() << '\t' << decimal
          << '\n';
      break;
    case Format::json:
      out << nlohmann::json{{"word", w.str()},
                            {"k", o.k},
                            {"coeff", json_integer(d.coefficient)},
                            {"exponent", d.exponent},
                            {"golden_a", json_integer(d.value.a())},
                            {"golden_b", json_integer(d.value.b())},
                            {"decimal", decimal}}
                 .dump()
          << '\n';
      break;
  }
  return kExitOk;
}

int cmd_tree(const Options& o, std::ostream& out) {
  out << render_tree(fibonacci_tree(o.depth), format_of(o.format));
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  CertifyConfig cfg = o.verify;
  cfg.bound = parse_natural(o.verify_bound, "--bound");
  if (cfg.bound < 1) throw RangeError("--bound must be at least 1");
  cfg.parallel = !o.serial;
  const VerificationReport report = certify(cfg);
  out << render_report(report, format_of(o.format));
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeckendorf digit-block classifier: closed forms, densities and brute-force certification", "zeckctl"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "tsv", "json"}))
      ->capture_default_str();

  auto* encode_cmd = app.add_subcommand("encode", "Zeckendorf digits of N");
  encode_cmd->add_option("N", o.number, "non-negative integer")->required();

  auto* decode_cmd = app.add_subcommand("decode", "value of a Zeckendorf digit string");
  decode_cmd->add_option("digits", o.digits, "0/1 string without 11, most significant digit first")->required();

  auto* block_cmd = app.add_subcommand("block", "closed forms for the N whose expansion ends with a block");
  block_cmd->add_option("w", o.block, kBlockHelp)->required();
  block_cmd->add_option("--terms", o.terms, "number of terms to list")->capture_default_str();

  auto* position_cmd = app.add_subcommand("position", "occurrences of a block at digit position k");
  position_cmd->add_option("w", o.block, kBlockHelp)->required();
  position_cmd->add_option("k", o.k, "digit position of w_0 (0 = lowest digit)")->required();
  position_cmd->add_option("--terms", o.terms, "number of terms to list")->capture_default_str();

  auto* density_cmd = app.add_subcommand("density", "exact natural density of a block at position k");
  density_cmd->add_option("w", o.block, kBlockHelp)->required();
  density_cmd->add_option("k", o.k, "digit position (default 0)");

  auto* tree_cmd = app.add_subcommand("tree", "the labelled Fibonacci tree of digit blocks");
  tree_cmd->add_option("depth", o.depth, "tree depth")->required()->check(CLI::Range(0, 20));

  auto* verify_cmd = app.add_subcommand("verify", "certify every closed form against brute force");
  verify_cmd->add_option("--depth", o.verify.depth, "longest block length")->capture_default_str();
  verify_cmd->add_option("--k-max", o.verify.k_max, "largest digit position")->capture_default_str();
  verify_cmd->add_option("--terms", o.verify.n_terms, "terms compared per sequence")->capture_default_str();
  verify_cmd->add_option("--bound", o.verify_bound, "brute-force range for partition and densities")
      ->capture_default_str();
  verify_cmd->add_flag("--serial", o.serial, "run check families one after another");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*encode_cmd) return cmd_encode(o, out);
    if (*decode_cmd) return cmd_decode(o, out);
    if (*block_cmd) return cmd_block(o, out);
    if (*position_cmd) return cmd_position(o, out);
    if (*density_cmd) return cmd_density(o, out);
    if (*tree_cmd) return cmd_tree(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
  } catch (const InvalidWord& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace zeck::cli
