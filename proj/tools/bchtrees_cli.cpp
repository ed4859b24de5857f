// Command-line interface: exact BCH expansions, tree enumeration,
// coefficient queries and the verification suites.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bchtrees/bchtrees.hpp"
#include "bchtrees/json_io.hpp"

namespace {

using namespace bchtrees;

struct OutputTarget {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
    file << text;
  }
};

std::vector<Rational> parse_seq_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw std::invalid_argument("empty coefficient list");
  return out;
}

struct ExpandOptions {
  int letters = 2;
  int max_degree = 1;
  std::string engine = "posetted";
  bool restrict_c = false;
  bool ledger = false;
  std::string format = "text";
  std::string seq = "default";
  OutputTarget output;
  int threads = 0;  // accepted as a hint; computation is single-threaded
};

int run_expand(const ExpandOptions& opt) {
  BchRequest req;
  req.letters = opt.letters;
  req.max_degree = opt.max_degree;
  req.engine = parse_engine(opt.engine);
  req.restrict_to_c = opt.restrict_c;
  req.with_ledger = opt.ledger;
  if (opt.seq != "default") {
    req.star_table = parse_seq_list(opt.seq);
  }
  validate_request(req);
  const BchResult res = run_bch(req);
  std::string text;
  if (opt.format == "text") {
    text = render_text(res.series) + "\n";
  } else if (opt.format == "json") {
    text = result_to_json(res, req).dump(2) + "\n";
  } else if (opt.format == "latex") {
    if (res.has_ledger) {
      std::ostringstream out;
      bool first = true;
      for (const auto& e : res.ledger) {
        if (e.coefficient == 0) continue;
        const bool negative = e.coefficient < 0;
        const Rational mag = negative ? Rational(-e.coefficient) : e.coefficient;
        if (first) {
          if (negative) out << "-";
          first = false;
        } else {
          out << (negative ? " - " : " + ");
        }
        if (mag == 1 && e.bracket.size() == 1) {
          out << e.bracket;
        } else if (mag == 1) {
          out << e.bracket;
        } else {
          out << latex_rational(mag) << " " << e.bracket;
        }
      }
      text = (first ? std::string("0") : out.str()) + "\n";
    } else {
      text = render_latex(res.series) + "\n";
    }
  } else {
    throw std::invalid_argument("unknown format '" + opt.format + "'");
  }
  opt.output.write(text);
  return 0;
}

struct TreesOptions {
  int leaves = 1;
  bool binary = false;
  std::string poset;
  std::string emit = "count";
  OutputTarget output;
};

int run_trees(const TreesOptions& opt) {
  if (opt.leaves < 1) throw std::invalid_argument("--leaves must be >= 1");
  std::vector<PlanarTree> trees;
  if (opt.poset.empty()) {
    trees = enumerate_trees(opt.leaves, opt.binary);
  } else {
    trees = enumerate_posetted(opt.leaves, ChainPoset::parse(opt.poset), opt.binary);
  }
  std::ostringstream out;
  if (opt.emit == "count") {
    out << trees.size() << "\n";
  } else if (opt.emit == "list") {
    for (const auto& t : trees) out << render_tree(t) << "\n";
  } else if (opt.emit == "dot") {
    for (size_t i = 0; i < trees.size(); ++i)
      out << tree_to_dot(trees[i], "tree" + std::to_string(i));
  } else {
    throw std::invalid_argument("unknown emit mode '" + opt.emit + "'");
  }
  opt.output.write(out.str());
  return 0;
}

struct CoeffOptions {
  std::string tree;
  std::string poset;
  std::string seq = "default";
  OutputTarget output;
};

int run_coeff(const CoeffOptions& opt) {
  const PlanarTree tree = parse_tree(opt.tree);
  const ChainPoset chain = ChainPoset::parse(opt.poset);
  for (const auto& label : leaf_labels(tree)) chain.position(label);  // unknown label -> error
  if (const auto violation = find_monotonicity_violation(tree, chain)) {
    const auto labels = leaf_labels(tree);
    const auto [l1, l2] = *violation;
    throw std::invalid_argument(
        "non-monotone labeling: leaves " + std::to_string(l1) + " <= " + std::to_string(l2) +
        " require f(" + std::to_string(l1) + ")=" + labels[static_cast<size_t>(l1) - 1] +
        " <= f(" + std::to_string(l2) + ")=" + labels[static_cast<size_t>(l2) - 1] +
        " in chain " + chain.render());
  }
  const CoefficientSeq seq = opt.seq == "default"
                                 ? bernoulli_coefficients()
                                 : table_coefficients(parse_seq_list(opt.seq));
  std::ostringstream out;
  out << "tree " << render_tree(tree) << " over " << chain.render() << "\n";
  Rational product = 1;
  for (const auto& s : subroots(tree)) {
    const int t = multiplicity_t(tree, s.subroot);
    const Rational factor = seq(s.distance) / Rational(t);
    product *= factor;
    out << "subroot path=" << path_text(s.subroot) << " d=" << s.distance
        << " m=" << s.rightmost_leaf << " t=" << t << " factor=" << rational_text(factor)
        << "\n";
  }
  out << "coefficient = " << rational_text(product) << "\n";
  opt.output.write(out.str());
  return 0;
}

struct VerifyOptions {
  int max_degree = 1;
  std::string suite = "all";
  std::string format = "text";
  OutputTarget output;
};

int run_verify(const VerifyOptions& opt) {
  if (opt.max_degree < 1) throw std::invalid_argument("--max-degree must be >= 1");
  const std::vector<CheckResult> checks = verify_suite(opt.suite, opt.max_degree);
  bool all_pass = true;
  std::ostringstream out;
  if (opt.format == "json") {
    Json arr = Json::array();
    for (const auto& c : checks) {
      all_pass = all_pass && c.pass;
      arr.push_back(Json{{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    out << arr.dump(2) << "\n";
  } else if (opt.format == "text") {
    for (const auto& c : checks) {
      all_pass = all_pass && c.pass;
      out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
      if (!c.detail.empty()) out << " (" << c.detail << ")";
      out << "\n";
    }
    out << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
  } else {
    throw std::invalid_argument("unknown format '" + opt.format + "'");
  }
  opt.output.write(out.str());
  return all_pass ? 0 : 1;
}

struct BernoulliOptions {
  int upto = 0;
  std::string format = "text";
  OutputTarget output;
};

int run_bernoulli(const BernoulliOptions& opt) {
  if (opt.upto < 0) throw std::invalid_argument("--upto must be >= 0");
  std::ostringstream out;
  if (opt.format == "json") {
    Json arr = Json::array();
    for (int n = 0; n <= opt.upto; ++n) arr.push_back(rational_to_json(bernoulli_b(n)));
    out << arr.dump(2) << "\n";
  } else if (opt.format == "text") {
    for (int n = 0; n <= opt.upto; ++n)
      out << "b_" << n << " = " << rational_text(bernoulli_b(n)) << "\n";
  } else {
    throw std::invalid_argument("unknown format '" + opt.format + "'");
  }
  opt.output.write(out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Baker-Campbell-Hausdorff expansions over posetted binary trees"};
  app.require_subcommand(1);

  ExpandOptions expand;
  auto* cmd_expand = app.add_subcommand("expand", "Expand a BCH or generalized product");
  cmd_expand->add_option("--letters", expand.letters, "Number of letters k (default 2)");
  cmd_expand->add_option("--max-degree", expand.max_degree, "Truncation degree N")->required();
  cmd_expand->add_option("--engine", expand.engine,
                         "posetted | posetted_reversed | recursive | dynkin | log | star");
  cmd_expand->add_flag("--restrict-c", expand.restrict_c,
                       "Sum only over trees whose local rightmost leaves carry the top label");
  cmd_expand->add_flag("--ledger", expand.ledger, "Record every tree summand");
  cmd_expand->add_option("--format", expand.format, "text | json | latex");
  cmd_expand->add_option("--seq", expand.seq,
                         "Coefficient sequence for the star engine: default | c1,c2,...");
  cmd_expand->add_option("--output", expand.output.path, "Write to file instead of stdout");
  cmd_expand->add_option("--threads", expand.threads, "Worker hint (accepted, single-threaded)");

  TreesOptions trees;
  auto* cmd_trees = app.add_subcommand("trees", "Enumerate planar rooted or posetted trees");
  cmd_trees->add_option("--leaves", trees.leaves, "Number of leaves")->required();
  cmd_trees->add_flag("--binary", trees.binary, "Binary trees only");
  cmd_trees->add_option("--poset", trees.poset, "Chain such as \"b<=a\": enumerate labelings");
  cmd_trees->add_option("--emit", trees.emit, "count | list | dot");
  cmd_trees->add_option("--output", trees.output.path, "Write to file instead of stdout");

  CoeffOptions coeff;
  auto* cmd_coeff = app.add_subcommand("coeff", "Coefficient of a labeled tree");
  cmd_coeff->add_option("--tree", coeff.tree, "Labeled tree, e.g. \"((b,a),a)\"")->required();
  cmd_coeff->add_option("--poset", coeff.poset, "Chain such as \"b<=a\"")->required();
  cmd_coeff->add_option("--seq", coeff.seq, "default | c1,c2,...");
  cmd_coeff->add_option("--output", coeff.output.path, "Write to file instead of stdout");

  VerifyOptions verify;
  auto* cmd_verify = app.add_subcommand("verify", "Run identity checks");
  cmd_verify->add_option("--max-degree", verify.max_degree, "Truncation degree N")->required();
  cmd_verify->add_option("--suite", verify.suite,
                         "all | engines | group-laws | bernoulli | cn | star");
  cmd_verify->add_option("--format", verify.format, "text | json");
  cmd_verify->add_option("--output", verify.output.path, "Write to file instead of stdout");

  BernoulliOptions bernoulli;
  auto* cmd_bernoulli = app.add_subcommand("bernoulli", "Table of the coefficients b_n");
  cmd_bernoulli->add_option("--upto", bernoulli.upto, "Last index")->required();
  cmd_bernoulli->add_option("--format", bernoulli.format, "text | json");
  cmd_bernoulli->add_option("--output", bernoulli.output.path,
                            "Write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_expand)) return run_expand(expand);
    if (app.got_subcommand(cmd_trees)) return run_trees(trees);
    if (app.got_subcommand(cmd_coeff)) return run_coeff(coeff);
    if (app.got_subcommand(cmd_verify)) return run_verify(verify);
    if (app.got_subcommand(cmd_bernoulli)) return run_bernoulli(bernoulli);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
