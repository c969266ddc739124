#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dendrikit/json_io.hpp"
#include "dendrikit/parse.hpp"
#include "dendrikit/qsym.hpp"
#include "dendrikit/sylvester.hpp"
#include "dendrikit/tits.hpp"
#include "dendrikit/trees.hpp"
#include "dendrikit/verify.hpp"

namespace {

using namespace dendrikit;

int env_bound() {
  const char* s = std::getenv("DENDRIKIT_MAX_DEGREE");
  if (!s || !*s) return kDefaultDegreeBound;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (*end != '\0' || v < 1)
    throw ResourceLimitError("DENDRIKIT_MAX_DEGREE must be a positive integer");
  return static_cast<int>(v);
}

struct Cli {
  bool json = false;
  bool timing = false;
  bool corrupt = false;
  int max_degree = 0;
  unsigned long long seed = 20240601;
  std::size_t limit = 25;
  int jobs = 1;
  int alphabet = 0;
  std::string op = "full";
  std::string object;
  std::string suite;
  std::string arg1, arg2;
};

void emit(const Cli& cli, const Json& j, const std::string& text) {
  if (cli.json)
    std::cout << j.dump() << "\n";
  else
    std::cout << text << "\n";
}

int cmd_pack(const Cli& cli) {
  PackedWord u = pack(Word::parse(cli.arg1));
  emit(cli, Json{{"word", word_json(u.word())}}, u.str());
  return 0;
}

int cmd_detass(const Cli& cli) {
  ParkingWord p = detass(PackedWord::parse(cli.arg1));
  emit(cli, Json{{"word", word_json(p.word())}}, p.word().str());
  return 0;
}

int cmd_fiber(const Cli& cli) {
  PackedWord u = PackedWord::parse(cli.arg1);
  std::vector<ParkingWord> fiber = parking_fiber(u);
  Json members = Json::array();
  std::string text;
  for (const ParkingWord& p : fiber) {
    members.push_back(word_json(p.word()));
    if (!text.empty()) text += "\n";
    text += p.word().str();
  }
  emit(cli, Json{{"word", word_json(u.word())}, {"fiber", members}}, text);
  return 0;
}

int cmd_tree(const Cli& cli) {
  PlaneTree t = tree_of_word(Word::parse(cli.arg1));
  emit(cli, Json{{"tree", t.str()}}, t.str());
  return 0;
}

int cmd_mul(const Cli& cli) {
  NCQSymElement x = parse_element(cli.arg1), y = parse_element(cli.arg2);
  NCQSymElement r;
  if (cli.op == "full")
    r = product_full(x, y);
  else if (cli.op == "prec")
    r = product_prec(x, y);
  else if (cli.op == "circ")
    r = product_circ(x, y);
  else
    r = product_succ(x, y);
  emit(cli, element_json(r), element_str(r));
  return 0;
}

int cmd_coproduct(const Cli& cli) {
  TensorElement<PackedWord> d = coproduct(parse_element(cli.arg1));
  emit(cli, tensor_json(d), tensor_str(d));
  return 0;
}

int cmd_expand(const Cli& cli) {
  NCQSymElement x = parse_element(cli.arg1);
  NCPolynomial p{cli.alphabet, {}};
  for (const auto& [u, c] : x.terms()) {
    NCPolynomial q = expand(u, cli.alphabet);
    q.poly *= c;
    p.poly += q.poly;
  }
  emit(cli, poly_json(p), poly_str(p));
  return 0;
}

int cmd_tits(const Cli& cli) {
  PackedWord r = tits_product(PackedWord::parse(cli.arg1), PackedWord::parse(cli.arg2));
  emit(cli, Json{{"word", word_json(r.word())}}, r.str());
  return 0;
}

int cmd_sylv_class(const Cli& cli, int bound) {
  SylvesterClass c = sylv_class(Word::parse(cli.arg1), bound);
  Json members = Json::array();
  std::string text = "representative: " + c.representative.str();
  for (const Word& w : c.members) {
    members.push_back(word_json(w));
    text += "\nmember: " + w.str();
  }
  emit(cli, Json{{"representative", word_json(c.representative)}, {"members", members}}, text);
  return 0;
}

int cmd_hilbert(const Cli& cli, int bound) {
  const int d = cli.max_degree > 0 ? cli.max_degree : std::min(6, bound);
  Json dims = Json::array();
  std::string text = "[";
  for (int n = 1; n <= d; ++n) {
    std::size_t dim = 0;
    if (cli.object == "T")
      dim = generate_free(n, bound).size();
    else if (cli.object == "NCQSYM")
      dim = enumerate_packed(n, bound).size();
    else if (cli.object == "SYL")
      dim = sylv_class_count(n, bound);
    else
      dim = enumerate_trees(n, bound).size();
    dims.push_back(dim);
    if (n > 1) text += ",";
    text += std::to_string(dim);
  }
  text += "]";
  emit(cli, Json{{"object", cli.object}, {"max_degree", d}, {"dims", dims}}, text);
  return 0;
}

int cmd_verify(const Cli& cli, int bound) {
  VerifyOptions opt;
  opt.max_degree = cli.max_degree;
  opt.seed = cli.seed;
  opt.jobs = cli.jobs;
  opt.limit = cli.limit;
  opt.corrupt = cli.corrupt;
  opt.bound = bound;
  std::vector<SuiteReport> reports = run_verify(cli.suite, opt);
  bool all_pass = true;
  Json out = Json::array();
  std::string text;
  for (const SuiteReport& rep : reports) {
    all_pass = all_pass && rep.pass;
    Json params = Json::object();
    std::string ptext;
    for (const auto& [k, v] : rep.params) {
      params[k] = v;
      ptext += " " + k + "=" + v;
    }
    Json jr{{"suite", rep.suite},
            {"params", params},
            {"checks", rep.checks},
            {"pass", rep.pass},
            {"counterexamples", rep.counterexamples}};
    if (cli.timing) jr["seconds"] = rep.seconds;
    out.push_back(jr);
    if (!text.empty()) text += "\n";
    text += "suite " + rep.suite + ": " + (rep.pass ? "PASS" : "FAIL") +
            " checks=" + std::to_string(rep.checks) + ptext;
    if (cli.timing) text += " time=" + std::to_string(rep.seconds) + "s";
    for (const std::string& ce : rep.counterexamples) text += "\n  counterexample: " + ce;
  }
  emit(cli, Json{{"reports", out}}, text);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the free dendriform trialgebra inside NCQSym"};
  app.require_subcommand(1);
  Cli cli;
  app.add_flag("--json", cli.json, "machine-readable JSON output");
  app.add_flag("--timing", cli.timing, "include wall-clock timing in verify reports");
  app.add_option("--max-degree", cli.max_degree, "override the per-command default degree");
  app.add_option("--seed", cli.seed, "seed for randomized sweeps");
  app.add_option("--limit", cli.limit, "counterexamples kept per suite");
  app.add_option("--jobs", cli.jobs, "worker threads for verify sweeps")
      ->check(CLI::PositiveNumber);

  auto* pack_cmd = app.add_subcommand("pack", "pack a word onto the alphabet {1..k}");
  pack_cmd->add_option("word", cli.arg1, "word literal, e.g. 4,1,4")->required();
  auto* detass_cmd = app.add_subcommand("detass", "maximal unpacking of a packed word");
  detass_cmd->add_option("word", cli.arg1, "packed word literal")->required();
  auto* fiber_cmd = app.add_subcommand("fiber", "parking words that pack to the given word");
  fiber_cmd->add_option("word", cli.arg1, "packed word literal")->required();
  auto* tree_cmd = app.add_subcommand("tree", "plane tree of a word");
  tree_cmd->add_option("word", cli.arg1, "word literal")->required();
  auto* mul_cmd = app.add_subcommand("mul", "product of two elements in the M basis");
  mul_cmd->add_option("x", cli.arg1, "element literal")->required();
  mul_cmd->add_option("y", cli.arg2, "element literal")->required();
  mul_cmd->add_option("--op", cli.op, "full | prec | circ | succ")
      ->check(CLI::IsMember({"full", "prec", "circ", "succ"}));
  auto* cop_cmd = app.add_subcommand("coproduct", "coproduct of an element");
  cop_cmd->add_option("x", cli.arg1, "element literal")->required();
  auto* expand_cmd = app.add_subcommand("expand", "polynomial realization on a finite alphabet");
  expand_cmd->add_option("x", cli.arg1, "element literal")->required();
  expand_cmd->add_option("--alphabet", cli.alphabet, "number of variables")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* tits_cmd = app.add_subcommand("tits", "internal face product of two packed words");
  tits_cmd->add_option("u", cli.arg1, "packed word literal")->required();
  tits_cmd->add_option("v", cli.arg2, "packed word literal")->required();
  auto* sylv_cmd = app.add_subcommand("sylv-class", "sylvester congruence class of a word");
  sylv_cmd->add_option("word", cli.arg1, "word literal")->required();
  auto* hilbert_cmd = app.add_subcommand("hilbert", "graded dimensions of an object");
  hilbert_cmd->add_option("object", cli.object, "T | NCQSYM | SYL | TREES")
      ->required()
      ->check(CLI::IsMember({"T", "NCQSYM", "SYL", "TREES"}));
  auto* verify_cmd = app.add_subcommand("verify", "run an invariant suite");
  std::string suites;
  for (const std::string& s : verify_suite_names()) suites += s + " | ";
  verify_cmd->add_option("suite", cli.suite, suites + "all")->required();
  verify_cmd->add_flag("--corrupt", cli.corrupt, "self-test hook: damage the full product");
  for (CLI::App* sub : {pack_cmd, detass_cmd, fiber_cmd, tree_cmd, mul_cmd, cop_cmd, expand_cmd,
                        tits_cmd, sylv_cmd, hilbert_cmd, verify_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const int bound = env_bound();
    if (cli.max_degree < 0 || cli.max_degree > bound)
      throw ResourceLimitError("--max-degree must lie in [0, " + std::to_string(bound) + "]");
    if (pack_cmd->parsed()) return cmd_pack(cli);
    if (detass_cmd->parsed()) return cmd_detass(cli);
    if (fiber_cmd->parsed()) return cmd_fiber(cli);
    if (tree_cmd->parsed()) return cmd_tree(cli);
    if (mul_cmd->parsed()) return cmd_mul(cli);
    if (cop_cmd->parsed()) return cmd_coproduct(cli);
    if (expand_cmd->parsed()) return cmd_expand(cli);
    if (tits_cmd->parsed()) return cmd_tits(cli);
    if (sylv_cmd->parsed()) return cmd_sylv_class(cli, bound);
    if (hilbert_cmd->parsed()) return cmd_hilbert(cli, bound);
    if (verify_cmd->parsed()) {
      bool known = cli.suite == "all";
      for (const std::string& s : verify_suite_names()) known = known || s == cli.suite;
      if (!known) throw ResourceLimitError("unknown verify suite: " + cli.suite);
      return cmd_verify(cli, bound);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
