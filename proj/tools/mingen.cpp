// mingen: minimum generating sets of finite groups from the command line.
//
//   mingen d --algo auto --input z6.cay [--emit json]
//   mingen check --input table.cay
//   mingen make direct_product (alternating 5) (cyclic 2) [--output file]

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mingen/mingen.hpp"

namespace {

using nlohmann::json;
using namespace mingen;

enum Exit { ok = 0, invalid_input = 1, precondition = 2, resource = 3, internal_failure = 4 };

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse_error:
    case ErrorKind::not_a_group:
    case ErrorKind::identity_not_zero:
    case ErrorKind::not_a_permutation:
    case ErrorKind::bad_params:
      return invalid_input;
    case ErrorKind::order_exceeded:
    case ErrorKind::lattice_too_large:
      return resource;
    case ErrorKind::internal:
      return internal_failure;
    default:
      return precondition;
  }
}

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::parse_error, "cannot open '" + path + "'");
  ss << in.rdbuf();
  return ss.str();
}

GroupFile load(const std::string& path, const std::string& format) {
  auto text = read_input(path);
  if (format == "cayley")
    return {Format::cayley, parse_cayley(text), {}};
  if (format == "perm")
    return {Format::perm, Group(), parse_perm(text)};
  return parse_group_file(text);
}

unsigned threads_from_env() {
  const char* s = std::getenv("MINGEN_THREADS");
  if (!s || !*s)
    return 1;
  char* end = nullptr;
  unsigned long v = std::strtoul(s, &end, 10);
  if (*end || v == 0)
    throw Error(ErrorKind::bad_params, "MINGEN_THREADS must be a positive integer");
  return static_cast<unsigned>(std::min<unsigned long>(v, 256));
}

struct Report {
  std::size_t order = 0;
  std::optional<std::size_t> degree;
  std::string algorithm;
  std::string branch;
  std::size_t d = 0;
  std::optional<json> witness;
  std::uint64_t candidates_tried = 0;
  double elapsed_ms = 0;
  bool verified = false;
  json extra = json::object();
};

json to_json(const Report& r) {
  json j;
  j["order"] = r.order;
  j["degree"] = r.degree ? json(*r.degree) : json(nullptr);
  j["algorithm"] = r.algorithm;
  j["d"] = r.d;
  j["witness"] = r.witness ? *r.witness : json(nullptr);
  j["candidates_tried"] = r.candidates_tried;
  j["elapsed_ms"] = r.elapsed_ms;
  j["verified"] = r.verified;
  if (!r.branch.empty())
    j["branch"] = r.branch;
  for (auto& [k, v] : r.extra.items())
    j[k] = v;
  return j;
}

void print_text(const Report& r) {
  std::cout << "order: " << r.order << "\n";
  std::cout << "degree: " << (r.degree ? std::to_string(*r.degree) : "-") << "\n";
  std::cout << "algorithm: " << r.algorithm << "\n";
  if (!r.branch.empty())
    std::cout << "branch: " << r.branch << "\n";
  std::cout << "d: " << r.d << "\n";
  std::cout << "witness: " << (r.witness ? r.witness->dump() : "-") << "\n";
  std::cout << "candidates_tried: " << r.candidates_tried << "\n";
  std::cout << "elapsed_ms: " << r.elapsed_ms << "\n";
  std::cout << "verified: " << (r.verified ? "yes" : "no") << "\n";
  for (auto& [k, v] : r.extra.items())
    std::cout << k << ": " << v.dump() << "\n";
}

struct DOptions {
  std::string algo = "auto";
  std::string input;
  std::string top;
  std::string format = "auto";
  std::string emit = "text";
  std::size_t max_order = kDefaultMaxOrder;
  std::uint64_t chi_l = 60;
  std::uint64_t threshold_primitive = 10000;
  std::optional<std::uint64_t> seed;
};

Report run_d(const DOptions& o) {
  const auto start = std::chrono::steady_clock::now();
  auto algo = parse_algo(o.algo);
  if (!algo)
    throw Error(ErrorKind::bad_params, "unknown algorithm '" + o.algo + "'");
  AlgoConfig cfg;
  cfg.max_order = o.max_order;
  cfg.chi_l = o.chi_l;
  cfg.primitive_small_threshold = o.threshold_primitive;
  cfg.seed = o.seed;
  cfg.threads = threads_from_env();
  if (cfg.max_order == 0 || cfg.chi_l == 0 || cfg.primitive_small_threshold == 0)
    throw Error(ErrorKind::bad_params, "thresholds must be positive");

  const GroupFile file = load(o.input, o.format);
  Report rep;
  if (file.format == Format::perm)
    rep.degree = file.perm.degree;

  if (*algo == Algo::wreath) {
    if (o.top.empty())
      throw Error(ErrorKind::bad_params, "--algo wreath needs --top");
    const GroupFile top = load(o.top, o.format);
    const auto H = as_permutations(file), G = as_permutations(top);
    auto w = d_wreath(H, G, cfg);
    rep.order = enumerate_permutation_group(H, cfg.max_order).order();
    rep.algorithm = "wreath";
    rep.d = w.d;
    rep.extra = {{"d_H", w.d_H}, {"d_H_abelianized", w.d_H_abelianized}, {"d_top", w.d_G},
                 {"d_abelianized_wreath", w.d_abelianized}};
  } else {
    GroupInput input = file.format == Format::cayley ? GroupInput(file.table) : GroupInput(file.perm);
    auto res = dispatch(input, *algo, cfg);
    rep.order = res.group.order();
    rep.algorithm = res.algorithm;
    rep.branch = res.branch;
    rep.d = res.d;
    if (res.result) {
      const auto& r = *res.result;
      if (!is_generating_set(r.witness, res.group))
        throw Error(ErrorKind::internal, "witness failed re-verification");
      rep.verified = true;
      rep.candidates_tried = r.candidates_tried;
      json w = json::array();
      for (auto x : r.witness) {
        if (file.format == Format::perm)
          w.push_back(one_based(res.group.permutation(x)));
        else
          w.push_back(x);
      }
      rep.witness = std::move(w);
      if (r.chi_l_member)
        rep.extra["chi_l_member"] = *r.chi_l_member;
    }
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

int run_check(const std::string& input, const std::string& format, std::size_t max_order) {
  const GroupFile file = load(input, format);
  const Group G = to_group(file, max_order);
  auto cls = classify(G);
  std::cout << "ok: " << to_string(file.format) << " group of order " << G.order();
  if (file.format == Format::perm)
    std::cout << ", degree " << file.perm.degree << ", " << file.perm.generators.size() << " generators";
  std::cout << "\nabelian: " << (cls.abelian ? "yes" : "no") << "\nsimple: " << (cls.simple ? "yes" : "no")
            << "\nsolvable: " << (cls.solvable ? "yes" : "no") << "\n";
  return ok;
}

int run_make(const std::vector<std::string>& words, const std::string& input, const std::string& output) {
  GroupFile f;
  if (!input.empty()) {
    if (words.size() != 1 || words[0] != "regular")
      throw Error(ErrorKind::bad_params, "--input is only used with 'make regular'");
    f = {Format::perm, Group(), regular_perm(to_group(load(input, "auto")))};
  } else {
    std::string spec;
    for (const auto& w : words)
      spec += w + " ";
    f = make_fixture(spec);
  }
  const auto text = serialize(f);
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out)
      throw Error(ErrorKind::bad_params, "cannot write '" + output + "'");
    out << text;
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum generating sets of finite groups"};
  app.require_subcommand(1);

  DOptions d;
  auto* dcmd = app.add_subcommand("d", "compute d(G) and a minimum generating set");
  dcmd->add_option("--algo", d.algo, "auto|brute|general|simple-product|solvable|primitive|chief|wreath")
      ->capture_default_str();
  dcmd->add_option("--input", d.input, "group file, or - for stdin")->required();
  dcmd->add_option("--top", d.top, "top group file for --algo wreath");
  dcmd->add_option("--format", d.format, "auto|cayley|perm")->check(CLI::IsMember({"auto", "cayley", "perm"}))
      ->capture_default_str();
  dcmd->add_option("--max-order", d.max_order, "enumeration limit")->capture_default_str();
  dcmd->add_option("--chi-l", d.chi_l, "chi(l) bound reported by the chief algorithm")->capture_default_str();
  dcmd->add_option("--threshold-primitive", d.threshold_primitive, "order below which d_primitive runs directly")
      ->capture_default_str();
  dcmd->add_option("--emit", d.emit, "json|text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  dcmd->add_option("--seed", d.seed, "random tie-breaking seed");

  std::string check_input, check_format = "auto";
  std::size_t check_max = kDefaultMaxOrder;
  auto* ccmd = app.add_subcommand("check", "validate a group file");
  ccmd->add_option("--input", check_input, "group file, or - for stdin")->required();
  ccmd->add_option("--format", check_format, "auto|cayley|perm")->check(CLI::IsMember({"auto", "cayley", "perm"}));
  ccmd->add_option("--max-order", check_max, "enumeration limit");

  std::vector<std::string> make_words;
  std::string make_input, make_output;
  auto* mcmd = app.add_subcommand("make", "write a fixture group file");
  mcmd->add_option("family", make_words, "family and parameters, e.g. wreath (cyclic 3) (cyclic 2)")->required();
  mcmd->add_option("--input", make_input, "group file for 'make regular'");
  mcmd->add_option("--output,-o", make_output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? ok : invalid_input;
  }

  try {
    if (*dcmd) {
      auto rep = run_d(d);
      if (d.emit == "json")
        std::cout << to_json(rep).dump(2) << "\n";
      else
        print_text(rep);
      return ok;
    }
    if (*ccmd)
      return run_check(check_input, check_format, check_max);
    return run_make(make_words, make_input, make_output);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return resource;
  }
}
