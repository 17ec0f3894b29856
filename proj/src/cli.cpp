#include "fg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "fg/autom.hpp"
#include "fg/binorm.hpp"
#include "fg/comm.hpp"
#include "fg/lab.hpp"
#include "fg/parse.hpp"
#include "fg/qm.hpp"
#include "fg/rational.hpp"
#include "fg/word.hpp"

namespace fg {

namespace {

constexpr const char* kGrammar =
    "Word grammar: lowercase letters a-z denote generators 1-26; uppercase\n"
    "letters denote their inverses; `^k` applies an integer power to the\n"
    "preceding letter or parenthesized group; whitespace ignored; `[u,v]`\n"
    "denotes the commutator u v u^-1 v^-1.\n"
    "Examples: abAB, a^3, (ab)^-2, [a,b].\n"
    "Input files: UTF-8, one word per line, `#` starts a comment line,\n"
    "blank lines skipped.";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a word literal, or a path to a file with one word per line
std::vector<Word> read_inputs(const std::string& input, int rank) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::is_regular_file(input, ec)) {
    std::ifstream file(input);
    if (!file) throw UsageError("cannot open input file: " + input);
    std::vector<Word> words;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(file, line)) {
      ++line_no;
      std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos || line[start] == '#') continue;
      try {
        words.push_back(parse_word(line, rank));
      } catch (const ParseError& e) {
        throw UsageError(input + ":" + std::to_string(line_no) + ": " + e.what());
      }
    }
    return words;
  }
  return {parse_word(input, rank)};
}

std::vector<Word> parse_word_list(const std::string& csv, int rank) {
  std::vector<Word> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_word(item, rank));
  return out;
}

Rational parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)),
                    std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw UsageError("cannot parse rational: " + text);
  }
}

class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file: " + path);
    } else {
      stream_ = &fallback;
    }
  }
  std::ostream& stream() { return stream_ ? *stream_ : file_; }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

std::string render_certificate(const NormCertificate& cert) {
  std::string out;
  for (std::size_t i = 0; i < cert.factors.size(); ++i) {
    if (i) out += ';';
    out += letter_char(cert.factors[i].generator);
    if (!cert.factors[i].conjugator.empty()) {
      out += '^';
      out += cert.factors[i].conjugator.str();
    }
  }
  return out;
}

// reported lower bounds that rest on configured defect bounds carry a '?'
std::string render_cl_lower(const ClBounds& cl) {
  std::string s = std::to_string(cl.lower);
  if (cl.lower_conditional) s += '?';
  return s;
}

void run_norm(const std::string& input, int rank, bool certificate,
              std::ostream& os) {
  for (const Word& g : read_inputs(input, rank)) {
    NormCertificate cert = binorm(g);
    os << g.str() << ',' << cert.k;
    if (certificate) os << ',' << render_certificate(cert);
    os << '\n';
  }
}

void run_cl(const std::string& input, int rank, int budget, std::ostream& os) {
  for (const Word& g : read_inputs(input, rank)) {
    int bw = binorm(g).k;
    if (!in_commutator_subgroup(g)) {
      os << g.str() << ",false,,,,," << bw << '\n';
      continue;
    }
    ClBounds cl = cl_bounds(g, budget);
    os << g.str() << ",true," << render_cl_lower(cl) << ',' << cl.upper << ',';
    if (cl.exact) os << *cl.exact;
    os << ',';
    if (cl.exact) os << *cl.exact;  // equals cl on the commutator subgroup
    os << ',' << bw << '\n';
  }
}

void run_qm_eval(const std::string& pattern_text, const std::string& input,
                 int rank, bool homogeneous, std::optional<long long> numeric_n,
                 std::optional<std::string> bound_text, std::ostream& os) {
  Word pattern = parse_word(pattern_text, rank);
  CountingQM q = bound_text ? CountingQM(pattern, parse_rational(*bound_text))
                            : CountingQM(pattern);
  for (const Word& g : read_inputs(input, rank)) {
    Rational value = numeric_n    ? homogenize_numeric(q, g, *numeric_n)
                     : homogeneous ? homogenize_exact(q, g)
                                   : evaluate(q, g);
    os << to_string(value) << '\n';
  }
}

void run_commensurable(const std::string& g_text, const std::string& h_text,
                       int rank, bool strong, std::ostream& os) {
  Word g = parse_word(g_text, rank);
  Word h = parse_word(h_text, rank);
  if (strong) {
    auto witness = are_strongly_commensurable(g, h);
    if (witness)
      os << witness->n << ',' << witness->x.str() << '\n';
    else
      os << "absent\n";
    return;
  }
  auto witness = are_commensurable(g, h);
  if (witness)
    os << witness->n << ',' << witness->m << ',' << witness->x.str() << '\n';
  else
    os << "absent\n";
}

Automorphism parse_automorphism(const std::string& images_csv,
                                const std::string& inverses_csv) {
  std::vector<std::string> image_texts, inverse_texts;
  std::stringstream si(images_csv), sv(inverses_csv);
  std::string item;
  while (std::getline(si, item, ',')) image_texts.push_back(item);
  while (std::getline(sv, item, ',')) inverse_texts.push_back(item);
  if (image_texts.empty() || image_texts.size() != inverse_texts.size())
    throw UsageError("--images and --inverse need the same number of words");
  int rank = static_cast<int>(image_texts.size());
  std::vector<Word> images, inverses;
  for (const std::string& t : image_texts) images.push_back(parse_word(t, rank));
  for (const std::string& t : inverse_texts)
    inverses.push_back(parse_word(t, rank));
  return Automorphism(std::move(images), std::move(inverses));
}

void run_check_inner(const Automorphism& phi, std::ostream& os) {
  auto witness = is_inner(phi);
  if (witness)
    os << witness->conjugator.str() << '\n';
  else
    os << "non-inner\n";
}

void run_witness(const Automorphism& phi, bool strict, int pattern_max,
                 int g_max, int pair_budget, std::ostream& os) {
  nlohmann::json line;
  if (auto inner = is_inner(phi)) {
    line["found"] = false;
    line["reason"] = "inner";
    line["conjugator"] = inner->conjugator.str();
    os << line.dump() << '\n';
    return;
  }
  auto cert = find_noninner_witness(phi, pattern_max, g_max, pair_budget, strict);
  if (!cert) {
    line["found"] = false;
    line["reason"] = "budget-exhausted";
    os << line.dump() << '\n';
    return;
  }
  line["found"] = true;
  line["mode"] = strict ? "strict" : "difference";
  line["pattern"] = cert->pattern.str();
  line["g"] = cert->g.str();
  line["value"] = to_string(cert->value);
  line["value_phi"] = to_string(cert->value_phi);
  if (cert->violation_pair) {
    line["violation_pair"] = {cert->violation_pair->first.str(),
                              cert->violation_pair->second.str()};
  } else {
    line["violation_pair"] = nullptr;
  }
  os << line.dump() << '\n';
}

void emit_sweep(const LabConfig& lab, const std::string& format,
                std::ostream& os) {
  if (format == "csv") {
    os << "word,bw,cl_lower,cl_lower_conditional,cl_upper,cl_exact,ab_length";
    for (const Word& p : lab.patterns) os << ",psi_" << p.str();
    os << '\n';
    inequality_sweep(lab, [&](const SweepRow& row) {
      os << row.word.str() << ',' << row.bw << ',' << row.cl.lower << ','
         << (row.cl.lower_conditional ? "true" : "false") << ',' << row.cl.upper
         << ',';
      if (row.cl.exact) os << *row.cl.exact;
      os << ',';
      if (row.ab) os << *row.ab;
      for (const Rational& v : row.psi) os << ',' << to_string(v);
      os << '\n';
    });
    return;
  }
  inequality_sweep(lab, [&](const SweepRow& row) {
    nlohmann::json j;
    j["word"] = row.word.str();
    j["bw"] = row.bw;
    j["cl_lower"] = row.cl.lower;
    j["cl_lower_conditional"] = row.cl.lower_conditional;
    j["cl_upper"] = row.cl.upper;
    j["cl_exact"] = row.cl.exact ? nlohmann::json(*row.cl.exact) : nlohmann::json();
    j["ab_length"] = row.ab ? nlohmann::json(*row.ab) : nlohmann::json();
    for (std::size_t i = 0; i < lab.patterns.size(); ++i)
      j["psi_" + lab.patterns[i].str()] = to_string(row.psi[i]);
    os << j.dump() << '\n';
  });
}

void emit_squares(const LabConfig& lab, const std::string& format,
                  std::ostream& os) {
  if (format == "csv") {
    os << "word,u,v,cl_lower,cl_lower_conditional,cl_upper,cl_exact";
    for (const Word& p : lab.patterns) os << ",psi_" << p.str();
    os << '\n';
    square_commutator_search(lab, [&](const SquareCommutatorHit& hit) {
      os << hit.g.str() << ',' << hit.square_witness.first.str() << ','
         << hit.square_witness.second.str() << ',' << hit.cl.lower << ','
         << (hit.cl.lower_conditional ? "true" : "false") << ',' << hit.cl.upper
         << ',';
      if (hit.cl.exact) os << *hit.cl.exact;
      for (const Rational& v : hit.psi) os << ',' << to_string(v);
      os << '\n';
    });
    return;
  }
  square_commutator_search(lab, [&](const SquareCommutatorHit& hit) {
    nlohmann::json j;
    j["word"] = hit.g.str();
    j["u"] = hit.square_witness.first.str();
    j["v"] = hit.square_witness.second.str();
    j["cl_lower"] = hit.cl.lower;
    j["cl_lower_conditional"] = hit.cl.lower_conditional;
    j["cl_upper"] = hit.cl.upper;
    j["cl_exact"] = hit.cl.exact ? nlohmann::json(*hit.cl.exact) : nlohmann::json();
    for (std::size_t i = 0; i < lab.patterns.size(); ++i)
      j["psi_" + lab.patterns[i].str()] = to_string(hit.psi[i]);
    os << j.dump() << '\n';
  });
}

void emit_qm_bound(const std::vector<Word>& patterns,
                   const std::vector<Word>& words, const std::string& format,
                   std::ostream& os) {
  auto rows = qm_boundedness_report(patterns, words);
  if (format == "csv") {
    os << "pattern,sup_abs_psi,attained_at,note\n";
    for (const auto& row : rows) {
      os << row.pattern.str() << ',' << to_string(row.sup_abs) << ','
         << (row.attained_at ? row.attained_at->str() : std::string())
         << ",one-sided\n";
    }
    return;
  }
  for (const auto& row : rows) {
    nlohmann::json j;
    j["pattern"] = row.pattern.str();
    j["sup_abs_psi"] = to_string(row.sup_abs);
    j["attained_at"] =
        row.attained_at ? nlohmann::json(row.attained_at->str()) : nlohmann::json();
    j["note"] = "one-sided";
    os << j.dump() << '\n';
  }
}

void validate(const Config& c) {
  if (c.rank < 2 || c.rank > kMaxRank)
    throw UsageError("rank must be in [2, 26]");
  if (c.pattern_max < 1 || c.g_max < 1 || c.pair_budget < 1 ||
      c.exponent_budget < 1 || c.cl_budget < 1)
    throw UsageError("budgets must be positive");
  if (c.format != "csv" && c.format != "jsonl")
    throw UsageError("format must be csv or jsonl");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{std::string("free group word calculus\n\n") + kGrammar, "fg"};
  app.require_subcommand(0, 1);

  Config config;
  std::string input, pattern_text, patterns_csv = "ab";
  std::string g_text, h_text, images_csv, inverses_csv;
  bool certificate = false, homogeneous = false, strong = false, strict = false;
  long long numeric_n = 0;
  std::string bound_text;
  int max_len = 6;

  auto* norm = app.add_subcommand("norm", "bi-invariant word norm with certificates");
  norm->add_option("--input", input, "word or file")->required();
  norm->add_flag("--certificate", certificate, "append the factor decomposition");
  norm->add_option("--rank", config.rank, "ambient rank");
  norm->add_option("--out", config.out_path, "output file");

  auto* cl = app.add_subcommand("cl", "commutator length bounds");
  cl->add_option("--input", input, "word or file")->required();
  cl->add_option("--budget", config.cl_budget, "entry length for the exact search");
  cl->add_option("--rank", config.rank, "ambient rank");
  cl->add_option("--out", config.out_path, "output file");

  auto* qm = app.add_subcommand("qm", "counting quasimorphisms");
  auto* qm_eval = qm->add_subcommand("eval", "evaluate a counting quasimorphism");
  qm_eval->add_option("--pattern", pattern_text, "counting pattern")->required();
  qm_eval->add_option("--input", input, "word or file")->required();
  qm_eval->add_flag("--homogeneous", homogeneous, "exact homogenization");
  auto* numeric_opt =
      qm_eval->add_option("--numeric-n", numeric_n, "evaluate q(g^n)/n");
  qm_eval->add_option("--defect-bound", bound_text, "override the defect bound");
  qm_eval->add_option("--rank", config.rank, "ambient rank");
  qm_eval->add_option("--out", config.out_path, "output file");

  auto* comm = app.add_subcommand("commensurable", "decide (strong) commensurability");
  comm->add_option("--g", g_text, "first word")->required();
  comm->add_option("--h", h_text, "second word")->required();
  comm->add_flag("--strong", strong, "require equal exponents");
  comm->add_option("--rank", config.rank, "ambient rank");

  auto* aut = app.add_subcommand("aut", "automorphism tools");
  auto* check_inner = aut->add_subcommand("check-inner", "decide innerness");
  check_inner->add_option("--images", images_csv, "generator images")->required();
  check_inner->add_option("--inverse", inverses_csv, "inverse images")->required();
  auto* witness = aut->add_subcommand("witness", "distinguishing quasimorphism");
  witness->add_option("--images", images_csv, "generator images")->required();
  witness->add_option("--inverse", inverses_csv, "inverse images")->required();
  witness->add_flag("--strict", strict, "require unbounded/vanishing split");
  witness->add_option("--pattern-max", config.pattern_max, "pattern length cap");
  witness->add_option("--g-max", config.g_max, "candidate length cap");
  witness->add_option("--pair-budget", config.pair_budget, "violation pair length cap");

  auto add_lab_options = [&](CLI::App* cmd) {
    cmd->add_option("--rank", config.rank, "ambient rank");
    cmd->add_option("--max-len", max_len, "enumeration length cap");
    cmd->add_option("--budget", config.cl_budget, "exact-search budget");
    cmd->add_option("--patterns", patterns_csv, "comma-separated pattern words");
    cmd->add_option("--format", config.format, "csv or jsonl");
    cmd->add_option("--out", config.out_path, "output file");
    cmd->add_option("--seed", config.seed, "run seed (recorded for reproducibility)");
  };
  auto* sweep = app.add_subcommand("sweep", "norm vs commutator length sweep");
  add_lab_options(sweep);
  auto* squares = app.add_subcommand("search-squares",
                                     "words whose square is a commutator");
  add_lab_options(squares);
  auto* qm_bound = app.add_subcommand("qm-bound", "per-pattern boundedness report");
  qm_bound->add_option("--patterns", patterns_csv, "comma-separated pattern words");
  qm_bound->add_option("--input", input, "word or file")->required();
  qm_bound->add_option("--rank", config.rank, "ambient rank");
  qm_bound->add_option("--format", config.format, "csv or jsonl");
  qm_bound->add_option("--out", config.out_path, "output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (app.get_subcommands().empty()) {
      out << app.help();
      return 0;
    }
    validate(config);
    OutputTarget target(config.out_path, out);
    std::ostream& os = target.stream();

    if (norm->parsed()) {
      run_norm(input, config.rank, certificate, os);
    } else if (cl->parsed()) {
      run_cl(input, config.rank, config.cl_budget, os);
    } else if (qm->parsed()) {
      if (!qm_eval->parsed()) throw UsageError("qm requires the eval subcommand");
      run_qm_eval(pattern_text, input, config.rank, homogeneous,
                  numeric_opt->count() ? std::optional<long long>(numeric_n)
                                       : std::nullopt,
                  bound_text.empty() ? std::nullopt
                                     : std::optional<std::string>(bound_text),
                  os);
    } else if (comm->parsed()) {
      run_commensurable(g_text, h_text, config.rank, strong, os);
    } else if (aut->parsed()) {
      if (!check_inner->parsed() && !witness->parsed())
        throw UsageError("aut requires check-inner or witness");
      Automorphism phi = parse_automorphism(images_csv, inverses_csv);
      if (check_inner->parsed())
        run_check_inner(phi, os);
      else
        run_witness(phi, strict, config.pattern_max, config.g_max,
                    config.pair_budget, os);
    } else if (sweep->parsed() || squares->parsed() || qm_bound->parsed()) {
      LabConfig lab;
      lab.rank = config.rank;
      lab.max_len = max_len;
      lab.budget = config.cl_budget;
      lab.patterns = parse_word_list(patterns_csv, config.rank);
      if (sweep->parsed()) {
        emit_sweep(lab, config.format, os);
      } else if (squares->parsed()) {
        emit_squares(lab, config.format, os);
      } else {
        emit_qm_bound(lab.patterns, read_inputs(input, config.rank),
                      config.format, os);
      }
    }
    return 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace fg
