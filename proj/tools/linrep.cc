// linrep.cc
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line front end. Exit codes: 0 for success or a true verdict,
// 1 for a false verdict, 2 for any error. Results go to stdout,
// diagnostics to stderr.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "linrep/io.hh"
#include "linrep/oracle.hh"
#include "linrep/reduction.hh"
#include "linrep/regular.hh"

namespace {

using namespace linrep;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

int cmd_eval_word(const std::string& file, const std::string& word_text) {
  const RepresentationDocument doc = load_document(file);
  const Word b = word_from_string(word_text);
  std::cout << eval_series(doc.rep, b) << "\n";
  return kExitTrue;
}

int cmd_eval_n(const std::string& file, const std::string& n_text) {
  const RepresentationDocument doc = load_document(file);
  Integer n;
  try {
    n = Integer(n_text, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed index \"" + n_text + "\"");
  }
  if (sgn(n) < 0) throw std::invalid_argument("index must be non-negative");
  std::cout << eval_sequence(doc.rep, n) << "\n";
  return kExitTrue;
}

int cmd_minimise(const std::string& file, const std::string& output,
                 bool as_sequence) {
  RepresentationDocument doc = load_document(file);
  if (as_sequence) {
    if (!is_proper(doc.rep)) {
      std::cerr << "warning: input not proper; properised first\n";
    }
    doc.rep = minimise_regular(doc.rep);
  } else {
    doc.rep = minimise(doc.rep);
  }
  save_document(doc, output);
  return kExitTrue;
}

int cmd_properise(const std::string& file, const std::string& output) {
  RepresentationDocument doc = load_document(file);
  doc.rep = properise(doc.rep);
  save_document(doc, output);
  return kExitTrue;
}

int cmd_check_proper(const std::string& file) {
  const RepresentationDocument doc = load_document(file);
  if (is_proper(doc.rep)) {
    std::cout << "proper\n";
    return kExitTrue;
  }
  std::cout << "not proper\n";
  std::cout << "M(0)w = " << doc.rep.matrix(0) * doc.rep.exit() << "\n";
  std::cout << "w     = " << doc.rep.exit() << "\n";
  return kExitFalse;
}

int cmd_equiv(const std::string& file1, const std::string& file2,
              bool as_sequence, const std::optional<unsigned>& brute_force) {
  const RepresentationDocument doc1 = load_document(file1);
  const RepresentationDocument doc2 = load_document(file2);
  bool equal = false;
  if (brute_force) {
    // Enumeration instead of the exact decision; in sequence mode the
    // properised pair is enumerated, which covers every index value whose
    // expansion fits in the length bound.
    if (as_sequence) {
      equal = brute_force_equal(properise(doc1.rep), properise(doc2.rep),
                                *brute_force);
    } else {
      equal = brute_force_equal(doc1.rep, doc2.rep, *brute_force);
    }
  } else {
    equal = as_sequence ? sequence_equal(doc1.rep, doc2.rep)
                        : series_equal(doc1.rep, doc2.rep);
  }
  std::cout << (equal ? "equal\n" : "not equal\n");
  return equal ? kExitTrue : kExitFalse;
}

int cmd_hankel_rank(const std::string& file, unsigned max_len) {
  const RepresentationDocument doc = load_document(file);
  std::cout << hankel_rank(doc.rep, max_len) << "\n";
  return kExitTrue;
}

void print_witnesses(const std::vector<Word>& witnesses, unsigned q) {
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    std::cout << "  [" << i << "] " << word_to_string(witnesses[i]) << " (val "
              << word_value(witnesses[i], q).get_str() << ")\n";
  }
}

int cmd_info(const std::string& file) {
  const RepresentationDocument doc = load_document(file);
  const LinearRepresentation& rep = doc.rep;
  if (doc.name) std::cout << "name: " << *doc.name << "\n";
  if (doc.description) std::cout << "description: " << *doc.description << "\n";
  std::cout << "q: " << rep.alphabet_size() << "\n";
  std::cout << "dimension: " << rep.dimension() << "\n";
  std::cout << "proper: " << (is_proper(rep) ? "yes" : "no") << "\n";

  const ReachabilityBasis reach = reachability_basis(rep);
  std::cout << "reachability dimension: " << reach.basis.size() << "\n";
  print_witnesses(reach.witnesses, rep.alphabet_size());

  const CoreachabilityBasis coreach = coreachability_basis(rep);
  std::cout << "coreachability dimension: " << coreach.basis.size() << "\n";
  print_witnesses(coreach.witnesses, rep.alphabet_size());
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "linrep: exact linear representations of recognisable series and "
      "q-regular sequences"};
  app.require_subcommand(1);

  std::string file;
  std::string file2;
  std::string output = "-";
  std::string word_text;
  std::string n_text;
  bool as_sequence = false;
  std::optional<unsigned> brute_force;
  unsigned max_len = 0;

  auto* eval_word = app.add_subcommand("eval-word", "Evaluate the series at a word");
  eval_word->add_option("file", file, "representation document (\"-\" for stdin)")
      ->required();
  eval_word
      ->add_option("--word", word_text,
                   "comma-separated letters, least significant first "
                   "(\"\" or \"eps\" for the empty word)")
      ->required();

  auto* eval_n = app.add_subcommand("eval-n", "Evaluate the sequence at an index");
  eval_n->add_option("file", file, "representation document")->required();
  eval_n->add_option("--n", n_text, "non-negative index")->required();

  auto* minimise_cmd = app.add_subcommand("minimise", "Write a minimal representation");
  minimise_cmd->add_option("file", file, "representation document")->required();
  minimise_cmd->add_option("-o,--output", output, "output path (default stdout)");
  minimise_cmd->add_flag("--as-sequence", as_sequence,
                         "minimise as a sequence; improper inputs are "
                         "properised first (with a warning)");

  auto* properise_cmd =
      app.add_subcommand("properise", "Write a proper representation of the sequence");
  properise_cmd->add_option("file", file, "representation document")->required();
  properise_cmd->add_option("-o,--output", output, "output path (default stdout)");

  auto* check_proper =
      app.add_subcommand("check-proper", "Check whether M(0)w = w holds exactly");
  check_proper->add_option("file", file, "representation document")->required();

  auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two documents");
  equiv->add_option("file1", file, "first document")->required();
  equiv->add_option("file2", file2, "second document")->required();
  equiv->add_flag("--as-sequence", as_sequence, "compare as sequences");
  equiv->add_option("--brute-force", brute_force,
                    "compare by enumerating words up to this length instead "
                    "of deciding exactly");

  auto* hankel =
      app.add_subcommand("hankel-rank", "Rank of the truncated Hankel table");
  hankel->add_option("file", file, "representation document")->required();
  hankel->add_option("--max-len", max_len, "word length truncation")->required();

  auto* info = app.add_subcommand("info", "Dimensions, properness, and witnesses");
  info->add_option("file", file, "representation document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (*eval_word) return cmd_eval_word(file, word_text);
    if (*eval_n) return cmd_eval_n(file, n_text);
    if (*minimise_cmd) return cmd_minimise(file, output, as_sequence);
    if (*properise_cmd) return cmd_properise(file, output);
    if (*check_proper) return cmd_check_proper(file);
    if (*equiv) return cmd_equiv(file, file2, as_sequence, brute_force);
    if (*hankel) return cmd_hankel_rank(file, max_len);
    if (*info) return cmd_info(file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
