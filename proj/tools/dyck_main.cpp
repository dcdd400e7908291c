// Command-line front end: classification, reduction traces, approximation
// witnesses, separation certificates, counting tables, quotient files, and
// the self-test sweep.  All output is a deterministic function of the
// arguments, input files, and seed.
//
// Exit codes: 0 success / positive result, 1 negative mathematical result,
// 2 usage or resource error, 3 internal verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dyck/dyck.hpp"

namespace {

using nlohmann::json;

struct RunConfig {
  int pairs = 2;
  bool brackets = false;
  std::string format = "text";
  std::uint64_t cap = dyck::kDefaultEnumerationCap;

  dyck::DisplayMode mode() const {
    return brackets ? dyck::DisplayMode::brackets : dyck::DisplayMode::letters;
  }
  bool structured() const { return format == "structured"; }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json quotient_to_json(const dyck::FiniteQuotient& q) {
  json images = json::object();
  for (int letter = 0; letter < q.alphabet().letter_count(); ++letter) {
    const std::string symbol(
        1, q.alphabet().symbol(static_cast<dyck::Letter>(letter),
                               dyck::DisplayMode::letters));
    images[symbol] = q.image(static_cast<dyck::Letter>(letter)).images();
  }
  return json{{"degree", q.degree()},
              {"pairs", q.alphabet().pair_count()},
              {"images", images}};
}

json matching_to_json(const dyck::MatchingCertificate& cert) {
  json pairs = json::array();
  for (const auto& p : cert.pairs)
    pairs.push_back(json{
        {"left", p.left},
        {"right", p.right},
        {"orientation",
         p.orientation == dyck::MatchOrientation::opening ? "O" : "C"}});
  return pairs;
}

void emit(const RunConfig& config, const json& structured, const std::string& text) {
  if (config.structured())
    std::cout << structured.dump(2) << '\n';
  else
    std::cout << text;
}

// ---------------------------------------------------------------- check

int cmd_check(const RunConfig& config, const std::string& word_text) {
  dyck::PairedAlphabet alphabet(config.pairs);
  const dyck::Word w = dyck::parse_word(word_text, alphabet, config.mode());
  const auto classification = dyck::classify(w);

  std::ostringstream text;
  json out{{"word", dyck::format_word(w, alphabet, config.mode())},
           {"classification", dyck::to_string(classification)}};
  text << "word: " << dyck::format_word(w, alphabet, config.mode()) << '\n';
  text << "classification: " << dyck::to_string(classification) << '\n';

  switch (classification) {
    case dyck::Classification::one_sided: {
      const auto result = dyck::is_one_sided(w);
      text << "matching:\n" << dyck::format_matching(result.certificate);
      out["matching"] = matching_to_json(result.certificate);
      break;
    }
    case dyck::Classification::two_sided_only: {
      const auto result = dyck::is_two_sided(w);
      text << "matching:\n" << dyck::format_matching(result.certificate);
      out["matching"] = matching_to_json(result.certificate);
      break;
    }
    case dyck::Classification::neither: {
      const auto cert = dyck::separate(alphabet, w);
      text << "reduced_image: " << dyck::format_group_word(dyck::group_image(w))
           << '\n';
      text << "separation certificate:\n" << dyck::certificate_to_string(cert);
      out["reduced_image"] = dyck::format_group_word(dyck::group_image(w));
      out["separation"] = quotient_to_json(cert.quotient);
      out["separation"]["moved_point"] = cert.moved_point;
      out["separation"]["moves_point_to"] =
          cert.quotient.evaluate(w).apply(cert.moved_point);
      break;
    }
  }
  emit(config, out, text.str());
  return 0;
}

// ---------------------------------------------------------------- reduce

int cmd_reduce(const RunConfig& config, const std::string& word_text) {
  dyck::PairedAlphabet alphabet(config.pairs);
  const dyck::Word w = dyck::parse_word(word_text, alphabet, config.mode());
  const auto trace = dyck::reduce_trace(w);

  std::ostringstream text;
  text << "word: " << dyck::format_word(w, alphabet, config.mode()) << '\n';
  text << dyck::format_trace(trace, alphabet, config.mode());
  text << "residual: " << dyck::format_word(trace.residual, alphabet, config.mode())
       << '\n';
  text << "two_sided: " << yes_no(trace.residual.empty()) << '\n';

  json steps = json::array();
  for (const auto& step : trace.steps)
    steps.push_back(json{
        {"position", step.position},
        {"left", std::string(1, alphabet.symbol(step.left, config.mode()))},
        {"right", std::string(1, alphabet.symbol(step.right, config.mode()))}});
  const json out{
      {"word", dyck::format_word(w, alphabet, config.mode())},
      {"steps", steps},
      {"residual", dyck::format_word(trace.residual, alphabet, config.mode())},
      {"two_sided", trace.residual.empty()}};
  emit(config, out, text.str());
  return 0;
}

// ----------------------------------------------------------- approximate

int cmd_approximate(const RunConfig& config, const std::string& word_text,
                    const std::string& quotient_path, bool minimal,
                    std::size_t max_length) {
  const dyck::FiniteQuotient q = dyck::load_quotient_file(quotient_path);
  const dyck::Word w = dyck::parse_word(word_text, q.alphabet(), config.mode());

  const auto gadgets = dyck::build_gadgets(q);
  const dyck::Word witness = dyck::approximate(q, w, gadgets);
  const auto report = dyck::verify_approximation(q, w, witness);
  if (!report.passed())
    throw dyck::InternalError("approximation witness failed verification");

  std::ostringstream text;
  text << "input: " << dyck::format_word(w, q.alphabet(), config.mode()) << '\n';
  text << "quotient: " << quotient_path << '\n';
  text << "witness: " << dyck::format_word(witness, q.alphabet(), config.mode())
       << '\n';
  text << "input_two_sided: " << yes_no(report.input_two_sided) << '\n';
  text << "witness_one_sided: " << yes_no(report.witness_one_sided) << '\n';
  text << "evaluations_match: " << yes_no(report.evaluations_match) << '\n';
  json gadget_params = json::array();
  for (std::size_t pair = 0; pair < gadgets.per_pair.size(); ++pair) {
    const auto& g = gadgets.per_pair[pair];
    text << "pair " << pair << ": N=" << g.exponent << " M=" << g.base_order
         << " gadget_length=" << g.gadget.size() << '\n';
    gadget_params.push_back(json{{"pair", pair},
                                 {"exponent", g.exponent},
                                 {"base_order", g.base_order},
                                 {"gadget_length", g.gadget.size()}});
  }

  json out{{"input", dyck::format_word(w, q.alphabet(), config.mode())},
           {"quotient_file", quotient_path},
           {"witness", dyck::format_word(witness, q.alphabet(), config.mode())},
           {"input_two_sided", report.input_two_sided},
           {"witness_one_sided", report.witness_one_sided},
           {"evaluations_match", report.evaluations_match},
           {"gadgets", gadget_params},
           {"pass", report.passed()}};

  if (minimal) {
    const std::size_t bound = max_length > 0 ? max_length : witness.size();
    const auto shortest = dyck::bfs_minimal_witness(q, w, bound);
    if (shortest) {
      text << "minimal_witness: "
           << dyck::format_word(*shortest, q.alphabet(), config.mode()) << '\n';
      text << "minimal_length: " << shortest->size() << '\n';
      out["minimal_witness"] =
          dyck::format_word(*shortest, q.alphabet(), config.mode());
    } else {
      text << "minimal_witness: not found within length " << bound << '\n';
      out["minimal_witness"] = nullptr;
    }
  }
  text << "verdict: pass\n";
  emit(config, out, text.str());
  return 0;
}

// -------------------------------------------------------------- separate

int cmd_separate(const RunConfig& config, const std::string& word_text,
                 std::size_t verify_up_to, const std::string& out_path) {
  dyck::PairedAlphabet alphabet(config.pairs);
  const dyck::Word w = dyck::parse_word(word_text, alphabet, config.mode());

  const auto cert = dyck::separate(alphabet, w);
  const auto report = dyck::verify_separation(cert, w, verify_up_to);
  if (!report.passed())
    throw dyck::InternalError("separation certificate failed verification");

  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) throw dyck::Error("cannot write certificate file: " + out_path);
    dyck::write_certificate(file, cert);
  }

  std::ostringstream text;
  text << "word: " << dyck::format_word(w, alphabet, config.mode()) << '\n';
  text << "certificate:\n" << dyck::certificate_to_string(cert);
  text << "moves_point: " << yes_no(report.moves_point) << '\n';
  text << "images_pairwise_inverse: " << yes_no(report.images_pairwise_inverse)
       << '\n';
  text << "one_sided_all_identity: " << yes_no(report.one_sided_all_identity)
       << " (checked " << report.one_sided_words_checked << " words up to length "
       << verify_up_to << ")\n";
  text << "verdict: pass\n";

  json out{{"word", dyck::format_word(w, alphabet, config.mode())},
           {"certificate", quotient_to_json(cert.quotient)},
           {"moved_point", cert.moved_point},
           {"moves_point_to", cert.quotient.evaluate(w).apply(cert.moved_point)},
           {"moves_point", report.moves_point},
           {"images_pairwise_inverse", report.images_pairwise_inverse},
           {"one_sided_all_identity", report.one_sided_all_identity},
           {"one_sided_words_checked", report.one_sided_words_checked},
           {"verify_up_to", verify_up_to},
           {"pass", report.passed()}};
  if (!out_path.empty()) out["certificate_file"] = out_path;
  emit(config, out, text.str());
  return 0;
}

// ----------------------------------------------------------------- count

int cmd_count(const RunConfig& config, const std::string& kind_name,
              std::size_t max_length, bool csv) {
  dyck::PairedAlphabet alphabet(config.pairs);
  const auto kind = kind_name == "one_sided" ? dyck::LanguageKind::one_sided
                                             : dyck::LanguageKind::two_sided;
  const auto table = dyck::count_members(alphabet, kind, max_length, config.cap);

  // cross-check against the independent route before printing
  for (const auto& row : table.rows) {
    const std::uint64_t expected =
        kind == dyck::LanguageKind::one_sided
            ? dyck::one_sided_closed_form(alphabet.pair_count(), row.length)
            : dyck::tree_walk_count(alphabet.pair_count(), row.length);
    if (row.members != expected)
      throw dyck::InternalError("count table disagrees with the closed-form route");
  }

  json rows = json::array();
  for (const auto& row : table.rows)
    rows.push_back(json{{"length", row.length}, {"members", row.members}});
  const json out{{"kind", kind_name},
                 {"pairs", alphabet.pair_count()},
                 {"rows", rows},
                 {"cross_check", "pass"}};
  emit(config, out,
       csv ? dyck::count_table_csv(table) : dyck::format_count_table(table));
  return 0;
}

// -------------------------------------------------------------- quotient

int cmd_quotient(const RunConfig& config, int degree, std::uint64_t seed,
                 const std::string& inspect_path, const std::string& out_path) {
  dyck::PairedAlphabet alphabet(config.pairs);
  std::optional<dyck::FiniteQuotient> q;
  if (!inspect_path.empty())
    q = dyck::load_quotient_file(inspect_path);
  else
    q = dyck::random_quotient(alphabet, degree, seed);

  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) throw dyck::Error("cannot write quotient file: " + out_path);
    dyck::write_quotient(file, *q);
  }

  std::ostringstream text;
  text << dyck::quotient_to_string(*q);
  json letters = json::array();
  json pair_info = json::array();
  for (int letter = 0; letter < q->alphabet().letter_count(); ++letter) {
    const auto l = static_cast<dyck::Letter>(letter);
    text << "letter " << q->alphabet().symbol(l, dyck::DisplayMode::letters)
         << ": order " << dyck::letter_order(*q, l) << ", cycles "
         << dyck::format_cycles(q->image(l)) << '\n';
    letters.push_back(json{
        {"letter",
         std::string(1, q->alphabet().symbol(l, dyck::DisplayMode::letters))},
        {"order", dyck::letter_order(*q, l)},
        {"cycles", dyck::format_cycles(q->image(l))}});
  }
  const auto gadgets = dyck::build_gadgets(*q);
  for (std::size_t pair = 0; pair < gadgets.per_pair.size(); ++pair) {
    const auto& g = gadgets.per_pair[pair];
    text << "pair " << pair << ": exponent N=" << g.exponent
         << ", base order M=" << g.base_order << ", gadget length "
         << g.gadget.size() << '\n';
    pair_info.push_back(json{{"pair", pair},
                             {"exponent", g.exponent},
                             {"base_order", g.base_order},
                             {"gadget_length", g.gadget.size()}});
  }

  json out = quotient_to_json(*q);
  out["letters"] = letters;
  out["pair_gadgets"] = pair_info;
  if (!out_path.empty()) out["quotient_file"] = out_path;
  emit(config, out, text.str());
  return 0;
}

// -------------------------------------------------------------- selftest

int cmd_selftest(const RunConfig& config, std::size_t max_length) {
  dyck::PairedAlphabet alphabet(config.pairs);
  std::ostringstream text;
  json out{{"max_length", max_length}, {"pairs", config.pairs}};
  bool all_pass = true;

  text << "selftest max_length=" << max_length << " pairs=" << config.pairs << '\n';

  // 1. recognizer/kernel equivalence
  const auto equivalence =
      dyck::exhaustive_equivalence(alphabet, max_length, config.cap);
  all_pass = all_pass && equivalence.passed;
  text << "[1/4] kernel equivalence: " << equivalence.words_checked << " words, "
       << (equivalence.passed ? "pass" : "FAIL") << '\n';
  out["equivalence"] = json{{"words_checked", equivalence.words_checked},
                            {"pass", equivalence.passed}};

  // 2. count tables against the independent routes
  const std::size_t count_length = std::min<std::size_t>(max_length, 8);
  bool counts_pass = true;
  json tables = json::array();
  for (const auto kind : {dyck::LanguageKind::one_sided, dyck::LanguageKind::two_sided}) {
    const auto table = dyck::count_members(alphabet, kind, count_length, config.cap);
    for (const auto& row : table.rows) {
      const std::uint64_t expected =
          kind == dyck::LanguageKind::one_sided
              ? dyck::one_sided_closed_form(alphabet.pair_count(), row.length)
              : dyck::tree_walk_count(alphabet.pair_count(), row.length);
      if (row.members != expected) counts_pass = false;
    }
    text << dyck::format_count_table(table);
    json rows = json::array();
    for (const auto& row : table.rows)
      rows.push_back(json{{"length", row.length}, {"members", row.members}});
    tables.push_back(json{
        {"kind",
         kind == dyck::LanguageKind::one_sided ? "one_sided" : "two_sided"},
        {"rows", rows}});
  }
  {
    // one-pair cross-check: central binomial route
    dyck::PairedAlphabet narrow(1);
    const auto table = dyck::count_members(
        narrow, dyck::LanguageKind::two_sided,
        std::min<std::size_t>(count_length, 4), config.cap);
    for (const auto& row : table.rows)
      if (row.members != dyck::tree_walk_count(1, row.length)) counts_pass = false;
  }
  all_pass = all_pass && counts_pass;
  text << "[2/4] count tables: " << (counts_pass ? "pass" : "FAIL") << '\n';
  out["count_tables"] = tables;
  out["count_tables_pass"] = counts_pass;

  // 3. approximation witnesses across the suite
  const auto suite = dyck::standard_suite(alphabet);
  const std::size_t approx_length = std::min<std::size_t>(max_length, 6);
  std::uint64_t members = 0;
  bool approx_pass = true;
  {
    dyck::Word buffer;
    for (std::size_t len = 0; len <= approx_length; len += 2) {
      dyck::WordEnumerator en(alphabet, len, config.cap);
      while (en.next(buffer)) {
        if (!dyck::is_two_sided_quick(buffer)) continue;
        ++members;
        for (const auto& named : suite) {
          const auto witness = dyck::approximate(named.quotient, buffer);
          if (!dyck::verify_approximation(named.quotient, buffer, witness).passed())
            approx_pass = false;
        }
      }
    }
  }
  all_pass = all_pass && approx_pass;
  text << "[3/4] approximation: " << members << " members x " << suite.size()
       << " quotients, " << (approx_pass ? "pass" : "FAIL") << '\n';
  out["approximation"] = json{{"members", members},
                              {"quotients", suite.size()},
                              {"pass", approx_pass}};

  // 4. separation certificates for all small non-members
  const std::size_t separate_length = std::min<std::size_t>(max_length + 1, 7);
  const std::size_t verify_bound = std::min<std::size_t>(max_length + 2, 8);
  std::uint64_t non_members = 0;
  bool separation_pass = true;
  {
    dyck::Word buffer;
    for (std::size_t len = 0; len <= separate_length; ++len) {
      dyck::WordEnumerator en(alphabet, len, config.cap);
      while (en.next(buffer)) {
        if (dyck::is_two_sided_quick(buffer)) continue;
        ++non_members;
        const auto cert = dyck::separate(alphabet, buffer);
        if (!dyck::verify_separation(cert, buffer, verify_bound).passed())
          separation_pass = false;
      }
    }
  }
  all_pass = all_pass && separation_pass;
  text << "[4/4] separation: " << non_members << " non-members, verify bound "
       << verify_bound << ", " << (separation_pass ? "pass" : "FAIL") << '\n';
  out["separation"] = json{{"non_members", non_members},
                           {"verify_bound", verify_bound},
                           {"pass", separation_pass}};

  text << "selftest: " << (all_pass ? "PASS" : "FAIL") << '\n';
  out["pass"] = all_pass;
  emit(config, out, text.str());
  return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified recognition of one-sided and two-sided Dyck languages,\n"
               "with finite-quotient approximation witnesses and separation\n"
               "certificates."};
  app.require_subcommand(1);

  RunConfig config;
  app.add_option("--pairs", config.pairs, "Number of bracket pairs")
      ->default_val(2)
      ->check(CLI::Range(1, 26));
  app.add_flag("--brackets", config.brackets,
               "Parse and print words as brackets ()[]{} (needs pairs <= 3)");
  app.add_option("--format", config.format, "Output format")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--cap", config.cap, "Enumeration resource cap")
      ->default_val(dyck::kDefaultEnumerationCap);

  std::string word_text;
  std::string quotient_path;
  std::string out_path;
  bool minimal = false;
  bool csv = false;
  std::size_t max_length = 0;
  std::size_t verify_up_to = 8;
  int degree = 1;
  std::uint64_t seed = 0;
  std::string kind_name = "one_sided";

  auto* check = app.add_subcommand("check", "Classify a word and print its certificate");
  check->add_option("word", word_text, "The word to classify")->required();

  auto* reduce = app.add_subcommand("reduce", "Print the reduction trace of a word");
  reduce->add_option("word", word_text, "The word to reduce")->required();

  auto* approx = app.add_subcommand(
      "approximate", "One-sided witness for a two-sided member modulo a quotient");
  approx->add_option("word", word_text, "A two-sided member")->required();
  approx->add_option("--quotient", quotient_path, "Quotient file")->required();
  approx->add_flag("--minimal", minimal, "Also search for the shortest witness");
  approx->add_option("--max-length", max_length,
                     "Search bound for --minimal (default: witness length)");

  auto* separate =
      app.add_subcommand("separate", "Separation certificate for a non-member");
  separate->add_option("word", word_text, "A word outside the two-sided language")
      ->required();
  separate->add_option("--verify-up-to", verify_up_to,
                       "Exhaustive one-sided verification bound")
      ->default_val(8);
  separate->add_option("--out", out_path, "Write the certificate to this file");

  auto* count = app.add_subcommand("count", "Member counts per even length");
  count->add_option("--kind", kind_name, "Language kind")
      ->default_val("one_sided")
      ->check(CLI::IsMember({"one_sided", "two_sided"}));
  count->add_option("--max-length", max_length, "Largest length to count")
      ->default_val(6);
  count->add_flag("--csv", csv, "Comma-separated rows instead of the aligned table");

  auto* quotient =
      app.add_subcommand("quotient", "Generate or inspect a quotient file");
  auto* degree_opt =
      quotient->add_option("--degree", degree, "Degree of the generated quotient");
  quotient->add_option("--seed", seed, "Seed for the generated quotient")
      ->default_val(0);
  auto* inspect_opt =
      quotient->add_option("--quotient", quotient_path, "Inspect this file instead");
  inspect_opt->excludes(degree_opt);
  quotient->add_option("--out", out_path, "Write the quotient to this file");

  auto* selftest = app.add_subcommand("selftest", "Run the built-in verification sweep");
  selftest->add_option("--max-length", max_length, "Exhaustive sweep bound")
      ->default_val(6);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (config.brackets && config.pairs > 3) {
      std::cerr << "error: bracket display supports at most 3 pairs\n";
      return 2;
    }
    if (check->parsed()) return cmd_check(config, word_text);
    if (reduce->parsed()) return cmd_reduce(config, word_text);
    if (approx->parsed())
      return cmd_approximate(config, word_text, quotient_path, minimal, max_length);
    if (separate->parsed())
      return cmd_separate(config, word_text, verify_up_to, out_path);
    if (count->parsed()) return cmd_count(config, kind_name, max_length, csv);
    if (quotient->parsed()) {
      if (quotient_path.empty() && degree_opt->count() == 0) {
        std::cerr << "error: quotient needs --degree (generate) or --quotient "
                     "(inspect)\n";
        return 2;
      }
      return cmd_quotient(config, degree, seed, quotient_path, out_path);
    }
    if (selftest->parsed()) return cmd_selftest(config, max_length);
  } catch (const dyck::InternalError& e) {
    std::cerr << "internal verification failure: " << e.what() << '\n';
    return 3;
  } catch (const dyck::NotTwoSidedError& e) {
    std::cerr << "negative: " << e.what() << " (residual: " << e.residual << ")\n";
    return 1;
  } catch (const dyck::NotSeparableError& e) {
    std::cerr << "negative: " << e.what() << '\n';
    return 1;
  } catch (const dyck::UnknownSymbolError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const dyck::ResourceBoundError& e) {
    std::cerr << "resource bound: " << e.what() << '\n';
    return 2;
  } catch (const dyck::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
