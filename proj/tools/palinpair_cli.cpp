// palinpair: palindrome-pair toolkit over finite and infinite binary words.
//
// Subcommands: pal, sturmian, profile, mnpp, maxpp, construct, dump.
// Every command emits a report in text (default), csv or json form.
// Exit codes: 0 clean, 1 error-severity findings, 2 usage errors.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "palinpair/palinpair.hpp"

using namespace palinpair;
namespace rep = palinpair::report;

namespace {

enum class Format { text, csv, json };

struct GlobalOptions {
  Format format = Format::text;
  bool timing = false;
  unsigned jobs = 0;  // 0: all hardware threads
};

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

/// Emits rows as they are produced in text/csv mode, so partial output of a
/// long scan survives interruption; json output buffers the whole report.
class RowSink {
public:
  RowSink(rep::RunReport& report, const GlobalOptions& opts) : report_(report), opts_(opts) {
    if (opts_.format == Format::csv) {
      for (std::size_t c = 0; c < report_.columns.size(); ++c)
        std::cout << (c ? "," : "") << report_.columns[c];
      std::cout << '\n';
    } else if (opts_.format == Format::text) {
      std::cout << "# " << report_.command;
      for (const auto& [k, v] : report_.parameters) std::cout << ' ' << k << '=' << v;
      std::cout << "\n# ";
      for (std::size_t c = 0; c < report_.columns.size(); ++c) {
        widths_.push_back(std::max<std::size_t>(report_.columns[c].size(), 10));
        if (c) std::cout << "  ";
        std::cout << pad(report_.columns[c], widths_[c], c + 1 == report_.columns.size());
      }
      std::cout << '\n';
    }
  }

  void row(rep::Json r) {
    if (opts_.format == Format::csv) {
      for (std::size_t c = 0; c < report_.columns.size(); ++c)
        std::cout << (c ? "," : "")
                  << rep::detail_::csv_escape(rep::detail_::cell_text(r, report_.columns[c]));
      std::cout << '\n';
    } else if (opts_.format == Format::text) {
      for (std::size_t c = 0; c < report_.columns.size(); ++c) {
        if (c) std::cout << "  ";
        // first column is two wider: the header row carries a "# " prefix
        std::cout << pad(rep::detail_::cell_text(r, report_.columns[c]),
                         widths_[c] + (c == 0 ? 2 : 0), c + 1 == report_.columns.size());
      }
      std::cout << '\n';
    }
    report_.rows.push_back(std::move(r));
  }

  /// Findings and (for json) the buffered report.
  void finish() {
    if (opts_.format == Format::json) {
      std::cout << rep::to_json(report_, opts_.timing).dump(2) << '\n';
      return;
    }
    for (const auto& f : report_.findings)
      std::cout << rep::severity_name(f.severity) << ": " << f.message << '\n';
    if (opts_.timing && opts_.format == Format::text)
      std::cout << "elapsed_ms: " << report_.elapsed_ms << '\n';
  }

private:
  static std::string pad(const std::string& s, std::size_t w, bool last) {
    if (last || s.size() >= w) return s;
    return s + std::string(w - s.size(), ' ');
  }

  rep::RunReport& report_;
  const GlobalOptions& opts_;
  std::vector<std::size_t> widths_;
};

std::vector<std::string> read_lines(const std::string& path) {
  std::vector<std::string> lines;
  std::istream* in = &std::cin;
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) throw CLI::ValidationError("cannot open file: " + path);
    in = &file;
  }
  std::string line;
  while (std::getline(*in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

/// Parses a stream source spec: tm | tribonacci | sturmian:CF | shuffle:FILE
/// | shuffle-alternating | shuffle-random | de-bruijn-spec:LEVELS |
/// morphic:FILE | periodic:WORD. shuffle-random requires an explicit seed.
std::unique_ptr<InfiniteWordSource> make_source(const std::string& spec,
                                                std::optional<std::uint64_t> seed,
                                                rep::RunReport& report) {
  auto starts = [&](const char* prefix) { return spec.rfind(prefix, 0) == 0; };
  if (spec == "tm") return streams::thue_morse_stream();
  if (spec == "tribonacci") return streams::tribonacci_stream();
  if (starts("sturmian:"))
    return sturmian::characteristic_stream(sturmian::ContinuedFraction::parse(spec.substr(9)));
  if (starts("shuffle:")) {
    std::vector<std::string> lines = read_lines(spec.substr(8));
    std::vector<Word> seeds;
    for (const std::string& line : lines) {
      if (line.empty() || line.front() == '#') continue;
      seeds.push_back(Word::from_text(line));
    }
    return streams::shuffle_stream(streams::ShuffleSpec::from_seeds(std::move(seeds)));
  }
  if (spec == "shuffle-alternating")
    return streams::shuffle_stream(streams::ShuffleSpec::alternating_runs());
  if (spec == "shuffle-random") {
    if (!seed)
      throw CLI::ValidationError("shuffle-random requires --seed (no silent randomness)");
    report.param("seed", std::to_string(*seed));
    return streams::shuffle_stream(streams::ShuffleSpec::seeded_random(*seed));
  }
  if (starts("de-bruijn-spec:")) {
    std::size_t levels = std::stoul(spec.substr(15));
    return streams::shuffle_stream(streams::de_bruijn_shuffle_spec(levels));
  }
  if (starts("morphic:")) {
    std::vector<std::string> lines = read_lines(spec.substr(8));
    streams::Morphism m = streams::Morphism::parse(lines);
    std::uint8_t seed_letter = 0;
    for (const std::string& line : lines)
      if (!line.empty() && line.front() != '#') {
        seed_letter = Word::from_text(line.substr(0, 1))[0];
        break;
      }
    return streams::fixed_point_stream(std::move(m), seed_letter);
  }
  if (starts("periodic:")) return std::make_unique<PeriodicSource>(Word::from_text(spec.substr(9)));
  throw CLI::ValidationError("unknown source spec: " + spec);
}

SaturationPolicy policy_for(const std::string& source_spec, const std::string& policy_name,
                            std::size_t window, std::size_t doublings) {
  if (policy_name == "exact" ||
      (policy_name.empty() && source_spec.rfind("sturmian:", 0) == 0))
    return SaturationPolicy::sturmian();
  if (policy_name == "fixed") {
    if (window == 0) throw CLI::ValidationError("--policy fixed requires --window");
    return SaturationPolicy::fixed(window);
  }
  return SaturationPolicy::doubling(window, doublings ? doublings : 8);
}

std::string join_sizes(const std::vector<std::size_t>& ns) {
  std::string out;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(ns[i]);
  }
  return out.empty() ? "none" : out;
}

// ---- commands --------------------------------------------------------------

int cmd_pal(const GlobalOptions& opts, const std::vector<std::string>& words,
            const std::string& file) {
  Stopwatch watch;
  rep::RunReport report;
  report.command = "pal";
  report.columns = {"word", "palindromic_length", "is_palindrome_pair", "split"};
  std::vector<std::pair<std::string, bool>> inputs;  // text, explicit
  for (const std::string& w : words) inputs.emplace_back(w, true);
  if (!file.empty()) {
    for (const std::string& line : read_lines(file)) {
      if (line.empty() || line.front() == '#') continue;
      inputs.emplace_back(line, false);
    }
  }
  RowSink sink(report, opts);
  for (const auto& [text, is_explicit] : inputs) {
    Word w;
    try {
      w = Word::from_text(text);
    } catch (const std::invalid_argument& e) {
      report.add_finding(rep::Severity::error, std::string("malformed word: ") + e.what());
      continue;
    }
    auto split = palindrome_pair_split(w);
    sink.row({{"word", w.to_text()},
              {"palindromic_length", palindromic_length(w)},
              {"is_palindrome_pair", split.has_value()},
              {"split", split ? rep::Json(*split) : rep::Json("-")}});
  }
  report.elapsed_ms = watch.ms();
  sink.finish();
  return report.exit_code();
}

int cmd_sturmian_generate(const GlobalOptions& opts, const std::string& cf_text,
                          std::size_t length) {
  auto cf = sturmian::ContinuedFraction::parse(cf_text);
  Stopwatch watch;
  rep::RunReport report;
  report.command = "sturmian generate";
  report.param("cf", cf.label());
  report.param("length", std::to_string(length));
  report.columns = {"word"};
  sturmian::CharacteristicStream src(cf);
  RowSink sink(report, opts);
  sink.row({{"word", src.prefix_word(length).to_text()}});
  report.elapsed_ms = watch.ms();
  sink.finish();
  return report.exit_code();
}

int cmd_sturmian_verify(const GlobalOptions& opts, const std::string& cf_text, std::size_t max_n,
                        std::optional<std::size_t> from) {
  auto cf = sturmian::ContinuedFraction::parse(cf_text);
  Stopwatch watch;
  rep::RunReport report;
  report.command = "sturmian verify";
  report.param("cf", cf.label());
  report.param("max-n", std::to_string(max_n));
  report.param("threshold", std::to_string(sturmian::all_pp_threshold(cf)));
  report.columns = {"n", "factors", "pp_factors", "all_pp", "predicted", "in_scope", "agreement"};
  RowSink sink(report, opts);
  auto rows = sturmian::verify_all_pp_lengths(cf, max_n, from);
  for (const auto& r : rows) {
    sink.row({{"n", r.n},
              {"factors", r.factor_count},
              {"pp_factors", r.pp_count},
              {"all_pp", r.all_pp},
              {"predicted", r.predicted},
              {"in_scope", r.in_scope},
              {"agreement", r.agreement}});
    if (r.in_scope && !r.agreement)
      report.add_finding(rep::Severity::error,
                         "prediction disagrees with enumeration at n = " + std::to_string(r.n));
  }
  report.elapsed_ms = watch.ms();
  sink.finish();
  return report.exit_code();
}

int cmd_sturmian_prefixes(const GlobalOptions& opts, const std::string& cf_text,
                          std::size_t max_n) {
  auto cf = sturmian::ContinuedFraction::parse(cf_text);
  Stopwatch watch;
  rep::RunReport report;
  report.command = "sturmian prefixes";
  report.param("cf", cf.label());
  report.param("max-n", std::to_string(max_n));
  report.columns = {"length"};
  RowSink sink(report, opts);
  for (std::size_t len : sturmian::palindromic_prefix_lengths(cf, max_n))
    sink.row({{"length", len}});
  report.elapsed_ms = watch.ms();
  sink.finish();
  return report.exit_code();
}

int cmd_profile(const GlobalOptions& opts, const std::string& source_spec, std::size_t min_n,
                std::size_t max_n, const std::string& policy_name, std::size_t window,
                std::size_t doublings, std::optional<std::uint64_t> seed) {
  Stopwatch watch;
  rep::RunReport report;
  report.command = "profile";
  report.param("source", source_spec);
  report.param("min-n", std::to_string(min_n));
  report.param("max-n", std::to_string(max_n));
  report.columns = {"n", "C", "P", "PP", "all_pp", "saturated"};

  complexity::ComplexityProfile prof;
  if (source_spec.rfind("word:", 0) == 0) {
    std::vector<std::string> lines = read_lines(source_spec.substr(5));
    std::optional<Word> w;
    for (const std::string& line : lines) {
      if (line.empty() || line.front() == '#') continue;
      if (w) {
        report.add_finding(rep::Severity::warning, "word source: only the first word is profiled");
        break;
      }
      w = Word::from_text(line);
    }
    if (!w) throw CLI::ValidationError("word source: no word found");
    prof = complexity::profile(*w, min_n, max_n);
  } else {
    auto src = make_source(source_spec, seed, report);
    SaturationPolicy policy = policy_for(source_spec, policy_name, window, doublings);
    prof = complexity::profile(*src, min_n, max_n, policy);
  }

  RowSink sink(report, opts);
  std::size_t unsaturated = 0;
  for (const auto& r : prof.rows) {
    sink.row({{"n", r.n},
              {"C", r.C},
              {"P", r.P},
              {"PP", r.PP},
              {"all_pp", r.all_pp},
              {"saturated", r.saturated}});
    if (!r.saturated) ++unsaturated;
  }
  if (unsaturated > 0)
    report.add_finding(policy_name == "fixed" ? rep::Severity::warning : rep::Severity::error,
                       std::to_string(unsaturated) + " row(s) unsaturated; no all-factor claim there");
  if (prof.truncation)
    report.add_finding(rep::Severity::error,
                       "scan truncated at n = " + std::to_string(prof.truncation->first) + ": " +
                           prof.truncation->second);
  report.add_finding(rep::Severity::info, "C = PP at n = " + join_sizes(prof.all_pp_lengths()) +
                                              " (within scanned range)");
  report.add_finding(rep::Severity::info,
                     "aperiodicity not verified; all-pp lengths are finite evidence only");
  report.elapsed_ms = watch.ms();
  sink.finish();
  return report.exit_code();
}

int cmd_mnpp(const GlobalOptions& opts, const std::string& mode, std::size_t length,
             std::size_t min_len, std::size_t max_len) {
  Stopwatch watch;
  rep::RunReport report;
  report.command = "mnpp " + mode;
  if (mode == "count") {
    report.param("min", std::to_string(min_len));
    report.param("max", std::to_string(max_len));
    report.columns = {"i", "npp"};
    RowSink sink(report, opts);
    for (std::size_t i = min_len; i <= max_len; ++i)
      sink.row({{"i", i}, {"npp", mnpp::npp_count_formula(i)}});
    report.elapsed_ms = watch.ms();
  sink.finish();
    return report.exit_code();
  }
  report.param("length", std::to_string(length));
  report.columns = {"word"};
  std::vector<Word> words = (mode == "enum") ? mnpp::enumerate_mnpp_brute(length, opts.jobs)
                                             : mnpp::generate_mnpp(length);
  RowSink sink(report, opts);
  for (const Word& w : words) sink.row({{"word", w.to_text()}});
  report.elapsed_ms = watch.ms();
  sink.finish();
  return report.exit_code();
}

int cmd_maxpp(const GlobalOptions& opts, std::size_t n, bool parallel) {
  Stopwatch watch;
  auto result = complexity::max_pp_search(n, parallel, opts.jobs);
  rep::RunReport report;
  report.command = "maxpp";
  report.param("n", std::to_string(n));
  report.param("max_count", std::to_string(result.max_count));
  report.param("formula_value", std::to_string(result.formula_value));
  report.columns = {"witness"};
  if (result.max_count != result.formula_value)
    report.add_finding(rep::Severity::error,
                       "maximum " + std::to_string(result.max_count) +
                           " disagrees with the formula value " +
                           std::to_string(result.formula_value));
  report.elapsed_ms = watch.ms();
  if (opts.format == Format::json) {
    rep::Json j;
    j["command"] = "maxpp";
    j["n"] = result.n;
    j["max_count"] = result.max_count;
    j["formula_value"] = result.formula_value;
    rep::Json ws = rep::Json::array();
    for (const Word& w : result.witnesses) ws.push_back(w.to_text());
    j["witnesses"] = std::move(ws);
    rep::Json findings = rep::Json::array();
    for (const auto& f : report.findings)
      findings.push_back({{"severity", rep::severity_name(f.severity)}, {"message", f.message}});
    j["findings"] = std::move(findings);
    if (opts.timing) j["elapsed_ms"] = report.elapsed_ms;
    std::cout << j.dump(2) << '\n';
    return report.exit_code();
  }
  RowSink sink(report, opts);
  for (const Word& w : result.witnesses) sink.row({{"witness", w.to_text()}});
  report.elapsed_ms = watch.ms();
  sink.finish();
  return report.exit_code();
}

int cmd_construct_de_bruijn(const GlobalOptions& opts, unsigned order) {
  Stopwatch watch;
  rep::RunReport report;
  report.command = "construct de-bruijn";
  report.param("order", std::to_string(order));
  report.columns = {"order", "length", "word"};
  Word b = streams::de_bruijn(order);
  RowSink sink(report, opts);
  sink.row({{"order", order}, {"length", b.size()}, {"word", b.to_text()}});
  report.elapsed_ms = watch.ms();
  sink.finish();
  return report.exit_code();
}

int cmd_construct_shuffle(const GlobalOptions& opts, const std::string& seeds_file,
                          bool alternating, bool de_bruijn_rule, std::size_t levels,
                          std::optional<std::uint64_t> seed) {
  Stopwatch watch;
  rep::RunReport report;
  report.command = "construct shuffle";
  report.param("levels", std::to_string(levels));
  streams::ShuffleSpec spec = [&] {
    if (alternating) return streams::ShuffleSpec::alternating_runs();
    if (de_bruijn_rule) return streams::de_bruijn_shuffle_spec(levels);
    if (!seeds_file.empty()) {
      std::vector<Word> seeds;
      for (const std::string& line : read_lines(seeds_file)) {
        if (line.empty() || line.front() == '#') continue;
        seeds.push_back(Word::from_text(line));
      }
      return streams::ShuffleSpec::from_seeds(std::move(seeds));
    }
    if (!seed) throw CLI::ValidationError("random shuffle requires --seed (no silent randomness)");
    report.param("seed", std::to_string(*seed));
    return streams::ShuffleSpec::seeded_random(*seed);
  }();
  report.param("spec", spec.label());
  report.columns = {"level", "length", "word"};
  auto stream = streams::shuffle_stream(std::move(spec));
  RowSink sink(report, opts);
  for (std::size_t i = 1; i <= levels; ++i) {
    Word p = stream->level(i);
    sink.row({{"level", i}, {"length", p.size()}, {"word", p.to_text()}});
  }
  report.elapsed_ms = watch.ms();
  sink.finish();
  return report.exit_code();
}

int cmd_construct_de_bruijn_spec(const GlobalOptions& opts, std::size_t levels) {
  Stopwatch watch;
  rep::RunReport report;
  report.command = "construct de-bruijn-spec";
  report.param("levels", std::to_string(levels));
  report.columns = {"level", "order", "seed_length"};
  streams::ShuffleSpec spec = streams::de_bruijn_shuffle_spec(levels);
  auto stream = streams::shuffle_stream(spec);
  RowSink sink(report, opts);
  for (std::size_t i = 1; i <= levels; ++i) {
    std::size_t order = stream->level_length(i) + 1;
    sink.row({{"level", i}, {"order", order}, {"seed_length", spec.seed(i).size()}});
  }
  report.elapsed_ms = watch.ms();
  sink.finish();
  return report.exit_code();
}

int cmd_dump(const GlobalOptions& opts, const std::string& source_spec, std::size_t length,
             std::optional<std::uint64_t> seed) {
  Stopwatch watch;
  rep::RunReport report;
  report.command = "dump";
  report.param("source", source_spec);
  report.param("length", std::to_string(length));
  report.columns = {"word"};
  auto src = make_source(source_spec, seed, report);
  RowSink sink(report, opts);
  sink.row({{"word", src->prefix_word(length).to_text()}});
  report.elapsed_ms = watch.ms();
  sink.finish();
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"palindrome-pair toolkit: palindromic length, Sturmian and morphic words,"
               " complexity profiles, extremal scans"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  GlobalOptions opts;
  std::map<std::string, Format> format_names{
      {"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};
  app.add_option("--format", opts.format, "output format: text, csv or json")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
  app.add_flag("--timing", opts.timing, "include elapsed time in the output");
  app.add_option("--jobs", opts.jobs, "worker threads for data-parallel scans (0 = all)");

  int rc = 0;
  auto run = [&rc](std::function<int()> fn) {
    return [fn = std::move(fn), &rc]() { rc = fn(); };
  };

  // pal
  auto* pal = app.add_subcommand("pal", "palindromic length and pair split per word");
  auto pal_words = std::make_shared<std::vector<std::string>>();
  auto pal_file = std::make_shared<std::string>();
  pal->add_option("-e,--word", *pal_words, "word given inline (may repeat; '' is the empty word)");
  pal->add_option("-f,--file", *pal_file, "file with one word per line ('-' for stdin)");
  pal->callback(run([&opts, pal_words, pal_file] { return cmd_pal(opts, *pal_words, *pal_file); }));

  // sturmian
  auto* st = app.add_subcommand("sturmian", "characteristic words from a continued fraction");
  auto cf_text = std::make_shared<std::string>();
  st->add_option("--cf", *cf_text, "partial quotients, e.g. \"1,(1)\" or \"2,(1,2)\"")->required();
  st->require_subcommand(1);
  auto* st_gen = st->add_subcommand("generate", "emit a prefix of the characteristic word");
  auto gen_len = std::make_shared<std::size_t>(100);
  st_gen->add_option("--length", *gen_len, "prefix length");
  st_gen->callback(run([&opts, cf_text, gen_len] {
    return cmd_sturmian_generate(opts, *cf_text, *gen_len);
  }));
  auto* st_verify = st->add_subcommand(
      "verify", "check the all-palindrome-pair lengths against the prediction");
  auto verify_max = std::make_shared<std::size_t>(150);
  auto verify_from = std::make_shared<std::size_t>(0);
  st_verify->add_option("--max-n", *verify_max, "largest factor length to check");
  st_verify->add_option("--from", *verify_from,
                        "smallest length to report (default: the slope threshold)");
  st_verify->callback(run([&opts, cf_text, verify_max, verify_from] {
    std::optional<std::size_t> from;
    if (*verify_from > 0) from = *verify_from;
    return cmd_sturmian_verify(opts, *cf_text, *verify_max, from);
  }));
  auto* st_pref = st->add_subcommand("prefixes", "lengths of palindromic prefixes");
  auto pref_max = std::make_shared<std::size_t>(100);
  st_pref->add_option("--max-n", *pref_max, "largest prefix length to check");
  st_pref->callback(run([&opts, cf_text, pref_max] {
    return cmd_sturmian_prefixes(opts, *cf_text, *pref_max);
  }));

  // profile
  auto* prof = app.add_subcommand("profile", "factor / palindrome / pair complexity profile");
  auto prof_source = std::make_shared<std::string>();
  auto prof_min = std::make_shared<std::size_t>(1);
  auto prof_max = std::make_shared<std::size_t>(64);
  auto prof_policy = std::make_shared<std::string>();
  auto prof_window = std::make_shared<std::size_t>(0);
  auto prof_doublings = std::make_shared<std::size_t>(0);
  auto prof_seed = std::make_shared<std::int64_t>(-1);
  prof->add_option("--source", *prof_source,
                   "tm | tribonacci | sturmian:CF | shuffle:FILE | shuffle-alternating |"
                   " shuffle-random | de-bruijn-spec:LEVELS | morphic:FILE | periodic:WORD |"
                   " word:FILE")
      ->required();
  prof->add_option("--min-n", *prof_min, "first length");
  prof->add_option("--max-n", *prof_max, "last length");
  prof->add_option("--policy", *prof_policy, "saturation policy: exact, doubling or fixed");
  prof->add_option("--window", *prof_window, "initial (or fixed) window size");
  prof->add_option("--doublings", *prof_doublings, "doubling budget");
  prof->add_option("--seed", *prof_seed, "seed for randomized sources");
  prof->callback(run([&opts, prof_source, prof_min, prof_max, prof_policy, prof_window,
                      prof_doublings, prof_seed] {
    std::optional<std::uint64_t> seed;
    if (*prof_seed >= 0) seed = static_cast<std::uint64_t>(*prof_seed);
    return cmd_profile(opts, *prof_source, *prof_min, *prof_max, *prof_policy, *prof_window,
                       *prof_doublings, seed);
  }));

  // mnpp
  auto* mn = app.add_subcommand("mnpp", "minimal non-palindrome-pairs");
  mn->require_subcommand(1);
  auto mn_len = std::make_shared<std::size_t>(6);
  auto mn_min = std::make_shared<std::size_t>(6);
  auto mn_max = std::make_shared<std::size_t>(20);
  auto* mn_enum = mn->add_subcommand("enum", "exhaustive enumeration (ground truth)");
  mn_enum->add_option("--length", *mn_len, "word length (6..20)")->required();
  mn_enum->callback(run([&opts, mn_len] { return cmd_mnpp(opts, "enum", *mn_len, 0, 0); }));
  auto* mn_gen = mn->add_subcommand("generate", "inductive construction");
  mn_gen->add_option("--length", *mn_len, "word length (>= 6)")->required();
  mn_gen->callback(run([&opts, mn_len] {
    if (*mn_len < 6) throw CLI::ValidationError("--length must be >= 6");
    return cmd_mnpp(opts, "generate", *mn_len, 0, 0);
  }));
  auto* mn_count = mn->add_subcommand("count", "counts by length");
  mn_count->add_option("--min", *mn_min, "first length");
  mn_count->add_option("--max", *mn_max, "last length");
  mn_count->callback(run([&opts, mn_min, mn_max] {
    return cmd_mnpp(opts, "count", 0, *mn_min, *mn_max);
  }));

  // maxpp
  auto* mx = app.add_subcommand("maxpp", "exhaustive maximal palindrome-pair-factor search");
  auto mx_n = std::make_shared<std::size_t>(8);
  auto mx_parallel = std::make_shared<bool>(false);
  mx->add_option("--n", *mx_n, "word length (1..24)")->required();
  mx->add_flag("--parallel", *mx_parallel, "scan candidate ranges on worker threads");
  mx->callback(run([&opts, mx_n, mx_parallel] { return cmd_maxpp(opts, *mx_n, *mx_parallel); }));

  // construct
  auto* cons = app.add_subcommand("construct", "de Bruijn words and shuffle specs");
  cons->require_subcommand(1);
  auto db_order = std::make_shared<unsigned>(4);
  auto* cons_db = cons->add_subcommand("de-bruijn", "lexicographically least de Bruijn word");
  cons_db->add_option("--order", *db_order, "order k (1..24)")->required();
  cons_db->callback(run([&opts, db_order] { return cmd_construct_de_bruijn(opts, *db_order); }));
  auto sh_file = std::make_shared<std::string>();
  auto sh_alt = std::make_shared<bool>(false);
  auto sh_db = std::make_shared<bool>(false);
  auto sh_levels = std::make_shared<std::size_t>(3);
  auto sh_seed = std::make_shared<std::int64_t>(-1);
  auto* cons_sh = cons->add_subcommand("shuffle", "materialize shuffle levels p_1..p_L");
  cons_sh->add_option("--file", *sh_file, "seed palindromes, one per line");
  cons_sh->add_flag("--alternating", *sh_alt, "alternating-run seeds 1, 00, 111, ...");
  cons_sh->add_flag("--de-bruijn", *sh_db, "de Bruijn seed rule");
  cons_sh->add_option("--levels", *sh_levels, "levels to materialize");
  cons_sh->add_option("--seed", *sh_seed, "seed for random seeds mode");
  cons_sh->callback(run([&opts, sh_file, sh_alt, sh_db, sh_levels, sh_seed] {
    std::optional<std::uint64_t> seed;
    if (*sh_seed >= 0) seed = static_cast<std::uint64_t>(*sh_seed);
    return cmd_construct_shuffle(opts, *sh_file, *sh_alt, *sh_db, *sh_levels, seed);
  }));
  auto dbs_levels = std::make_shared<std::size_t>(2);
  auto* cons_dbs = cons->add_subcommand("de-bruijn-spec", "seed sizes of the de Bruijn rule");
  cons_dbs->add_option("--levels", *dbs_levels, "levels to size");
  cons_dbs->callback(run([&opts, dbs_levels] {
    return cmd_construct_de_bruijn_spec(opts, *dbs_levels);
  }));

  // dump
  auto* dp = app.add_subcommand("dump", "emit a stream prefix");
  auto dp_source = std::make_shared<std::string>();
  auto dp_len = std::make_shared<std::size_t>(64);
  auto dp_seed = std::make_shared<std::int64_t>(-1);
  dp->add_option("--source", *dp_source, "source spec (see profile)")->required();
  dp->add_option("--length", *dp_len, "prefix length");
  dp->add_option("--seed", *dp_seed, "seed for randomized sources");
  dp->callback(run([&opts, dp_source, dp_len, dp_seed] {
    std::optional<std::uint64_t> seed;
    if (*dp_seed >= 0) seed = static_cast<std::uint64_t>(*dp_seed);
    return cmd_dump(opts, *dp_source, *dp_len, seed);
  }));

  // let --format/--timing/--jobs appear after the subcommand too
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (CLI::App* sub : a->get_subcommands([](const CLI::App*) { return true; })) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") return app.exit(e);
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
