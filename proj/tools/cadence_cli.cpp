// Command-line surface for the cadence library: enumeration, 3-cadence
// detection, anchored cadences, text generation, the reverse 3SUM encoder,
// and scaling benchmarks. Output is human-readable by default or JSON-lines
// (one record per line) with --format json. Verdicts are data, never exit
// codes; a nonzero exit means the tool itself failed.
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cadence/cadence.hpp"

namespace {

using nlohmann::ordered_json;
using namespace cadence;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;  // I/O or internal failure
constexpr int kExitUsage = 2;  // bad invocation

constexpr std::int64_t kMaxEncodeWeight = 10'000'000;  // caps text at 20 MB

enum class Format { human, json };

struct CommonOpts {
  Format format = Format::human;
  std::uint64_t seed = 0;
};

struct InputOpts {
  std::string path;  // empty = standard input
  bool ascii_line = false;
};

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--format", opts->format, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"human", Format::human},
                                        {"json", Format::json}},
          CLI::ignore_case))
      ->default_str("human");
  cmd->add_option("--seed", opts->seed, "random seed")->default_val(0);
}

void add_input(CLI::App* cmd, InputOpts* opts) {
  cmd->add_option("path", opts->path, "input file (standard input if absent)");
  cmd->add_flag("--ascii-line", opts->ascii_line,
                "strip one trailing newline from the input");
}

std::optional<Text> read_input(const InputOpts& in, std::string* error) {
  std::string bytes;
  if (in.path.empty()) {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    bytes = buf.str();
  } else {
    std::ifstream f(in.path, std::ios::binary);
    if (!f) {
      *error = "cannot open input file: " + in.path;
      return std::nullopt;
    }
    std::ostringstream buf;
    buf << f.rdbuf();
    bytes = buf.str();
  }
  if (in.ascii_line) {
    if (!bytes.empty() && bytes.back() == '\n') bytes.pop_back();
    if (!bytes.empty() && bytes.back() == '\r') bytes.pop_back();
  }
  return Text(std::move(bytes));
}

std::string printable(std::uint8_t ch) {
  if (ch >= 0x20 && ch < 0x7f) return std::string(1, static_cast<char>(ch));
  char buf[8];
  std::snprintf(buf, sizeof buf, "\\x%02x", ch);
  return buf;
}

ordered_json digest_json(const Text& text) {
  const OccurrenceIndex idx = index_occurrences(text);
  ordered_json hist = ordered_json::array();
  for (std::uint8_t a : idx.occurring_symbols())
    hist.push_back({static_cast<int>(a), idx.count(a)});
  return ordered_json{{"n", text.length()},
                      {"distinct", hist.size()},
                      {"histogram", std::move(hist)}};
}

void emit(const ordered_json& record) { std::cout << record.dump() << "\n"; }

void emit_error(const CommonOpts& common, const std::string& command,
                const std::string& message) {
  std::cerr << "cadence: " << message << "\n";
  if (common.format == Format::json)
    emit(ordered_json{
        {"record", "error"}, {"command", command}, {"message", message}});
}

ordered_json cadence_json(const Cadence& c) {
  return ordered_json{
      {"i", c.i}, {"d", c.d}, {"k", c.k}, {"ch", static_cast<int>(c.ch)}};
}

std::optional<std::uint8_t> parse_symbol(const std::string& s,
                                         std::string* error) {
  if (s.size() == 1) return static_cast<std::uint8_t>(s[0]);
  try {
    const int v = std::stoi(s);
    if (v >= 0 && v <= 255) return static_cast<std::uint8_t>(v);
  } catch (const std::exception&) {
  }
  *error = "symbol must be one character or a byte value 0..255: " + s;
  return std::nullopt;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateOpts {
  CommonOpts common;
  InputOpts input;
  std::int64_t k_min = 1;
  std::string symbol;
};

int cmd_enumerate(const EnumerateOpts& opts) {
  std::string error;
  std::optional<std::uint8_t> symbol;
  if (!opts.symbol.empty()) {
    symbol = parse_symbol(opts.symbol, &error);
    if (!symbol) {
      emit_error(opts.common, "enumerate", error);
      return kExitUsage;
    }
  }
  const auto text = read_input(opts.input, &error);
  if (!text) {
    emit_error(opts.common, "enumerate", error);
    return kExitError;
  }
  const Timer timer;
  std::vector<Cadence> cads = enumerate_cadences(*text, opts.k_min);
  if (symbol)
    std::erase_if(cads, [&](const Cadence& c) { return c.ch != *symbol; });
  const double wall = timer.ms();
  if (opts.common.format == Format::json) {
    for (const Cadence& c : cads) {
      ordered_json rec = ordered_json{{"record", "cadence"},
                                      {"command", "enumerate"}};
      rec.update(cadence_json(c));
      emit(rec);
    }
    emit(ordered_json{{"record", "report"},
                      {"command", "enumerate"},
                      {"digest", digest_json(*text)},
                      {"k_min", opts.k_min},
                      {"cadences", cads.size()},
                      {"wall_ms", wall}});
  } else {
    for (const Cadence& c : cads)
      std::cout << "(i=" << c.i << ", d=" << c.d << ", k=" << c.k << ", ch='"
                << printable(c.ch) << "')\n";
    std::cout << cads.size() << " cadence(s) with k >= " << opts.k_min
              << " in n=" << text->length() << "\n";
  }
  return kExitOk;
}

// ------------------------------------------------------------------ detect3

struct Detect3Opts {
  CommonOpts common;
  InputOpts input;
  Detect3Mode mode = Detect3Mode::exact;
  std::string symbol;
};

const char* mode_name(Detect3Mode mode) {
  switch (mode) {
    case Detect3Mode::thirds: return "thirds";
    case Detect3Mode::exact: return "exact";
    case Detect3Mode::quadratic: return "quadratic";
    case Detect3Mode::brute: return "brute";
  }
  return "?";
}

const char* path_name(Detect3Path path) {
  switch (path) {
    case Detect3Path::none: return "none";
    case Detect3Path::quadratic: return "quadratic";
    case Detect3Path::convolution: return "convolution";
    case Detect3Path::brute: return "brute";
  }
  return "?";
}

int cmd_detect3(const Detect3Opts& opts) {
  std::string error;
  std::optional<std::uint8_t> symbol;
  if (!opts.symbol.empty()) {
    symbol = parse_symbol(opts.symbol, &error);
    if (!symbol) {
      emit_error(opts.common, "detect3", error);
      return kExitUsage;
    }
  }
  const auto text = read_input(opts.input, &error);
  if (!text) {
    emit_error(opts.common, "detect3", error);
    return kExitError;
  }
  const Timer timer;
  ThreeCadenceReport report = detect_3cadence(*text, opts.mode);
  if (symbol)
    std::erase_if(report.verdicts,
                  [&](const SymbolVerdict& v) { return v.ch != *symbol; });
  const double wall = timer.ms();
  if (opts.common.format == Format::json) {
    ordered_json verdicts = ordered_json::array();
    for (const SymbolVerdict& v : report.verdicts) {
      ordered_json rec{{"ch", static_cast<int>(v.ch)},
                       {"found", v.found},
                       {"path", path_name(v.path)}};
      if (report.mode == Detect3Mode::thirds) rec["middles"] = v.middles;
      if (v.count) rec["count"] = *v.count;
      if (v.witness) rec["witness"] = cadence_json(*v.witness);
      verdicts.push_back(std::move(rec));
    }
    emit(ordered_json{{"record", "report"},
                      {"command", "detect3"},
                      {"digest", digest_json(*text)},
                      {"mode", mode_name(report.mode)},
                      {"any", report.any()},
                      {"verdicts", std::move(verdicts)},
                      {"counters",
                       {{"convolutions", report.counters.convolutions},
                        {"pairs_examined", report.counters.pairs_examined}}},
                      {"wall_ms", wall}});
  } else {
    for (const SymbolVerdict& v : report.verdicts) {
      std::cout << "symbol '" << printable(v.ch) << "': "
                << (v.found ? "yes" : "no") << " (path=" << path_name(v.path)
                << ")";
      if (report.mode == Detect3Mode::thirds && !v.middles.empty()) {
        std::cout << " middles:";
        for (Pos j : v.middles) std::cout << " " << j;
      }
      if (v.count) std::cout << " count=" << *v.count;
      if (v.witness)
        std::cout << " witness (i=" << v.witness->i << ", d=" << v.witness->d
                  << ", k=" << v.witness->k << ")";
      std::cout << "\n";
    }
    std::cout << "mode=" << mode_name(report.mode) << " any="
              << (report.any() ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

// ----------------------------------------------------------------- anchored

struct AnchoredOpts {
  CommonOpts common;
  InputOpts input;
  std::string mode = "sieve";
};

int cmd_anchored(const AnchoredOpts& opts) {
  std::string error;
  const auto text = read_input(opts.input, &error);
  if (!text) {
    emit_error(opts.common, "anchored", error);
    return kExitError;
  }
  const Timer timer;
  std::vector<Pos> anchored;
  std::optional<Pos> m;
  std::int64_t comparisons = -1, cell_checks = -1;
  if (opts.mode == "sieve") {
    AnchoredResult result = anchored_cadences(*text);
    anchored = std::move(result.anchored_set);
    m = result.m;
    comparisons = result.comparisons;
    cell_checks = result.cell_checks;
  } else {
    anchored = brute_anchored(*text);
    if (!anchored.empty()) m = anchored.front();
  }
  const double wall = timer.ms();
  if (opts.common.format == Format::json) {
    ordered_json rec{{"record", "report"},
                     {"command", "anchored"},
                     {"digest", digest_json(*text)},
                     {"mode", opts.mode},
                     {"count", anchored.size()},
                     {"anchored", anchored}};
    rec["m"] = m ? ordered_json(*m) : ordered_json(nullptr);
    if (opts.mode == "sieve") {
      rec["comparisons"] = comparisons;
      rec["cell_checks"] = cell_checks;
    }
    rec["wall_ms"] = wall;
    emit(rec);
  } else {
    std::cout << "anchored (" << anchored.size() << "):";
    for (Pos p : anchored) std::cout << " " << p;
    std::cout << "\n";
    if (m) std::cout << "m=" << *m << "\n";
    if (opts.mode == "sieve")
      std::cout << "comparisons=" << comparisons
                << " cell_checks=" << cell_checks << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------- gen

struct GenOpts {
  CommonOpts common;
  Len len = 0;
  int alphabet = 2;
};

int cmd_gen(const GenOpts& opts) {
  std::mt19937_64 rng(opts.common.seed);
  const Text text = random_text(opts.len, opts.alphabet, rng);
  std::cout << text.bytes();
  return kExitOk;
}

// --------------------------------------------------------------- encode3sum

struct EncodeOpts {
  CommonOpts common;
  std::vector<std::int64_t> weights;
};

int cmd_encode3sum(const EncodeOpts& opts) {
  if (opts.weights.empty()) {
    emit_error(opts.common, "encode3sum", "no weights given");
    return kExitUsage;
  }
  for (auto w : opts.weights) {
    if (w == 0) {
      emit_error(opts.common, "encode3sum", "weights must be nonzero");
      return kExitUsage;
    }
    if (w < -kMaxEncodeWeight || w > kMaxEncodeWeight) {
      emit_error(opts.common, "encode3sum",
                 "weight magnitude exceeds " + std::to_string(kMaxEncodeWeight));
      return kExitUsage;
    }
  }
  const Timer timer;
  const WeightSet w = WeightSet::from_weights(opts.weights);
  const EncodedWeights enc = encode_weights_to_text(w);
  const bool verified = verify_encoding(w, enc.text);
  const double wall = timer.ms();
  if (opts.common.format == Format::json) {
    emit(ordered_json{{"record", "report"},
                      {"command", "encode3sum"},
                      {"weights", opts.weights},
                      {"length", enc.text.length()},
                      {"text", enc.text.bytes()},
                      {"collisions", enc.collisions},
                      {"verify", verified},
                      {"wall_ms", wall}});
  } else {
    std::cout << enc.text.bytes() << "\n";
    std::cout << "length=" << enc.text.length() << " verify="
              << (verified ? "true" : "false");
    if (!enc.collisions.empty()) {
      std::cout << " collisions:";
      for (Pos p : enc.collisions) std::cout << " " << p;
    }
    std::cout << "\n";
  }
  return kExitOk;
}

// -------------------------------------------------------------------- bench

struct BenchOpts {
  CommonOpts common;
  std::string suite;
  std::string lengths = "1e4,1e5";
  int alphabet = 2;
  int trials = 5;
};

std::optional<std::vector<Len>> parse_lengths(const std::string& csv,
                                              std::string* error) {
  std::vector<Len> out;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0' || v < 0 || v > 1e8) {
      *error = "bad length token: " + token;
      return std::nullopt;
    }
    out.push_back(static_cast<Len>(v));
  }
  if (out.empty()) {
    *error = "no lengths given";
    return std::nullopt;
  }
  return out;
}

int cmd_bench(const BenchOpts& opts) {
  if (opts.suite != "anchored" && opts.suite != "detect3") {
    emit_error(opts.common, "bench",
               "choose a suite: anchored | detect3 (got '" + opts.suite + "')");
    return kExitUsage;
  }
  std::string error;
  const auto lengths = parse_lengths(opts.lengths, &error);
  if (!lengths) {
    emit_error(opts.common, "bench", error);
    return kExitUsage;
  }
  if (opts.suite == "anchored") {
    const auto rows = anchored_scaling_probe(*lengths, opts.alphabet,
                                             opts.trials, opts.common.seed);
    for (const ProbeRow& row : rows) {
      if (opts.common.format == Format::json) {
        emit(ordered_json{{"record", "bench"},
                          {"command", "bench"},
                          {"suite", "anchored"},
                          {"n", row.n},
                          {"alphabet", opts.alphabet},
                          {"trials", opts.trials},
                          {"mean_comparisons", row.mean_comparisons},
                          {"comparisons_per_n", row.comparisons_per_n}});
      } else {
        std::cout << "anchored n=" << row.n
                  << " mean_comparisons=" << row.mean_comparisons
                  << " comparisons_per_n=" << row.comparisons_per_n << "\n";
      }
    }
    return kExitOk;
  }
  std::mt19937_64 rng(opts.common.seed);
  for (Len n : *lengths) {
    double best = -1.0;
    bool found = false;
    for (int t = 0; t < opts.trials; ++t) {
      const Text text = random_text(n, opts.alphabet, rng);
      const Timer timer;
      const ThreeCadenceReport report =
          detect_3cadence(text, Detect3Mode::exact);
      const double ms = timer.ms();
      if (best < 0 || ms < best) best = ms;
      found = report.any();
    }
    if (opts.common.format == Format::json) {
      emit(ordered_json{{"record", "bench"},
                        {"command", "bench"},
                        {"suite", "detect3"},
                        {"n", n},
                        {"alphabet", opts.alphabet},
                        {"trials", opts.trials},
                        {"best_wall_ms", best},
                        {"found", found}});
    } else {
      std::cout << "detect3 n=" << n << " best_wall_ms=" << best
                << " found=" << (found ? "yes" : "no") << "\n";
    }
  }
  return kExitOk;
}

bool looks_like_integer(const std::string& s) {
  std::size_t i = (s.size() > 1 && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cadence string-analysis toolkit"};
  app.require_subcommand(1);

  EnumerateOpts enum_opts;
  auto* enum_cmd =
      app.add_subcommand("enumerate", "list all cadences (brute force)");
  add_common(enum_cmd, &enum_opts.common);
  add_input(enum_cmd, &enum_opts.input);
  enum_cmd->add_option("--k-min", enum_opts.k_min, "minimum order to report")
      ->default_val(1)
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40));
  enum_cmd->add_option("--symbol", enum_opts.symbol,
                       "restrict to one symbol (char or byte value)");

  Detect3Opts d3_opts;
  auto* d3_cmd = app.add_subcommand("detect3", "detect order-3 cadences");
  add_common(d3_cmd, &d3_opts.common);
  add_input(d3_cmd, &d3_opts.input);
  d3_cmd->add_option("--mode", d3_opts.mode, "detector mode")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Detect3Mode>{
              {"thirds", Detect3Mode::thirds},
              {"exact", Detect3Mode::exact},
              {"quadratic", Detect3Mode::quadratic},
              {"brute", Detect3Mode::brute}},
          CLI::ignore_case))
      ->default_str("exact");
  d3_cmd->add_option("--symbol", d3_opts.symbol,
                     "restrict to one symbol (char or byte value)");

  AnchoredOpts anc_opts;
  auto* anc_cmd = app.add_subcommand("anchored", "find all anchored cadences");
  add_common(anc_cmd, &anc_opts.common);
  add_input(anc_cmd, &anc_opts.input);
  anc_cmd->add_option("--mode", anc_opts.mode, "sieve (fast) or brute (oracle)")
      ->check(CLI::IsMember({"sieve", "brute"}))
      ->default_val("sieve");

  GenOpts gen_opts;
  auto* gen_cmd =
      app.add_subcommand("gen", "write a uniform random text to stdout");
  add_common(gen_cmd, &gen_opts.common);
  gen_cmd->add_option("--len", gen_opts.len, "text length")
      ->required()
      ->check(CLI::Range(std::int64_t{0}, std::int64_t{100'000'000}));
  gen_cmd->add_option("--alphabet", gen_opts.alphabet, "alphabet size")
      ->default_val(2)
      ->check(CLI::Range(1, 256));

  EncodeOpts enc_opts;
  auto* enc_cmd = app.add_subcommand(
      "encode3sum", "encode integer weights as a text ('1' at 2w / |w|)");
  add_common(enc_cmd, &enc_opts.common);

  BenchOpts bench_opts;
  auto* bench_cmd = app.add_subcommand("bench", "scaling benchmarks");
  add_common(bench_cmd, &bench_opts.common);
  bench_cmd->add_option("suite", bench_opts.suite,
                        "suite to run: anchored | detect3");
  bench_cmd->add_option("--lengths", bench_opts.lengths,
                        "comma-separated lengths, e.g. 1e4,1e5,1e6")
      ->default_val("1e4,1e5");
  bench_cmd->add_option("--alphabet", bench_opts.alphabet, "alphabet size")
      ->default_val(2)
      ->check(CLI::Range(1, 256));
  bench_cmd->add_option("--trials", bench_opts.trials, "trials per length")
      ->default_val(5)
      ->check(CLI::Range(1, 1000));

  // Weight arguments may be negative, which option parsers read as flags;
  // integer-shaped tokens after `encode3sum` are collected here instead.
  std::vector<std::string> args;
  bool weights_ok = true;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  if (!args.empty() && args.front() == "encode3sum") {
    std::vector<std::string> forwarded{args.front()};
    for (std::size_t i = 1; i < args.size(); ++i) {
      if (looks_like_integer(args[i])) {
        try {
          enc_opts.weights.push_back(std::stoll(args[i]));
        } catch (const std::exception&) {
          weights_ok = false;
        }
      } else {
        forwarded.push_back(args[i]);
      }
    }
    args = std::move(forwarded);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (enum_cmd->parsed()) return cmd_enumerate(enum_opts);
    if (d3_cmd->parsed()) return cmd_detect3(d3_opts);
    if (anc_cmd->parsed()) return cmd_anchored(anc_opts);
    if (gen_cmd->parsed()) return cmd_gen(gen_opts);
    if (enc_cmd->parsed()) {
      if (!weights_ok) {
        emit_error(enc_opts.common, "encode3sum", "weight out of range");
        return kExitUsage;
      }
      return cmd_encode3sum(enc_opts);
    }
    if (bench_cmd->parsed()) return cmd_bench(bench_opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "cadence: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "cadence: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
