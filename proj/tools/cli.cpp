#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "verify.hpp"
#include "ywalls/abacus.hpp"
#include "ywalls/coords.hpp"
#include "ywalls/io.hpp"
#include "ywalls/parallel.hpp"
#include "ywalls/series.hpp"
#include "ywalls/type_a.hpp"
#include "ywalls/young_wall.hpp"

namespace ywalls::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Format format_or(const RunConfig& c, Format fallback) { return c.format.value_or(fallback); }

void require_format(Format f, std::initializer_list<Format> allowed, const char* command) {
  for (Format a : allowed)
    if (a == f) return;
  throw UsageError(std::string("unsupported --format for ") + command);
}

void write_output(const RunConfig& c, std::ostream& out, const std::string& content) {
  if (c.output.empty()) {
    out << content;
    return;
  }
  std::filesystem::path path(c.output);
  if (path.is_relative())
    if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) path = std::filesystem::path(dir) / path;
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path.string());
  file << content;
}

std::string read_input(const std::string& input) {
  if (input.empty()) throw UsageError("--in is required");
  if (input == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream file(input, std::ios::binary);
  if (!file) throw UsageError("cannot read " + input);
  return {std::istreambuf_iterator<char>(file), {}};
}

std::vector<Int> parse_ints(const std::string& text, int expected) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(item, &used));
    } catch (const std::exception&) {
      throw UsageError("bad integer \"" + item + "\"");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw UsageError("bad integer \"" + item + "\"");
  }
  if (static_cast<int>(out.size()) != expected)
    throw UsageError("expected " + std::to_string(expected) + " comma-separated integers");
  return out;
}

std::string join_ints(const std::vector<Int>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

void check_config(const RunConfig& c) {
  if (c.type == RootType::D && c.rank < 4) throw UsageError("type D needs --rank >= 4");
  if (c.type == RootType::A && c.rank < 1) throw UsageError("type A needs --rank >= 1");
  if (c.maxDegree < 0) throw UsageError("--max-degree must be >= 0");
  if (c.box < 0) throw UsageError("--box must be >= 0");
  if (c.orders < 1) throw UsageError("--orders must be >= 1");
}

int run_enumerate(const RunConfig& c, std::ostream& out) {
  const Format f = format_or(c, Format::Jsonl);
  std::string text;
  if (f == Format::Csv) text = "index,weight,columns\n";
  std::vector<std::string> items;
  Int index = 0;
  auto add = [&](const std::string& json, Int weight, const std::string& plain) {
    switch (f) {
      case Format::Jsonl: text += json + '\n'; break;
      case Format::Json: items.push_back(json); break;
      case Format::Text: text += plain + '\n'; break;
      case Format::Csv: text += std::to_string(index) + ',' + std::to_string(weight) + ',' + plain + '\n'; break;
    }
    ++index;
  };
  if (c.type == RootType::D) {
    for (const auto& w : enumerate_walls(RankD(c.rank), c.maxDegree, c.threads))
      add(wall_to_json(w), total_weight(w), to_text(w));
  } else {
    type_a::for_each_partition(c.maxDegree, [&](const std::vector<Int>& parts) {
      Int size = 0;
      for (Int p : parts) size += p;
      const ojson j{{"type", "A"}, {"rank", c.rank}, {"parts", parts}};
      add(j.dump(), size, parts.empty() ? "-" : join_ints(parts, " "));
    });
  }
  if (f == Format::Json) {
    text = "[";
    for (std::size_t i = 0; i < items.size(); ++i) text += (i ? "," : "") + items[i];
    text += "]\n";
  }
  write_output(c, out, text);
  return kExitOk;
}

int run_core(const RunConfig& c, std::ostream& out) {
  const Format f = format_or(c, Format::Json);
  require_format(f, {Format::Json, Format::Jsonl, Format::Text}, "core");
  const std::string input = read_input(c.input);
  ojson j;
  try {
    j = ojson::parse(input);
  } catch (const ojson::exception& e) {
    throw UsageError(std::string("malformed JSON input: ") + e.what());
  }
  AbacusConfig a(RankD(4));
  if (j.is_object() && j.contains("columns")) {
    const YoungWallD wall = wall_from_json(input);
    const auto report = validate_wall(wall);
    if (!report.ok())
      throw UsageError("invalid wall: " + std::string(rule_name(report.violations.front().rule)) +
                       " at column " + std::to_string(report.violations.front().column + 1) + ": " +
                       report.violations.front().detail);
    a = wall_to_abacus(wall);
  } else {
    a = abacus_from_json(input);
  }
  const CoreResult r = compute_core(a);
  if (f == Format::Text) {
    std::string text = "barsRemoved: " + std::to_string(r.barsRemoved) + '\n';
    text += "pairs:";
    for (Int v : r.pairCounts) text += ' ' + std::to_string(v);
    text += "\ncolored: " + std::to_string(r.coloredCount) + '\n';
    text += "core wall: " + to_text(abacus_to_wall(r.core)) + '\n';
    text += "core weight: " + std::to_string(abacus_weight(r.core)) + '\n';
    text += "z: " + join_ints(core_to_z(r.core), " ") + '\n';
    write_output(c, out, text);
  } else {
    write_output(c, out, core_result_to_json(r) + '\n');
  }
  return kExitOk;
}

int run_coords(const RunConfig& c, std::ostream& out) {
  if (c.type != RootType::D) throw UsageError("coords is defined for type D only");
  const Format f = format_or(c, Format::Json);
  require_format(f, {Format::Json, Format::Jsonl, Format::Text}, "coords");
  if (c.z.empty() == c.m.empty()) throw UsageError("give exactly one of --z and --m");
  const RankD rank(c.rank);
  const CoreCoords z = c.z.empty() ? m_to_z(parse_ints(c.m, c.rank), rank) : parse_ints(c.z, c.rank);
  const MCoords m = z_to_m(z, rank);
  const MultiWeight wt = core_multiweight(z, rank);
  const AbacusConfig core = z_to_core(z, rank);
  if (f == Format::Text) {
    std::string text = "z: " + join_ints(z, " ") + "\nm: " + join_ints(m, " ") + '\n';
    text += "cartan quadratic: " + std::to_string(cartan_quadratic(m, rank)) + '\n';
    text += "total weight: " + std::to_string(core_weight_total(z, rank)) + '\n';
    text += "multiweight: " + join_ints(wt, " ") + '\n';
    text += "core wall: " + to_text(abacus_to_wall(core)) + '\n';
    write_output(c, out, text);
    return kExitOk;
  }
  const ojson j{{"rank", c.rank},
                {"z", z},
                {"m", m},
                {"cartanQuadratic", cartan_quadratic(m, rank)},
                {"totalWeight", core_weight_total(z, rank)},
                {"multiweight", wt},
                {"core", ojson::parse(abacus_to_json(core))}};
  write_output(c, out, j.dump() + '\n');
  return kExitOk;
}

TruncatedSeries compute_series(const RunConfig& c) {
  const Int N = c.maxDegree;
  const std::string& k = c.kind;
  if (c.type == RootType::A) {
    const int n = c.rank;
    if (k == "euler-brute") return type_a::brute_force_euler(n, N, c.coloring);
    if (k == "euler-closed") return type_a::closed_form_euler(n, N);
    if (k == "theta") return type_a::theta_sum(n, N);
    if (k == "motivic-full") return type_a::motivic_closed_form(n, N, MotivicKind::Full);
    if (k == "motivic-punctual") return type_a::motivic_closed_form(n, N, MotivicKind::Punctual);
    if (k == "motivic-divisor") return type_a::motivic_closed_form(n, N, MotivicKind::Divisor);
    throw UsageError("series kind \"" + k + "\" is not available for type A");
  }
  const RankD rank(c.rank);
  if (k == "euler-brute") return brute_force_euler(rank, N, c.threads);
  if (k == "euler-closed") return closed_form_euler(rank, N);
  if (k == "theta") return theta_sum(rank, N);
  if (k == "motivic-full") return motivic_full(rank, N);
  if (k == "motivic-punctual") return motivic_punctual(rank, N);
  if (k == "motivic-divisor") return motivic_divisor(rank, N);
  if (k == "motivic-brute") return brute_force_motivic_divisor(rank, N, c.threads);
  throw UsageError("unknown series kind \"" + k + "\"");
}

int run_series(const RunConfig& c, std::ostream& out) {
  const TruncatedSeries s = compute_series(c);
  switch (format_or(c, Format::Text)) {
    case Format::Text: write_output(c, out, to_text(s)); break;
    case Format::Csv: write_output(c, out, to_csv(s)); break;
    case Format::Json: write_output(c, out, series_to_json(s) + '\n'); break;
    case Format::Jsonl: write_output(c, out, series_to_jsonl(s)); break;
  }
  return kExitOk;
}

int run_verify(const RunConfig& c, std::ostream& out) {
  require_format(format_or(c, Format::Text), {Format::Text}, "verify");
  if (c.type == RootType::A &&
      (c.check == Check::Coords || c.check == Check::Confluence || c.check == Check::Fibers ||
       c.check == Check::Motivic))
    throw UsageError("this check is defined for type D only");
  CheckOutcome r;
  switch (c.check) {
    case Check::Main: r = verify_main(c); break;
    case Check::Motivic: r = verify_motivic(c); break;
    case Check::Specialize: r = verify_specialize(c); break;
    case Check::Coords: r = verify_coords(c); break;
    case Check::Confluence: r = verify_confluence(c); break;
    case Check::Fibers: r = verify_fibers(c); break;
  }
  write_output(c, out, r.message + '\n');
  return r.ok ? kExitOk : kExitFailed;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    check_config(config);
    switch (config.command) {
      case Command::Enumerate: return run_enumerate(config, out);
      case Command::Core: return run_core(config, out);
      case Command::Coords: return run_coords(config, out);
      case Command::Series: return run_series(config, out);
      case Command::Verify: return run_verify(config, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Young walls of type D and A: enumeration, cores, coordinates and generating series"};
  app.require_subcommand(1);
  RunConfig c;
  c.threads = default_threads();
  std::string type = "D", format, coloring = "col-row", check;

  const std::map<std::string, Format> formats{
      {"json", Format::Json}, {"jsonl", Format::Jsonl}, {"csv", Format::Csv}, {"text", Format::Text}};
  const std::map<std::string, Check> checks{{"main", Check::Main},
                                            {"motivic", Check::Motivic},
                                            {"specialize", Check::Specialize},
                                            {"coords", Check::Coords},
                                            {"confluence", Check::Confluence},
                                            {"fibers", Check::Fibers}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--type", type, "Root system type")->check(CLI::IsMember({"A", "D"}));
    sub->add_option("--rank", c.rank, "Rank n");
    sub->add_option("-N,--max-degree,--max-weight", c.maxDegree, "Total degree / weight bound");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "jsonl", "csv", "text"}));
    sub->add_option("--out", c.output, std::string("Output file (relative paths resolve against $") + kOutputDirEnv + ")");
    sub->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.seed, "Base seed for randomised checks");
    sub->add_option("--coloring", coloring, "Type A cell colouring")->check(CLI::IsMember({"col-row", "row-col"}));
  };
  auto* enumerate = app.add_subcommand("enumerate", "List walls (type D) or partitions (type A)");
  common(enumerate);
  auto* core = app.add_subcommand("core", "Reduce a wall or abacus JSON to its core");
  common(core);
  core->add_option("--in", c.input, "Input JSON file, - for stdin")->required();
  auto* coords = app.add_subcommand("coords", "Coordinates and weights of a core");
  common(coords);
  coords->add_option("--z", c.z, "z-coordinates, comma-separated");
  coords->add_option("--m", c.m, "m-coordinates, comma-separated");
  auto* series = app.add_subcommand("series", "Print a truncated generating series");
  common(series);
  series->add_option("--kind", c.kind, "euler-brute|euler-closed|theta|motivic-full|motivic-punctual|motivic-divisor|motivic-brute")
      ->required();
  auto* verify = app.add_subcommand("verify", "Check an identity; exit 1 on mismatch");
  common(verify);
  verify->add_option("check", check, "main|motivic|specialize|coords|confluence|fibers")
      ->required()
      ->check(CLI::IsMember({"main", "motivic", "specialize", "coords", "confluence", "fibers"}));
  verify->add_option("--box", c.box, "Half-width of the coordinate box");
  verify->add_option("--orders", c.orders, "Random reduction orders per wall");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (enumerate->parsed()) c.command = Command::Enumerate;
  if (core->parsed()) c.command = Command::Core;
  if (coords->parsed()) c.command = Command::Coords;
  if (series->parsed()) c.command = Command::Series;
  if (verify->parsed()) {
    c.command = Command::Verify;
    c.check = checks.at(check);
  }
  c.type = type == "A" ? RootType::A : RootType::D;
  if (!format.empty()) c.format = formats.at(format);
  c.coloring = coloring == "row-col" ? type_a::Coloring::RowMinusColumn : type_a::Coloring::ColumnMinusRow;
  return run(c, out, err);
}

}  // namespace ywalls::cli
