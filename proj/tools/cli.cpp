#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilbcode/boxed.hpp"
#include "hilbcode/error.hpp"
#include "hilbcode/gf2.hpp"
#include "hilbcode/hilbert_code.hpp"
#include "hilbcode/local_symbols.hpp"
#include "hilbcode/realize.hpp"

namespace hilbcode::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::int64_t parse_integer(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw UsageError(std::string(what) + ": '" + std::string(text) + "' is not an integer");
  }
  return value;
}

std::vector<std::int64_t> parse_prime_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    out.push_back(parse_integer(item, "--places"));
  }
  return out;
}

std::string read_input(const std::string& path, std::istream& stdin_stream) {
  std::ostringstream buf;
  if (path == "-") {
    buf << stdin_stream.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InvalidInput("cannot open input file '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

bool looks_like_json(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string_view::npos && text[pos] == '{';
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed JSON input: ") + e.what());
  }
}

std::vector<std::string> string_array(const json& doc, const char* field) {
  if (!doc.contains(field) || !doc[field].is_array()) {
    throw InvalidInput(std::string("JSON input lacks a \"") + field + "\" array");
  }
  std::vector<std::string> out;
  for (const auto& v : doc[field]) {
    if (!v.is_string()) throw InvalidInput(std::string("\"") + field + "\" entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

// Matrix text, or JSON carrying "rows" (as emitted by build and box).
BitMatrix load_matrix(const std::string& text) {
  if (!looks_like_json(text)) return parse_matrix_text(text);
  const auto rows = string_array(parse_json(text), "rows");
  if (rows.empty()) throw InvalidInput("JSON input has no rows");
  return BitMatrix::from_rows(std::span<const std::string>(rows));
}

// Boxed text, or JSON carrying "boxed" (or "rows" as a fallback).
BlockMatrix load_blocks(const std::string& text) {
  if (!looks_like_json(text)) return parse_boxed_text(text);
  const json doc = parse_json(text);
  if (doc.contains("boxed")) {
    std::string joined;
    for (const auto& line : string_array(doc, "boxed")) joined += line + "\n";
    return parse_boxed_text(joined);
  }
  const auto rows = string_array(doc, "rows");
  if (rows.empty()) throw InvalidInput("JSON input has no rows");
  return blocks_of(BitMatrix::from_rows(std::span<const std::string>(rows)));
}

json enumerator_json(const WeightEnumerator& e) {
  json out = json::array();
  for (const auto& [w, c] : e.nonzero()) out.push_back({w, c});
  return out;
}

void add_statistics(json& out, const BitMatrix& m) {
  const std::size_t r = rank(m);
  out["dimension"] = r;
  if (r <= kEnumerationRankGuard && r > 0) {
    const auto e = weight_enumerator(m);
    out["weight_enumerator"] = enumerator_json(e);
    out["min_distance"] = min_distance(m);
  } else {
    out["weight_enumerator"] = nullptr;
    out["min_distance"] = nullptr;
  }
}

json place_set_json(const PlaceSet& s) { return json(s.primes()); }

Place parse_place(const std::string& text) {
  if (text == "inf" || text == "infinity") return Place::infinity();
  const auto p = parse_integer(text, "--place");
  if (p == 2) return Place::two();
  return Place::odd(p);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct Options {
  std::string places;
  std::string input;
  std::string boxed;
  std::size_t count = 1;
  std::uint64_t bound = kDefaultPrimeBound;
  std::size_t n = 0;
  bool classify = false;
  std::string a;
  std::string b;
  std::string place;
};

std::string cmd_build(const Options& o) {
  const PlaceSet s = verify_place_set(parse_prime_list(o.places));
  const auto meta = code_metadata(s);
  json out;
  out["places"] = place_set_json(s);
  out["length"] = meta.generator.cols();
  out["dimension"] = rank(meta.generator);
  out["rows"] = meta.generator.to_strings();
  out["boxed"] = meta.blocks.to_strings();
  out["self_dual"] = is_self_dual_generator(meta.generator);
  out["weight_enumerator"] = meta.weight_enumerator ? enumerator_json(*meta.weight_enumerator) : json();
  out["min_distance"] = meta.min_distance ? json(*meta.min_distance) : json();
  return dump(out);
}

std::string cmd_box(const Options& o, std::istream& in) {
  const BitMatrix m = load_matrix(read_input(o.input, in));
  const auto result = box_code(m);
  const BitMatrix boxed_matrix = matrix_of(result.boxed);
  json out;
  out["length"] = m.cols();
  out["rows"] = boxed_matrix.to_strings();
  out["boxed"] = result.boxed.to_strings();
  out["witness"] = {{"row_transform", result.witness.row_transform.to_strings()},
                    {"column_permutation", result.witness.column_permutation}};
  add_statistics(out, boxed_matrix);
  return dump(out);
}

std::string cmd_realize(const Options& o, std::istream& in, std::string& diagnostics) {
  const BlockMatrix b = load_blocks(read_input(o.boxed, in));
  if (!is_boxed(b)) throw InvalidInput("input matrix is not boxed");
  const auto result = realize(b, o.count, o.bound);
  if (result.place_sets.empty()) {
    throw InvalidInput("no realization below bound " + std::to_string(o.bound) +
                       "; deepest prime index reached: " + std::to_string(result.deepest_index));
  }
  json out;
  out["boxed"] = b.to_strings();
  out["count"] = o.count;
  out["bound"] = o.bound;
  out["places"] = place_set_json(result.place_sets.front());
  json all = json::array();
  for (const auto& s : result.place_sets) all.push_back(place_set_json(s));
  out["realizations"] = all;
  out["exhausted"] = result.exhausted;
  if (result.exhausted) {
    out["deepest_index"] = result.deepest_index;
    diagnostics += "warning: bound exhausted after " + std::to_string(result.place_sets.size()) +
                   " of " + std::to_string(o.count) + " realizations\n";
  }
  return dump(out);
}

std::string cmd_enumerate(const Options& o) {
  json out;
  out["n"] = o.n;
  std::size_t count = 0;
  if (!o.classify) {
    json all = json::array();
    for_each_boxed(o.n, [&](const BlockMatrix& b) {
      all.push_back(b.to_strings());
      ++count;
    });
    out["count"] = count;
    out["boxed"] = all;
    return dump(out);
  }
  struct ClassInfo {
    std::size_t first_index = 0;
    std::size_t size = 0;
  };
  std::map<WeightEnumerator, ClassInfo> classes;
  for_each_boxed(o.n, [&](const BlockMatrix& b) {
    auto [it, fresh] = classes.try_emplace(weight_enumerator(matrix_of(b)), ClassInfo{count, 0});
    ++it->second.size;
    ++count;
  });
  std::vector<std::pair<WeightEnumerator, ClassInfo>> ordered(classes.begin(), classes.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& x, const auto& y) { return x.second.first_index < y.second.first_index; });
  json list = json::array();
  for (const auto& [e, info] : ordered) {
    std::size_t d = 1;
    while (e.at(d) == 0) ++d;
    list.push_back({{"weight_enumerator", enumerator_json(e)},
                    {"min_distance", d},
                    {"size", info.size},
                    {"first_index", info.first_index}});
  }
  out["count"] = count;
  out["classes"] = list;
  return dump(out);
}

std::string cmd_verify(const Options& o, bool has_places, bool has_input, std::istream& in) {
  if (!has_places && !has_input) throw UsageError("verify needs --places, --input, or both");
  json out;
  if (has_places && has_input) {
    const PlaceSet s = verify_place_set(parse_prime_list(o.places));
    const BlockMatrix b = load_blocks(read_input(o.input, in));
    out["places"] = place_set_json(s);
    out["boxed"] = b.to_strings();
    out["realizes"] = verify_realization(b, s);
    return dump(out);
  }
  BitMatrix m;
  if (has_places) {
    const PlaceSet s = verify_place_set(parse_prime_list(o.places));
    out["places"] = place_set_json(s);
    m = generator_matrix(s);
  } else {
    m = load_matrix(read_input(o.input, in));
  }
  out["length"] = m.cols();
  out["rows"] = m.to_strings();
  out["self_dual"] = m.cols() % 2 == 0 && is_self_dual_generator(m);
  const bool square_blocks = m.cols() == 2 * m.rows();
  out["is_boxed"] = square_blocks && is_boxed(blocks_of(m));
  return dump(out);
}

std::string cmd_symbol(const Options& o) {
  const auto a = parse_integer(o.a, "--a");
  const auto b = parse_integer(o.b, "--b");
  const Place v = parse_place(o.place);
  const bool bit = hilbert_symbol(a, b, v);
  json out;
  out["a"] = a;
  out["b"] = b;
  out["place"] = v.to_string();
  out["value"] = bit ? -1 : 1;
  out["bit"] = bit ? 1 : 0;
  return dump(out);
}

std::string cmd_weights(const Options& o, std::istream& in) {
  const BitMatrix m = load_matrix(read_input(o.input, in));
  json out;
  out["length"] = m.cols();
  const std::size_t r = rank(m);
  out["dimension"] = r;
  if (r == 0) throw InvalidInput("the zero code has no minimum distance");
  out["weight_enumerator"] = enumerator_json(weight_enumerator(m));
  out["min_distance"] = min_distance(m);
  return dump(out);
}

}  // namespace

CommandOutcome run(const std::vector<std::string>& args, std::istream& input) {
  CLI::App app{"Self-dual codes from Hilbert symbols over Q", "hilbcode"};
  app.require_subcommand(1);
  Options o;

  auto* build = app.add_subcommand("build", "Generator matrix of the Hilbert code for S = {inf, 2, primes}");
  build->add_option("--places", o.places, "Comma-separated primes = 3 mod 4 (2 and inf implicit)")
      ->required();

  auto* box = app.add_subcommand("box", "Carry a self-dual generator to boxed form");
  box->add_option("--input", o.input, "Matrix text or JSON file ('-' for stdin)")->required();

  auto* realize_cmd = app.add_subcommand("realize", "Find place sets whose Hilbert code is a boxed matrix");
  realize_cmd->add_option("--boxed", o.boxed, "Boxed text or JSON file ('-' for stdin)")->required();
  realize_cmd->add_option("--count", o.count, "Number of place sets")->check(CLI::PositiveNumber);
  realize_cmd->add_option("--bound", o.bound, "Largest prime considered");

  auto* enumerate = app.add_subcommand("enumerate", "List every boxed matrix of block dimension n");
  enumerate->add_option("--n", o.n, "Block dimension")->required();
  enumerate->add_flag("--classify", o.classify, "Group by weight enumerator");

  auto* verify = app.add_subcommand("verify", "Check self-duality, boxedness, or a realization");
  auto* verify_places = verify->add_option("--places", o.places, "Comma-separated primes");
  auto* verify_input = verify->add_option("--input", o.input, "Matrix or boxed file");

  auto* symbol = app.add_subcommand("symbol", "Hilbert symbol (a, b)_v");
  symbol->add_option("--a", o.a)->required();
  symbol->add_option("--b", o.b)->required();
  symbol->add_option("--place", o.place, "inf, 2, or an odd prime")->required();

  auto* weights = app.add_subcommand("weights", "Weight enumerator and minimum distance");
  weights->add_option("--input", o.input, "Matrix text or JSON file ('-' for stdin)")->required();

  CommandOutcome outcome;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    outcome.payload = app.help();
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.exit_code = 2;
    outcome.diagnostics = std::string("error: ") + e.what() + "\n" + app.help();
    return outcome;
  }

  try {
    if (build->parsed()) {
      outcome.payload = cmd_build(o);
    } else if (box->parsed()) {
      outcome.payload = cmd_box(o, input);
    } else if (realize_cmd->parsed()) {
      outcome.payload = cmd_realize(o, input, outcome.diagnostics);
    } else if (enumerate->parsed()) {
      outcome.payload = cmd_enumerate(o);
    } else if (verify->parsed()) {
      outcome.payload = cmd_verify(o, verify_places->count() > 0, verify_input->count() > 0, input);
    } else if (symbol->parsed()) {
      outcome.payload = cmd_symbol(o);
    } else if (weights->parsed()) {
      outcome.payload = cmd_weights(o, input);
    }
  } catch (const UsageError& e) {
    outcome = {2, "", std::string("error: ") + e.what() + "\n"};
  } catch (const InvalidInput& e) {
    outcome = {1, "", std::string("error: ") + e.what() + "\n"};
  } catch (const GuardExceeded& e) {
    outcome = {1, "", std::string("error: ") + e.what() + "\n"};
  }
  return outcome;
}

}  // namespace hilbcode::cli
