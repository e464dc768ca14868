#include <chrono>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thl/errors.hpp"
#include "thl/eval_params.hpp"
#include "thl/gram.hpp"
#include "thl/homfly.hpp"
#include "thl/json_io.hpp"
#include "thl/laurent.hpp"
#include "thl/signs.hpp"
#include "thl/svg.hpp"
#include "thl/tangle_build.hpp"
#include "thl/thompson.hpp"

namespace {

using nlohmann::json;

constexpr int kExitParse = 2;
constexpr int kExitNotOriented = 3;
constexpr int kExitIndefinite = 4;
constexpr int kExitInternal = 5;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw thl::Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw thl::Error("cannot write " + path);
  out << text;
}

void emit(const std::string& out_path, std::string text) {
  if (!text.empty() && text.back() != '\n') text += '\n';
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

// Flags shared by every subcommand; not all are meaningful everywhere, but
// accepting them uniformly keeps scripted invocations simple.
struct Shared {
  int r = 0;
  int k = 0;
  double tol = 1e-8;
  unsigned seed = 20260815;
  std::string convention = "standard";
  std::string normalization = "std";
  bool deterministic = false;
  std::string out;

  void attach(CLI::App* cmd) {
    cmd->add_option("--r", r, "root of unity order (s = exp(i pi / r))");
    cmd->add_option("--k", k, "evaluation exponent (a = s^{-2k})");
    cmd->add_option("--tol", tol, "numerical tolerance")->capture_default_str();
    cmd->add_option("--seed", seed, "seed for randomized families")
        ->capture_default_str();
    cmd->add_option("--convention", convention, "crossing convention")
        ->check(CLI::IsMember({"standard", "mirror"}))
        ->capture_default_str();
    cmd->add_option("--normalization", normalization,
                    "polynomial normalization: std (unknot = 1) or loop "
                    "(unknot = delta)")
        ->check(CLI::IsMember({"std", "loop"}))
        ->capture_default_str();
    cmd->add_flag("--deterministic", deterministic,
                  "omit the generated-at timestamp");
    cmd->add_option("--out", out, "output file (default stdout)");
  }

  thl::Convention conv() const {
    return convention == "mirror" ? thl::Convention::mirrored
                                  : thl::Convention::standard;
  }
  bool has_params() const { return r != 0; }
  thl::EvalParams params() const { return thl::EvalParams::at(r, k); }
};

// An element comes either from a generator word or from a tree-pair file.
struct ElementInput {
  std::string word;
  std::string file;

  void attach(CLI::App* cmd, const char* what = "element") {
    auto* w = cmd->add_option("--word", word,
                              std::string("generator word for the ") + what +
                                  " (tokens x0, x1, x0^-1, x1^-1)");
    auto* f = cmd->add_option("--in", file,
                              std::string("tree-pair JSON file for the ") + what)
                  ->check(CLI::ExistingFile);
    w->excludes(f);
  }

  bool given() const { return !word.empty() || !file.empty(); }

  thl::GroupElement load() const {
    if (!file.empty()) return thl::element_from_json(read_file(file));
    return thl::eval_word(word);  // empty word is the identity
  }
};

json element_report(const thl::GroupElement& g) {
  json doc = json::parse(thl::element_to_json(g));
  doc["oriented"] = thl::is_oriented(g);
  doc["leaves"] = g.leaf_count();
  doc["reduced"] = thl::is_reduced(g);
  return doc;
}

json complex_json(std::complex<double> v) {
  return json{{"re", v.real()}, {"im", v.imag()}};
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

thl::SkeinEngine& shared_engine() {
  static thl::SkeinEngine engine;
  return engine;
}

std::string cache_file() {
  const char* dir = std::getenv("THL_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  return std::string(dir) + "/skein-memo.txt";
}

struct CacheGuard {
  std::string path = cache_file();
  CacheGuard() {
    if (path.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
    shared_engine().load_cache(path);
  }
  ~CacheGuard() {
    if (path.empty()) return;
    try {
      shared_engine().save_cache(path);
    } catch (const thl::Error&) {
      // cache spill is best-effort; results were already emitted
    }
  }
};

thl::LaurentPoly apply_normalization(thl::LaurentPoly p, const Shared& shared) {
  if (shared.normalization == "loop") p = p * thl::LaurentPoly::loop_value();
  return p;
}

// ---- element ---------------------------------------------------------------

int run_element(const std::string& verb, const ElementInput& first,
                const ElementInput& second, const Shared& shared) {
  thl::GroupElement g = first.load();
  if (verb == "multiply") {
    g = thl::multiply(g, second.load());
  } else if (verb == "invert") {
    g = thl::invert(g);
  } else if (verb == "reduce") {
    g = thl::reduce(g);
  }
  json doc;
  if (verb == "orient-check")
    doc = json{{"oriented", thl::is_oriented(g)}};
  else
    doc = element_report(g);
  emit(shared.out, doc.dump(2));
  return 0;
}

// ---- link ------------------------------------------------------------------

int run_link(const ElementInput& input, bool unoriented,
             const std::string& svg_path, const Shared& shared) {
  const thl::GroupElement g = input.load();
  const thl::Tangle link = unoriented
                               ? thl::build_unoriented_link(g, shared.conv())
                               : thl::build_link(g, shared.conv());
  if (!svg_path.empty()) write_file(svg_path, thl::tangle_svg(link));
  emit(shared.out, thl::tangle_to_json(link));
  return 0;
}

// ---- homfly ----------------------------------------------------------------

int run_homfly(const ElementInput& input, const std::string& pd_path,
               const Shared& shared) {
  CacheGuard cache;
  thl::SkeinEngine& engine = shared_engine();

  json doc;
  thl::LaurentPoly poly;
  std::optional<std::pair<thl::LaurentPoly, int>> phi_parts;
  if (!pd_path.empty()) {
    poly = engine.polynomial(thl::tangle_from_json(read_file(pd_path)));
  } else {
    const thl::GroupElement g = input.load();
    phi_parts = thl::phi_polynomial(g, engine, shared.conv());
    poly = phi_parts->first;
  }

  doc = json::parse(thl::laurent_to_json(apply_normalization(poly, shared)));
  if (shared.has_params()) {
    const thl::EvalParams prm = shared.params();
    doc["params"] = json{{"r", prm.r}, {"k", prm.k}};
    doc["value"] =
        complex_json(thl::evaluate(apply_normalization(poly, shared), prm));
    if (phi_parts) {
      const auto& [p, leaves] = *phi_parts;
      doc["phi"] = complex_json(thl::evaluate(p, prm) /
                                std::pow(prm.delta, leaves - 1));
    }
  }
  emit(shared.out, doc.dump(2));
  return 0;
}

// ---- gram ------------------------------------------------------------------

std::vector<std::pair<int, int>> parse_sweep(const std::string& sweep) {
  std::vector<std::pair<int, int>> out;
  std::istringstream in(sweep);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw thl::ParseError("sweep entries look like r:k", 0);
    try {
      out.push_back({std::stoi(item.substr(0, colon)),
                     std::stoi(item.substr(colon + 1))});
    } catch (const std::exception&) {
      throw thl::ParseError("sweep entries look like r:k", 0);
    }
  }
  if (out.empty()) throw thl::ParseError("empty sweep list", 0);
  return out;
}

// A family over one sign row: the crossingless matching plus random
// conjugates of it by short words of equal-sign crossings (those keep the
// row; the gram matrix is invariant under the sign-changing ones anyway).
std::vector<thl::Tangle> random_tangle_family(const thl::SignSeq& row,
                                              int size, int max_crossings,
                                              std::mt19937& rng) {
  std::vector<int> keep_positions;
  for (int i = 1; i < row.size(); ++i)
    if (row.at(i) == row.at(i + 1)) keep_positions.push_back(i);
  if (keep_positions.empty())
    throw thl::NotApplicable("sign row has no equal adjacent signs");
  std::vector<thl::Tangle> family = {thl::matching_tangle(row)};
  while (int(family.size()) < size) {
    thl::Tangle t = family.front();
    const int len = 1 + int(rng() % unsigned(max_crossings));
    for (int i = 0; i < len; ++i)
      t = thl::conjugate_by_crossing(
          t, keep_positions[rng() % keep_positions.size()], rng() % 2 == 0);
    family.push_back(t);
  }
  return family;
}

int run_gram(const std::string& family_path, bool tangles_mode,
             const std::string& tangles_row, int family_size,
             int max_crossings, const std::string& sweep,
             const Shared& shared) {
  CacheGuard cache;
  thl::SkeinEngine& engine = shared_engine();

  std::vector<std::pair<int, int>> points;
  if (!sweep.empty())
    points = parse_sweep(sweep);
  else
    points.push_back({shared.r == 0 ? 5 : shared.r, shared.r == 0 ? 1 : shared.k});

  std::vector<thl::ReportDoc> docs;
  for (auto [r, k] : points) {
    const thl::EvalParams prm = thl::EvalParams::at(r, k);
    thl::SpectrumReport rep;
    if (tangles_mode) {
      std::mt19937 rng(shared.seed);
      const auto family = random_tangle_family(thl::SignSeq::parse(tangles_row),
                                               family_size, max_crossings, rng);
      rep.params = prm;
      thl::Matrix m = thl::tangle_gram(family, prm, engine);
      rep.defect = thl::hermitian_defect(m);
      rep.eigenvalues = thl::hermitian_eigenvalues(std::move(m));
    } else {
      rep = thl::element_spectrum(thl::family_from_json(read_file(family_path)),
                                  prm, engine, shared.conv());
    }
    docs.push_back(thl::make_report_doc(rep, shared.tol));
  }

  json out;
  if (docs.size() == 1) {
    out = json::parse(thl::report_to_json(docs.front()));
  } else {
    out["reports"] = json::array();
    for (const thl::ReportDoc& d : docs)
      out["reports"].push_back(json::parse(thl::report_to_json(d)));
  }
  if (!shared.deterministic) out["generated_at"] = timestamp();
  emit(shared.out, out.dump(2));

  for (const thl::ReportDoc& d : docs)
    if (d.verdict == "indefinite" && d.flags.empty()) return kExitIndefinite;
  return 0;
}

// ---- enumerate -------------------------------------------------------------

int run_enumerate(int leaves, const Shared& shared) {
  emit(shared.out, thl::family_to_json(thl::enumerate_oriented(leaves)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thompson-group link diagrams and their skein positivity"};
  app.require_subcommand(1);

  Shared shared;

  // element
  auto* element = app.add_subcommand("element", "parse and transform elements");
  std::string verb;
  element->add_option("verb", verb, "parse | reduce | multiply | invert | orient-check")
      ->required()
      ->check(CLI::IsMember({"parse", "reduce", "multiply", "invert", "orient-check"}));
  ElementInput el_first, el_second;
  el_first.attach(element);
  el_second.word.clear();
  element->add_option("--word2", el_second.word, "right factor word (multiply)");
  element->add_option("--in2", el_second.file, "right factor JSON file (multiply)")
      ->check(CLI::ExistingFile);
  shared.attach(element);

  // link
  auto* link = app.add_subcommand("link", "closed diagram of an element");
  ElementInput link_input;
  link_input.attach(link);
  bool unoriented = false;
  link->add_flag("--unoriented", unoriented,
                 "positional gluing, defined for non-members too");
  std::string svg_path;
  link->add_option("--svg", svg_path, "also write an SVG picture here");
  shared.attach(link);

  // homfly
  auto* homfly = app.add_subcommand("homfly", "skein polynomial of a diagram");
  ElementInput homfly_input;
  homfly_input.attach(homfly);
  std::string pd_path;
  homfly->add_option("--pd", pd_path, "diagram JSON file instead of an element")
      ->check(CLI::ExistingFile);
  shared.attach(homfly);

  // gram
  auto* gram = app.add_subcommand("gram", "spectra of inner-product matrices");
  std::string family_path, tangles_row = "+++---", sweep;
  bool tangles_mode = false;
  int family_size = 4, max_crossings = 4;
  gram->add_option("--family", family_path, "element family JSON file")
      ->check(CLI::ExistingFile);
  gram->add_flag("--tangles", tangles_mode, "random tangle family mode");
  gram->add_option("--row", tangles_row, "sign row for the tangle family")
      ->capture_default_str();
  gram->add_option("--size", family_size, "tangle family size")
      ->capture_default_str();
  gram->add_option("--crossings", max_crossings,
                   "conjugation word length cap per tangle")
      ->capture_default_str();
  gram->add_option("--sweep", sweep, "parameter list r:k,r:k,...");
  shared.attach(gram);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "oriented elements by leaf count");
  int leaves = 4;
  enumerate->add_option("--leaves", leaves, "maximum leaf count (<= 8)")
      ->capture_default_str();
  shared.attach(enumerate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (element->parsed()) {
      if (!el_first.given())
        throw thl::ParseError("element input needed: --word or --in", 0);
      if (verb == "multiply" && el_second.word.empty() && el_second.file.empty())
        throw thl::ParseError("multiply needs --word2 or --in2", 0);
      return run_element(verb, el_first, el_second, shared);
    }
    if (link->parsed()) {
      if (!link_input.given())
        throw thl::ParseError("link needs --word or --in", 0);
      return run_link(link_input, unoriented, svg_path, shared);
    }
    if (homfly->parsed()) {
      if (!homfly_input.given() && pd_path.empty())
        throw thl::ParseError("homfly needs --word, --in or --pd", 0);
      return run_homfly(homfly_input, pd_path, shared);
    }
    if (gram->parsed()) {
      if (family_path.empty() == !tangles_mode)
        throw thl::ParseError("gram needs exactly one of --family, --tangles", 0);
      return run_gram(family_path, tangles_mode, tangles_row, family_size,
                      max_crossings,
                      sweep, shared);
    }
    if (enumerate->parsed()) return run_enumerate(leaves, shared);
  } catch (const thl::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const thl::NotOriented& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotOriented;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
