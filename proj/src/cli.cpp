#include "twistcert/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "twistcert/certify.hpp"
#include "twistcert/closure.hpp"
#include "twistcert/density.hpp"
#include "twistcert/errors.hpp"
#include "twistcert/identities.hpp"
#include "twistcert/membership.hpp"
#include "twistcert/root_subgroups.hpp"
#include "twistcert/surgery.hpp"
#include "twistcert/twist_word.hpp"

namespace twistcert {

using Json = nlohmann::ordered_json;

namespace {

// Integers that fit int64 are emitted as numbers, larger ones as decimal
// strings.
Json jint(const Integer& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json jmatrix(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(jint(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Coefficients from x^0 up.
Json jpoly(const IntPoly& p) {
  Json out = Json::object();
  Json cs = Json::array();
  for (const Integer& c : p.coefficients()) cs.push_back(jint(c));
  out["coefficients"] = std::move(cs);
  out["text"] = to_string(p);
  return out;
}

Json jvec(const std::vector<std::int64_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json jdecomposition(const TDecomposition& d) {
  Json blocks = Json::array();
  for (const TBlock& b : d.blocks) blocks.push_back({{"p", jvec(b.p)}, {"q", jvec(b.q)}, {"r", jvec(b.r)}});
  return blocks;
}

Json jfamily(const TValidation& v) {
  if (const auto* d = std::get_if<TDecomposition>(&v))
    return {{"member", true}, {"trivial", d->trivial()}, {"blocks", jdecomposition(*d)}};
  const auto& r = std::get<TRejection>(v);
  return {{"member", false}, {"position", r.position}, {"reason", r.reason}};
}

Json jverdict(const PAVerdict& v) {
  Json reasons = Json::array();
  for (PAReason r : v.reasons) reasons.push_back(reason_tag(r));
  return {{"status", v.certified() ? "CertifiedPA" : "Inconclusive"}, {"reasons", std::move(reasons)}};
}

const char* phase_tag(Phase p) { return p == Phase::zero ? "0" : "3pi/2"; }

std::string matrix_text(const IntMatrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) {
      cells.push_back(m(r, c).get_str());
      width = std::max(width, cells.back().size());
    }
  std::ostringstream os;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    os << "  ";
    for (std::size_t c = 0; c < m.dim(); ++c) os << (c ? " " : "") << std::setw(static_cast<int>(width)) << cells[r * m.dim() + c];
    os << '\n';
  }
  return os.str();
}

std::string reasons_text(const PAVerdict& v) {
  std::string s;
  for (PAReason r : v.reasons) s += (s.empty() ? "" : ", ") + std::string(reason_tag(r));
  return s;
}

struct Options {
  std::size_t genus = 2;
  std::optional<std::uint64_t> seed;
  std::size_t samples = 100;
  std::size_t blocks = 2;
  std::int64_t bound = 2;
  std::string format = "human";
  std::string cache;
  bool strict = false;
  std::vector<std::string> args;
  std::string witness;

  bool json() const { return format == "json"; }
  std::string text() const {
    std::string s;
    for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
    return s;
  }
};

// Thrown for malformed input that has no specific error class.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Outcome {
  int code;
  Json body;
  std::string human;
};

Json header(const char* command, const Options& o) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"genus", o.genus}};
}

Outcome cmd_eval(const Options& o) {
  const TwistWord w = parse_word(o.text(), o.genus);
  const SpMatrix m = eval_word(w);
  const IntPoly chi = charpoly(m.matrix());
  Json j = header("eval", o);
  j["word"] = format_word(w);
  j["matrix"] = jmatrix(m.matrix());
  j["charpoly"] = jpoly(chi);
  std::string h = "word: " + format_word(w) + "\nmatrix:\n" + matrix_text(m.matrix()) + "charpoly: " + to_string(chi) + "\n";
  return {exit_ok, std::move(j), std::move(h)};
}

Outcome cmd_certify(const Options& o) {
  CertifyOptions co;
  co.strict_power = o.strict;
  const CertReport r = certify_report(parse_word(o.text(), o.genus), co);
  Json j = header("certify", o);
  j["word"] = format_word(r.word);
  j["matrix"] = jmatrix(r.matrix.matrix());
  j["charpoly"] = jpoly(r.charpoly);
  j["family"] = jfamily(r.family);
  j["anosov"] = to_string(r.anosov);
  j["pa"] = jverdict(r.pa);
  j["hyperbolic"] = to_string(r.hyperbolic);
  std::ostringstream h;
  h << "word: " << format_word(r.word) << "\nmatrix:\n" << matrix_text(r.matrix.matrix()) << "charpoly: " << to_string(r.charpoly)
    << "\n";
  if (const auto* rej = std::get_if<TRejection>(&r.family))
    h << "family: not a product of family blocks (letter " << rej->position << ": " << rej->reason << ")\n";
  else
    h << "family: " << std::get<TDecomposition>(r.family).blocks.size() << " block(s)\n";
  h << "anosov: " << to_string(r.anosov) << "\npa: " << (r.pa.certified() ? "CertifiedPA" : "Inconclusive");
  if (!r.pa.certified()) h << " (" << reasons_text(r.pa) << ")";
  h << "\nhyperbolic: " << to_string(r.hyperbolic) << "\n";
  return {r.anosov == Tristate::yes ? exit_ok : exit_negative, std::move(j), h.str()};
}

Outcome cmd_plan(const Options& o) {
  const TwistWord w = parse_word(o.text(), o.genus);
  Json j = header("plan", o);
  j["word"] = format_word(w);
  const TValidation v = validate_family_T(w);
  if (const auto* rej = std::get_if<TRejection>(&v)) {
    j["family"] = jfamily(v);
    return {exit_negative, std::move(j),
            "not a product of family blocks (letter " + std::to_string(rej->position) + ": " + rej->reason + ")\n"};
  }
  const TDecomposition& dec = std::get<TDecomposition>(v);
  j["family"] = jfamily(v);
  const auto planned = plan_from_T_word(dec, o.genus);
  if (const auto* e = std::get_if<EquivalenceRejection>(&planned)) {
    j["rejection"] = {{"twist", e->twist}, {"k", e->k}};
    return {exit_negative, std::move(j),
            "no equivalence for twist " + std::to_string(e->twist) + ", k " + std::to_string(e->k) + "\n"};
  }
  const SurgeryPlan& plan = std::get<SurgeryPlan>(planned);
  std::ostringstream h;
  Json blocks = Json::array();
  for (std::size_t s = 0; s < plan.blocks.size(); ++s) {
    Json ops = Json::array();
    h << "block " << s << ":";
    if (plan.blocks[s].empty()) h << " (no surgeries)";
    h << "\n";
    for (const SurgeryOp& op : plan.blocks[s]) {
      ops.push_back({{"curve", to_string(op.orbit().curve)},
                     {"phase", phase_tag(op.orbit().phase)},
                     {"k", op.index_k()},
                     {"twist", op.orbit().twist},
                     {"l", op.order_l()}});
      h << "  " << to_string(op.orbit().curve) << " phase " << phase_tag(op.orbit().phase) << " k=" << op.index_k()
        << " twist=" << op.orbit().twist << " l=" << op.order_l() << "\n";
    }
    blocks.push_back(std::move(ops));
  }
  const TwistWord back = monodromy_from_plan(plan);
  const TValidation again = validate_family_T(back);
  const bool dec_equal = std::holds_alternative<TDecomposition>(again) && std::get<TDecomposition>(again) == dec;
  const bool mat_equal = eval_word(back) == eval_word(w);
  const bool disjoint = same_fiber_orbits_disjoint(plan);
  j["blocks"] = std::move(blocks);
  j["round_trip"] = {{"monodromy", format_word(back)},
                     {"decomposition_equal", dec_equal},
                     {"matrix_equal", mat_equal},
                     {"same_fiber_disjoint", disjoint},
                     {"ok", dec_equal && mat_equal && disjoint}};
  const bool ok = dec_equal && mat_equal && disjoint;
  h << "monodromy: " << format_word(back) << "\nround trip: " << (ok ? "OK" : "FAILED") << "\n";
  return {ok ? exit_ok : exit_negative, std::move(j), h.str()};
}

Outcome cmd_verify_claims(const Options& o) {
  const IdentityReport r = verify_identities(o.genus);
  Json j = header("verify-claims", o);
  Json checks = Json::array();
  std::ostringstream h;
  std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> families;
  for (const auto& c : r.checks) {
    checks.push_back({{"family", c.family}, {"instance", c.instance}, {"passed", c.passed}, {"detail", c.detail}});
    if (families.empty() || families.back().first != c.family) families.push_back({c.family, {0, 0}});
    families.back().second.first += c.passed;
    ++families.back().second.second;
    if (!c.passed) h << "FAIL " << c.family << " " << c.instance << "\n" << c.detail << "\n";
  }
  for (const auto& [name, counts] : families)
    h << name << ": " << counts.first << "/" << counts.second << " passed\n";
  for (const auto& c : r.family("chain_relation")) h << "chain_relation " << c.instance << ": " << c.detail << "\n";
  j["checks"] = std::move(checks);
  j["failures"] = r.failures();
  j["all_passed"] = r.all_passed();
  h << (r.all_passed() ? "all identities hold\n" : "some identities FAILED\n");
  return {r.all_passed() ? exit_ok : exit_negative, std::move(j), h.str()};
}

RootSpec parse_root_spec(const std::string& text) {
  // V1, W2^4, X1,3^4, Y2,3^-8; exponent defaults to the smallest synthesizable one.
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> ParseError { return ParseError(pos, msg); };
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos >= text.size()) throw fail("empty root spec");
  RootSpec s{};
  switch (text[pos]) {
    case 'V': s.kind = RootKind::V; break;
    case 'W': s.kind = RootKind::W; break;
    case 'X': s.kind = RootKind::X; break;
    case 'Y': s.kind = RootKind::Y; break;
    case 'Z': s.kind = RootKind::Z; break;
    default: throw fail("expected one of V W X Y Z");
  }
  ++pos;
  auto number = [&](const char* what) -> std::int64_t {
    const std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && text[start] == '-')) {
      pos = start;
      throw fail(std::string("expected ") + what);
    }
    try {
      return std::stoll(text.substr(start, pos - start));
    } catch (const std::out_of_range&) {
      pos = start;
      throw fail(std::string(what) + " out of range");
    }
  };
  const std::int64_t j = number("index");
  if (j < 1) throw fail("index must be positive");
  s.j = static_cast<std::size_t>(j);
  const bool two = s.kind == RootKind::X || s.kind == RootKind::Y || s.kind == RootKind::Z;
  if (two) {
    if (pos >= text.size() || text[pos] != ',') throw fail("expected ','");
    ++pos;
    const std::int64_t k = number("index");
    if (k < 1) throw fail("index must be positive");
    s.k = static_cast<std::size_t>(k);
  }
  if (pos < text.size() && text[pos] == '^') {
    ++pos;
    s.t = number("exponent");
  } else {
    s.t = 1;
    s.t = base_exponent(s);
  }
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos != text.size()) throw fail("trailing characters");
  return s;
}

Outcome cmd_synthesize(const Options& o) {
  const RootSpec s = parse_root_spec(o.text());
  const SpMatrix target = root_matrix(s, o.genus);
  const GenWord w = synthesize_root(s, o.genus);
  const bool verified = eval_gen_word(w) == target;
  Json j = header("synthesize", o);
  j["spec"] = to_string(s);
  j["base_exponent"] = base_exponent(s);
  j["word"] = format_gen_word(w);
  j["letters"] = w.size();
  j["syllables"] = w.syllables();
  j["matrix"] = jmatrix(target.matrix());
  j["verified"] = verified;
  std::ostringstream h;
  h << "spec: " << to_string(s) << "\nword: " << format_gen_word(w) << "\nletters: " << w.size()
    << "  syllables: " << w.syllables() << "\nmatrix:\n"
    << matrix_text(target.matrix()) << "verified: " << (verified ? "yes" : "NO") << "\n";
  return {verified ? exit_ok : exit_negative, std::move(j), h.str()};
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream is(path, std::ios::binary);
  if (!is) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

Outcome cmd_membership(Options o, bool genus_given) {
  if (o.args.size() != 1) throw InputError("membership takes one matrix file (or - for stdin)");
  const IntMatrix raw = parse_matrix_text(read_file(o.args[0]));
  if (raw.dim() % 2 != 0 || raw.dim() < 4) throw DimensionError("matrix dimension must be 2g with g >= 2");
  if (genus_given && raw.dim() != 2 * o.genus)
    throw DimensionError("matrix is " + std::to_string(raw.dim()) + "x" + std::to_string(raw.dim()) + " but genus is " +
                         std::to_string(o.genus));
  o.genus = raw.dim() / 2;
  const SpMatrix m(raw, o.genus);
  std::optional<GenWord> witness;
  if (!o.witness.empty()) witness = parse_gen_word(o.witness, o.genus);
  std::optional<ClosureTable> table;
  if (o.genus == 2) table.emplace(closure_cached(resolve_cache_path(o.cache)));
  const MembershipResult r = membership(m, table ? &*table : nullptr, witness ? &*witness : nullptr);
  Json j = header("membership", o);
  j["matrix"] = jmatrix(m.matrix());
  j["verdict"] = to_string(r.verdict);
  j["method"] = r.method;
  j["mod2_block"] = mod2_block_test(m);
  if (r.witness) j["witness"] = format_gen_word(*r.witness);
  std::string h = std::string("verdict: ") + to_string(r.verdict) + "\nmethod: " + r.method + "\n";
  if (r.witness) h += "witness: " + format_gen_word(*r.witness) + "\n";
  const int code = r.verdict == Membership::in_gamma ? exit_ok : r.verdict == Membership::not_in_gamma ? exit_negative : exit_unknown;
  return {code, std::move(j), std::move(h)};
}

Outcome cmd_index(const Options& o) {
  if (o.genus != 2) throw InputError("index is computed exactly only for genus 2");
  const std::string path = resolve_cache_path(o.cache);
  const bool was_cached = load_closure(path).has_value();
  const ClosureTable t = closure_cached(path);
  const IndexResult r = gamma_index(t);
  Json j = header("index", o);
  j["modulus"] = 4;
  j["image_order"] = r.image_order;
  j["group_order"] = jint(r.group_order);
  j["index"] = jint(r.index);
  j["multiple_of_20"] = r.multiple_of_20;
  j["within_bound"] = r.within_bound;
  j["generator_closed"] = generator_closed(t);
  std::ostringstream h;
  h << "|image of Gamma in Sp(4, Z/4)|: " << r.image_order << "\n|Sp(4, Z/4)|: " << r.group_order.get_str()
    << "\nindex [Sp(4,Z) : Gamma]: " << r.index.get_str() << "\nmultiple of 20: " << (r.multiple_of_20 ? "yes" : "no")
    << "\nwithin 2^64: " << (r.within_bound ? "yes" : "no") << "\ncache: " << path << (was_cached ? " (hit)" : " (computed)")
    << "\n";
  return {exit_ok, std::move(j), h.str()};
}

Outcome cmd_density(const Options& o) {
  if (!o.seed) throw InputError("density requires --seed");
  DensityParams p;
  p.genus = o.genus;
  p.blocks = o.blocks;
  p.samples = o.samples;
  p.exponent_bound = o.bound;
  p.seed = *o.seed;
  const DensityResult r = density_experiment(p);
  Json j = header("density", o);
  j["seed"] = jint(Integer(static_cast<unsigned long>(p.seed)));
  j["blocks"] = p.blocks;
  j["samples"] = r.samples;
  j["exponent_bound"] = p.exponent_bound;
  j["certified"] = r.certified;
  j["all_zero"] = r.all_zero;
  Json reasons = Json::object();
  for (std::size_t i = 0; i < r.reason_counts.size(); ++i) reasons[reason_tag(static_cast<PAReason>(i))] = r.reason_counts[i];
  j["reason_counts"] = std::move(reasons);
  std::ostringstream frac;
  frac << std::fixed << std::setprecision(6) << r.fraction();
  j["fraction"] = frac.str();
  std::ostringstream h;
  h << "samples: " << r.samples << "\ncertified: " << r.certified << " (" << frac.str() << ")\nall-zero samples: " << r.all_zero
    << "\n";
  for (std::size_t i = 0; i < r.reason_counts.size(); ++i)
    h << "  " << reason_tag(static_cast<PAReason>(i)) << ": " << r.reason_counts[i] << "\n";
  return {exit_ok, std::move(j), h.str()};
}

}  // namespace

IntMatrix parse_matrix_text(const std::string& text) {
  std::vector<std::vector<Integer>> rows;
  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream cells(line);
    std::string cell;
    std::vector<Integer> row;
    while (cells >> cell) {
      Integer v;
      const std::size_t skip = (cell[0] == '+' || cell[0] == '-') ? 1 : 0;
      if (cell.size() == skip || cell.find_first_not_of("0123456789", skip) != std::string::npos ||
          v.set_str(cell[0] == '+' ? cell.substr(1) : cell, 10) != 0)
        throw ParseError(lineno, "not an integer: '" + cell + "' on line " + std::to_string(lineno));
      row.push_back(v);
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError(lineno, "row length differs on line " + std::to_string(lineno));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(0, "no matrix rows");
  if (rows.size() != rows.front().size())
    throw ParseError(lineno, "matrix is not square: " + std::to_string(rows.size()) + " rows of length " +
                                 std::to_string(rows.front().size()));
  return IntMatrix::from_rows(rows);
}

std::string resolve_cache_path(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("TWISTCERT_CACHE"); env && *env) return env;
  return (std::filesystem::temp_directory_path() / "twistcert-closure-g2-v1.bin").string();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations with Dehn twist words, surgery plans and congruence subgroups of Sp(2g, Z)", "twistcert"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--genus,-g", o.genus, "surface genus (>= 2)")->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  app.add_option("--seed", o.seed, "64-bit seed for sampling subcommands");
  app.add_option("--samples", o.samples, "number of samples")->check(CLI::PositiveNumber);
  app.add_option("--blocks", o.blocks, "family blocks per sample")->check(CLI::PositiveNumber);
  app.add_option("--bound", o.bound, "exponent bound for sampled blocks")->check(CLI::NonNegativeNumber);
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"human", "json"}));
  app.add_option("--cache", o.cache, "closure cache file (overrides TWISTCERT_CACHE)");

  auto word_cmd = [&](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->add_option("word", o.args, "twist word, e.g. \"d1^-2 c1^-2 a1\"");
    return s;
  };
  CLI::App* eval = word_cmd("eval", "evaluate a twist word to its symplectic matrix and characteristic polynomial");
  CLI::App* certify = word_cmd("certify", "family membership and pseudo-Anosov certificate of a twist word");
  certify->add_flag("--strict-power", o.strict, "also reject characteristic polynomials in x^k for k >= 3");
  CLI::App* plan = word_cmd("plan", "surgery plan for a family word, checked by rebuilding the monodromy");
  CLI::App* claims = app.add_subcommand("verify-claims", "check the root-subgroup identities at the given genus");
  CLI::App* synth = app.add_subcommand("synthesize", "write a root element as a word in the generators of Gamma");
  synth->add_option("spec", o.args, "root spec: V1^2, W2, X1,3^4, Y1,2^-2, Z2,3^8")->required();
  CLI::App* member = app.add_subcommand("membership", "decide membership of a matrix in Gamma");
  member->add_option("file", o.args, "matrix file, one row per line (- for stdin)")->required();
  member->add_option("--witness", o.witness, "word in A, B, C (e.g. \"A1 C1^-2\") claimed to evaluate to the matrix");
  CLI::App* index = app.add_subcommand("index", "index of Gamma in Sp(4, Z) from the closure mod 4");
  CLI::App* density = app.add_subcommand("density", "fraction of random family products with a pseudo-Anosov certificate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_input_error;
  }
  const bool genus_given = app.count("--genus") > 0;
  const char* command = app.get_subcommands().front()->get_name().c_str();

  Outcome res{exit_ok, {}, {}};
  try {
    if (eval->parsed()) res = cmd_eval(o);
    else if (certify->parsed()) res = cmd_certify(o);
    else if (plan->parsed()) res = cmd_plan(o);
    else if (claims->parsed()) res = cmd_verify_claims(o);
    else if (synth->parsed()) res = cmd_synthesize(o);
    else if (member->parsed()) res = cmd_membership(o, genus_given);
    else if (index->parsed()) res = cmd_index(o);
    else if (density->parsed()) res = cmd_density(o);
  } catch (const std::exception& e) {
    Json j = header(command, o);
    Json error = {{"message", e.what()}};
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) error["offset"] = pe->offset();
    j["error"] = std::move(error);
    err << "twistcert " << command << ": " << e.what() << "\n";
    if (o.json()) out << j.dump(2) << "\n";
    return exit_input_error;
  }
  res.body["exit_code"] = res.code;
  if (o.json())
    out << res.body.dump(2) << "\n";
  else
    out << res.human;
  return res.code;
}

}  // namespace twistcert
