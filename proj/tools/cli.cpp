#include "cli.hpp"

#include "negaz4/code_json.hpp"
#include "negaz4/gray_lee.hpp"
#include "negaz4/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace negaz4::cli {
namespace {

struct Options {
  unsigned n = 1;
  unsigned k = 1;
  unsigned j = 1;
  bool cyclic = false;
  std::optional<std::string> limit;
  std::string format = "table";
  std::string in_file;
  std::string spec_file;
  std::string suite;
  std::string table;
  bool quiet = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string bracket(const Z4Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string case_summary(const CodeSpec& spec) {
  std::string s;
  for (const IdealSpec& c : spec.choice) {
    if (!s.empty()) s += " ";
    s += to_string(c.kase);
    if (c.lambda) s += ":l=" + std::to_string(*c.lambda);
    if (c.t) s += ":t=" + std::to_string(*c.t);
    if (!c.b_digits.empty()) {
      s += ":b=";
      for (const auto& [i, digit] : c.b_digits) s += to_string(digit);
    }
  }
  return s;
}

int cmd_factor(const Options& o, std::ostream& out) {
  const FactorSet fs = factor_yn_minus_1(o.n);
  if (!o.quiet) out << "# factors of y^" << o.n << " - 1 over Z4\n";
  for (std::size_t j = 0; j < fs.size(); ++j)
    out << "f" << j + 1 << " degree " << fs.degrees[j] << " " << to_string(fs.factors[j]) << "\n";
  return 0;
}

int cmd_idempotents(const Options& o, std::ostream& out) {
  const AmbientCtx ctx = make_ambient(o.n, o.k);
  if (!o.quiet)
    out << "# idempotents modulo " << (ctx.cyclic() ? "x^n - 1" : "x^(2^k n) + 1") << ", n=" << o.n << " k=" << o.k
        << "\n";
  const char* name = ctx.cyclic() ? "e" : "theta";
  for (std::size_t j = 0; j < ctx.idempotents.size(); ++j)
    out << name << j + 1 << " " << to_string(ctx.idempotents[j]) << "\n";
  return 0;
}

int cmd_ring(const Options& o, std::ostream& out) {
  const FactorSet fs = factor_yn_minus_1(o.n);
  if (o.j < 1 || o.j > fs.size()) throw UsageError("--j must lie in 1.." + std::to_string(fs.size()));
  const ChainRingCtx ctx = make_ctx(fs.factors[o.j - 1], o.k);
  out << "f " << to_string(ctx.f()) << "\n"
      << "d " << ctx.d() << "\n"
      << "modulus " << to_string(ctx.modulus()) << "\n"
      << "monic_modulus " << to_string(ctx.monic_modulus()) << "\n"
      << "nu " << ctx.nu() << "\n"
      << "theta " << to_string(ctx.theta_unit()) << "\n"
      << "log2_size " << ctx.log2_size() << "\n"
      << "ideals " << to_decimal(count_local_ideals(ctx.d(), o.k)) << "\n";
  return 0;
}

int cmd_count(const Options& o, std::ostream& out) {
  out << to_decimal(o.cyclic ? count_cyclic_odd(o.n) : count_negacyclic(o.n, o.k)) << "\n";
  return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  std::optional<BigInt> limit;
  if (o.limit) {
    try {
      limit = BigInt(*o.limit);
    } catch (const std::exception&) {
      throw UsageError("--limit must be a non-negative integer");
    }
    if (*limit < 0) throw UsageError("--limit must be a non-negative integer");
  }
  const CodeSpecStream stream = o.cyclic ? enumerate_cyclic_odd(o.n, limit) : enumerate_negacyclic(o.n, o.k, limit);
  if (o.format == "jsonl") {
    for (const CodeSpec& spec : stream) out << to_json(spec, stream).dump() << "\n";
    return 0;
  }
  const bool csv = o.format == "csv";
  if (csv)
    out << "index,total_size,ideals\n";
  else if (!o.quiet)
    out << "# " << to_decimal(stream.size()) << " codes\n";
  BigInt index = 0;
  for (const CodeSpec& spec : stream) {
    if (csv)
      out << to_decimal(index) << "," << to_decimal(spec.total_size) << "," << case_summary(spec) << "\n";
    else
      out << std::setw(8) << to_decimal(index) << "  " << std::setw(24) << to_decimal(spec.total_size) << "  "
          << case_summary(spec) << "\n";
    ++index;
  }
  return 0;
}

int cmd_gray(const Options& o, std::ostream& out) {
  std::istringstream lines(read_file(o.in_file));
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      throw UsageError("malformed input line: " + line);
    }
    if (!j.contains("a") || !j.contains("b") || j["a"].size() != j["b"].size())
      throw UsageError("each line needs equal-length \"a\" and \"b\" arrays");
    std::vector<RElem> v;
    for (std::size_t i = 0; i < j["a"].size(); ++i)
      v.push_back({static_cast<std::uint8_t>(j["a"][i].get<int>() & 3), static_cast<std::uint8_t>(j["b"][i].get<int>() & 3)});
    out << bracket(gray_map(v)) << "\n";
  }
  return 0;
}

int cmd_weights(const Options& o, std::ostream& out) {
  const ParsedCode parsed = parse_code_spec(read_file(o.spec_file));
  const WeightEnumerator we = lee_weight_enumerator(parsed.stream.span_of(parsed.spec));
  for (const auto& [w, c] : we) out << w << "," << c << "\n";
  return 0;
}

int cmd_dual(const Options& o, std::ostream& out) {
  const ParsedCode parsed = parse_code_spec(read_file(o.spec_file));
  const CanonModule code = parsed.stream.span_of(parsed.spec);
  const CanonModule perp = dual(code);
  out << "size " << to_decimal(mod_card(code)) << "\n"
      << "dual_size " << to_decimal(mod_card(perp)) << "\n"
      << "self_dual " << (code == perp ? "yes" : "no") << "\n";
  for (const Z4Vector& r : perp.rows) out << "row " << bracket(r) << "\n";
  return 0;
}

int cmd_census(const Options& o, std::ostream& out) {
  const SelfDualCensus census = self_dual_census(o.n, o.k);
  const CodeSpecStream stream = enumerate_negacyclic(o.n, o.k, BigInt(0));
  if (o.format == "jsonl") {
    for (const CodeSpec& s : census.specs) out << to_json(s, stream).dump() << "\n";
    return 0;
  }
  if (!o.quiet) out << "# self-dual negacyclic codes, n=" << o.n << " k=" << o.k << "\n";
  for (const CodeSpec& s : census.specs) out << std::setw(24) << to_decimal(s.total_size) << "  " << case_summary(s) << "\n";
  out << "count " << census.specs.size() << "\n";
  return 0;
}

Report selfdual_report(unsigned n, unsigned k) {
  Report rep("self-dual census n=" + std::to_string(n) + " k=" + std::to_string(k));
  const SelfDualCensus census = self_dual_census(n, k);
  rep.note("self-dual codes: " + std::to_string(census.codes.size()));
  rep.summary = "count=" + std::to_string(census.codes.size());
  if (n == 1 && k == 1) {
    const Z4Poly modulus{1, 0, 1};
    const auto refs = reference_length2_codes();
    std::set<CanonModule> expect;
    for (unsigned i : {3u, 11u, 13u, 14u, 8u, 12u, 22u}) expect.insert(span(modulus, refs[i - 1].generators));
    const std::set<CanonModule> got(census.codes.begin(), census.codes.end());
    rep.check(got == expect, "census equals {C3, C11, C13, C14, C8, C12, C22}");
    rep.check(census.codes.size() != 8, "earlier claim of 8 self-dual codes refuted");
  }
  return rep;
}

int cmd_verify(const Options& o, std::ostream& out) {
  Report rep;
  if (o.suite == "oracle")
    rep = verify_enumeration(o.n, o.k);
  else if (o.suite == "appendix")
    rep = verify_length2_reference();
  else if (o.suite == "selfdual")
    rep = selfdual_report(o.n, o.k);
  else
    rep = verify_cyclic_odd(o.n);
  if (!o.quiet)
    for (const std::string& line : rep.details) out << line << "\n";
  out << (rep.pass ? "PASS" : "FAIL") << " suite=" << o.suite << " n=" << o.n << " k=" << o.k << " " << rep.summary << "\n";
  return rep.pass ? 0 : 1;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const BigInt claimed = claimed_length2k_count(o.k);
  const BigInt actual = count_local_ideals(1, o.k);
  out << "length " << (1u << o.k) << " claimed " << to_decimal(claimed) << " actual " << to_decimal(actual)
      << " difference " << to_decimal(claimed - actual) << "\n";
  return 0;
}

int cmd_report(const Options& o, std::ostream& out) {
  if (o.table == "counts-2n") {
    if (!o.quiet) out << "# negacyclic codes of length 2n\n";
    for (unsigned n = 3; n <= 21; n += 2) out << std::setw(4) << n << "  " << to_decimal(count_negacyclic(n, 1)) << "\n";
  } else {
    if (!o.quiet) out << "# ideals of (Z4+uZ4)[x]/(x^(2^(k-1)) + 1)\n";
    for (unsigned k = 1; k <= 7; ++k) out << std::setw(4) << k << "  " << to_decimal(count_local_ideals(1, k - 1)) << "\n";
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Negacyclic and cyclic codes over Z4 + uZ4", "negaz4"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"jsonl", "table", "csv"}));
  app.add_flag("--quiet", o.quiet, "omit comment and detail lines");

  const auto odd = CLI::Validator(
      [](std::string& s) -> std::string {
        try {
          const long v = std::stol(s);
          if (v > 0 && v % 2) return {};
        } catch (const std::exception&) {
        }
        return "must be a positive odd integer";
      },
      "ODD");
  const auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "odd length factor")->required()->check(odd); };
  const auto add_k = [&](CLI::App* sub, bool positive) {
    sub->add_option("--k", o.k, "power of two exponent")->check(CLI::Range(positive ? 1u : 0u, 16u));
  };

  std::function<int(const Options&, std::ostream&)> handler;
  const auto sub = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    s->callback([&handler, fn] { handler = fn; });
    return s;
  };

  auto* factor = sub("factor", "factor y^n - 1 over Z4", cmd_factor);
  add_n(factor);
  auto* idem = sub("idempotents", "print the CRT idempotents", cmd_idempotents);
  add_n(idem);
  add_k(idem, false);
  auto* ring = sub("ring", "describe one local chain ring", cmd_ring);
  add_n(ring);
  add_k(ring, true);
  ring->add_option("--j", o.j, "factor index (1-based)");
  auto* count = sub("count", "count all codes", cmd_count);
  add_n(count);
  add_k(count, true);
  count->add_flag("--cyclic", o.cyclic, "count cyclic codes of odd length n");
  auto* enumerate = sub("enumerate", "list codes", cmd_enumerate);
  add_n(enumerate);
  add_k(enumerate, true);
  enumerate->add_flag("--cyclic", o.cyclic, "cyclic codes of odd length n");
  enumerate->add_option("--limit", o.limit, "stop after this many codes");
  auto* gray = sub("gray", "Gray images of vectors read as JSON lines", cmd_gray);
  gray->add_option("--in", o.in_file, "input file")->required();
  auto* weights = sub("weights", "Lee weight distribution of a code", cmd_weights);
  weights->add_option("--spec", o.spec_file, "JSON code spec")->required();
  auto* dualc = sub("dual", "dual of a code", cmd_dual);
  dualc->add_option("--spec", o.spec_file, "JSON code spec")->required();
  auto* census = sub("self-dual-census", "list self-dual negacyclic codes", cmd_census);
  add_n(census);
  add_k(census, true);
  auto* verify = sub("verify", "run a verification suite", cmd_verify);
  verify->add_option("--suite", o.suite, "suite")->required()->check(
      CLI::IsMember({"oracle", "appendix", "selfdual", "cyclic"}));
  verify->add_option("--n", o.n, "odd length factor")->check(odd);
  add_k(verify, true);
  auto* compare = sub("compare-bandi", "compare the earlier length-2^k count with the true one", cmd_compare);
  add_k(compare, true);
  auto* report = sub("report", "print a count table", cmd_report);
  report->add_option("--table", o.table, "table name")->required()->check(CLI::IsMember({"counts-2n", "n-list"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Error& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    return handler(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace negaz4::cli
