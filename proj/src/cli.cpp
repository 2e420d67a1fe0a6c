#include "etakit/cli.hpp"

#include "etakit/cover.hpp"
#include "etakit/error.hpp"
#include "etakit/eta.hpp"
#include "etakit/pi1.hpp"
#include "etakit/quotient.hpp"
#include "etakit/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace etakit::cli {

namespace fs = std::filesystem;

namespace {

struct Context {
  bool json = false;
  std::string corpus = "./corpus";
  Json inputs = Json::array();
};

struct Loaded {
  std::string path;
  std::string text;
};

Loaded load(Context& ctx, const std::string& name) {
  fs::path p(name);
  if (!fs::exists(p)) {
    fs::path alt = fs::path(ctx.corpus) / p;
    if (fs::exists(alt)) {
      p = alt;
    } else if (fs::exists(fs::path(ctx.corpus) / p.filename())) {
      p = fs::path(ctx.corpus) / p.filename();
    } else {
      throw Error("cannot open '" + name + "' (also looked in " + ctx.corpus + ")");
    }
  }
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot read '" + p.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  Loaded l{p.string(), ss.str()};
  ctx.inputs.push_back({{"path", l.path}, {"sha256", sha256_hex(l.text)}});
  return l;
}

// "key=value" pairs, as in `--family n=1 inv=tau`.
std::map<std::string, std::string> key_values(const std::vector<std::string>& items) {
  std::map<std::string, std::string> kv;
  for (const auto& it : items) {
    auto eq = it.find('=');
    if (eq == std::string::npos || eq == 0) throw SyntaxError("expected key=value, got '" + it + "'");
    kv[it.substr(0, eq)] = it.substr(eq + 1);
  }
  return kv;
}

int to_int(const std::string& key, const std::map<std::string, std::string>& kv) {
  auto it = kv.find(key);
  if (it == kv.end()) throw SyntaxError("missing " + key + "=<int>");
  try {
    std::size_t used = 0;
    int v = std::stoi(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw SyntaxError(key + " must be an integer, got '" + it->second + "'");
  }
}

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool all_true(const Json& checks) {
  for (const auto& [k, v] : checks.items()) {
    if (!v.get<bool>()) return false;
  }
  return true;
}

std::string check_line(const Json& checks) {
  std::string s = "checks:";
  for (const auto& [k, v] : checks.items()) s += " " + k + "=" + (v.get<bool>() ? "true" : "false");
  return s;
}

struct Outcome {
  Json result;
  Json checks = Json::object();
  std::string text;  // human rendering of result and checks
};

Outcome eta_family(const FamilyParams& p) {
  Outcome o;
  const EtaComputation e = eta_pipeline(eta_tilde_closed_form(p));
  o.result = eta_report(e, p);
  const SymBracket printed = printed_eta_prime(p);
  o.result["printed_eta_prime_bracket"] = to_json(printed);
  if (printed != e.eta_prime) {
    std::string note = "eta' entries";
    for (std::size_t j = 0; j < std::max(printed.coeffs().size(), e.eta_prime.coeffs().size()); ++j) {
      if (printed.at(j) != e.eta_prime.at(j)) note += " " + std::to_string(j);
    }
    note += " differ from the printed eta'; normalization discards them";
    o.result["note"] = note;
  }
  o.checks = o.result["checks"];
  o.checks["matches_closed_form"] = e.eta == eta_closed_form(p);
  return o;
}

void render_eta(Outcome& o) {
  const Json& r = o.result;
  std::ostringstream t;
  t << "n: " << scalar(r["n"]) << "\n";
  t << "involution: " << scalar(r["involution"]) << "\n";
  t << "eta_tilde: " << r["eta_tilde"].dump() << "\n";
  t << "eta_prime (intermediate): " << SymBracket::parse(r["eta_prime_bracket"].dump()).to_string() << "\n";
  if (r.contains("printed_eta_prime_bracket")) {
    t << "printed eta_prime: " << SymBracket::parse(r["printed_eta_prime_bracket"].dump()).to_string() << "\n";
  }
  if (r.contains("note")) t << "note: " << scalar(r["note"]) << "\n";
  t << "eta: " << SymBracket::parse(r["eta_bracket"].dump()).to_string() << "\n";
  t << "eta(t): " << scalar(r["eta_text"]) << "\n";
  t << check_line(o.checks) << "\n";
  o.text = t.str();
}

Outcome run_eta(Context& ctx, const std::string& file, const std::vector<std::string>& family, bool table,
                int max_n) {
  const int modes = static_cast<int>(!file.empty()) + static_cast<int>(!family.empty()) + static_cast<int>(table);
  if (modes != 1) throw SyntaxError("eta needs exactly one of --file, --family or --table");
  if (table) {
    if (max_n < 1) throw SyntaxError("--max-n must be >= 1");
    Outcome o;
    Json rows = Json::array();
    bool consistent = true, distinct = true;
    std::ostringstream t;
    t << "n\tinvolution\teta\tmatches_closed_form\tdistinct\n";
    for (int n = 1; n <= max_n; ++n) {
      const Distinction d = sakuma_distinguish(n);
      distinct = distinct && d.distinct;
      for (Involution inv : {Involution::tau, Involution::sigma}) {
        const FamilyParams p(n, inv);
        const SymBracket eta = eta_pipeline(eta_tilde_closed_form(p)).eta;
        const bool ok = eta == eta_closed_form(p);
        consistent = consistent && ok;
        rows.push_back({{"n", n},
                        {"involution", std::string(to_string(inv))},
                        {"eta_bracket", to_json(eta)},
                        {"matches_closed_form", ok},
                        {"distinct", d.distinct}});
        t << n << '\t' << to_string(inv) << '\t' << eta.to_string() << '\t' << (ok ? "true" : "false") << '\t'
          << (d.distinct ? "true" : "false") << '\n';
      }
    }
    o.result["rows"] = rows;
    o.checks = {{"matches_closed_form", consistent}, {"distinct", distinct}};
    o.text = t.str();
    ctx.inputs.push_back({{"table", {{"max_n", max_n}}}});
    return o;
  }
  if (!family.empty()) {
    const auto kv = key_values(family);
    auto inv = kv.find("inv");
    if (inv == kv.end()) throw SyntaxError("missing inv=<tau|sigma>");
    const FamilyParams p(to_int("n", kv), parse_involution(inv->second));
    ctx.inputs.push_back({{"family", {{"n", p.n}, {"involution", std::string(to_string(p.involution))}}}});
    Outcome o = eta_family(p);
    render_eta(o);
    return o;
  }
  const Loaded l = load(ctx, file);
  const LeveledQuotient q = parse_leveled(l.text);
  Outcome o;
  o.result = eta_report(compute_eta_detailed(q), std::nullopt);
  o.checks = o.result["checks"];
  render_eta(o);
  return o;
}

Outcome run_oracle(Context& ctx, const std::string& file, std::optional<long> depth) {
  const Loaded l = load(ctx, file);
  const LeveledQuotient q = parse_leveled(l.text);
  const Level n = depth ? *depth : default_depth(q);
  const CrossCheck c = cross_check(q, n);
  const CrossCheck deeper = compare(n + 3, oracle_coefficients(q, n + 3), compute_eta(q));
  Outcome o;
  o.result = to_json(c);
  o.checks = {{"match", c.match()}, {"stable_at_depth_plus_3", deeper.match() && deeper.oracle.size() > 0}};
  for (const auto& [i, v] : c.oracle) {
    auto it = deeper.oracle.find(i);
    if (it == deeper.oracle.end() || it->second != v) o.checks["stable_at_depth_plus_3"] = false;
  }
  std::ostringstream t;
  t << "depth: " << n << "\n";
  t << "oracle: " << o.result["oracle"].dump() << "\n";
  t << "algorithm: " << o.result["algorithm"].dump() << "\n";
  t << "verdict: " << scalar(o.result["verdict"]) << "\n";
  for (const auto& m : c.mismatches) {
    t << "mismatch at i=" << m.i << ": oracle " << m.oracle << ", algorithm " << m.algorithm << "\n";
  }
  t << check_line(o.checks) << "\n";
  o.text = t.str();
  return o;
}

Outcome run_pi1(Context& ctx, const std::string& file, const std::vector<std::string>& family) {
  if (file.empty() == family.empty()) throw SyntaxError("verify pi1 needs exactly one of --family or --file");
  GroupPresentation p;
  if (!family.empty()) {
    const auto kv = key_values(family);
    const int m = to_int("m", kv), n = to_int("n", kv);
    ctx.inputs.push_back({{"family", {{"m", m}, {"n", n}}}});
    p = w_family_presentation(m, n);
  } else {
    p = parse_presentation(load(ctx, file).text);
  }
  const std::size_t budget = budget_from_env();
  const Certification c = certify_trivial(p, budget);
  bool replayed = false;
  try {
    replayed = replay(p, c.simplification.log) == c.simplification.presentation;
  } catch (const ReplayError&) {
    replayed = false;
  }
  Outcome o;
  o.result = {{"generators", p.generators().size()}, {"relators", p.relators().size()}, {"budget", budget}};
  o.result.update(to_json(c));
  o.checks = {{"replay", replayed}, {"certified", c.verdict == Verdict::certified}};
  std::ostringstream t;
  std::string h1 = "trivial";
  if (!c.h1.empty()) {
    h1.clear();
    for (const auto& f : c.h1) h1 += (h1.empty() ? "" : " + ") + (f == 0 ? std::string("Z") : "Z/" + f.str());
  }
  t << "H1: " << h1 << "; trivial: " << (c.verdict == Verdict::certified ? "certified" : "inconclusive") << "\n";
  t << "reason: " << c.reason << "\n";
  t << "presentation: " << p.generators().size() << " generators, " << p.relators().size() << " relators\n";
  t << "moves: " << c.simplification.log.size() << (c.simplification.budget_exhausted ? " (budget exhausted)" : "")
    << "\n";
  for (const auto& m : c.simplification.log) t << "  " << to_json(m).dump() << "\n";
  t << "terminal:\n" << serialize(c.simplification.presentation);
  t << check_line(o.checks) << "\n";
  o.text = t.str();
  return o;
}

Outcome run_lk(Context& ctx, const std::string& file, const std::vector<std::string>& comps) {
  const LinkDiagram d = parse_diagram(load(ctx, file).text);
  std::vector<std::pair<std::string, std::string>> pairs;
  if (!comps.empty()) {
    pairs.emplace_back(comps.at(0), comps.at(1));
  } else {
    std::vector<std::string> names;
    for (const auto& [name, c] : d.components()) names.push_back(name);
    for (std::size_t i = 0; i < names.size(); ++i) {
      for (std::size_t j = i + 1; j < names.size(); ++j) pairs.emplace_back(names[i], names[j]);
    }
  }
  Outcome o;
  Json links = Json::array();
  std::ostringstream t;
  for (const auto& [a, b] : pairs) {
    const int v = linking_number(d, a, b);
    links.push_back({{"a", a}, {"b", b}, {"lk", v}});
    t << "lk(" << a << ", " << b << ") = " << v << "\n";
  }
  Json writhes = Json::object();
  for (const auto& [name, c] : d.components()) {
    writhes[name] = writhe(d, name);
    t << "writhe(" << name << ") = " << writhe(d, name) << "\n";
  }
  o.result = {{"components", d.components().size()}, {"crossings", d.crossings().size()},
              {"linking_numbers", links}, {"writhe", writhes}};
  o.text = t.str();
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Context ctx;
  CLI::App app{"Sakuma eta-polynomial and pi1 certification toolkit", "etakit"};
  app.add_flag("--json", ctx.json, "Emit a JSON run report");
  app.add_option("--corpus", ctx.corpus, "Directory searched for input files")->capture_default_str();
  app.require_subcommand(1);
  app.fallthrough();

  std::string eta_file;
  std::vector<std::string> eta_family;
  bool eta_table = false;
  int max_n = 25;
  auto* eta = app.add_subcommand("eta", "Compute the eta polynomial");
  eta->add_option("--file", eta_file, "Leveled quotient file");
  eta->add_option("--family", eta_family, "n=<n> inv=<tau|sigma>")->expected(2);
  eta->add_flag("--table", eta_table, "Family table (TSV)");
  eta->add_option("--max-n", max_n, "Largest n in the table")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run a verification");
  verify->require_subcommand(1);
  std::string oracle_file;
  std::optional<long> depth;
  auto* oracle = verify->add_subcommand("oracle", "Cover linking-number oracle against the algorithm");
  oracle->add_option("--file", oracle_file, "Leveled quotient file")->required();
  oracle->add_option("--depth", depth, "Cover depth (default: support radius + 2)");
  std::string pi1_file;
  std::vector<std::string> pi1_family;
  auto* pi1 = verify->add_subcommand("pi1", "Certify a trivial fundamental group");
  pi1->add_option("--file", pi1_file, "Presentation file");
  pi1->add_option("--family", pi1_family, "m=<m> n=<n>")->expected(2);

  std::string lk_file;
  std::vector<std::string> lk_comps;
  auto* lk = app.add_subcommand("lk", "Linking numbers and writhes of a diagram");
  lk->add_option("--file", lk_file, "Diagram file")->required();
  lk->add_option("--components", lk_comps, "Two component names")->expected(2);

  std::vector<std::string> argv_store{"etakit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  std::string command;
  for (const auto& a : args) command += (command.empty() ? "" : " ") + a;
  Outcome o;
  try {
    if (eta->parsed()) {
      o = run_eta(ctx, eta_file, eta_family, eta_table, max_n);
    } else if (oracle->parsed()) {
      o = run_oracle(ctx, oracle_file, depth);
    } else if (pi1->parsed()) {
      o = run_pi1(ctx, pi1_file, pi1_family);
    } else {
      o = run_lk(ctx, lk_file, lk_comps);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  const bool ok = all_true(o.checks);
  if (ctx.json) {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    Json report{{"command", command}, {"inputs", ctx.inputs}, {"result", o.result}, {"checks", o.checks}, {"ok", ok}};
    out << Json{{"report", report}, {"timing", {{"wall_ms", ms}}}}.dump(2) << "\n";
  } else {
    out << o.text;
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace etakit::cli
