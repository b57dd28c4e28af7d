#include "klcx/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "klcx/a1oracle.hpp"
#include "klcx/extcalc.hpp"
#include "klcx/kltable.hpp"
#include "klcx/symweights.hpp"

namespace klcx::cli {

namespace {

using nlohmann::json;

struct BadArguments : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string join(const IntVector& v, char sep = ' ') {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v(i));
  }
  return out;
}

json to_json(const IntVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

std::string format_double(double d) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", d);
  return buf;
}

class Emitter {
 public:
  Emitter(const RunConfig& cfg, std::ostream& out) : json_(cfg.format == "json"), out_(out) {}

  void header(std::vector<std::string> cols) { columns_ = std::move(cols); }

  void row(const std::vector<json>& values) {
    if (json_) {
      json obj = json::object();
      for (std::size_t i = 0; i < columns_.size(); ++i) obj[columns_[i]] = values[i];
      rows_.push_back(std::move(obj));
      return;
    }
    if (!header_written_) {
      for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << columns_[i];
      out_ << '\n';
      header_written_ = true;
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) out_ << ',';
      const json& v = values[i];
      if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s.find(',') != std::string::npos) out_ << '"' << s << '"';
        else out_ << s;
      } else if (v.is_boolean()) {
        out_ << (v.get<bool>() ? "true" : "false");
      } else if (v.is_number_float()) {
        out_ << format_double(v.get<double>());
      } else {
        out_ << v.dump();
      }
    }
    out_ << '\n';
  }

  void finish(json extra = json::object()) {
    if (!json_) return;
    extra["rows"] = rows_;
    out_ << extra.dump(2) << '\n';
  }

  bool is_json() const { return json_; }

 private:
  bool json_;
  std::ostream& out_;
  std::vector<std::string> columns_;
  json rows_ = json::array();
  bool header_written_ = false;
};

RootSystem root_system(const RunConfig& cfg) {
  if (cfg.type.size() != 1) throw DomainError("type must be a single letter A-G");
  return build_root_system(cfg.type + std::to_string(cfg.rank));
}

std::filesystem::path cache_path(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("KLCX_CACHE_DIR"); dir && *dir) return std::filesystem::path(dir) / p;
  }
  return p;
}

struct Context {
  std::unique_ptr<GroupTable> group;
  std::unique_ptr<KLTable> kl;
};

Context make_group(const RunConfig& cfg, int length) {
  Context c;
  c.group = std::make_unique<GroupTable>(generate(root_system(cfg), length, cfg.affine, GroupLimits{cfg.max_elements}));
  return c;
}

Context make_kl(const RunConfig& cfg, int length) {
  Context c = make_group(cfg, length);
  c.kl = std::make_unique<KLTable>(*c.group);
  bool write = false;
  if (!cfg.cache.empty()) {
    const auto path = cache_path(cfg.cache);
    if (std::filesystem::exists(path)) {
      std::ifstream in(path);
      c.kl->load_cache(in);
    } else {
      write = true;
    }
  }
  c.kl->build_all(cfg.threads);
  if (write) {
    std::ofstream out(cache_path(cfg.cache));
    if (!out) throw std::runtime_error("cannot write cache " + cfg.cache);
    c.kl->write_cache(out);
  }
  return c;
}

int word_length_hint(const std::string& w) { return static_cast<int>(parse_word(w).size()); }

int require_length(const RunConfig& cfg, int fallback) {
  const int L = cfg.max_length >= 0 ? cfg.max_length : fallback;
  if (L < 0) throw BadArguments("--L is required");
  return L;
}

void need(const std::string& value, const char* flag) {
  if (value.empty()) throw BadArguments(std::string(flag) + " is required");
}

json stat_json(const TruncatedStat& s) { return json{{"value", s.value}, {"L", s.truncation_L}, {"stabilized", s.stabilized}}; }

// ---- subcommands ----

void cmd_roots(const RunConfig& cfg, std::ostream& out) {
  const RootSystem rs = root_system(cfg);
  Emitter em(cfg, out);
  em.header({"root", "height", "rho_coroot", "squared_length"});
  for (const auto& a : rs.positive_roots())
    em.row({join(a), height(a), rs.coroot_pairing(rs.rho(), a), rs.squared_length(a)});
  em.finish({{"type", rs.label()},
             {"rank", rs.rank()},
             {"coxeter_number", rs.coxeter_number()},
             {"alpha0", to_json(rs.alpha0())},
             {"rho", to_json(rs.rho().coords)}});
}

void cmd_elements(const RunConfig& cfg, std::ostream& out) {
  const Context c = make_group(cfg, require_length(cfg, 4));
  const GroupTable& g = *c.group;
  Emitter em(cfg, out);
  em.header({"index", "word", "length", "wplus"});
  for (int i = 0; i < static_cast<int>(g.size()); ++i) em.row({i, g.word_string(i), g.length(i), is_wplus(g, i)});
  em.finish({{"type", g.root_system().label()}, {"affine", g.affine()}, {"L", g.max_length()}});
}

void cmd_klpoly(const RunConfig& cfg, std::ostream& out) {
  need(cfg.x, "--x");
  need(cfg.y, "--y");
  const int L = require_length(cfg, std::max(word_length_hint(cfg.x), word_length_hint(cfg.y)));
  const Context c = make_kl(cfg, L);
  const int x = c.group->index_of(cfg.x);
  const int y = c.group->index_of(cfg.y);
  const QPolynomial& p = c.kl->polynomial(y, x);
  if (cfg.format == "json") {
    out << json{{"y", c.group->word_string(y)}, {"x", c.group->word_string(x)}, {"poly", p.dense()}}.dump(2)
        << '\n';
  } else {
    out << p.to_string() << '\n';
  }
}

void cmd_kltable(const RunConfig& cfg, std::ostream& out) {
  const Context c = make_kl(cfg, require_length(cfg, -1));
  const GroupTable& g = *c.group;
  Emitter em(cfg, out);
  em.header({"y_word", "x_word", "poly"});
  for (int x = 0; x < static_cast<int>(g.size()); ++x)
    for (int y = 0; y <= x; ++y) {
      const QPolynomial& p = c.kl->polynomial(y, x);
      if (!p.is_zero()) em.row({g.word_string(y), g.word_string(x), p.to_string()});
    }
  em.finish({{"type", g.root_system().label()}, {"affine", g.affine()}, {"L", g.max_length()}});
}

void cmd_mu(const RunConfig& cfg, std::ostream& out) {
  need(cfg.x, "--x");
  need(cfg.y, "--y");
  const int L = require_length(cfg, std::max(word_length_hint(cfg.x), word_length_hint(cfg.y)));
  const Context c = make_kl(cfg, L);
  const int x = c.group->index_of(cfg.x);
  const int y = c.group->index_of(cfg.y);
  const auto m = x == y ? 0 : c.kl->mu(y, x);
  if (cfg.format == "json") out << json{{"y", c.group->word_string(y)}, {"x", c.group->word_string(x)}, {"mu", m}}.dump(2) << '\n';
  else out << m << '\n';
}

void cmd_ext(const RunConfig& cfg, std::ostream& out) {
  need(cfg.x, "--x");
  need(cfg.y, "--y");
  if (cfg.kind != "ll" && cfg.kind != "lnabla") throw BadArguments("--kind must be ll or lnabla");
  const int L = require_length(cfg, std::max(word_length_hint(cfg.x), word_length_hint(cfg.y)));
  const Context c = make_kl(cfg, L);
  const int x = c.group->index_of(cfg.x);
  const int y = c.group->index_of(cfg.y);
  const auto dim = cfg.kind == "ll" ? ext_L_L(*c.kl, x, y, cfg.degree) : ext_L_nabla(*c.kl, x, y, cfg.degree);
  Emitter em(cfg, out);
  em.header({"x_word", "y_word", "n", "dim"});
  em.row({c.group->word_string(x), c.group->word_string(y), cfg.degree, dim});
  em.finish({{"kind", cfg.kind}});
}

void cmd_ext_table(const RunConfig& cfg, std::ostream& out) {
  const Context c = make_kl(cfg, require_length(cfg, -1));
  const GroupTable& g = *c.group;
  const auto wplus = enumerate_wplus(g);
  Emitter em(cfg, out);
  em.header({"x_word", "y_word", "n", "dim"});
  for (int x : wplus)
    for (int y : wplus)
      for (int n = 0; n <= cfg.degree_bound; ++n) {
        const auto d = ext_L_L(*c.kl, x, y, n);
        if (d != 0) em.row({g.word_string(x), g.word_string(y), n, d});
      }
  em.finish({{"L", g.max_length()}, {"N", cfg.degree_bound}});
}

void cmd_sum_nu(const RunConfig& cfg, std::ostream& out) {
  need(cfg.x, "--x");
  const int L = require_length(cfg, -1);
  const Context c = make_kl(cfg, L + 2);
  const auto s = sum_over_nu(*c.kl, c.group->index_of(cfg.x), cfg.degree, L);
  Emitter em(cfg, out);
  em.header({"n", "value", "L", "stabilized"});
  em.row({cfg.degree, s.value, s.truncation_L, s.stabilized});
  em.finish({{"x", c.group->word_string(c.group->index_of(cfg.x))}});
}

void cmd_cn(const RunConfig& cfg, std::ostream& out) {
  const int L = require_length(cfg, -1);
  const Context c = make_kl(cfg, L + 2);
  Emitter em(cfg, out);
  em.header({"n", "value", "L", "stabilized"});
  for (int n = 0; n <= std::min(cfg.degree_bound, L); ++n) {
    const auto s = c_n_max(*c.kl, n, L);
    em.row({n, s.value, s.truncation_L, s.stabilized});
  }
  em.finish();
}

void emit_sequence(Emitter& em, const std::string& name, const GrowthSequence& seq) {
  bool all = true;
  for (std::size_t n = 0; n < seq.terms.size(); ++n) {
    em.row({name, static_cast<int>(n), seq.terms[n], seq.truncation_L, static_cast<bool>(seq.stabilized[n])});
    all = all && seq.stabilized[n];
  }
  em.row({name, "gamma", seq.estimated_gamma ? json(*seq.estimated_gamma) : json("undefined"), seq.truncation_L, all});
}

void cmd_growth(const RunConfig& cfg, std::ostream& out) {
  const int L = require_length(cfg, -1);
  const Context c = make_kl(cfg, L + 2);
  const auto [cx, Cx] = cx_sequences(*c.kl, cfg.degree_bound, L);
  Emitter em(cfg, out);
  em.header({"series", "n", "value", "L", "stabilized"});
  emit_sequence(em, "cx", cx);
  emit_sequence(em, "Cx", Cx);
  em.finish({{"window", {cx.window.first, cx.window.second}}});
}

void cmd_zigzag(const RunConfig& cfg, std::ostream& out) {
  need(cfg.x, "--x");
  const int L = require_length(cfg, -1);
  const Context c = make_kl(cfg, L + 2);
  const int x = c.group->index_of(cfg.x);
  const auto z = zigzag_bound(*c.kl, x, cfg.degree, L, cfg.modulus);
  const auto s = sum_over_nu(*c.kl, x, cfg.degree, L);
  Emitter em(cfg, out);
  em.header({"series", "n", "value", "L", "stabilized"});
  em.row({"zigzag", cfg.degree, z.value, z.truncation_L, z.stabilized});
  em.row({"sum_nu", cfg.degree, s.value, s.truncation_L, s.stabilized});
  em.finish({{"x", c.group->word_string(x)}});
}

void cmd_musums(const RunConfig& cfg, std::ostream& out) {
  const int L = require_length(cfg, -1);
  const Context c = make_kl(cfg, L + 2);
  const auto sums = mu_row_sums(*c.kl, L);
  Emitter em(cfg, out);
  em.header({"x_word", "value", "L", "stabilized"});
  for (const auto& [x, s] : sums.rows) em.row({c.group->word_string(x), s.value, s.truncation_L, s.stabilized});
  if (sums.R) em.row({"R", sums.R->value, sums.R->truncation_L, sums.R->stabilized});
  if (sums.R_prime) em.row({"Rprime", sums.R_prime->value, sums.R_prime->truncation_L, sums.R_prime->stabilized});
  em.finish();
}

IntVector parse_sigma(const std::string& text, int rank) {
  std::istringstream in(text);
  std::vector<std::int64_t> v;
  std::int64_t c;
  while (in >> c) v.push_back(c);
  if (!in.eof() || static_cast<int>(v.size()) != rank)
    throw BadArguments("--sigma needs " + std::to_string(rank) + " integers");
  IntVector out(rank);
  for (int i = 0; i < rank; ++i) out(i) = v[i];
  return out;
}

void cmd_weights(const RunConfig& cfg, std::ostream& out) {
  const RootSystem rs = root_system(cfg);
  const SymmetricLimits limits{cfg.max_states};
  Emitter em(cfg, out);
  em.header({"m", "sigma", "count"});
  if (!cfg.sigma.empty()) {
    const IntVector sigma = parse_sigma(cfg.sigma, rs.rank());
    em.row({cfg.parts, join(sigma), weight_multiplicity(rs, cfg.parts, sigma, limits)});
  } else {
    const MultiplicityTable table(rs, cfg.parts, limits);
    if (cfg.max_only) {
      const auto [sigma, count] = table.max_weight(cfg.parts);
      em.row({cfg.parts, join(sigma), count});
    } else {
      for (const auto& [sigma, count] : table.weights(cfg.parts)) em.row({cfg.parts, join(sigma), count});
    }
  }
  em.finish({{"type", rs.label()}});
}

void cmd_triple_witness(const RunConfig& cfg, std::ostream& out) {
  const RootSystem rs = root_system(cfg);
  const auto w = triple_witness(rs, cfg.degree, SymmetricLimits{cfg.max_states});
  if (cfg.format == "json") {
    out << json{{"n", w.n},
                {"m", w.m},
                {"target", to_json(w.target)},
                {"count", w.count},
                {"bound", w.bound},
                {"distinct_ok", w.distinct_ok}}
               .dump(2)
        << '\n';
    return;
  }
  out << "n,m,target,count,bound,distinct_ok\n"
      << w.n << ',' << w.m << ',' << join(w.target) << ',' << w.count << ',' << w.bound << ','
      << (w.distinct_ok ? "true" : "false") << '\n';
}

void cmd_sphi(const RunConfig& cfg, std::ostream& out) {
  const RootSystem rs = root_system(cfg);
  const auto seq = s_phi_estimate(rs, cfg.degree_bound, SymmetricLimits{cfg.max_states});
  Emitter em(cfg, out);
  em.header({"n", "value"});
  for (std::size_t n = 0; n < seq.terms.size(); ++n) em.row({static_cast<int>(n), seq.terms[n]});
  em.row({"gamma", seq.estimated_gamma ? json(*seq.estimated_gamma) : json("undefined")});
  em.finish({{"type", rs.label()}, {"window", {seq.window.first, seq.window.second}}});
}

int cmd_verify_a1(const RunConfig& cfg, std::ostream& out) {
  if (cfg.xmax < 1 || cfg.nmax < 0) throw BadArguments("--xmax must be >= 1 and --nmax >= 0");
  const auto report = a1::verify_against_engine(cfg.xmax, cfg.nmax, cfg.threads);
  if (cfg.format == "json") {
    json dis = json::array();
    for (const auto& d : report.disagreements)
      dis.push_back({{"X", d.X}, {"Y", d.Y}, {"n", d.n}, {"engine", d.engine}, {"oracle", d.oracle}});
    out << json{{"checked", report.checked}, {"disagreements", dis}}.dump(2) << '\n';
  } else {
    out << "checked: " << report.checked << '\n' << "disagreements: " << report.disagreements.size() << '\n';
    for (const auto& d : report.disagreements)
      out << "X=" << d.X << " Y=" << d.Y << " n=" << d.n << " engine=" << d.engine << " oracle=" << d.oracle << '\n';
  }
  return report.disagreements.empty() ? kOk : kFailure;
}

void cmd_exceptional(const RunConfig& cfg, std::ostream& out) {
  const RootSystem rs = root_system(cfg);
  if (cfg.modulus < 2) throw BadArguments("--l must be >= 2");
  const bool ex = is_exceptional(rs, cfg.modulus);
  const auto phi0 = compute_phi0(rs, cfg.modulus);
  Emitter em(cfg, out);
  em.header({"type", "l", "exceptional", "phi0_size"});
  em.row({rs.label(), cfg.modulus, ex, static_cast<int>(phi0.size())});
  json roots = json::array();
  for (const auto& a : phi0) roots.push_back(to_json(a));
  em.finish({{"phi0", roots}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kazhdan-Lusztig and Ext-growth computations for affine Weyl groups", "klcx"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&cfg](CLI::App* sub, bool group = true) {
    sub->add_option("--type", cfg.type, "root system type A-G");
    sub->add_option("--rank", cfg.rank, "rank");
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    if (!group) return;
    sub->add_flag("--affine", cfg.affine, "use the affine Weyl group (default: finite)");
    sub->add_option("--L", cfg.max_length, "length bound");
    sub->add_option("--cache", cfg.cache, "KL cache file (read if present, else written)");
    sub->add_option("--threads", cfg.threads, "worker threads for table builds")->check(CLI::PositiveNumber);
    sub->add_option("--max-elements", cfg.max_elements, "cap on group elements");
  };

  struct Entry {
    const char* name;
    const char* help;
    bool group;
  };
  const std::vector<Entry> entries = {
      {"roots", "positive roots and basic data", false},
      {"elements", "group elements up to length L", true},
      {"klpoly", "one KL polynomial P_{y,x}", true},
      {"kltable", "all nonzero KL polynomials up to length L", true},
      {"mu", "mu coefficient of a pair", true},
      {"ext", "one Ext dimension", true},
      {"ext-table", "all nonzero Ext dimensions between W+ elements", true},
      {"sum-nu", "truncated sum over nu of Ext dimensions", true},
      {"cn", "maximal KL coefficients C^(n)", true},
      {"growth", "cx and Cx sequences with growth estimates", true},
      {"zigzag", "mu-chain upper bound next to the sum over nu", true},
      {"musums", "mu row sums, R and R'", true},
      {"weights", "weight multiplicities of S^m(u*)", false},
      {"lemma34", "triple-construction witness", false},
      {"sphi", "max multiplicity sequence of S^n(u*)", false},
      {"verify-a1", "compare the engine with the closed form in affine A1", true},
      {"exceptional", "exceptional-l test and Phi_{0,l}", false},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    common(sub, e.group);
    subs[e.name] = sub;
  }
  for (const char* name : {"klpoly", "mu", "ext"}) {
    subs[name]->add_option("--x", cfg.x, "element word, e.g. \"s1 s0 s1\"");
    subs[name]->add_option("--y", cfg.y, "element word");
  }
  subs["ext"]->add_option("--n", cfg.degree, "cohomological degree");
  subs["ext"]->add_option("--kind", cfg.kind, "ll (L,L) or lnabla (L,nabla)");
  for (const char* name : {"sum-nu", "zigzag"}) {
    subs[name]->add_option("--x", cfg.x, "W+ element word");
    subs[name]->add_option("--n", cfg.degree, "cohomological degree");
  }
  subs["zigzag"]->add_option("--l", cfg.modulus, "modulus for weights");
  for (const char* name : {"ext-table", "cn", "growth", "sphi"}) subs[name]->add_option("--N", cfg.degree_bound, "degree bound");
  subs["weights"]->add_option("--m", cfg.parts, "number of parts");
  subs["weights"]->add_option("--sigma", cfg.sigma, "target weight in simple-root coordinates");
  subs["weights"]->add_flag("--max", cfg.max_only, "only the maximising weight");
  subs["weights"]->add_option("--max-states", cfg.max_states, "cap on DP states");
  subs["lemma34"]->add_option("--n", cfg.degree, "n");
  subs["verify-a1"]->add_option("--xmax", cfg.xmax, "largest length X, Y");
  subs["verify-a1"]->add_option("--nmax", cfg.nmax, "largest degree n");
  subs["exceptional"]->add_option("--l", cfg.modulus, "l")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "roots") cmd_roots(cfg, out);
    else if (name == "elements") cmd_elements(cfg, out);
    else if (name == "klpoly") cmd_klpoly(cfg, out);
    else if (name == "kltable") cmd_kltable(cfg, out);
    else if (name == "mu") cmd_mu(cfg, out);
    else if (name == "ext") cmd_ext(cfg, out);
    else if (name == "ext-table") cmd_ext_table(cfg, out);
    else if (name == "sum-nu") cmd_sum_nu(cfg, out);
    else if (name == "cn") cmd_cn(cfg, out);
    else if (name == "growth") cmd_growth(cfg, out);
    else if (name == "zigzag") cmd_zigzag(cfg, out);
    else if (name == "musums") cmd_musums(cfg, out);
    else if (name == "weights") cmd_weights(cfg, out);
    else if (name == "lemma34") cmd_triple_witness(cfg, out);
    else if (name == "sphi") cmd_sphi(cfg, out);
    else if (name == "verify-a1") return cmd_verify_a1(cfg, out);
    else if (name == "exceptional") cmd_exceptional(cfg, out);
    return kOk;
  } catch (const TruncationError& e) {
    err << "truncation: " << e.what() << '\n';
    return kTruncation;
  } catch (const ResourceLimitError& e) {
    err << "resource cap: " << e.what() << '\n';
    return kResourceCap;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace klcx::cli
