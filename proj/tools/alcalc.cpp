// alcalc: command-line front end for the alcove calculus.  Global flags pick
// the root system, the prime, and the Levi subset; each subcommand exposes
// one library operation with text or canonical-JSON output.
//
// Conventions:
//   - weights are comma-separated fundamental-weight coordinates ("4" or
//     "0,-1");
//   - positive roots are numbered 1..N in the order `describe` lists them;
//   - a reflection is written s[b,v] with b that root number and v the level
//     of the hyperplane <x+rho, beta-vee> = v, so v must be a multiple of p;
//   - a descent word is written "v:b,v:b,..." with the same numerals;
//   - affine elements for `dot` are s[b,v], t[g1,...,gr] (translation by p
//     times the root-lattice vector g), or products joined with '*', applied
//     right-to-left.
//
// Exit status: 0 success, 1 domain error (the library's code name is printed
// on stderr), 2 verification failure, 64 usage error.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "alcove/verify.hpp"

using namespace alcove;
using json = nlohmann::ordered_json;

namespace {

constexpr int kUsageExit = 64;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------- parsing helpers ----------

long long parse_ll(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw usage_error(std::string("cannot read ") + what + " from '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

Weight parse_weight(const std::string& s, const RootSystem& rs) {
  std::vector<long long> coords;
  for (const std::string& tok : split(s, ','))
    coords.push_back(parse_ll(tok, "weight coordinate"));
  if ((int)coords.size() != rs.rank)
    fail(errc::dimension_mismatch, "weight '" + s + "' needs " + std::to_string(rs.rank) +
                                       " coordinates, got " + std::to_string(coords.size()));
  return weight_from_ll(std::move(coords));
}

// s[b,v] with b 1-based into the positive roots and v the wall level
Reflection parse_reflection(const std::string& s, const RootSystem& rs, long long p) {
  if (s.size() < 4 || s.compare(0, 2, "s[") != 0 || s.back() != ']')
    throw usage_error("reflection must look like s[b,v], got '" + s + "'");
  std::vector<std::string> parts = split(s.substr(2, s.size() - 3), ',');
  if (parts.size() != 2) throw usage_error("reflection must look like s[b,v], got '" + s + "'");
  long long b = parse_ll(parts[0], "root number");
  long long v = parse_ll(parts[1], "wall level");
  if (b < 1 || b > (long long)rs.positive_roots.size())
    throw usage_error("root number " + std::to_string(b) + " out of range 1.." +
                      std::to_string(rs.positive_roots.size()));
  if (v % p != 0)
    throw usage_error("wall level " + std::to_string(v) + " is not a multiple of p = " +
                      std::to_string(p));
  return Reflection{(int)(b - 1), v / p};
}

std::string reflection_str(const Reflection& r, long long p) {
  return "s[" + std::to_string(r.root_index + 1) + "," + std::to_string(r.n * p) + "]";
}

// "v:b,v:b,..."
std::vector<Reflection> parse_word(const std::string& s, const RootSystem& rs, long long p) {
  std::vector<Reflection> out;
  if (s.empty()) return out;
  for (const std::string& tok : split(s, ',')) {
    std::vector<std::string> parts = split(tok, ':');
    if (parts.size() != 2) throw usage_error("word letter must look like v:b, got '" + tok + "'");
    out.push_back(parse_reflection("s[" + parts[1] + "," + parts[0] + "]", rs, p));
  }
  return out;
}

std::string word_str(const std::vector<Reflection>& letters, long long p) {
  std::string out;
  for (size_t i = 0; i < letters.size(); i++) {
    if (i) out += ",";
    out += std::to_string(letters[i].n * p) + ":" + std::to_string(letters[i].root_index + 1);
  }
  return out;
}

AffineElt parse_element(const std::string& s, const RootSystem& rs, long long p) {
  AffineElt acc = identity_elt(rs, p);
  for (const std::string& tok : split(s, '*')) {
    AffineElt next;
    if (tok.rfind("s[", 0) == 0) {
      next = reflection_elt(rs, parse_reflection(tok, rs, p), p);
    } else if (tok.rfind("t[", 0) == 0 && tok.back() == ']') {
      std::vector<Int> gamma;
      for (const std::string& c : split(tok.substr(2, tok.size() - 3), ','))
        gamma.push_back(Int(parse_ll(c, "translation coordinate")));
      if ((int)gamma.size() != rs.rank)
        fail(errc::dimension_mismatch, "translation needs " + std::to_string(rs.rank) +
                                           " root coordinates");
      next = translation_elt(rs, std::move(gamma), p);
    } else {
      throw usage_error("element factor must be s[b,v] or t[g,...], got '" + tok + "'");
    }
    acc = compose(rs, acc, next);
  }
  return acc;
}

Rat parse_rat(const std::string& s) {
  size_t slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

// ---------- JSON in/out ----------

json weight_json(const Weight& w) {
  json a = json::array();
  for (const Int& x : w.c) a.push_back(x.as_ll());
  return a;
}

Weight weight_from_json(const json& a, const RootSystem& rs) {
  if (!a.is_array()) throw usage_error("weight in JSON input must be an array");
  std::vector<long long> coords;
  for (const json& x : a) coords.push_back(x.get<long long>());
  if ((int)coords.size() != rs.rank)
    fail(errc::dimension_mismatch, "weight in JSON input needs " + std::to_string(rs.rank) +
                                       " coordinates");
  return weight_from_ll(std::move(coords));
}

json gvector_json(const GVector& v) {
  json terms = json::array();
  for (const auto& [label, coeff] : v.terms)
    terms.push_back(json{{"label", weight_json(label)}, {"coeff", coeff.str()}});
  return json{{"basis", basis_name(v.basis)}, {"block", weight_json(v.block)}, {"terms", terms}};
}

GVector gvector_from_json(const json& j, const RootSystem& rs) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("block") || !j.contains("terms"))
    throw usage_error("character JSON needs basis, block and terms");
  GVector v;
  v.basis = parse_basis(j.at("basis").get<std::string>());
  v.block = weight_from_json(j.at("block"), rs);
  for (const json& t : j.at("terms")) {
    Rat c = t.at("coeff").is_string() ? parse_rat(t.at("coeff").get<std::string>())
                                      : Rat(Int(t.at("coeff").get<long long>()));
    v.add(weight_from_json(t.at("label"), rs), c);
  }
  return v;
}

json skeleton_json(const SectionSkeleton& sk) {
  json sizes = json::array();
  for (const auto& [label, n] : sk.sizes)
    sizes.push_back(json{{"label", weight_json(label)}, {"count", n}});
  return json{{"kind", section_kind_name(sk.kind)}, {"sizes", sizes}};
}

SectionSkeleton skeleton_from_json(const json& j, const RootSystem& rs) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("sizes"))
    throw usage_error("skeleton JSON needs kind and sizes");
  SectionSkeleton sk;
  sk.kind = parse_section_kind(j.at("kind").get<std::string>());
  for (const json& t : j.at("sizes"))
    sk.add(weight_from_json(t.at("label"), rs), t.at("count").get<long long>());
  return sk;
}

TiltingTable table_from_json(const json& j, const RootSystem& rs) {
  if (!j.is_object() || !j.contains("entries"))
    throw usage_error("table JSON needs an entries array");
  TiltingTable table;
  for (const json& e : j.at("entries"))
    table.entries[weight_from_json(e.at("label"), rs)] = gvector_from_json(e.at("char"), rs);
  return table;
}

json read_json_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw usage_error(std::string("bad JSON input: ") + e.what());
  }
}

// ---------- per-invocation context ----------

struct Ctx {
  std::shared_ptr<const RootSystem> rs;
  long long p = 0;
  std::vector<int> I; // 0-based
  bool json_out = false;

  LeviDatum levi() const { return make_levi(rs, I, p); }

  void print_gvector(const GVector& v) const {
    if (json_out) {
      std::cout << gvector_json(v).dump() << "\n";
      return;
    }
    std::cout << "basis " << basis_name(v.basis) << "\n";
    std::cout << "block " << v.block.str() << "\n";
    for (const auto& [label, coeff] : v.terms)
      std::cout << label.str() << ": " << coeff.str() << "\n";
  }

  void print_skeleton(const SectionSkeleton& sk) const {
    if (json_out) {
      std::cout << skeleton_json(sk).dump() << "\n";
      return;
    }
    std::cout << "kind " << section_kind_name(sk.kind) << "\n";
    for (const auto& [label, n] : sk.sizes) std::cout << label.str() << ": " << n << "\n";
  }
};

std::vector<int> parse_levi_subset(const std::string& s, const RootSystem& rs) {
  std::vector<int> I;
  if (s.empty() || s == "-") return I;
  for (const std::string& tok : split(s, ',')) {
    long long i = parse_ll(tok, "simple-root index");
    if (i < 1 || i > rs.rank)
      throw usage_error("simple-root index " + std::to_string(i) + " out of range 1.." +
                        std::to_string(rs.rank));
    I.push_back((int)(i - 1));
  }
  return I;
}

// ---------- subcommands ----------

void cmd_describe(const Ctx& ctx) {
  const RootSystem& rs = *ctx.rs;
  LeviDatum L = ctx.levi();
  std::vector<Reflection> walls = simple_reflections_Sp(rs, ctx.p);
  if (ctx.json_out) {
    json roots = json::array();
    for (size_t i = 0; i < rs.positive_roots.size(); i++) {
      const Root& r = rs.positive_roots[i];
      roots.push_back(json{{"index", i + 1},
                           {"root", r.b},
                           {"coroot", r.d},
                           {"height", r.height},
                           {"co_height", r.co_height}});
    }
    json wall_list = json::array();
    for (const Reflection& w : walls) wall_list.push_back(reflection_str(w, ctx.p));
    json levi_I = json::array();
    for (int i : ctx.I) levi_I.push_back(i + 1);
    std::cout << json{{"type", rs.type_string()},
                      {"rank", rs.rank},
                      {"p", ctx.p},
                      {"coxeter_number", rs.coxeter_number},
                      {"positive_roots", roots},
                      {"walls", wall_list},
                      {"levi", json{{"I", levi_I}, {"order", L.order_WI}}}}
                     .dump()
              << "\n";
    return;
  }
  std::cout << "type " << rs.type_string() << "\n";
  std::cout << "rank " << rs.rank << "\n";
  std::cout << "p " << ctx.p << "\n";
  std::cout << "coxeter number " << rs.coxeter_number << "\n";
  std::cout << "positive roots " << rs.positive_roots.size() << "\n";
  for (size_t i = 0; i < rs.positive_roots.size(); i++) {
    const Root& r = rs.positive_roots[i];
    std::cout << "  " << (i + 1) << ": root (";
    for (size_t k = 0; k < r.b.size(); k++) std::cout << (k ? "," : "") << r.b[k];
    std::cout << ") height " << r.height << " co-height " << r.co_height << "\n";
  }
  std::cout << "walls of the fundamental alcove:";
  for (const Reflection& w : walls) std::cout << " " << reflection_str(w, ctx.p);
  std::cout << "\n";
  std::cout << "levi I={";
  for (size_t k = 0; k < ctx.I.size(); k++) std::cout << (k ? "," : "") << (ctx.I[k] + 1);
  std::cout << "} order " << L.order_WI << "\n";
}

void cmd_verify(const Ctx& ctx, long long box, long long max_d, unsigned long long seed,
                long long sample_cap, const std::vector<std::string>& levi_specs, int& exit_code) {
  VerifyConfig cfg;
  cfg.type_spec = ctx.rs->type_string();
  cfg.p = ctx.p;
  cfg.box_radius = box;
  cfg.max_d = max_d;
  cfg.seed = seed;
  cfg.sample_cap = sample_cap;
  for (const std::string& s : levi_specs)
    cfg.levi_subsets.push_back(parse_levi_subset(s, *ctx.rs));
  VerifyReport report = verify_suite(cfg);
  for (const CheckResult& c : report.checks) {
    json failures = json::array();
    for (const std::string& f : c.failures) failures.push_back(f);
    std::cout << json{{"check", c.name}, {"instances", c.instances}, {"failures", failures}}.dump()
              << "\n";
  }
  exit_code = report.ok() ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact alcove/translation calculus for reduced enveloping algebras"};
  app.require_subcommand(1);
  app.set_config("--config", "", "config file, key=value lines (flags win)");
  app.allow_config_extras(CLI::config_extras_mode::ignore);

  std::string type_spec, I_str, format = "text";
  long long p = 0;
  app.add_option("--type", type_spec, "root system, e.g. A2 or A2xA1")->required();
  app.add_option("--p", p, "the prime (any integer >= the Coxeter number)")->required();
  app.add_option("--I", I_str, "Levi subset, 1-based simple-root indices like 1,3");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string arg_weight, arg_mu, arg_lambda, arg_s, arg_elt, arg_input = "-", arg_table;
  std::string arg_direction, arg_op, arg_kind = "deltabar";

  CLI::App* c_describe = app.add_subcommand("describe", "print the root system, walls and Levi");
  CLI::App* c_dot = app.add_subcommand("dot", "apply an affine element to a weight (dot action)");
  c_dot->add_option("--element", arg_elt, "s[b,v], t[g,...], or '*' products")->required();
  c_dot->add_option("--weight", arg_weight, "weight")->required();
  CLI::App* c_d = app.add_subcommand("d", "alcove depth d(weight)");
  c_d->add_option("--weight", arg_weight, "weight")->required();
  CLI::App* c_up = app.add_subcommand("uparrow", "is mu below lambda in the arrow order?");
  c_up->add_option("--mu", arg_mu, "lower weight")->required();
  c_up->add_option("--lambda", arg_lambda, "upper weight")->required();
  CLI::App* c_rep = app.add_subcommand("orbit-rep", "canonical W_{I,p}-orbit representative");
  c_rep->add_option("--weight", arg_weight, "weight")->required();
  CLI::App* c_ni = app.add_subcommand("ni", "orbit count N_I(weight) on X/pX");
  c_ni->add_option("--weight", arg_weight, "weight")->required();
  CLI::App* c_mu = app.add_subcommand("mu", "wall weight with stabilizer {1,s}");
  c_mu->add_option("--s", arg_s, "wall reflection s[b,v]")->required();
  CLI::App* c_tr = app.add_subcommand("translate", "translate a character onto or off a wall");
  c_tr->add_option("--direction", arg_direction, "onto or off")
      ->required()
      ->check(CLI::IsMember({"onto", "off"}));
  c_tr->add_option("--s", arg_s, "wall reflection s[b,v]")->required();
  c_tr->add_option("--input", arg_input, "character JSON file, - for stdin");
  CLI::App* c_th = app.add_subcommand("theta", "wall-crossing Theta_s on a character");
  c_th->add_option("--s", arg_s, "wall reflection s[b,v]")->required();
  c_th->add_option("--input", arg_input, "character JSON file, - for stdin");
  CLI::App* c_dx = app.add_subcommand("domexp", "certified descent word for a dominant weight");
  c_dx->add_option("--weight", arg_weight, "dominant regular orbit representative")->required();
  CLI::App* c_tp = app.add_subcommand("tilt-product", "character of the descent-word Theta product");
  c_tp->add_option("--weight", arg_weight, "dominant regular orbit representative")->required();
  CLI::App* c_tc = app.add_subcommand("tilt-check", "triangularity report for the Theta product");
  c_tc->add_option("--weight", arg_weight, "dominant regular orbit representative")->required();
  CLI::App* c_peel = app.add_subcommand("peel", "tilting multiplicities by greedy peeling");
  c_peel->add_option("--input", arg_input, "character JSON file, - for stdin");
  c_peel->add_option("--table", arg_table, "tilting table JSON file")->required();
  CLI::App* c_sec = app.add_subcommand("sections", "build or transform a section skeleton");
  c_sec->add_option("--op", arg_op, "build | onto | off | to-delta | to-deltabar")
      ->required()
      ->check(CLI::IsMember({"build", "onto", "off", "to-delta", "to-deltabar"}));
  c_sec->add_option("--kind", arg_kind, "deltabar or delta (for build)")
      ->check(CLI::IsMember({"deltabar", "delta"}));
  c_sec->add_option("--s", arg_s, "wall reflection s[b,v] (for onto/off)");
  c_sec->add_option("--input", arg_input, "JSON file, - for stdin");
  CLI::App* c_ver = app.add_subcommand("verify", "re-derive every closed form on this system");
  long long v_box = 0, v_max_d = 3, v_sample_cap = 4000;
  unsigned long long v_seed = 2024;
  std::vector<std::string> v_levi;
  c_ver->add_option("--box", v_box, "box radius (default 3p)");
  c_ver->add_option("--max-d", v_max_d, "depth ceiling for word checks");
  c_ver->add_option("--seed", v_seed, "seed for sampled quadratic checks");
  c_ver->add_option("--sample-cap", v_sample_cap, "max sampled pairs per check");
  c_ver->add_option("--levi", v_levi, "Levi subset like 1,3 (- for empty); repeatable");

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsageExit;
  }

  int exit_code = 0;
  try {
    Ctx ctx;
    ctx.rs = std::make_shared<const RootSystem>(parse_root_system(type_spec));
    ctx.p = p;
    ctx.json_out = format == "json";
    ctx.I = parse_levi_subset(I_str, *ctx.rs);

    if (app.got_subcommand(c_describe)) {
      cmd_describe(ctx);
    } else if (app.got_subcommand(c_dot)) {
      AffineElt w = parse_element(arg_elt, *ctx.rs, ctx.p);
      Weight out = dot_action(*ctx.rs, w, parse_weight(arg_weight, *ctx.rs));
      if (ctx.json_out)
        std::cout << json{{"weight", weight_json(out)}}.dump() << "\n";
      else
        std::cout << out.str() << "\n";
    } else if (app.got_subcommand(c_d)) {
      Int d = d_value(*ctx.rs, parse_weight(arg_weight, *ctx.rs), ctx.p);
      if (ctx.json_out)
        std::cout << json{{"d", d.as_ll()}}.dump() << "\n";
      else
        std::cout << d.str() << "\n";
    } else if (app.got_subcommand(c_up)) {
      bool yes = uparrow_leq(*ctx.rs, parse_weight(arg_mu, *ctx.rs),
                             parse_weight(arg_lambda, *ctx.rs), ctx.p);
      if (ctx.json_out)
        std::cout << json{{"uparrow", yes}}.dump() << "\n";
      else
        std::cout << (yes ? "true" : "false") << "\n";
    } else if (app.got_subcommand(c_rep)) {
      LeviDatum L = ctx.levi();
      ReduceResult r = orbit_rep_word(parse_weight(arg_weight, *ctx.rs), L);
      if (ctx.json_out) {
        json word = json::array();
        for (int idx : r.word) word.push_back(reflection_str(L.I_walls[idx], ctx.p));
        std::cout << json{{"rep", weight_json(r.rep)}, {"word", word}}.dump() << "\n";
      } else {
        std::cout << r.rep.str() << "\n";
      }
    } else if (app.got_subcommand(c_ni)) {
      long long n = N_I(parse_weight(arg_weight, *ctx.rs), ctx.levi());
      if (ctx.json_out)
        std::cout << json{{"ni", n}}.dump() << "\n";
      else
        std::cout << n << "\n";
    } else if (app.got_subcommand(c_mu)) {
      WallSetup setup = choose_mu(parse_reflection(arg_s, *ctx.rs, ctx.p), *ctx.rs, ctx.p);
      if (ctx.json_out)
        std::cout << json{{"s", reflection_str(setup.s, ctx.p)},
                          {"mu", weight_json(setup.mu)},
                          {"lambda_star", weight_json(setup.lambda_star)}}
                         .dump()
                  << "\n";
      else
        std::cout << "mu " << setup.mu.str() << "\nlambda_star " << setup.lambda_star.str()
                  << "\n";
    } else if (app.got_subcommand(c_tr)) {
      LeviDatum L = ctx.levi();
      WallSetup setup = choose_mu(parse_reflection(arg_s, *ctx.rs, ctx.p), *ctx.rs, ctx.p);
      TransSpec spec{arg_direction == "onto" ? Direction::onto_wall : Direction::off_wall, setup,
                     L};
      GVector v = gvector_from_json(read_json_input(arg_input), *ctx.rs);
      ctx.print_gvector(translate(v, spec));
    } else if (app.got_subcommand(c_th)) {
      LeviDatum L = ctx.levi();
      WallSetup setup = choose_mu(parse_reflection(arg_s, *ctx.rs, ctx.p), *ctx.rs, ctx.p);
      GVector v = gvector_from_json(read_json_input(arg_input), *ctx.rs);
      ctx.print_gvector(theta_s(v, setup, L));
    } else if (app.got_subcommand(c_dx)) {
      LeviDatum L = ctx.levi();
      ReducedWord word = domexp_word(parse_weight(arg_weight, *ctx.rs), L);
      if (ctx.json_out) {
        json prefixes = json::array();
        for (const Weight& w : word.prefix_targets) prefixes.push_back(weight_json(w));
        json ascent = json::array(), regular = json::array();
        for (bool b : word.ascent_ok) ascent.push_back(b);
        for (bool b : word.regularity_ok) regular.push_back(b);
        std::cout << json{{"base", weight_json(word.base)},
                          {"word", word_str(word.letters, ctx.p)},
                          {"prefix_targets", prefixes},
                          {"ascent_ok", ascent},
                          {"regularity_ok", regular}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "base " << word.base.str() << "\n";
        std::cout << "word " << (word.letters.empty() ? "-" : word_str(word.letters, ctx.p))
                  << "\n";
        for (const Weight& w : word.prefix_targets) std::cout << "prefix " << w.str() << "\n";
      }
    } else if (app.got_subcommand(c_tp)) {
      LeviDatum L = ctx.levi();
      ctx.print_gvector(theta_product_char(domexp_word(parse_weight(arg_weight, *ctx.rs), L), L));
    } else if (app.got_subcommand(c_tc)) {
      LeviDatum L = ctx.levi();
      TiltSummandReport rep = tilt_summand_check(domexp_word(parse_weight(arg_weight, *ctx.rs), L), L);
      if (ctx.json_out) {
        std::cout << json{{"top", weight_json(rep.top)},
                          {"top_d", rep.top_d},
                          {"residual", gvector_json(rep.residual)}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "top " << rep.top.str() << "\n";
        std::cout << "top_d " << rep.top_d << "\n";
        std::cout << "residual:\n";
        ctx.print_gvector(rep.residual);
      }
    } else if (app.got_subcommand(c_peel)) {
      LeviDatum L = ctx.levi();
      GVector v = gvector_from_json(read_json_input(arg_input), *ctx.rs);
      TiltingTable table = table_from_json(read_json_input(arg_table), *ctx.rs);
      std::map<Weight, long long> m = greedy_peel(v, table, L);
      if (ctx.json_out) {
        json mults = json::array();
        for (const auto& [label, n] : m)
          mults.push_back(json{{"label", weight_json(label)}, {"count", n}});
        std::cout << json{{"multiplicities", mults}}.dump() << "\n";
      } else {
        for (const auto& [label, n] : m) std::cout << label.str() << ": " << n << "\n";
      }
    } else if (app.got_subcommand(c_sec)) {
      LeviDatum L = ctx.levi();
      json in = read_json_input(arg_input);
      if (arg_op == "build") {
        ctx.print_skeleton(
            skeleton_from_char(gvector_from_json(in, *ctx.rs), parse_section_kind(arg_kind), L));
      } else if (arg_op == "onto" || arg_op == "off") {
        if (arg_s.empty()) throw usage_error("--s is required for onto/off");
        WallSetup setup = choose_mu(parse_reflection(arg_s, *ctx.rs, ctx.p), *ctx.rs, ctx.p);
        SectionSkeleton sk = skeleton_from_json(in, *ctx.rs);
        ctx.print_skeleton(arg_op == "onto" ? onto_wall_transform(sk, setup, L)
                                            : off_wall_transform(sk, setup, L));
      } else {
        SectionSkeleton sk = skeleton_from_json(in, *ctx.rs);
        ctx.print_skeleton(arg_op == "to-delta" ? deltabar_to_delta(sk, L)
                                                : delta_to_deltabar(sk, L));
      }
    } else if (app.got_subcommand(c_ver)) {
      cmd_verify(ctx, v_box, v_max_d, v_seed, v_sample_cap, v_levi, exit_code);
    }
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageExit;
  } catch (const calc_error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
