#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "triaut/analysis.hpp"
#include "triaut/document.hpp"
#include "triaut/error.hpp"
#include "triaut/presentation.hpp"
#include "triaut/structure.hpp"
#include "triaut/text.hpp"

namespace triaut::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::string algebra = "poly";
  std::size_t n = 0;
  std::size_t max_terms = 0;
  std::size_t max_degree = 0;
  std::string output = "text";
  bool algebra_given = false;
  bool n_given = false;

  AlgebraMode mode() const { return *parse_algebra_mode(algebra); }
  bool json() const { return output == "json"; }
  Budget budget() const {
    Budget b;
    if (max_terms > 0) b.max_terms = max_terms;
    if (max_degree > 0) b.max_degree = max_degree;
    return b;
  }
};

/// Thrown for command-line misuse that the option parser cannot see.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string endo_text(const Endomorphism& phi) {
  std::string out = "(";
  for (std::size_t i = 1; i <= phi.n(); ++i) {
    if (i > 1) out += ", ";
    out += to_string(phi.image(i));
  }
  return out + ")";
}

Json endo_json(const Endomorphism& phi) { return Json::parse(to_document(phi)); }

std::string elementary_text(const Elementary& e) {
  return "sigma(" + std::to_string(e.index) + ", " + e.alpha.to_string() + ", " + to_string(e.f) +
         ")";
}

Json elementary_json(const Elementary& e) {
  return Json{{"index", e.index}, {"alpha", e.alpha.to_string()}, {"f", to_string(e.f)}};
}

class Session {
 public:
  Session(Config& config, std::ostream& out) : config_(config), out_(out) {}

  /// `{...}` is a JSON document, `@path` a file holding one, anything else a
  /// ';'-separated list of images read with --algebra (and --n, when given).
  Endomorphism automorphism(const std::string& text) {
    const auto t = trim(text);
    if (!t.empty() && (t.front() == '{' || t.front() == '@')) {
      auto phi = parse_automorphism_document(t.front() == '@' ? read_file(t.substr(1)) : t);
      if (config_.n_given && phi.n() != config_.n)
        throw Error(ErrorCode::ArityMismatch, "document has n = " + std::to_string(phi.n()) +
                                                  " but --n is " + std::to_string(config_.n));
      if (config_.algebra_given && phi.mode() != config_.mode())
        throw Error(ErrorCode::ModeMismatch, "document algebra differs from --algebra");
      adopt(phi);
      return phi;
    }
    std::vector<std::string> parts;
    std::vector<std::size_t> offsets;
    std::size_t start = 0;
    while (true) {
      const auto semi = t.find(';', start);
      parts.push_back(t.substr(start, semi == std::string::npos ? std::string::npos : semi - start));
      offsets.push_back(start);
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
    const std::size_t n = config_.n_given ? config_.n : parts.size();
    if (parts.size() != n)
      throw Error(ErrorCode::ArityMismatch, std::to_string(parts.size()) + " images given for n = " +
                                                std::to_string(n));
    std::vector<Polynomial> images;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      try {
        images.push_back(parse_polynomial(parts[k], config_.mode(), n));
      } catch (const ParseError& e) {
        throw ParseError(offsets[k] + e.offset(), std::string(e.what()));
      }
    }
    Endomorphism phi(std::move(images));
    adopt(phi);
    return phi;
  }

  Elementary elementary_operand(const std::string& text) {
    const auto phi = automorphism(text);
    auto e = as_elementary(phi);
    if (!e) throw Error(ErrorCode::NotElementary, endo_text(phi) + " is not elementary");
    return *e;
  }

  Polynomial polynomial(const std::string& text) {
    if (!n_known_) throw UsageError("--n is required to read polynomial '" + text + "'");
    return parse_polynomial(text, mode_, n_);
  }

  Scalar scalar(const std::string& text, const char* what) {
    const auto s = Scalar::parse(trim(text));
    if (!s) throw ParseError(1, std::string("expected a rational for ") + what);
    return *s;
  }

  void emit(const std::string& text, const Json& json) {
    if (config_.json())
      out_ << json.dump() << '\n';
    else
      out_ << text << '\n';
  }

  void emit(const Endomorphism& phi) { emit(endo_text(phi), endo_json(phi)); }

  const Config& config() const { return config_; }

  void use_defaults() {
    if (!n_known_ && config_.n_given) {
      n_ = config_.n;
      mode_ = config_.mode();
      n_known_ = true;
    }
  }

 private:
  void adopt(const Endomorphism& phi) {
    if (!n_known_) {
      n_ = phi.n();
      mode_ = phi.mode();
      n_known_ = true;
    }
  }

  Config& config_;
  std::ostream& out_;
  bool n_known_ = false;
  std::size_t n_ = 0;
  AlgebraMode mode_ = AlgebraMode::Commutative;
};

struct Options {
  std::vector<std::string> autos;
  long k = 1;
  bool check = false;
  std::size_t var = 1;
  std::size_t j = 0;
  std::string shift = "1";
  std::string h = "1";
  std::string g;
  std::string f;
  std::string word;
  std::string alpha = "1";
  std::string beta = "1";
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::string family;
  std::size_t p = 1, l = 1, m = 1;
  bool at_zero = false;
};

void require_operands(const Options& o, std::size_t count, const char* command) {
  if (o.autos.size() != count)
    throw UsageError(std::string(command) + " takes " + std::to_string(count) +
                     " --auto operand(s), got " + std::to_string(o.autos.size()));
}

// ---------------------------------------------------------------------------
// Subcommands

void cmd_compose(Session& s, const Options& o) {
  if (o.autos.size() < 2) throw UsageError("compose takes at least two --auto operands");
  auto out = s.automorphism(o.autos.front());
  for (std::size_t k = 1; k < o.autos.size(); ++k)
    out = compose(out, s.automorphism(o.autos[k]), s.config().budget());
  s.emit(out);
}

void cmd_invert(Session& s, const Options& o) {
  require_operands(o, 1, "invert");
  s.emit(invert_triangular(s.automorphism(o.autos[0]), s.config().budget()));
}

void cmd_power(Session& s, const Options& o) {
  require_operands(o, 1, "power");
  s.emit(power(s.automorphism(o.autos[0]), o.k, s.config().budget()));
}

void cmd_commutator(Session& s, const Options& o) {
  require_operands(o, 2, "commutator");
  const auto a = s.automorphism(o.autos[0]);
  const auto b = s.automorphism(o.autos[1]);
  s.emit(commutator(a, b, s.config().budget()));
}

void cmd_factorize(Session& s, const Options& o) {
  require_operands(o, 1, "factorize");
  const auto phi = s.automorphism(o.autos[0]);
  const auto fac = factorize_unitriangular(phi, s.config().budget());
  if (o.check && fac.recompose(s.config().budget()) != phi)
    throw Error(ErrorCode::VerificationFailed, "factors do not recompose to the input");
  std::string text;
  Json factors = Json::array();
  for (const auto& e : fac.factors) {
    if (!text.empty()) text += '\n';
    text += elementary_text(e);
    factors.push_back(elementary_json(e));
  }
  if (text.empty()) text = "identity";
  s.emit(text, Json{{"factors", factors}});
}

void cmd_comm_express(Session& s, const Options& o) {
  require_operands(o, 1, "comm-express");
  const auto omega = s.automorphism(o.autos[0]);
  const auto ex = express_as_single_commutator(omega, s.config().budget());
  if (o.check && commutator(ex.left, ex.right, s.config().budget()) != omega)
    throw Error(ErrorCode::VerificationFailed, "commutator does not reproduce the input");
  std::string text = "left = " + endo_text(ex.left) + "\nright = " + endo_text(ex.right);
  Json parts = Json::array();
  for (const auto& e : ex.parts) {
    text += "\n" + elementary_text(e);
    parts.push_back(elementary_json(e));
  }
  s.emit(text, Json{{"left", endo_json(ex.left)}, {"right", endo_json(ex.right)}, {"parts", parts}});
}

void cmd_layer_comm(Session& s, const Options& o) {
  require_operands(o, 1, "layer-comm");
  const auto target = s.elementary_operand(o.autos[0]);
  const auto res =
      express_in_layer_commutator(target, o.j, s.scalar(o.h, "--shift"), s.config().budget());
  s.emit("phi = " + elementary_text(res.phi) + "\npsi = " + elementary_text(res.psi),
         Json{{"phi", elementary_json(res.phi)}, {"psi", elementary_json(res.psi)}});
}

void cmd_solve_diff(Session& s, const Options& o) {
  s.use_defaults();
  const auto g = s.polynomial(o.g);
  const auto f = solve_difference(g, o.var, s.scalar(o.shift, "--shift"), s.config().budget());
  s.emit(to_string(f), Json{{"f", to_string(f)}});
}

void cmd_translate(Session& s, const Options& o) {
  if (!o.word.empty()) {
    s.use_defaults();
    if (!s.config().n_given) throw UsageError("--n is required with --word");
    const auto w = parse_b_word(o.word, s.config().mode(), s.config().n);
    s.emit(evaluate_b_word(w, s.config().mode(), s.config().n));
    return;
  }
  require_operands(o, 1, "translate");
  const auto e = s.elementary_operand(o.autos[0]);
  const auto w = to_b_generators(e);
  if (o.check && evaluate_b_word(w, e.f.mode(), e.f.n()) != e.to_endomorphism())
    throw Error(ErrorCode::VerificationFailed, "word does not evaluate back to the input");
  s.emit(to_string(w), Json{{"word", to_string(w)}});
}

void cmd_check_relations(Session& s, const Options& o) {
  const auto& cfg = s.config();
  const std::size_t n = cfg.n_given ? cfg.n : 3;
  std::vector<RelationFamily> families(std::begin(kAllRelationFamilies),
                                       std::end(kAllRelationFamilies));
  if (!o.family.empty()) {
    const auto fam = parse_relation_family(o.family);
    if (!fam) throw UsageError("unknown relation family '" + o.family + "'");
    families = {*fam};
  }
  std::mt19937_64 rng(o.seed);
  std::string text;
  Json rows = Json::array();
  bool all = true;
  for (const auto fam : families) {
    std::size_t held = 0;
    for (std::size_t c = 0; c < o.count; ++c) {
      const auto inst = random_relation_instance(fam, cfg.mode(), n, rng);
      if (check_relation_family(inst).holds) ++held;
    }
    all = all && held == o.count;
    if (!text.empty()) text += '\n';
    text += std::string(to_string(fam)) + " " + std::to_string(held) + "/" +
            std::to_string(o.count) + (held == o.count ? " ok" : " FAILED");
    rows.push_back(Json{{"family", to_string(fam)}, {"held", held}, {"count", o.count}});
  }
  s.emit(text, Json{{"seed", o.seed}, {"results", rows}});
  if (!all) throw Error(ErrorCode::VerificationFailed, "some relation instances failed");
}

void cmd_free_check(Session& s, const Options& o) {
  s.use_defaults();
  const auto f = s.polynomial(o.f);
  const auto g = s.polynomial(o.g);
  const auto word = GroupWord::parse(o.word);
  const auto cert = free_pair_check(f, g, word, s.scalar(o.alpha, "--alpha"),
                                    s.scalar(o.beta, "--beta"), s.config().budget());
  std::ostringstream text;
  text << "p = " << cert.p << ", q = " << cert.q << ", m = " << cert.pairs << "\n"
       << "word = " << to_string(cert.normalized) << "\n"
       << "observed = " << cert.observed_degree << ", expected = " << cert.expected_degree << "\n"
       << (cert.valid() ? "valid" : "invalid");
  s.emit(text.str(), Json{{"p", cert.p},
                          {"q", cert.q},
                          {"m", cert.pairs},
                          {"word", to_string(cert.input)},
                          {"normalized", to_string(cert.normalized)},
                          {"observed_degree", cert.observed_degree},
                          {"expected_degree", cert.expected_degree},
                          {"valid", cert.valid()}});
  if (!cert.valid()) throw Error(ErrorCode::VerificationFailed, "degree does not match (pq)^m");
}

void cmd_classify_pair(Session& s, const Options& o) {
  require_operands(o, 2, "classify-pair");
  const auto a = s.elementary_operand(o.autos[0]);
  const auto b = s.elementary_operand(o.autos[1]);
  const auto c = classify_pair(a, b);
  s.emit(std::string(to_string(c.cls)) + " (" + std::string(to_string(c.criterion)) + ")",
         Json{{"class", to_string(c.cls)}, {"criterion", to_string(c.criterion)}});
}

void cmd_nonlin_witness(Session& s, const Options& o) {
  if (s.config().n_given && s.config().n != 3)
    throw Error(ErrorCode::ArityMismatch, "the witness lives in n = 3");
  if (s.config().algebra_given && s.config().mode() != AlgebraMode::Commutative)
    throw Error(ErrorCode::ModeMismatch, "the witness lives in the polynomial algebra");
  const auto w = nonlinearity_witness(o.p, o.l, o.m, s.config().budget());
  if (o.at_zero) {
    const auto v = specialize(w, 2, Scalar(0)).constant_term();
    s.emit(v.to_string(), Json{{"value", v.to_string()}});
  } else {
    s.emit(to_string(w), Json{{"witness", to_string(w)}});
  }
}

void cmd_order(Session& s, const Options& o) {
  require_operands(o, 1, "order");
  const auto ord = element_order(s.elementary_operand(o.autos[0]));
  if (ord)
    s.emit("finite " + std::to_string(*ord), Json{{"order", *ord}});
  else
    s.emit("infinite", Json{{"order", "infinite"}});
}

void cmd_diag(Session& s, const Options& o) {
  require_operands(o, 1, "diag");
  const auto e = s.elementary_operand(o.autos[0]);
  const auto d = diagonalize_elementary(e, s.config().budget());
  if (!d) {
    s.emit("not diagonalizable", Json{{"diagonalizable", false}});
    return;
  }
  if (o.check) {
    const auto again = conjugate(e.to_endomorphism(), d->conjugator.to_endomorphism(),
                                 d->conjugator.inverse().to_endomorphism(), s.config().budget());
    if (again != d->diagonal || !classify(again).contains(Label::Diagonal))
      throw Error(ErrorCode::VerificationFailed, "conjugation does not give the diagonal map");
  }
  s.emit("c = " + elementary_text(d->conjugator) + "\nd = " + endo_text(d->diagonal),
         Json{{"diagonalizable", true},
              {"c", elementary_json(d->conjugator)},
              {"d", endo_json(d->diagonal)}});
}

void cmd_ia_level(Session& s, const Options& o) {
  require_operands(o, 1, "ia-level");
  const auto lvl = ia_level(s.automorphism(o.autos[0]));
  switch (lvl.kind) {
    case IaLevel::Kind::Level:
      s.emit("level " + std::to_string(lvl.level), Json{{"level", lvl.level}});
      break;
    case IaLevel::Kind::NotIa:
      s.emit("not-ia", Json{{"level", nullptr}});
      break;
    case IaLevel::Kind::Identity:
      s.emit("identity", Json{{"level", "unbounded"}});
      break;
  }
}

void cmd_fix_split(Session& s, const Options& o) {
  require_operands(o, 1, "fix-split");
  const auto phi = s.automorphism(o.autos[0]);
  const auto f = s.polynomial(o.f);
  const auto [fix, ifix] = fix_ifix_split(f, phi, s.config().budget());
  s.emit("fix = " + to_string(fix) + "\nifix = " + to_string(ifix),
         Json{{"fix", to_string(fix)}, {"ifix", to_string(ifix)}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config config;
  Options opts;
  CLI::App app{"Triangular automorphisms of polynomial and free associative algebras", "triaut"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--algebra", config.algebra, "poly or free")
      ->check(CLI::IsMember({"poly", "free"}));
  app.add_option("--n", config.n, "Number of variables")->check(CLI::Range(1, 1 << 16));
  app.add_option("--budget", config.max_terms, "Maximum number of terms in any result")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-degree", config.max_degree, "Maximum total degree of any result")
      ->check(CLI::PositiveNumber);
  app.add_option("--output", config.output, "text or json")->check(CLI::IsMember({"text", "json"}));

  using Handler = std::function<void(Session&, const Options&)>;
  std::vector<std::pair<CLI::App*, Handler>> handlers;
  auto sub = [&](const char* name, const char* help, Handler h) {
    auto* c = app.add_subcommand(name, help);
    handlers.emplace_back(c, std::move(h));
    return c;
  };
  auto autos = [&](CLI::App* c, const char* help) {
    c->add_option("--auto", opts.autos, help)->required()->take_all()->multi_option_policy(
        CLI::MultiOptionPolicy::TakeAll);
  };

  auto* c = sub("compose", "Left-to-right product", cmd_compose);
  autos(c, "Automorphisms, in order");
  c = sub("invert", "Inverse of a triangular automorphism", cmd_invert);
  autos(c, "Automorphism");
  c = sub("power", "k-th power", cmd_power);
  autos(c, "Automorphism");
  c->add_option("--k", opts.k, "Exponent (negative inverts)")->required();
  c = sub("commutator", "[a, b] = a^-1 b^-1 a b", cmd_commutator);
  autos(c, "The two automorphisms");
  c = sub("factorize", "Layer factorization of a unitriangular automorphism", cmd_factorize);
  autos(c, "Automorphism");
  c->add_flag("--check", opts.check, "Recompose and compare");
  c = sub("comm-express", "Single commutator expression", cmd_comm_express);
  autos(c, "Automorphism fixing x_n");
  c->add_flag("--check", opts.check, "Re-evaluate the commutator");
  c = sub("layer-comm", "Layer element as [sigma(i,1,f), sigma(j,1,h)]", cmd_layer_comm);
  autos(c, "Target sigma(i,1,g)");
  c->add_option("--j", opts.j, "Index j > i")->required();
  c->add_option("--shift", opts.h, "Nonzero constant shift h");
  c = sub("solve-diff", "Solve f(x_var + shift) - f = g", cmd_solve_diff);
  c->add_option("--var", opts.var, "Variable index")->required();
  c->add_option("--shift", opts.shift, "Nonzero rational shift");
  c->add_option("--g", opts.g, "Right-hand side")->required();
  c = sub("translate", "Elementary automorphism to phi/tau word, or --word back", cmd_translate);
  c->add_option("--auto", opts.autos, "Elementary automorphism");
  c->add_option("--word", opts.word, "Word of t(k,s) and phi(alpha; f) tokens");
  c->add_flag("--check", opts.check, "Evaluate the word and compare");
  c = sub("check-relations", "Seeded random relation checks", cmd_check_relations);
  c->add_option("--seed", opts.seed, "Random seed");
  c->add_option("--count", opts.count, "Instances per family");
  c->add_option("--family", opts.family, "Only this family (R1, R2.1, ..., R7)");
  c = sub("free-check", "Degree-growth certificate for <sigma(1,a,f), sigma(2,b,g)>",
          cmd_free_check);
  c->add_option("--f", opts.f, "f(x2, ...)")->required();
  c->add_option("--g", opts.g, "g(x1, x3, ...)")->required();
  c->add_option("--word", opts.word, "Word such as 'a^2 b^-1 a b'")->required();
  c->add_option("--alpha", opts.alpha, "Coefficient of x1 in the first generator");
  c->add_option("--beta", opts.beta, "Coefficient of x2 in the second generator");
  c = sub("classify-pair", "Structure of a two-generator subgroup", cmd_classify_pair);
  autos(c, "The two elementary automorphisms");
  c = sub("nonlin-witness", "Iterated commutator witness in P_3", cmd_nonlin_witness);
  c->add_option("--p", opts.p, "Degree p")->required()->check(CLI::PositiveNumber);
  c->add_option("--l", opts.l, "Power l")->required()->check(CLI::PositiveNumber);
  c->add_option("--m", opts.m, "Commutator depth m")->required()->check(CLI::PositiveNumber);
  c->add_flag("--at-zero", opts.at_zero, "Print the value at x2 = 0");
  c = sub("order", "Order of an elementary automorphism", cmd_order);
  autos(c, "Elementary automorphism");
  c = sub("diag", "Conjugate an elementary automorphism to a diagonal one", cmd_diag);
  autos(c, "Elementary automorphism");
  c->add_flag("--check", opts.check, "Re-run the conjugation");
  c = sub("ia-level", "IA filtration level", cmd_ia_level);
  autos(c, "Automorphism");
  c = sub("fix-split", "Split f into fixed and negated parts under an involution", cmd_fix_split);
  autos(c, "Involution");
  c->add_option("--f", opts.f, "Polynomial to split")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }
  config.algebra_given = app.count("--algebra") > 0;
  config.n_given = app.count("--n") > 0;

  try {
    Session session(config, out);
    for (auto& [cmd, handler] : handlers) {
      if (cmd->parsed()) {
        handler(session, opts);
        break;
      }
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  return kOk;
}

}  // namespace triaut::cli
