#include "weyl/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>

#include "weyl/division.hpp"
#include "weyl/groebner.hpp"
#include "weyl/text.hpp"
#include "weyl/universal.hpp"

namespace weyl::cli {

namespace {

using nlohmann::json;

struct Settings {
  std::size_t n = 0;
  std::string order;
  std::string input;
  bool as_json = false;
  std::size_t max_support = kDefaultSupportCap;
  std::vector<std::string> exprs;
};

class UsageError : public WeylError {
 public:
  using WeylError::WeylError;
};

json monomial_json(const ExponentPair& m) {
  return json{{"xi", std::vector<Exponent>(m.xi_exps().begin(), m.xi_exps().end())},
              {"d", std::vector<Exponent>(m.d_exps().begin(), m.d_exps().end())}};
}

json element_json(const WeylElement& w) {
  json terms = json::array();
  for (auto it = w.terms().rbegin(); it != w.terms().rend(); ++it) {
    json t = monomial_json(it->first);
    t["coefficient"] = to_string(it->second);
    terms.push_back(std::move(t));
  }
  return json{{"text", format_element(w)}, {"terms", std::move(terms)}};
}

json weights_json(const std::vector<Rational>& weights) {
  json out = json::array();
  for (const auto& q : weights) out.push_back(to_string(q));
  return out;
}

json restriction_json(const Restriction& r) {
  json out = json::array();
  for (const auto& m : r.monomials) out.push_back(format_monomial(m));
  return out;
}

json certificate_json(const UniversalCertificate& cert) {
  json basis = json::array();
  for (const auto& b : cert.basis) basis.push_back(element_json(b));
  json supp = json::array();
  for (const auto& m : cert.support) supp.push_back(format_monomial(m));
  json cones = json::array();
  for (const auto& c : cert.cones) {
    cones.push_back(json{{"order", restriction_json(c.restriction)},
                         {"weight", weights_json(c.witness.weights)},
                         {"verdict", c.passed ? "passed" : "failed"}});
  }
  return json{{"format", "universal-certificate v1"},
              {"family", "nonnegative-weight+lex"},
              {"dimension", cert.basis.empty() ? 0 : cert.basis.front().dimension()},
              {"iterations", cert.iterations},
              {"basis", std::move(basis)},
              {"support", std::move(supp)},
              {"cones", std::move(cones)}};
}

struct Inputs {
  std::size_t n;
  OrderingSpec order;
  std::vector<WeylElement> elements;
};

Inputs load_inputs(const Settings& s) {
  std::optional<ProblemFile> file;
  if (!s.input.empty()) {
    std::ifstream in(s.input);
    if (!in) throw UsageError("cannot open input file '" + s.input + "'");
    file = parse_problem(in, s.n);
    if (s.n != 0 && file->dimension != s.n) {
      throw UsageError("--n " + std::to_string(s.n) + " conflicts with n=" +
                       std::to_string(file->dimension) + " in " + s.input);
    }
  }
  const std::size_t n = file ? file->dimension : s.n;
  if (n == 0) throw UsageError("the dimension must be given explicitly with --n (n >= 1)");

  OrderingSpec order = OrderingSpec::graded_lex();
  if (!s.order.empty()) {
    order = parse_ordering(s.order);
  } else if (file && file->ordering) {
    order = *file->ordering;
  }
  if (order.kind() == OrderingSpec::Kind::Matrix && order.rows().front().size() != 2 * n) {
    throw UsageError("matrix ordering rows must have length 2n = " + std::to_string(2 * n));
  }

  Inputs inputs{n, order, {}};
  if (file) {
    for (auto& [name, g] : file->generators) inputs.elements.push_back(std::move(g));
  }
  for (const auto& e : s.exprs) inputs.elements.push_back(parse_element(e, n));
  return inputs;
}

void require_count(const Inputs& in, std::size_t at_least, const char* what) {
  if (in.elements.size() < at_least) throw UsageError(std::string("expected ") + what);
}

int cmd_mul(const Settings& s, std::ostream& out) {
  const Inputs in = load_inputs(s);
  require_count(in, 1, "at least one expression");
  WeylElement product = in.elements.front();
  for (std::size_t k = 1; k < in.elements.size(); ++k) product = product * in.elements[k];
  if (s.as_json) {
    out << json{{"command", "mul"}, {"dimension", in.n}, {"result", element_json(product)}}.dump(2)
        << "\n";
  } else {
    out << format_element(product) << "\n";
  }
  return kSuccess;
}

int cmd_nf(const Settings& s, std::ostream& out) {
  const Inputs in = load_inputs(s);
  require_count(in, 1, "at least one expression");
  if (s.as_json) {
    json results = json::array();
    for (const auto& e : in.elements) results.push_back(element_json(e));
    out << json{{"command", "nf"}, {"dimension", in.n}, {"results", std::move(results)}}.dump(2)
        << "\n";
  } else {
    for (const auto& e : in.elements) out << format_element(e) << "\n";
  }
  return kSuccess;
}

int cmd_div(const Settings& s, std::ostream& out, std::ostream& err) {
  const Inputs in = load_inputs(s);
  require_count(in, 1, "a dividend followed by divisors");
  const WeylElement& w = in.elements.front();
  const std::span<const WeylElement> divisors(in.elements.data() + 1, in.elements.size() - 1);
  const DivisionResult res = divide(w, divisors, in.order);
  const DivisionContract contract = check_division_contract(w, divisors, in.order, res);

  if (s.as_json) {
    json quotients = json::array();
    for (const auto& q : res.quotients) quotients.push_back(element_json(q));
    out << json{{"command", "div"},
                {"dimension", in.n},
                {"ordering", format_ordering(in.order)},
                {"dividend", element_json(w)},
                {"quotients", std::move(quotients)},
                {"remainder", element_json(res.remainder)},
                {"contract",
                 {{"a_reconstruction", contract.reconstruction},
                  {"b_remainder_irreducible", contract.remainder_irreducible},
                  {"c_quotient_bound", contract.quotient_bound}}}}
               .dump(2)
        << "\n";
  } else {
    for (std::size_t k = 0; k < res.quotients.size(); ++k) {
      out << "q" << (k + 1) << " = " << format_element(res.quotients[k]) << "\n";
    }
    out << "r = " << format_element(res.remainder) << "\n";
    auto verdict = [](bool ok) { return ok ? "verified" : "FAILED"; };
    out << "contract (a) w = sum q_f f + r: " << verdict(contract.reconstruction) << "\n";
    out << "contract (b) no lt(f) divides a remainder monomial: "
        << verdict(contract.remainder_irreducible) << "\n";
    out << "contract (c) LT(q_f f) <= LT(w): " << verdict(contract.quotient_bound) << "\n";
  }
  if (!contract.holds()) {
    err << "internal error: division contract violated\n";
    return kInvariant;
  }
  return kSuccess;
}

int cmd_gb(const Settings& s, std::ostream& out) {
  const Inputs in = load_inputs(s);
  require_count(in, 1, "at least one generator");
  const GroebnerBasis gb = buchberger(in.elements, in.order, {true, false});
  if (s.as_json) {
    json basis = json::array();
    for (const auto& b : gb.elements) basis.push_back(element_json(b));
    out << json{{"command", "gb"},
                {"dimension", in.n},
                {"ordering", format_ordering(in.order)},
                {"basis", std::move(basis)}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& b : gb.elements) out << format_element(b) << "\n";
  }
  return kSuccess;
}

int cmd_ugb(const Settings& s, std::ostream& out) {
  const Inputs in = load_inputs(s);
  require_count(in, 1, "at least one generator");
  SaturationOptions opts;
  opts.initial_ordering = in.order;
  opts.support_cap = s.max_support;
  const UniversalCertificate cert = universal_groebner(in.elements, opts);
  if (s.as_json) {
    out << json{{"command", "ugb"}, {"certificate", certificate_json(cert)}}.dump(2) << "\n";
  } else {
    out << format_certificate(cert);
  }
  return kSuccess;
}

int cmd_cert(const Settings& s, std::ostream& out) {
  const Inputs in = load_inputs(s);
  require_count(in, 1, "at least one basis element");
  const CertificationResult res = certify_universal(in.elements, {s.max_support, {}});
  if (const auto* cert = std::get_if<UniversalCertificate>(&res)) {
    if (s.as_json) {
      out << json{{"command", "cert"}, {"verdict", "universal"}, {"certificate", certificate_json(*cert)}}
                 .dump(2)
          << "\n";
    } else {
      out << "verdict: universal\n" << format_certificate(*cert);
    }
    return kSuccess;
  }
  const auto& counter = std::get<CounterexampleOrdering>(res);
  if (s.as_json) {
    out << json{{"command", "cert"},
                {"verdict", "counterexample"},
                {"order", restriction_json(counter.restriction)},
                {"weight", weights_json(counter.witness.weights)},
                {"ordering", format_ordering(counter.witness.ordering())}}
               .dump(2)
        << "\n";
  } else {
    out << "verdict: counterexample\n";
    out << "ordering: " << format_ordering(counter.witness.ordering()) << "\n";
    out << "order:";
    for (std::size_t i = 0; i < counter.restriction.monomials.size(); ++i) {
      out << (i == 0 ? " " : " < ") << format_monomial(counter.restriction.monomials[i]);
    }
    out << "\n";
  }
  return kSuccess;
}

int cmd_cmp(const Settings& s, std::ostream& out) {
  const Inputs in = load_inputs(s);
  if (in.elements.size() != 2) throw UsageError("cmp expects exactly two monomials");
  std::vector<ExponentPair> monomials;
  for (const auto& e : in.elements) {
    if (e.size() != 1 || e.terms().begin()->second != 1) {
      throw UsageError("cmp operands must be normal monomials, got '" + format_element(e) + "'");
    }
    monomials.push_back(e.terms().begin()->first);
  }
  const auto c = compare(in.order, monomials[0], monomials[1]);
  const char* rel = c < 0 ? "<" : (c > 0 ? ">" : "=");
  if (s.as_json) {
    out << json{{"command", "cmp"},
                {"ordering", format_ordering(in.order)},
                {"left", format_monomial(monomials[0])},
                {"right", format_monomial(monomials[1])},
                {"relation", rel}}
               .dump(2)
        << "\n";
  } else {
    out << format_monomial(monomials[0]) << " " << rel << " " << format_monomial(monomials[1])
        << "\n";
  }
  return kSuccess;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gröbner bases and universal Gröbner bases in Weyl algebras over Q", "weylgb"};
  app.require_subcommand(1);
  Settings s;

  auto add_common = [&s](CLI::App* sub) {
    sub->add_option("--n", s.n, "dimension n of the Weyl algebra (x1..xn, d1..dn)");
    sub->add_option("--order", s.order, "ordering: lex | grlex | matrix:[[q,...];...]");
    sub->add_option("--input", s.input, "problem file with n=, order=, gen= lines");
    sub->add_flag("--json", s.as_json, "machine-readable output");
    sub->add_option("--max-support", s.max_support, "support size cap for certification");
    sub->add_option("exprs", s.exprs, "expressions, e.g. \"d1*x1\"");
  };
  auto* mul = app.add_subcommand("mul", "multiply the expressions left to right");
  auto* nf = app.add_subcommand("nf", "normalize each expression to canonical form");
  auto* div = app.add_subcommand("div", "divide the first expression by the others");
  auto* gb = app.add_subcommand("gb", "reduced Gröbner basis of the left ideal");
  auto* ugb = app.add_subcommand("ugb", "universal Gröbner basis with certificate");
  auto* cert = app.add_subcommand("cert", "certify a basis as universal");
  auto* cmp = app.add_subcommand("cmp", "compare two monomials");
  for (auto* sub : {mul, nf, div, gb, ugb, cert, cmp}) add_common(sub);

  std::vector<const char*> argv{"weylgb"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (mul->parsed()) return cmd_mul(s, out);
    if (nf->parsed()) return cmd_nf(s, out);
    if (div->parsed()) return cmd_div(s, out, err);
    if (gb->parsed()) return cmd_gb(s, out);
    if (ugb->parsed()) return cmd_ugb(s, out);
    if (cert->parsed()) return cmd_cert(s, out);
    if (cmp->parsed()) return cmd_cmp(s, out);
  } catch (const SupportCapExceeded& e) {
    err << "refused: " << e.what() << "\n";
    if (!e.partial_basis().empty()) {
      err << "partial basis after " << e.iterations() << " round(s):\n";
      for (const auto& b : e.partial_basis()) err << "  " << format_element(b) << "\n";
    }
    return kRefused;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    err << "command:";
    for (const auto& a : args) err << " '" << a << "'";
    err << "\n";
    return kInvariant;
  } catch (const WeylError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace weyl::cli
