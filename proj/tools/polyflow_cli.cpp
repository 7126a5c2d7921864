// Command-line front end: exact complexity analysis of polynomial families
// plus numerical experiments on torus and Heisenberg flows (averages, limit
// formulas, seminorms, equidistribution, return-time scans).

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "polyflow/parse.hpp"
#include "polyflow/serialize.hpp"
#include "polyflow/version.hpp"

namespace pf = polyflow;
using pf::Json;

namespace {

constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------------------
// scalar expressions for flow parameters: products/quotients of numbers,
// pi, and sqrt<n>, with an optional leading minus ("sqrt2", "1/pi", "-0.5")

double parse_scalar(const std::string& text) {
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto factor = [&]() -> double {
    skip();
    if (i >= text.size()) throw std::invalid_argument("scalar: unexpected end in '" + text + "'");
    if (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.') {
      size_t j = i;
      while (j < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '.'))
        ++j;
      double v = std::stod(text.substr(i, j - i));
      i = j;
      return v;
    }
    if (text.compare(i, 4, "sqrt") == 0) {
      size_t j = i + 4;
      size_t k = j;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      if (k == j) throw std::invalid_argument("scalar: sqrt needs an integer");
      double v = std::sqrt(std::stod(text.substr(j, k - j)));
      i = k;
      return v;
    }
    if (text.compare(i, 2, "pi") == 0) {
      i += 2;
      return kPi;
    }
    throw std::invalid_argument("scalar: cannot parse '" + text + "'");
  };
  skip();
  bool neg = false;
  if (i < text.size() && text[i] == '-') { neg = true; ++i; }
  double acc = factor();
  while (true) {
    skip();
    if (i < text.size() && text[i] == '*') { ++i; acc *= factor(); continue; }
    if (i < text.size() && text[i] == '/') { ++i; acc /= factor(); continue; }
    break;
  }
  skip();
  if (i != text.size()) throw std::invalid_argument("scalar: trailing input in '" + text + "'");
  return neg ? -acc : acc;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<double> parse_scalar_list(const std::string& s) {
  std::vector<double> out;
  for (const auto& piece : split(s, ',')) out.push_back(parse_scalar(piece));
  return out;
}

// ---------------------------------------------------------------------------
// numeric polynomial paths, e.g. "sqrt2*s, sqrt3*s^2": variables s,t,w,u<k>,
// coefficients are scalar expressions joined with '*' / '/'

pf::RealPoly parse_real_poly(const std::string& text,
                             const std::map<std::string, int>& vars, int d) {
  pf::RealPoly poly;
  poly.d = d;
  std::map<std::vector<int>, double> acc;

  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  // split top level on +/- keeping signs
  std::vector<std::pair<int, std::string>> terms;
  std::string cur;
  int sign = 1;
  for (size_t i = 0; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && i > 0 && s[i - 1] != '*' && s[i - 1] != '/' &&
        s[i - 1] != '^') {
      terms.emplace_back(sign, cur);
      cur.clear();
      sign = s[i] == '-' ? -1 : 1;
    } else if (i == 0 && (s[i] == '+' || s[i] == '-')) {
      sign = s[i] == '-' ? -1 : 1;
    } else {
      cur.push_back(s[i]);
    }
  }
  terms.emplace_back(sign, cur);

  for (const auto& [sg, term] : terms) {
    if (term.empty()) throw std::invalid_argument("path: empty term");
    double coeff = sg;
    std::vector<int> exps(d, 0);
    size_t i = 0;
    bool dividing = false;
    while (i < term.size()) {
      std::string factor;
      while (i < term.size() && term[i] != '*' && term[i] != '/') factor.push_back(term[i++]);
      bool next_div = i < term.size() && term[i] == '/';
      if (i < term.size()) ++i;
      // variable factor?
      size_t caret = factor.find('^');
      std::string head = caret == std::string::npos ? factor : factor.substr(0, caret);
      auto vit = vars.find(head);
      if (vit != vars.end()) {
        if (dividing) throw std::invalid_argument("path: cannot divide by a variable");
        int e = 1;
        if (caret != std::string::npos) e = std::stoi(factor.substr(caret + 1));
        exps[vit->second] += e;
      } else {
        double v = parse_scalar(factor);
        coeff = dividing ? coeff / v : coeff * v;
      }
      dividing = next_div;
    }
    acc[exps] += coeff;
  }
  for (const auto& [e, c] : acc)
    if (c != 0.0) poly.terms.emplace_back(e, c);
  return poly;
}

std::vector<pf::RealPoly> parse_real_path(const std::string& text, int* d_out) {
  // first pass: variable assignment across the whole comma-separated list
  std::map<std::string, int> vars;
  std::vector<bool> taken;
  auto reserve = [&](int idx) {
    if (idx >= static_cast<int>(taken.size())) taken.resize(idx + 1, false);
    taken[idx] = true;
  };
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  for (size_t i = 0; i < s.size(); ++i) {
    if (s.compare(i, 4, "sqrt") == 0) { i += 3; continue; }
    if (s.compare(i, 2, "pi") == 0) { i += 1; continue; }
    char c = s[i];
    if (c == 'u') {
      size_t j = i + 1;
      std::string digits;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        digits.push_back(s[j++]);
      if (!digits.empty()) {
        int idx = std::stoi(digits) - 1;
        vars["u" + digits] = idx;
        reserve(idx);
        i = j - 1;
      }
    } else if (c == 's' || c == 't' || c == 'w') {
      std::string name(1, c);
      if (!vars.count(name)) vars[name] = -1;  // assign later in order
    }
  }
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (s.compare(i, 4, "sqrt") == 0) { i += 3; continue; }
    if ((c == 's' || c == 't' || c == 'w') && vars[std::string(1, c)] == -1) {
      int idx = 0;
      while (idx < static_cast<int>(taken.size()) && taken[idx]) ++idx;
      reserve(idx);
      vars[std::string(1, c)] = idx;
    }
  }
  int d = 0;
  for (const auto& [name, idx] : vars) d = std::max(d, idx + 1);
  d = std::max(d, 1);
  if (d_out) *d_out = d;

  std::vector<pf::RealPoly> out;
  for (const auto& piece : split(text, ',')) out.push_back(parse_real_poly(piece, vars, d));
  return out;
}

// ---------------------------------------------------------------------------
// observables: ';'-separated list of
//   char(n1[,n2,...])       e^{2 pi i n.x}
//   cos(n1[,...])           (e_n + e_{-n}) / 2
//   const(re[,im])
//   trig(n,..:re[,im]|...)  explicit coefficient list
//   box(c1,..;w1,..)        (';' inside parens belongs to the box spec)
//   sbox(c1,..;w1,..;eta)

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& piece : split(s, ',')) out.push_back(std::stoi(piece));
  return out;
}

std::vector<std::string> split_observables(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ';' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

pf::Observable parse_observable(const std::string& raw, int m) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')')
    throw std::invalid_argument("observable: expected name(args), got '" + raw + "'");
  std::string name = s.substr(0, open);
  std::string args = s.substr(open + 1, s.size() - open - 2);

  if (name == "char" || name == "cos") {
    std::vector<int> n = parse_int_list(args);
    if (static_cast<int>(n.size()) != m)
      throw std::invalid_argument("observable: frequency arity != flow dimension");
    pf::TrigPoly f;
    f.m = m;
    if (name == "char") {
      f.coeffs[n] = pf::Complex(1.0, 0.0);
    } else {
      std::vector<int> neg(n.size());
      for (size_t i = 0; i < n.size(); ++i) neg[i] = -n[i];
      f.coeffs[n] += pf::Complex(0.5, 0.0);
      f.coeffs[neg] += pf::Complex(0.5, 0.0);
    }
    return f;
  }
  if (name == "const") {
    auto parts = split(args, ',');
    double re = parse_scalar(parts[0]);
    double im = parts.size() > 1 ? parse_scalar(parts[1]) : 0.0;
    return pf::TrigPoly::constant(m, pf::Complex(re, im));
  }
  if (name == "trig") {
    pf::TrigPoly f;
    f.m = m;
    for (const auto& termtext : split(args, '|')) {
      auto colon = termtext.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("observable: trig term needs freq:amplitude");
      std::vector<int> n = parse_int_list(termtext.substr(0, colon));
      if (static_cast<int>(n.size()) != m)
        throw std::invalid_argument("observable: frequency arity != flow dimension");
      auto amp = split(termtext.substr(colon + 1), ',');
      double re = parse_scalar(amp[0]);
      double im = amp.size() > 1 ? parse_scalar(amp[1]) : 0.0;
      f.coeffs[n] += pf::Complex(re, im);
    }
    return f;
  }
  if (name == "box" || name == "sbox") {
    auto groups = split(args, ';');
    if (groups.size() < 2) throw std::invalid_argument("observable: box needs corner;widths");
    pf::BoxIndicator b;
    b.corner = parse_scalar_list(groups[0]);
    b.widths = parse_scalar_list(groups[1]);
    b.m = static_cast<int>(b.corner.size());
    if (b.m != m || static_cast<int>(b.widths.size()) != m)
      throw std::invalid_argument("observable: box arity != flow dimension");
    if (name == "box") return b;
    pf::SmoothedBox sb;
    sb.box = b;
    sb.eta = groups.size() > 2 ? parse_scalar(groups[2]) : 0.01;
    return sb;
  }
  throw std::invalid_argument("observable: unknown kind '" + name + "'");
}

std::vector<pf::Observable> parse_observables(const std::string& text, int m) {
  std::vector<pf::Observable> out;
  for (const auto& piece : split_observables(text)) out.push_back(parse_observable(piece, m));
  if (out.empty()) throw std::invalid_argument("observable list is empty");
  return out;
}

std::vector<pf::TrigPoly> as_trig(const std::vector<pf::Observable>& fs) {
  std::vector<pf::TrigPoly> out;
  for (const auto& f : fs) {
    if (!std::holds_alternative<pf::TrigPoly>(f))
      throw std::invalid_argument("this command needs trigonometric observables");
    out.push_back(std::get<pf::TrigPoly>(f));
  }
  return out;
}

// ---------------------------------------------------------------------------
// output plumbing

void flatten(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i)
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << "," << j.dump() << "\n";
  }
}

struct OutputOptions {
  std::string path;  // empty = stdout
  std::string format = "json";
};

int emit(const Json& config, const Json& results, const OutputOptions& opt) {
  Json root;
  root["schema"] = pf::kOutputSchema;
  root["version"] = pf::kVersion;
  root["config"] = config;
  root["results"] = results;

  std::ostringstream body;
  if (opt.format == "json") {
    body << root.dump(2) << "\n";
  } else if (opt.format == "csv") {
    body << "key,value\n";
    flatten(root, "", body);
  } else {
    throw std::invalid_argument("unknown format '" + opt.format + "'");
  }
  if (opt.path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(opt.path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + opt.path);
    out << body.str();
  }
  return 0;
}

struct PlanOptions {
  std::string R = "2000";
  std::string scheme = "monte-carlo";
  long samples = 200000;
  std::uint64_t seed = 0;

  pf::SamplingPlan build(int d) const {
    pf::SamplingPlan plan;
    plan.d = d;
    plan.R = parse_scalar_list(R);
    if (static_cast<int>(plan.R.size()) == 1 && d > 1)
      plan.R.assign(d, plan.R[0]);
    if (static_cast<int>(plan.R.size()) != d)
      throw std::invalid_argument("--R arity does not match the parameter count");
    plan.scheme = pf::scheme_from_name(scheme);
    plan.samples = samples;
    plan.seed = seed;
    return plan;
  }
  Json echo() const {
    return Json{{"R", R}, {"scheme", scheme}, {"samples", samples}, {"seed", seed}};
  }
};

struct FlowOptions {
  std::string kind = "torus";
  std::string gamma = "sqrt2";
  std::string alpha = "1", beta = "sqrt2", zeta = "0";

  pf::Flow build() const {
    if (kind == "torus") {
      pf::TorusFlow f;
      f.gamma = parse_scalar_list(gamma);
      f.m = static_cast<int>(f.gamma.size());
      return f;
    }
    if (kind == "heisenberg") {
      pf::HeisenbergFlow f;
      f.alpha = parse_scalar(alpha);
      f.beta = parse_scalar(beta);
      f.zeta = parse_scalar(zeta);
      return f;
    }
    throw std::invalid_argument("--flow must be torus or heisenberg");
  }
  Json echo() const {
    if (kind == "torus") return Json{{"flow", kind}, {"gamma", gamma}};
    return Json{{"flow", kind}, {"alpha", alpha}, {"beta", beta}, {"zeta", zeta}};
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(pf::kVersion) +
               " — flow-average complexity bounds and ergodic-average experiments"};
  app.require_subcommand(1);

  OutputOptions out;
  bool strict = false;
  app.add_option("--out", out.path, "Write results to this file instead of stdout");
  app.add_option("--format", out.format, "Output format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--strict", strict, "Exit nonzero when a hypothesis gate fails");

  std::string family_text, observables_text, path_text, x_text = "0.3";
  std::string intervals_path, f_text;
  PlanOptions plan_opt;
  FlowOptions flow_opt;
  int budget = pf::kDefaultSearchBudget;
  int resolution = 64, depth = 4, korder = 2, psi_grid = 6;
  long recursion_n = 500;
  double psi_extent = 5.0, slack = 0.05;
  std::string delta = "1/20", epsilon = "1/10", smax = "50", step = "1/100", window = "10";
  std::string method = "closed", gamma_opt;
  bool bound_check = false;

  auto add_plan = [&](CLI::App* cmd) {
    cmd->add_option("--R", plan_opt.R, "Upper integration limits, comma separated");
    cmd->add_option("--scheme", plan_opt.scheme, "Sampling scheme: grid|mc|lowdisc");
    cmd->add_option("--samples", plan_opt.samples, "Total sample count");
    cmd->add_option("--seed", plan_opt.seed, "RNG seed (counter-based, reproducible)");
  };
  auto add_flow = [&](CLI::App* cmd) {
    cmd->add_option("--flow", flow_opt.kind, "Flow kind: torus|heisenberg");
    cmd->add_option("--gamma", flow_opt.gamma,
                    "Torus direction, comma-separated scalar expressions");
    cmd->add_option("--alpha", flow_opt.alpha, "Heisenberg alpha");
    cmd->add_option("--beta", flow_opt.beta, "Heisenberg beta");
    cmd->add_option("--zeta", flow_opt.zeta, "Heisenberg zeta");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Exact complexity bounds with certificates");
  analyze->add_option("--family", family_text, "Polynomial family, comma separated")->required();
  analyze->add_option("--budget", budget, "Substitution search budget");

  CLI::App* simulate = app.add_subcommand("simulate", "Multiparameter average estimate");
  simulate->add_option("--family", family_text, "Polynomial family")->required();
  simulate->add_option("--observables", observables_text, "Observable list")->required();
  simulate->add_option("--x", x_text, "Base point, comma separated");
  add_flow(simulate);
  add_plan(simulate);

  CLI::App* kronecker = app.add_subcommand(
      "kronecker", "Rotation-factor limit (quadrature + closed form)");
  kronecker->add_option("--family", family_text, "Polynomial family")->required();
  kronecker->add_option("--observables", observables_text, "Observable list")->required();
  kronecker->add_option("--x", x_text, "Base point");
  kronecker->add_option("--resolution", resolution, "Quadrature points per axis");
  kronecker->add_option("--gamma", gamma_opt,
                        "Concrete rotation direction for frequency matching");

  CLI::App* equidist = app.add_subcommand("equidist", "Box-count discrepancy of a path mod 1");
  equidist->add_option("--path", path_text, "Numeric polynomial path")->required();
  equidist->add_option("--depth", depth, "Dyadic depth");
  add_plan(equidist);

  CLI::App* seminorm = app.add_subcommand("seminorm", "Seminorms of trig polynomials");
  seminorm->add_option("--observable", f_text, "Single trig observable");
  seminorm->add_option("--k", korder, "Seminorm order");
  seminorm->add_option("--method", method, "closed|recursion")
      ->check(CLI::IsMember({"closed", "recursion"}));
  seminorm->add_option("--N", recursion_n, "Recursion truncation");
  seminorm->add_flag("--bound-check", bound_check,
                     "Check the averaged-product bound for a linear family");
  seminorm->add_option("--family", family_text, "Linear family for --bound-check");
  seminorm->add_option("--observables", observables_text, "Observables for --bound-check");
  seminorm->add_option("--slack", slack, "Finite-R slack");
  add_flow(seminorm);
  add_plan(seminorm);

  CLI::App* vdc = app.add_subcommand("vdc", "Finite-R averaging-inequality margin");
  vdc->add_option("--family", family_text, "Polynomial family")->required();
  vdc->add_option("--observables", observables_text, "Observable list")->required();
  vdc->add_option("--psi", psi_extent, "Psi box extent");
  vdc->add_option("--psi-grid", psi_grid, "Psi grid points per axis");
  vdc->add_option("--slack", slack, "Finite-R slack");
  add_flow(vdc);
  add_plan(vdc);

  CLI::App* returns = app.add_subcommand("returns", "Return-time density scan with gap report");
  returns->add_option("--intervals", intervals_path, "Interval set file")->required();
  returns->add_option("--family", family_text, "Polynomial family (p_i(0)=0)")->required();
  returns->add_option("--delta", delta, "Thickening radius (rational; 0 = experimental)");
  returns->add_option("--epsilon", epsilon, "Threshold slack (rational)");
  returns->add_option("--smax", smax, "Scan upper limit (rational)");
  returns->add_option("--step", step, "Scan grid step (rational)");
  returns->add_option("--L", window, "Density window length (rational)");
  returns->add_option("--budget", budget, "Complexity search budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion")
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (analyze->parsed()) {
      pf::PolyFamily fam = pf::parse_family(family_text);
      pf::FamilyComplexityReport rep = pf::family_complexity_bounds(fam, budget);
      Json config{{"command", "analyze"}, {"family", family_text}, {"budget", budget}};
      Json results;
      results["report"] = pf::to_json(rep);
      pf::WeightVector w = pf::weight_vector(fam);
      results["weight_vector"] = w.str();
      results["independent"] = rep.independent;
      return emit(config, results, out);
    }

    if (simulate->parsed()) {
      pf::PolyFamily fam = pf::parse_family(family_text);
      std::vector<pf::RealPoly> lowered = pf::lower_family(fam, kPi);
      pf::Flow flow = flow_opt.build();
      int m = pf::flow_dim(flow);
      auto fs = parse_observables(observables_text, m);
      auto x = parse_scalar_list(x_text);
      if (static_cast<int>(x.size()) != m)
        throw std::invalid_argument("--x arity != flow dimension");
      pf::SamplingPlan plan = plan_opt.build(fam.d);
      pf::AverageEstimate est = pf::multi_average(flow, lowered, fs, x, plan);
      bool ergodic = std::holds_alternative<pf::TorusFlow>(flow)
                         ? std::get<pf::TorusFlow>(flow).ergodic_hint()
                         : std::get<pf::HeisenbergFlow>(flow).ergodic_base_hint();
      Json config{{"command", "simulate"},
                  {"family", family_text},
                  {"observables", observables_text},
                  {"x", x_text}};
      config.update(flow_opt.echo());
      config.update(plan_opt.echo());
      Json results;
      results["estimate"] = pf::to_json(est);
      pf::Complex prod = pf::product_of_integrals(fs);
      results["product_of_integrals"] = {{"re", prod.real()}, {"im", prod.imag()}};
      results["ergodic_hint"] = ergodic;
      int rc = emit(config, results, out);
      return (strict && !ergodic) ? 1 : rc;
    }

    if (kronecker->parsed()) {
      pf::PolyFamily fam = pf::parse_family(family_text);
      pf::CoefficientMatrix dec = pf::independent_decomposition(fam);
      std::optional<std::vector<double>> gamma;
      if (!gamma_opt.empty()) gamma = parse_scalar_list(gamma_opt);
      int m = gamma ? static_cast<int>(gamma->size()) : 1;
      auto fs = parse_observables(observables_text, m);
      m = pf::observable_dim(fs[0]);
      auto x = parse_scalar_list(x_text);
      if (static_cast<int>(x.size()) != m)
        throw std::invalid_argument("--x arity != observable dimension");
      pf::KroneckerResult res = pf::kronecker_limit(dec, fs, x, resolution, gamma);
      Json config{{"command", "kronecker"},
                  {"family", family_text},
                  {"observables", observables_text},
                  {"x", x_text},
                  {"resolution", resolution}};
      if (!gamma_opt.empty()) config["gamma"] = gamma_opt;
      Json results;
      results["limit"] = pf::to_json(res);
      results["linearization"] = pf::to_json(dec);
      return emit(config, results, out);
    }

    if (equidist->parsed()) {
      int d = 1;
      auto path = parse_real_path(path_text, &d);
      pf::SamplingPlan plan = plan_opt.build(d);
      pf::DiscrepancyReport rep = pf::path_discrepancy(path, plan, depth);
      Json config{{"command", "equidist"}, {"path", path_text}, {"depth", depth}};
      config.update(plan_opt.echo());
      Json results;
      results["discrepancy"] = pf::to_json(rep);
      int rc = emit(config, results, out);
      return (strict && rep.degenerate) ? 1 : rc;
    }

    if (seminorm->parsed()) {
      pf::Flow flow = flow_opt.build();
      if (!std::holds_alternative<pf::TorusFlow>(flow))
        throw std::invalid_argument("seminorm: torus flow required");
      pf::TorusFlow torus = std::get<pf::TorusFlow>(flow);
      if (bound_check) {
        pf::PolyFamily fam = pf::parse_family(family_text);
        auto lowered = pf::lower_family(fam, kPi);
        auto fs = as_trig(parse_observables(observables_text, torus.m));
        for (auto& f : fs) f = f.normalized_sup();
        pf::SamplingPlan plan = plan_opt.build(fam.d);
        pf::SeminormBoundReport rep =
            pf::seminorm_bound_check(torus, lowered, fs, plan, korder, slack);
        Json config{{"command", "seminorm"},
                    {"bound_check", true},
                    {"family", family_text},
                    {"observables", observables_text},
                    {"k", korder},
                    {"slack", slack}};
        config.update(flow_opt.echo());
        config.update(plan_opt.echo());
        Json results;
        results["bound_check"] = pf::to_json(rep);
        int rc = emit(config, results, out);
        return (strict && !rep.pass) ? 1 : rc;
      }
      if (f_text.empty())
        throw std::invalid_argument("seminorm: --observable required (or --bound-check)");
      auto fs = parse_observables(f_text, torus.m);
      auto trig = as_trig(fs);
      pf::SeminormValue v = pf::hk_seminorm(
          trig[0], korder,
          method == "closed" ? pf::SeminormValue::Method::closed_form
                             : pf::SeminormValue::Method::recursion,
          torus.gamma, recursion_n);
      Json config{{"command", "seminorm"},
                  {"observable", f_text},
                  {"k", korder},
                  {"method", method},
                  {"N", recursion_n}};
      config.update(flow_opt.echo());
      Json results;
      results["seminorm"] = pf::to_json(v);
      return emit(config, results, out);
    }

    if (vdc->parsed()) {
      pf::Flow flow = flow_opt.build();
      if (!std::holds_alternative<pf::TorusFlow>(flow))
        throw std::invalid_argument("vdc: torus flow required");
      pf::TorusFlow torus = std::get<pf::TorusFlow>(flow);
      pf::PolyFamily fam = pf::parse_family(family_text);
      auto lowered = pf::lower_family(fam, kPi);
      auto fs = as_trig(parse_observables(observables_text, torus.m));
      for (auto& f : fs) f = f.normalized_sup();
      pf::SamplingPlan plan = plan_opt.build(fam.d);
      pf::VdcReport rep = pf::vdc_check(torus, lowered, fs, psi_extent, psi_grid, plan, slack);
      Json config{{"command", "vdc"},
                  {"family", family_text},
                  {"observables", observables_text},
                  {"psi", psi_extent},
                  {"psi_grid", psi_grid},
                  {"slack", slack}};
      config.update(flow_opt.echo());
      config.update(plan_opt.echo());
      Json results;
      results["vdc"] = pf::to_json(rep);
      int rc = emit(config, results, out);
      return (strict && !rep.pass) ? 1 : rc;
    }

    if (returns->parsed()) {
      std::ifstream in(intervals_path);
      if (!in) throw std::invalid_argument("cannot open intervals file " + intervals_path);
      pf::IntervalSet e = pf::IntervalSet::parse(in);
      pf::PolyFamily fam = pf::parse_family(family_text);
      pf::Rational rdelta = pf::Rational::from_string(delta);
      pf::Rational reps = pf::Rational::from_string(epsilon);
      pf::Rational rsmax = pf::Rational::from_string(smax);
      pf::Rational rstep = pf::Rational::from_string(step);
      pf::Rational rwin = pf::Rational::from_string(window);
      pf::MGrid grid{pf::Rational(0), rwin, 8};
      pf::GapReport rep =
          pf::syndetic_scan(e, rdelta, fam, reps, rsmax, rstep, rwin, grid, budget);
      Json config{{"command", "returns"}, {"intervals", intervals_path},
                  {"family", family_text}, {"delta", delta},
                  {"epsilon", epsilon},    {"smax", smax},
                  {"step", step},          {"L", window}};
      Json results;
      results["gap_report"] = pf::to_json(rep);
      int rc = emit(config, results, out);
      return (strict && !rep.hypothesis_certified) ? 1 : rc;
    }
  } catch (const pf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
