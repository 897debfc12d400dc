// nsatz command line front end: Groebner bases, Nullstellensatz decision
// procedures, elimination, vanishing ideals and the certified identity
// gadgets, over ideal files in the JSON format documented in the README.
//
// Exit codes: 0 success (or a positive verdict), 1 negative verdict or
// domain failure, 2 usage or input errors. Domain errors are printed on
// stderr as "error:<kind>: <message>".

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <nsatz/nsatz.hpp>

namespace {

using namespace nsatz;

int exit_code_for(const Error& e) {
  const std::string& k = e.kind();
  if (k == "NotUnitContraction" || k == "NotMaximal" || k == "NotCheckable" ||
      k == "NonSplit" || k == "InvalidCertificate")
    return 1;
  return 2;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

VarSet varset_from_csv(const std::string& csv) {
  std::vector<Variable> vars;
  for (const auto& name : split_csv(csv)) {
    if (!valid_variable_name(name))
      throw SyntaxError("invalid variable name '" + name + "'", 0);
    vars.emplace_back(name);
  }
  return VarSet(std::move(vars));
}

struct IdealArgs {
  std::string path;
  std::string order;  // optional override
};

void add_ideal_args(CLI::App* cmd, IdealArgs& args) {
  cmd->add_option("file", args.path, "ideal file (JSON)")->required();
  cmd->add_option("--order", args.order, "monomial order override: lex|grlex|grevlex");
}

Ideal load(const IdealArgs& args) {
  IdealFile file = read_ideal_file(args.path);
  if (!args.order.empty()) file.order = args.order;
  return load_ideal(file);
}

void print_basis(const Ideal& a) {
  const GroebnerBasis& gb = a.groebner();
  if (gb.empty()) {
    std::cout << "0\n";
    return;
  }
  for (const auto& g : gb.elements()) std::cout << print_poly(g, gb.order()) << "\n";
}

std::vector<Point> parse_points(const std::vector<std::string>& texts, const VarSet& vars) {
  std::vector<Point> pts;
  pts.reserve(texts.size());
  for (const auto& t : texts) {
    Point p = parse_point(t, vars);
    if (!p.total_on(vars)) throw PartialPoint("point '" + t + "' does not assign every variable");
    pts.push_back(std::move(p));
  }
  return pts;
}

std::vector<Polynomial> read_probe_file(const std::string& path, const VarSet& vars) {
  std::ifstream in(path);
  if (!in) throw SyntaxError("cannot open probe file '" + path + "'", 0);
  std::vector<Polynomial> probes;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    probes.push_back(parse_poly(line, vars));
  }
  return probes;
}

Claim5Certificate read_claim5_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SyntaxError("cannot open certificate file '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(std::string("invalid JSON: ") + e.what(), 0);
  }
  if (!j.is_object() || !j.contains("var") || !j.contains("vars") || !j.contains("entries"))
    throw SyntaxError("certificate needs \"var\", \"vars\" and \"entries\"", 0);
  std::string var_name = j["var"].get<std::string>();
  if (!valid_variable_name(var_name)) throw SyntaxError("invalid variable name", 0);
  std::vector<Variable> vars;
  for (const auto& v : j["vars"]) {
    std::string name = v.get<std::string>();
    if (!valid_variable_name(name)) throw SyntaxError("invalid variable name '" + name + "'", 0);
    vars.emplace_back(name);
  }
  VarSet ambient(vars);
  Claim5Certificate cert{Variable(var_name), {}};
  if (!ambient.contains(cert.var))
    throw SyntaxError("\"vars\" must contain \"var\"", 0);
  for (const auto& e : j["entries"]) {
    if (!e.is_object() || !e.contains("z") || !e.contains("lambda") || !e.contains("m") ||
        !e.contains("g"))
      throw SyntaxError("certificate entry needs \"z\", \"lambda\", \"m\", \"g\"", 0);
    Claim5Entry entry{Rational::from_string(e["z"].get<std::string>()),
                      Rational::from_string(e["lambda"].get<std::string>()),
                      parse_poly(e["m"].get<std::string>(), ambient),
                      parse_poly(e["g"].get<std::string>(), ambient)};
    cert.entries.push_back(std::move(entry));
  }
  return cert;
}

int run(int argc, char** argv) {
  CLI::App app{"exact polynomial algebra over Q: Groebner bases and Nullstellensatz checks"};
  app.require_subcommand(1);

  // gb
  IdealArgs gb_args;
  CLI::App* gb = app.add_subcommand("gb", "reduced Groebner basis, one polynomial per line");
  add_ideal_args(gb, gb_args);

  // member
  IdealArgs member_args;
  std::string member_expr;
  CLI::App* member = app.add_subcommand("member", "ideal membership test for --f");
  member->add_option("--f", member_expr, "polynomial expression")->required();
  add_ideal_args(member, member_args);

  // eliminate
  IdealArgs elim_args;
  std::string elim_keep;
  CLI::App* elim = app.add_subcommand("eliminate", "contraction to the kept variables");
  elim->add_option("--keep", elim_keep, "comma separated variables to keep")->required();
  add_ideal_args(elim, elim_args);

  // intersect
  std::string intersect_a, intersect_b;
  CLI::App* inter = app.add_subcommand("intersect", "intersection of two ideals");
  inter->add_option("a", intersect_a, "first ideal file")->required();
  inter->add_option("b", intersect_b, "second ideal file")->required();

  // solvable
  IdealArgs solv_args;
  CLI::App* solv = app.add_subcommand("solvable", "weak Nullstellensatz solvability test");
  add_ideal_args(solv, solv_args);

  // radmember
  IdealArgs rad_args;
  std::string rad_expr;
  int rad_bound = 12;
  CLI::App* rad = app.add_subcommand("radmember", "radical membership via Rabinowitsch's trick");
  rad->add_option("--f", rad_expr, "polynomial expression")->required();
  rad->add_option("--bound", rad_bound, "power-oracle bound for the reported exponent");
  add_ideal_args(rad, rad_args);

  // variety
  IdealArgs var_args;
  CLI::App* var = app.add_subcommand("variety", "rational points of a zero-dimensional variety");
  add_ideal_args(var, var_args);

  // vanish
  std::string vanish_vars;
  std::vector<std::string> vanish_points;
  bool vanish_allow_empty = false;
  CLI::App* vanish = app.add_subcommand("vanish", "vanishing ideal of a finite point set");
  vanish->add_option("--vars", vanish_vars, "comma separated ambient variables")->required();
  vanish->add_option("points", vanish_points, "points like x=1,y=2/3");
  vanish->add_flag("--allow-empty", vanish_allow_empty,
                   "return the unit ideal for an empty point set");

  // point-ideal
  std::string pi_vars, pi_point;
  CLI::App* pi = app.add_subcommand("point-ideal", "the maximal ideal of a rational point");
  pi->add_option("--vars", pi_vars, "comma separated ambient variables")->required();
  pi->add_option("point", pi_point, "point like x=1,y=2/3")->required();

  // maximal-point
  IdealArgs mp_args;
  CLI::App* mp = app.add_subcommand("maximal-point", "recover the point of a maximal ideal");
  add_ideal_args(mp, mp_args);

  // statement-f
  IdealArgs sf_args;
  std::string sf_keep;
  CLI::App* sf = app.add_subcommand("statement-f",
                                    "contraction shape check on a variable subset");
  sf->add_option("--keep", sf_keep, "comma separated subset (may be empty)");
  add_ideal_args(sf, sf_args);

  // strong-nss
  IdealArgs nss_args;
  CLI::App* nss = app.add_subcommand("strong-nss", "strong Nullstellensatz instance check");
  add_ideal_args(nss, nss_args);

  // extend-check
  IdealArgs ext_args;
  std::string ext_vars, ext_probes;
  int ext_bound = 12;
  CLI::App* ext = app.add_subcommand("extend-check",
                                     "radical persistence under ring extension");
  ext->add_option("--ext", ext_vars, "comma separated new variables")->required();
  ext->add_option("--probes", ext_probes, "file with one probe expression per line");
  ext->add_option("--bound", ext_bound, "power-oracle bound");
  add_ideal_args(ext, ext_args);

  // cylinder
  std::string cyl_expr, cyl_vars;
  std::vector<std::string> cyl_points;
  CLI::App* cyl = app.add_subcommand("cylinder",
                                     "membership in the vanishing ideal of a cylinder");
  cyl->add_option("--f", cyl_expr, "polynomial expression over --vars")->required();
  cyl->add_option("--vars", cyl_vars, "comma separated cylinder variables (J)")->required();
  cyl->add_option("points", cyl_points, "base points over a subset of --vars")->required();

  // claim5
  std::string c5_path;
  CLI::App* c5 = app.add_subcommand("claim5", "validate a certificate and construct g");
  c5->add_option("file", c5_path, "certificate file (JSON)")->required();

  // claim3
  std::string c3_num, c3_den = "1", c3_var = "s";
  bool c3_preimage = false;
  CLI::App* c3 = app.add_subcommand("claim3", "split a rational function into linear factors");
  c3->add_option("--num", c3_num, "numerator expression")->required();
  c3->add_option("--den", c3_den, "denominator expression (default 1)");
  c3->add_option("--var", c3_var, "distinguished variable (default s)");
  c3->add_flag("--preimage", c3_preimage, "also print the polynomial preimage (f, g)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gb) {
      print_basis(load(gb_args));
      return 0;
    }
    if (*member) {
      Ideal a = load(member_args);
      bool yes = is_member(parse_poly(member_expr, a.vars()), a);
      std::cout << (yes ? "MEMBER" : "NOT-MEMBER") << "\n";
      return yes ? 0 : 1;
    }
    if (*elim) {
      Ideal a = load(elim_args);
      print_basis(eliminate(a, varset_from_csv(elim_keep)));
      return 0;
    }
    if (*inter) {
      Ideal a = load({intersect_a, ""});
      Ideal b = load({intersect_b, ""});
      print_basis(intersect(a, b));
      return 0;
    }
    if (*solv) {
      bool yes = solvable(load(solv_args));
      std::cout << (yes ? "SOLVABLE" : "UNSOLVABLE") << "\n";
      return yes ? 0 : 1;
    }
    if (*rad) {
      Ideal a = load(rad_args);
      Polynomial f = parse_poly(rad_expr, a.vars());
      if (!radical_member(f, a)) {
        std::cout << "NOT-MEMBER\n";
        return 1;
      }
      auto n = bounded_power_member(f, a, rad_bound);
      if (n)
        std::cout << "MEMBER exponent:" << *n << "\n";
      else
        std::cout << "MEMBER exponent>" << rad_bound << "\n";
      return 0;
    }
    if (*var) {
      VarietyResult vr = variety_points(load(var_args));
      switch (vr.tag) {
        case VarietyResult::Tag::Empty:
          std::cout << "EMPTY\n";
          return 0;
        case VarietyResult::Tag::Points:
          for (const auto& p : vr.points) std::cout << print_point(p) << "\n";
          return 0;
        case VarietyResult::Tag::NonRational:
          std::cout << "NON-RATIONAL " << print_poly(*vr.witness) << "\n";
          return 1;
        case VarietyResult::Tag::NotZeroDimensional:
          std::cout << "NOT-ZERO-DIMENSIONAL\n";
          return 1;
      }
    }
    if (*vanish) {
      VarSet vars = varset_from_csv(vanish_vars);
      std::vector<Point> pts = parse_points(vanish_points, vars);
      print_basis(vanishing_ideal(pts, vars, vanish_allow_empty));
      return 0;
    }
    if (*pi) {
      VarSet vars = varset_from_csv(pi_vars);
      Point p = parse_point(pi_point, vars);
      if (!p.total_on(vars)) throw PartialPoint("point does not assign every variable");
      print_basis(point_ideal(p, vars));
      return 0;
    }
    if (*mp) {
      std::cout << print_point(maximal_point(load(mp_args))) << "\n";
      return 0;
    }
    if (*sf) {
      Ideal m = load(sf_args);
      auto restriction = check_statement_f(m, varset_from_csv(sf_keep));
      if (!restriction) {
        std::cout << "FAILS\n";
        return 1;
      }
      if (restriction->empty())
        std::cout << "HOLDS\n";
      else
        std::cout << "HOLDS " << print_point(*restriction) << "\n";
      return 0;
    }
    if (*nss) {
      bool ok = strong_nss_check(load(nss_args));
      std::cout << (ok ? "STRONG-NSS-HOLDS" : "STRONG-NSS-FAILS") << "\n";
      return ok ? 0 : 1;
    }
    if (*ext) {
      Ideal a = load(ext_args);
      VarSet bigger = a.vars().united(varset_from_csv(ext_vars));
      std::vector<Polynomial> probes = ext_probes.empty()
                                           ? a.generators()
                                           : read_probe_file(ext_probes, bigger);
      bool ok = corollary_check(a, bigger, probes, ext_bound);
      std::cout << (ok ? "COROLLARY-HOLDS" : "COROLLARY-FAILS") << "\n";
      return ok ? 0 : 1;
    }
    if (*cyl) {
      VarSet bigger = varset_from_csv(cyl_vars);
      Polynomial f = parse_poly(cyl_expr, bigger);
      std::vector<Point> pts;
      for (const auto& t : cyl_points) pts.push_back(parse_point(t, bigger));
      for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i].variables() != pts.front().variables())
          throw InvalidArgument("cylinder points must share one variable set");
      bool yes = cylinder_membership(f, pts, bigger);
      std::cout << (yes ? "IN-CYLINDER-IDEAL" : "NOT-IN-CYLINDER-IDEAL") << "\n";
      return yes ? 0 : 1;
    }
    if (*c5) {
      Polynomial g = claim5_construct(read_claim5_file(c5_path));
      std::cout << print_poly(g) << "\n";
      return 0;
    }
    if (*c3) {
      Variable s(c3_var);
      if (!valid_variable_name(c3_var)) throw SyntaxError("invalid variable name", 0);
      VarSet sv{s};
      Unipoly num = Unipoly::from_polynomial(parse_poly(c3_num, sv), s);
      Unipoly den = Unipoly::from_polynomial(parse_poly(c3_den, sv), s);
      RationalFunction r(s, std::move(num), std::move(den));
      LinearFactorization fac = claim3_factor(r);
      std::cout << "scale " << fac.scale.str() << "\n";
      for (const auto& [root, k] : fac.factors)
        std::cout << "root " << root.str() << " exp " << k << "\n";
      if (c3_preimage) {
        std::map<Rational, Variable> assignment;
        int counter = 0;
        for (const auto& [root, k] : fac.factors)
          if (k < 0) assignment.emplace(root, Variable("u" + std::to_string(counter++)));
        auto [f, g] = claim3_preimage(fac, Variable("t"), assignment);
        std::cout << "f = " << print_poly(f) << "\n";
        std::cout << "g = " << print_poly(g) << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error:" << e.kind() << ": " << e.what() << "\n";
    return exit_code_for(e);
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
