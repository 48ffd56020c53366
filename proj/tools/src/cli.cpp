#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "deffile.hpp"
#include "glacalc/errors.hpp"
#include "glacalc/expr.hpp"
#include "glacalc/systems.hpp"

namespace glacalc::cli {
namespace {

/// Bad command lines and bad object references; reported on stderr, exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::vector<std::string> names;
  std::string file;
  std::uint64_t seed = 0;
  int samples = 16;
  int degree_cap = 0;
  bool cap_given = false;
  bool machine = false;
};

/// Emits the report in one of the two line formats:
///   human:    `seed 0` / payload text / `check <name> <verdict> [witness]`
///   machine:  `command=<cmd>` / `seed=0` / `out=<payload>` /
///             `check=<name> verdict=<verdict> witness=<witness>`
/// and a final `overall <verdict>` / `overall=<verdict>` line.
class Reporter {
 public:
  Reporter(std::ostream& out, bool machine, const std::string& command)
      : m_out(out), m_machine(machine) {
    if (m_machine) m_out << "command=" << command << "\n";
  }

  void meta(const std::string& key, const std::string& value) {
    m_out << key << (m_machine ? "=" : " ") << value << "\n";
  }

  void line(const std::string& text) {
    if (m_machine) m_out << "out=";
    m_out << text << "\n";
  }

  void check(const std::string& name, bool pass, const std::string& witness = "") {
    if (!pass) m_overall = false;
    const char* verdict = pass ? "pass" : "fail";
    if (m_machine) {
      m_out << "check=" << name << " verdict=" << verdict << " witness=" << witness
            << "\n";
    } else {
      m_out << "check " << name << " " << verdict;
      if (!witness.empty()) m_out << " " << witness;
      m_out << "\n";
    }
  }

  void add_report(const std::string& prefix, const Report& report) {
    for (const auto& rec : report.checks) check(prefix + rec.name, rec.pass, rec.witness);
  }

  int finish() {
    meta("overall", m_overall ? "pass" : "fail");
    return m_overall ? 0 : 1;
  }

 private:
  std::ostream& m_out;
  bool m_machine;
  bool m_overall = true;
};

const AlgebraPtr& need_algebra(const Definitions& defs, const std::string& name) {
  if (const AlgebraPtr* found = defs.find_algebra(name)) return *found;
  throw UsageError("unknown algebra: " + name);
}

const Form& need_form(const Definitions& defs, const std::string& name) {
  if (const Form* found = defs.find_form(name)) return *found;
  throw UsageError("unknown form: " + name);
}

const Subspace& need_subspace(const Definitions& defs, const std::string& name) {
  if (const Subspace* found = defs.find_subspace(name)) return *found;
  throw UsageError("unknown subspace: " + name);
}

const Morphism& need_morphism(const Definitions& defs, const std::string& name) {
  if (const Morphism* found = defs.find_morphism(name)) return *found;
  throw UsageError("unknown morphism: " + name);
}

/// A named element, or the basis shorthand t<k> over the given algebra.
Element resolve_element_arg(const Definitions& defs, const std::string& name,
                            const AlgebraPtr& alg) {
  if (const Element* found = defs.find_element(name)) {
    if (found->algebra.get() != alg.get()) {
      throw UsageError("element " + name + " belongs to a different algebra");
    }
    return *found;
  }
  if (name.size() >= 2 && name.size() <= 7 && name[0] == 't' &&
      std::all_of(name.begin() + 1, name.end(),
                  [](unsigned char c) { return std::isdigit(c) != 0; })) {
    const int k = std::stoi(name.substr(1));
    if (k >= 1 && k <= alg->dim()) return basis_element(alg, k - 1);
  }
  throw UsageError("unknown element: " + name);
}

std::vector<std::string> algebra_names(const Definitions& defs, const Options& opt) {
  if (!opt.names.empty()) return opt.names;
  std::vector<std::string> names;
  names.reserve(defs.algebras.size());
  for (const auto& [name, alg] : defs.algebras) names.push_back(name);
  if (names.empty()) throw UsageError("the file defines no algebras");
  return names;
}

std::vector<std::string> form_names(const Definitions& defs, const Options& opt) {
  if (!opt.names.empty()) return opt.names;
  std::vector<std::string> names;
  names.reserve(defs.forms.size());
  for (const auto& [name, w] : defs.forms) names.push_back(name);
  if (names.empty()) throw UsageError("the file defines no forms");
  return names;
}

std::vector<std::string> subspace_names(const Definitions& defs, const Options& opt) {
  if (!opt.names.empty()) return opt.names;
  std::vector<std::string> names;
  names.reserve(defs.subspaces.size());
  for (const auto& [name, sub] : defs.subspaces) names.push_back(name);
  if (names.empty()) throw UsageError("the file defines no subspaces");
  return names;
}

void cmd_validate(const Definitions& defs, const Options& opt, Reporter& rep) {
  std::vector<std::string> names = opt.names;
  if (names.empty()) {
    for (const auto& [name, alg] : defs.algebras) names.push_back(name);
    for (const auto& [name, mor] : defs.morphisms) names.push_back(name);
    if (names.empty()) {
      throw UsageError("the file defines no algebras or morphisms");
    }
  }
  rep.meta("seed", std::to_string(opt.seed));
  rep.meta("samples", std::to_string(opt.samples));
  for (const std::string& name : names) {
    if (const AlgebraPtr* alg = defs.find_algebra(name)) {
      rep.add_report(name + ".", validate_axioms(*alg, opt.samples, opt.seed));
    } else if (const Morphism* mor = defs.find_morphism(name)) {
      rep.add_report(name + ".", validate_morphism(*mor, opt.samples, opt.seed));
    } else {
      throw UsageError("unknown algebra or morphism: " + name);
    }
  }
}

void cmd_mc(const Definitions& defs, const Options& opt, Reporter& rep) {
  for (const std::string& name : algebra_names(defs, opt)) {
    const AlgebraPtr& alg = need_algebra(defs, name);
    rep.line("algebra " + name);
    const MaurerCartanResult result = maurer_cartan(alg);
    for (const auto& rel : result.relations) {
      const std::string text = mc_relation_to_string(rel);
      rep.line(text);
      std::string check_name = rel.label;
      std::replace(check_name.begin(), check_name.end(), ' ', '-');
      rep.check(name + "." + check_name, rel.equal, rel.equal ? "" : text);
    }
  }
}

void cmd_eval(const Definitions& defs, const Options& opt, Reporter& rep) {
  if (opt.names.empty()) {
    throw UsageError("eval needs a form name and one element per form degree");
  }
  const Form& w = need_form(defs, opt.names[0]);
  if (static_cast<int>(opt.names.size()) != w.degree + 1) {
    throw UsageError("form " + opt.names[0] + " has degree " +
                     std::to_string(w.degree) + " and takes exactly " +
                     std::to_string(w.degree) + " elements");
  }
  std::vector<Element> args;
  std::string arg_list;
  for (std::size_t k = 1; k < opt.names.size(); ++k) {
    args.push_back(resolve_element_arg(defs, opt.names[k], w.algebra));
    if (k > 1) arg_list += ",";
    arg_list += opt.names[k];
  }
  const RatFunc value = form_eval(w, args);
  rep.line(opt.names[0] + "(" + arg_list + ") = " +
           ratfunc_to_string(value, w.algebra->vars()));
}

void cmd_d(const Definitions& defs, const Options& opt, Reporter& rep) {
  for (const std::string& name : form_names(defs, opt)) {
    rep.line("d " + name + " = " + form_to_string(ext_diff(need_form(defs, name))));
  }
}

void cmd_wedge(const Definitions& defs, const Options& opt, Reporter& rep) {
  if (opt.names.size() != 2) throw UsageError("wedge needs exactly two form names");
  const Form& a = need_form(defs, opt.names[0]);
  const Form& b = need_form(defs, opt.names[1]);
  rep.line(opt.names[0] + "∧" + opt.names[1] + " = " + form_to_string(wedge(a, b)));
}

void cmd_lie(const Definitions& defs, const Options& opt, Reporter& rep) {
  if (opt.names.size() != 2) {
    throw UsageError("lie needs an element name and a form name");
  }
  const Form& w = need_form(defs, opt.names[1]);
  const Element z = resolve_element_arg(defs, opt.names[0], w.algebra);
  rep.line("L_" + opt.names[0] + " " + opt.names[1] + " = " +
           form_to_string(lie_derivative(z, w)));
}

void cmd_interior(const Definitions& defs, const Options& opt, Reporter& rep) {
  if (opt.names.size() != 2) {
    throw UsageError("interior needs an element name and a form name");
  }
  const Form& w = need_form(defs, opt.names[1]);
  const Element z = resolve_element_arg(defs, opt.names[0], w.algebra);
  rep.line("i_" + opt.names[0] + " " + opt.names[1] + " = " +
           form_to_string(interior(z, w)));
}

void cmd_pullback(const Definitions& defs, const Options& opt, Reporter& rep) {
  if (opt.names.empty()) throw UsageError("pullback needs a morphism name");
  const Morphism& phi = need_morphism(defs, opt.names[0]);
  std::vector<std::string> form_list(opt.names.begin() + 1, opt.names.end());
  if (form_list.empty()) {
    for (const auto& [name, w] : defs.forms) {
      if (w.algebra.get() == phi.target.get()) form_list.push_back(name);
    }
    if (form_list.empty()) {
      throw UsageError("the file defines no forms over the morphism target");
    }
  }
  for (const std::string& name : form_list) {
    rep.line(opt.names[0] + "*" + name + " = " +
             form_to_string(pullback(phi, need_form(defs, name))));
  }
}

void cmd_annihilator(const Definitions& defs, const Options& opt, Reporter& rep) {
  for (const std::string& name : subspace_names(defs, opt)) {
    const Subspace& sub = need_subspace(defs, name);
    rep.line("subspace " + name);
    const std::vector<Form> ann = annihilator(sub);
    if (ann.empty()) rep.line("annihilator is zero");
    const int r = static_cast<int>(sub.generators.size());
    for (std::size_t k = 0; k < ann.size(); ++k) {
      rep.line("theta^" + std::to_string(r + 1 + static_cast<int>(k)) + " = " +
               form_to_string(ann[k]));
    }
  }
}

void cmd_involutive(const Definitions& defs, const Options& opt, Reporter& rep) {
  for (const std::string& name : subspace_names(defs, opt)) {
    const Subspace& sub = need_subspace(defs, name);
    rep.line("subspace " + name);
    const DirectResult result = involutive_direct(sub);
    std::string first;
    for (const auto& w : result.witnesses) {
      const std::string text = "[s" + std::to_string(w.a + 1) + ",s" +
                               std::to_string(w.b + 1) + "] = " +
                               element_to_string(w.value) + " outside span";
      if (first.empty()) first = text;
      rep.line(text);
    }
    rep.check(name + ".involutive", result.involutive, first);
  }
}

void cmd_frobenius(const Definitions& defs, const Options& opt, Reporter& rep) {
  for (const std::string& name : subspace_names(defs, opt)) {
    const Subspace& sub = need_subspace(defs, name);
    const int p = sub.algebra->dim();
    const int r = static_cast<int>(sub.generators.size());
    rep.line("subspace " + name);
    const FrobeniusResult result = frobenius_certificate(sub);
    std::string first;
    for (const auto& [alpha, b, c, value] : result.obstruction) {
      if (value.is_zero()) continue;
      const std::string text = "A^" + std::to_string(alpha + 1) + "_" +
                               std::to_string(b + 1) + std::to_string(c + 1) +
                               " = " + ratfunc_to_string(value, sub.algebra->vars());
      if (first.empty()) first = text;
      rep.line(text);
    }
    if (result.involutive) {
      for (int alpha = r; alpha < p; ++alpha) {
        rep.line("theta^" + std::to_string(alpha + 1) + " = " +
                 form_to_string(result.coframe[alpha]));
        for (int gamma = r; gamma < p; ++gamma) {
          rep.line("omega^" + std::to_string(alpha + 1) + "_" +
                   std::to_string(gamma + 1) + " = " +
                   form_to_string(result.connection[alpha - r][gamma - r]));
        }
      }
    }
    rep.check(name + ".involutive", result.involutive, first);
  }
}

void cmd_cartan(const Definitions& defs, const Options& opt, Reporter& rep) {
  for (const std::string& name : subspace_names(defs, opt)) {
    const Subspace& sub = need_subspace(defs, name);
    rep.line("subspace " + name);
    const CartanResult result = cartan_equivalence(sub);
    rep.line(std::string("involutive ") + (result.involutive ? "yes" : "no"));
    rep.check(name + ".direct", result.direct.involutive);
    rep.check(name + ".frobenius", result.frobenius.involutive);
    rep.check(name + ".eas", result.eas.involutive);
  }
}

void cmd_eas(const Definitions& defs, const Options& opt, Reporter& rep) {
  std::string ideal_name, sub_name;
  if (opt.names.size() == 2) {
    ideal_name = opt.names[0];
    sub_name = opt.names[1];
  } else if (opt.names.empty() && defs.ideals.size() == 1 &&
             defs.subspaces.size() == 1) {
    ideal_name = defs.ideals.front().first;
    sub_name = defs.subspaces.front().first;
  } else {
    throw UsageError("eas needs an ideal name and a subspace name");
  }
  const IdealSpec* ideal = defs.find_ideal(ideal_name);
  if (!ideal) throw UsageError("unknown ideal: " + ideal_name);
  const Subspace& sub = need_subspace(defs, sub_name);
  IdealSpec spec = *ideal;
  if (opt.cap_given) spec.degree_cap = opt.degree_cap;
  rep.line("ideal " + ideal_name + " cap " + std::to_string(spec.degree_cap));
  rep.line("subspace " + sub_name);
  rep.add_report(ideal_name + ".", eas_check(spec, sub).details);
}

void cmd_symplectic(const Definitions& defs, const Options& opt, Reporter& rep) {
  std::vector<std::string> names = opt.names;
  if (names.empty()) {
    for (const auto& [name, w] : defs.forms) {
      if (w.degree == 2) names.push_back(name);
    }
    if (names.empty()) throw UsageError("the file defines no 2-forms");
  }
  for (const std::string& name : names) {
    const Form& w = need_form(defs, name);
    rep.line("form " + name);
    const SymplecticResult result = symplectic_check(w);
    rep.line("pairing det = " + ratfunc_to_string(result.det, w.algebra->vars()));
    if (!result.note.empty()) rep.line("note " + result.note);
    rep.check(name + ".closed", result.closed);
    rep.check(name + ".nondegenerate", result.nondegenerate);
  }
}

void cmd_cohomology(const Definitions& defs, const Options& opt, Reporter& rep) {
  std::vector<std::string> names = opt.names;
  if (names.empty()) {
    for (const auto& [name, alg] : defs.algebras) names.push_back(name);
    if (names.empty()) throw UsageError("the file defines no algebras");
  }
  for (const std::string& name : names) {
    if (const AlgebraPtr* alg = defs.find_algebra(name)) {
      rep.line("algebra " + name);
      const std::vector<int> dims = cohomology_dimensions(*alg);
      for (std::size_t q = 0; q < dims.size(); ++q) {
        rep.line("H^" + std::to_string(q) + " dim " + std::to_string(dims[q]));
      }
    } else if (const Form* w = defs.find_form(name)) {
      rep.line("form " + name);
      rep.line(std::string("closed ") + (is_closed(*w) ? "yes" : "no"));
      const std::optional<Form> eta = exact_antiderivative(*w);
      rep.line(std::string("exact ") + (eta ? "yes" : "no"));
      if (eta) rep.line("antiderivative = " + form_to_string(*eta));
    } else {
      throw UsageError("unknown algebra or form: " + name);
    }
  }
}

void dispatch(const Definitions& defs, const Options& opt, Reporter& rep) {
  if (opt.command == "validate") return cmd_validate(defs, opt, rep);
  if (opt.command == "mc") return cmd_mc(defs, opt, rep);
  if (opt.command == "eval") return cmd_eval(defs, opt, rep);
  if (opt.command == "d") return cmd_d(defs, opt, rep);
  if (opt.command == "wedge") return cmd_wedge(defs, opt, rep);
  if (opt.command == "lie") return cmd_lie(defs, opt, rep);
  if (opt.command == "interior") return cmd_interior(defs, opt, rep);
  if (opt.command == "pullback") return cmd_pullback(defs, opt, rep);
  if (opt.command == "annihilator") return cmd_annihilator(defs, opt, rep);
  if (opt.command == "involutive") return cmd_involutive(defs, opt, rep);
  if (opt.command == "frobenius") return cmd_frobenius(defs, opt, rep);
  if (opt.command == "cartan") return cmd_cartan(defs, opt, rep);
  if (opt.command == "eas") return cmd_eas(defs, opt, rep);
  if (opt.command == "symplectic") return cmd_symplectic(defs, opt, rep);
  if (opt.command == "cohomology") return cmd_cohomology(defs, opt, rep);
  throw UsageError("unknown command: " + opt.command);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options opt;
  CLI::App app{"exact exterior calculus for generalized Lie algebras over Q(x1..xm)"};
  app.name("glacalc");
  app.add_option("command", opt.command,
                 "validate | mc | eval | d | wedge | lie | interior | pullback | "
                 "annihilator | involutive | frobenius | cartan | eas | "
                 "symplectic | cohomology")
      ->required();
  app.add_option("names", opt.names,
                 "names of the objects the command applies to "
                 "(defaults to every eligible object in the file)");
  app.add_option("--file", opt.file, "definition file path")->required();
  app.add_option("--seed", opt.seed, "seed for randomized checks (default 0)");
  app.add_option("--samples", opt.samples,
                 "sample count for randomized checks (default 16)")
      ->check(CLI::Range(1, 100000));
  CLI::Option* cap_opt =
      app.add_option("--degree-cap", opt.degree_cap,
                     "degree cap override for eas ideal-membership solving")
          ->check(CLI::Range(0, 64));
  app.add_flag("--machine", opt.machine, "emit machine-readable key=value records");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("glacalc");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  opt.cap_given = cap_opt->count() > 0;

  std::ifstream in(opt.file);
  if (!in) {
    err << "error: cannot open file: " << opt.file << "\n";
    return 2;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();

  Definitions defs;
  try {
    defs = parse_definition(buffer.str());
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Reporter rep(out, opt.machine, opt.command);
  try {
    dispatch(defs, opt, rep);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CalcError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return rep.finish();
}

}  // namespace glacalc::cli
