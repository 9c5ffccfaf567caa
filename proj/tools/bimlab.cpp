#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bimlab/algebra.hpp"
#include "bimlab/algebra_io.hpp"
#include "bimlab/clauses.hpp"
#include "bimlab/completion.hpp"
#include "bimlab/constructions.hpp"
#include "bimlab/fractions.hpp"

namespace {

using namespace bimlab;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInputError = 2;

struct InputSpec {
  std::string file;
  std::string catalog_name;

  OrderedAlgebra load() const {
    if (!catalog_name.empty()) return catalog(catalog_name);
    return load_algebra_file(file);
  }
};

void add_input(CLI::App* cmd, InputSpec& in) {
  auto* f = cmd->add_option("file", in.file, "algebra document");
  auto* c = cmd->add_option("--catalog", in.catalog_name, "catalog entry name");
  f->excludes(c);
  c->excludes(f);
}

void require_input(const InputSpec& in) {
  if (in.file.empty() == in.catalog_name.empty())
    throw CLI::ValidationError("input", "need exactly one of FILE or --catalog");
}

std::string classify(const OrderedAlgebra& a) {
  std::ostringstream os;
  os << (a.commutative ? "commutative " : "");
  if (a.has_mul() && a.has_add())
    os << (a.one && a.zero ? (a.has_lattice ? "l-bimonoid" : "bimonoid")
                           : (a.has_lattice ? "l-bisemigroup" : "bisemigroup"));
  else if (a.has_mul())
    os << (a.one ? "pomonoid" : "posemigroup");
  else
    os << "poset";
  if (a.has_mul() && is_distributive_lattice_bimonoid(a))
    os << "; bounded distributive lattice (idempotent bi-integral fast path)";
  if (a.has_mul() && is_residuated(a)) os << "; residuated";
  return os.str();
}

void print_table(std::ostream& os, const OrderedAlgebra& a, const std::vector<int>& t,
                 const std::string& title) {
  os << title << ":\n";
  for (int x = 0; x < a.size(); ++x) {
    os << " ";
    for (int y = 0; y < a.size(); ++y) os << " " << a.el(t[x * a.size() + y]);
    os << "\n";
  }
}

void print_algebra_text(std::ostream& os, const OrderedAlgebra& a) {
  os << "elements (" << a.size() << "):";
  for (int i = 0; i < a.size(); ++i) os << " " << a.el(i);
  os << "\ncovers:";
  for (auto [lo, hi] : a.poset.cover_pairs()) os << " " << a.el(lo) << "<" << a.el(hi);
  os << "\n";
  if (a.mul) print_table(os, a, *a.mul, "mul");
  if (a.one) os << "one: " << a.el(*a.one) << "\n";
  if (a.add) print_table(os, a, *a.add, "add");
  if (a.zero) os << "zero: " << a.el(*a.zero) << "\n";
}

GenExpr parse_gen(const OrderedAlgebra& a, const std::string& text) {
  std::stringstream ss(text);
  std::string x, y, side;
  if (!std::getline(ss, x, ',') || !std::getline(ss, y, ',') || !std::getline(ss, side))
    throw IoError("generator must look like '<name>,<name>,mul' or ',,add'");
  GenExpr g;
  g.a = a.poset.index_of(x);
  g.b = a.poset.index_of(y);
  if (g.a < 0 || g.b < 0) throw IoError("unknown element in generator '" + text + "'");
  if (side == "mul")
    g.side = GenSide::Mul;
  else if (side == "add")
    g.side = GenSide::Add;
  else
    throw IoError("generator side must be 'mul' or 'add'");
  return g;
}

int run(int argc, char** argv) {
  CLI::App app{"finite ordered-algebra workbench"};
  app.require_subcommand(1);
  int jobs = 1;
  int cap = 20000;
  app.add_option("--jobs", jobs, "worker threads for the scan kernels (default 1)");
  app.add_option("--cap", cap, "closed-set enumeration cap (default 20000)");

  // validate
  auto* v = app.add_subcommand("validate", "check the axioms of an algebra document");
  InputSpec v_in;
  add_input(v, v_in);

  // complete
  auto* comp = app.add_subcommand("complete", "complemented MacNeille completion");
  InputSpec c_in;
  add_input(comp, c_in);
  std::string c_out = "text";
  comp->add_option("--out", c_out, "text | dot | json-tables");

  // fractions
  auto* fr = app.add_subcommand("fractions", "complemented algebra of fractions");
  InputSpec f_in;
  add_input(fr, f_in);
  bool f_normal = false;
  std::string f_out = "text";
  fr->add_flag("--normal", f_normal, "use the normal-pair construction");
  fr->add_option("--out", f_out, "text | dot | tables | json-tables");

  // sigma
  auto* sg = app.add_subcommand("sigma", "interior operator onto the embedded copy");
  InputSpec s_in;
  add_input(sg, s_in);

  // clause
  auto* cl = app.add_subcommand("clause", "evaluate a universal clause on an algebra");
  InputSpec cl_in;
  add_input(cl, cl_in);
  std::string cl_text;
  bool cl_oracle = false;
  cl->add_option("--clause", cl_text, "clause expression")->required();
  cl->add_flag("--oracle", cl_oracle, "evaluate on the completion instead");

  // translate
  auto* tr = app.add_subcommand("translate", "subreduct translation of a positive clause");
  std::string tr_text;
  tr->add_option("--clause", tr_text, "linear positive clause over {v,*,1}")->required();

  // linearize
  auto* ln = app.add_subcommand("linearize", "linearize an inequality over {v,*,1}");
  std::string ln_text;
  ln->add_option("--ineq", ln_text, "inequality")->required();

  // compare
  auto* cg = app.add_subcommand("compare", "order of two completion generators");
  InputSpec g_in;
  add_input(cg, g_in);
  std::string lhs_text, rhs_text;
  cg->add_option("--lhs", lhs_text, "generator '<a>,<b>,mul|add'")->required();
  cg->add_option("--rhs", rhs_text, "generator '<a>,<b>,mul|add'")->required();

  // catalog
  auto* ct = app.add_subcommand("catalog", "list or print catalog algebras");
  std::string ct_name;
  std::string ct_out = "text";
  ct->add_option("name", ct_name, "catalog entry");
  ct->add_option("--out", ct_out, "text | dot | json-tables");

  // roundtrip
  auto* rt = app.add_subcommand("roundtrip", "fractions/interior round-trip checks");
  InputSpec r_in;
  add_input(rt, r_in);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  if (v->parsed()) {
    require_input(v_in);
    auto a = v_in.load();
    auto rep = validate(a);
    if (!rep) {
      std::cout << "INVALID: " << rep.detail << "\n";
      return kExitFalse;
    }
    std::cout << "OK: " << classify(a) << "\n";
    return kExitTrue;
  }

  if (comp->parsed()) {
    require_input(c_in);
    auto a = c_in.load();
    auto res = dm_completion(a, cap);
    if (c_out == "dot") {
      std::cout << res.algebra.base.poset.to_dot(res.labels);
    } else if (c_out == "json-tables") {
      OrderedAlgebra named = res.algebra.base;
      std::vector<std::string> names = res.labels;
      named.poset = FinitePoset::from_relation(
          named.size(),
          [&] {
            std::vector<uint8_t> leq(named.size() * named.size());
            for (int i = 0; i < named.size(); ++i)
              for (int j = 0; j < named.size(); ++j)
                leq[i * named.size() + j] = named.leq(i, j);
            return leq;
          }(),
          names);
      std::cout << dump_algebra(named);
    } else {
      std::cout << "completion of " << (a.name.empty() ? "input" : a.name) << ": "
                << res.algebra.base.size() << " elements\n";
      for (int i = 0; i < res.algebra.base.size(); ++i)
        std::cout << "  " << res.algebra.base.el(i) << " = " << res.labels[i] << "\n";
      print_algebra_text(std::cout, res.algebra.base);
      std::cout << "comp:";
      for (int i = 0; i < res.algebra.size(); ++i)
        std::cout << " " << res.algebra.base.el(res.algebra.comp[i]);
      std::cout << "\nembedding:";
      for (int g = 0; g < a.size(); ++g)
        std::cout << " " << a.el(g) << "->" << res.algebra.base.el(res.embed[g]);
      std::cout << "\n";
    }
    return kExitTrue;
  }

  if (fr->parsed() || sg->parsed()) {
    const InputSpec& in = fr->parsed() ? f_in : s_in;
    require_input(in);
    auto a = in.load();
    auto t = find_transformation(a, f_normal || sg->parsed(), jobs);
    if (!t) {
      std::cout << "no transformation functions: the algebra has no complemented algebra of "
                   "fractions\n";
      return kExitFalse;
    }
    auto res = (f_normal || sg->parsed()) ? fractions_normal(a, *t) : fractions_quotient(a, *t);
    if (sg->parsed()) {
      std::cout << "sigma table:\n";
      for (int e = 0; e < res.algebra.size(); ++e)
        std::cout << "  " << res.algebra.base.el(e) << " -> "
                  << res.algebra.base.el(sigma_div(res, e)) << "\n";
      return kExitTrue;
    }
    if (f_out == "dot") {
      std::cout << res.algebra.base.poset.to_dot();
    } else if (f_out == "json-tables") {
      std::cout << dump_algebra(res.algebra.base);
    } else {
      std::cout << (res.normal_construction ? "normal pairs" : "fraction classes") << " ("
                << res.algebra.base.size() << "):\n";
      for (int e = 0; e < res.algebra.base.size(); ++e)
        std::cout << "  " << res.algebra.base.el(e) << "\n";
      if (f_out == "tables" || f_out == "text") {
        print_algebra_text(std::cout, res.algebra.base);
        std::cout << "comp:";
        for (int e = 0; e < res.algebra.size(); ++e)
          std::cout << " " << res.algebra.base.el(res.algebra.comp[e]);
        std::cout << "\n";
        if (res.normal_construction && is_residuated(a)) {
          auto tt = *t;
          std::cout << "pi:\n";
          for (int x = 0; x < a.size(); ++x) {
            std::cout << " ";
            for (int y = 0; y < a.size(); ++y) {
              auto p = pi(a, tt, x, y);
              std::cout << " " << a.el(p.first) << "|" << a.el(p.second);
            }
            std::cout << "\n";
          }
        }
      }
    }
    return kExitTrue;
  }

  if (cl->parsed()) {
    require_input(cl_in);
    auto a = cl_in.load();
    auto clause = parse_clause(cl_text);
    EvalResult r;
    if (cl_oracle) {
      auto compl_res = dm_completion(a, cap);
      r = eval_clause(EvalAlgebra::of(compl_res.algebra), clause, jobs);
      if (!r.holds) {
        std::cout << "false on the completion\n";
        return kExitFalse;
      }
      std::cout << "true on the completion\n";
      return kExitTrue;
    }
    r = eval_clause(EvalAlgebra::of(a), clause, jobs);
    if (r.holds) {
      std::cout << "true\n";
      return kExitTrue;
    }
    std::cout << "false at";
    for (const auto& [var, val] : r.witness) std::cout << " " << var << "=" << a.el(val);
    std::cout << "\n";
    return kExitFalse;
  }

  if (tr->parsed()) {
    auto clause = parse_clause(tr_text);
    std::cout << to_string(translate_subreduct(clause)) << "\n";
    return kExitTrue;
  }

  if (ln->parsed()) {
    auto clause = parse_clause(ln_text);
    if (!clause.premises.empty() || clause.conclusions.size() != 1)
      throw IoError("linearize expects a single inequality");
    for (const auto& i : linearize(clause.conclusions[0])) std::cout << to_string(i) << "\n";
    return kExitTrue;
  }

  if (cg->parsed()) {
    require_input(g_in);
    auto a = g_in.load();
    bool le = compare_generators(a, parse_gen(a, lhs_text), parse_gen(a, rhs_text), jobs);
    std::cout << (le ? "true" : "false") << "\n";
    return le ? kExitTrue : kExitFalse;
  }

  if (ct->parsed()) {
    if (ct_name.empty()) {
      for (const auto& n : catalog_roster(1 << 20))
        std::cout << n << "  (" << catalog_provenance(n) << ")\n";
      return kExitTrue;
    }
    auto a = catalog(ct_name);
    if (ct_out == "dot")
      std::cout << a.poset.to_dot();
    else if (ct_out == "json-tables")
      std::cout << dump_algebra(a);
    else
      print_algebra_text(std::cout, a);
    return kExitTrue;
  }

  if (rt->parsed()) {
    require_input(r_in);
    auto a = r_in.load();
    auto t = find_transformation(a, /*normal=*/true, jobs);
    if (!t) {
      std::cout << "no normal transformation functions\n";
      return kExitFalse;
    }
    auto r1 = roundtrip_sigma_of_fractions(a, *t);
    std::cout << "sigma-after-fractions: " << (r1.ok ? "ok" : "FAIL " + r1.detail) << "\n";
    auto frac = fractions_normal(a, *t);
    auto r2 = roundtrip_fractions_of_sigma(frac.algebra, *frac.sigma);
    std::cout << "fractions-after-sigma: " << (r2.ok ? "ok" : "FAIL " + r2.detail) << "\n";
    return r1.ok && r2.ok ? kExitTrue : kExitFalse;
  }

  return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error&) {
    return kExitInputError;  // CLI11_PARSE already printed usage
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
