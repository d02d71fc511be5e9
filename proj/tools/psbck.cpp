// Command-line front end for the workbench.
#include <iostream>

#include <CLI11.hpp>

#include "psbck/workbench.hpp"

int main(int argc, char** argv) {
  psbck::Request req;
  CLI::App app{"Finite pseudo-BCK algebra workbench"};
  app.require_subcommand(1);
  app.fallthrough();

  auto common = [&](CLI::App* sub) {
    sub->add_option("--algebra", req.algebra, "algebra to work on when the file has several");
    sub->add_flag("--json", req.json, "JSON report on stdout");
  };
  auto file = [&](CLI::App* sub) { sub->add_option("file", req.files, "input document")->required()->expected(1); };

  auto* validate = app.add_subcommand("validate", "check the axioms of every algebra in a file");
  file(validate);
  common(validate);

  auto* props = app.add_subcommand("props", "order, negation properties and class membership");
  file(props);
  common(props);

  auto* en = app.add_subcommand("enum", "enumerate operators, deductive systems, morphisms, ...");
  en->add_option("kind", req.kind, "what to enumerate")->required()->check(CLI::IsMember(psbck::enum_kinds()));
  file(en);
  common(en);
  en->add_option("--vto", req.vto, "very true operator (dsv, dsnv, vthom)");
  en->add_option("--u", req.u, "operator on the target (vthom; defaults to --vto)");
  en->add_option("--to", req.to, "target algebra (hom; defaults to the source)");
  en->add_option("--q", req.q, "subset naming Q (svto)");

  auto* quotient = app.add_subcommand("quotient", "quotient by a normal deductive system, as a document");
  file(quotient);
  common(quotient);
  quotient->add_option("--ds", req.ds, "subset naming the deductive system")->required();

  auto* lift = app.add_subcommand("lift", "lift a very true operator to a quotient");
  file(lift);
  common(lift);
  lift->add_option("--vto", req.vto, "operator")->required();
  lift->add_option("--ds", req.ds, "subset naming the deductive system")->required();

  auto* hedges = app.add_subcommand("hedges", "truth-depressing hedges induced by an operator");
  file(hedges);
  common(hedges);
  hedges->add_option("--vto", req.vto, "operator")->required();

  auto* fac = app.add_subcommand("factor", "factor a homomorphism through a quotient");
  file(fac);
  common(fac);
  fac->add_option("--hom", req.hom, "homomorphism")->required();
  fac->add_option("--vto", req.vto, "operator on the source (default identity)");
  fac->add_option("--u", req.u, "operator on the target (default identity)");
  fac->add_option("--ds", req.ds, "subset inside the kernel (default: the kernel)");

  auto* val = app.add_subcommand("valuation", "check a pseudo-valuation or compose it with an operator");
  val->add_option("action", req.kind, "check or compose")->required()->check(CLI::IsMember({"check", "compose"}));
  file(val);
  common(val);
  val->add_option("--phi", req.phi, "valuation")->required();
  val->add_option("--vto", req.vto, "operator (compose)");

  auto* suite = app.add_subcommand("suite", "run every property family over files and generated algebras");
  suite->add_option("files", req.files, "input documents");
  suite->add_flag("--json", req.json, "JSON report on stdout");
  suite->add_option("--seed", req.seed, "seed for generated algebras")->capture_default_str();
  suite->add_option("--generated", req.generated, "number of generated algebras")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[Usage]: " << e.what() << "\n";
    return 2;
  }
  req.command = app.get_subcommands().front()->get_name();

  const psbck::Outcome out = psbck::run(req);
  std::cout << out.out;
  std::cerr << out.err;
  return out.exit_code;
}
