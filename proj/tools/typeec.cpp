#include <iostream>

#include <CLI11.hpp>

#include "typeec/cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for quadratic AS-regular algebras of Type EC"};
  app.require_subcommand(1);
  typeec::cli::Options opt;

  auto lambda = [&](CLI::App* sub) {
    sub->add_option("--lambda", opt.lambda, "Hesse parameter, e.g. 0, 1+sqrt3, 5/3")->default_str("0");
  };
  auto json = [&](CLI::App* sub) { sub->add_flag("--json", opt.json, "machine-readable output"); };

  auto* curve = app.add_subcommand("curve", "j-invariant and automorphism class");
  lambda(curve);
  json(curve);
  auto* torsion = app.add_subcommand("torsion", "list E[n] for n in {2, 3, 6}");
  lambda(torsion);
  torsion->add_option("--n", opt.n)->check(CLI::IsMember({2, 3, 6}))->default_str("2");
  json(torsion);
  auto* loci = app.add_subcommand("loci", "fixed locus, U_{tau^i} and U^{tau^i}");
  lambda(loci);
  loci->add_option("--i", opt.i)->default_str("0");
  json(loci);
  for (auto [name, help] : {std::pair{"pair", "regularity, relations and Hilbert dimensions of sigma_p tau^i"},
                            std::pair{"potential", "MS twist of w_p by tau^i, witness and superpotential flag"}}) {
    auto* sub = app.add_subcommand(name, help);
    lambda(sub);
    sub->add_option("--p", opt.point, "translation point A:B:C")->required();
    sub->add_option("--i", opt.i)->default_str("0");
    json(sub);
  }
  auto* classify = app.add_subcommand("classify", "isomorphism classes of Type EC algebras on the curve");
  lambda(classify);
  json(classify);
  auto* verify = app.add_subcommand("verify-tables", "run every verification check");
  verify->add_flag("--strict", opt.strict, "treat errata as failures");
  json(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return typeec::cli::kInputError;
  }
  return typeec::cli::run(app.get_subcommands().front()->get_name(), opt, std::cout, std::cerr);
}
