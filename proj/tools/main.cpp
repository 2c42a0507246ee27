/*
 * Copyright 2026 The linc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "linc: exact degeneracy loci of pencils of linear line complexes, and "
      "their constructive inverses"};
  app.require_subcommand(1);

  linc::cli::RunConfig cfg;

  auto add_output_flags = [&](CLI::App* sub) {
    sub->add_option("--field", cfg.field, "Base field: Q or Fp:<prime>")
        ->capture_default_str();
    sub->add_option("--format", cfg.format, "Report format: json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    sub->add_option("--output", cfg.output_path,
                    "Also write the JSON certificate to this file");
  };

  auto* pf = app.add_subcommand(
      "pfaffian",
      "Pfaffian (even size) or signed sub-Pfaffian vector (odd size) of a "
      "skew matrix or pencil, with the defining identity checked");
  pf->add_option("--input", cfg.input_path, "Matrix or pencil JSON file")
      ->required();
  add_output_flags(pf);

  auto* dl = app.add_subcommand(
      "deglocus",
      "Degeneracy locus of a pencil: kernel lines at the Pfaffian roots "
      "(even) or the normalized sub-Pfaffian parameterization (odd)");
  dl->add_option("--input", cfg.input_path, "Pencil JSON file")->required();
  add_output_flags(dl);

  auto* ef = app.add_subcommand(
      "even-fiber",
      "Sample a pencil whose degeneracy locus is a given (or seeded random) "
      "spanning configuration of n/2 lines, and certify the roundtrip");
  ef->add_option("--input", cfg.input_path, "Line configuration JSON file");
  ef->add_option("--n", cfg.n, "Ambient dimension (even, >= 4)");
  ef->add_option("--seed", cfg.seed, "Seed for all random draws")
      ->capture_default_str();
  add_output_flags(ef);

  auto* gd = app.add_subcommand(
      "gauss-dim",
      "Projective dimension of the space of complexes whose center contains "
      "a random line, checked against (n-1)(n-4)/2 over seeded trials");
  gd->add_option("--n", cfg.n, "Ambient dimension (even, >= 4)")->required();
  gd->add_option("--seed", cfg.seed, "Seed for all random draws")
      ->capture_default_str();
  gd->add_option("--trials", cfg.trials, "Number of random lines")
      ->capture_default_str();
  add_output_flags(gd);

  auto* orz = app.add_subcommand(
      "odd-realize",
      "Build a pencil whose signed sub-Pfaffian vector is proportional to "
      "given (or seeded random) spanning forms, and certify it");
  orz->add_option("--input", cfg.input_path, "Form vector JSON file");
  orz->add_option("--n", cfg.n, "Number of forms (odd, >= 3)");
  orz->add_option("--seed", cfg.seed, "Seed for all random draws")
      ->capture_default_str();
  add_output_flags(orz);

  auto* of = app.add_subcommand(
      "odd-fiber",
      "Linear space of all pencils annihilating a form vector: basis, "
      "dimension, and one certified random member");
  of->add_option("--input", cfg.input_path, "Form vector JSON file");
  of->add_option("--n", cfg.n, "Number of forms (odd, >= 3)");
  of->add_option("--seed", cfg.seed, "Seed for all random draws")
      ->capture_default_str();
  add_output_flags(of);

  auto* vf = app.add_subcommand(
      "verify", "Seeded verification suites with an aggregated certificate");
  vf->add_option("--suite", cfg.suite, "algebra, even, odd, or all")
      ->capture_default_str();
  vf->add_option("--trials", cfg.trials, "Trials per suite")
      ->capture_default_str();
  vf->add_option("--seed", cfg.seed, "Seed for all random draws")
      ->capture_default_str();
  vf->add_option("--n", cfg.n, "Size override for the even or odd suite");
  add_output_flags(vf);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return linc::cli::exit_usage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  return linc::cli::run(cfg, std::cout, std::cerr);
}
