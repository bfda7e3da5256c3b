#include <cstdio>
#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "robench/commands.hpp"
#include "robench/error.hpp"

int main(int argc, char** argv) {
  using namespace robench;
  CLI::App app{"robench: benchmark function suite tool"};
  app.require_subcommand(1);

  cli::GenOptions gen;
  auto* g = app.add_subcommand("gen", "write instance files");
  g->add_option("--fn", gen.fn, "function id, name or 'all'")->capture_default_str();
  g->add_option("--dim", gen.dim, "dimension")->required();
  g->add_option("--seed", gen.seed, "instance seed")->capture_default_str();
  g->add_option("--out", gen.out, "output directory")->capture_default_str();

  cli::EvalOptions ev;
  std::string instance;
  auto* e = app.add_subcommand("eval", "evaluate a points file");
  e->add_option("--fn", ev.fn, "function id or name")->required();
  e->add_option("--dim", ev.dim, "dimension")->required();
  e->add_option("--seed", ev.seed, "instance seed")->capture_default_str();
  e->add_option("--in", ev.in, "points file")->required();
  e->add_option("--out", ev.out, "values file (default: stdout)");
  e->add_flag("--single", ev.single, "single precision pipeline");
  e->add_option("--instance", instance, "use this instance file instead of generating");
  e->add_option("--threads", ev.threads, "evaluation threads (0: default)");

  cli::GridOptions gr;
  auto* r = app.add_subcommand("grid", "export a 2-D landscape grid");
  r->add_option("--fn", gr.fn, "function id or name")->required();
  r->add_option("--seed", gr.seed, "instance seed")->capture_default_str();
  r->add_option("--range", gr.range, "lo:hi")->capture_default_str();
  r->add_option("--steps", gr.steps, "nodes per axis")->capture_default_str();
  r->add_option("--out", gr.out, "grid file (default: stdout)");

  cli::BenchOptions bo;
  auto* b = app.add_subcommand("bench", "run the timing protocol");
  b->add_option("--dims", bo.dims, "comma-separated dimensions")->capture_default_str();
  b->add_option("--batch", bo.batch, "points per batch")->capture_default_str();
  b->add_option("--runs", bo.runs, "timed batches per row")->capture_default_str();
  b->add_option("--fns", bo.fns, "all, cec14 or a comma list")->capture_default_str();
  b->add_flag("--single", bo.single, "single precision");
  b->add_option("--seed", bo.seed, "instance and data seed")->capture_default_str();
  b->add_option("--threads", bo.threads, "evaluation threads (0: default)");
  b->add_option("--out", bo.out, "report file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    std::cerr << "robench: " << ex.what() << '\n';
    return 2;
  }

  try {
    if (*g) {
      for (const auto& p : cli::cmd_gen(gen)) std::cout << p.string() << '\n';
    } else if (*e) {
      if (!instance.empty()) ev.instance = instance;
      const auto text = cli::cmd_eval(ev);
      if (ev.out.empty()) std::cout << text;
    } else if (*r) {
      const auto text = cli::cmd_grid(gr);
      if (gr.out.empty()) std::cout << text;
    } else if (*b) {
      const auto text = cli::cmd_bench(bo);
      if (bo.out.empty()) std::cout << text;
    }
  } catch (const Error& ex) {
    std::cerr << "robench: " << to_string(ex.code()) << ": " << ex.what() << '\n';
    return 1;
  } catch (const std::exception& ex) {
    std::cerr << "robench: " << ex.what() << '\n';
    return 1;
  }
  return 0;
}
