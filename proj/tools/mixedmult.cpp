#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mixedmult/jobs.hpp"
#include "mixedmult/kernel.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read job file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hilbert polynomials, mixed multiplicities and mixed volumes"};
  app.require_subcommand(1);

  std::string job_file;
  std::string format = "text";
  std::string kernel = "auto";
  unsigned long long box = 0;
  unsigned long long seed = 7;
  bool no_ehrhart = false;
  bool timing = false;
  bool full = false;
  app.add_option("--job", job_file, "JSON job file")->capture_default_str();
  app.add_option("--format", format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--box", box, "cap for the fitting box side");
  app.add_option("--seed", seed, "seed for the suite generator");
  app.add_option("--kernel", kernel, "counting kernel: auto, scalar or avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));
  app.add_flag("--no-ehrhart-check", no_ehrhart, "skip lattice-point cross checks");
  app.add_flag("--timing", timing, "include wall time in the output");
  app.add_flag("--full", full, "suite: run the full acceptance-sized case counts");

  // quick inline payloads for the most common commands
  std::vector<long long> exponents;
  std::string ideal_I, ring_vars;
  std::vector<std::string> ideal_J;

  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert function and polynomial");
  CLI::App* mixedmult = app.add_subcommand("mixedmult", "mixed multiplicities of an ideal tuple");
  mixedmult->add_option("-I", ideal_I, "primary ideal, e.g. ideal(x1,x2)");
  mixedmult->add_option("-J", ideal_J, "other ideals");
  mixedmult->add_option("--vars", ring_vars, "number of variables");
  CLI::App* multseq = app.add_subcommand("multseq", "Achilles-Manaresi multiplicity sequence");
  multseq->add_option("-I", ideal_I, "ideal");
  multseq->add_option("--vars", ring_vars, "number of variables");
  CLI::App* rees = app.add_subcommand("rees", "blowup algebra mixed multiplicities");
  rees->add_option("-I", ideal_I, "ideal");
  rees->add_option("--vars", ring_vars, "number of variables");
  CLI::App* mixedvolume = app.add_subcommand("mixedvolume", "mixed volume of lattice polytopes");
  CLI::App* bernstein = app.add_subcommand("bernstein", "BKK bound from supports");
  CLI::App* milnor = app.add_subcommand("milnor", "Milnor numbers of a Brieskorn form");
  milnor->add_option("--exponents", exponents, "Brieskorn exponents, e.g. 3 3 3");
  CLI::App* oracle = app.add_subcommand("oracle", "closed-form evaluators");
  CLI::App* suite = app.add_subcommand("suite", "random identity suite");
  (void)hilbert;
  (void)mixedvolume;
  (void)bernstein;
  (void)oracle;
  (void)suite;

  CLI11_PARSE(app, argc, argv);

  try {
    if (!mm::kernel::select_variant(kernel)) {
      std::cerr << "kernel variant '" << kernel << "' is unavailable on this machine\n";
      return 1;
    }
    mm::JobSpec job;
    if (!job_file.empty()) {
      job = mm::parse_job(read_file(job_file));
      if (job.command != app.get_subcommands()[0]->get_name())
        throw std::invalid_argument("job command does not match the subcommand");
    } else {
      job.command = app.get_subcommands()[0]->get_name();
      mm::Json payload;
      payload["command"] = job.command;
      if (!exponents.empty()) payload["exponents"] = exponents;
      if (!ring_vars.empty()) payload["ring"] = {{"vars", std::stoi(ring_vars)}};
      if (!ideal_I.empty()) payload["I"] = ideal_I;
      if (!ideal_J.empty()) payload["J"] = ideal_J;
      job.payload = std::move(payload);
    }
    if (box) job.box_cap = static_cast<mm::Exp>(box);
    job.seed = seed;
    job.ehrhart_check = !no_ehrhart;
    job.quick_suite = !full;

    mm::Report rep = mm::run(job);
    if (format == "json") std::cout << rep.to_json(timing).dump(2) << "\n";
    else std::cout << rep.to_text(timing);
    return rep.exit_code();
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
