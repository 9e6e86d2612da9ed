// gpot: divergences between Gaussian processes via kernel Gram matrices.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gpot/io.hpp"

namespace {

using namespace gpot;

std::vector<double> parse_eps_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      out.push_back(std::stod(cell));
    } catch (const std::exception&) {
      throw InvalidInput("bad epsilon value: " + cell);
    }
  }
  if (out.empty()) throw InvalidInput("empty epsilon list");
  return out;
}

struct KernelArgs {
  std::string kernel = "se";
  double param = 1.0;
  int degree = 1;
  int dim = 1;

  KernelSpec spec() const {
    if (kernel == "se") return KernelSpec::squared_exponential(param, dim);
    if (kernel == "exp") return KernelSpec::exponential(param, dim);
    if (kernel == "poly") return KernelSpec::polynomial(degree, dim);
    throw InvalidConfig("unknown kernel \"" + kernel + "\" (se|exp|poly)");
  }

  void add_options(CLI::App* app) {
    app->add_option("--kernel", kernel, "Kernel family: se|exp|poly");
    app->add_option("--param", param, "sigma (se) or a (exp)");
    app->add_option("--degree", degree, "Polynomial degree");
    app->add_option("--dim", dim, "Domain dimension d");
  }
};

int run(int argc, char** argv) {
  CLI::App app{"Wasserstein and Sinkhorn divergences between Gaussian "
               "processes via kernel Gram matrices"};
  app.require_subcommand(1);

  // gram
  auto* cmd_gram = app.add_subcommand("gram", "Evaluate a kernel Gram matrix");
  KernelArgs gram_kernel;
  gram_kernel.add_options(cmd_gram);
  std::string gram_points, gram_out;
  cmd_gram->add_option("--points", gram_points, "Points CSV (one point per row)")
      ->required();
  cmd_gram->add_option("--out", gram_out, "Output matrix CSV")->required();

  // divergence
  auto* cmd_div = app.add_subcommand(
      "divergence", "Divergence report for two covariance matrices");
  std::string div_a, div_b, div_mean_a, div_mean_b, div_eps = "0.1,0.5",
                                                    div_out;
  cmd_div->add_option("--a", div_a, "First covariance CSV")->required();
  cmd_div->add_option("--b", div_b, "Second covariance CSV")->required();
  cmd_div->add_option("--epsilon", div_eps, "Comma-separated epsilon list");
  cmd_div->add_option("--mean-a", div_mean_a, "Optional mean vector CSV");
  cmd_div->add_option("--mean-b", div_mean_b, "Optional mean vector CSV");
  cmd_div->add_option("--out", div_out, "Output report JSON")->required();

  // simulate
  auto* cmd_sim =
      app.add_subcommand("simulate", "Simulate process realizations");
  KernelArgs sim_kernel;
  sim_kernel.add_options(cmd_sim);
  int sim_m = 10, sim_n = 10;
  std::uint64_t sim_seed = 0;
  std::string sim_innovation = "gaussian", sim_out;
  cmd_sim->add_option("--m", sim_m, "Number of evaluation sites");
  cmd_sim->add_option("--n", sim_n, "Number of realizations");
  cmd_sim->add_option("--seed", sim_seed, "RNG seed");
  cmd_sim->add_option("--innovation", sim_innovation, "gaussian|uniform");
  cmd_sim->add_option("--out", sim_out, "Output file prefix")->required();

  // estimate
  auto* cmd_est = app.add_subcommand(
      "estimate", "Estimate divergences from two sample matrices");
  std::string est_za, est_zb, est_eps = "0.1,0.5", est_out;
  bool est_subtract_mean = false;
  cmd_est->add_option("--za", est_za, "First m x N sample CSV")->required();
  cmd_est->add_option("--zb", est_zb, "Second m x N sample CSV")->required();
  cmd_est->add_option("--epsilon", est_eps, "Comma-separated epsilon list");
  cmd_est->add_flag("--subtract-mean", est_subtract_mean,
                    "Center each site across realizations");
  cmd_est->add_option("--out", est_out, "Output report JSON")->required();

  // experiment
  auto* cmd_exp = app.add_subcommand("experiment", "Run a configured sweep");
  std::string exp_config, exp_out;
  cmd_exp->add_option("--config", exp_config, "Experiment config JSON")
      ->required();
  cmd_exp->add_option("--out", exp_out, "Output results CSV")->required();

  // bound
  auto* cmd_bound =
      app.add_subcommand("bound", "Evaluate a theoretical error bound");
  std::string bound_id;
  BoundQuery q;
  int bound_dim_hk2 = 0;
  cmd_bound->add_option("--id", bound_id, "Bound identifier")->required();
  cmd_bound->add_option("--kappa1-sq", q.kappa1_sq, "kappa_1^2");
  cmd_bound->add_option("--kappa2-sq", q.kappa2_sq, "kappa_2^2");
  cmd_bound->add_option("--m", q.m, "Number of sites");
  cmd_bound->add_option("--n", q.n, "Number of realizations");
  cmd_bound->add_option("--epsilon", q.epsilon, "Regularization epsilon");
  cmd_bound->add_option("--delta", q.delta, "Confidence parameter");
  cmd_bound->add_option("--dim-hk2", bound_dim_hk2, "dim of the second RKHS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (cmd_gram->parsed()) {
    const Matrix points = read_matrix_csv(gram_points);
    write_matrix_csv(gram_out, gram(gram_kernel.spec(), points).base.mat());
  } else if (cmd_div->parsed()) {
    const SymMatrix a(read_matrix_csv(div_a));
    const SymMatrix b(read_matrix_csv(div_b));
    GaussianParams g0 = div_mean_a.empty()
                            ? GaussianParams(a)
                            : GaussianParams(read_vector_csv(div_mean_a), a);
    GaussianParams g1 = div_mean_b.empty()
                            ? GaussianParams(b)
                            : GaussianParams(read_vector_csv(div_mean_b), b);
    write_report_json(div_out,
                      divergence_report(g0, g1, parse_eps_list(div_eps)));
  } else if (cmd_sim->parsed()) {
    Innovation inn;
    if (sim_innovation == "gaussian")
      inn = Innovation::Gaussian;
    else if (sim_innovation == "uniform")
      inn = Innovation::UniformScaled;
    else
      throw InvalidConfig("unknown innovation \"" + sim_innovation + "\"");
    const KernelSpec k = sim_kernel.spec();
    const PointSample x =
        sample_points(k.domain_dim, sim_m, derive_seed(sim_seed, 1));
    PathSample z =
        sample_paths(gram(k, x.coords), sim_n, inn, derive_seed(sim_seed, 2));
    z.x.seed = x.seed;
    z.seed = sim_seed;
    write_path_sample(sim_out, z, k);
  } else if (cmd_est->parsed()) {
    PathSample z1, z2;
    z1.z = read_matrix_csv(est_za);
    z1.n = static_cast<int>(z1.z.cols());
    z2.z = read_matrix_csv(est_zb);
    z2.n = static_cast<int>(z2.z.cols());
    write_report_json(est_out,
                      estimate_from_samples(z1, z2, parse_eps_list(est_eps),
                                            est_subtract_mean));
  } else if (cmd_exp->parsed()) {
    const ExperimentConfig cfg = read_experiment_config(exp_config);
    const auto rows = cfg.mode == SweepMode::GramSweep ? run_gram_sweep(cfg)
                                                       : run_sample_sweep(cfg);
    write_rows_csv(exp_out, rows);
  } else if (cmd_bound->parsed()) {
    q.bound_id = parse_bound_id(bound_id);
    if (bound_dim_hk2 > 0) q.dim_hk2 = bound_dim_hk2;
    std::cout << format_double(bound_value(q)) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const gpot::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const gpot::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
