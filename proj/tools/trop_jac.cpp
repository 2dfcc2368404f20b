// trop-jac: command line front end for the tropjac library.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "tropjac/cli.hpp"

int main(int argc, char** argv) {
  using tropjac::cli::Format;
  using tropjac::cli::RunConfig;

  CLI::App app{"Exact tropical Jacobians, tautological classes and theta functions"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "json";

  auto graph_flag = [&](CLI::App* sub) { sub->add_option("--graph", cfg.graph_path, "Graph JSON file"); };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", cfg.seed, "Spanning tree seed (0 = deterministic order)");
  };
  auto numbers = [&](CLI::App* sub) {
    sub->add_option("--genus", cfg.genus, "Genus (instead of --graph)");
    sub->add_option("--d", cfg.d, "Dimension d");
    sub->add_option("--k", cfg.k, "Power k");
  };

  std::map<std::string, CLI::App*> subs;
  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    subs[name] = sub;
    return sub;
  };

  for (auto name : {"info", "period", "circuits"}) graph_flag(add(name, std::string("Show ") + name));
  {
    auto* aj = add("aj", "Abel-Jacobi image of a vertex, a point or a divisor");
    graph_flag(aj);
    aj->add_option("--vertex", cfg.vertex, "Vertex id");
    aj->add_option("--edge", cfg.edge, "Edge id of the point");
    aj->add_option("--t", cfg.t, "Distance from the edge source");
    aj->add_option("--point", cfg.points, "Divisor point 'edge:t' (repeatable)");
  }
  {
    auto* wd = add("wd-cells", "Cells of W_d");
    graph_flag(wd);
    wd->add_option("--d", cfg.d, "Dimension d")->required();
  }
  auto with_kind = [&](const std::string& name, const std::string& help, std::vector<std::string> kinds) {
    auto* sub = add(name, help);
    sub->add_option("kind", cfg.subcommand, "What to compute")->required()->check(CLI::IsMember(kinds));
    return sub;
  };
  {
    auto* c = with_kind("class", "Homology class of W_d or [Theta]^k", {"wd", "theta-pow"});
    graph_flag(c);
    numbers(c);
  }
  {
    auto* v = with_kind("verify", "Verify the Poincare formula or Riemann's homological identity",
                        {"poincare", "riemann"});
    graph_flag(v);
    numbers(v);
  }
  {
    auto* dg = with_kind("degree", "Degrees of [Theta]^g and [W_d].[W_{g-d}]", {"theta-g", "wd-pair"});
    graph_flag(dg);
    numbers(dg);
  }
  {
    auto* th = with_kind("theta", "Riemann theta function", {"eval", "divisor-test", "relevant-vectors"});
    graph_flag(th);
    th->add_option("--x", cfg.x, "Point in delta-coordinates, e.g. \"1/2,0\"");
    th->add_option("--l", cfg.l, "Linear form l in circuit coordinates");
  }
  {
    auto* co = add("corpus", "Run every check on a directory of graph files");
    co->add_option("dir", cfg.corpus_dir, "Directory of *.json graphs")->required();
  }
  {
    auto* gen = add("generate", "Write a seeded random graph corpus");
    gen->add_option("--count", cfg.count, "Number of graphs");
    gen->add_option("--max-genus", cfg.max_genus, "Largest genus");
    gen->add_option("--out", cfg.out_dir, "Output directory")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : tropjac::cli::kInputError;
  }

  for (const auto& [name, sub] : subs)
    if (sub->parsed()) cfg.command = name;
  cfg.format = format == "text" ? Format::text : Format::json;
  return tropjac::cli::run(cfg, std::cout, std::cerr);
}
