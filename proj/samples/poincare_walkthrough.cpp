// Walks through the genus-2 theta graph: period lattice, Abel-Jacobi image of an
// edge point, the cells of W_1, and the exact Poincare formula check.
//
//   ./poincare_walkthrough [graph.json]

#include <iostream>

#include "tropjac/json_io.hpp"
#include "tropjac/tropjac.hpp"

int main(int argc, char** argv) {
  using namespace tropjac;
  const std::string path = argc > 1 ? argv[1] : "samples/theta.json";
  try {
    const MetricGraph graph = validate_and_prune(read_graph_file(path));
    const CircuitBasis basis = circuit_basis(graph);
    const PeriodMatrix G = period_matrix(graph, basis);
    const std::size_t g = G.genus();

    std::cout << "genus " << g << "\nperiod matrix " << to_json(G.gram()).dump() << "\n";
    const CurvePoint half{0, graph.edges[0].length / 2};
    std::cout << "AJ(midpoint of " << graph.edges[0].id << ") = "
              << to_json(abel_jacobi(graph, basis, G, half)).dump() << "\n";
    for (const auto& cell : wd_cells(graph, basis, G, 1)) std::cout << "W_1 cell " << to_json(graph, cell).dump() << "\n";

    const auto report = verify_poincare(g);
    for (const auto& r : report.records)
      std::cout << "(g-" << r.d << ")! [W_" << r.d << "] == [Theta]^" << g - r.d << ": "
                << (r.equal ? "yes" : "NO") << "\n";
    std::cout << "deg [Theta]^g = " << degree_theta_g(g) << "\n";
    return report.all_passed() ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
