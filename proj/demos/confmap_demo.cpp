// Solve the Riemann mapping task for a perturbed circle and render the
// image of the polar mesh as SVG.

#include <fstream>
#include <iostream>

#include "harmonic/conformal.hpp"
#include "harmonic/svg.hpp"

int main() {
  using namespace harmonic;

  const BoundaryCurve curve = parse_shape("perturbed:eps=0.25,k=2");
  const ConformalSolution sol = solve(curve, 256);
  std::cout << "converged in " << sol.iterations << " iterations, residual " << sol.residual
            << "\n";
  std::cout << "w0 = " << sol.w0 << ", c_1 = " << sol.coefficients.c[1] << "\n";

  const auto mesh = evaluate_disk(sol, 8, sol.n);
  std::vector<svg::Polyline> lines;
  for (const auto& ring : mesh) lines.push_back({ring, "#1f77b4", true});
  for (std::size_t j = 0; j < 16; ++j) {
    svg::Polyline spoke{{sol.w0}, "#d62728", false};
    for (const auto& ring : mesh) spoke.points.push_back(ring[j * sol.n / 16]);
    lines.push_back(std::move(spoke));
  }
  std::ofstream out("perturbed_map.svg", std::ios::binary);
  svg::write_svg(out, lines);
  std::cout << "wrote perturbed_map.svg\n";
  return 0;
}
