// Solve a few graphs and print their total domination degrees.

#include "totdom/totdom.hpp"

#include <iostream>

int main() {
  using namespace totdom;

  const Graph p7 = generate(path_spec(7));
  const auto r = sweep_minimal_tds(p7);
  std::cout << "P_7\n" << report_to_table(r, true, true) << '\n';

  // A single vertex query stops at the first size that works.
  const Graph petersen = generate({Family::petersen, {}});
  const auto t = tdd(petersen, 0);
  std::cout << "Petersen vertex 0: tdd " << *t.value << ", witness {";
  for (auto v : t.certificate->witness.members())
    std::cout << ' ' << v;
  std::cout << " }\n";

  // Graph operations compose with the solver.
  const Graph h = corona(generate(cycle_spec(3)), generate(complete_spec(2)));
  std::cout << "C_3 corona K_2 TDI: " << *sweep_minimal_tds(h).tdi << '\n';
}
