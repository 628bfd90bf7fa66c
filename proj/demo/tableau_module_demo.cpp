// Walks through the tableau module for lambda = (3,1) in type B_3: the
// basis, its residue sequences, the crossing matrices and the matrix units.

#include "minuscule/klr/basis.hpp"
#include "minuscule/klr/relations.hpp"

#include <iostream>

using namespace minuscule;

int main() {
  const StrictPartition lambda({3, 1});
  const auto m = klr::build_module_tableaux(3, lambda);

  std::cout << "shape " << lambda.str() << ", weight " << to_string(m.weight) << ", dimension " << m.dimension()
            << "\n\n";
  for (const auto& t : standard_tableaux(lambda))
    std::cout << render(t) << "res = " << to_string(residue_sequence(t)) << "\n\n";

  for (int k = 1; k < m.height; ++k) {
    if (m.tau(k).is_zero()) continue;
    std::cout << "tau_" << k << " (rows cols nnz, then row col value):\n" << m.tau(k).to_triplet_text();
  }

  const auto report = klr::check_klr_relations(m, klr::QSpec::normalized(m.datum));
  std::cout << "\nrelations:";
  for (const auto& f : report.families) std::cout << " " << f.name << "=" << status_name(f.status);
  std::cout << "\ncyclotomic: " << status_name(klr::check_cyclotomic(m).status) << "\n\n";

  for (const auto& c : klr::cyclotomic_basis(m))
    std::cout << "c_{" << c.target << "," << c.source << "} = e tau" << to_string(c.word) << " e, degree " << c.degree
              << "\n";
}
