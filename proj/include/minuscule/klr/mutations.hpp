#pragma once

#include "minuscule/klr/module.hpp"

namespace minuscule::klr {

/// Deliberately broken modules for exercising the checkers.
namespace mutation {

/// Negates the first nonzero entry of the first nonzero crossing.
inline HomogeneousModule flip_tau_sign(HomogeneousModule m) {
  for (auto& t : m.crossings) {
    if (t.is_zero()) continue;
    const auto [r, c, v] = t.triplets().front();
    t.set(r, c, -v);
    return m;
  }
  throw Error("module has no nonzero crossing to flip");
}

/// Replaces x_k by the identity.
inline HomogeneousModule dot_to_identity(HomogeneousModule m, int k = 1) {
  m.dots.at(static_cast<std::size_t>(k - 1)) = IntMatrixOp::identity(m.dimension());
  return m;
}

/// Changes the last letter of basis vector p's sequence to `letter`,
/// moving its idempotent along.
inline HomogeneousModule relabel_last_letter(HomogeneousModule m, std::size_t p, int letter) {
  auto& seq = m.sequences.at(p);
  if (seq.empty()) throw Error("basis sequence is empty");
  m.idempotents.at(seq).set(p, p, 0);
  if (m.idempotents.at(seq).is_zero()) m.idempotents.erase(seq);
  seq.back() = letter;
  auto [it, fresh] = m.idempotents.try_emplace(seq, m.dimension(), m.dimension());
  it->second.set(p, p, 1);
  return m;
}

}  // namespace mutation
}  // namespace minuscule::klr
