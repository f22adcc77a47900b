#include "helix/hilbert.hpp"

#include <algorithm>

#include "helix/errors.hpp"

namespace helix {

Int euler_form(const Seed& s, long i, long j) {
  long lo = std::min(-i, -j);
  long hi = std::max(-i, -j);
  auto window = rank_deg_window(s, lo, hi);
  const WindowEntry& ei = window[static_cast<std::size_t>(-i - lo)];
  const WindowEntry& ej = window[static_cast<std::size_t>(-j - lo)];
  return ei.degree * ej.rank - ej.degree * ei.rank;
}

const Int& HilbertTable::at(long i, long j) const {
  if (i < 0 || j < i || j > size) throw InputError("table index out of range");
  return h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - i)];
}

HilbertTable hilbert_table(const Seed& s, long size) {
  if (size < 1) throw InputError("table size must be positive");
  ExtendVerdict v = extendable(s);
  if (!v.extends()) throw DomainError("seed " + s.str() + " does not extend (" + to_string(*v.reason) + ")");

  const Int d = seed_det(s);
  // Entries E_0, E_{-1}, ..., E_{-size}.
  auto window = rank_deg_window(s, -size, 0);
  auto term = [&](long k) -> const WindowEntry& { return window[static_cast<std::size_t>(size - k)]; };

  HilbertTable table{s, size, {}};
  table.h.resize(static_cast<std::size_t>(size + 1));
  for (long i = 0; i <= size; ++i) {
    auto& row = table.h[static_cast<std::size_t>(i)];
    for (long j = i; j <= size; ++j) {
      const WindowEntry& ei = term(i);
      const WindowEntry& ej = term(j);
      row.push_back(ei.degree * ej.rank - ej.degree * ei.rank);
    }
    if (row[0] != 0) throw InternalError("Euler form is not alternating");
    if (i < size && row[1] != d) throw InternalError("consecutive Euler form differs from d");
    for (std::size_t k = 1; k < row.size(); ++k) {
      if (sgn(row[k]) <= 0) throw InternalError("nonpositive Hom dimension in table");
    }
  }
  return table;
}

}  // namespace helix
