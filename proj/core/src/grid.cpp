#include "cyclic_es/grid.hpp"

#include <sstream>
#include <stdexcept>

namespace cyclic_es {

GridAssignment grid_assignment(const Permutation& p, int k, int l) {
  if (k < 1 || l < 1) {
    std::ostringstream msg;
    msg << "InvalidBound: k and l must be >= 1, got k=" << k << ", l=" << l;
    throw Error(errc::invalid_bound, msg.str());
  }
  const int n = p.size();
  if (n != k * l) {
    std::ostringstream msg;
    msg << "NotExtremal: length " << n << " != k*l = " << k * l;
    throw NotExtremalError(msg.str(), std::nullopt);
  }
  const MonotoneProfile profile = monotone_profile(p);
  if (profile.lis() > k) {
    std::ostringstream msg;
    msg << "NotExtremal: longest increasing subsequence has length "
        << profile.lis() << " > k = " << k;
    throw NotExtremalError(msg.str(),
                           linear_witness(p, Direction::increasing));
  }
  if (profile.lds() > l) {
    std::ostringstream msg;
    msg << "NotExtremal: longest decreasing subsequence has length "
        << profile.lds() << " > l = " << l;
    throw NotExtremalError(msg.str(),
                           linear_witness(p, Direction::decreasing));
  }

  std::vector<std::pair<int, int>> cells;
  cells.reserve(static_cast<size_t>(n));
  std::vector<int> ranking_flat(static_cast<size_t>(n), 0);
  for (int t = 1; t <= n; ++t) {
    const int i = profile.dec_ending[static_cast<size_t>(t - 1)];
    const int j = profile.inc_ending[static_cast<size_t>(t - 1)];
    cells.emplace_back(i, j);
    int& slot = ranking_flat[static_cast<size_t>((i - 1) * k + (j - 1))];
    if (slot != 0) {
      // The grid-function of a member is injective; n = k*l positions over
      // k*l cells then make it bijective.
      throw std::logic_error("grid-function collision on a member of S_{k,l}");
    }
    slot = t;
  }
  std::vector<int> valuation_flat(static_cast<size_t>(n), 0);
  for (int i = 1; i <= l; ++i) {
    for (int j = 1; j <= k; ++j) {
      const int t =
          ranking_flat[static_cast<size_t>((l - i) * k + (j - 1))];
      valuation_flat[static_cast<size_t>((i - 1) * k + (j - 1))] =
          p.value_at(t);
    }
  }
  GridAssignment ga{k, l, std::move(cells),
                    YoungTableau::from_flat(l, k, std::move(ranking_flat)),
                    YoungTableau::from_flat(l, k, std::move(valuation_flat))};
  return ga;
}

std::pair<YoungTableau, YoungTableau> phi(const Permutation& p, int k, int l) {
  GridAssignment ga = grid_assignment(p, k, l);
  return {std::move(ga.ranking), std::move(ga.valuation)};
}

Permutation phi_inverse(const YoungTableau& ranking,
                        const YoungTableau& valuation) {
  if (ranking.rows() != valuation.rows() ||
      ranking.cols() != valuation.cols()) {
    std::ostringstream msg;
    msg << "ShapeMismatch: ranking is " << ranking.rows() << "x"
        << ranking.cols() << " but valuation is " << valuation.rows() << "x"
        << valuation.cols();
    throw Error(errc::shape_mismatch, msg.str());
  }
  const int l = ranking.rows();
  const int k = ranking.cols();
  const int n = l * k;
  std::vector<int> values(static_cast<size_t>(n), 0);
  for (int i = 1; i <= l; ++i) {
    for (int j = 1; j <= k; ++j) {
      values[static_cast<size_t>(ranking.at(l + 1 - i, j) - 1)] =
          valuation.at(i, j);
    }
  }
  return Permutation::from_values(std::move(values));
}

GridDrawing grid_drawing(const Permutation& p, int k, int l) {
  const GridAssignment ga = grid_assignment(p, k, l);
  GridDrawing drawing;
  drawing.points.reserve(static_cast<size_t>(p.size()));
  for (int t = 1; t <= p.size(); ++t) {
    drawing.points.emplace_back(t, p.value_at(t));
  }
  drawing.edges.reserve(static_cast<size_t>(l * (k - 1) + k * (l - 1)));
  for (int i = 1; i <= l; ++i) {
    for (int j = 1; j + 1 <= k; ++j) {
      drawing.edges.push_back(
          {ga.ranking.at(i, j), ga.ranking.at(i, j + 1), true});
    }
  }
  for (int i = 1; i + 1 <= l; ++i) {
    for (int j = 1; j <= k; ++j) {
      drawing.edges.push_back(
          {ga.ranking.at(i, j), ga.ranking.at(i + 1, j), false});
    }
  }
  return drawing;
}

}  // namespace cyclic_es
