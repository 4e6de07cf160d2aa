#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cyclic_es/monotone.hpp"
#include "cyclic_es/permutation.hpp"
#include "cyclic_es/tableau.hpp"

namespace cyclic_es {

// Raised when a permutation is not in S_{k,l}. When membership fails because
// a monotone run is too long, the offending witness is attached so callers
// can show why.
class NotExtremalError : public Error {
 public:
  NotExtremalError(const std::string& message,
                   std::optional<SubPermutationWitness> witness)
      : Error(errc::not_extremal, message), witness_(std::move(witness)) {}

  const std::optional<SubPermutationWitness>& witness() const {
    return witness_;
  }

 private:
  std::optional<SubPermutationWitness> witness_;
};

// The grid-function of a member of S_{k,l} together with the two tableaux
// it induces. cell(t) = (longest decreasing run ending at position t,
// longest increasing run ending at position t); ranking(i,j) is the position
// mapped to cell (i,j); valuation(i,j) is the value sitting at the cell
// mirrored across rows, (l+1-i, j).
struct GridAssignment {
  int k = 0;
  int l = 0;
  std::vector<std::pair<int, int>> cells;  // cells[t-1] = (i, j), 1-based
  YoungTableau ranking;
  YoungTableau valuation;
};

// Requires |p| = k*l, lis(p) <= k and lds(p) <= l; throws NotExtremalError
// otherwise (with the long monotone witness attached when that is the cause).
GridAssignment grid_assignment(const Permutation& p, int k, int l);

// The bijection S_{k,l} -> pairs of l x k standard Young tableaux:
// phi(p) = (ranking, valuation) of the grid assignment.
std::pair<YoungTableau, YoungTableau> phi(const Permutation& p, int k, int l);

// Reconstructs the unique member with the given ranking and valuation: the
// value valuation(i,j) is placed at position ranking(l+1-i, j). Throws
// ShapeMismatch when the tableaux have different shapes.
Permutation phi_inverse(const YoungTableau& ranking,
                        const YoungTableau& valuation);

// Planar straight-line drawing data for a member of S_{k,l}: the point set
// {(t, a_t)} plus one edge for each pair of grid cells that agree in one
// coordinate and are adjacent in the other. Edges joining cells of the same
// grid row slope upward (positive_slope), edges joining cells of the same
// grid column slope downward. Row edges are listed first (by row, then
// column), column edges after (by row, then column); each edge has t1 < t2.
struct GridDrawing {
  struct Edge {
    int t1 = 0;
    int t2 = 0;
    bool positive_slope = false;
    bool operator==(const Edge&) const = default;
  };

  std::vector<std::pair<int, int>> points;
  std::vector<Edge> edges;
};

GridDrawing grid_drawing(const Permutation& p, int k, int l);

}  // namespace cyclic_es
