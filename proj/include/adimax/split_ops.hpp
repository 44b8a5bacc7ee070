#ifndef ADIMAX_SPLIT_OPS_HPP
#define ADIMAX_SPLIT_OPS_HPP

#include <vector>

#include "adimax/materials.hpp"
#include "adimax/yee_grid.hpp"

namespace adimax {

/// The two halves of the dimension splitting of the Maxwell operator.
/// With curl = C1 - C2 (each C_j holding three of the six partial
/// derivatives), A couples
///   dE1/dt = (1/eps) d2 H3,  dE2/dt = (1/eps) d3 H1,  dE3/dt = (1/eps) d1 H2,
///   dH1/dt = (1/mu)  d3 E2,  dH2/dt = (1/mu)  d1 E3,  dH3/dt = (1/mu)  d2 E1,
/// and B the complementary pairs with negative sign. A + B equals the full
/// discrete Maxwell operator.
enum class SplitOp { A, B };

/// One E/H coupling pair of a split operator: the fields exchange
/// staggered central differences along `axis` with weight `sign`.
struct CouplingPair {
    int e_comp;
    int h_comp;
    int axis;
    double sign;
};

/// The three coupling pairs of A or B.
const std::array<CouplingPair, 3>& coupling_pairs(SplitOp op);

/// acc += scale * (L state), where L is the chosen split operator.
/// E rows on the boundary (pinned tangential entries) produce zero;
/// H rows next to the boundary read the pinned zero E values.
/// Re-pins acc afterwards, so acc must hold zero pinned entries on entry.
void accumulate_split(SplitOp op, const FieldState& state, const MaterialMap& map,
                      double scale, FieldState& acc);

/// Returns L * state.
FieldState apply_split(SplitOp op, const FieldState& state, const MaterialMap& map);

/// Batched tridiagonal systems, one per grid line. Row m of line l lives at
/// flat index l * line_length + m in all four arrays. After assembly the
/// diagonal satisfies |diag| >= 1 (identity plus a positive semidefinite
/// correction), so the Thomas algorithm needs no pivoting.
struct TridiagonalBatch {
    std::vector<double> lower, diag, upper, rhs;
    int line_count = 0;
    int line_length = 0;

    void resize(int lines, int length);
};

/// Solves every line by forward elimination and back substitution.
/// Throws SolverError on a vanishing pivot (an assembly bug, not user error).
std::vector<double> thomas_solve(const TridiagonalBatch& batch);

/// Solves (I - (tau/2) L) w = input. Each coupling pair reduces, per grid
/// line along its axis, to a tridiagonal system in the E component
/// (eliminate H, solve, recover H algebraically). Tangential E on the
/// boundary is fixed to zero (Dirichlet rows). Accepts any nonzero tau;
/// negative tau steps backwards in time.
FieldState solve_implicit(SplitOp op, double tau, const FieldState& input,
                          const MaterialMap& map);

/// Weighted inner product: sum of eps*Ea*Eb + mu*Ha*Hb over all staggered
/// points times the cell volume. Deterministic (Kahan, fixed order).
double weighted_dot(const FieldState& a, const FieldState& b, const MaterialMap& map);

} // namespace adimax

#endif
