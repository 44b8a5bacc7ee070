#ifndef ADIMAX_YEE_GRID_HPP
#define ADIMAX_YEE_GRID_HPP

#include <array>

#include "adimax/array3.hpp"

namespace adimax {

using Vec3 = std::array<double, 3>;
using Index3 = std::array<int, 3>;

/// Staggered Yee grid on the cuboid Q = prod_j (origin_j, origin_j + extent_j),
/// split into nx * ny * nz uniform cells of size (hx, hy, hz).
///
/// Degree-of-freedom shape table (array dims along axes 0,1,2):
///
///   component | location                         | shape
///   ----------|----------------------------------|----------------------
///   E1        | ((i+1/2)hx,       j hy,    k hz) | (nx,   ny+1, nz+1)
///   E2        | (     i hx, (j+1/2)hy,    k hz)  | (nx+1, ny,   nz+1)
///   E3        | (     i hx,       j hy, (k+1/2)hz) | (nx+1, ny+1, nz)
///   H1        | (     i hx, (j+1/2)hy, (k+1/2)hz) | (nx+1, ny,   nz)
///   H2        | ((i+1/2)hx,       j hy, (k+1/2)hz) | (nx,   ny+1, nz)
///   H3        | ((i+1/2)hx, (j+1/2)hy,    k hz)  | (nx,   ny,   nz+1)
///
/// i.e. E_c sits on edge midpoints parallel to axis c, H_c on face centers
/// with normal c. Tangential E entries on the domain boundary are stored
/// but pinned to zero (perfectly conducting walls).
struct YeeGrid {
    Index3 n{0, 0, 0};      ///< cells per axis, each >= 2
    Vec3 origin{0, 0, 0};
    Vec3 extent{0, 0, 0};
    Vec3 h{0, 0, 0};        ///< cell spacing, extent[a] / n[a]

    double cell_volume() const { return h[0] * h[1] * h[2]; }

    std::array<int, 3> e_shape(int c) const {
        return {n[0] + (c == 0 ? 0 : 1), n[1] + (c == 1 ? 0 : 1),
                n[2] + (c == 2 ? 0 : 1)};
    }
    std::array<int, 3> h_shape(int c) const {
        return {n[0] + (c == 0 ? 1 : 0), n[1] + (c == 1 ? 1 : 0),
                n[2] + (c == 2 ? 1 : 0)};
    }
};

/// Identifies one of the six staggered field components.
enum class FieldComponent { e1, e2, e3, h1, h2, h3 };

inline bool is_electric(FieldComponent fc) { return static_cast<int>(fc) < 3; }
inline int axis_of(FieldComponent fc) { return static_cast<int>(fc) % 3; }

/// The six staggered scalar arrays plus the time their values refer to.
/// Invariant: tangential E entries on the boundary are zero; every
/// operation that writes fields re-establishes this (enforce_pec).
struct FieldState {
    std::array<Array3, 3> e;
    std::array<Array3, 3> h;
    double time = 0.0;

    Array3& comp(FieldComponent fc) {
        return is_electric(fc) ? e[axis_of(fc)] : h[axis_of(fc)];
    }
    const Array3& comp(FieldComponent fc) const {
        return is_electric(fc) ? e[axis_of(fc)] : h[axis_of(fc)];
    }

    bool same_shape(const FieldState& o) const {
        for (int c = 0; c < 3; ++c)
            if (!e[c].same_shape(o.e[c]) || !h[c].same_shape(o.h[c])) return false;
        return true;
    }
};

/// Validates sizes and builds a grid with derived spacings.
YeeGrid make_grid(const Index3& n, const Vec3& origin, const Vec3& extent);

/// Physical coordinates of one degree of freedom.
/// Throws ValidationError for an index outside the component's shape.
Vec3 staggered_location(const YeeGrid& grid, FieldComponent fc, const Index3& idx);

/// All-zero fields at time 0.
FieldState zero_state(const YeeGrid& grid);

/// Zeroes tangential E entries on the boundary of Q.
void enforce_pec(const YeeGrid& grid, FieldState& state);

// elementwise helpers shared by the stepper and the tests
void add_scaled(FieldState& acc, double c, const FieldState& other);
FieldState scaled_sum(const FieldState& a, double c, const FieldState& b);

} // namespace adimax

#endif
