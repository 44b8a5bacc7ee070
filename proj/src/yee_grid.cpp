#include "adimax/yee_grid.hpp"

#include <string>

#include "adimax/errors.hpp"

namespace adimax {

YeeGrid make_grid(const Index3& n, const Vec3& origin, const Vec3& extent) {
    for (int a = 0; a < 3; ++a) {
        if (n[a] < 2)
            throw ValidationError("make_grid: cell count along axis " +
                                  std::to_string(a) + " is " + std::to_string(n[a]) +
                                  ", need at least 2");
        if (!(extent[a] > 0.0))
            throw ValidationError("make_grid: extent along axis " +
                                  std::to_string(a) + " is " + std::to_string(extent[a]) +
                                  ", must be positive");
    }
    YeeGrid g;
    g.n = n;
    g.origin = origin;
    g.extent = extent;
    for (int a = 0; a < 3; ++a) g.h[a] = extent[a] / n[a];
    return g;
}

namespace {

std::array<int, 3> component_shape(const YeeGrid& g, FieldComponent fc) {
    return is_electric(fc) ? g.e_shape(axis_of(fc)) : g.h_shape(axis_of(fc));
}

// offset of the DOF relative to the integer lattice, in half cells
std::array<double, 3> component_offset(FieldComponent fc) {
    const int c = axis_of(fc);
    std::array<double, 3> off{};
    for (int a = 0; a < 3; ++a) {
        const bool half = is_electric(fc) ? (a == c) : (a != c);
        off[a] = half ? 0.5 : 0.0;
    }
    return off;
}

} // namespace

Vec3 staggered_location(const YeeGrid& grid, FieldComponent fc, const Index3& idx) {
    const auto shape = component_shape(grid, fc);
    for (int a = 0; a < 3; ++a) {
        if (idx[a] < 0 || idx[a] >= shape[a])
            throw ValidationError("staggered_location: index " + std::to_string(idx[a]) +
                                  " out of range [0," + std::to_string(shape[a]) +
                                  ") along axis " + std::to_string(a));
    }
    const auto off = component_offset(fc);
    Vec3 x;
    // evaluate as origin + extent * (fraction of the axis) so that grid
    // positions land exactly on representable box corners like 0.5
    for (int a = 0; a < 3; ++a)
        x[a] = grid.origin[a] + grid.extent[a] * ((idx[a] + off[a]) / grid.n[a]);
    return x;
}

FieldState zero_state(const YeeGrid& grid) {
    FieldState s;
    for (int c = 0; c < 3; ++c) {
        const auto es = grid.e_shape(c);
        const auto hs = grid.h_shape(c);
        s.e[c] = Array3(es[0], es[1], es[2]);
        s.h[c] = Array3(hs[0], hs[1], hs[2]);
    }
    s.time = 0.0;
    return s;
}

void enforce_pec(const YeeGrid& grid, FieldState& state) {
    (void)grid;
    for (int c = 0; c < 3; ++c) {
        Array3& E = state.e[c];
        const auto d = E.dims();
        for (int a = 0; a < 3; ++a) {
            if (a == c) continue; // E_c is normal to faces with normal c
            // zero the two boundary planes along axis a
            for (int lo_hi = 0; lo_hi < 2; ++lo_hi) {
                const int fixed = lo_hi == 0 ? 0 : d[a] - 1;
                const int u = (a == 0) ? 1 : 0;
                const int v = (a == 2) ? 1 : 2;
                for (int iu = 0; iu < d[u]; ++iu)
                    for (int iv = 0; iv < d[v]; ++iv) {
                        int idx[3];
                        idx[a] = fixed;
                        idx[u] = iu;
                        idx[v] = iv;
                        E(idx[0], idx[1], idx[2]) = 0.0;
                    }
            }
        }
    }
}

void add_scaled(FieldState& acc, double c, const FieldState& other) {
    for (int cc = 0; cc < 3; ++cc) {
        double* a = acc.e[cc].data();
        const double* b = other.e[cc].data();
        const std::size_t ne = acc.e[cc].size();
        for (std::size_t i = 0; i < ne; ++i) a[i] += c * b[i];
        a = acc.h[cc].data();
        b = other.h[cc].data();
        const std::size_t nh = acc.h[cc].size();
        for (std::size_t i = 0; i < nh; ++i) a[i] += c * b[i];
    }
}

FieldState scaled_sum(const FieldState& a, double c, const FieldState& b) {
    FieldState out = a;
    add_scaled(out, c, b);
    return out;
}

} // namespace adimax
