#ifndef ADIMAX_MATERIALS_HPP
#define ADIMAX_MATERIALS_HPP

#include <vector>

#include "adimax/errors.hpp"
#include "adimax/yee_grid.hpp"

namespace adimax {

/// One homogeneous axis-aligned box of the material partition.
/// coarse_id selects the coarse cuboid it belongs to, sub_id the subdomain
/// within it (0 = background). Several boxes may share (coarse_id, sub_id)
/// when a subdomain is split into grid-aligned pieces; they must then agree
/// on epsilon and mu.
struct MaterialBox {
    Vec3 lo{0, 0, 0};
    Vec3 hi{0, 0, 0};
    double epsilon = 1.0;
    double mu = 1.0;
    int coarse_id = 0;
    int sub_id = 0;
};

class CoverageGap : public ValidationError {
public:
    using ValidationError::ValidationError;
};
class Overlap : public ValidationError {
public:
    using ValidationError::ValidationError;
};
class MuVariesWithinCoarseCell : public ValidationError {
public:
    using ValidationError::ValidationError;
};
class MissingBackground : public ValidationError {
public:
    using ValidationError::ValidationError;
};

enum class Coefficient { epsilon, mu };

/// Validated piecewise-constant material layout with coefficients sampled
/// at every staggered point. Immutable after construction.
class MaterialMap {
public:
    const YeeGrid& grid() const { return grid_; }
    const std::vector<MaterialBox>& boxes() const { return boxes_; }

    /// epsilon sampled at the E_c staggered points
    const Array3& eps_at(int e_comp) const { return eps_at_[e_comp]; }
    /// mu sampled at the H_c staggered points
    const Array3& mu_at(int h_comp) const { return mu_at_[h_comp]; }

private:
    friend MaterialMap build_material_map(const YeeGrid&, std::vector<MaterialBox>);
    YeeGrid grid_;
    std::vector<MaterialBox> boxes_;
    std::array<Array3, 3> eps_at_;
    std::array<Array3, 3> mu_at_;
};

/// Validates the partition (coverage, overlaps, mu constant per coarse
/// cuboid, consistent subdomain values) and samples both coefficients at
/// all staggered points. Relative geometric tolerance: 1e-12 of volume.
MaterialMap build_material_map(const YeeGrid& grid, std::vector<MaterialBox> boxes);

/// Coefficient value at a point of closure(Q). On the interior of a box:
/// that box's value. Exactly on an interface: arithmetic mean over all
/// boxes whose closure contains the point (order-independent).
double sample_coefficient(const MaterialMap& map, Coefficient which, const Vec3& location);

/// max over coarse cuboids i and inclusions l >= 1 of
/// (eps_{i,l} - eps_{i,0})^2 / (eps_{i,l} * eps_{i,0}); 0 when no inclusions.
double jump_ratio(const MaterialMap& map);

/// The (background, inclusion) epsilon pair attaining jump_ratio.
/// Returns {eps, eps} for layouts without inclusions.
std::array<double, 2> extreme_eps_pair(const MaterialMap& map);

} // namespace adimax

#endif
