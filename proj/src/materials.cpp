#include "adimax/materials.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <string>

namespace adimax {

namespace {

constexpr double kRelTol = 1e-12;

bool closure_contains(const MaterialBox& b, const Vec3& p) {
    for (int a = 0; a < 3; ++a)
        if (p[a] < b.lo[a] || p[a] > b.hi[a]) return false;
    return true;
}

double box_volume(const MaterialBox& b) {
    return (b.hi[0] - b.lo[0]) * (b.hi[1] - b.lo[1]) * (b.hi[2] - b.lo[2]);
}

double overlap_volume(const MaterialBox& a, const MaterialBox& b) {
    double v = 1.0;
    for (int ax = 0; ax < 3; ++ax) {
        const double w = std::min(a.hi[ax], b.hi[ax]) - std::max(a.lo[ax], b.lo[ax]);
        if (w <= 0.0) return 0.0;
        v *= w;
    }
    return v;
}

std::string box_str(const MaterialBox& b, std::size_t idx) {
    std::ostringstream os;
    os << "box[" << idx << "] lo=(" << b.lo[0] << "," << b.lo[1] << "," << b.lo[2]
       << ") hi=(" << b.hi[0] << "," << b.hi[1] << "," << b.hi[2]
       << ") eps=" << b.epsilon << " mu=" << b.mu << " coarse=" << b.coarse_id
       << " sub=" << b.sub_id;
    return os.str();
}

double sample_point(const std::vector<MaterialBox>& boxes, Coefficient which,
                    const Vec3& p) {
    // collect matching values sorted, so the mean is independent of the
    // order the boxes were supplied in
    double vals[16];
    int cnt = 0;
    for (const auto& b : boxes) {
        if (!closure_contains(b, p)) continue;
        const double v = which == Coefficient::epsilon ? b.epsilon : b.mu;
        if (cnt < 16) vals[cnt] = v;
        ++cnt;
    }
    if (cnt == 0) {
        std::ostringstream os;
        os << "sample_coefficient: point (" << p[0] << "," << p[1] << "," << p[2]
           << ") is outside the material layout";
        throw ValidationError(os.str());
    }
    if (cnt == 1) return vals[0];
    const int m = std::min(cnt, 16);
    std::sort(vals, vals + m);
    double sum = 0.0;
    for (int i = 0; i < m; ++i) sum += vals[i];
    return sum / cnt;
}

} // namespace

MaterialMap build_material_map(const YeeGrid& grid, std::vector<MaterialBox> boxes) {
    const double q_volume = grid.extent[0] * grid.extent[1] * grid.extent[2];
    const double vol_tol = kRelTol * q_volume;

    if (boxes.empty()) throw ValidationError("build_material_map: no boxes given");

    for (std::size_t i = 0; i < boxes.size(); ++i) {
        const auto& b = boxes[i];
        for (int a = 0; a < 3; ++a) {
            if (!(b.lo[a] < b.hi[a]))
                throw ValidationError("build_material_map: degenerate " + box_str(b, i));
            if (b.lo[a] < grid.origin[a] - vol_tol ||
                b.hi[a] > grid.origin[a] + grid.extent[a] + vol_tol)
                throw ValidationError("build_material_map: outside Q: " + box_str(b, i));
        }
        if (!(b.epsilon > 0.0) || !(b.mu > 0.0))
            throw ValidationError("build_material_map: nonpositive coefficient in " +
                                  box_str(b, i));
    }

    // boxes sharing (coarse_id, sub_id) describe one subdomain and must agree
    std::map<std::pair<int, int>, std::size_t> group_rep;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        const auto key = std::make_pair(boxes[i].coarse_id, boxes[i].sub_id);
        auto [it, inserted] = group_rep.emplace(key, i);
        if (!inserted) {
            const auto& r = boxes[it->second];
            if (r.epsilon != boxes[i].epsilon || r.mu != boxes[i].mu)
                throw ValidationError(
                    "build_material_map: subdomain (" + std::to_string(key.first) + "," +
                    std::to_string(key.second) + ") has inconsistent values: " +
                    box_str(r, it->second) + " vs " + box_str(boxes[i], i));
        }
    }

    // mu may not change within a coarse cuboid
    std::map<int, std::size_t> coarse_rep;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        auto [it, inserted] = coarse_rep.emplace(boxes[i].coarse_id, i);
        if (!inserted && boxes[it->second].mu != boxes[i].mu)
            throw MuVariesWithinCoarseCell(
                "build_material_map: mu varies within coarse cuboid " +
                std::to_string(boxes[i].coarse_id) + ": " +
                box_str(boxes[it->second], it->second) + " vs " + box_str(boxes[i], i));
    }

    for (std::size_t i = 0; i < boxes.size(); ++i)
        for (std::size_t j = i + 1; j < boxes.size(); ++j)
            if (overlap_volume(boxes[i], boxes[j]) > vol_tol)
                throw Overlap("build_material_map: interior overlap between " +
                              box_str(boxes[i], i) + " and " + box_str(boxes[j], j));

    double covered = 0.0;
    for (const auto& b : boxes) covered += box_volume(b);
    if (covered < q_volume - vol_tol) {
        // locate a witness cell center for the message
        for (int i = 0; i < grid.n[0]; ++i)
            for (int j = 0; j < grid.n[1]; ++j)
                for (int k = 0; k < grid.n[2]; ++k) {
                    Vec3 p;
                    const double idx[3] = {i + 0.5, j + 0.5, k + 0.5};
                    for (int a = 0; a < 3; ++a)
                        p[a] = grid.origin[a] + grid.extent[a] * (idx[a] / grid.n[a]);
                    bool hit = false;
                    for (const auto& b : boxes)
                        if (closure_contains(b, p)) { hit = true; break; }
                    if (!hit) {
                        std::ostringstream os;
                        os << "build_material_map: boxes cover " << covered << " of "
                           << q_volume << "; uncovered near (" << p[0] << "," << p[1]
                           << "," << p[2] << ")";
                        throw CoverageGap(os.str());
                    }
                }
        std::ostringstream os;
        os << "build_material_map: boxes cover " << covered << " of " << q_volume;
        throw CoverageGap(os.str());
    }

    MaterialMap map;
    map.grid_ = grid;
    map.boxes_ = std::move(boxes);

    for (int c = 0; c < 3; ++c) {
        const auto es = grid.e_shape(c);
        map.eps_at_[c] = Array3(es[0], es[1], es[2]);
        for (int i = 0; i < es[0]; ++i)
            for (int j = 0; j < es[1]; ++j)
                for (int k = 0; k < es[2]; ++k) {
                    const Vec3 p = staggered_location(
                        grid, static_cast<FieldComponent>(c), {i, j, k});
                    map.eps_at_[c](i, j, k) =
                        sample_point(map.boxes_, Coefficient::epsilon, p);
                }
        const auto hs = grid.h_shape(c);
        map.mu_at_[c] = Array3(hs[0], hs[1], hs[2]);
        for (int i = 0; i < hs[0]; ++i)
            for (int j = 0; j < hs[1]; ++j)
                for (int k = 0; k < hs[2]; ++k) {
                    const Vec3 p = staggered_location(
                        grid, static_cast<FieldComponent>(c + 3), {i, j, k});
                    map.mu_at_[c](i, j, k) = sample_point(map.boxes_, Coefficient::mu, p);
                }
    }
    return map;
}

double sample_coefficient(const MaterialMap& map, Coefficient which, const Vec3& p) {
    return sample_point(map.boxes(), which, p);
}

namespace {

// background epsilon per coarse id, plus inclusion epsilons
struct CoarseEps {
    bool has_background = false;
    double background = 0.0;
    std::vector<double> inclusions;
};

std::map<int, CoarseEps> collect_eps(const MaterialMap& map) {
    std::map<int, CoarseEps> out;
    std::map<std::pair<int, int>, double> seen;
    for (const auto& b : map.boxes()) {
        const auto key = std::make_pair(b.coarse_id, b.sub_id);
        if (!seen.emplace(key, b.epsilon).second) continue;
        auto& ce = out[b.coarse_id];
        if (b.sub_id == 0) {
            ce.has_background = true;
            ce.background = b.epsilon;
        } else {
            ce.inclusions.push_back(b.epsilon);
        }
    }
    return out;
}

} // namespace

double jump_ratio(const MaterialMap& map) {
    double worst = 0.0;
    for (const auto& [cid, ce] : collect_eps(map)) {
        if (ce.inclusions.empty()) continue;
        if (!ce.has_background)
            throw MissingBackground("jump_ratio: coarse cuboid " + std::to_string(cid) +
                                    " has inclusions but no background (sub_id 0)");
        for (const double el : ce.inclusions) {
            const double d = el - ce.background;
            worst = std::max(worst, d * d / (el * ce.background));
        }
    }
    return worst;
}

std::array<double, 2> extreme_eps_pair(const MaterialMap& map) {
    double worst = -1.0;
    std::array<double, 2> pair{1.0, 1.0};
    bool any = false;
    for (const auto& [cid, ce] : collect_eps(map)) {
        if (ce.inclusions.empty()) {
            if (!any && worst < 0.0) pair = {ce.background, ce.background};
            continue;
        }
        if (!ce.has_background)
            throw MissingBackground("extreme_eps_pair: coarse cuboid " +
                                    std::to_string(cid) +
                                    " has inclusions but no background (sub_id 0)");
        any = true;
        for (const double el : ce.inclusions) {
            const double d = el - ce.background;
            const double r = d * d / (el * ce.background);
            if (r > worst) {
                worst = r;
                pair = {ce.background, el};
            }
        }
    }
    return pair;
}

} // namespace adimax
