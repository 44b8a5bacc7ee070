#ifndef ADIMAX_ARRAY3_HPP
#define ADIMAX_ARRAY3_HPP

#include <array>
#include <cstddef>
#include <vector>

namespace adimax {

/// Dense 3D scalar array. Fixed index order across the whole project:
/// (i, j, k) with k contiguous (row-major, last index fastest).
class Array3 {
public:
    Array3() = default;
    Array3(int n0, int n1, int n2)
        : n_{n0, n1, n2},
          data_(static_cast<std::size_t>(n0) * n1 * n2, 0.0) {}

    int dim(int axis) const { return n_[axis]; }
    const std::array<int, 3>& dims() const { return n_; }
    std::size_t size() const { return data_.size(); }

    std::size_t offset(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * n_[1] + j) * n_[2] + k;
    }
    /// Element stride along one axis, for walking grid lines.
    std::size_t stride(int axis) const {
        switch (axis) {
            case 0: return static_cast<std::size_t>(n_[1]) * n_[2];
            case 1: return static_cast<std::size_t>(n_[2]);
            default: return 1;
        }
    }

    double& operator()(int i, int j, int k) { return data_[offset(i, j, k)]; }
    double operator()(int i, int j, int k) const { return data_[offset(i, j, k)]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    void fill(double v) { data_.assign(data_.size(), v); }

    bool same_shape(const Array3& o) const { return n_ == o.n_; }

private:
    std::array<int, 3> n_{0, 0, 0};
    std::vector<double> data_;
};

} // namespace adimax

#endif
