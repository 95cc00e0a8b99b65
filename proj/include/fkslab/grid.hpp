// Periodic grid on [-L, L)^dim and the sampled fields that live on it.
//
// Conventions used throughout the library:
//   * grid points        x_i = -L + i*h per axis,  h = 2L/N
//   * Fourier modes      m in [-N/2, N/2) per axis (FFT index order)
//   * wavenumbers        k = (pi/L) * m
// Spatial quadrature is the midpoint rule with uniform weight h^dim.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fks {

class Grid {
public:
    Grid(int dim, double half_width, int points_per_dim)
        : dim_(dim), half_width_(half_width), n_(points_per_dim) {
        if (dim < 1 || dim > 3)
            throw std::domain_error("Grid: dim must be 1, 2 or 3");
        if (!(half_width > 0.0))
            throw std::domain_error("Grid: half_width must be positive");
        if (n_ < 16 || (n_ & (n_ - 1)) != 0)
            throw std::domain_error("Grid: points_per_dim must be a power of two >= 16");
        std::size_t total = 1;
        for (int d = 0; d < dim_; ++d) total *= static_cast<std::size_t>(n_);
        size_ = total;
    }

    int dim() const { return dim_; }
    double half_width() const { return half_width_; }
    int points_per_dim() const { return n_; }
    std::size_t size() const { return size_; }
    double spacing() const { return 2.0 * half_width_ / n_; }
    double cell_volume() const { return std::pow(spacing(), dim_); }
    double box_measure() const { return std::pow(2.0 * half_width_, dim_); }

    // Signed integer mode for FFT index j on one axis.
    int mode(int fft_index) const { return fft_index < n_ / 2 ? fft_index : fft_index - n_; }
    double wavenumber(int fft_index) const {
        return (M_PI / half_width_) * static_cast<double>(mode(fft_index));
    }
    double coord(int index) const { return -half_width_ + index * spacing(); }

    std::array<int, 3> unflatten(std::size_t flat) const {
        std::array<int, 3> idx{0, 0, 0};
        for (int d = dim_ - 1; d >= 0; --d) {
            idx[d] = static_cast<int>(flat % static_cast<std::size_t>(n_));
            flat /= static_cast<std::size_t>(n_);
        }
        return idx;
    }

    std::array<double, 3> point(std::size_t flat) const {
        auto idx = unflatten(flat);
        std::array<double, 3> x{0.0, 0.0, 0.0};
        for (int d = 0; d < dim_; ++d) x[d] = coord(idx[d]);
        return x;
    }

    bool operator==(const Grid& other) const {
        return dim_ == other.dim_ && half_width_ == other.half_width_ && n_ == other.n_;
    }
    bool operator!=(const Grid& other) const { return !(*this == other); }

private:
    int dim_;
    double half_width_;
    int n_;
    std::size_t size_;
};

// Real scalar field sampled on a Grid.
class Field {
public:
    explicit Field(const Grid& grid, double fill = 0.0)
        : grid_(grid), values_(grid.size(), fill) {}
    Field(const Grid& grid, std::vector<double> values)
        : grid_(grid), values_(std::move(values)) {
        if (values_.size() != grid_.size())
            throw std::invalid_argument("Field: value count does not match grid");
    }

    const Grid& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }
    double& operator[](std::size_t i) { return values_[i]; }
    double operator[](std::size_t i) const { return values_[i]; }
    std::vector<double>& values() { return values_; }
    const std::vector<double>& values() const { return values_; }

    bool is_finite() const {
        for (double v : values_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : values_) m = std::max(m, std::abs(v));
        return m;
    }
    double min() const {
        double m = values_.empty() ? 0.0 : values_[0];
        for (double v : values_) m = std::min(m, v);
        return m;
    }
    double mean() const {
        double s = 0.0;
        for (double v : values_) s += v;
        return s / static_cast<double>(values_.size());
    }
    // Grid L^2 norm, midpoint quadrature.
    double l2_norm() const {
        double s = 0.0;
        for (double v : values_) s += v * v;
        return std::sqrt(s * grid_.cell_volume());
    }

    Field& operator+=(const Field& o) { binary_check(o); for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i]; return *this; }
    Field& operator-=(const Field& o) { binary_check(o); for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i]; return *this; }
    Field& operator*=(double c) { for (double& v : values_) v *= c; return *this; }

    friend Field operator+(Field a, const Field& b) { a += b; return a; }
    friend Field operator-(Field a, const Field& b) { a -= b; return a; }
    friend Field operator*(double c, Field a) { a *= c; return a; }
    friend Field operator*(Field a, double c) { a *= c; return a; }

    // Pointwise product (no dealiasing; see spectral_ops for the dealiased path).
    friend Field pointwise_product(const Field& a, const Field& b) {
        a.binary_check(b);
        Field out(a.grid_);
        for (std::size_t i = 0; i < a.values_.size(); ++i) out.values_[i] = a.values_[i] * b.values_[i];
        return out;
    }

private:
    void binary_check(const Field& o) const {
        if (grid_ != o.grid_) throw std::invalid_argument("Field: grid mismatch");
    }

    Grid grid_;
    std::vector<double> values_;
};

// Complex Fourier coefficients of a real field (conjugate-symmetric, FFT index
// order, amplitude normalization: coeffs are mode amplitudes, inverse transform
// is the plain mode sum).
class SpectralField {
public:
    explicit SpectralField(const Grid& grid)
        : grid_(grid), coeffs_(grid.size(), {0.0, 0.0}) {}

    const Grid& grid() const { return grid_; }
    std::size_t size() const { return coeffs_.size(); }
    std::complex<double>& operator[](std::size_t i) { return coeffs_[i]; }
    const std::complex<double>& operator[](std::size_t i) const { return coeffs_[i]; }
    std::vector<std::complex<double>>& coeffs() { return coeffs_; }
    const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }

private:
    Grid grid_;
    std::vector<std::complex<double>> coeffs_;
};

inline double pointwise_magnitude(const std::vector<Field>& v, std::size_t i) {
    double s = 0.0;
    for (const auto& comp : v) s += comp[i] * comp[i];
    return std::sqrt(s);
}

// Euclidean magnitude |v(x)| of a vector field, as a scalar field.
inline Field magnitude_field(const std::vector<Field>& v) {
    if (v.empty()) throw std::invalid_argument("magnitude_field: empty vector field");
    Field out(v.front().grid());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = pointwise_magnitude(v, i);
    return out;
}

}  // namespace fks
