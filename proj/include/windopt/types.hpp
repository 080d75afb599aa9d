#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace windopt {

/// Dense row-major matrix of doubles. Minimal: the solvers only need
/// contiguous storage and element access.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Planar turbine positions. The outer decision variable, stored as
/// separate coordinate vectors; flat order is [x; y].
struct Layout {
    std::vector<double> x;
    std::vector<double> y;

    Layout() = default;
    Layout(std::vector<double> xs, std::vector<double> ys) : x(std::move(xs)), y(std::move(ys)) {
        if (x.size() != y.size())
            throw std::invalid_argument("Layout: coordinate vectors differ in length");
    }

    std::size_t size() const { return x.size(); }

    std::vector<double> to_flat() const {
        std::vector<double> flat(2 * size());
        for (std::size_t i = 0; i < size(); ++i) {
            flat[i] = x[i];
            flat[size() + i] = y[i];
        }
        return flat;
    }

    static Layout from_flat(const std::vector<double>& flat) {
        if (flat.size() % 2 != 0)
            throw std::invalid_argument("Layout: flat vector length must be even");
        const std::size_t n = flat.size() / 2;
        Layout l;
        l.x.assign(flat.begin(), flat.begin() + n);
        l.y.assign(flat.begin() + n, flat.end());
        return l;
    }

    bool finite() const {
        for (std::size_t i = 0; i < size(); ++i)
            if (!std::isfinite(x[i]) || !std::isfinite(y[i])) return false;
        return true;
    }
};

/// Per-turbine yaw angles in radians, relative to the scenario's wind
/// direction (rotor misalignment).
struct YawVector {
    std::vector<double> angles;

    YawVector() = default;
    explicit YawVector(std::vector<double> a) : angles(std::move(a)) {}
    static YawVector zeros(std::size_t n) { return YawVector(std::vector<double>(n, 0.0)); }

    std::size_t size() const { return angles.size(); }
    double operator[](std::size_t i) const { return angles[i]; }
    double& operator[](std::size_t i) { return angles[i]; }
};

/// Discrete wind-direction distribution: W bin-midpoint angles (radians,
/// reference due East) with scenario probabilities.
struct WindRose {
    std::vector<double> angles;
    std::vector<double> probabilities;

    std::size_t size() const { return angles.size(); }

    /// Throws std::invalid_argument unless angles are strictly increasing,
    /// equally spaced in [0, 2pi) and probabilities are nonnegative and sum
    /// to 1 within 1e-12.
    void validate() const;
};

/// Rectangular feasible region [0, x_max] x [0, y_max] with a minimum
/// pairwise turbine separation.
struct FarmRegion {
    double x_max = 0.0;
    double y_max = 0.0;
    double min_separation = 0.0;

    void validate() const {
        if (!(x_max > 0.0) || !(y_max > 0.0))
            throw std::invalid_argument("FarmRegion: extents must be positive");
        if (!(min_separation >= 0.0))
            throw std::invalid_argument("FarmRegion: min_separation must be nonnegative");
    }
};

/// One violated layout constraint with its slack deficit in meters.
struct Violation {
    enum class Kind { Perimeter, Separation };
    Kind kind;
    int i;            // turbine index
    int j;            // second turbine for Separation, -1 otherwise
    double magnitude; // meters of missing slack, > 0
};

using ViolationReport = std::vector<Violation>;

} // namespace windopt
