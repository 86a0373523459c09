#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace cutlab {

/// Invalid construction parameters (non-integer 1/h, misaligned windows, ...).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two operands live on incompatible grids (or have incompatible shapes).
struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Uniform grid over [-L, L] with spacing h = 1/per_unit.
///
/// L is a positive integer and 1/h a positive integer, so unit intervals
/// [j, j+1] always align with grid points.
struct GridSpec {
    int half_length = 16;  // L
    int per_unit = 256;    // 1/h

    GridSpec() = default;
    GridSpec(int L, int m);

    /// Construct from a real spacing; throws ConfigError unless 1/h is
    /// an integer (within 1e-9 relative).
    static GridSpec from_spacing(int L, double h);

    double spacing() const { return 1.0 / per_unit; }
    std::size_t point_count() const {
        return static_cast<std::size_t>(2 * half_length) * per_unit + 1;
    }
    double x(std::size_t i) const { return -half_length + static_cast<double>(i) * spacing(); }

    /// Grid index of a point that must lie on the grid (throws otherwise).
    std::size_t index_of(double x) const;

    bool operator==(const GridSpec&) const = default;
};

/// Sampled function u: [-L, L] -> R^n, extended by zero outside the domain.
/// Immutable after construction; all operations return fresh values.
class GridFunction {
  public:
    GridFunction(GridSpec spec, int components, std::vector<double> samples);

    static GridFunction zeros(GridSpec spec, int components = 1);
    /// Pointwise samples of a scalar closed-form function (n = 1).
    static GridFunction sample(GridSpec spec, const std::function<double(double)>& f);
    /// Vector-valued sampling: f(x, c) gives component c at position x.
    static GridFunction sample(GridSpec spec, int components,
                               const std::function<double(double, int)>& f);

    const GridSpec& spec() const { return spec_; }
    int components() const { return components_; }
    std::size_t size() const { return spec_.point_count(); }
    double x(std::size_t i) const { return spec_.x(i); }

    double operator()(std::size_t i, int c = 0) const {
        return samples_[i * components_ + c];
    }
    const std::vector<double>& samples() const { return samples_; }

    double max_abs() const;

  private:
    GridSpec spec_;
    int components_;
    std::vector<double> samples_;  // row i = u(-L + i h), row-major over components
};

/// Grid-aligned interval [a, b] within [-L, L].
struct Window {
    double a;
    double b;

    struct IndexRange {
        std::size_t first;
        std::size_t last;  // inclusive
    };
    /// Indices of the window endpoints; throws ConfigError if either endpoint
    /// is off-grid or the window leaves the domain.
    IndexRange indices(const GridSpec& spec) const;

    static Window unit(int j) { return Window{static_cast<double>(j), static_cast<double>(j + 1)}; }
};

// -- operations ------------------------------------------------------------

/// u(x - k h) with zero fill from the boundary. Requires |k| h < 2L.
GridFunction translate(const GridFunction& u, long k);

/// Central finite differences in the interior, one-sided at the two
/// domain boundary points.
GridFunction derivative(const GridFunction& u);

/// Componentwise product with a scalar multiplier field (w has n = 1).
GridFunction pointwise_multiply(const GridFunction& u, const GridFunction& w);

GridFunction operator+(const GridFunction& u, const GridFunction& v);
GridFunction operator-(const GridFunction& u, const GridFunction& v);
GridFunction operator*(double a, const GridFunction& u);

/// CSV with header "x,u1,...,un", 17 significant digits.
void write_csv(const GridFunction& u, std::ostream& out);
void write_csv(const GridFunction& u, const std::string& path);
GridFunction read_csv(std::istream& in);
GridFunction read_csv(const std::string& path);

void require_same_grid(const GridFunction& u, const GridFunction& v);

}  // namespace cutlab
