#ifndef PHDG_MESH_HPP
#define PHDG_MESH_HPP

#include <utility>
#include <vector>

namespace phdg {

/// Ordered subdivision of a 1-D domain [a,b] into N elements.
/// Vertices are stored once, so the interface coordinate seen by two
/// adjacent elements is bit-identical.
class Mesh1D {
public:
    /// Mesh from an explicit, strictly increasing vertex list (N+1 entries).
    explicit Mesh1D(std::vector<double> vertices);

    double a() const { return vertices_.front(); }
    double b() const { return vertices_.back(); }
    int num_elements() const { return static_cast<int>(vertices_.size()) - 1; }

    const std::vector<double>& vertices() const { return vertices_; }
    double vertex(int i) const;

    /// (z_i, z_{i+1}) of element i, 0-based. Throws on out-of-range index.
    std::pair<double, double> element_interval(int i) const;

    double element_width(int i) const;

private:
    std::vector<double> vertices_;
};

/// Equidistant mesh: z_i = a + i * (b - a) / n, endpoints exact.
Mesh1D build_uniform_mesh(double a, double b, int n);

} // namespace phdg

#endif
