#include "phdg/mesh.hpp"

#include <stdexcept>
#include <string>

namespace phdg {

Mesh1D::Mesh1D(std::vector<double> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2)
        throw std::invalid_argument("Mesh1D: need at least 2 vertices");
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
        if (!(vertices_[i] < vertices_[i + 1]))
            throw std::invalid_argument("Mesh1D: vertices must be strictly increasing");
    }
}

double Mesh1D::vertex(int i) const {
    if (i < 0 || i >= static_cast<int>(vertices_.size()))
        throw std::out_of_range("Mesh1D::vertex: index " + std::to_string(i));
    return vertices_[static_cast<std::size_t>(i)];
}

std::pair<double, double> Mesh1D::element_interval(int i) const {
    if (i < 0 || i >= num_elements())
        throw std::out_of_range("Mesh1D::element_interval: element index " + std::to_string(i) +
                                " not in [0, " + std::to_string(num_elements() - 1) + "]");
    return {vertices_[static_cast<std::size_t>(i)], vertices_[static_cast<std::size_t>(i) + 1]};
}

double Mesh1D::element_width(int i) const {
    auto [zl, zr] = element_interval(i);
    return zr - zl;
}

Mesh1D build_uniform_mesh(double a, double b, int n) {
    if (!(a < b))
        throw std::invalid_argument("build_uniform_mesh: require a < b");
    if (n < 1)
        throw std::invalid_argument("build_uniform_mesh: require n >= 1");
    std::vector<double> v(static_cast<std::size_t>(n) + 1);
    const double width = (b - a) / n;
    for (int i = 0; i <= n; ++i)
        v[static_cast<std::size_t>(i)] = a + i * width;
    v.front() = a; // endpoints exact regardless of rounding in the progression
    v.back() = b;
    return Mesh1D(std::move(v));
}

} // namespace phdg
