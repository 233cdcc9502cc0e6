#include "phdg/csv_io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace phdg {

std::string format_full(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path())
        fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("write_text_file: cannot open " + tmp.string());
        out << content;
        if (!out)
            throw std::runtime_error("write_text_file: write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows) {
    std::string content;
    content.reserve(rows.size() * 40 + header.size() + 2);
    content += header;
    content += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                content += ',';
            content += format_full(row[i]);
        }
        content += '\n';
    }
    write_text_file(path, content);
}

void write_triplets(const std::string& path, const Eigen::SparseMatrix<double>& matrix) {
    struct Entry {
        int row, col;
        double value;
    };
    std::vector<Entry> entries;
    entries.reserve(static_cast<std::size_t>(matrix.nonZeros()));
    for (int k = 0; k < matrix.outerSize(); ++k)
        for (Eigen::SparseMatrix<double>::InnerIterator it(matrix, k); it; ++it)
            entries.push_back({static_cast<int>(it.row()), static_cast<int>(it.col()), it.value()});
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    std::string content;
    content.reserve(entries.size() * 48);
    for (const auto& entry : entries) {
        content += std::to_string(entry.row);
        content += ' ';
        content += std::to_string(entry.col);
        content += ' ';
        content += format_full(entry.value);
        content += '\n';
    }
    write_text_file(path, content);
}

Eigen::SparseMatrix<double> read_triplets(const std::string& path, int rows, int cols) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("read_triplets: cannot open " + path);
    std::vector<Eigen::Triplet<double>> triplets;
    int row = 0, col = 0;
    double value = 0.0;
    while (in >> row >> col >> value)
        triplets.emplace_back(row, col, value);
    Eigen::SparseMatrix<double> matrix(rows, cols);
    matrix.setFromTriplets(triplets.begin(), triplets.end());
    return matrix;
}

} // namespace phdg
