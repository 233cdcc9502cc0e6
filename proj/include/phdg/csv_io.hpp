#ifndef PHDG_CSV_IO_HPP
#define PHDG_CSV_IO_HPP

#include <Eigen/Sparse>
#include <string>
#include <vector>

namespace phdg {

/// Shortest decimal representation that round-trips a double (17 significant
/// digits).
std::string format_full(double value);

/// Writes text atomically: temp file in the same directory, then rename.
void write_text_file(const std::string& path, const std::string& content);

/// CSV with a header line; every cell formatted with format_full.
void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows);

/// Coordinate format: one "row col value" triplet per line, row-major order.
void write_triplets(const std::string& path, const Eigen::SparseMatrix<double>& matrix);

/// Reads a coordinate-format file back into a sparse matrix of given shape.
Eigen::SparseMatrix<double> read_triplets(const std::string& path, int rows, int cols);

} // namespace phdg

#endif
