#pragma once

// Matrix documents:
//
//   {"rows": R, "cols": C, "entries": [[re, im], ...]}
//
// entries are row-major, R*C of them. Values are written with 17 significant
// digits so load(save(M)) == M bit for bit.

#include "braidkit/entanglement.hpp"
#include "braidkit/tensor.hpp"

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidkit {

class MatrixFormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Locale-independent, 17 significant digits; parses back to the same double.
std::string format_double(double v);

std::string format_matrix(const ComplexMatrix& m);
ComplexMatrix parse_matrix(std::string_view text);

void save_matrix(const ComplexMatrix& m, const std::filesystem::path& path);
ComplexMatrix load_matrix(const std::filesystem::path& path);

/// theta,c_closed,c00,c01,...,max_abs_diff for local dimension d.
std::string sweep_csv_header(int local_dim);

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> rows, int local_dim);
std::vector<SweepRecord> read_sweep_csv(std::istream& in);

} // namespace braidkit
