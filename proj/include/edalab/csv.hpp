#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "edalab/experiments.hpp"

namespace edalab {

/// Shortest round-trip decimal representation.
std::string format_double(double v);
std::string format_u64(std::uint64_t v);

/// Comma-separated, UTF-8, LF line endings, '#'-prefixed metadata comments
/// before the mandatory header row.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void comment(const std::string& text);
  void row(std::span<const std::string> cells);
  void row(std::initializer_list<std::string> cells);

 private:
  std::ostream& out_;
};

inline constexpr const char* kSweepHeader =
    "algo,fitness,n,lambda,mu,rho,K,epsilon,margin,runs,success_rate,"
    "mean_evals,median_evals,std_evals,mean_border_hits,master_seed";

/// Emits one sweep row per grid point under the fixed schema. Parameters
/// that do not apply to the algorithm are left empty; runtime statistics of
/// pointless grid points (no hits) are left empty rather than fabricated.
void write_sweep_csv(std::ostream& out, std::span<const PointStats> stats,
                     std::uint64_t master_seed,
                     std::span<const std::string> metadata);

/// Simple CSV reader for plot input: skips '#' comments, first row is the
/// header. Cells are kept as strings.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  static CsvTable parse(std::istream& in);
  /// Column index by name; throws naming the column when missing.
  std::size_t column(const std::string& name) const;
};

}  // namespace edalab
