#include "edalab/csv.hpp"

#include <charconv>
#include <stdexcept>

namespace edalab {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_u64(std::uint64_t v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void CsvWriter::comment(const std::string& text) { out_ << "# " << text << "\n"; }

void CsvWriter::row(std::span<const std::string> cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
}

void CsvWriter::row(std::initializer_list<std::string> cells) {
  row(std::span<const std::string>(cells.begin(), cells.size()));
}

namespace {

std::string margin_cell(const EdaConfig& cfg) {
  return cfg.margin ? format_double(*cfg.margin) : "none";
}

}  // namespace

void write_sweep_csv(std::ostream& out, std::span<const PointStats> stats,
                     std::uint64_t master_seed,
                     std::span<const std::string> metadata) {
  CsvWriter w(out);
  for (const std::string& m : metadata) w.comment(m);
  out << kSweepHeader << "\n";
  for (const PointStats& ps : stats) {
    const EdaConfig& cfg = ps.point.cfg;
    const RunStatsCore& s = ps.stats;
    const bool has_mu = cfg.algorithm == Algorithm::umda ||
                        cfg.algorithm == Algorithm::pbil ||
                        cfg.algorithm == Algorithm::mmas_ib;
    const bool has_rho = cfg.algorithm == Algorithm::pbil ||
                         cfg.algorithm == Algorithm::mmas_ib;
    std::vector<std::string> cells = {
        algorithm_name(cfg.algorithm),
        ps.point.fitness.to_string(),
        format_u64(static_cast<std::uint64_t>(cfg.n)),
        format_u64(static_cast<std::uint64_t>(cfg.lambda)),
        has_mu ? format_u64(static_cast<std::uint64_t>(cfg.mu)) : "",
        has_rho ? format_double(cfg.rho) : "",
        cfg.algorithm == Algorithm::cga ? format_double(cfg.K) : "",
        cfg.algorithm == Algorithm::sig_cga ? format_double(cfg.epsilon) : "",
        margin_cell(cfg),
        format_u64(static_cast<std::uint64_t>(s.runs)),
        format_double(s.success_rate),
        s.has_stats ? format_double(s.mean_evals) : "",
        s.has_stats ? format_double(s.median_evals) : "",
        s.has_stats ? format_double(s.std_evals) : "",
        format_double(s.mean_border_hits),
        format_u64(master_seed),
    };
    w.row(cells);
  }
}

CsvTable CsvTable::parse(std::istream& in) {
  CsvTable t;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
      const auto comma = line.find(',', start);
      cells.push_back(line.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (t.header.empty())
      t.header = std::move(cells);
    else
      t.rows.push_back(std::move(cells));
  }
  if (t.header.empty()) throw std::runtime_error("csv: no header row");
  return t;
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw std::runtime_error("csv: missing column '" + name + "'");
}

}  // namespace edalab
