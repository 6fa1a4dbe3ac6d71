#include "liftfan/scan.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include "liftfan/cohomology.hpp"

namespace liftfan {

namespace {

using nlohmann::json;

std::vector<std::vector<int>> basis_rows(const Subspace& s) {
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < s.dim(); ++i) {
    std::vector<int> row;
    for (int j = 0; j < s.ambient(); ++j) row.push_back(s.basis().at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

// All n! permutation images of the wedge coordinates, for the partial
// dedup used past the exact-orbit range.
std::vector<MatF> permutation_compounds(unsigned ell, int n) {
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
  std::vector<MatF> out;
  do {
    MatF perm(ell, n, n);
    for (int i = 0; i < n; ++i) perm.set(i, p[static_cast<size_t>(i)], 1);
    out.push_back(compound_matrix(perm, 2));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<std::string> complete_lines(const std::string& bytes,
                                        std::uint64_t* kept_bytes) {
  std::vector<std::string> lines;
  size_t pos = 0;
  while (pos < bytes.size()) {
    size_t nl = bytes.find('\n', pos);
    if (nl == std::string::npos) break;  // half-written tail, dropped
    lines.push_back(bytes.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (kept_bytes) *kept_bytes = pos;
  return lines;
}

}  // namespace

std::string ScanRecord::to_line() const {
  json j;
  j["dedup"] = dedup;
  j["delta_pairs"] = delta_pair_count;
  j["fan_size"] = fan_size;
  j["kernel"] = kernel;
  j["l"] = l;
  j["n"] = n;
  j["quotient_dim"] = quotient_dim;
  j["r"] = r;
  j["tool"] = tool;
  return j.dump() + "\n";
}

ScanRecord ScanRecord::parse_line(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("scan record: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("scan record: not a JSON object");
  ScanRecord rec;
  try {
    rec.dedup = j.at("dedup").get<std::string>();
    rec.delta_pair_count = j.at("delta_pairs").get<int>();
    rec.fan_size = j.at("fan_size").get<int>();
    rec.kernel = j.at("kernel").get<std::vector<std::vector<int>>>();
    rec.l = j.at("l").get<unsigned>();
    rec.n = j.at("n").get<int>();
    rec.quotient_dim = j.at("quotient_dim").get<int>();
    rec.r = j.at("r").get<int>();
    rec.tool = j.at("tool").get<std::string>();
  } catch (const json::exception& e) {
    throw InputError(std::string("scan record: ") + e.what());
  }
  return rec;
}

std::vector<ScanRecord> read_scan_records(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  std::vector<ScanRecord> out;
  for (const auto& line : complete_lines(ss.str(), nullptr))
    out.push_back(ScanRecord::parse_line(line));
  return out;
}

ScanSummary run_scan(Modulus l, int n, int r,
                     const std::filesystem::path& out, bool resume,
                     std::ostream* log) {
  if (n < 2) throw InputError("n ≥ 2 required");
  const int wedge = n * (n - 1) / 2;
  if (r < 0 || r > wedge)
    throw InputError("center rank must lie in [0, " + std::to_string(wedge) +
                     "]");
  const int kdim = wedge - r;
  const unsigned ell = l.ell();

  std::uint64_t count = gaussian_binomial(wedge, kdim, ell);
  if (count > kScanKernelCap)
    throw CapError("scan would enumerate " + std::to_string(count) +
                   " kernels, cap is " + std::to_string(kScanKernelCap));

  const bool partial = n >= 5;
  const std::string dedup_mode = partial ? "perm-min" : "gl-orbit";
  if (partial && log)
    *log << "warning: exact orbit dedup stops at n = 4; records may repeat "
            "equivalent kernels\n";

  // Existing prefix, for resume.
  std::vector<ScanRecord> existing;
  namespace fs = std::filesystem;
  if (fs::exists(out) && fs::file_size(out) > 0) {
    if (!resume)
      throw InputError("'" + out.string() +
                       "' already has content; pass --resume to continue");
    std::ifstream in(out, std::ios::binary);
    if (!in) throw InputError("cannot read '" + out.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    in.close();
    std::uint64_t kept = 0;
    for (const auto& line : complete_lines(ss.str(), &kept))
      existing.push_back(ScanRecord::parse_line(line));
    if (kept < ss.str().size()) fs::resize_file(out, kept);
    for (const auto& rec : existing)
      if (rec.l != ell || rec.n != n || rec.r != r ||
          rec.dedup != dedup_mode || rec.tool != kToolVersion)
        throw InputError("'" + out.string() +
                         "' holds records from different scan parameters");
  }

  std::vector<Subspace> kernels =
      enumerate_subspaces(ell, wedge, kdim, /*cap=*/wedge);
  std::vector<MatF> perms;
  if (partial) perms = permutation_compounds(ell, n);

  ScanSummary summary;
  summary.partial_dedup = partial;
  std::set<Subspace> seen;
  std::ofstream app;
  size_t index = 0;
  for (const auto& k : kernels) {
    Subspace canonical(ell, wedge);
    if (partial) {
      canonical = k;
      for (const auto& c : perms)
        canonical = std::min(canonical, image_subspace(c, k));
      if (!seen.insert(canonical).second) continue;
    } else {
      if (seen.count(k)) continue;
      std::vector<Subspace> orbit = wedge_orbit(k, l, n);
      canonical = orbit.front();
      if (!(canonical == k))
        throw std::logic_error("sorted sweep must meet the minimal orbit "
                               "member first");
      seen.insert(orbit.begin(), orbit.end());
    }

    if (index < existing.size()) {
      if (existing[index].kernel != basis_rows(canonical))
        throw InputError("'" + out.string() +
                         "' is not a prefix of this scan's output");
      ++index;
      continue;
    }

    CommutatorForm f = CommutatorForm::from_kernel(l, n, canonical);
    ScanRecord rec;
    rec.l = ell;
    rec.n = n;
    rec.r = r;
    rec.kernel = basis_rows(canonical);
    rec.fan_size = static_cast<int>(fan(f).sigmas.size());
    rec.delta_pair_count = static_cast<int>(delta_pairs(f).size());
    rec.quotient_dim = unramified_quotient(f).quotient_dim;
    rec.dedup = dedup_mode;
    rec.tool = kToolVersion;

    if (!app.is_open()) {
      app.open(out, std::ios::binary | std::ios::app);
      if (!app) throw InputError("cannot write '" + out.string() + "'");
    }
    app << rec.to_line();
    ++summary.orbits_written;
    ++index;
  }
  if (app.is_open()) {
    app.flush();
    if (!app) throw InputError("write failed for '" + out.string() + "'");
  }
  if (index < existing.size())
    throw InputError("'" + out.string() +
                     "' has more records than this scan produces");
  summary.orbits_total = static_cast<int>(index);
  return summary;
}

}  // namespace liftfan
