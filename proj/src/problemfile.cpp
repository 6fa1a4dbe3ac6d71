#include "liftfan/problemfile.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <utility>

namespace liftfan {

namespace {

using nlohmann::json;

long long require_int(const json& j, const char* field) {
  if (!j.contains(field))
    throw InputError(std::string("missing field '") + field + "'");
  const json& v = j.at(field);
  if (!v.is_number_integer())
    throw InputError(std::string("field '") + field +
                     "': expected an integer");
  return v.get<long long>();
}

}  // namespace

CommutatorForm ProblemFile::to_form() const {
  Modulus m(l);
  const int w = n * (n - 1) / 2;
  MatF rows(l, static_cast<int>(lambda.size()), w);
  for (size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < w; ++j)
      rows.set(static_cast<int>(i), j,
               static_cast<u8>(lambda[i][static_cast<size_t>(j)]));
  return CommutatorForm(m, n, rows);
}

ProblemFile ProblemFile::from_form(const CommutatorForm& f) {
  ProblemFile out;
  out.l = f.ell();
  out.n = f.n();
  out.r = f.r();
  for (int i = 0; i < f.r(); ++i) {
    std::vector<int> row;
    for (int j = 0; j < f.wedge_dim(); ++j) row.push_back(f.lambda().at(i, j));
    out.lambda.push_back(std::move(row));
  }
  return out;
}

ProblemFile ProblemFile::parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("top level must be a JSON object");
  for (const auto& item : j.items())
    if (item.key() != "l" && item.key() != "n" && item.key() != "r" &&
        item.key() != "lambda")
      throw InputError("unexpected field '" + item.key() + "'");

  ProblemFile out;
  long long lv = require_int(j, "l");
  if (lv < 2 || lv > 251) throw InputError("field 'l': not a usable prime");
  out.l = static_cast<unsigned>(lv);
  try {
    Modulus check(out.l);
    (void)check;
  } catch (const InputError& e) {
    throw InputError(std::string("field 'l': ") + e.what());
  }

  long long nv = require_int(j, "n");
  if (nv < 2) throw InputError("field 'n': n ≥ 2 required");
  if (nv > kDefaultAmbientCap)
    throw CapError("field 'n': rank above " +
                   std::to_string(kDefaultAmbientCap));
  out.n = static_cast<int>(nv);

  long long rv = require_int(j, "r");
  if (rv < 0) throw InputError("field 'r': must be nonnegative");
  out.r = static_cast<int>(rv);

  if (!j.contains("lambda")) throw InputError("missing field 'lambda'");
  const json& lam = j.at("lambda");
  if (!lam.is_array())
    throw InputError("field 'lambda': expected an array of rows");
  if (static_cast<long long>(lam.size()) != rv)
    throw InputError("field 'r': r = " + std::to_string(rv) + " but lambda has " +
                     std::to_string(lam.size()) + " rows");
  const int w = out.n * (out.n - 1) / 2;
  for (size_t i = 0; i < lam.size(); ++i) {
    const json& row = lam.at(i);
    if (!row.is_array())
      throw InputError("field 'lambda': row " + std::to_string(i) +
                       " is not an array");
    if (static_cast<int>(row.size()) != w)
      throw InputError("field 'lambda': row " + std::to_string(i) + " has " +
                       std::to_string(row.size()) + " entries, expected " +
                       std::to_string(w));
    std::vector<int> vals;
    for (size_t k = 0; k < row.size(); ++k) {
      const json& cell = row.at(k);
      if (!cell.is_number_integer())
        throw InputError("field 'lambda': entry (" + std::to_string(i) + "," +
                         std::to_string(k) + ") is not an integer");
      long long v = cell.get<long long>();
      if (v < 0 || v >= lv)
        throw InputError("field 'lambda': entry (" + std::to_string(i) + "," +
                         std::to_string(k) + ") = " + std::to_string(v) +
                         " out of range [0, " + std::to_string(lv) + ")");
      vals.push_back(static_cast<int>(v));
    }
    out.lambda.push_back(std::move(vals));
  }
  out.to_form();  // surface rank and shape violations at load time
  return out;
}

ProblemFile ProblemFile::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse(ss.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string ProblemFile::dumps() const {
  json j;
  j["l"] = l;
  j["lambda"] = lambda;
  j["n"] = n;
  j["r"] = r;
  return j.dump() + "\n";
}

void ProblemFile::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << dumps();
  if (!out) throw InputError("write failed for '" + path.string() + "'");
}

}  // namespace liftfan
