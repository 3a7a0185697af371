#include "gk/refdata.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#ifndef GK_DATA_DIR
#define GK_DATA_DIR "data"
#endif

namespace gk::refdata {

std::vector<Integer> SporadicRecord::primes() const {
  std::set<Integer> out;
  for (const auto& o : max_orders)
    for (const auto& [r, m] : numth::factorize(o)) {
      (void)m;
      out.insert(r);
    }
  return {out.begin(), out.end()};
}

bool SporadicRecord::adjacent(const Integer& r, const Integer& s) const {
  Integer rs = r * s;
  for (const auto& o : max_orders)
    if (o % rs == 0) return true;
  return false;
}

namespace {

std::string data_dir() {
  if (const char* s = std::getenv("GK_DATA_DIR")) return s;
  return GK_DATA_DIR;
}

std::map<std::string, SporadicRecord> load_spectra() {
  std::string path = data_dir() + "/sporadic_spectra.txt";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spectra data file: " + path);
  std::map<std::string, SporadicRecord> out;
  std::string line;
  bool saw_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') { saw_header = true; continue; }
    auto semi = line.find(';');
    if (semi == std::string::npos) throw std::runtime_error("malformed spectra line: " + line);
    SporadicRecord rec;
    rec.name = line.substr(0, semi);
    std::stringstream ss(line.substr(semi + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) rec.max_orders.emplace_back(tok);
    if (rec.max_orders.empty()) throw std::runtime_error("empty spectra line: " + line);
    out.emplace(rec.name, std::move(rec));
  }
  if (!saw_header) throw std::runtime_error("spectra file missing provenance header");
  return out;
}

}  // namespace

const SporadicRecord& sporadic_record(std::string_view name) {
  static const std::map<std::string, SporadicRecord> table = load_spectra();
  auto it = table.find(std::string(name));
  if (it == table.end())
    throw std::runtime_error("no spectra record for '" + std::string(name) + "'");
  return it->second;
}

cocliques::CompactGraph sporadic_graph(std::string_view name) {
  GroupSpec spec;
  if (name == "Tits") {
    spec.family = Family::Tits;
  } else {
    spec.family = Family::Sporadic;
    spec.sporadic_name = std::string(name);
  }
  return cocliques::build_graph(spec);
}

}  // namespace gk::refdata
