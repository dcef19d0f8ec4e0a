#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "spinindex/error.hpp"
#include "spinindex/spinindex.hpp"

namespace spinindex {

namespace detail {
extern const char kBundledDavisJson[];
}

namespace {

DavisRow parse_row(const nlohmann::json& j) {
  DavisRow row;
  row.name = j.at("name").get<std::string>();
  row.order = j.at("ord").get<int>();
  row.size = j.at("size").get<std::size_t>();
  const auto& fp = j.at("fp_count");
  if (fp.is_string()) {
    if (fp.get<std::string>() != "inf") throw ParseError("fp_count must be an integer or \"inf\"");
  } else {
    row.fp_count = fp.get<int>();
  }
  const auto& spin = j.at("spin");
  if (!spin.is_array() || spin.size() != 2) throw ParseError("spin must be [a, b] for a + b tau");
  row.spin = GoldenNumber(BigRational(spin[0].get<long>()), BigRational(spin[1].get<long>()));
  row.provenance = parse_provenance(j.at("provenance").get<std::string>());
  row.minus = j.at("minus").get<std::string>();
  return row;
}

}  // namespace

std::vector<DavisRow> parse_davis_rows(std::string_view json_text) {
  try {
    const auto doc = nlohmann::json::parse(json_text);
    if (doc.at("version").get<int>() != 1) throw ParseError("unsupported data version");
    std::vector<DavisRow> rows;
    for (const auto& j : doc.at("rows")) rows.push_back(parse_row(j));
    return rows;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed spin data: ") + e.what());
  }
}

std::string_view bundled_davis_json() { return detail::kBundledDavisJson; }

std::vector<DavisRow> load_davis_rows() {
  const char* path = std::getenv("SPININDEX_DATA");
  if (path == nullptr || *path == '\0') return parse_davis_rows(bundled_davis_json());
  std::ifstream in(path);
  if (!in) throw ParseError(std::string("cannot read ") + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_davis_rows(text.str());
}

}  // namespace spinindex
