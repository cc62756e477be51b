#include "eulerlab/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "eulerlab/errors.hpp"

namespace eulerlab {

using ordered_json = nlohmann::ordered_json;

std::string to_canonical_json(const MPoly& f) {
  ordered_json doc;
  doc["vars"] = f.vars();
  ordered_json terms = ordered_json::array();
  for (const auto& [e, c] : f.terms()) {
    ordered_json term;
    term["e"] = e;
    term["n"] = c.numerator_string();
    term["d"] = c.denominator_string();
    terms.push_back(std::move(term));
  }
  doc["terms"] = std::move(terms);
  return doc.dump();
}

MPoly from_canonical_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw usage_error(std::string("polynomial JSON: ") + err.what());
  }
  try {
    MPoly out(doc.at("vars").get<VarList>());
    for (const auto& term : doc.at("terms")) {
      auto e = term.at("e").get<Exponent>();
      const Rational c =
          Rational::from_parts(term.at("n").get<std::string>(), term.at("d").get<std::string>());
      if (c.is_zero()) throw usage_error("polynomial JSON: stored zero coefficient");
      if (out.terms().count(e) != 0) throw usage_error("polynomial JSON: duplicate exponent");
      out.add_term(e, c);
    }
    return out;
  } catch (const nlohmann::json::exception& err) {
    throw usage_error(std::string("polynomial JSON: ") + err.what());
  }
}

void write_fixture(const std::filesystem::path& path, const MPoly& f) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw usage_error("cannot open '" + path.string() + "' for writing");
  out << to_canonical_json(f) << '\n';
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

MPoly read_fixture(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return from_canonical_json(buf.str());
  } catch (const usage_error& err) {
    throw usage_error(path.string() + ": " + err.what());
  }
}

}  // namespace eulerlab
