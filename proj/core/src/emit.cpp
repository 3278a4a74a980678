#include "spinhecke/emit.hpp"

#include "json.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace spinhecke {

using ordered_json = nlohmann::ordered_json;

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "latex") return Format::Latex;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

namespace {

ordered_json object_of(const std::map<Partition, Scalar> &values) {
  ordered_json j = ordered_json::object();
  for (const auto &[p, s] : values) j[p.to_string()] = s.to_string();
  return j;
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_json(const std::map<Partition, Scalar> &values) { return object_of(values).dump(); }

std::string to_json(const ClassVector &f) { return to_json(f.as_map()); }

std::string to_json(const SymPoly &p) { return to_json(p.coeffs()); }

std::string latex_scalar(const Scalar &s) {
  std::string text = s.to_string(), out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '*') continue;
    if (c == '^') {
      std::size_t j = i + 1;
      if (j < text.size() && text[j] == '(') {
        std::size_t close = text.find(')', j);
        out += "^{" + text.substr(j + 1, close - j - 1) + "}";
        i = close;
      } else {
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        out += "^{" + text.substr(i + 1, j - i - 1) + "}";
        i = j - 1;
      }
      continue;
    }
    out += c;
  }
  return out;
}

std::string emit_table(const CharacterTable &t, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json: {
      ordered_json j;
      j["n"] = t.n;
      j["rows"] = ordered_json::array();
      for (std::size_t r = 0; r < t.rows.size(); ++r) {
        ordered_json row;
        row["lambda"] = t.rows[r].to_string();
        ordered_json values = ordered_json::object();
        for (std::size_t c = 0; c < t.cols.size(); ++c) values[t.cols[c].to_string()] = t.values[r][c].to_string();
        row["values"] = values;
        j["rows"].push_back(row);
      }
      os << j.dump();
      break;
    }
    case Format::Csv:
      os << "lambda";
      for (const auto &nu : t.cols) os << ',' << csv_field(nu.to_string());
      os << '\n';
      for (std::size_t r = 0; r < t.rows.size(); ++r) {
        os << csv_field(t.rows[r].to_string());
        for (std::size_t c = 0; c < t.cols.size(); ++c) os << ',' << csv_field(t.values[r][c].to_string());
        os << '\n';
      }
      break;
    case Format::Latex:
      os << "\\begin{tabular}{c|" << std::string(t.cols.size(), 'c') << "}\n";
      os << "$\\lambda \\backslash \\nu$";
      for (const auto &nu : t.cols) os << " & $(" << nu.to_string() << ")$";
      os << " \\\\\n\\hline\n";
      for (std::size_t r = 0; r < t.rows.size(); ++r) {
        os << "$(" << t.rows[r].to_string() << ")$";
        for (std::size_t c = 0; c < t.cols.size(); ++c) os << " & $" << latex_scalar(t.values[r][c]) << "$";
        os << " \\\\\n";
      }
      os << "\\end{tabular}\n";
      break;
  }
  return os.str();
}

}  // namespace spinhecke
