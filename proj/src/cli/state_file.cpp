#include "cqdiscord/cli/state_file.hpp"

#include <json.hpp>

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "cqdiscord/states.hpp"

namespace cqd::cli {
namespace {

BlochVector<double> bloch_field(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw StateFormatError(std::string("cq-spec is missing \"") + key + "\"");
  const auto& v = doc.at(key);
  if (!v.is_array() || v.size() != 3) throw StateFormatError(std::string("\"") + key + "\" must be an array of 3 numbers");
  BlochVector<double> out;
  for (int i = 0; i < 3; ++i) {
    if (!v[i].is_number()) throw StateFormatError(std::string("\"") + key + "\" contains a non-number");
    out[i] = v[i].get<double>();
  }
  return out;
}

TwoQubit<double> parse_cq_spec(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw StateFormatError(std::string("malformed cq-spec: ") + e.what());
  }
  if (!doc.is_object()) throw StateFormatError("cq-spec must be an object");
  return assemble(cq_from_bloch(bloch_field(doc, "bloch0"), bloch_field(doc, "bloch1")));
}

std::vector<double> parse_numbers(std::string_view line, int line_number) {
  std::vector<double> values;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != ',') ++j;
    const std::string_view token = line.substr(i, j - i);
    double value = 0;
    const char* first = token.data();
    if (!token.empty() && token.front() == '+') ++first;
    const auto [end, ec] = std::from_chars(first, token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size()) {
      std::ostringstream msg;
      msg << "line " << line_number << ": malformed number '" << token << "'";
      throw StateFormatError(msg.str());
    }
    values.push_back(value);
    i = j;
  }
  return values;
}

TwoQubit<double> parse_matrix(std::string_view text) {
  Matrix4c<double> m;
  int row = 0;
  int line_number = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::vector<double> values = parse_numbers(line, line_number);
    if (values.empty()) continue;
    if (row == 4) throw StateFormatError("matrix has more than 4 rows");
    if (values.size() != 8) {
      std::ostringstream msg;
      msg << "line " << line_number << ": expected 8 numbers (re/im pairs), got " << values.size();
      throw StateFormatError(msg.str());
    }
    for (int col = 0; col < 4; ++col) m(row, col) = {values[2 * col], values[2 * col + 1]};
    ++row;
  }
  if (row != 4) throw StateFormatError("matrix needs 4 rows, got " + std::to_string(row));
  return TwoQubit<double>(m);
}

}  // namespace

TwoQubit<double> parse_state(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw StateFormatError("state file is empty");
  if (text[first] == '{') return parse_cq_spec(text);
  return parse_matrix(text);
}

TwoQubit<double> read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StateFormatError("cannot read state file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state(buffer.str());
}

}  // namespace cqd::cli
