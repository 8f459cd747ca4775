#include "swl/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "swl/error.hpp"

namespace swl {

std::string tensor_to_json(const ParameterTensor& p) {
  nlohmann::ordered_json j;
  j["N"] = p.rows();
  std::vector<int> letters;
  for (int s = 1; s <= p.letters(); ++s) letters.push_back(s);
  j["letters"] = letters;
  j["d"] = p.degree_bound();
  auto entries = nlohmann::ordered_json::array();
  for (int i = 0; i < p.rows(); ++i)
    for (int s = 1; s <= p.letters(); ++s)
      for (int k = 0; k < p.degree_bound(); ++k) {
        const MPoly& v = p.at(i, s, k);
        if (v.is_zero()) continue;
        entries.push_back({{"row", i}, {"letter", s}, {"deg", k}, {"value", v.to_string()}});
      }
  j["entries"] = entries;
  return j.dump(2) + "\n";
}

ParameterTensor tensor_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("tensor JSON: ") + e.what());
  }
  try {
    int n = j.at("N").get<int>();
    int d = j.at("d").get<int>();
    int letters = 0;
    const auto& l = j.at("letters");
    if (l.is_number_integer()) {
      letters = l.get<int>();
    } else {
      std::set<int> seen;
      for (const auto& s : l) seen.insert(s.get<int>());
      if (seen.empty() || *seen.begin() != 1 || *seen.rbegin() != static_cast<int>(seen.size()))
        throw UsageError("tensor JSON: letters must be 1..n");
      letters = static_cast<int>(seen.size());
    }
    if (n <= 0 || d <= 0 || letters <= 0) throw UsageError("tensor JSON: N, d and letters must be positive");
    ParameterTensor p(n, letters, d);
    for (const auto& e : j.at("entries")) {
      const auto& v = e.at("value");
      MPoly value = v.is_string() ? MPoly::parse(v.get<std::string>()) : MPoly(Rational(v.get<long>()));
      p.set(e.at("row").get<int>(), e.at("letter").get<int>(), e.at("deg").get<int>(), value);
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("tensor JSON: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

QMatrix read_matrix_file(const std::string& path) {
  std::string text = read_text_file(path);
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) return QMatrix::from_json(text);
  return QMatrix::from_csv(text);
}

}  // namespace swl
