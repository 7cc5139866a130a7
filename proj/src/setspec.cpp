#include "sigma/setspec.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "sigma/error.hpp"

namespace sigma {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorKind::InvalidInput, "empty number");
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(std::string(text), &used);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidInput, "not a number: '" + std::string(text) + "'");
  }
  if (used != text.size() || !std::isfinite(v)) throw Error(ErrorKind::InvalidInput, "not a number: '" + std::string(text) + "'");
  return v;
}

long long parse_integer(std::string_view text) {
  text = trim(text);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw Error(ErrorKind::InvalidInput, "not an integer: '" + std::string(text) + "'");
  return v;
}

std::vector<double> parse_list(std::string_view body) {
  std::vector<double> values;
  for (std::string_view item : split(body, ',')) values.push_back(parse_number(item));
  return values;
}

bool all_integral(const std::vector<double>& v) {
  for (double x : v)
    if (std::floor(x) != x || std::fabs(x) > 1e15) return false;
  return true;
}

}  // namespace

CoefficientSet parse_set_spec(std::string_view spec, bool symmetrize, std::string_view extra) {
  spec = trim(spec);
  std::vector<double> values;
  bool exact = true;
  if (spec.starts_with("span:")) {
    const long long m = parse_integer(spec.substr(5));
    if (m < 1 || m > 100000) throw Error(ErrorKind::InvalidInput, "span needs 1 <= M <= 100000");
    for (long long v = -m; v <= m; ++v) values.push_back(static_cast<double>(v));
  } else if (spec.starts_with("list:")) {
    values = parse_list(spec.substr(5));
    exact = all_integral(values);
  } else if (spec.starts_with("file:")) {
    const std::string path(spec.substr(5));
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open set file " + path);
    nlohmann::json j;
    try {
      in >> j;
      values = j.at("elements").get<std::vector<double>>();
      exact = j.value("exact_integer", all_integral(values));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::InvalidInput, "bad set file " + path + ": " + e.what());
    }
  } else {
    throw Error(ErrorKind::InvalidInput, "set spec must start with span:, list: or file:");
  }
  if (values.empty()) throw Error(ErrorKind::InvalidInput, "empty coefficient set");

  CoefficientSet s = CoefficientSet::from_values(values, exact);
  if (symmetrize) s = s.symmetrized();
  extra = trim(extra);
  if (!extra.empty()) {
    if (!extra.starts_with("drop:")) throw Error(ErrorKind::InvalidInput, "set extra must look like drop:v1,v2");
    const std::vector<double> drop = parse_list(extra.substr(5));
    s = s.without_pm(drop);
  }
  return s;
}

Candidate parse_point(std::string_view spec) {
  spec = trim(spec);
  if (spec.starts_with("quad:")) {
    auto parts = split(spec.substr(5), ',');
    if (parts.size() != 2) throw Error(ErrorKind::InvalidInput, "quad point needs b,c");
    return Candidate::from_quadratic(parse_integer(parts[0]), parse_integer(parts[1]));
  }
  if (spec.starts_with("polar:")) {
    auto parts = split(spec.substr(6), ',');
    if (parts.size() != 2) throw Error(ErrorKind::InvalidInput, "polar point needs r,theta");
    return Candidate::polar(parse_number(parts[0]), parse_number(parts[1]));
  }
  auto parts = split(spec, ',');
  if (parts.size() != 2) throw Error(ErrorKind::InvalidInput, "point needs re,im");
  return Candidate::from_point(complex(parse_number(parts[0]), parse_number(parts[1])));
}

}  // namespace sigma
