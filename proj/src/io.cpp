#include "arith/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

namespace arith::io {

namespace {

[[noreturn]] void format_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::kFormat, "line " + std::to_string(line) + ": " + what);
}

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

bool looks_rational(const std::string& s) {
  return s.find_first_of(".eEi") == std::string::npos && s.find("nan") == std::string::npos &&
         s.find("inf") == std::string::npos;
}

}  // namespace

template <Coefficient T>
void write_csv(std::ostream& out, const ArithFn<T>& a) {
  out << "n,value\n";
  for (std::int64_t n = 1; n <= a.bound(); ++n) out << n << ',' << a[n].str() << '\n';
}

AnyFn read_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> raw;
  std::vector<std::size_t> lines;
  if (!std::getline(in, line)) format_error(1, "empty input, expected header 'n,value'");
  ++line_no;
  if (trim(line) != "n,value") format_error(line_no, "expected header 'n,value'");
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) format_error(line_no, "expected 'n,value'");
    const std::string index = trim(line.substr(0, comma));
    std::int64_t n = 0;
    try {
      std::size_t used = 0;
      n = std::stoll(index, &used);
      if (used != index.size()) throw std::invalid_argument(index);
    } catch (const std::exception&) {
      format_error(line_no, "bad index '" + index + "'");
    }
    const auto expected = static_cast<std::int64_t>(raw.size()) + 1;
    if (n < expected) format_error(line_no, "duplicate n = " + std::to_string(n));
    if (n > expected) format_error(line_no, "missing n = " + std::to_string(expected));
    raw.push_back(trim(line.substr(comma + 1)));
    lines.push_back(line_no);
  }
  if (raw.empty()) format_error(line_no, "no rows");
  const bool exact = std::all_of(raw.begin(), raw.end(), looks_rational);
  auto parse_all = [&]<class T>(std::vector<T>& values) {
    for (std::size_t i = 0; i < raw.size(); ++i) {
      try {
        values.push_back(CoefficientTraits<T>::parse(raw[i]));
      } catch (const Error& e) {
        format_error(lines[i], e.what());
      }
    }
  };
  if (exact) {
    std::vector<Rational> values;
    parse_all(values);
    return RationalFn(std::move(values));
  }
  std::vector<Complex> values;
  parse_all(values);
  return ComplexFn(std::move(values));
}

template <>
nlohmann::json coefficient_to_json(const Rational& value) {
  return value.str();
}

template <>
nlohmann::json coefficient_to_json(const Complex& value) {
  return nlohmann::json::array({value.re(), value.im()});
}

template <Coefficient T>
nlohmann::json to_json(const ArithFn<T>& a) {
  nlohmann::json values = nlohmann::json::array();
  for (const T& v : a.values()) values.push_back(coefficient_to_json(v));
  nlohmann::json doc;
  doc["bound"] = a.bound();
  doc["backend"] = std::string(CoefficientTraits<T>::kName);
  doc["values"] = std::move(values);
  return doc;
}

AnyFn from_json(const nlohmann::json& doc) {
  try {
    const auto bound = doc.at("bound").get<std::int64_t>();
    const auto backend = doc.at("backend").get<std::string>();
    const auto& values = doc.at("values");
    if (!values.is_array() || static_cast<std::int64_t>(values.size()) != bound || bound < 1) {
      throw Error(ErrorKind::kFormat, "values must be an array of length bound");
    }
    if (backend == "rational") {
      std::vector<Rational> out;
      for (const auto& v : values) {
        out.push_back(v.is_string() ? Rational::parse(v.get<std::string>())
                                    : Rational(v.get<long>()));
      }
      return RationalFn(std::move(out));
    }
    if (backend == "complex") {
      std::vector<Complex> out;
      for (const auto& v : values) {
        if (v.is_array() && v.size() == 2) {
          out.emplace_back(v[0].get<double>(), v[1].get<double>());
        } else {
          out.emplace_back(v.get<double>());
        }
      }
      return ComplexFn(std::move(out));
    }
    throw Error(ErrorKind::kFormat, "unknown backend '" + backend + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kFormat, std::string("malformed JSON function: ") + e.what());
  }
}

template <Coefficient T>
nlohmann::json to_json(const BellSeries<T>& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const T& c : s.coeffs) coeffs.push_back(coefficient_to_json(c));
  return {{"prime", s.prime}, {"coeffs", std::move(coeffs)}};
}

template <Coefficient T>
nlohmann::json to_json(const PrimeSupport<T>& g) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, value] : g.values) {
    out.push_back({{"p", key.first}, {"k", key.second}, {"value", coefficient_to_json(value)}});
  }
  return out;
}

AnyFn load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kFormat, "cannot open " + path.string());
  if (path.extension() == ".json") {
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::kFormat, path.string() + ": " + e.what());
    }
    return from_json(doc);
  }
  try {
    return read_csv(in);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

template <Coefficient T>
void save_file(const std::filesystem::path& path, const ArithFn<T>& a) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kFormat, "cannot write " + path.string());
  if (path.extension() == ".json") {
    out << to_json(a).dump() << '\n';
  } else {
    write_csv(out, a);
  }
}

std::int64_t bound_of(const AnyFn& fn) {
  return std::visit([](const auto& f) { return f.bound(); }, fn);
}

std::string_view backend_of(const AnyFn& fn) {
  return std::visit(
      [](const auto& f) {
        using T = typename std::decay_t<decltype(f)>::value_type;
        return CoefficientTraits<T>::kName;
      },
      fn);
}

template void write_csv(std::ostream&, const RationalFn&);
template void write_csv(std::ostream&, const ComplexFn&);
template nlohmann::json to_json(const RationalFn&);
template nlohmann::json to_json(const ComplexFn&);
template nlohmann::json to_json(const BellSeries<Rational>&);
template nlohmann::json to_json(const BellSeries<Complex>&);
template nlohmann::json to_json(const PrimeSupport<Rational>&);
template nlohmann::json to_json(const PrimeSupport<Complex>&);
template void save_file(const std::filesystem::path&, const RationalFn&);
template void save_file(const std::filesystem::path&, const ComplexFn&);

}  // namespace arith::io
