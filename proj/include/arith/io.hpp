#pragma once

// CSV and JSON encodings.
//
//   CSV:  header "n,value", one row per n = 1..N in order. Rationals as
//         "p/q", floats as %.17g ("re", or "re+imi" when im != 0).
//   JSON: {"bound": N, "backend": "rational"|"complex", "values": [...]}
//         with rationals as strings and complex values as [re, im].

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>

#include <json.hpp>

#include "arith/arith_fn.hpp"
#include "arith/structure.hpp"

namespace arith::io {

using AnyFn = std::variant<RationalFn, ComplexFn>;

template <Coefficient T>
void write_csv(std::ostream& out, const ArithFn<T>& a);

/// Rows must be n = 1, 2, ... with no gaps or repeats; errors carry the line
/// number. All-rational values give a rational function, otherwise complex.
AnyFn read_csv(std::istream& in);

template <Coefficient T>
nlohmann::json to_json(const ArithFn<T>& a);

AnyFn from_json(const nlohmann::json& doc);

template <Coefficient T>
nlohmann::json coefficient_to_json(const T& value);

template <Coefficient T>
nlohmann::json to_json(const BellSeries<T>& s);

/// List of {"p", "k", "value"} sorted by (p, k).
template <Coefficient T>
nlohmann::json to_json(const PrimeSupport<T>& g);

/// Dispatches on extension: ".json" is JSON, anything else CSV.
AnyFn load_file(const std::filesystem::path& path);

template <Coefficient T>
void save_file(const std::filesystem::path& path, const ArithFn<T>& a);

std::int64_t bound_of(const AnyFn& fn);
std::string_view backend_of(const AnyFn& fn);

}  // namespace arith::io
