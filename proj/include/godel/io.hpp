#pragma once

/** \file io.hpp
 *
 *  \brief Tables and their two serializations: comma-separated text and a self-describing JSON
 *         document carrying schema, version and the run configuration.
 */

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace godel {

inline constexpr char const* schema_version = "1";

using Cell = std::variant<std::int64_t, double, bool, std::string>;

struct Table
{
    /// Schema name, e.g. "spectrum"; the header line reads "# godel-c60 <schema> v<schema_version>".
    std::string schema;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    /// Throws std::logic_error if the row width differs from the column count.
    void add(std::vector<Cell> row);
};

/// Scientific notation with 17 significant digits; "nan", "inf", "-inf" for non-finite values.
std::string format_number(double v);

void write_csv(Table const& t, std::ostream& out);

/// {"schema", "version", "config", "columns", "rows"}; non-finite doubles become null.
nlohmann::json to_structured(Table const& t, nlohmann::json const& config);

/// Serializes `j` with a fixed indentation and a trailing newline.
void write_json(nlohmann::json const& j, std::ostream& out);

} // namespace godel
