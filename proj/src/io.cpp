#include "godel/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace godel {

using nlohmann::json;

namespace {

std::string
csv_escape(std::string const& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string
cell_text(Cell const& c)
{
    struct
    {
        std::string operator()(std::int64_t v) const
        {
            return std::to_string(v);
        }
        std::string operator()(double v) const
        {
            return format_number(v);
        }
        std::string operator()(bool v) const
        {
            return v ? "true" : "false";
        }
        std::string operator()(std::string const& v) const
        {
            return csv_escape(v);
        }
    } visitor;
    return std::visit(visitor, c);
}

json
cell_json(Cell const& c)
{
    if (auto const* d = std::get_if<double>(&c)) {
        return std::isfinite(*d) ? json(*d) : json(nullptr);
    }
    return std::visit([](auto const& v) { return json(v); }, c);
}

} // namespace

void
Table::add(std::vector<Cell> row)
{
    if (row.size() != columns.size()) {
        throw std::logic_error("Table::add: row has " + std::to_string(row.size()) + " cells, expected " +
                               std::to_string(columns.size()));
    }
    rows.push_back(std::move(row));
}

std::string
format_number(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    std::array<char, 32> buf{};
    auto const res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::scientific, 16);
    return std::string(buf.data(), res.ptr);
}

void
write_csv(Table const& t, std::ostream& out)
{
    out << "# godel-c60 " << t.schema << " v" << schema_version << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        out << (i ? "," : "") << t.columns[i];
    }
    out << "\n";
    for (auto const& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << cell_text(row[i]);
        }
        out << "\n";
    }
}

json
to_structured(Table const& t, json const& config)
{
    json rows = json::array();
    for (auto const& row : t.rows) {
        json r = json::array();
        for (auto const& c : row) {
            r.push_back(cell_json(c));
        }
        rows.push_back(std::move(r));
    }
    return json{
        {"schema", "godel-c60/" + t.schema},
        {"version", schema_version},
        {"config", config},
        {"columns", t.columns},
        {"rows", rows},
    };
}

void
write_json(json const& j, std::ostream& out)
{
    out << j.dump(2) << "\n";
}

} // namespace godel
