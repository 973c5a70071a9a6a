// SPDX-License-Identifier: Apache-2.0
#include "pcrank/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace pcrank {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

double parse_integer(std::string_view s, std::string_view field) {
    std::int64_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw Error(errc::parse_error, "not an integer in fraction: \"" + std::string(field) + "\"");
    return static_cast<double>(v);
}

double parse_field(std::string_view raw) {
    const std::string_view s = trim(raw);
    if (s.empty())
        throw Error(errc::parse_error, "empty field");
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const double p = parse_integer(trim(s.substr(0, slash)), s);
        const double q = parse_integer(trim(s.substr(slash + 1)), s);
        if (q == 0.0)
            throw Error(errc::parse_error, "zero denominator in \"" + std::string(s) + "\"");
        return p / q;
    }
    double v = 0.0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw Error(errc::parse_error, "not a number: \"" + std::string(s) + "\"");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

} // namespace

PCMatrix parse_matrix_csv(std::string_view text) {
    std::vector<std::vector<double>> rows;
    for (std::string_view line : split(text, '\n')) {
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (trim(line).empty())
            continue;
        std::vector<double> row;
        for (std::string_view field : split(line, ','))
            row.push_back(parse_field(field));
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw Error(errc::parse_error, "no rows in CSV input");
    return PCMatrix::from_entries(rows);
}

PCMatrix parse_matrix_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(errc::parse_error, e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw Error(errc::parse_error, "expected an object with \"n\" and \"entries\"");
    if (!j["n"].is_number_integer() || !j["entries"].is_array())
        throw Error(errc::parse_error, "\"n\" must be an integer and \"entries\" an array");

    const auto n = j["n"].get<std::int64_t>();
    const auto& entries = j["entries"];
    if (static_cast<std::int64_t>(entries.size()) != n)
        throw Error(errc::parse_error, "\"entries\" has " + std::to_string(entries.size()) +
                                           " rows, \"n\" says " + std::to_string(n));

    std::vector<std::vector<double>> rows;
    rows.reserve(entries.size());
    for (const auto& row : entries) {
        if (!row.is_array())
            throw Error(errc::parse_error, "matrix rows must be arrays");
        std::vector<double> out;
        out.reserve(row.size());
        for (const auto& cell : row) {
            if (cell.is_number())
                out.push_back(cell.get<double>());
            else if (cell.is_string())
                out.push_back(parse_field(cell.get<std::string>()));
            else
                throw Error(errc::parse_error, "matrix entries must be numbers or strings");
        }
        rows.push_back(std::move(out));
    }
    return PCMatrix::from_entries(rows);
}

PCMatrix load_matrix(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        throw Error(errc::parse_error, "cannot open " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (file.extension() == ".json")
        return parse_matrix_json(text);
    return parse_matrix_csv(text);
}

} // namespace pcrank
