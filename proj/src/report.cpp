#include "fstirling/report.hpp"

#include <algorithm>

namespace fstirling {

Cell Cell::exact(std::vector<long> indices, LaurentPoly lhs, LaurentPoly rhs)
{
    Cell c;
    c.indices = std::move(indices);
    c.pass = lhs == rhs;
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    return c;
}

bool Report::passed() const
{
    return failures() == 0;
}

std::size_t Report::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [](const Cell& c) { return !c.pass; }));
}

void Report::append(const Report& other)
{
    cells.insert(cells.end(), other.cells.begin(), other.cells.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string render_value(const LaurentPoly& v, int decimal_digits)
{
    if (decimal_digits >= 0 && v.is_constant()) {
        return to_decimal(v.constant_value(), decimal_digits);
    }
    return v.to_string();
}

nlohmann::ordered_json Report::to_json(int decimal_digits) const
{
    nlohmann::ordered_json j;
    j["identity"] = identity;
    j["params"] = params;
    auto cells_json = nlohmann::ordered_json::array();
    for (const auto& c : cells) {
        nlohmann::ordered_json cj;
        cj["indices"] = c.indices;
        cj["lhs"] = render_value(c.lhs, decimal_digits);
        cj["rhs"] = render_value(c.rhs, decimal_digits);
        cj["residual"] = render_value(c.residual(), decimal_digits);
        cj["pass"] = c.pass;
        if (!c.note.empty()) {
            cj["note"] = c.note;
        }
        cells_json.push_back(std::move(cj));
    }
    j["cells"] = std::move(cells_json);
    if (!notes.empty()) {
        j["notes"] = notes;
    }
    return j;
}

}  // namespace fstirling
