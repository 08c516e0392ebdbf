#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fstirling/laurent.hpp"

namespace fstirling {

/// One checked cell of an identity. By default a cell passes iff lhs == rhs
/// exactly; tolerance-based checks set `pass` explicitly.
struct Cell
{
    std::vector<long> indices;
    LaurentPoly lhs;
    LaurentPoly rhs;
    bool pass = false;
    std::string note;

    static Cell exact(std::vector<long> indices, LaurentPoly lhs, LaurentPoly rhs);
    LaurentPoly residual() const { return lhs - rhs; }
};

/// Verification report. Checkers never throw on a mismatch; they record it.
struct Report
{
    std::string identity;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::vector<Cell> cells;
    std::vector<std::string> notes;

    bool passed() const;
    std::size_t failures() const;
    void append(const Report& other);

    /// {"identity", "params", "cells": [{"indices", "lhs", "rhs", "residual", "pass"}]}
    /// plus "notes" when present. Values use canonical text; `decimal_digits`
    /// >= 0 adds a decimal rendering of constant values.
    nlohmann::ordered_json to_json(int decimal_digits = -1) const;
};

/// Canonical text for a value, or a rounded decimal when it is a constant and
/// digits >= 0.
std::string render_value(const LaurentPoly& v, int decimal_digits = -1);

}  // namespace fstirling
