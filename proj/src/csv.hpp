// Copyright 2026 The cvml Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CVML_APP_CSV_HPP
#define CVML_APP_CSV_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace cvml::app {

// Empty cells are for columns that do not apply to a row.
using Cell = std::variant<std::monostate, double, std::string>;
using Row = std::vector<Cell>;

struct Table {
    std::vector<std::string> comments;
    std::vector<std::string> columns;
    std::vector<Row> rows;
    std::size_t dropped = 0;

    // Appends the row unless a numeric cell is non-finite.
    bool add(Row row);
};

std::string format_number(double v);
void write_csv(std::ostream &os, const Table &t);
// Writes to path, or stdout when path is empty or "-". Throws IoError.
void write_csv_file(const std::string &path, const Table &t);
// stderr note about dropped rows, if any.
void report_dropped(const Table &t, const std::string &what);

}  // namespace cvml::app

#endif
