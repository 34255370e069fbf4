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

#include "csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "config.hpp"

namespace cvml::app {

bool Table::add(Row row) {
    for (const auto &c : row) {
        if (auto d = std::get_if<double>(&c); d && !std::isfinite(*d)) {
            ++dropped;
            return false;
        }
    }
    rows.push_back(std::move(row));
    return true;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", v == 0 ? 0.0 : v);
    return buf;
}

namespace {
struct CellWriter {
    std::ostream &os;
    void operator()(std::monostate) const {}
    void operator()(double d) const { os << format_number(d); }
    void operator()(const std::string &s) const { os << s; }
};
}  // namespace

void write_csv(std::ostream &os, const Table &t) {
    for (const auto &c : t.comments)
        os << "# " << c << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto &row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                os << ',';
            std::visit(CellWriter{os}, row[i]);
        }
        os << '\n';
    }
}

void write_csv_file(const std::string &path, const Table &t) {
    if (path.empty() || path == "-") {
        write_csv(std::cout, t);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    write_csv(out, t);
    out.flush();
    if (!out)
        throw IoError("write to '" + path + "' failed");
}

void report_dropped(const Table &t, const std::string &what) {
    if (t.dropped)
        std::cerr << what << ": dropped " << t.dropped << " degenerate row(s)\n";
}

}  // namespace cvml::app
