// SPDX-License-Identifier: Apache-2.0
//
// fdrelay: achievable rates and degrees of freedom of half- and full-duplex MIMO relaying
// Copyright (C) 2026 The fdrelay authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef FDRELAY_CSV_HPP
#define FDRELAY_CSV_HPP

#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fdrelay
{
    inline constexpr int csv_significant_digits = 12;

    // Shortest "%.12g"-style rendering; locale independent.
    inline std::string format_number(double v)
    {
        char buf[64];
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, csv_significant_digits);
        if (ec != std::errc{})
            throw std::runtime_error("format_number: conversion failed");
        return std::string(buf, ptr);
    }

    // Rectangular numeric table. Empty cells (std::nullopt) are written as
    // empty fields.
    struct CsvDataset
    {
        using Cell = std::optional<double>;

        std::vector<std::string> header;
        std::vector<std::vector<Cell>> rows;

        void add_row(std::vector<Cell> row)
        {
            if (row.size() != header.size())
                throw std::logic_error("CsvDataset: row arity " + std::to_string(row.size()) +
                                       " does not match header arity " + std::to_string(header.size()));
            rows.push_back(std::move(row));
        }

        std::size_t column(const std::string &name) const
        {
            for (std::size_t i = 0; i < header.size(); ++i)
                if (header[i] == name)
                    return i;
            throw std::out_of_range("CsvDataset: no column '" + name + "'");
        }

        // Column values; empty cells become NaN.
        std::vector<double> values(const std::string &name) const
        {
            const std::size_t c = column(name);
            std::vector<double> out;
            out.reserve(rows.size());
            for (const auto &row : rows)
                out.push_back(row[c].value_or(std::numeric_limits<double>::quiet_NaN()));
            return out;
        }

        void write(std::ostream &os) const
        {
            for (std::size_t i = 0; i < header.size(); ++i)
                os << (i ? "," : "") << header[i];
            os << '\n';
            for (const auto &row : rows)
            {
                for (std::size_t i = 0; i < row.size(); ++i)
                {
                    if (i)
                        os << ',';
                    if (row[i])
                        os << format_number(*row[i]);
                }
                os << '\n';
            }
        }

        std::string str() const
        {
            std::ostringstream os;
            write(os);
            return os.str();
        }

        void save(const std::filesystem::path &path) const
        {
            std::ofstream out(path, std::ios::binary);
            if (!out)
                throw std::runtime_error("cannot write '" + path.string() + "'");
            write(out);
            if (!out)
                throw std::runtime_error("write failed for '" + path.string() + "'");
        }
    };
}

#endif
