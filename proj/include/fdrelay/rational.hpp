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

#ifndef FDRELAY_RATIONAL_HPP
#define FDRELAY_RATIONAL_HPP

#include <boost/rational.hpp>

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fdrelay
{
    using Rational = boost::rational<std::int64_t>;

    inline double to_double(const Rational &q) { return boost::rational_cast<double>(q); }
    inline double to_double(double x) { return x; }

    // "3/4", "0.75", "1" -> exact value. Decimal input is taken literally, so
    // "0.2" becomes 1/5 rather than the nearest binary double.
    inline Rational parse_rational(std::string_view text)
    {
        auto fail = [&] { return std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
        auto parse_int = [&](std::string_view s)
        {
            std::int64_t v = 0;
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
                throw fail();
            return v;
        };

        if (const auto slash = text.find('/'); slash != std::string_view::npos)
        {
            const std::int64_t den = parse_int(text.substr(slash + 1));
            if (den == 0)
                throw fail();
            return {parse_int(text.substr(0, slash)), den};
        }

        bool negative = false;
        std::string_view body = text;
        if (!body.empty() && (body.front() == '-' || body.front() == '+'))
        {
            negative = body.front() == '-';
            body.remove_prefix(1);
        }
        const auto dot = body.find('.');
        std::string_view whole = body.substr(0, dot);
        std::string_view frac = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || frac.size() > 15)
            throw fail();
        if (whole.find_first_not_of("0123456789") != std::string_view::npos ||
            frac.find_first_not_of("0123456789") != std::string_view::npos)
            throw fail();

        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        const std::int64_t w = whole.empty() ? 0 : parse_int(whole);
        const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
        Rational q(w * scale + f, scale);
        return negative ? -q : q;
    }

    inline std::string to_string(const Rational &q)
    {
        if (q.denominator() == 1)
            return std::to_string(q.numerator());
        return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
    }
}

#endif
