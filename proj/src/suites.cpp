/*
   Copyright 2026 The Powersum Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "powersum/suites.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <stdexcept>
#include <thread>

#include "powersum/ansatz.hpp"
#include "powersum/error.hpp"
#include "powersum/sequences.hpp"

namespace powersum {

namespace {

long parse_long(std::string_view text, std::string_view whole) {
    long value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end) throw std::invalid_argument("bad range '" + std::string(whole) + "'");
    return value;
}

std::vector<long> span(long lo, long hi) {
    std::vector<long> out;
    for (long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

unsigned u(long v) {
    if (v < 0) throw std::invalid_argument("parameter must be non-negative");
    return static_cast<unsigned>(v);
}

bool odd(long v) { return v % 2 != 0; }

Suite make(std::string name, std::vector<std::string> axes, Grid defaults, std::function<VerificationReport(const std::vector<long>&)> check,
           std::function<bool(const std::vector<long>&)> accepts = {}) {
    return Suite{std::move(name), std::move(axes), std::move(defaults), std::move(accepts), std::move(check)};
}

std::vector<Suite> build_suites() {
    std::vector<Suite> s;
    s.push_back(make("rec-rel1", {"m", "k"}, {{"m", span(0, 8)}, {"k", span(1, 6)}},
                     [](const auto& p) { return recurrence_rel1_check(u(p[0]), u(p[1])); }));
    s.push_back(make(
        "impl1", {"m", "k", "r"}, {{"m", span(0, 8)}, {"k", span(1, 6)}, {"r", span(1, 6)}},
        [](const auto& p) { return impl1_check(u(p[0]), u(p[1]), u(p[2])); }, [](const auto& p) { return p[2] >= 1 && p[2] <= p[1]; }));
    s.push_back(make(
        "id", {"m", "k", "r", "n"}, {{"m", span(0, 6)}, {"k", span(1, 5)}, {"r", span(1, 5)}, {"n", span(1, 6)}},
        [](const auto& p) { return recurrence_id_check(u(p[0]), u(p[1]), u(p[2]), u(p[3])); },
        [](const auto& p) { return p[2] >= 1 && p[2] <= p[1]; }));
    s.push_back(make("theorem1-consistency", {"m", "k", "n"}, {{"m", span(0, 10)}, {"k", span(1, 5)}, {"n", span(1, 12)}},
                     [](const auto& p) { return theorem1_consistency_check(u(p[0]), u(p[1]), u(p[2])); }));
    s.push_back(make("theorem2", {"m", "k"}, {{"m", span(1, 12)}, {"k", span(1, 6)}},
                     [](const auto& p) { return theorem2_report(u(p[0]), u(p[1])); }));
    s.push_back(make("lemma1", {"m", "k"}, {{"m", span(1, 12)}, {"k", span(1, 8)}},
                     [](const auto& p) { return lemma1_check(u(p[0]), u(p[1])); }));
    s.push_back(make("lemma2", {"k"}, {{"k", span(1, 10)}}, [](const auto& p) { return lemma2_check(u(p[0])); }));
    s.push_back(make("prop32", {"k"}, {{"k", span(1, 8)}}, [](const auto& p) { return prop32_check(u(p[0])); }));
    s.push_back(make(
        "eq23", {"m", "k"}, {{"m", span(1, 11)}, {"k", span(1, 8)}}, [](const auto& p) { return eq23_check(u(p[0]), u(p[1])); },
        [](const auto& p) { return odd(p[0]); }));
    s.push_back(make(
        "eq241", {"m", "k"}, {{"m", span(1, 11)}, {"k", span(1, 8)}}, [](const auto& p) { return eq241_check(u(p[0]), u(p[1])); },
        [](const auto& p) { return odd(p[0]); }));
    s.push_back(make("eq251", {"r", "k"}, {{"r", span(0, 5)}, {"k", span(1, 8)}},
                     [](const auto& p) { return eq251_check(u(p[0]), u(p[1])); }));
    s.push_back(make("eq36", {"r", "k"}, {{"r", span(1, 6)}, {"k", span(1, 6)}}, [](const auto& p) {
        const unsigned r = u(p[0]);
        const BivariateF f = tabulated_F(r);
        VerificationReport report("eq36");
        const Params params{{"r", r}};
        report.expect_equal("degree-in-k", params, f.degree_in_k(), static_cast<int>(r) - 1);
        report.expect_true("w-exponents", params, f.min_w_exponent() >= 1 - static_cast<int>(r), std::to_string(f.min_w_exponent()));
        report.merge(eq36_check(f, u(p[1])));
        return report;
    }));
    s.push_back(make("gandhi-genocchi", {"r"}, {{"r", span(1, 8)}}, [](const auto& p) { return gandhi_genocchi_check(u(p[0])); }));
    s.push_back(make("dumont-foata-symmetry", {"r"}, {{"r", span(1, 6)}},
                     [](const auto& p) { return dumont_foata_symmetry_check(u(p[0])); }));
    s.push_back(make("kimura", {"m"}, {{"m", span(1, 15)}}, [](const auto& p) { return kimura_root_check(u(p[0])); }));
    s.push_back(make("faulhaber-form", {"m"}, {{"m", span(1, 15)}}, [](const auto& p) { return faulhaber_form_check(u(p[0])); }));
    return s;
}

}  // namespace

std::vector<long> parse_range(std::string_view text) {
    std::vector<long> out;
    std::string_view rest = text;
    if (rest.empty()) throw std::invalid_argument("empty range");
    while (true) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        if (const auto dots = item.find(".."); dots != std::string_view::npos) {
            const long lo = parse_long(item.substr(0, dots), text);
            const long hi = parse_long(item.substr(dots + 2), text);
            if (lo > hi) throw std::invalid_argument("empty range '" + std::string(text) + "'");
            if (hi - lo > 100000) throw std::invalid_argument("range too long '" + std::string(text) + "'");
            for (long v = lo; v <= hi; ++v) out.push_back(v);
        } else {
            out.push_back(parse_long(item, text));
        }
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

const std::vector<Suite>& verification_suites() {
    static const std::vector<Suite> suites = build_suites();
    return suites;
}

const Suite* find_suite(std::string_view name) {
    for (const auto& suite : verification_suites()) {
        if (suite.name == name) return &suite;
    }
    return nullptr;
}

Suite conjecture_suite(std::uint64_t cap) {
    return make(
        "conjecture", {"m", "k", "n"}, {{"m", {1, 3, 5, 7, 9}}, {"k", span(1, 4)}, {"n", span(1, 6)}},
        [cap](const auto& p) { return conjecture_relationsh_check(u(p[0]), u(p[1]), u(p[2]), cap); },
        [](const auto& p) { return odd(p[0]) && p[0] > 0; });
}

std::vector<std::vector<long>> expand_grid(const Suite& suite, const Grid& grid) {
    std::vector<const std::vector<long>*> axes;
    for (const auto& name : suite.axes) {
        const auto it = grid.find(name);
        axes.push_back(it != grid.end() ? &it->second : &suite.defaults.at(name));
    }
    std::vector<std::vector<long>> points;
    std::vector<long> point(axes.size());
    // Odometer over the axes, last axis fastest.
    std::vector<std::size_t> index(axes.size(), 0);
    for (const auto* axis : axes) {
        if (axis->empty()) return points;
    }
    while (true) {
        for (std::size_t i = 0; i < axes.size(); ++i) point[i] = (*axes[i])[index[i]];
        if (!suite.accepts || suite.accepts(point)) points.push_back(point);
        std::size_t pos = axes.size();
        while (pos > 0) {
            --pos;
            if (++index[pos] < axes[pos]->size()) break;
            index[pos] = 0;
            if (pos == 0) return points;
        }
        if (axes.empty()) return points;
    }
}

std::vector<PointResult> run_suite(const Suite& suite, const std::vector<std::vector<long>>& points, unsigned workers) {
    std::vector<PointResult> results(points.size());
    std::vector<std::exception_ptr> fatal(points.size());
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            auto& out = results[i];
            for (std::size_t a = 0; a < suite.axes.size(); ++a) out.params.emplace_back(suite.axes[a], points[i][a]);
            try {
                out.report = suite.check(points[i]);
            } catch (const Error& e) {
                if (e.code() == Errc::instance_too_large) {
                    fatal[i] = std::current_exception();
                } else {
                    out.error = e.what();
                }
            } catch (const std::exception& e) {
                out.error = e.what();
            }
        }
    };

    const unsigned count = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(points.size())));
    if (count == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < count; ++t) pool.emplace_back(work);
    }
    for (const auto& e : fatal) {
        if (e) std::rethrow_exception(e);
    }
    return results;
}

VerificationReport summarize(const Suite& suite, const std::vector<PointResult>& results) {
    VerificationReport total(suite.name);
    for (const auto& r : results) {
        total.merge(r.report);
        if (r.error) total.failures.push_back({"error", r.params, *r.error, ""});
    }
    return total;
}

}  // namespace powersum
