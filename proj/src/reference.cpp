#include "gswsp/reference.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <string>

#include "gswsp/errors.hpp"
#include "reference_data.hpp"

namespace gswsp {

namespace {

template <class T>
T parse_field(std::string_view s) {
    T v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ConfigError("reference table: malformed field '" + std::string(s) + "'");
    }
    return v;
}

ReferenceTable parse_table(int id, std::string_view csv) {
    ReferenceTable t;
    t.id = id;
    std::istringstream in{std::string(csv)};
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) {
            throw ConfigError("reference table: malformed row '" + line + "'");
        }
        const std::string_view sv(line);
        t.rows.push_back({parse_field<double>(sv.substr(0, c1)),
                          parse_field<int>(sv.substr(c1 + 1, c2 - c1 - 1)),
                          parse_field<double>(sv.substr(c2 + 1))});
    }
    return t;
}

}  // namespace

std::vector<double> ReferenceTable::eps_values() const {
    std::vector<double> out;
    for (const auto& r : rows) {
        bool seen = false;
        for (double e : out) seen = seen || e == r.eps_plus;
        if (!seen) out.push_back(r.eps_plus);
    }
    return out;
}

std::vector<ReferenceRow> ReferenceTable::rows_for(double eps_plus) const {
    std::vector<ReferenceRow> out;
    for (const auto& r : rows) {
        if (r.eps_plus == eps_plus) out.push_back(r);
    }
    return out;
}

std::string_view reference_csv(int id) {
    switch (id) {
        case 1: return detail::kTable1Csv;
        case 2: return detail::kTable2Csv;
        default: throw ConfigError("unknown reference table " + std::to_string(id));
    }
}

const ReferenceTable& reference_table(int id) {
    static const ReferenceTable t1 = parse_table(1, reference_csv(1));
    static const ReferenceTable t2 = parse_table(2, reference_csv(2));
    switch (id) {
        case 1: return t1;
        case 2: return t2;
        default: throw ConfigError("unknown reference table " + std::to_string(id));
    }
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace gswsp
