#include "effbayes/csv.hpp"

#include <fstream>

#include "effbayes/errors.hpp"

namespace effbayes {

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out(path, std::ios::binary);  // binary: byte-identical across platforms
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    auto emit = [&out](const std::vector<std::string>& fields) {
        for (size_t i = 0; i < fields.size(); ++i) {
            if (fields[i].find_first_of(",\n\r") != std::string::npos)
                throw Error("CSV field contains a separator: " + fields[i]);
            if (i) out << ',';
            out << fields[i];
        }
        out << '\n';
    };
    emit(header);
    for (const auto& row : rows) {
        if (row.size() != header.size()) throw Error("CSV row width mismatch");
        emit(row);
    }
}

std::string render_decimal(const Rational& r) {
    return r.decimal_string(12);
}

}  // namespace effbayes
