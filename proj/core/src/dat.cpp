#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "slisim/experiments.hpp"

namespace slisim::experiments {

namespace {

void write_number(std::ostream& out, double v) {
    if (!std::isfinite(v)) {
        out << "inf";
        return;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf;
}

std::vector<std::string> split_words(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> words;
    for (std::string w; is >> w;) {
        words.push_back(w);
    }
    return words;
}

}  // namespace

void write_dat(std::ostream& out, const std::vector<ErrorRecord>& records, const std::vector<std::string>& columns) {
    if (columns.empty()) {
        throw std::invalid_argument("dat output needs at least the key column");
    }
    for (std::size_t c = 0; c < columns.size(); ++c) {
        out << (c == 0 ? "" : " ") << columns[c];
    }
    out << '\n';
    for (const auto& r : records) {
        write_number(out, r.key);
        for (std::size_t c = 1; c < columns.size(); ++c) {
            const auto it = r.errors.find(columns[c]);
            if (it == r.errors.end()) {
                throw std::invalid_argument("record is missing column '" + columns[c] + "'");
            }
            out << ' ';
            write_number(out, it->second);
        }
        out << '\n';
    }
}

void emit_dat(const std::vector<ErrorRecord>& records, const std::vector<std::string>& columns,
              const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    write_dat(out, records, columns);
    out.flush();
    if (!out) {
        throw std::runtime_error("failed writing '" + path.string() + "'");
    }
}

DatFile read_dat(std::istream& in) {
    DatFile dat;
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("dat file is empty");
    }
    dat.columns = split_words(line);
    if (dat.columns.empty()) {
        throw std::runtime_error("dat header has no columns");
    }
    while (std::getline(in, line)) {
        const auto words = split_words(line);
        if (words.empty()) {
            continue;
        }
        if (words.size() != dat.columns.size()) {
            throw std::runtime_error("dat row has " + std::to_string(words.size()) + " fields, expected " +
                                     std::to_string(dat.columns.size()));
        }
        ErrorRecord r;
        for (std::size_t c = 0; c < words.size(); ++c) {
            char* end = nullptr;
            const double v = std::strtod(words[c].c_str(), &end);
            if (end == words[c].c_str() || *end != '\0') {
                throw std::runtime_error("malformed number '" + words[c] + "'");
            }
            if (c == 0) {
                r.key = v;
            } else {
                r.errors[dat.columns[c]] = v;
            }
        }
        dat.records.push_back(std::move(r));
    }
    return dat;
}

DatFile read_dat(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path.string() + "'");
    }
    return read_dat(in);
}

}  // namespace slisim::experiments
