#pragma once

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gsa {

// Minimal CSV writer: fixed column order, one row per write() call.
// Numeric formatting uses max_digits10 so files round-trip exactly.
class CsvWriter {
public:
    CsvWriter(const std::string& path, std::initializer_list<const char*> columns)
        : out_(path) {
        if (!out_)
            throw std::runtime_error("cannot open for writing: " + path);
        bool first = true;
        for (const char* c : columns) {
            if (!first) out_ << ',';
            out_ << c;
            first = false;
        }
        out_ << '\n';
    }

    template <typename... Ts>
    void write(const Ts&... fields) {
        bool first = true;
        ((write_field(fields, first), first = false), ...);
        out_ << '\n';
    }

    void flush() { out_.flush(); }

private:
    template <typename T>
    void write_field(const T& v, bool first) {
        if (!first) out_ << ',';
        if constexpr (std::is_floating_point_v<T>) {
            std::ostringstream s;
            s.precision(17);
            s << v;
            out_ << s.str();
        } else {
            out_ << v;
        }
    }

    std::ofstream out_;
};

}  // namespace gsa
