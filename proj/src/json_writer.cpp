#include "sphcap/json_writer.hpp"

#include <cmath>
#include <cstdio>

namespace sphcap {

std::string format_double17(double v) {
    if (std::isnan(v)) return "null";
    if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void JsonWriter::pre_value() {
    if (after_key_) {
        after_key_ = false;
        return;
    }
    if (depth_ > 0 && need_comma_[depth_ - 1]) out_ << ", ";
    if (depth_ > 0) need_comma_[depth_ - 1] = true;
}

JsonWriter& JsonWriter::begin_object() {
    pre_value();
    out_ << '{';
    need_comma_[depth_++] = false;
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    --depth_;
    out_ << '}';
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    pre_value();
    out_ << '[';
    need_comma_[depth_++] = false;
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    --depth_;
    out_ << ']';
    return *this;
}

JsonWriter& JsonWriter::key(std::string_view k) {
    if (need_comma_[depth_ - 1]) out_ << ", ";
    need_comma_[depth_ - 1] = true;
    out_ << '"';
    write_escaped(k);
    out_ << "\": ";
    after_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double v) {
    pre_value();
    out_ << format_double17(v);
    return *this;
}

JsonWriter& JsonWriter::value(std::int64_t v) {
    pre_value();
    out_ << v;
    return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t v) {
    pre_value();
    out_ << v;
    return *this;
}

JsonWriter& JsonWriter::value(bool v) {
    pre_value();
    out_ << (v ? "true" : "false");
    return *this;
}

JsonWriter& JsonWriter::value(std::string_view v) {
    pre_value();
    out_ << '"';
    write_escaped(v);
    out_ << '"';
    return *this;
}

JsonWriter& JsonWriter::null() {
    pre_value();
    out_ << "null";
    return *this;
}

void JsonWriter::write_escaped(std::string_view s) {
    for (char ch : s) {
        switch (ch) {
            case '"': out_ << "\\\""; break;
            case '\\': out_ << "\\\\"; break;
            case '\n': out_ << "\\n"; break;
            case '\r': out_ << "\\r"; break;
            case '\t': out_ << "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out_ << buf;
                } else {
                    out_ << ch;
                }
        }
    }
}

}  // namespace sphcap
