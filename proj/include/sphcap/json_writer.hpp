#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace sphcap {

// Doubles rendered with 17 significant digits (%.17g): enough for exact
// round-trips, and byte-stable for identical bit patterns.
std::string format_double17(double v);

// Minimal streaming JSON writer. Keys keep insertion order, numbers use
// format_double17, output carries no insignificant whitespace beyond single
// spaces after ':' and ','. nlohmann/json is used for parsing inputs; output
// goes through this writer so the numeric formatting contract holds.
class JsonWriter {
public:
    explicit JsonWriter(std::ostream& out) : out_(out) {}

    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(std::string_view k);
    JsonWriter& value(double v);
    JsonWriter& value(std::int64_t v);
    JsonWriter& value(std::uint64_t v);
    JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
    JsonWriter& value(bool v);
    JsonWriter& value(std::string_view v);
    JsonWriter& value(const char* v) { return value(std::string_view(v)); }
    JsonWriter& null();

private:
    void pre_value();
    void write_escaped(std::string_view s);

    std::ostream& out_;
    // Simple comma bookkeeping; nesting depth is bounded in practice.
    bool need_comma_[64] = {};
    int depth_ = 0;
    bool after_key_ = false;
};

}  // namespace sphcap
