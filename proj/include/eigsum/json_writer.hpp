#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "eigsum/lattice_bounds.hpp"
#include "eigsum/report.hpp"

namespace eigsum {

// Minimal streaming JSON writer. Floats are printed with 17 significant digits
// so values round-trip; non-finite floats become null. Keys appear in the
// order they are written, which keeps output byte-stable.
class JsonWriter {
public:
    explicit JsonWriter(std::ostream& out, bool pretty = true) : out_(out), pretty_(pretty) {}

    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(std::string_view k);

    JsonWriter& value(double x);
    JsonWriter& value(std::int64_t x);
    JsonWriter& value(std::uint64_t x);
    JsonWriter& value(bool b);
    JsonWriter& value(std::string_view s);
    JsonWriter& value(const char* s) { return value(std::string_view(s)); }
    JsonWriter& null();

    template <typename T>
    JsonWriter& field(std::string_view k, const T& v) {
        key(k);
        return value(v);
    }

private:
    void before_value();
    void write_string(std::string_view s);
    void newline();

    struct Level {
        bool array;
        bool empty;
    };

    std::ostream& out_;
    bool pretty_;
    bool after_key_ = false;
    std::vector<Level> stack_;
};

std::string format_double(double x);

// BoundReport fields in order: name, params, bound, measured, slack, holds,
// verdict, asserted, tolerance, then pairs / subset / note when present.
void write_report(JsonWriter& w, const BoundReport& r);
void write_reports(JsonWriter& w, const std::vector<BoundReport>& reports);

// Verdict fields in order: nu, verdict, first_violation_k, slack, violated.
void write_verdict(JsonWriter& w, const EmbedVerdict& v);

/// 64-bit FNV-1a (offset basis 0xcbf29ce484222325, prime 0x100000001b3).
std::uint64_t fnv1a64(std::string_view bytes);

/// Sixteen lowercase hex digits.
std::string hex64(std::uint64_t x);

struct RunManifest {
    std::string tool_version;
    /// FNV-1a of the canonical rewrite of the input (edge-list or lattice text
    /// as produced by the writers), so formatting and comments do not matter.
    std::string input_digest;
    std::uint64_t seed = 0;
    double tolerance = kDefaultTolerance;
    std::string command_line;
};

void write_manifest(JsonWriter& w, const RunManifest& m);

}  // namespace eigsum
