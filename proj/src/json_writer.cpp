#include "eigsum/json_writer.hpp"

#include <cmath>
#include <cstdio>
#include <variant>

namespace eigsum {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void JsonWriter::newline() {
    if (pretty_) {
        out_ << '\n' << std::string(2 * stack_.size(), ' ');
    }
}

void JsonWriter::before_value() {
    if (after_key_) {
        after_key_ = false;
        return;
    }
    if (!stack_.empty()) {
        if (!stack_.back().empty) {
            out_ << ',';
        }
        stack_.back().empty = false;
        newline();
    }
}

JsonWriter& JsonWriter::begin_object() {
    before_value();
    out_ << '{';
    stack_.push_back({false, true});
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    const bool empty = stack_.back().empty;
    stack_.pop_back();
    if (!empty) {
        newline();
    }
    out_ << '}';
    if (stack_.empty() && pretty_) {
        out_ << '\n';
    }
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    before_value();
    out_ << '[';
    stack_.push_back({true, true});
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    const bool empty = stack_.back().empty;
    stack_.pop_back();
    if (!empty) {
        newline();
    }
    out_ << ']';
    if (stack_.empty() && pretty_) {
        out_ << '\n';
    }
    return *this;
}

JsonWriter& JsonWriter::key(std::string_view k) {
    before_value();
    write_string(k);
    out_ << (pretty_ ? ": " : ":");
    after_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double x) {
    before_value();
    if (std::isfinite(x)) {
        out_ << format_double(x);
    } else {
        out_ << "null";
    }
    return *this;
}

JsonWriter& JsonWriter::value(std::int64_t x) {
    before_value();
    out_ << x;
    return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t x) {
    before_value();
    out_ << x;
    return *this;
}

JsonWriter& JsonWriter::value(bool b) {
    before_value();
    out_ << (b ? "true" : "false");
    return *this;
}

JsonWriter& JsonWriter::value(std::string_view s) {
    before_value();
    write_string(s);
    return *this;
}

void JsonWriter::write_string(std::string_view s) {
    out_ << '"';
    for (char c : s) {
        switch (c) {
            case '"':
                out_ << "\\\"";
                break;
            case '\\':
                out_ << "\\\\";
                break;
            case '\n':
                out_ << "\\n";
                break;
            case '\t':
                out_ << "\\t";
                break;
            case '\r':
                out_ << "\\r";
                break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out_ << buf;
                } else {
                    out_ << c;
                }
        }
    }
    out_ << '"';
}

JsonWriter& JsonWriter::null() {
    before_value();
    out_ << "null";
    return *this;
}

void write_report(JsonWriter& w, const BoundReport& r) {
    const bool na = r.verdict == Verdict::not_applicable;
    w.begin_object();
    w.field("name", r.name);
    w.key("params").begin_object();
    for (const auto& [k, v] : r.params) {
        w.key(k);
        std::visit([&](const auto& x) { w.value(x); }, v);
    }
    w.end_object();
    if (na) {
        w.key("bound").null();
        w.key("measured").null();
        w.key("slack").null();
    } else {
        w.field("bound", r.bound);
        w.field("measured", r.measured);
        w.field("slack", r.slack);
    }
    w.field("holds", r.holds());
    w.field("verdict", to_string(r.verdict));
    w.field("asserted", r.asserted);
    w.field("tolerance", r.tolerance);
    if (!r.pairs.empty()) {
        w.key("pairs").begin_array();
        for (auto [u, v] : r.pairs) {
            w.begin_array().value(static_cast<std::uint64_t>(u)).value(static_cast<std::uint64_t>(v)).end_array();
        }
        w.end_array();
    }
    if (!r.subset.empty()) {
        w.key("subset").begin_array();
        for (Vertex v : r.subset) {
            w.value(static_cast<std::uint64_t>(v));
        }
        w.end_array();
    }
    if (!r.note.empty()) {
        w.field("note", r.note);
    }
    w.end_object();
}

void write_reports(JsonWriter& w, const std::vector<BoundReport>& reports) {
    w.begin_array();
    for (const auto& r : reports) {
        write_report(w, r);
    }
    w.end_array();
}

void write_verdict(JsonWriter& w, const EmbedVerdict& v) {
    w.begin_object();
    w.field("nu", static_cast<std::uint64_t>(v.nu));
    w.field("verdict", v.excluded ? "EXCLUDED" : "NOT-EXCLUDED");
    if (v.first_violation_k) {
        w.field("first_violation_k", static_cast<std::uint64_t>(*v.first_violation_k));
    } else {
        w.key("first_violation_k").null();
    }
    if (v.slack) {
        w.field("slack", *v.slack);
    } else {
        w.key("slack").null();
    }
    if (v.excluded) {
        w.field("violated", v.violated);
    }
    w.end_object();
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t x) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

void write_manifest(JsonWriter& w, const RunManifest& m) {
    w.begin_object();
    w.field("tool_version", m.tool_version);
    w.field("input_digest", m.input_digest);
    w.field("seed", m.seed);
    w.field("tolerance", m.tolerance);
    w.field("command_line", m.command_line);
    w.end_object();
}

}  // namespace eigsum
