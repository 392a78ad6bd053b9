#pragma once

#include "bounds.hpp"
#include "quadrature.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace ostrowski {

/// Every floating-point value leaving the library goes through this one
/// formatter (12 significant digits) so CSV and JSON agree byte for byte.
inline std::string format_g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

/// %.12g can emit inf/nan, which are not JSON; map them to null.
inline std::string json_number(double v) {
    if (!std::isfinite(v)) return "null";
    return format_g12(v);
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

inline const char* bound_csv_header() {
    return "equation_id,a,b,x,lhs,rhs,slack,rigorous";
}

/// One CSV row per evaluated inequality; x is empty for the mean-comparison
/// rows, which have no evaluation point.
inline std::string to_csv(const bound_report& r) {
    std::string row = r.equation_id;
    row += ',';
    row += format_g12(r.a);
    row += ',';
    row += format_g12(r.b);
    row += ',';
    if (r.x) row += format_g12(*r.x);
    row += ',';
    row += format_g12(r.lhs);
    row += ',';
    row += format_g12(r.rhs);
    row += ',';
    row += format_g12(r.slack);
    row += ',';
    row += r.rigorous ? "true" : "false";
    return row;
}

inline std::string to_json(const bound_report& r) {
    std::string o = "{\"equation_id\":\"";
    o += json_escape(r.equation_id);
    o += "\",\"a\":";
    o += json_number(r.a);
    o += ",\"b\":";
    o += json_number(r.b);
    o += ",\"x\":";
    o += r.x ? json_number(*r.x) : "null";
    o += ",\"lhs\":";
    o += json_number(r.lhs);
    o += ",\"rhs\":";
    o += json_number(r.rhs);
    o += ",\"slack\":";
    o += json_number(r.slack);
    o += ",\"rigorous\":";
    o += r.rigorous ? "true" : "false";
    if (!r.metadata.empty()) {
        o += ",\"metadata\":{";
        bool first = true;
        for (const auto& [k, v] : r.metadata) {
            if (!first) o += ',';
            first = false;
            o += '"';
            o += json_escape(k);
            o += "\":\"";
            o += json_escape(v);
            o += '"';
        }
        o += '}';
    }
    o += '}';
    return o;
}

inline const char* quadrature_csv_header() {
    return "n,rule,value,reference,actual_error,tier1,tier2,tier3,rigorous";
}

inline std::string to_csv(const quadrature_result& r) {
    std::string row = std::to_string(r.n);
    row += ',';
    row += to_string(r.rule);
    row += ',';
    row += format_g12(r.value);
    row += ',';
    row += format_g12(r.reference);
    row += ',';
    row += format_g12(r.actual_error);
    row += ',';
    row += format_g12(r.tier1);
    row += ',';
    row += format_g12(r.tier2);
    row += ',';
    row += format_g12(r.tier3);
    row += ',';
    row += r.rigorous ? "true" : "false";
    return row;
}

inline std::string to_json(const quadrature_result& r) {
    std::string o = "{\"n\":";
    o += std::to_string(r.n);
    o += ",\"rule\":\"";
    o += to_string(r.rule);
    o += "\",\"value\":";
    o += json_number(r.value);
    o += ",\"reference\":";
    o += json_number(r.reference);
    o += ",\"actual_error\":";
    o += json_number(r.actual_error);
    o += ",\"tier1\":";
    o += json_number(r.tier1);
    o += ",\"tier2\":";
    o += json_number(r.tier2);
    o += ",\"tier3\":";
    o += json_number(r.tier3);
    o += ",\"rigorous\":";
    o += r.rigorous ? "true" : "false";
    o += '}';
    return o;
}

} // namespace ostrowski
