#pragma once

#include <string>
#include <string_view>

namespace contractix {

// JSON string literal with quotes; escapes backslash, quote, and control
// bytes (graph6 payloads may contain '"' and '\\').
inline std::string json_quote(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    out.push_back('"');
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    static constexpr char hexdig[] = "0123456789abcdef";
                    out += "\\u00";
                    out.push_back(hexdig[(c >> 4) & 0xf]);
                    out.push_back(hexdig[c & 0xf]);
                } else {
                    out.push_back(c);
                }
                break;
        }
    }
    out.push_back('"');
    return out;
}

}  // namespace contractix
