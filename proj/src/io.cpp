#include "srpoly/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "srpoly/errors.hpp"

namespace srpoly {

std::string format_number(double v) {
    if (v == 0.0) return "0";
    if (std::isfinite(v) && v == std::trunc(v) && std::abs(v) < 9.007199254740992e15)
        return std::to_string(static_cast<long long>(v));
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

double parse_literal(const std::string& tok) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (first != last && *first == '+') ++first;
    double v = 0.0;
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw Error("bad coefficient literal '" + tok + "'");
    return v;
}

} // namespace

std::vector<double> parse_coeffs(const std::string& text) {
    const std::size_t pos = text.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) throw Error("empty coefficient input");

    std::vector<double> out;
    if (text[pos] == '[') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw Error(std::string("coefficient JSON: ") + e.what());
        }
        if (!doc.is_array()) throw Error("coefficient JSON must be an array of numbers");
        for (const auto& el : doc) {
            if (!el.is_number()) throw Error("coefficient JSON must be an array of numbers");
            out.push_back(el.get<double>());
        }
    } else {
        std::istringstream is(text);
        std::string tok;
        while (is >> tok) out.push_back(parse_literal(tok));
    }
    if (out.empty()) throw Error("no coefficients in input");
    return out;
}

std::vector<double> load_coeff_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open coefficient file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_coeffs(buf.str());
}

std::string render_coeffs(const std::vector<double>& coeffs) {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) s += ",";
        s += format_number(coeffs[i]);
    }
    s += "]";
    return s;
}

} // namespace srpoly
