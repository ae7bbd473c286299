// fieldspec.cpp — see fieldspec.hpp.
#include "normeq/fieldspec.hpp"

#include <fstream>
#include <sstream>

namespace normeq {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool is_prime_u32(uint64_t v) {
    if (v < 2) return false;
    for (uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

}  // namespace

FieldSpec parse_field_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0, qline = 0, fline = 0;
    std::string ftext;
    uint64_t qval = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        size_t eq = s.find('=');
        if (eq == std::string::npos) throw ParseError("expected key = value", lineno, 1);
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        if (key == "q") {
            if (qline) throw ParseError("q given twice", lineno, 1);
            qline = lineno;
            try {
                size_t used = 0;
                qval = std::stoull(val, &used);
                if (used != val.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError("q must be an integer", lineno, eq + 2);
            }
        } else if (key == "f") {
            if (fline) throw ParseError("f given twice", lineno, 1);
            fline = lineno;
            if (val.size() >= 2 && val.front() == '"' && val.back() == '"')
                val = val.substr(1, val.size() - 2);
            ftext = val;
        } else {
            throw ParseError("unknown key \"" + key + "\"", lineno, 1);
        }
    }
    if (!qline) throw ParseError("missing q", lineno + 1, 1);
    if (!fline) throw ParseError("missing f", lineno + 1, 1);
    if (!is_prime_u32(qval) || qval > 0x7fffffffu)
        throw ParseError("q must be a prime", qline, 1);
    FieldSpec spec;
    spec.q = static_cast<uint32_t>(qval);
    try {
        spec.f = parse_poly_xt(ftext, spec.q);
    } catch (const ParseError& e) {
        throw ParseError(std::string("in f: ") + e.what(), fline, e.col);
    }
    return spec;
}

FieldSpec parse_field_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FieldError("cannot open field file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_field_text(buf.str());
}

std::shared_ptr<const FunctionField> load_field(const FieldSpec& spec) {
    return FunctionField::build(spec.q, spec.f);
}

}  // namespace normeq
