#include "tapa/complex_io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

#include "tapa/errors.hpp"

namespace tapa {

namespace {

double parse_real(const std::string& s, const std::string& whole) {
    if (s.empty() || s == "+") return 1.0;  // bare "i" / "+i"
    if (s == "-") return -1.0;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size())
        throw DomainError("malformed complex literal: \"" + whole + "\"");
    return v;
}

} // namespace

Cplx parse_complex(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw DomainError("empty complex literal");

    if (s.back() != 'i' && s.back() != 'I')
        return Cplx(parse_real(s, text), 0.0);

    const std::string body = s.substr(0, s.size() - 1);
    // Split at the last top-level '+'/'-' (one not directly after an exponent
    // marker and not leading). Everything after it is the imaginary part.
    for (std::size_t pos = body.size(); pos-- > 1;) {
        const char c = body[pos];
        if ((c == '+' || c == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E')
            return Cplx(parse_real(body.substr(0, pos), text),
                        parse_real(body.substr(pos), text));
    }
    return Cplx(0.0, parse_real(body, text));
}

std::string format_complex(const Cplx& z) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

} // namespace tapa
