#include "vrkit_cli/z0_parse.hpp"

#include <cstddef>
#include <stdexcept>

namespace vrkit::cli {

namespace {

double parse_real(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty number in complex literal");
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse number '" + text + "'");
    }
    if (used != text.size()) throw std::invalid_argument("trailing junk in number '" + text + "'");
    return v;
}

// coefficient of the imaginary part: "", "+" -> 1, "-" -> -1, otherwise a number
double parse_imag_coeff(const std::string& text) {
    if (text.empty() || text == "+") return 1.0;
    if (text == "-") return -1.0;
    return parse_real(text);
}

}  // namespace

cx parse_complex(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (c != ' ' && c != '\t') s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty complex literal");

    const bool has_i = s.back() == 'i' || s.back() == 'I';
    if (!has_i) return cx{parse_real(s), 0.0};
    s.pop_back();

    // split at the last top-level sign that is not an exponent sign
    for (std::size_t k = s.size(); k-- > 1;) {
        const char c = s[k];
        if ((c == '+' || c == '-') && s[k - 1] != 'e' && s[k - 1] != 'E')
            return cx{parse_real(s.substr(0, k)), parse_imag_coeff(s.substr(k))};
    }
    return cx{0.0, parse_imag_coeff(s)};
}

}  // namespace vrkit::cli
