#include "powfrac/int_polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "powfrac/error.hpp"

namespace powfrac::poly {

namespace {

constexpr std::string_view kModule = "poly_algebra";

[[noreturn]] void parse_error(std::string_view text, const std::string& why) {
    throw Error(ErrorKind::Parse, kModule, "cannot parse polynomial '" + std::string(text) + "': " + why);
}

std::string strip_spaces(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

std::vector<mpz_class> parse_list(std::string_view original, const std::string& s) {
    if (s.size() < 2 || s.back() != ']') parse_error(original, "unterminated list");
    std::vector<mpz_class> out;
    std::string body = s.substr(1, s.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) parse_error(original, "empty list entry");
        if (item.front() == '+') item.erase(0, 1);
        mpz_class v;
        if (v.set_str(item, 10) != 0) parse_error(original, "bad integer '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) parse_error(original, "empty list");
    return out;
}

std::vector<mpz_class> parse_symbolic(std::string_view original, const std::string& s) {
    std::map<int, mpz_class> terms;
    std::size_t i = 0;
    if (s.empty()) parse_error(original, "empty input");
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            parse_error(original, "expected '+' or '-' at offset " + std::to_string(i));
        }
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        mpz_class coeff = 1;
        const bool has_coeff = i > start;
        if (has_coeff) coeff = mpz_class(s.substr(start, i - start), 10);
        int exponent = 0;
        if (i < s.size() && s[i] == '*') {
            if (!has_coeff) parse_error(original, "dangling '*'");
            ++i;
        }
        if (i < s.size() && (s[i] == 'z' || s[i] == 'x')) {
            ++i;
            exponent = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                start = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == start) parse_error(original, "missing exponent");
                exponent = std::stoi(s.substr(start, i - start));
            }
        } else if (!has_coeff) {
            parse_error(original, "expected a term at offset " + std::to_string(start));
        }
        terms[exponent] += sign * coeff;
    }
    const int degree = terms.rbegin()->first;
    std::vector<mpz_class> out(static_cast<std::size_t>(degree) + 1, 0);
    for (const auto& [e, c] : terms) out[static_cast<std::size_t>(e)] = c;
    return out;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.size() < 2) {
        throw Error(ErrorKind::BadInput, kModule, "polynomial must have degree >= 1");
    }
    mpz_class content = 0;
    for (const auto& c : coeffs_) content = gcd(content, c);
    if (coeffs_.back() < 0) content = -content;
    if (content != 1) {
        for (auto& c : coeffs_) c /= content;
    }
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
    const std::string s = strip_spaces(text);
    if (!s.empty() && s.front() == '[') return IntPolynomial(parse_list(text, s));
    return IntPolynomial(parse_symbolic(text, s));
}

bool IntPolynomial::is_self_reciprocal() const noexcept {
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

std::string IntPolynomial::to_string() const {
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const mpz_class mag = abs(c);
        if (c < 0) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        if (mag != 1 || i == 0) out += mag.get_str();
        if (i >= 1) out += 'z';
        if (i >= 2) out += '^' + std::to_string(i);
    }
    return out;
}

std::string IntPolynomial::to_list_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += coeffs_[i].get_str();
    }
    return out + "]";
}

mpz_class length(const IntPolynomial& p) {
    mpz_class sum = 0;
    for (const auto& c : p.coeffs()) sum += abs(c);
    return sum;
}

}  // namespace powfrac::poly
