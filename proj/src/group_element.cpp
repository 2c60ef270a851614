#include "knotdelta/group_element.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <vector>

#include "knotdelta/errors.hpp"

namespace knotdelta {

char letter_char(Letter l) { return l == Letter::X ? 'X' : 'Y'; }

GroupElement GroupElement::basis(Letter l, int index, long long coeff) {
    GroupElement v;
    v.add(l, index, coeff);
    return v;
}

long long GroupElement::coeff(BasisSymbol s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? 0 : it->second;
}

int GroupElement::min_index() const {
    if (is_zero()) throw internal_inconsistency("min_index of zero element");
    int m = terms_.begin()->first.index;
    for (const auto& [s, c] : terms_) m = std::min(m, s.index);
    return m;
}

int GroupElement::max_index() const {
    if (is_zero()) throw internal_inconsistency("max_index of zero element");
    int m = terms_.begin()->first.index;
    for (const auto& [s, c] : terms_) m = std::max(m, s.index);
    return m;
}

GroupElement& GroupElement::add(Letter l, int index, long long coeff) {
    if (coeff == 0) return *this;
    BasisSymbol s{l, index};
    long long& v = terms_[s];
    v += coeff;
    if (v == 0) terms_.erase(s);
    return *this;
}

GroupElement& GroupElement::operator+=(const GroupElement& o) {
    for (const auto& [s, c] : o.terms_) add(s.letter, s.index, c);
    return *this;
}

GroupElement& GroupElement::operator-=(const GroupElement& o) {
    for (const auto& [s, c] : o.terms_) add(s.letter, s.index, -c);
    return *this;
}

GroupElement GroupElement::operator-() const {
    GroupElement v;
    for (const auto& [s, c] : terms_) v.terms_[s] = -c;
    return v;
}

GroupElement GroupElement::operator*(long long k) const {
    GroupElement v;
    if (k == 0) return v;
    for (const auto& [s, c] : terms_) v.terms_[s] = c * k;
    return v;
}

std::string GroupElement::to_text() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<BasisSymbol, long long>> ts(terms_.begin(), terms_.end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        long long ma = std::llabs(a.second), mb = std::llabs(b.second);
        if (ma != mb) return ma > mb;
        return a.first < b.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [s, c] : ts) {
        long long m = std::llabs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (m != 1) out += std::to_string(m);
        out += letter_char(s.letter);
        out += '_';
        out += std::to_string(s.index);
    }
    return out;
}

GroupElement GroupElement::from_text(const std::string& text) {
    GroupElement v;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto parse_int = [&](const char* what) -> long long {
        skip_ws();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        std::size_t digits = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == digits) throw parse_error(std::string("expected integer for ") + what + " in group element");
        return std::stoll(text.substr(start, i - start));
    };

    skip_ws();
    if (i < text.size() && text[i] == '0') {
        std::size_t j = i + 1;
        while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j == text.size()) return v;
    }

    bool expect_term = true;
    long long pending_sign = 1;
    while (true) {
        skip_ws();
        if (i == text.size()) break;
        char c = text[i];
        if (!expect_term) {
            if (c == '+') { pending_sign = 1; ++i; expect_term = true; continue; }
            if (c == '-') { pending_sign = -1; ++i; expect_term = true; continue; }
            throw parse_error("unexpected character in group element: " + std::string(1, c));
        }
        if (c == '-') { pending_sign = -pending_sign; ++i; continue; }
        if (c == '+') { ++i; continue; }
        long long mag = 1;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            mag = std::stoll(text.substr(start, i - start));
            skip_ws();
            if (i < text.size() && text[i] == '*') { ++i; skip_ws(); }
        }
        if (i == text.size() || (text[i] != 'X' && text[i] != 'Y'))
            throw parse_error("expected basis letter X or Y in group element");
        Letter l = text[i] == 'X' ? Letter::X : Letter::Y;
        ++i;
        if (i == text.size() || text[i] != '_')
            throw parse_error("expected '_' after basis letter");
        ++i;
        long long index = parse_int("basis index");
        v.add(l, static_cast<int>(index), pending_sign * mag);
        pending_sign = 1;
        expect_term = false;
    }
    if (expect_term) throw parse_error("empty or dangling group element expression");
    return v;
}

nlohmann::json GroupElement::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [s, c] : terms_)
        arr.push_back({std::string(1, letter_char(s.letter)), s.index, c});
    return arr;
}

GroupElement GroupElement::from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw parse_error("group element JSON must be an array of triples");
    GroupElement v;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_number_integer() ||
            !t[2].is_number_integer())
            throw parse_error("group element JSON entry must be [letter, index, coeff]");
        std::string l = t[0].get<std::string>();
        if (l != "X" && l != "Y") throw parse_error("group element letter must be X or Y");
        v.add(l == "X" ? Letter::X : Letter::Y, t[1].get<int>(), t[2].get<long long>());
    }
    return v;
}

std::size_t GroupElementHash::operator()(const GroupElement& v) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& [s, c] : v.terms()) {
        std::size_t k = (static_cast<std::size_t>(s.index) << 2) ^ static_cast<std::size_t>(s.letter);
        k = k * 0xff51afd7ed558ccdull + static_cast<std::size_t>(c);
        h ^= k + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace knotdelta
