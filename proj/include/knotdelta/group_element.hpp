#ifndef KNOTDELTA_GROUP_ELEMENT_HPP
#define KNOTDELTA_GROUP_ELEMENT_HPP

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

namespace knotdelta {

enum class Letter : std::uint8_t { X, Y };

char letter_char(Letter l);

struct BasisSymbol {
    Letter letter;
    int index;
    auto operator<=>(const BasisSymbol&) const = default;
};

/// Element of the free abelian group with basis {X_n, Y_n : n in Z},
/// stored as its finite support.  Stored coefficients are never zero.
class GroupElement {
  public:
    GroupElement() = default;

    static GroupElement basis(Letter l, int index, long long coeff = 1);

    long long coeff(BasisSymbol s) const;
    long long coeff(Letter l, int index) const { return coeff(BasisSymbol{l, index}); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    // Index range of the support; requires a nonzero element.
    int min_index() const;
    int max_index() const;

    const std::map<BasisSymbol, long long>& terms() const { return terms_; }

    GroupElement& add(Letter l, int index, long long coeff);
    GroupElement& operator+=(const GroupElement& o);
    GroupElement& operator-=(const GroupElement& o);
    friend GroupElement operator+(GroupElement a, const GroupElement& b) { return a += b; }
    friend GroupElement operator-(GroupElement a, const GroupElement& b) { return a -= b; }
    GroupElement operator-() const;
    GroupElement operator*(long long k) const;
    bool operator==(const GroupElement&) const = default;

    /// Text form, e.g. "4Y_0 + 3X_-1".  Terms ordered by |coefficient|
    /// descending, ties by (letter, index); zero element prints "0".
    std::string to_text() const;
    /// Parses forms like "2X_0 + Y_1 - 2Y_0 - X_-1" or "0".
    static GroupElement from_text(const std::string& text);

    /// JSON form: array of [letter, index, coeff] sorted by (letter, index),
    /// e.g. [["X",-1,3],["Y",0,4]].
    nlohmann::json to_json() const;
    static GroupElement from_json(const nlohmann::json& j);

  private:
    std::map<BasisSymbol, long long> terms_;
};

struct GroupElementHash {
    std::size_t operator()(const GroupElement& v) const;
};

}  // namespace knotdelta

#endif
