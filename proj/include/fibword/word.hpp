#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fibword {

// The binary alphabet. Symbols carry their ASCII serialization.
enum class Symbol : char { zero = '0', one = '1' };

constexpr char to_char(Symbol s) { return static_cast<char>(s); }

constexpr Symbol symbol_from_char(char c) {
    if (c == '0') return Symbol::zero;
    if (c == '1') return Symbol::one;
    throw std::invalid_argument("symbol_from_char: expected '0' or '1'");
}

constexpr Symbol opposite(Symbol s) {
    return s == Symbol::zero ? Symbol::one : Symbol::zero;
}

// Finite word over {0,1}. Immutable after construction; the underlying
// storage is the ASCII serialization itself.
class Word {
  public:
    Word() = default;

    explicit Word(std::string bits) : bits_(std::move(bits)) {
        for (char c : bits_)
            if (c != '0' && c != '1')
                throw std::invalid_argument(
                    "Word: may contain only '0' and '1'");
    }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    const std::string& str() const { return bits_; }
    std::string_view view() const { return bits_; }

    char operator[](std::size_t i) const { return bits_[i]; }

    Symbol symbol_at(std::size_t i) const { return symbol_from_char(bits_[i]); }

    std::size_t count(Symbol s) const {
        return static_cast<std::size_t>(
            std::count(bits_.begin(), bits_.end(), to_char(s)));
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

  private:
    std::string bits_;
};

inline Word swap_letters(const Word& w) {
    std::string out;
    out.reserve(w.size());
    for (char c : w.view()) out.push_back(c == '0' ? '1' : '0');
    return Word(std::move(out));
}

inline std::ostream& operator<<(std::ostream& os, const Word& w) {
    return os << w.str();
}

}  // namespace fibword
