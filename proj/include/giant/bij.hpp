#pragma once
// Symbolic bijective base-2 numerals: a plain sequence of o/i digits with no
// compression. Digits live in 64-digit words; full words form a persistent
// stack shared between values, so pushing or popping the outermost digit is
// amortized O(1) and never copies the rest of the sequence.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "giant/nat_core.hpp"

namespace giant {

class BijDigits {
public:
    BijDigits() = default;
    BijDigits(const BijDigits&) = default;
    BijDigits(BijDigits&&) noexcept = default;
    BijDigits& operator=(const BijDigits&) = default;
    BijDigits& operator=(BijDigits&&) noexcept = default;
    ~BijDigits();

    // "oioii" style, least significant (first applied) digit first; "e" is
    // accepted for the empty sequence.
    static BijDigits parse(std::string_view text);
    // Inverse of parse; the empty sequence prints as "e".
    std::string to_string() const;
    // Outermost digit first, nested: 42 -> "I (I (O (I (O B))))".
    std::string to_nested_string() const;

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    // Digit at position k counting from the innermost (k = 0); true for o.
    bool digit_is_o(std::size_t k) const;
    bool outer_is_o() const noexcept;

    BijDigits push(bool o) const;
    BijDigits pop() const;

    friend bool operator==(const BijDigits& a, const BijDigits& b);

private:
    static constexpr unsigned word_digits = 64;

    struct Chunk {
        std::uint64_t bits;
        std::shared_ptr<const Chunk> below;
    };

    // Bit k of a word is set when its k-th digit (from the inner end) is i.
    std::uint64_t top_ = 0;
    unsigned top_count_ = 0;
    std::size_t size_ = 0;
    std::shared_ptr<const Chunk> below_;
};

BijDigits apply_o(const BijDigits& x);
BijDigits apply_i(const BijDigits& x);
BijDigits strip_o(const BijDigits& x);
BijDigits strip_i(const BijDigits& x);
bool ends_o(const BijDigits& x);

} // namespace giant
