#include "giant/bij.hpp"

#include <vector>

namespace giant {

BijDigits::~BijDigits() {
    // Unlink uniquely owned words one at a time instead of recursing.
    std::shared_ptr<const Chunk> p = std::move(below_);
    while (p && p.use_count() == 1) {
        std::shared_ptr<const Chunk> next = std::move(const_cast<Chunk&>(*p).below);
        p = std::move(next);
    }
}

BijDigits BijDigits::parse(std::string_view text) {
    BijDigits r;
    if (text == "e")
        return r;
    for (std::size_t k = 0; k < text.size(); ++k) {
        if (text[k] != 'o' && text[k] != 'i')
            throw ParseError("expected 'o' or 'i'", k);
        r = r.push(text[k] == 'o');
    }
    return r;
}

std::string BijDigits::to_string() const {
    if (size_ == 0)
        return "e";
    std::string s(size_, 'o');
    for (std::size_t k = 0; k < size_; ++k)
        s[k] = digit_is_o(k) ? 'o' : 'i';
    return s;
}

std::string BijDigits::to_nested_string() const {
    if (size_ == 0)
        return "B";
    std::string s;
    s.reserve(size_ * 4 + 1);
    for (std::size_t k = size_; k-- > 0;) {
        s += digit_is_o(k) ? 'O' : 'I';
        s += k == 0 ? " B" : " (";
    }
    s.append(size_ - 1, ')');
    return s;
}

bool BijDigits::digit_is_o(std::size_t k) const {
    if (k >= size_)
        throw DomainError("digit index out of range");
    const std::size_t full_words = size_ - top_count_;
    if (k >= full_words)
        return ((top_ >> (k - full_words)) & 1) == 0;
    // Walk down from the most recent full word.
    std::size_t word = (full_words - k - 1) / word_digits;
    const Chunk* c = below_.get();
    while (word-- > 0)
        c = c->below.get();
    return ((c->bits >> (k % word_digits)) & 1) == 0;
}

bool BijDigits::outer_is_o() const noexcept {
    return size_ != 0 && ((top_ >> (top_count_ - 1)) & 1) == 0;
}

BijDigits BijDigits::push(bool o) const {
    BijDigits r = *this;
    if (r.top_count_ == word_digits) {
        r.below_ = std::make_shared<Chunk>(Chunk{r.top_, std::move(r.below_)});
        r.top_ = 0;
        r.top_count_ = 0;
    }
    if (!o)
        r.top_ |= std::uint64_t{1} << r.top_count_;
    ++r.top_count_;
    ++r.size_;
    return r;
}

BijDigits BijDigits::pop() const {
    if (size_ == 0)
        throw DomainError("pop of an empty digit sequence");
    BijDigits r = *this;
    --r.top_count_;
    r.top_ &= ~(std::uint64_t{1} << r.top_count_);
    --r.size_;
    if (r.top_count_ == 0 && r.below_) {
        r.top_ = r.below_->bits;
        r.top_count_ = word_digits;
        r.below_ = r.below_->below;
    }
    return r;
}

bool operator==(const BijDigits& a, const BijDigits& b) {
    if (a.size_ != b.size_ || a.top_count_ != b.top_count_ || a.top_ != b.top_)
        return false;
    const BijDigits::Chunk* p = a.below_.get();
    const BijDigits::Chunk* q = b.below_.get();
    while (p != q) {
        if (p->bits != q->bits)
            return false;
        p = p->below.get();
        q = q->below.get();
    }
    return true;
}

BijDigits apply_o(const BijDigits& x) {
    return x.push(true);
}

BijDigits apply_i(const BijDigits& x) {
    return x.push(false);
}

BijDigits strip_o(const BijDigits& x) {
    if (!x.outer_is_o())
        throw DomainError("strip_o on a value not ending in o");
    return x.pop();
}

BijDigits strip_i(const BijDigits& x) {
    if (x.empty() || x.outer_is_o())
        throw DomainError("strip_i on a value not ending in i");
    return x.pop();
}

bool ends_o(const BijDigits& x) {
    return x.outer_is_o();
}

} // namespace giant
