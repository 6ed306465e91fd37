#pragma once
// Conventional arbitrary-precision naturals (GMP-backed). Used as the
// reference against which the other representations are checked.

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "giant/nat_core.hpp"

namespace giant {

class RefNat {
public:
    RefNat() = default;
    explicit RefNat(std::uint64_t v);
    // Throws DomainError on a negative magnitude.
    explicit RefNat(mpz_class magnitude);

    // Decimal digits only, no sign, no leading '+'. Leading zeros accepted.
    static RefNat parse_decimal(std::string_view text);
    std::string to_decimal() const;

    const mpz_class& magnitude() const noexcept { return value_; }
    bool is_zero() const noexcept { return mpz_sgn(value_.get_mpz_t()) == 0; }
    bool is_odd() const noexcept { return mpz_odd_p(value_.get_mpz_t()) != 0; }
    // Number of ordinary binary digits (0 for zero).
    std::size_t bit_length() const;

    friend bool operator==(const RefNat& a, const RefNat& b) {
        return mpz_cmp(a.value_.get_mpz_t(), b.value_.get_mpz_t()) == 0;
    }

private:
    mpz_class value_;
};

RefNat apply_o(const RefNat& x);
RefNat apply_i(const RefNat& x);
RefNat strip_o(const RefNat& x);
RefNat strip_i(const RefNat& x);
bool ends_o(const RefNat& x);

// Native fast paths, kept apart from the generic algorithms so that the
// latter can be checked against them.
RefNat oracle_add(const RefNat& x, const RefNat& y);
RefNat oracle_sub(const RefNat& x, const RefNat& y);
RefNat oracle_mul(const RefNat& x, const RefNat& y);
RefNat oracle_pow(const RefNat& x, std::uint64_t y);
std::strong_ordering oracle_cmp(const RefNat& x, const RefNat& y);
std::pair<RefNat, RefNat> oracle_div_and_rem(const RefNat& x, const RefNat& y);
RefNat oracle_and(const RefNat& x, const RefNat& y);
RefNat oracle_or(const RefNat& x, const RefNat& y);
RefNat oracle_xor(const RefNat& x, const RefNat& y);
RefNat oracle_exp2(std::uint64_t k);

} // namespace giant
