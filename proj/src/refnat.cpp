#include "giant/refnat.hpp"

#include <utility>

namespace giant {

RefNat::RefNat(std::uint64_t v) {
    mpz_import(value_.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
}

RefNat::RefNat(mpz_class magnitude) : value_(std::move(magnitude)) {
    if (mpz_sgn(value_.get_mpz_t()) < 0)
        throw DomainError("negative magnitude");
}

RefNat RefNat::parse_decimal(std::string_view text) {
    if (text.empty())
        throw ParseError("empty decimal number", 0);
    for (std::size_t k = 0; k < text.size(); ++k) {
        if (text[k] < '0' || text[k] > '9')
            throw ParseError("expected a decimal digit", k);
    }
    mpz_class v;
    v.set_str(std::string(text), 10);
    return RefNat(std::move(v));
}

std::string RefNat::to_decimal() const {
    return value_.get_str(10);
}

std::size_t RefNat::bit_length() const {
    return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

RefNat apply_o(const RefNat& x) {
    return RefNat(mpz_class(2 * x.magnitude() + 1));
}

RefNat apply_i(const RefNat& x) {
    return RefNat(mpz_class(2 * x.magnitude() + 2));
}

RefNat strip_o(const RefNat& x) {
    if (x.is_zero() || !x.is_odd())
        throw DomainError("strip_o on a value not ending in o");
    mpz_class r = x.magnitude() - 1;
    mpz_fdiv_q_2exp(r.get_mpz_t(), r.get_mpz_t(), 1);
    return RefNat(std::move(r));
}

RefNat strip_i(const RefNat& x) {
    if (x.is_zero() || x.is_odd())
        throw DomainError("strip_i on a value not ending in i");
    mpz_class r = x.magnitude() - 2;
    mpz_fdiv_q_2exp(r.get_mpz_t(), r.get_mpz_t(), 1);
    return RefNat(std::move(r));
}

bool ends_o(const RefNat& x) {
    return x.is_odd();
}

RefNat oracle_add(const RefNat& x, const RefNat& y) {
    return RefNat(mpz_class(x.magnitude() + y.magnitude()));
}

RefNat oracle_sub(const RefNat& x, const RefNat& y) {
    if (mpz_cmp(x.magnitude().get_mpz_t(), y.magnitude().get_mpz_t()) < 0)
        throw DomainError("subtraction underflow");
    return RefNat(mpz_class(x.magnitude() - y.magnitude()));
}

RefNat oracle_mul(const RefNat& x, const RefNat& y) {
    return RefNat(mpz_class(x.magnitude() * y.magnitude()));
}

RefNat oracle_pow(const RefNat& x, std::uint64_t y) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), x.magnitude().get_mpz_t(), y);
    return RefNat(std::move(r));
}

std::strong_ordering oracle_cmp(const RefNat& x, const RefNat& y) {
    const int c = mpz_cmp(x.magnitude().get_mpz_t(), y.magnitude().get_mpz_t());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::pair<RefNat, RefNat> oracle_div_and_rem(const RefNat& x, const RefNat& y) {
    if (y.is_zero())
        throw DomainError("division by zero");
    mpz_class q;
    mpz_class r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.magnitude().get_mpz_t(), y.magnitude().get_mpz_t());
    return {RefNat(std::move(q)), RefNat(std::move(r))};
}

RefNat oracle_and(const RefNat& x, const RefNat& y) {
    return RefNat(mpz_class(x.magnitude() & y.magnitude()));
}

RefNat oracle_or(const RefNat& x, const RefNat& y) {
    return RefNat(mpz_class(x.magnitude() | y.magnitude()));
}

RefNat oracle_xor(const RefNat& x, const RefNat& y) {
    return RefNat(mpz_class(x.magnitude() ^ y.magnitude()));
}

RefNat oracle_exp2(std::uint64_t k) {
    mpz_class r;
    mpz_setbit(r.get_mpz_t(), k);
    return RefNat(std::move(r));
}

} // namespace giant
