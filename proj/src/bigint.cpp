#include "fm/bigint.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fm {

namespace {

using u32 = uint32_t;
using u64 = uint64_t;

constexpr u64 kBase = 1ull << 32;

// Left shift by s bits (0 <= s < 32).
std::vector<u32> shl_bits(const std::vector<u32>& a, int s) {
    if (s == 0) return a;
    std::vector<u32> r(a.size() + 1, 0);
    u32 carry = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = (a[i] << s) | carry;
        carry = static_cast<u32>(static_cast<u64>(a[i]) >> (32 - s));
    }
    r[a.size()] = carry;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<u32> shr_bits(const std::vector<u32>& a, int s) {
    if (s == 0) return a;
    std::vector<u32> r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        u32 lo = a[i] >> s;
        u32 hi = (i + 1 < a.size()) ? (a[i + 1] << (32 - s)) : 0;
        r[i] = lo | hi;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Divide by a single limb, returning the remainder.
u32 div_small(std::vector<u32>& a, u32 d) {
    u64 rem = 0;
    for (size_t i = a.size(); i-- > 0;) {
        u64 cur = (rem << 32) | a[i];
        a[i] = static_cast<u32>(cur / d);
        rem = cur % d;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return static_cast<u32>(rem);
}

}  // namespace

BigInt::BigInt(i64 v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    u64 m = v < 0 ? ~static_cast<u64>(v) + 1 : static_cast<u64>(v);
    mag_.push_back(static_cast<u32>(m));
    if (m >> 32) mag_.push_back(static_cast<u32>(m >> 32));
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<u32>& a, const std::vector<u32>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<u32> BigInt::add_mag(const std::vector<u32>& a, const std::vector<u32>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<u32> r(big.size() + 1, 0);
    u64 carry = 0;
    for (size_t i = 0; i < big.size(); ++i) {
        u64 s = carry + big[i] + (i < small.size() ? small[i] : 0);
        r[i] = static_cast<u32>(s);
        carry = s >> 32;
    }
    r[big.size()] = static_cast<u32>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<u32> BigInt::sub_mag(const std::vector<u32>& a, const std::vector<u32>& b) {
    std::vector<u32> r(a.size(), 0);
    i64 borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        i64 d = static_cast<i64>(a[i]) - borrow - (i < b.size() ? static_cast<i64>(b[i]) : 0);
        if (d < 0) {
            d += static_cast<i64>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<u32>(d);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<u32> BigInt::mul_mag(const std::vector<u32>& a, const std::vector<u32>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<u32> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        u64 carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            u64 cur = static_cast<u64>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<u32>(cur);
            carry = cur >> 32;
        }
        r[i + b.size()] += static_cast<u32>(carry);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Knuth algorithm D. u and v are magnitudes, v nonzero.
void BigInt::divrem_mag(const std::vector<u32>& u_in, const std::vector<u32>& v_in,
                        std::vector<u32>& q, std::vector<u32>& r) {
    if (cmp_mag(u_in, v_in) < 0) {
        q.clear();
        r = u_in;
        return;
    }
    if (v_in.size() == 1) {
        q = u_in;
        u32 rem = div_small(q, v_in[0]);
        r.clear();
        if (rem) r.push_back(rem);
        return;
    }

    int s = std::countl_zero(v_in.back());
    std::vector<u32> v = shl_bits(v_in, s);
    std::vector<u32> u = shl_bits(u_in, s);
    size_t n = v.size();
    u.resize(u_in.size() + 1, 0);  // one spare high limb for the subtract step
    size_t m = u.size() - 1 - n;

    q.assign(m + 1, 0);
    for (size_t j = m + 1; j-- > 0;) {
        u64 top = (static_cast<u64>(u[j + n]) << 32) | u[j + n - 1];
        u64 qhat = top / v[n - 1];
        u64 rhat = top % v[n - 1];
        while (qhat >= kBase ||
               qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= kBase) break;
        }
        // u[j .. j+n] -= qhat * v
        i64 borrow = 0;
        u64 carry = 0;
        for (size_t i = 0; i < n; ++i) {
            u64 p = qhat * v[i] + carry;
            carry = p >> 32;
            i64 t = static_cast<i64>(u[i + j]) - static_cast<i64>(p & 0xffffffffu) - borrow;
            if (t < 0) {
                t += static_cast<i64>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<u32>(t);
        }
        i64 t = static_cast<i64>(u[j + n]) - static_cast<i64>(carry) - borrow;
        if (t < 0) {
            // qhat was one too large; add v back.
            t += static_cast<i64>(kBase);
            --qhat;
            u64 c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                u64 sum = static_cast<u64>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<u32>(sum);
                c2 = sum >> 32;
            }
            t += static_cast<i64>(c2);
        }
        u[j + n] = static_cast<u32>(t);
        q[j] = static_cast<u32>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    u.resize(n);
    r = shr_bits(u, s);
    while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.sign_ = a.sign_;
        r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    } else {
        int c = BigInt::cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt{};
        const BigInt& big = c > 0 ? a : b;
        const BigInt& small = c > 0 ? b : a;
        r.sign_ = big.sign_;
        r.mag_ = BigInt::sub_mag(big.mag_, small.mag_);
    }
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a) {
    BigInt r = a;
    r.sign_ = -r.sign_;
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt{};
    BigInt r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
    r.trim();
    return r;
}

BigInt BigInt::divided_exact(const BigInt& d) const {
    if (d.sign_ == 0) throw std::invalid_argument("BigInt: division by zero");
    if (sign_ == 0) return BigInt{};
    std::vector<u32> q, r;
    divrem_mag(mag_, d.mag_, q, r);
    if (!r.empty()) throw std::invalid_argument("BigInt: division is not exact");
    BigInt out;
    out.sign_ = sign_ * d.sign_;
    out.mag_ = std::move(q);
    out.trim();
    return out;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
}

std::string BigInt::str() const {
    if (sign_ == 0) return "0";
    std::vector<u32> m = mag_;
    std::string digits;
    while (!m.empty()) {
        u32 rem = div_small(m, 1000000000u);
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

i64 BigInt::to_i64() const {
    if (sign_ == 0) return 0;
    if (mag_.size() > 2) throw std::overflow_error("BigInt: value does not fit in 64 bits");
    u64 m = mag_[0];
    if (mag_.size() == 2) m |= static_cast<u64>(mag_[1]) << 32;
    if (sign_ > 0) {
        if (m > static_cast<u64>(INT64_MAX)) throw std::overflow_error("BigInt: value does not fit");
        return static_cast<i64>(m);
    }
    if (m > static_cast<u64>(INT64_MAX) + 1) throw std::overflow_error("BigInt: value does not fit");
    return static_cast<i64>(-static_cast<i128>(m));
}

}  // namespace fm
