#include "mvpoly/bigint.hpp"

#include <algorithm>

namespace mvpoly {

namespace {
void trim(std::vector<uint32_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}
} // namespace

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    unsigned long long m = v > 0 ? static_cast<unsigned long long>(v)
                                 : 0ULL - static_cast<unsigned long long>(v);
    while (m) {
        mag_.push_back(static_cast<uint32_t>(m & 0xffffffffu));
        m >>= 32;
    }
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t k = a.size(); k-- > 0;)
        if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
    return 0;
}

int BigInt::cmp(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
    unsigned long long carry = 0;
    for (size_t k = 0; k < r.size(); ++k) {
        unsigned long long s = carry;
        if (k < a.size()) s += a[k];
        if (k < b.size()) s += b[k];
        r[k] = static_cast<uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    trim(r);
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    long long borrow = 0;
    for (size_t k = 0; k < r.size(); ++k) {
        long long s = static_cast<long long>(r[k]) - borrow - (k < b.size() ? b[k] : 0);
        if (s < 0) {
            s += (1LL << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[k] = static_cast<uint32_t>(s);
    }
    trim(r);
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        unsigned long long carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            unsigned long long cur = static_cast<unsigned long long>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            unsigned long long cur = r[k] + carry;
            r[k] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    trim(r);
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
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
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = a.sign_;
            r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
        } else {
            r.sign_ = b.sign_;
            r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
        }
    }
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) {
    return a + (-b);
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
    return r;
}

std::string BigInt::str() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
        // divide by 10^9 in place
        unsigned long long rem = 0;
        for (size_t k = m.size(); k-- > 0;) {
            unsigned long long cur = (rem << 32) | m[k];
            m[k] = static_cast<uint32_t>(cur / 1000000000ULL);
            rem = cur % 1000000000ULL;
        }
        trim(m);
        for (int d = 0; d < 9; ++d) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    std::string out;
    if (sign_ < 0) out.push_back('-');
    out.append(digits.rbegin(), digits.rend());
    return out;
}

} // namespace mvpoly
