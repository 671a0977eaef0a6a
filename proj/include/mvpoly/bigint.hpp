#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mvpoly {

// Arbitrary-precision signed integer, sign-magnitude over base 2^32.
// Supports exactly what the exact-arithmetic layer needs: ring operations,
// comparison, decimal printing.
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v);

    bool is_zero() const { return sign_ == 0; }
    int signum() const { return sign_; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    static int cmp(const BigInt& a, const BigInt& b);

    BigInt operator-() const;
    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    std::string str() const;

  private:
    int sign_ = 0;
    std::vector<uint32_t> mag_; // little endian, trimmed

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b); // a >= b
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
};

} // namespace mvpoly
