#pragma once

// Test-only reference arithmetic, independent of the log/Zech tables.

#include <cstdint>
#include <vector>

#include "qmds/field.hpp"

namespace oracle {

/// GF(p)[x]/(modulus) on packed coefficient vectors (constant digit lowest).
class SlowField {
public:
    SlowField(unsigned p, std::vector<unsigned> modulus) : p_(p), mod_(std::move(modulus)) {
        deg_ = static_cast<unsigned>(mod_.size() - 1);
        size_ = 1;
        for (unsigned i = 0; i < deg_; ++i) size_ *= p_;
    }

    std::uint32_t size() const { return size_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        auto x = unpack(a), y = unpack(b);
        for (unsigned i = 0; i < deg_; ++i) x[i] = (x[i] + y[i]) % p_;
        return pack(x);
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        auto x = unpack(a), y = unpack(b);
        std::vector<unsigned> prod(2 * deg_, 0);
        for (unsigned i = 0; i < deg_; ++i)
            for (unsigned j = 0; j < deg_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
        for (unsigned i = 2 * deg_ - 1; i >= deg_; --i) {
            const unsigned c = prod[i];
            if (c == 0) continue;
            // x^i = x^(i-deg) * (x^deg), and x^deg = -(lower modulus terms).
            for (unsigned j = 0; j < deg_; ++j) prod[i - deg_ + j] = (prod[i - deg_ + j] + (p_ - c) * mod_[j]) % p_;
            prod[i] = 0;
        }
        prod.resize(deg_);
        return pack(prod);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t n) const {
        std::uint32_t r = 1;
        for (std::uint64_t i = 0; i < n; ++i) r = mul(r, a);
        return r;
    }

private:
    std::vector<unsigned> unpack(std::uint32_t v) const {
        std::vector<unsigned> out(deg_);
        for (unsigned i = 0; i < deg_; ++i) {
            out[i] = v % p_;
            v /= p_;
        }
        return out;
    }
    std::uint32_t pack(const std::vector<unsigned>& c) const {
        std::uint32_t v = 0;
        for (unsigned i = deg_; i-- > 0;) v = v * p_ + c[i];
        return v;
    }

    unsigned p_;
    std::vector<unsigned> mod_;
    unsigned deg_;
    std::uint32_t size_;
};

inline SlowField slow_twin(const qmds::FieldTower& F) { return SlowField(F.characteristic(), F.modulus()); }

}  // namespace oracle
