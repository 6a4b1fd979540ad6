#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pfaff/errors.hpp"

namespace pfaff {

/// m x m matrix over {+1, -1}, bit-packed row-major (bit 1 means entry -1).
/// For m*m <= 64 the whole matrix round-trips through an integer code, so
/// the set of all m x m sign matrices is the integer range [0, 2^{m*m}).
class SignMatrix {
public:
    explicit SignMatrix(int m); // all +1

    static SignMatrix from_code(int m, std::uint64_t code);
    /// Row-major '+'/'-' characters, whitespace ignored; length must be a
    /// perfect square.
    static SignMatrix parse(std::string_view text);

    int order() const { return m_; }
    int get(int i, int j) const;
    void set(int i, int j, int value); // value in {+1, -1}
    std::uint64_t code() const;

    /// Entrywise product. An involution: S.hadamard(S.hadamard(X)) == X.
    SignMatrix hadamard(const SignMatrix& other) const;
    SignMatrix block(int row0, int col0, int size) const;
    std::vector<int> dense() const; // +-1 entries, row-major

    /// Rows separated by single spaces: "++- +-+ -++".
    std::string str() const;

    friend bool operator==(const SignMatrix& a, const SignMatrix& b) {
        return a.m_ == b.m_ && a.bits_ == b.bits_;
    }

private:
    int bit(int i, int j) const { return i * m_ + j; }
    int m_;
    std::vector<std::uint64_t> bits_;
};

} // namespace pfaff
