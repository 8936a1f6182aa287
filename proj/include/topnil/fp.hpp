#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace topnil {

struct TopnilError : std::runtime_error {
    explicit TopnilError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested data is absent from the catalog (exit code 2).
struct MissingDataError : TopnilError {
    explicit MissingDataError(const std::string& what) : TopnilError(what) {}
};

/// Two independent computation routes disagreed (exit code 3).
struct CrossCheckError : TopnilError {
    explicit CrossCheckError(const std::string& what) : TopnilError(what) {}
};

[[noreturn]] inline void fail(const std::string& msg)
{
    throw TopnilError(msg);
}

[[noreturn]] inline void fail_missing(const std::string& msg)
{
    throw MissingDataError(msg);
}

[[noreturn]] inline void fail_crosscheck(const std::string& msg)
{
    throw CrossCheckError(msg);
}

inline void require(bool cond, const std::string& msg)
{
    if (!cond)
        fail(msg);
}

/// A validated prime, p >= 2.
struct Prime {
    int value = 2;

    static Prime checked(int p)
    {
        require(p >= 2, "prime must be >= 2");
        for (int d = 2; d * d <= p; ++d)
            require(p % d != 0, "p = " + std::to_string(p) + " is not prime");
        return Prime{p};
    }
};

/// Arithmetic in F_p on normalized representatives 0..p-1.
inline int fp_norm(long long a, int p)
{
    long long r = a % p;
    if (r < 0)
        r += p;
    return static_cast<int>(r);
}

inline int fp_add(int a, int b, int p) { return fp_norm(static_cast<long long>(a) + b, p); }
inline int fp_sub(int a, int b, int p) { return fp_norm(static_cast<long long>(a) - b, p); }
inline int fp_mul(int a, int b, int p) { return fp_norm(static_cast<long long>(a) * b, p); }
inline int fp_neg(int a, int p) { return fp_norm(-static_cast<long long>(a), p); }

inline int fp_pow(int a, long long e, int p)
{
    int r = 1 % p;
    int base = fp_norm(a, p);
    while (e > 0) {
        if (e & 1)
            r = fp_mul(r, base, p);
        base = fp_mul(base, base, p);
        e >>= 1;
    }
    return r;
}

inline int fp_inv(int a, int p)
{
    require(fp_norm(a, p) != 0, "division by zero in F_p");
    return fp_pow(a, p - 2, p);
}

}  // namespace topnil
