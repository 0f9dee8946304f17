#include "intamp/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace intamp {

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(Int(s));
        }
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0) throw InputError("rational with zero denominator: " + s);
        return Rat(n, d);
    } catch (const std::runtime_error&) {
        throw InputError("malformed rational: " + s);
    }
}

std::string rat_str(const Rat& x) {
    if (is_integer(x)) return num(x).str();
    return num(x).str() + "/" + den(x).str();
}

long floor_log2(const Rat& x) {
    if (x == 0) throw MathError("floor_log2 of zero");
    Int n = int_abs(num(x));
    Int d = den(x);
    long bn = static_cast<long>(msb(n));
    long bd = static_cast<long>(msb(d));
    // 2^(bn-bd-1) < n/d < 2^(bn-bd+1); decide by one comparison
    long e = bn - bd;
    if (e >= 0) {
        if (n >= (d << static_cast<unsigned>(e + 1))) ++e;
        else if (n < (d << static_cast<unsigned>(e))) --e;
    } else {
        if ((n << static_cast<unsigned>(-e)) < d) --e;
        else if ((n << static_cast<unsigned>(-e + 1)) >= d) ++e;
    }
    return e;
}

bool perfect_kth_root(const Int& x, unsigned k, Int& root) {
    if (x < 0) return false;
    if (x == 0 || x == 1) {
        root = x;
        return true;
    }
    // bracket by bit length, then binary search
    unsigned bits = msb(x) + 1;
    Int lo = Int(1) << ((bits - 1) / k);
    Int hi = (Int(1) << (bits / k + 1));
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        Int p = pow(mid, k);
        if (p == x) {
            root = mid;
            return true;
        }
        if (p < x) lo = mid + 1;
        else hi = mid;
    }
    return pow(lo, k) == x ? (root = lo, true) : false;
}

bool rational_kth_root(const Rat& x, unsigned k, Rat& root) {
    if (x < 0) return false;
    Int rn, rd;
    if (!perfect_kth_root(num(x), k, rn)) return false;
    if (!perfect_kth_root(den(x), k, rd)) return false;
    root = Rat(rn, rd);
    return true;
}

namespace {

// floor(sqrt(n)) for n >= 0
Int isqrt_floor(const Int& n) { return sqrt(n); }

}  // namespace

Rat rat_sqrt_lower(const Rat& x, unsigned prec) {
    if (x < 0) throw MathError("sqrt of negative rational");
    if (x == 0) return Rat(0);
    // sqrt(n/d) = sqrt(n*d)/d; scale by 4^prec for precision
    Int n = num(x), d = den(x);
    Int scaled = n * d << (2 * prec);
    Int r = isqrt_floor(scaled);
    return Rat(r, d << prec);
}

Rat rat_sqrt_upper(const Rat& x, unsigned prec) {
    if (x < 0) throw MathError("sqrt of negative rational");
    if (x == 0) return Rat(0);
    Int n = num(x), d = den(x);
    Int scaled = n * d << (2 * prec);
    Int r = isqrt_floor(scaled) + 1;
    return Rat(r, d << prec);
}

}  // namespace intamp
