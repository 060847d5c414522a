#include "drg/field.hpp"

#include <algorithm>
#include <numeric>

namespace drg {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; (long long)d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<int> digits_of(int a, int p, int e) {
    std::vector<int> d(e, 0);
    for (int i = 0; i < e && a; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

int encode(const std::vector<int>& d, int p) {
    int a = 0;
    for (int i = (int)d.size() - 1; i >= 0; --i) a = a * p + d[i];
    return a;
}

// polynomial arithmetic over GF(p) on coefficient vectors (low-degree first)
std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    return c;
}

void poly_mod(std::vector<int>& a, const std::vector<int>& m, int p) {
    int dm = (int)m.size() - 1;
    // m is monic
    for (int i = (int)a.size() - 1; i >= dm; --i) {
        int c = a[i];
        if (!c) continue;
        for (int j = 0; j <= dm; ++j) {
            int k = i - dm + j;
            a[k] = ((a[k] - c * m[j]) % p + p) % p;
        }
    }
    a.resize(dm);
}

int poly_degree(const std::vector<int>& a) {
    for (int i = (int)a.size() - 1; i >= 0; --i)
        if (a[i]) return i;
    return -1;
}

// remainder of a by b, both low-degree-first, b nonzero, over GF(p)
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
    int db = poly_degree(b);
    int lead_inv = 0;
    for (int t = 1; t < p; ++t)
        if (b[db] * t % p == 1) lead_inv = t;
    for (int i = poly_degree(a); i >= db; i = poly_degree(a)) {
        int c = a[i] * lead_inv % p;
        for (int j = 0; j <= db; ++j)
            a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
    }
    return a;
}

bool poly_irreducible(const std::vector<int>& m, int p) {
    int e = poly_degree(m);
    if (e <= 0) return false;
    if (e == 1) return true;
    // trial division by every monic polynomial of degree 1..e/2
    for (int d = 1; 2 * d <= e; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long low = 0; low < count; ++low) {
            std::vector<int> div(d + 1, 0);
            long long x = low;
            for (int i = 0; i < d; ++i) {
                div[i] = (int)(x % p);
                x /= p;
            }
            div[d] = 1;
            auto r = poly_rem(m, div, p);
            if (poly_degree(r) < 0) return false;
        }
    }
    return true;
}

}  // namespace

int FieldTable::add(int a, int b) const {
    auto da = digits_of(a, p, e), db = digits_of(b, p, e);
    for (int i = 0; i < e; ++i) da[i] = (da[i] + db[i]) % p;
    return encode(da, p);
}

int FieldTable::neg(int a) const {
    auto d = digits_of(a, p, e);
    for (int i = 0; i < e; ++i) d[i] = (p - d[i]) % p;
    return encode(d, p);
}

int FieldTable::sub(int a, int b) const { return add(a, neg(b)); }

int FieldTable::mul(int a, int b) const {
    auto da = digits_of(a, p, e), db = digits_of(b, p, e);
    auto c = poly_mul(da, db, p);
    poly_mod(c, modulus, p);
    return encode(c, p);
}

int FieldTable::pow(int a, long long t) const {
    if (t < 0) return pow(inverse(a), -t);
    int r = 1, base = a;
    while (t) {
        if (t & 1) r = mul(r, base);
        base = mul(base, base);
        t >>= 1;
    }
    return r;
}

int FieldTable::inverse(int a) const {
    if (a == 0) throw input_error("zero has no multiplicative inverse");
    return pow(a, q - 2);
}

int FieldTable::multiplicative_order(int a) const {
    if (a == 0) throw input_error("zero has no multiplicative order");
    // strip each prime factor of q-1 from the exponent while possible
    int ord = q - 1;
    int rem = ord;
    for (int f = 2; f <= rem; ++f) {
        if (rem % f) continue;
        while (rem % f == 0) rem /= f;
        while (ord % f == 0 && pow(a, ord / f) == 1) ord /= f;
    }
    return ord;
}

std::string FieldTable::label(int a) const {
    std::string s(e, '0');
    auto d = digits_of(a, p, e);
    for (int i = 0; i < e; ++i) s[e - 1 - i] = char('0' + d[i]);
    return s;
}

int FieldTable::parse(const std::string& s) const {
    if ((int)s.size() != e) throw input_error("field element literal must have " +
                                              std::to_string(e) + " digits");
    std::vector<int> d(e, 0);
    for (int i = 0; i < e; ++i) {
        char c = s[e - 1 - i];
        if (c < '0' || c >= '0' + p) throw input_error("bad digit in field element '" + s + "'");
        d[i] = c - '0';
    }
    return encode(d, p);
}

FieldTable gf_make(int p, int e) {
    if (!is_prime(p)) throw input_error("field characteristic must be prime");
    if (e < 1) throw input_error("field degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > 1000000) throw input_error("field order exceeds 10^6");
    }
    FieldTable f;
    f.p = p;
    f.e = e;
    f.q = (int)q;
    // lexicographically smallest monic irreducible, low-degree coefficients
    // compared first: enumerate constant-first counters
    long long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long long low = 0; low < count; ++low) {
        // decode `low` so the constant coefficient is the most significant
        // counter digit: tuples (c0, c1, ..., c_{e-1}) come out in lex order
        std::vector<int> m(e + 1, 0);
        long long x = low;
        for (int i = e - 1; i >= 0; --i) {
            m[i] = (int)(x % p);
            x /= p;
        }
        m[e] = 1;
        if (poly_irreducible(m, p)) {
            f.modulus = m;
            return f;
        }
    }
    throw std::runtime_error("no irreducible modulus found");  // unreachable
}

int element_of_order(const FieldTable& f, int d) {
    if (d < 1 || (f.q - 1) % d != 0)
        throw input_error("order " + std::to_string(d) + " does not divide " +
                          std::to_string(f.q - 1));
    for (int a = 1; a < f.q; ++a)
        if (f.multiplicative_order(a) == d) return a;
    throw std::runtime_error("no element of requested order");  // unreachable: group is cyclic
}

int relative_trace(const FieldTable& f, int s, int x) {
    if (s < 1 || f.e % s != 0) throw input_error("subfield degree must divide field degree");
    long long qs = 1;
    for (int i = 0; i < s; ++i) qs *= f.p;
    int acc = 0, term = x;
    for (int i = 0; i < f.e / s; ++i) {
        acc = f.add(acc, term);
        term = f.pow(term, qs);
    }
    return acc;
}

GroupPtr additive_group(const FieldTable& f) {
    GroupTable g;
    g.n = f.q;
    g.identity = 0;
    g.mul.resize((size_t)f.q * f.q);
    for (int a = 0; a < f.q; ++a)
        for (int b = 0; b < f.q; ++b) g.mul[(size_t)a * f.q + b] = f.add(a, b);
    g.labels.resize(f.q);
    for (int a = 0; a < f.q; ++a) g.labels[a] = f.label(a);
    g.name = "GF(" + std::to_string(f.q) + ")+";
    return make_group_from_table(std::move(g));
}

GroupPtr product_group(const FieldTable& f, int copies) {
    if (copies < 1) throw input_error("need at least one copy");
    long long n = 1;
    for (int i = 0; i < copies; ++i) {
        n *= f.q;
        if (n > 5000) throw input_error("product group order exceeds the guard of 5000");
    }
    int nn = (int)n;
    GroupTable g;
    g.n = nn;
    g.identity = 0;
    g.mul.resize((size_t)nn * nn);
    for (int a = 0; a < nn; ++a)
        for (int b = 0; b < nn; ++b) {
            int x = a, y = b, out = 0, pw = 1;
            for (int i = 0; i < copies; ++i) {
                out += f.add(x % f.q, y % f.q) * pw;
                x /= f.q;
                y /= f.q;
                pw *= f.q;
            }
            g.mul[(size_t)a * nn + b] = out;
        }
    g.labels.resize(nn);
    for (int a = 0; a < nn; ++a) {
        // row-major: first coordinate varies slowest
        std::vector<int> coord(copies);
        int x = a;
        for (int i = copies - 1; i >= 0; --i) {
            coord[i] = x % f.q;
            x /= f.q;
        }
        std::string s = "(";
        for (int i = 0; i < copies; ++i) {
            if (i) s += ",";
            s += f.label(coord[i]);
        }
        s += ")";
        g.labels[a] = s;
    }
    g.name = "GF(" + std::to_string(f.q) + ")^" + std::to_string(copies);
    return make_group_from_table(std::move(g));
}

}  // namespace drg
