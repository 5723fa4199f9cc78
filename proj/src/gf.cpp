#include "parhitchin/gf.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace parhitchin {

namespace {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---- minimal F_p[x] arithmetic on raw digit vectors, used only while
// ---- constructing the defining irreducible.

using PVec = std::vector<uint32_t>;  // coefficients, ascending, mod p

void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmulmod(const PVec& a, const PVec& b, const PVec& f, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] += uint64_t(a[i]) * b[j];
    }
    // reduce mod f (monic, degree d)
    size_t d = f.size() - 1;
    for (size_t i = acc.size(); i-- > d;) {
        uint64_t c = acc[i] % p;
        if (!c) continue;
        uint64_t cc = p - c;  // c x^i == (p-c) f_j x^{i-d+j} mod p, x^d part cancels
        for (size_t j = 0; j < d; ++j) acc[i - d + j] += cc * (f[j] % p) % p;
        acc[i] = 0;
    }
    PVec r(d);
    for (size_t i = 0; i < d && i < acc.size(); ++i) r[i] = uint32_t(acc[i] % p);
    ptrim(r);
    return r;
}

PVec ppowmod_x(uint64_t e_p, uint32_t reps, const PVec& f, uint32_t p) {
    // computes x^(p^reps) mod f by repeated p-th powering of x
    PVec x = {0, 1};
    ptrim(x);
    PVec cur = x;
    for (uint32_t k = 0; k < reps; ++k) {
        // cur = cur^p mod f via square-and-multiply
        PVec base = cur, r = {1};
        uint64_t e = e_p;
        while (e) {
            if (e & 1) r = pmulmod(r, base, f, p);
            base = pmulmod(base, base, f, p);
            e >>= 1;
        }
        cur = r;
    }
    return cur;
}

PVec psub(const PVec& a, const PVec& b, uint32_t p) {
    PVec r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint32_t x = i < a.size() ? a[i] : 0;
        uint32_t y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    ptrim(r);
    return r;
}

PVec pgcd(PVec a, PVec b, uint32_t p) {
    auto inv_modp = [&](uint32_t v) {
        uint32_t r = 1, base = v, e = p - 2;
        while (e) {
            if (e & 1) r = uint32_t(uint64_t(r) * base % p);
            base = uint32_t(uint64_t(base) * base % p);
            e >>= 1;
        }
        return r;
    };
    while (!b.empty()) {
        // a mod b
        uint32_t lb = inv_modp(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            uint32_t c = uint32_t(uint64_t(a.back()) * lb % p);
            size_t off = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i)
                a[off + i] = (a[off + i] + p - uint32_t(uint64_t(c) * b[i] % p)) % p;
            ptrim(a);
            if (a.size() < b.size()) break;
        }
        std::swap(a, b);
    }
    return a;
}

bool rabin_irreducible(const PVec& f, uint32_t p, uint32_t m) {
    // x^(p^m) == x mod f, and gcd(x^(p^(m/q)) - x, f) == 1 for prime q | m
    PVec x = {0, 1};
    PVec xm = ppowmod_x(p, m, f, p);
    if (psub(xm, x, p) != PVec{}) return false;
    uint32_t mm = m;
    for (uint32_t q = 2; q <= mm; ++q) {
        if (mm % q) continue;
        while (mm % q == 0) mm /= q;
        PVec h = psub(ppowmod_x(p, m / q, f, p), x, p);
        PVec g = pgcd(h, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

Field::Field(FieldSpec spec) : spec_(spec) {
    if (!is_prime(spec.p)) throw Error("field characteristic must be prime");
    if (spec.m < 1 || spec.m > 20) throw Error("field extension degree out of range");
    size_ = 1;
    for (uint32_t i = 0; i < spec.m; ++i) {
        if (size_ > (uint64_t(1) << 62) / spec.p) throw Error("field too large");
        size_ *= spec.p;
    }
    if (spec.m >= 2) {
        // first monic irreducible of degree m in base-p order
        const uint32_t p = spec.p, m = spec.m;
        for (uint64_t idx = 0;; ++idx) {
            if (idx >= size_) throw Error("no irreducible found");  // unreachable
            PVec f(m + 1, 0);
            uint64_t v = idx;
            for (uint32_t i = 0; i < m; ++i) {
                f[i] = uint32_t(v % p);
                v /= p;
            }
            f[m] = 1;
            if (f[0] == 0) continue;  // reducible: x divides
            if (rabin_irreducible(f, p, m)) {
                modulus_.assign(f.begin(), f.end() - 1);
                break;
            }
        }
    }
}

bool Field::valid_digits(Elem a) const {
    std::vector<uint32_t> d = unpack(a);
    Elem back = pack(d);
    return back == a;
}

std::vector<uint32_t> Field::unpack(Elem a) const {
    std::vector<uint32_t> d(spec_.m);
    for (uint32_t i = 0; i < spec_.m; ++i) {
        d[i] = uint32_t(a % spec_.p);
        a /= spec_.p;
    }
    return d;
}

Elem Field::pack(const std::vector<uint32_t>& digits) const {
    Elem a = 0;
    for (size_t i = digits.size(); i-- > 0;) a = a * spec_.p + digits[i] % spec_.p;
    return a;
}

Elem Field::add(Elem a, Elem b) const {
    if (spec_.m == 1) {
        uint64_t s = a + b;
        return s >= spec_.p ? s - spec_.p : s;
    }
    Elem r = 0, mul = 1;
    for (uint32_t i = 0; i < spec_.m; ++i) {
        uint64_t s = a % spec_.p + b % spec_.p;
        if (s >= spec_.p) s -= spec_.p;
        r += s * mul;
        a /= spec_.p;
        b /= spec_.p;
        mul *= spec_.p;
    }
    return r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::neg(Elem a) const {
    if (spec_.m == 1) return a ? spec_.p - a : 0;
    Elem r = 0, mul = 1;
    for (uint32_t i = 0; i < spec_.m; ++i) {
        uint64_t d = a % spec_.p;
        r += (d ? spec_.p - d : 0) * mul;
        a /= spec_.p;
        mul *= spec_.p;
    }
    return r;
}

Elem Field::mul(Elem a, Elem b) const {
    const uint32_t p = spec_.p;
    if (spec_.m == 1) return a * b % p;
    if (a == 0 || b == 0) return 0;
    const uint32_t m = spec_.m;
    uint32_t da[20], db[20];
    uint64_t acc[39] = {0};
    for (uint32_t i = 0; i < m; ++i) {
        da[i] = uint32_t(a % p);
        a /= p;
        db[i] = uint32_t(b % p);
        b /= p;
    }
    for (uint32_t i = 0; i < m; ++i) {
        if (!da[i]) continue;
        for (uint32_t j = 0; j < m; ++j) acc[i + j] += uint64_t(da[i]) * db[j];
    }
    // reduce degrees m..2m-2 using x^m = -(sum modulus_[j] x^j)
    for (uint32_t i = 2 * m - 2; i >= m; --i) {
        uint64_t c = acc[i] % p;
        if (c) {
            uint64_t cc = p - c;
            for (uint32_t j = 0; j < m; ++j) {
                uint32_t fj = modulus_[j];
                if (fj) acc[i - m + j] += cc * fj % p;
            }
        }
        acc[i] = 0;
    }
    Elem r = 0, mulp = 1;
    for (uint32_t i = 0; i < m; ++i) {
        r += (acc[i] % p) * mulp;
        mulp *= p;
    }
    return r;
}

Elem Field::pow(Elem a, uint64_t e) const {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw NotAUnit("inverse of zero field element");
    if (spec_.m == 1) {
        // extended euclid on integers
        int64_t t = 0, nt = 1, r = spec_.p, nr = int64_t(a);
        while (nr) {
            int64_t q = r / nr;
            t -= q * nt;
            std::swap(t, nt);
            r -= q * nr;
            std::swap(r, nr);
        }
        if (t < 0) t += spec_.p;
        return Elem(t);
    }
    return pow(a, size_ - 2);
}

Elem Field::from_int(int64_t v) const {
    int64_t r = v % int64_t(spec_.p);
    if (r < 0) r += spec_.p;
    return Elem(r);
}

Elem Embedding::map(Elem a) const {
    if (from->spec() == to->spec()) return a;
    Elem r = 0;
    for (uint32_t i = 0; i < from->degree(); ++i) {
        uint32_t d = uint32_t(a % from->characteristic());
        a /= from->characteristic();
        if (d) r = to->add(r, to->mul(to->from_int(d), gen_powers[i]));
    }
    return r;
}

const Field& field_of(FieldSpec spec) {
    static std::mutex mu;
    static std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(spec.p, spec.m);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<Field>(spec)).first;
    return *it->second;
}

}  // namespace parhitchin
