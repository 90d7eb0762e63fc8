#include "fqgamma/fq.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace fqgamma {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// q = p^r with p prime, r >= 1; throws otherwise.
void prime_power_split(std::uint64_t q, std::uint32_t& p, std::uint32_t& r) {
    if (q < 2) throw domain_error("q must be at least 2");
    std::uint64_t base = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) { base = d; break; }
    }
    std::uint32_t e = 0;
    std::uint64_t acc = 1;
    while (acc < q) { acc *= base; ++e; }
    if (acc != q) throw domain_error("q = " + std::to_string(q) + " is not a prime power");
    p = static_cast<std::uint32_t>(base);
    r = e;
}

// --- dense polynomials over F_p, ascending digit vectors ---------------------

using PPoly = std::vector<std::uint32_t>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const PPoly& a) { return static_cast<int>(a.size()) - 1; }

PPoly pmul(const PPoly& a, const PPoly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    ptrim(c);
    return c;
}

std::uint32_t pinv_scalar(std::uint32_t a, std::uint32_t p) {
    // p is small and prime; plain exhaustive search keeps this dependency-free.
    for (std::uint32_t x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    throw domain_error("no inverse mod p");
}

PPoly pmod(PPoly a, const PPoly& m, std::uint32_t p) {
    ptrim(a);
    const int dm = pdeg(m);
    const std::uint32_t lead_inv = pinv_scalar(m.back(), p);
    while (pdeg(a) >= dm) {
        const int shift = pdeg(a) - dm;
        const std::uint32_t c = a.back() * lead_inv % p;
        for (int i = 0; i <= dm; ++i) {
            std::uint32_t sub = c * m[i] % p;
            std::uint32_t& tgt = a[i + shift];
            tgt = (tgt + p - sub) % p;
        }
        ptrim(a);
    }
    return a;
}

bool p_is_irreducible(const PPoly& m, std::uint32_t p) {
    const int d = pdeg(m);
    if (d <= 0) return false;
    if (d == 1) return true;
    // Trial division by every monic polynomial of degree up to d/2.
    for (int dd = 1; 2 * dd <= d; ++dd) {
        std::uint64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            PPoly div(dd + 1, 0);
            std::uint64_t c = code;
            for (int i = 0; i < dd; ++i) { div[i] = c % p; c /= p; }
            div[dd] = 1;
            if (pmod(m, div, p).empty()) return false;
        }
    }
    return true;
}

// --- text grammar for polynomials in g over F_p ------------------------------

struct GTok {
    enum Kind { Int, Sym, Plus, Minus, Star, Caret, End } kind;
    long long value = 0;
};

std::vector<GTok> g_lex(const std::string& s) {
    std::vector<GTok> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                v = v * 10 + (s[i] - '0');
                if (v > 1'000'000'000ll) throw domain_error("numeric literal too large in '" + s + "'");
                ++i;
            }
            out.push_back({GTok::Int, v});
            continue;
        }
        switch (c) {
            case 'g': out.push_back({GTok::Sym, 0}); break;
            case '+': out.push_back({GTok::Plus, 0}); break;
            case '-': out.push_back({GTok::Minus, 0}); break;
            case '*': out.push_back({GTok::Star, 0}); break;
            case '^': out.push_back({GTok::Caret, 0}); break;
            default:
                throw domain_error(std::string("unexpected character '") + c + "' in field element '" + s + "'");
        }
        ++i;
    }
    out.push_back({GTok::End, 0});
    return out;
}

// Parses sum of terms, each term a '*'-joined product of INT and g[^k]
// factors. Result: ascending digits over F_p.
PPoly g_parse(const std::string& text, std::uint32_t p) {
    std::string s = text;
    // Strip one enclosing paren pair if it spans the whole string.
    {
        std::size_t b = 0, e = s.size();
        while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
        if (b < e && s[b] == '(' && s[e - 1] == ')') {
            int depth = 0;
            bool spans = true;
            for (std::size_t i = b; i < e; ++i) {
                if (s[i] == '(') ++depth;
                else if (s[i] == ')') { --depth; if (depth == 0 && i + 1 != e) { spans = false; break; } }
            }
            if (spans && depth == 0) s = s.substr(b + 1, e - b - 2);
        }
    }
    const auto toks = g_lex(s);
    std::size_t pos = 0;
    PPoly acc;
    bool first = true;
    while (toks[pos].kind != GTok::End) {
        long long sign = 1;
        if (toks[pos].kind == GTok::Plus || toks[pos].kind == GTok::Minus) {
            sign = toks[pos].kind == GTok::Minus ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw domain_error("expected '+' or '-' in '" + text + "'");
        }
        first = false;
        // one term: factors joined by optional '*'
        long long coef = 1;
        long long gexp = 0;
        bool any = false;
        while (true) {
            if (toks[pos].kind == GTok::Int) {
                coef = coef * (toks[pos].value % p) % p;
                ++pos;
                any = true;
            } else if (toks[pos].kind == GTok::Sym) {
                ++pos;
                long long e = 1;
                if (toks[pos].kind == GTok::Caret) {
                    ++pos;
                    if (toks[pos].kind != GTok::Int) throw domain_error("expected exponent after '^' in '" + text + "'");
                    e = toks[pos].value;
                    ++pos;
                }
                if (e < 0 || e > 64) throw domain_error("exponent out of range in '" + text + "'");
                gexp += e;
                any = true;
            } else {
                break;
            }
            if (toks[pos].kind == GTok::Star) { ++pos; continue; }
            if (toks[pos].kind == GTok::Int || toks[pos].kind == GTok::Sym) continue;
            break;
        }
        if (!any) throw domain_error("empty term in '" + text + "'");
        long long digit = ((coef * sign) % static_cast<long long>(p) + p) % p;
        if (digit != 0) {
            if (acc.size() < static_cast<std::size_t>(gexp + 1)) acc.resize(gexp + 1, 0);
            acc[gexp] = static_cast<std::uint32_t>((acc[gexp] + digit) % p);
        }
    }
    ptrim(acc);
    return acc;
}

std::string g_print(const PPoly& a) {
    if (a.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = pdeg(a); i >= 0; --i) {
        if (a[i] == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << a[i];
        } else {
            if (a[i] != 1) os << a[i] << '*';
            os << 'g';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

const std::map<std::uint64_t, PPoly>& builtin_moduli() {
    // Ascending digits over F_p for the standard small-field moduli.
    static const std::map<std::uint64_t, PPoly> table = {
        {4, {1, 1, 1}},
        {8, {1, 1, 0, 1}},
        {9, {2, 2, 1}},
        {16, {1, 1, 0, 0, 1}},
        {25, {2, 4, 1}},
        {27, {1, 2, 0, 1}},
        {32, {1, 0, 1, 0, 0, 1}},
        {49, {3, 6, 1}},
        {64, {1, 1, 0, 1, 1, 0, 1}},
    };
    return table;
}

}  // namespace

FqPtr Fq::make(std::uint64_t q) {
    std::uint32_t p = 0, r = 0;
    prime_power_split(q, p, r);
    if (q > kMaxFieldSize) throw guard_error("field size q exceeds the 2^16 guard");
    if (r == 1) return make(p, 1, {0, 1});
    auto it = builtin_moduli().find(q);
    if (it == builtin_moduli().end())
        throw domain_error("no built-in modulus for q = " + std::to_string(q) +
                           "; supply one explicitly (non-prime q above 64)");
    return make(p, r, it->second);
}

FqPtr Fq::make(std::uint64_t q, const std::string& modulus_text) {
    std::uint32_t p = 0, r = 0;
    prime_power_split(q, p, r);
    PPoly m = g_parse(modulus_text, p);
    return make(p, r, m);
}

FqPtr Fq::make(std::uint64_t p, unsigned r, const std::vector<std::uint32_t>& modulus) {
    if (!is_prime_u64(p)) throw domain_error("p = " + std::to_string(p) + " is not prime");
    if (r < 1) throw domain_error("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < r; ++i) {
        q *= p;
        if (q > kMaxFieldSize) throw guard_error("field size q exceeds the 2^16 guard");
    }

    PPoly m = modulus;
    ptrim(m);
    if (pdeg(m) != static_cast<int>(r))
        throw domain_error("field modulus must have degree r = " + std::to_string(r));
    for (auto d : m)
        if (d >= p) throw domain_error("field modulus digit out of range for p");
    if (m.back() != 1) throw domain_error("field modulus must be monic");
    if (r > 1 && !p_is_irreducible(m, static_cast<std::uint32_t>(p)))
        throw domain_error("field modulus " + g_print(m) + " is reducible over F_" + std::to_string(p));

    auto fq = std::shared_ptr<Fq>(new Fq());
    fq->p_ = static_cast<std::uint32_t>(p);
    fq->r_ = r;
    fq->q_ = static_cast<std::uint32_t>(q);
    fq->mod_ = m;
    fq->key_ = "q=" + std::to_string(q) + ";mod=" + g_print(m);
    fq->build_tables();
    return fq;
}

namespace {

felem pack(const PPoly& a, std::uint32_t p) {
    felem v = 0;
    for (int i = pdeg(a); i >= 0; --i) v = v * p + a[i];
    return v;
}

PPoly unpack(felem a, std::uint32_t p, std::uint32_t r) {
    PPoly out(r, 0);
    for (std::uint32_t i = 0; i < r; ++i) { out[i] = a % p; a /= p; }
    ptrim(out);
    return out;
}

}  // namespace

void Fq::build_tables() {
    auto mul_slow = [&](felem a, felem b) -> felem {
        PPoly prod = pmul(unpack(a, p_, r_), unpack(b, p_, r_), p_);
        return pack(pmod(std::move(prod), mod_, p_), p_);
    };
    auto pow_slow = [&](felem a, std::uint64_t e) -> felem {
        felem acc = 1;
        while (e) {
            if (e & 1) acc = mul_slow(acc, a);
            a = mul_slow(a, a);
            e >>= 1;
        }
        return acc;
    };

    // Distinct prime factors of q-1.
    std::uint64_t n = q_ - 1;
    std::vector<std::uint64_t> primes;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            primes.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) primes.push_back(n);

    felem gen = 0;
    for (felem c = 1; c < q_; ++c) {
        bool primitive = true;
        for (auto ell : primes)
            if (pow_slow(c, (q_ - 1) / ell) == 1) { primitive = false; break; }
        if (primitive) { gen = c; break; }
    }

    exp_.assign(q_, 0);
    log_.assign(q_, 0);
    felem cur = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = mul_slow(cur, gen);
    }
}

felem Fq::gen() const {
    if (r_ == 1) throw domain_error("prime field has no extension generator g");
    return p_;  // packed representation of the class of the modulus variable
}

felem Fq::add(felem a, felem b) const {
    if (p_ == 2) return a ^ b;
    felem res = 0, place = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        res += (a % p_ + b % p_) % p_ * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return res;
}

felem Fq::neg(felem a) const {
    if (p_ == 2) return a;
    felem res = 0, place = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        res += (p_ - a % p_) % p_ * place;
        a /= p_;
        place *= p_;
    }
    return res;
}

felem Fq::sub(felem a, felem b) const { return add(a, neg(b)); }

felem Fq::mul(felem a, felem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t e = static_cast<std::uint64_t>(log_[a]) + log_[b];
    return exp_[e % (q_ - 1)];
}

felem Fq::inv(felem a) const {
    if (a == 0) throw domain_error("division by zero in F_q");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

felem Fq::pow(felem a, long long e) const {
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;
        throw domain_error("zero raised to a negative power");
    }
    const long long m = q_ - 1;
    long long em = ((e % m) + m) % m;
    return exp_[static_cast<std::uint64_t>(log_[a]) * em % m];
}

felem Fq::from_int(long long n) const {
    long long v = ((n % p_) + p_) % p_;
    return static_cast<felem>(v);
}

std::vector<std::uint32_t> Fq::coords(felem a) const {
    std::vector<std::uint32_t> out(r_, 0);
    for (std::uint32_t i = 0; i < r_; ++i) { out[i] = a % p_; a /= p_; }
    return out;
}

std::string Fq::to_string(felem a) const { return g_print(unpack(a, p_, r_)); }

felem Fq::parse_elem(const std::string& text) const {
    PPoly a = g_parse(text, p_);
    if (pdeg(a) >= static_cast<int>(r_)) {
        if (r_ == 1) throw domain_error("'" + text + "': symbol g is not available over a prime field");
        a = pmod(std::move(a), mod_, p_);
    }
    return pack(a, p_);
}

bool Fq::is_simple_coeff(felem a) const {
    if (a < p_) return true;  // prime-field constant
    PPoly c = unpack(a, p_, r_);
    int nonzero = 0;
    for (auto d : c)
        if (d != 0) ++nonzero;
    return nonzero == 1 && c.back() == 1;  // exactly one term, unit coefficient
}

}  // namespace fqgamma
