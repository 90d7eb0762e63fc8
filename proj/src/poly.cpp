#include "fqgamma/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fqgamma {

namespace {

void check_fields(const FqPtr& a, const FqPtr& b) {
    if (!a || !b) throw domain_error("polynomial is missing its field context");
    if (a.get() != b.get() && !a->same(*b))
        throw domain_error("mixed field contexts: " + a->key() + " vs " + b->key());
}

}  // namespace

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::one(FqPtr F) { return constant(std::move(F), 1); }

Poly Poly::constant(FqPtr F, felem c) {
    Poly p(std::move(F));
    if (c != 0) p.c_ = {c};
    return p;
}

Poly Poly::var(FqPtr F) {
    Poly p(std::move(F));
    p.c_ = {0, 1};
    return p;
}

Poly Poly::from_coeffs(FqPtr F, std::vector<felem> coeffs) {
    for (felem c : coeffs)
        if (c >= F->q()) throw domain_error("coefficient index out of range for " + F->key());
    Poly p(std::move(F));
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

felem Poly::lc() const {
    if (c_.empty()) throw domain_error("the zero polynomial has no leading coefficient");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    check_fields(F_, o.F_);
    Poly res(F_);
    res.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < res.c_.size(); ++i)
        res.c_[i] = F_->add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
    res.trim();
    return res;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly res(F_);
    res.c_ = c_;
    for (auto& c : res.c_) c = F_->neg(c);
    return res;
}

Poly Poly::operator*(const Poly& o) const {
    check_fields(F_, o.F_);
    Poly res(F_);
    if (c_.empty() || o.c_.empty()) return res;
    res.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            res.c_[i + j] = F_->add(res.c_[i + j], F_->mul(c_[i], o.c_[j]));
        }
    }
    res.trim();
    return res;
}

bool Poly::operator==(const Poly& o) const {
    check_fields(F_, o.F_);
    return c_ == o.c_;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    check_fields(F_, d.F_);
    if (d.is_zero()) throw domain_error("polynomial division by zero");
    Poly q(F_), r(F_);
    r.c_ = c_;
    if (deg() < d.deg()) return {q, r};
    q.c_.assign(deg() - d.deg() + 1, 0);
    const felem lead_inv = F_->inv(d.lc());
    while (static_cast<int>(r.c_.size()) - 1 >= d.deg() && !r.c_.empty()) {
        const int shift = static_cast<int>(r.c_.size()) - 1 - d.deg();
        const felem f = F_->mul(r.c_.back(), lead_inv);
        q.c_[shift] = f;
        for (int i = 0; i <= d.deg(); ++i)
            r.c_[i + shift] = F_->sub(r.c_[i + shift], F_->mul(f, d.c_[i]));
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly Poly::scaled(felem c) const {
    Poly res(F_);
    if (c == 0) return res;
    res.c_ = c_;
    for (auto& x : res.c_) x = F_->mul(x, c);
    return res;
}

Poly Poly::monic() const {
    if (is_zero()) throw domain_error("cannot normalize the zero polynomial to monic");
    return scaled(F_->inv(lc()));
}

Poly Poly::pow(unsigned e) const {
    Poly acc = Poly::one(F_);
    Poly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Poly Poly::stretch(unsigned k) const {
    if (k == 0) throw domain_error("stretch factor must be positive");
    Poly res(F_);
    if (c_.empty()) return res;
    res.c_.assign(static_cast<std::size_t>(deg()) * k + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) res.c_[i * k] = c_[i];
    return res;
}

std::uint64_t Poly::code() const {
    std::uint64_t v = 0;
    const std::uint64_t limit = (1ull << 62) / (F_ ? F_->q() : 2);
    for (int i = deg(); i >= 0; --i) {
        if (v > limit) throw guard_error("polynomial too large to index");
        v = v * F_->q() + c_[i];
    }
    return v;
}

Poly Poly::from_code(const FqPtr& F, std::uint64_t code) {
    std::vector<felem> cs;
    while (code) {
        cs.push_back(static_cast<felem>(code % F->q()));
        code /= F->q();
    }
    return from_coeffs(F, std::move(cs));
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.field());
    Poly g = gcd(a, b);
    return ((a * b) / g).monic();
}

std::vector<Poly> enumerate_below_deg(const FqPtr& F, int d) {
    if (d < 0) return {};
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) {
        count *= F->q();
        if (count > kMaxEnumeration) throw guard_error("residue enumeration exceeds the configured guard");
    }
    std::vector<Poly> out;
    out.reserve(count);
    for (std::uint64_t code = 0; code < count; ++code) out.push_back(Poly::from_code(F, code));
    return out;
}

std::vector<Poly> enumerate_monics(const FqPtr& F, int d) {
    if (d < 0) throw domain_error("monic degree must be nonnegative");
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) {
        count *= F->q();
        if (count > kMaxEnumeration) throw guard_error("monic enumeration exceeds the configured guard");
    }
    std::vector<Poly> out;
    out.reserve(count);
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<felem> cs(d + 1, 0);
        std::uint64_t c = code;
        for (int i = 0; i < d; ++i) {
            cs[i] = static_cast<felem>(c % F->q());
            c /= F->q();
        }
        cs[d] = 1;
        out.push_back(Poly::from_coeffs(F, std::move(cs)));
    }
    return out;
}

bool is_irreducible(const Poly& f) {
    if (f.deg() < 1) throw domain_error("irreducibility is asked of nonconstant polynomials only");
    const FqPtr& F = f.field();
    for (int d = 1; 2 * d <= f.deg(); ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= F->q();
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<felem> cs(d + 1, 0);
            std::uint64_t c = code;
            for (int i = 0; i < d; ++i) {
                cs[i] = static_cast<felem>(c % F->q());
                c /= F->q();
            }
            cs[d] = 1;
            if ((f % Poly::from_coeffs(F, std::move(cs))).is_zero()) return false;
        }
    }
    return true;
}

std::vector<std::pair<Poly, int>> factor(const Poly& f) {
    if (f.is_zero()) throw domain_error("cannot factor the zero polynomial");
    const FqPtr& F = f.field();
    std::vector<std::pair<Poly, int>> out;
    Poly rem = f.is_constant() ? Poly::one(F) : f.monic();
    for (int d = 1; 2 * d <= rem.deg(); ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= F->q();
        for (std::uint64_t code = 0; code < count && 2 * d <= rem.deg(); ++code) {
            std::vector<felem> cs(d + 1, 0);
            std::uint64_t c = code;
            for (int i = 0; i < d; ++i) {
                cs[i] = static_cast<felem>(c % F->q());
                c /= F->q();
            }
            cs[d] = 1;
            Poly cand = Poly::from_coeffs(F, std::move(cs));
            int mult = 0;
            while (true) {
                auto [q, r] = rem.divmod(cand);
                if (!r.is_zero()) break;
                rem = q;
                ++mult;
            }
            if (mult > 0) out.emplace_back(std::move(cand), mult);
        }
    }
    if (rem.deg() >= 1) out.emplace_back(rem, 1);
    return out;
}

// --- text grammar -------------------------------------------------------------

namespace {

struct PTok {
    enum Kind { Int, VarT, Coef, Plus, Minus, Star, Caret, End } kind;
    long long ival = 0;
    felem coef = 0;
};

std::vector<PTok> p_lex(const FqPtr& F, const std::string& s) {
    std::vector<PTok> out;
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
            out.push_back({PTok::Int, v, 0});
            continue;
        }
        if (c == '(') {
            int depth = 0;
            std::size_t j = i;
            for (; j < s.size(); ++j) {
                if (s[j] == '(') ++depth;
                else if (s[j] == ')' && --depth == 0) break;
            }
            if (j == s.size()) throw domain_error("unbalanced parentheses in '" + s + "'");
            const std::string inner = s.substr(i + 1, j - i - 1);
            if (inner.find('t') != std::string::npos)
                throw domain_error("parenthesized coefficients may not contain t: '" + inner + "'");
            out.push_back({PTok::Coef, 0, F->parse_elem(inner)});
            i = j + 1;
            continue;
        }
        switch (c) {
            case 't': out.push_back({PTok::VarT, 0, 0}); break;
            case 'g': out.push_back({PTok::Coef, 0, F->gen()}); break;
            case '+': out.push_back({PTok::Plus, 0, 0}); break;
            case '-': out.push_back({PTok::Minus, 0, 0}); break;
            case '*': out.push_back({PTok::Star, 0, 0}); break;
            case '^': out.push_back({PTok::Caret, 0, 0}); break;
            default:
                throw domain_error(std::string("unexpected character '") + c + "' in polynomial '" + s + "'");
        }
        ++i;
    }
    out.push_back({PTok::End, 0, 0});
    return out;
}

}  // namespace

Poly Poly::parse(const FqPtr& F, const std::string& text) {
    const auto toks = p_lex(F, text);
    std::size_t pos = 0;

    auto parse_exp = [&]() -> long long {
        if (toks[pos].kind != PTok::Caret) return 1;
        ++pos;
        if (toks[pos].kind != PTok::Int) throw domain_error("expected exponent after '^' in '" + text + "'");
        const long long e = toks[pos].ival;
        ++pos;
        if (e < 0 || e > 100'000) throw domain_error("exponent out of range in '" + text + "'");
        return e;
    };

    Poly acc(F);
    bool first = true;
    while (toks[pos].kind != PTok::End) {
        felem sign = 1;
        if (toks[pos].kind == PTok::Plus || toks[pos].kind == PTok::Minus) {
            if (toks[pos].kind == PTok::Minus) sign = F->neg(1);
            ++pos;
        } else if (!first) {
            throw domain_error("expected '+' or '-' in '" + text + "'");
        }
        first = false;

        felem coef = sign;
        long long texp = 0;
        bool any = false;
        while (true) {
            if (toks[pos].kind == PTok::Int) {
                const felem v = F->from_int(toks[pos].ival);
                ++pos;
                coef = F->mul(coef, F->pow(v, parse_exp()));
                any = true;
            } else if (toks[pos].kind == PTok::Coef) {
                const felem v = toks[pos].coef;
                ++pos;
                coef = F->mul(coef, F->pow(v, parse_exp()));
                any = true;
            } else if (toks[pos].kind == PTok::VarT) {
                ++pos;
                texp += parse_exp();
                if (texp > 100'000) throw domain_error("degree out of range in '" + text + "'");
                any = true;
            } else {
                break;
            }
            if (toks[pos].kind == PTok::Star) { ++pos; continue; }
            if (toks[pos].kind == PTok::Int || toks[pos].kind == PTok::Coef || toks[pos].kind == PTok::VarT) continue;
            break;
        }
        if (!any) throw domain_error("empty term in '" + text + "'");
        if (coef != 0) {
            std::vector<felem> mono(texp + 1, 0);
            mono[texp] = coef;
            acc = acc + Poly::from_coeffs(F, std::move(mono));
        }
    }
    return acc;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
        const felem c = c_[i];
        if (c == 0) continue;
        if (!first) os << '+';
        first = false;
        const bool simple = F_->is_simple_coeff(c);
        if (i == 0) {
            if (simple) os << F_->to_string(c);
            else os << '(' << F_->to_string(c) << ')';
            continue;
        }
        if (c != 1) {
            if (simple) os << F_->to_string(c);
            else os << '(' << F_->to_string(c) << ')';
            os << '*';
        }
        os << 't';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

}  // namespace fqgamma
