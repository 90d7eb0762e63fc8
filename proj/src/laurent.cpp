#include "fqgamma/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace fqgamma {

namespace {

void check_compat(const LaurentSeries& a, const LaurentSeries& b) {
    if (!a.field() || !b.field()) throw domain_error("series is missing its field context");
    if (!a.field()->same(*b.field()))
        throw domain_error("mixed field contexts: " + a.field()->key() + " vs " + b.field()->key());
    if (a.var() != b.var())
        throw domain_error("mixed series variables: " + var_name(a.var()) + " vs " + var_name(b.var()));
}

constexpr long kMaxWindow = 1'000'000;  // guard on stored coefficient span

}  // namespace

std::string var_name(SeriesVar v) {
    return v == SeriesVar::theta_inv ? "1/theta" : "1/eta";
}

void LaurentSeries::normalize() {
    // Drop anything at or above the cutoff.
    if (!c_.empty() && min_exp_ + static_cast<long>(c_.size()) > prec_) {
        const long keep = prec_ - min_exp_;
        if (keep <= 0) c_.clear();
        else c_.resize(keep);
    }
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        return;
    }
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + lead);
        min_exp_ += static_cast<long>(lead);
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

LaurentSeries LaurentSeries::zero(FqPtr F, SeriesVar v, long prec) {
    LaurentSeries s;
    s.F_ = std::move(F);
    s.var_ = v;
    s.prec_ = prec;
    return s;
}

LaurentSeries LaurentSeries::one(const FqPtr& F, SeriesVar v, long prec) {
    return monomial(F, v, 1, 0, prec);
}

LaurentSeries LaurentSeries::monomial(const FqPtr& F, SeriesVar v, felem c, long exp, long prec) {
    LaurentSeries s = zero(F, v, prec);
    if (c != 0 && exp < prec) {
        s.min_exp_ = exp;
        s.c_ = {c};
    }
    return s;
}

LaurentSeries LaurentSeries::from_poly(const Poly& P, SeriesVar v, long prec) {
    LaurentSeries s = zero(P.field(), v, prec);
    if (P.is_zero()) return s;
    s.min_exp_ = -P.deg();
    s.c_.assign(P.coeffs().rbegin(), P.coeffs().rend());
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::from_terms(FqPtr F, SeriesVar v,
                                        const std::vector<std::pair<long, felem>>& terms, long prec) {
    LaurentSeries s = zero(std::move(F), v, prec);
    if (terms.empty()) return s;
    long lo = terms[0].first, hi = terms[0].first;
    for (const auto& [e, c] : terms) {
        (void)c;
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    if (hi - lo + 1 > kMaxWindow) throw guard_error("series window exceeds the configured guard");
    s.min_exp_ = lo;
    s.c_.assign(hi - lo + 1, 0);
    for (const auto& [e, c] : terms) s.c_[e - lo] = s.F_->add(s.c_[e - lo], c);
    s.normalize();
    return s;
}

long LaurentSeries::valuation() const {
    if (c_.empty())
        throw domain_error("series is zero to precision O(w^" + std::to_string(prec_) +
                           "); its valuation is undetermined");
    return min_exp_;
}

felem LaurentSeries::leading_coeff() const {
    valuation();  // throws on zero-to-prec
    return c_.front();
}

felem LaurentSeries::coeff_at(long e) const {
    if (e >= prec_)
        throw precision_error("coefficient at exponent " + std::to_string(e) +
                              " is beyond the precision cutoff " + std::to_string(prec_));
    if (c_.empty() || e < min_exp_ || e >= min_exp_ + static_cast<long>(c_.size())) return 0;
    return c_[e - min_exp_];
}

std::vector<std::pair<long, felem>> LaurentSeries::terms() const {
    std::vector<std::pair<long, felem>> out;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) out.emplace_back(min_exp_ + static_cast<long>(i), c_[i]);
    return out;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    check_compat(*this, o);
    LaurentSeries s = zero(F_, var_, std::min(prec_, o.prec_));
    if (c_.empty() && o.c_.empty()) return s;
    long lo = 0, data_hi = 0;
    if (c_.empty()) {
        lo = o.min_exp_;
        data_hi = o.min_exp_ + static_cast<long>(o.c_.size());
    } else if (o.c_.empty()) {
        lo = min_exp_;
        data_hi = min_exp_ + static_cast<long>(c_.size());
    } else {
        lo = std::min(min_exp_, o.min_exp_);
        data_hi = std::max(min_exp_ + static_cast<long>(c_.size()),
                           o.min_exp_ + static_cast<long>(o.c_.size()));
    }
    const long hi = std::min(s.prec_, data_hi);  // exclusive
    if (lo >= hi) return s;
    if (hi - lo > kMaxWindow) throw guard_error("series window exceeds the configured guard");
    s.min_exp_ = lo;
    s.c_.assign(hi - lo, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const long e = min_exp_ + static_cast<long>(i);
        if (e >= hi) break;
        s.c_[e - lo] = c_[i];
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        const long e = o.min_exp_ + static_cast<long>(i);
        if (e >= hi) break;
        s.c_[e - lo] = F_->add(s.c_[e - lo], o.c_[i]);
    }
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries s = *this;
    for (auto& c : s.c_) c = F_->neg(c);
    return s;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    check_compat(*this, o);
    const long va = c_.empty() ? prec_ : min_exp_;
    const long vb = o.c_.empty() ? o.prec_ : o.min_exp_;
    const long prec = std::min(prec_ + vb, o.prec_ + va);
    LaurentSeries s = zero(F_, var_, prec);
    if (c_.empty() || o.c_.empty()) return s;
    const long lo = va + vb;
    const long data_hi = (min_exp_ + static_cast<long>(c_.size())) +
                         (o.min_exp_ + static_cast<long>(o.c_.size())) - 1;
    const long hi = std::min(prec, data_hi);  // exclusive
    if (lo >= hi) return s;
    if (hi - lo > kMaxWindow) throw guard_error("series window exceeds the configured guard");
    s.min_exp_ = lo;
    s.c_.assign(hi - lo, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const long ea = min_exp_ + static_cast<long>(i);
        if (ea + o.min_exp_ >= hi) break;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            const long e = ea + o.min_exp_ + static_cast<long>(j);
            if (e >= hi) break;
            s.c_[e - lo] = F_->add(s.c_[e - lo], F_->mul(c_[i], o.c_[j]));
        }
    }
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::scaled(felem c) const {
    LaurentSeries s = *this;
    if (c == 0) {
        s.c_.clear();
        return s;
    }
    for (auto& x : s.c_) x = F_->mul(x, c);
    return s;
}

LaurentSeries LaurentSeries::shifted(long k) const {
    LaurentSeries s = *this;
    s.min_exp_ += k;
    s.prec_ += k;
    return s;
}

LaurentSeries LaurentSeries::invert() const {
    if (c_.empty())
        throw domain_error("cannot invert a series that is zero to precision O(w^" +
                           std::to_string(prec_) + ")");
    const long v = min_exp_;
    const long rel = prec_ - v;  // known coefficients of the unit part
    // Unit part u = c_0 (1 + x), invert by the standard recurrence.
    std::vector<felem> u(rel, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) u[i] = c_[i];
    std::vector<felem> r(rel, 0);
    const felem lead_inv = F_->inv(u[0]);
    r[0] = lead_inv;
    for (long n = 1; n < rel; ++n) {
        felem acc = 0;
        for (long k = 1; k <= n; ++k)
            if (u[k] != 0 && r[n - k] != 0) acc = F_->add(acc, F_->mul(u[k], r[n - k]));
        r[n] = F_->neg(F_->mul(acc, lead_inv));
    }
    LaurentSeries s = zero(F_, var_, rel - v);
    s.min_exp_ = -v;
    s.c_ = std::move(r);
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::pow_int(long e) const {
    if (e == 0) {
        // Unit result carrying the operand's relative precision.
        const long rel = c_.empty() ? 0 : prec_ - min_exp_;
        return one(F_, var_, rel);
    }
    LaurentSeries base = e < 0 ? invert() : *this;
    unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    LaurentSeries acc = base;
    --n;
    LaurentSeries sq = base;
    while (n) {
        if (n & 1) acc = acc * sq;
        if (n >>= 1) sq = sq * sq;
    }
    return acc;
}

LaurentSeries LaurentSeries::frobenius(unsigned k) const {
    long stride = 1;
    for (unsigned i = 0; i < k; ++i) stride *= F_->q();
    LaurentSeries s = zero(F_, var_, prec_ * stride);
    if (c_.empty()) return s;
    if ((static_cast<long>(c_.size() - 1)) * stride + 1 > kMaxWindow)
        throw guard_error("series window exceeds the configured guard");
    s.min_exp_ = min_exp_ * stride;
    s.c_.assign((c_.size() - 1) * stride + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) s.c_[i * stride] = c_[i];  // F_q is Frobenius-fixed
    return s;
}

LaurentSeries LaurentSeries::truncated(long new_prec) const {
    if (new_prec > prec_)
        throw precision_error("cannot raise precision from " + std::to_string(prec_) + " to " +
                              std::to_string(new_prec) + " by truncation");
    LaurentSeries s = *this;
    s.prec_ = new_prec;
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::embed_eta() const {
    if (var_ != SeriesVar::theta_inv) throw domain_error("embed_eta expects a series in 1/theta");
    const long m = F_->q() - 1;
    LaurentSeries s = zero(F_, SeriesVar::eta_inv, prec_ * m);
    if (c_.empty()) return s;
    if ((static_cast<long>(c_.size() - 1)) * m + 1 > kMaxWindow)
        throw guard_error("series window exceeds the configured guard");
    s.min_exp_ = min_exp_ * m;
    s.c_.assign((c_.size() - 1) * m + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const long j = min_exp_ + static_cast<long>(i);
        s.c_[i * m] = (j % 2 == 0) ? c_[i] : F_->neg(c_[i]);
    }
    s.normalize();
    return s;
}

std::string LaurentSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms()) {
        if (!first) os << '+';
        first = false;
        const std::string cs = F_->to_string(c);
        const bool simple = F_->is_simple_coeff(c);
        if (e == 0) {
            os << (simple ? cs : "(" + cs + ")");
            continue;
        }
        if (c != 1) os << (simple ? cs : "(" + cs + ")") << '*';
        os << 'w';
        if (e != 1) os << '^' << e;
    }
    if (!first) os << '+';
    os << "O(w^" << prec_ << ')';
    return os.str();
}

bool eq_to_prec(const LaurentSeries& a, const LaurentSeries& b, long n) {
    check_compat(a, b);
    if (a.prec() < n || b.prec() < n)
        throw precision_error("comparison to O(w^" + std::to_string(n) +
                              ") exceeds the operands' precision (" + std::to_string(a.prec()) +
                              ", " + std::to_string(b.prec()) + ")");
    const LaurentSeries d = a.truncated(n) - b.truncated(n);
    return d.is_zero_to_prec();
}

}  // namespace fqgamma
